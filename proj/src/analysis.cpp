#include "ck/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ck {

std::string Signature::str() const {
    std::ostringstream os;
    os << "(" << plus << "," << minus << "," << zero << ")";
    return os.str();
}

KillingMatrix killing_form(const StructureConstants& c) {
    const std::size_t n = c.dim();
    KillingMatrix b(n);
    // B_ij = sum_{k,l} c_ik^l c_jl^k, taken over the sparse bracket rows.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> br(n);
    for (std::size_t i = 0; i < n; ++i) {
        br[i].resize(n);
        for (std::size_t k = 0; k < n; ++k) br[i][k] = c.bracket(i, k);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational sum;
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [l, v] : br[i][k]) {
                    for (const auto& [kk, u] : br[j][l]) {
                        if (kk == k) { sum += v * u; break; }
                    }
                }
            }
            b.set(i, j, sum);
        }
    }
    return b;
}

Signature signature(const KillingMatrix& bm) {
    const std::size_t n = bm.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = bm.at(i, j);

    std::vector<std::size_t> rem(n);
    std::iota(rem.begin(), rem.end(), 0);
    Signature sig;

    while (!rem.empty()) {
        std::size_t pivot = n;
        for (std::size_t r : rem)
            if (!a[r][r].is_zero()) { pivot = r; break; }

        if (pivot == n) {
            // All remaining diagonal entries vanish; look for a hyperbolic pair.
            std::size_t pr = n, ps = n;
            for (std::size_t x = 0; x < rem.size() && pr == n; ++x)
                for (std::size_t y = x + 1; y < rem.size(); ++y)
                    if (!a[rem[x]][rem[y]].is_zero()) { pr = rem[x]; ps = rem[y]; break; }
            if (pr == n) {
                sig.zero += rem.size();
                break;
            }
            // e_pr += e_ps turns the off-diagonal entry into a usable pivot;
            // the pair then diagonalizes to one positive and one negative.
            for (std::size_t t = 0; t < n; ++t) a[pr][t] += a[ps][t];
            for (std::size_t t = 0; t < n; ++t) a[t][pr] += a[t][ps];
            continue;
        }

        const Rational d = a[pivot][pivot];
        if (d.is_positive()) ++sig.plus; else ++sig.minus;
        for (std::size_t s : rem) {
            if (s == pivot) continue;
            if (a[s][pivot].is_zero()) continue;
            const Rational f = a[s][pivot] / d;
            for (std::size_t t = 0; t < n; ++t) a[s][t] -= f * a[pivot][t];
            for (std::size_t t = 0; t < n; ++t) a[t][s] -= f * a[t][pivot];
        }
        rem.erase(std::find(rem.begin(), rem.end(), pivot));
    }
    return sig;
}

long dimension_formula(int p, int q, int N) {
    auto valid = [](int x) { return x == 1 || x == 2 || x == 4; };
    if (!valid(p) || !valid(q)) throw std::invalid_argument("dimension_formula: p, q must be 1, 2 or 4");
    if (N < 1) throw std::invalid_argument("dimension_formula: N must be >= 1");
    long dim = static_cast<long>(p) * q * N * (N + 1) / 2 + static_cast<long>(p + q - 2) * N;
    if (p == 4) dim += 3;
    if (q == 4) dim += 3;
    return dim;
}

bool is_semisimple(const KillingMatrix& b) { return signature(b).zero == 0; }

long character(const Signature& s) {
    return static_cast<long>(s.plus) - static_cast<long>(s.minus);
}

namespace {

std::string sub(long v) { return std::to_string(v); }

std::string pq_name(const char* fam, int p, int q) {
    if (q == 0) return std::string(fam) + "(" + sub(p) + ")";
    return std::string(fam) + "(" + sub(p) + "," + sub(q) + ")";
}

} // namespace

Identification identify(Series s, Field f, int N, const OmegaVector& w) {
    Identification id;
    const int n = N + 1;

    if (w.has_zero()) {
        const int order = (s == Series::sy) ? 2 * n : n;
        id.standard_name = std::string("contracted: ") + series_name(s) + "_{" +
                           w.sign_pattern() + "}(" + sub(order) + "," + field_symbol(f) + ")";
        id.cartan_label = "non-simple";
        return id;
    }

    switch (s) {
        case Series::sa: {
            int p = 0, q = 0;
            for (int k = 0; k <= N; ++k)
                (w.omega(0, k).is_positive() ? p : q)++;
            const char* fam = f == Field::R ? "so" : (f == Field::C ? "su" : "sp");
            id.standard_name = pq_name(fam, p, q);
            if (f == Field::R)
                id.cartan_label = (N % 2 == 0) ? "B_" + sub(N / 2) : "D_" + sub((N + 1) / 2);
            else if (f == Field::C)
                id.cartan_label = "A_" + sub(N);
            else
                id.cartan_label = "C_" + sub(n);
            break;
        }
        case Series::sl:
            if (f == Field::R) {
                id.standard_name = "sl(" + sub(n) + ",ℝ)";
                id.cartan_label = "A_" + sub(N);
            } else if (f == Field::C) {
                id.standard_name = "sl(" + sub(n) + ",ℂ)";
                id.cartan_label = "A_" + sub(N) + "⊕A_" + sub(N);
            } else {
                id.standard_name = "su*(" + sub(2 * n) + ")";
                id.cartan_label = "A_" + sub(2 * N + 1);
            }
            break;
        case Series::sy:
            if (f == Field::R) {
                id.standard_name = "sp(" + sub(2 * n) + ",ℝ)";
                id.cartan_label = "C_" + sub(n);
            } else if (f == Field::C) {
                id.standard_name = "su(" + sub(n) + "," + sub(n) + ")";
                id.cartan_label = "A_" + sub(2 * N + 1);
            } else {
                id.standard_name = "so*(" + sub(4 * n) + ")";
                id.cartan_label = "D_" + sub(2 * n);
            }
            break;
    }
    return id;
}

AlgebraDescriptor build_descriptor(Series s, Field f, int N, const OmegaVector& w) {
    AlgebraDescriptor d;
    d.series = s;
    d.field = f;
    d.N = N;
    d.omega = w;

    auto printed = basis(s, f, N, w);
    LieBasis site = make_site_basis(printed);
    LieBasis closed = lie_closure_labeled(printed);
    if (closed.dim() != site.dim())
        throw NotClosedError(std::string("basis span of ") + series_name(s) + "/" +
                             field_name(f) + " is not closed under the bracket");

    StructureConstants sc = structure_constants(site);
    KillingMatrix b = killing_form(sc);
    d.dim = static_cast<long>(site.dim());
    d.sig = signature(b);
    d.chi = character(d.sig);
    Identification id = identify(s, f, N, w);
    d.standard_name = id.standard_name;
    d.cartan_label = id.cartan_label;
    return d;
}

namespace {

bool parse_int_list(const std::string& args, std::vector<long>& out) {
    std::istringstream is(args);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(part, &used);
            if (used != part.size()) return false;
            out.push_back(v);
        } catch (...) {
            return false;
        }
    }
    return !out.empty();
}

} // namespace

long classical_dimension(const std::string& name) {
    auto open = name.find('(');
    auto close = name.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) return -1;
    std::string fam = name.substr(0, open);
    std::string args = name.substr(open + 1, close - open - 1);

    bool complex_field = args.find("ℂ") != std::string::npos;
    // Strip a trailing field symbol argument if present.
    auto comma = args.rfind(',');
    if (comma != std::string::npos) {
        std::string last = args.substr(comma + 1);
        if (!last.empty() && (last[0] < '0' || last[0] > '9')) args = args.substr(0, comma);
    }
    std::vector<long> v;
    if (!parse_int_list(args, v)) return -1;
    long m = std::accumulate(v.begin(), v.end(), 0L);

    if (fam == "so") return m * (m - 1) / 2;
    if (fam == "su") return m * m - 1;
    if (fam == "sp") {
        // sp(n) / sp(p,q) compact-style family; sp(2n,R) is the real symplectic one.
        if (v.size() == 1 && m % 2 == 0 && name.find(",") != std::string::npos)
            return (m / 2) * (m + 1);
        return m * (2 * m + 1);
    }
    if (fam == "sl") return complex_field ? 2 * (m * m - 1) : m * m - 1;
    if (fam == "su*") return m * m - 1;
    if (fam == "so*") return (m / 2) * (m - 1);
    return -1;
}

long cartan_dimension(const std::string& label) {
    long total = 0;
    std::size_t pos = 0;
    while (pos < label.size()) {
        auto next = label.find("⊕", pos);
        std::string part = label.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.size() < 3 || part[1] != '_') return -1;
        long k = -1;
        try {
            k = std::stol(part.substr(2));
        } catch (...) {
            return -1;
        }
        long d = -1;
        switch (part[0]) {
            case 'A': d = k * (k + 2); break;
            case 'B': d = k * (2 * k + 1); break;
            case 'C': d = k * (2 * k + 1); break;
            case 'D': d = k * (2 * k - 1); break;
            case 'G': d = (k == 2) ? 14 : -1; break;
            case 'F': d = (k == 4) ? 52 : -1; break;
            case 'E': d = (k == 6) ? 78 : (k == 7 ? 133 : (k == 8 ? 248 : -1)); break;
            default: return -1;
        }
        if (d < 0) return -1;
        total += d;
        if (next == std::string::npos) break;
        pos = next + std::string("⊕").size();
    }
    return total;
}

} // namespace ck

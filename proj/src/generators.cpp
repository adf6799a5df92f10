#include "ck/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

namespace {

// Seed real pattern of order N+1, before unit and doubling are applied.
CKMatrix seed_matrix(const GeneratorLabel& l, int N, const OmegaVector& w, Field tag) {
    const int n = N + 1;
    CKMatrix m(n, tag);
    const KElement one = KElement::one(tag);
    switch (l.kind) {
        case Kind::J:
            if (!(0 <= l.a && l.a < l.b && l.b <= N))
                throw std::invalid_argument("J indices out of range");
            m.set(l.a, l.b, KElement(tag, -w.omega(l.a, l.b)));
            m.set(l.b, l.a, one);
            break;
        case Kind::M:
            if (!(0 <= l.a && l.a < l.b && l.b <= N))
                throw std::invalid_argument("M indices out of range");
            m.set(l.a, l.b, KElement(tag, w.omega(l.a, l.b)));
            m.set(l.b, l.a, one);
            break;
        case Kind::H:
            if (!(1 <= l.a && l.a <= N)) throw std::invalid_argument("H index out of range");
            m.set(0, 0, -one);
            m.set(l.a, l.a, one);
            break;
        case Kind::E:
            m.set(0, 0, one);
            break;
    }
    return m;
}

} // namespace

CKMatrix double_matrix(const CKMatrix& x, Doubling d) {
    const int n = x.order();
    CKMatrix m(2 * n, x.tag());
    auto put = [&](int bi, int bj, bool negate) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const KElement& v = x.at(i, j);
                if (v.is_zero()) continue;
                m.set(bi * n + i, bj * n + j, negate ? -v : v);
            }
    };
    switch (d) {
        case Doubling::None: throw std::invalid_argument("double_matrix: no doubling tag");
        case Doubling::Diag: put(0, 0, false); put(1, 1, false); break;
        case Doubling::L1:   put(0, 1, false); put(1, 0, true);  break;
        case Doubling::L2:   put(0, 1, false); put(1, 0, false); break;
        case Doubling::L3:   put(0, 0, false); put(1, 1, true);  break;
    }
    return m;
}

CKMatrix build_generator(const GeneratorLabel& l, int N, const OmegaVector& w, Field tag) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (w.n() != N) throw std::invalid_argument("omega length must equal N");
    if (l.unit >= field_dim(tag))
        throw std::invalid_argument("unit " + std::to_string(l.unit) + " not available over " +
                                    field_name(tag));
    CKMatrix m = seed_matrix(l, N, w, tag);
    if (l.unit != 0) m = KElement::unit(tag, l.unit) * m;
    if (l.doubling != Doubling::None) m = double_matrix(m, l.doubling);
    return m;
}

CKMatrix metric(int N, const OmegaVector& w, Field tag) {
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) d.push_back(w.omega(0, k));
    return CKMatrix::diag(tag, d);
}

CKMatrix metric_symplectic(int N, const OmegaVector& w, Field tag) {
    return double_matrix(metric(N, w, tag), Doubling::L1);
}

bool is_antihermitian(const CKMatrix& a, const CKMatrix& g) {
    return (mat_mul(conj_transpose(a), g) + mat_mul(g, a)).is_zero();
}

bool is_hermitian(const CKMatrix& a, const CKMatrix& g) {
    return (mat_mul(conj_transpose(a), g) - mat_mul(g, a)).is_zero();
}

namespace {

using LabelList = std::vector<GeneratorLabel>;

void for_pairs(int N, const std::function<void(int, int)>& f) {
    for (int a = 0; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) f(a, b);
}

GeneratorLabel L(Kind k, int a, int b, int unit, Doubling d) {
    GeneratorLabel l;
    l.kind = k;
    l.a = a;
    l.b = b;
    l.unit = unit;
    l.doubling = d;
    return l;
}

// The per-site label sets, straight from the printed tables.
LabelList basis_labels(Series s, Field f, int N) {
    LabelList out;
    auto add_pairs = [&](Kind k, int unit, Doubling d) {
        for_pairs(N, [&](int a, int b) { out.push_back(L(k, a, b, unit, d)); });
    };
    auto add_h = [&](int unit, Doubling d) {
        for (int m = 1; m <= N; ++m) out.push_back(L(Kind::H, m, 0, unit, d));
    };
    auto add_e = [&](int unit, Doubling d) { out.push_back(L(Kind::E, 0, 0, unit, d)); };
    const int units = field_dim(f) - 1; // 0, 1 or 3 unit multipliers

    switch (s) {
        case Series::sa:
            add_pairs(Kind::J, 0, Doubling::None);
            for (int u = 1; u <= units; ++u) add_pairs(Kind::M, u, Doubling::None);
            for (int u = 1; u <= units; ++u) add_h(u, Doubling::None);
            if (f == Field::Q)
                for (int u = 1; u <= units; ++u) add_e(u, Doubling::None);
            break;
        case Series::sl:
            add_pairs(Kind::J, 0, Doubling::None);
            add_pairs(Kind::M, 0, Doubling::None);
            add_h(0, Doubling::None);
            for (int u = 1; u <= units; ++u) {
                add_pairs(Kind::J, u, Doubling::None);
                add_pairs(Kind::M, u, Doubling::None);
                add_h(u, Doubling::None);
            }
            if (f == Field::Q)
                for (int u = 1; u <= units; ++u) add_e(u, Doubling::None);
            break;
        case Series::sy:
            add_pairs(Kind::J, 0, Doubling::Diag);
            for (auto lam : {Doubling::L1, Doubling::L2, Doubling::L3}) {
                add_pairs(Kind::M, 0, lam);
                add_h(0, lam);
                add_e(0, lam);
            }
            for (int u = 1; u <= units; ++u) {
                for (auto lam : {Doubling::L1, Doubling::L2, Doubling::L3})
                    add_pairs(Kind::J, u, lam);
                add_pairs(Kind::M, u, Doubling::Diag);
                add_h(u, Doubling::Diag);
                if (f == Field::Q) add_e(u, Doubling::Diag);
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelList min_generator_labels(Series s, Field f, int N) {
    LabelList out;
    const int units = field_dim(f) - 1;
    switch (s) {
        case Series::sa:
        case Series::sl:
            for_pairs(N, [&](int a, int b) {
                if (s == Series::sl) out.push_back(L(Kind::M, a, b, 0, Doubling::None));
                out.push_back(L(Kind::J, a, b, 0, Doubling::None));
                for (int u = 1; u <= std::min(units, 2); ++u)
                    out.push_back(L(Kind::M, a, b, u, Doubling::None));
            });
            break;
        case Series::sy:
            for_pairs(N, [&](int a, int b) {
                out.push_back(L(Kind::J, a, b, 0, Doubling::Diag));
                out.push_back(L(Kind::M, a, b, 0, Doubling::L2));
                out.push_back(L(Kind::M, a, b, 0, Doubling::L1));
                for (int u = 1; u <= std::min(units, 2); ++u)
                    out.push_back(L(Kind::M, a, b, u, Doubling::Diag));
            });
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LabeledMatrix> build_all(const LabelList& labels, int N, const OmegaVector& w,
                                     Field f) {
    std::vector<LabeledMatrix> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back({l, build_generator(l, N, w, f)});
    return out;
}

} // namespace

std::vector<LabeledMatrix> basis(Series s, Field f, int N, const OmegaVector& w) {
    return build_all(basis_labels(s, f, N), N, w, f);
}

std::vector<LabeledMatrix> min_generators(Series s, Field f, int N, const OmegaVector& w) {
    return build_all(min_generator_labels(s, f, N), N, w, f);
}

MembershipCondition membership_conditions(Series s, Field f, int N, const OmegaVector& w) {
    MembershipCondition c;
    if (s == Series::sl) {
        if (f == Field::Q) {
            c.description = "Re tr X = 0";
            c.test = [](const CKMatrix& a) { return re_trace(a).is_zero(); };
        } else {
            c.description = "tr X = 0";
            c.test = [f](const CKMatrix& a) { return trace(a) == KElement::zero(f); };
        }
        return c;
    }
    CKMatrix g = (s == Series::sa) ? metric(N, w, f) : metric_symplectic(N, w, f);
    bool traceless = (f == Field::C);
    c.description = std::string(s == Series::sa ? "I_w" : "doubled I_w") + "-antihermitian" +
                    (traceless ? " and tr X = 0" : "");
    c.test = [g, traceless, f](const CKMatrix& a) {
        if (!is_antihermitian(a, g)) return false;
        if (traceless && !(trace(a) == KElement::zero(f))) return false;
        return true;
    };
    return c;
}

} // namespace ck

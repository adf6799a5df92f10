#include "ck/span.hpp"

namespace ck {

void RationalSpan::reduce(std::vector<Rational>& v, std::vector<Rational>* used) const {
    if (used) used->assign(rows_.size(), Rational());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational coeff = v[pivots_[r]]; // copy: the loop below zeroes it
        if (coeff.is_zero()) continue;
        if (used) (*used)[r] = coeff;
        const auto& row = rows_[r];
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (row[c].is_zero()) continue;
            v[c] -= coeff * row[c];
        }
    }
}

bool RationalSpan::insert(const std::vector<Rational>& v) {
    if (v.size() != ambient_) throw std::invalid_argument("span: ambient dimension mismatch");
    std::vector<Rational> w = v;
    std::vector<Rational> used;
    reduce(w, &used);

    std::size_t pivot = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (!w[c].is_zero()) { pivot = c; break; }
    }
    if (pivot == ambient_) return false;

    // Combination over accepted inputs: e_new minus what the reduction used.
    std::size_t accepted = rows_.size();
    std::vector<Rational> combo(accepted + 1, Rational());
    combo[accepted] = Rational(1);
    for (std::size_t r = 0; r < accepted; ++r) {
        if (used[r].is_zero()) continue;
        for (std::size_t m = 0; m < combos_[r].size(); ++m)
            combo[m] -= used[r] * combos_[r][m];
    }

    // Normalize pivot to 1.
    Rational lead = w[pivot];
    for (auto& x : w)
        if (!x.is_zero()) x /= lead;
    for (auto& x : combo)
        if (!x.is_zero()) x /= lead;

    // Clear the new pivot column in existing rows to keep the form reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][pivot];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!w[c].is_zero()) rows_[r][c] -= f * w[c];
        combos_[r].resize(accepted + 1, Rational());
        for (std::size_t m = 0; m <= accepted; ++m)
            if (!combo[m].is_zero()) combos_[r][m] -= f * combo[m];
    }
    for (auto& cb : combos_) cb.resize(accepted + 1, Rational());

    // Keep rows ordered by pivot column.
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(at), std::move(combo));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
}

bool RationalSpan::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("span: ambient dimension mismatch");
    std::vector<Rational> w = v;
    reduce(w, nullptr);
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<Rational>> RationalSpan::coords_in_inserted(
    const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("span: ambient dimension mismatch");
    std::vector<Rational> w = v;
    std::vector<Rational> used;
    reduce(w, &used);
    for (const auto& x : w)
        if (!x.is_zero()) return std::nullopt;
    std::vector<Rational> coords(rows_.size(), Rational());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (used[r].is_zero()) continue;
        for (std::size_t m = 0; m < combos_[r].size(); ++m)
            if (!combos_[r][m].is_zero()) coords[m] += used[r] * combos_[r][m];
    }
    return coords;
}

namespace {

LieBasis closure_impl(const std::vector<CKMatrix>& gens, const std::vector<std::string>& labels,
                      long max_dim, bool require_independent) {
    LieBasis out;
    if (gens.empty()) return out;

    const std::size_t ambient = flatten(gens.front()).size();
    out.span = RationalSpan(ambient);
    long bound = max_dim >= 0 ? max_dim : static_cast<long>(ambient);

    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].order() != gens.front().order() || gens[g].tag() != gens.front().tag())
            throw std::invalid_argument("lie_closure: generators must share order and field");
        if (out.span.insert(flatten(gens[g]))) {
            out.matrices.push_back(gens[g]);
            out.labels.push_back(g < labels.size() ? labels[g] : "#" + std::to_string(g));
        } else if (require_independent) {
            throw DependentBasisError(
                "basis element " + (g < labels.size() ? labels[g] : std::to_string(g)) +
                " is linearly dependent on the preceding ones");
        }
        if (static_cast<long>(out.matrices.size()) > bound)
            throw ClosureBoundError("lie_closure: dimension bound exceeded");
    }

    // Expanding lower-triangular sweep: every pair is bracketed exactly once.
    for (std::size_t t = 1; t < out.matrices.size(); ++t) {
        for (std::size_t s = 0; s < t; ++s) {
            CKMatrix br = commutator(out.matrices[t], out.matrices[s]);
            if (br.is_zero()) continue;
            if (out.span.insert(flatten(br))) {
                out.labels.push_back("#" + std::to_string(out.matrices.size()));
                out.matrices.push_back(std::move(br));
                if (static_cast<long>(out.matrices.size()) > bound)
                    throw ClosureBoundError("lie_closure: dimension bound exceeded");
            }
        }
    }
    return out;
}

} // namespace

LieBasis lie_closure(const std::vector<CKMatrix>& gens, long max_dim) {
    return closure_impl(gens, {}, max_dim, false);
}

LieBasis lie_closure_labeled(const std::vector<LabeledMatrix>& gens, long max_dim) {
    std::vector<CKMatrix> ms;
    std::vector<std::string> ls;
    ms.reserve(gens.size());
    for (const auto& g : gens) {
        ms.push_back(g.matrix);
        ls.push_back(g.label.str());
    }
    return closure_impl(ms, ls, max_dim, false);
}

LieBasis make_site_basis(const std::vector<LabeledMatrix>& printed) {
    std::vector<CKMatrix> ms;
    std::vector<std::string> ls;
    ms.reserve(printed.size());
    for (const auto& g : printed) {
        ms.push_back(g.matrix);
        ls.push_back(g.label.str());
    }
    LieBasis out;
    if (ms.empty()) return out;
    const std::size_t ambient = flatten(ms.front()).size();
    out.span = RationalSpan(ambient);
    for (std::size_t g = 0; g < ms.size(); ++g) {
        if (!out.span.insert(flatten(ms[g])))
            throw DependentBasisError("basis element " + ls[g] +
                                      " is linearly dependent on the preceding ones");
        out.matrices.push_back(std::move(ms[g]));
        out.labels.push_back(std::move(ls[g]));
    }
    return out;
}

Rational StructureConstants::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return Rational();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return Rational();
    for (const auto& [kk, v] : it->second)
        if (kk == k) return flip ? -v : v;
    return Rational();
}

std::vector<std::pair<std::size_t, Rational>> StructureConstants::bracket(std::size_t i,
                                                                          std::size_t j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return {};
    auto terms = it->second;
    if (flip)
        for (auto& [k, v] : terms) v = -v;
    return terms;
}

void StructureConstants::set(std::size_t i, std::size_t j,
                             std::vector<std::pair<std::size_t, Rational>> terms) {
    if (i >= j) throw std::invalid_argument("StructureConstants::set requires i < j");
    if (!terms.empty()) table_[{i, j}] = std::move(terms);
}

std::vector<StructureConstants::Record> StructureConstants::records() const {
    std::vector<Record> out;
    for (const auto& [ij, terms] : table_) {
        std::vector<std::pair<std::size_t, Rational>> sorted = terms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, v] : sorted)
            out.push_back({ij.first + 1, ij.second + 1, k + 1, v});
    }
    return out;
}

StructureConstants structure_constants(const LieBasis& b) {
    StructureConstants sc(b.dim());
    for (std::size_t j = 1; j < b.dim(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            CKMatrix br = commutator(b.matrices[i], b.matrices[j]);
            std::vector<std::pair<std::size_t, Rational>> terms;
            if (!br.is_zero()) {
                auto coords = b.span.coords_in_inserted(flatten(br));
                if (!coords)
                    throw NotClosedError("bracket [" + b.labels[i] + ", " + b.labels[j] +
                                         "] leaves the span");
                for (std::size_t k = 0; k < coords->size(); ++k)
                    if (!(*coords)[k].is_zero()) terms.push_back({k, (*coords)[k]});
            }
            sc.set(i, j, std::move(terms));
        }
    }
    return sc;
}

bool is_subspace(const LieBasis& a, const LieBasis& b) {
    if (a.matrices.empty()) return true;
    if (a.span.ambient() != b.span.ambient())
        throw std::invalid_argument("is_subspace: ambient mismatch");
    for (const auto& m : a.matrices)
        if (!b.span.contains(flatten(m))) return false;
    return true;
}

} // namespace ck

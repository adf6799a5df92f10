#pragma once

#include "ck/generators.hpp"
#include "ck/matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

struct ClosureBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational span in reduced row-echelon form (pivots 1, cleared above and
// below). Alongside each echelon row it keeps the combination of accepted
// input vectors that produced it, so members can be re-expressed over the
// inserted vectors exactly.
class RationalSpan {
public:
    explicit RationalSpan(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    // Inserts v; returns true when v enlarged the span.
    bool insert(const std::vector<Rational>& v);

    bool contains(const std::vector<Rational>& v) const;

    // Coordinates of v over the accepted (inserted-and-new) vectors, or
    // nullopt when v is outside the span.
    std::optional<std::vector<Rational>> coords_in_inserted(const std::vector<Rational>& v) const;

    // RREF rows are canonical, so span equality is row-list equality.
    friend bool operator==(const RationalSpan& a, const RationalSpan& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::vector<Rational>> combos_; // rows_[r] over accepted inputs
    std::vector<std::size_t> pivots_;           // pivot column per row

    // Reduces v in place, collecting the row coefficients used.
    void reduce(std::vector<Rational>& v, std::vector<Rational>* used) const;
};

// An ordered list of matrices together with the exact span of their
// flattenings; the carrier for (sub)algebras.
struct LieBasis {
    std::vector<CKMatrix> matrices;
    std::vector<std::string> labels; // parallel to matrices
    RationalSpan span{0};

    std::size_t dim() const { return matrices.size(); }
};

// Smallest Lie algebra containing gens: seeds the span with the generators
// (dependent inputs add nothing and are dropped from the basis), then brackets
// pairs FIFO until no insertion succeeds. Deterministic for a fixed input
// order; generators come first in the result, discoveries follow in order.
// Throws ClosureBoundError when the basis would exceed max_dim (default: the
// flatten ambient dimension).
LieBasis lie_closure(const std::vector<CKMatrix>& gens, long max_dim = -1);
LieBasis lie_closure_labeled(const std::vector<LabeledMatrix>& gens, long max_dim = -1);

// Like lie_closure_labeled but requires the inputs to be linearly
// independent; throws DependentBasisError naming the offending label.
LieBasis make_site_basis(const std::vector<LabeledMatrix>& printed);

// Exact structure constants over a closed basis: [X_i, X_j] = sum_k c_ij^k X_k.
// Stored sparsely for i < j; antisymmetry is implied.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(std::size_t n) : n_(n) {}

    std::size_t dim() const { return n_; }

    // c_ij^k with full antisymmetry handling (i, j, k are 0-based).
    Rational c(std::size_t i, std::size_t j, std::size_t k) const;
    // Sparse bracket row: [X_i, X_j] as (k, coefficient) pairs, any i, j.
    std::vector<std::pair<std::size_t, Rational>> bracket(std::size_t i, std::size_t j) const;

    void set(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, Rational>> terms);

    // Deterministic export records: 1-based {i, j, k, value}, i < j.
    struct Record {
        std::size_t i, j, k;
        Rational value;
    };
    std::vector<Record> records() const;

private:
    std::size_t n_ = 0;
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::pair<std::size_t, Rational>>>
        table_; // key i < j
};

// Expands every bracket of B in B itself; throws NotClosedError when a
// bracket leaves the span.
StructureConstants structure_constants(const LieBasis& b);

// True iff every matrix of a flattens into b's span.
bool is_subspace(const LieBasis& a, const LieBasis& b);

} // namespace ck

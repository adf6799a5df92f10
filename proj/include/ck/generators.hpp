#pragma once

#include "ck/labels.hpp"
#include "ck/matrix.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ck {

struct LabeledMatrix {
    GeneratorLabel label;
    CKMatrix matrix;
};

// Builds the matrix named by `label` for given N, omega and field:
//   J_ab : -w_ab at (a,b), +1 at (b,a)
//   M_ab : +w_ab at (a,b), +1 at (b,a)
//   H_m  : -1 at (0,0), +1 at (m,m)
//   E_0  : +1 at (0,0)
// A unit index left-multiplies by i/j/k; a doubling tag produces the
// order-2(N+1) block forms
//   hat X = [X 0; 0 X],  X;1 = [0 X; -X 0],  X;2 = [0 X; X 0],  X;3 = [X 0; 0 -X].
CKMatrix build_generator(const GeneratorLabel& label, int N, const OmegaVector& w, Field tag);

// Applies one of the four block doublings to an arbitrary square matrix.
CKMatrix double_matrix(const CKMatrix& x, Doubling d);

// Metric diag(1, w_01, ..., w_0N) of order N+1.
CKMatrix metric(int N, const OmegaVector& w, Field tag);
// The ;1 doubling of the metric: antisymmetric, order 2(N+1).
CKMatrix metric_symplectic(int N, const OmegaVector& w, Field tag);

// A dag G + G A == 0  /  A dag G - G A == 0.
bool is_antihermitian(const CKMatrix& a, const CKMatrix& g);
bool is_hermitian(const CKMatrix& a, const CKMatrix& g);

// The printed linear-basis list for one (series, field) site, in canonical
// label order. No deduplication: when some w_ab = 0 makes J_ab equal M_ab the
// list is returned as printed and downstream rank checks surface the clash.
std::vector<LabeledMatrix> basis(Series s, Field f, int N, const OmegaVector& w);

// The minimal Lie-generating sets per site, canonical label order.
std::vector<LabeledMatrix> min_generators(Series s, Field f, int N, const OmegaVector& w);

// Defining membership predicate of a site's realization:
//   sa: I_w-antihermitian (plus tr = 0 over C)
//   sl: tr = 0 over R, C; Re tr = 0 over H
//   sy: doubled-metric-antihermitian (plus tr = 0 over C)
struct MembershipCondition {
    std::string description;
    std::function<bool(const CKMatrix&)> test;
};
MembershipCondition membership_conditions(Series s, Field f, int N, const OmegaVector& w);

} // namespace ck

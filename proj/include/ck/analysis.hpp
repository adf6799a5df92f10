#pragma once

#include "ck/labels.hpp"
#include "ck/span.hpp"

#include <string>
#include <vector>

namespace ck {

// Symmetric n x n matrix of rationals, B_ij = tr(ad X_i ad X_j).
class KillingMatrix {
public:
    KillingMatrix() = default;
    explicit KillingMatrix(std::size_t n)
        : n_(n), e_(n * n, Rational()) {}

    std::size_t dim() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v) {
        e_[i * n_ + j] = v;
        e_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rational> e_;
};

struct Signature {
    std::size_t plus = 0, minus = 0, zero = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
    }
    std::string str() const;
};

KillingMatrix killing_form(const StructureConstants& c);

// Exact Sylvester signature by symmetric congruence elimination; zero-diagonal
// off-pivots are split as hyperbolic pairs contributing (1,1).
Signature signature(const KillingMatrix& b);

// pq N(N+1)/2 + (p+q-2)N + 3[p=4] + 3[q=4], p and q in {1,2,4}.
long dimension_formula(int p, int q, int N);

bool is_semisimple(const KillingMatrix& b);

// n_plus - n_minus.
long character(const Signature& s);

struct Identification {
    std::string standard_name; // e.g. "so(2,1)", "su*(4)", "contracted: sa_{+0}(3,R)"
    std::string cartan_label;  // e.g. "B_1", "A_3", "non-simple"
};

// Standard-name and Cartan-label translation for a site. With any w_i = 0 the
// algebra is a contraction and gets a descriptive name instead.
Identification identify(Series s, Field f, int N, const OmegaVector& w);

// One magic-square site, fully computed.
struct AlgebraDescriptor {
    Series series;
    Field field;
    int N = 1;
    OmegaVector omega;
    long dim = 0;
    Signature sig;
    long chi = 0;
    std::string standard_name;
    std::string cartan_label;
};

// Builds one descriptor: site basis, closure check, structure constants,
// Killing signature, identification. Throws DependentBasisError when the
// printed basis list is not linearly independent at this omega (happens in
// the sl row when some w_ab = 0 collapses J_ab onto M_ab).
AlgebraDescriptor build_descriptor(Series s, Field f, int N, const OmegaVector& w);

// Known real dimension of a classical-name string produced by identify(),
// for cross-checks; -1 for contracted names.
long classical_dimension(const std::string& standard_name);
// Real dimension of a Cartan label like "B_2", "A_2⊕A_2"; -1 if unknown.
long cartan_dimension(const std::string& label);

} // namespace ck

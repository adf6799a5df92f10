#pragma once

#include "ck/kelement.hpp"

#include <string>
#include <vector>

namespace ck {

// Dense square matrix over a KElement field. Every entry shares the tag.
class CKMatrix {
public:
    CKMatrix() : order_(0), tag_(Field::R) {}
    CKMatrix(int order, Field tag);

    static CKMatrix identity(int order, Field tag);
    static CKMatrix diag(Field tag, const std::vector<Rational>& entries);
    // Matrix unit E_{ij} scaled by s.
    static CKMatrix unit_entry(int order, Field tag, int i, int j, const KElement& s);

    int order() const { return order_; }
    Field tag() const { return tag_; }

    const KElement& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, KElement v);

    bool is_zero() const;

    CKMatrix operator-() const;
    friend CKMatrix operator+(const CKMatrix& a, const CKMatrix& b);
    friend CKMatrix operator-(const CKMatrix& a, const CKMatrix& b);
    CKMatrix& operator+=(const CKMatrix& b);

    // Left scalar multiplication, (s*A)_ij = s * A_ij. Over H the side matters;
    // left is the repo-wide convention (matches the unit maps X -> iX etc.).
    friend CKMatrix operator*(const KElement& s, const CKMatrix& a);
    friend CKMatrix operator*(const Rational& s, const CKMatrix& a);

    friend bool operator==(const CKMatrix& a, const CKMatrix& b);
    friend bool operator!=(const CKMatrix& a, const CKMatrix& b) { return !(a == b); }

    // Reinterpret over a larger field, entries unchanged.
    CKMatrix widened(Field to) const;

    std::string str() const; // bracketed rows, aligned columns

private:
    int order_;
    Field tag_;
    std::vector<KElement> e_; // row-major
    int idx(int i, int j) const;
};

CKMatrix mat_mul(const CKMatrix& a, const CKMatrix& b);
CKMatrix commutator(const CKMatrix& a, const CKMatrix& b); // AB - BA
CKMatrix conj_transpose(const CKMatrix& a);
KElement trace(const CKMatrix& a);
Rational re_trace(const CKMatrix& a);

// Rational coordinate vector of length order^2 * dim(field): row-major over
// entries, unit index ascending within each entry. Linear and injective;
// the layout is part of the persisted-format contract.
std::vector<Rational> flatten(const CKMatrix& a);

// Replace each C/H entry by its standard 2x2 / 4x4 real block (left-regular
// representation). Multiplicative: realify(AB) = realify(A) realify(B).
CKMatrix realify(const CKMatrix& a);

} // namespace ck

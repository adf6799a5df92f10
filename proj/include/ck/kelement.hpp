#pragma once

#include "ck/rational.hpp"

#include <array>
#include <string>

namespace ck {

// The three associative division algebras carrying the matrix entries.
// Ordering R < C < Q mirrors the subalgebra chain R ⊂ C ⊂ H.
enum class Field : int { R = 0, C = 1, Q = 2 };

// Real dimension of the algebra: 1, 2 or 4.
int field_dim(Field f);
const char* field_name(Field f);        // "R" / "C" / "Q"
const char* field_symbol(Field f);      // "ℝ" / "ℂ" / "ℍ"
Field field_from_name(const std::string& s);

// A scalar in R, C or H with exact rational coordinates over (1, i, j, k).
// The tag caps which coordinates may be nonzero.
class KElement {
public:
    KElement() : tag_(Field::R) {}
    explicit KElement(Field tag) : tag_(tag) {}
    KElement(Field tag, Rational c0, Rational c1 = Rational(),
             Rational c2 = Rational(), Rational c3 = Rational());

    static KElement zero(Field tag) { return KElement(tag); }
    static KElement one(Field tag) { return KElement(tag, Rational(1)); }
    // unit 0 is 1, units 1..3 are i, j, k.
    static KElement unit(Field tag, int u);

    Field tag() const { return tag_; }
    const Rational& coord(int u) const { return c_[u]; }

    bool is_zero() const;
    Rational real_part() const { return c_[0]; }
    KElement conj() const;
    // Squared norm: sum of squared coordinates.
    Rational norm2() const;

    // Reinterpret over a larger field (coordinates unchanged).
    KElement widened(Field to) const;

    std::string str() const; // e.g. "0", "-3/2", "1+i", "2j-k"

    friend KElement operator+(const KElement& a, const KElement& b);
    friend KElement operator-(const KElement& a, const KElement& b);
    friend KElement operator*(const KElement& a, const KElement& b);
    KElement operator-() const;
    KElement& operator+=(const KElement& b) { *this = *this + b; return *this; }

    friend KElement operator*(const Rational& s, const KElement& a);

    friend bool operator==(const KElement& a, const KElement& b) {
        return a.tag_ == b.tag_ && a.c_ == b.c_;
    }
    friend bool operator!=(const KElement& a, const KElement& b) { return !(a == b); }

private:
    Field tag_;
    std::array<Rational, 4> c_{};
    void check_tag() const;
};

// Free-function names for the scalar operations.
inline KElement k_mul(const KElement& x, const KElement& y) { return x * y; }
inline KElement k_conj(const KElement& x) { return x.conj(); }
inline Rational k_real_part(const KElement& x) { return x.real_part(); }

} // namespace ck

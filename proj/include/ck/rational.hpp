#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ck {

// Arbitrary-precision signed integer. Limbs are base 2^64, little-endian,
// no leading zero limbs; zero has an empty limb vector and sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string str() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    // Value if it fits in a signed 64-bit integer.
    bool fits_i64() const;
    long long as_i64() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated toward zero, like C++ integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);

private:
    int sign_ = 0;
    std::vector<std::uint64_t> limbs_;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b); // |a| >= |b|
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    void shl_bit();
    void set_low_bit();
    bool is_even() const;
    void shr1();
    std::size_t bit_length() const;
};

// Exact rational number, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);

    // Parses "num", "num/den", with optional leading '-'.
    static Rational from_string(std::string_view s);
    // "num/den", denominator omitted when 1 (e.g. "-3/2", "0", "1").
    std::string str() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_positive() const { return num_.sign() > 0; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    BigInt num_;
    BigInt den_; // > 0
    void normalize();
};

} // namespace ck

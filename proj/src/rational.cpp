#include "ck/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by going through unsigned.
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    limbs_.push_back(m);
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    r.limbs_.resize(x.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        u128 s = static_cast<u128>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
        r.limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    r.limbs_[x.size()] = carry;
    r.sign_ = 1;
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 bi = (i < b.limbs_.size() ? b.limbs_[i] : 0);
        u128 ai = a.limbs_[i];
        if (ai >= bi + static_cast<u128>(borrow)) {
            r.limbs_[i] = static_cast<u64>(ai - bi - borrow);
            borrow = 0;
        } else {
            r.limbs_[i] = static_cast<u64>((static_cast<u128>(1) << 64) + ai - bi - borrow);
            borrow = 1;
        }
    }
    r.sign_ = 1;
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) {
        BigInt r = BigInt::add_mag(a, b);
        r.sign_ = a.sign_;
        return r;
    }
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
    r.sign_ = c > 0 ? a.sign_ : b.sign_;
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] += carry;
    }
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    u64 top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

void BigInt::shl_bit() {
    u64 carry = 0;
    for (auto& l : limbs_) {
        u64 next = l >> 63;
        l = (l << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
    if (!limbs_.empty()) sign_ = 1;
}

void BigInt::set_low_bit() {
    if (limbs_.empty()) limbs_.push_back(0);
    limbs_[0] |= 1;
    sign_ = 1;
}

bool BigInt::is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }

void BigInt::shr1() {
    u64 carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u64 next = limbs_[i] & 1;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 63);
        carry = next;
    }
    trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) { q = BigInt(); r = a; return; }

    // Single-limb divisor fast path.
    if (b.limbs_.size() == 1) {
        u64 d = b.limbs_[0];
        BigInt quo;
        quo.limbs_.resize(a.limbs_.size(), 0);
        u128 rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            u128 cur = (rem << 64) | a.limbs_[i];
            quo.limbs_[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        quo.sign_ = a.sign_ * b.sign_;
        quo.trim();
        BigInt rr(static_cast<long long>(0));
        if (rem != 0) {
            rr.limbs_.push_back(static_cast<u64>(rem));
            rr.sign_ = a.sign_;
        }
        q = quo;
        r = rr;
        return;
    }

    // Binary long division on magnitudes. Magnitudes stay desk-scale here,
    // so the O(bits * limbs) loop is fine.
    BigInt rem, quo;
    std::size_t nbits = a.bit_length();
    quo.limbs_.assign((nbits + 63) / 64, 0);
    for (std::size_t bit = nbits; bit-- > 0;) {
        rem.shl_bit();
        if (a.limbs_[bit / 64] >> (bit % 64) & 1) rem.set_low_bit();
        if (rem.sign_ == 0) rem.limbs_.clear();
        if (cmp_mag(rem, b) >= 0) {
            rem = sub_mag(rem, b);
            quo.limbs_[bit / 64] |= (static_cast<u64>(1) << (bit % 64));
        }
    }
    quo.sign_ = a.sign_ * b.sign_;
    quo.trim();
    rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
    rem.trim();
    q = quo;
    r = rem;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.fits_i64() && b.fits_i64()) {
        u64 x = static_cast<u64>(a.as_i64());
        u64 y = static_cast<u64>(b.as_i64());
        while (y) { u64 t = x % y; x = y; y = t; }
        BigInt g;
        if (x) { g.sign_ = 1; g.limbs_.push_back(x); }
        return g;
    }
    // Stein's algorithm: no multi-limb division needed.
    int shift = 0;
    while (a.is_even() && b.is_even()) { a.shr1(); b.shr1(); ++shift; }
    while (a.is_even()) a.shr1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shr1();
        if (cmp_mag(a, b) > 0) std::swap(a, b);
        b = sub_mag(b, a);
        b.sign_ = b.limbs_.empty() ? 0 : 1;
    }
    for (int i = 0; i < shift; ++i) a.shl_bit();
    return a;
}

bool BigInt::fits_i64() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    u64 m = limbs_[0];
    if (sign_ > 0) return m <= static_cast<u64>(INT64_MAX);
    return m <= static_cast<u64>(INT64_MAX) + 1;
}

long long BigInt::as_i64() const {
    if (limbs_.empty()) return 0;
    u64 m = limbs_[0];
    return sign_ > 0 ? static_cast<long long>(m) : -static_cast<long long>(m);
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    // Peel 18 decimal digits at a time via the single-limb fast path.
    BigInt t = abs();
    const BigInt chunk(1000000000000000000LL); // 10^18
    std::string out;
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, chunk, q, r);
        u64 digits = r.limbs_.empty() ? 0 : r.limbs_[0];
        std::string part = std::to_string(digits);
        if (!q.is_zero()) part.insert(0, 18 - part.size(), '0');
        out.insert(0, part);
        t = q;
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + std::string(s) + "'");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

// ---------------------------------------------------------------------------

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_.abs(), den_);
    if (!(g == BigInt(1))) { num_ = num_ / g; den_ = den_ / g; }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::str() const {
    if (den_ == BigInt(1)) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

} // namespace ck

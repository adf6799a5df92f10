#include "ck/rational.hpp"

#include <doctest.h>

#include <random>

using ck::BigInt;
using ck::Rational;

TEST_CASE("BigInt basic arithmetic") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-42).str() == "-42");
    CHECK((BigInt(7) + BigInt(-9)).str() == "-2");
    CHECK((BigInt(1000000007) * BigInt(998244353)).str() == "998244359987710471");
    CHECK((BigInt(-17) / BigInt(5)).str() == "-3"); // truncation toward zero
    CHECK((BigInt(-17) % BigInt(5)).str() == "-2");
    CHECK(BigInt::from_string("-123456789012345678901234567890").str() ==
          "-123456789012345678901234567890");
}

TEST_CASE("BigInt multi-limb multiplication and division round-trip") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        // Random numbers up to ~192 bits.
        auto rand_big = [&](int limbs) {
            BigInt x(0);
            for (int i = 0; i < limbs; ++i)
                x = x * BigInt::from_string("18446744073709551616") +
                    BigInt(static_cast<long long>(rng() >> 1));
            return rng() & 1 ? x : -x;
        };
        BigInt a = rand_big(1 + static_cast<int>(rng() % 3));
        BigInt b = rand_big(1 + static_cast<int>(rng() % 2));
        if (b.is_zero()) continue;
        BigInt q = a / b;
        BigInt r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // String round-trip.
        CHECK(BigInt::from_string(a.str()) == a);
    }
}

TEST_CASE("BigInt gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt g = BigInt::gcd(a * BigInt(6), a * BigInt(15));
    CHECK(g == a * BigInt(3));
}

TEST_CASE("Rational reduction and invariants") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("Rational arithmetic and comparison") {
    Rational a(1, 2), b(-3, 4);
    CHECK((a + b).str() == "-1/4");
    CHECK((a - b).str() == "5/4");
    CHECK((a * b).str() == "-3/8");
    CHECK((a / b).str() == "-2/3");
    CHECK(b < a);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("Rational string round-trip") {
    for (const char* s : {"0", "1", "-1", "-3/2", "7/3", "123456789123456789123/2"}) {
        CHECK(Rational::from_string(s).str() == s);
    }
}

TEST_CASE("Rational field axioms on random values") {
    std::mt19937_64 rng(11);
    auto rnd = [&]() {
        long long n = static_cast<long long>(rng() % 2001) - 1000;
        long long d = 1 + static_cast<long long>(rng() % 50);
        return Rational(n, d);
    };
    for (int t = 0; t < 500; ++t) {
        Rational x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

#pragma once

#include "ck/kelement.hpp"
#include "ck/rational.hpp"

#include <string>
#include <vector>

namespace ck {

// The three CK series. Row weights q = 1, 2, 4 respectively.
enum class Series : int { sa = 0, sl = 1, sy = 2 };

int series_weight(Series s); // q in the dimension formula
const char* series_name(Series s);
Series series_from_name(const std::string& s);

// The kinds of seed matrix patterns.
enum class Kind : int { J = 0, M = 1, H = 2, E = 3 };

// Block doubling applied to a seed matrix (order 2(N+1) forms).
// Diag is the plain hat; L1..L3 are the ;1, ;2, ;3 block shapes.
enum class Doubling : int { None = -1, Diag = 0, L1 = 1, L2 = 2, L3 = 3 };

// Symbolic name of one generator matrix: kind, indices, unit, doubling.
// String syntax: "J(0,2)", "M(0,1)^1", "H(2)^3", "E0^2",
//                "J(0,1);d", "M(0,1);2", "M(0,1)^1;3".
struct GeneratorLabel {
    Kind kind = Kind::J;
    int a = 0, b = 0;   // J/M use (a, b) with a < b; H uses a as m; E uses none
    int unit = 0;       // 0 = no unit, 1..3 = i, j, k left-multiplier
    Doubling doubling = Doubling::None;

    std::string str() const;
    static GeneratorLabel parse(const std::string& s);

    // Canonical ordering: kind, then indices, then unit, then doubling.
    friend bool operator<(const GeneratorLabel& x, const GeneratorLabel& y);
    friend bool operator==(const GeneratorLabel& x, const GeneratorLabel& y);
};

// The CK coefficients w_1..w_N; zero values are allowed.
class OmegaVector {
public:
    OmegaVector() = default;
    explicit OmegaVector(std::vector<Rational> values);
    static OmegaVector ones(int n);
    // Parses a comma-separated list of rationals, e.g. "1,-1/2,0".
    static OmegaVector parse(const std::string& csv);

    int n() const { return static_cast<int>(w_.size()); }
    const Rational& value(int i) const; // w_i, 1-based
    const std::vector<Rational>& values() const { return w_; }

    // w_ab = w_{a+1} w_{a+2} ... w_b for a <= b; w_aa = 1.
    Rational omega(int a, int b) const;

    bool has_zero() const;
    std::string sign_pattern() const; // "+", "-", "0" per coefficient
    std::string str() const;          // comma-separated values

private:
    std::vector<Rational> w_;
};

} // namespace ck

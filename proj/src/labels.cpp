#include "ck/labels.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ck {

int series_weight(Series s) {
    switch (s) {
        case Series::sa: return 1;
        case Series::sl: return 2;
        case Series::sy: return 4;
    }
    throw std::logic_error("bad series");
}

const char* series_name(Series s) {
    switch (s) {
        case Series::sa: return "sa";
        case Series::sl: return "sl";
        case Series::sy: return "sy";
    }
    throw std::logic_error("bad series");
}

Series series_from_name(const std::string& s) {
    if (s == "sa") return Series::sa;
    if (s == "sl") return Series::sl;
    if (s == "sy") return Series::sy;
    throw std::invalid_argument("unknown series '" + s + "' (expected sa, sl or sy)");
}

std::string GeneratorLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::J: os << "J(" << a << "," << b << ")"; break;
        case Kind::M: os << "M(" << a << "," << b << ")"; break;
        case Kind::H: os << "H(" << a << ")"; break;
        case Kind::E: os << "E0"; break;
    }
    if (unit != 0) os << "^" << unit;
    switch (doubling) {
        case Doubling::None: break;
        case Doubling::Diag: os << ";d"; break;
        default: os << ";" << static_cast<int>(doubling); break;
    }
    return os.str();
}

GeneratorLabel GeneratorLabel::parse(const std::string& s) {
    GeneratorLabel l;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad generator label '" + s + "': " + why);
    };
    if (pos >= s.size()) fail("empty");
    switch (s[pos]) {
        case 'J': l.kind = Kind::J; break;
        case 'M': l.kind = Kind::M; break;
        case 'H': l.kind = Kind::H; break;
        case 'E': l.kind = Kind::E; break;
        default: fail("unknown kind");
    }
    ++pos;
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an index");
        return std::stoi(s.substr(start, pos - start));
    };
    if (l.kind == Kind::J || l.kind == Kind::M) {
        if (pos >= s.size() || s[pos] != '(') fail("expected '('");
        ++pos;
        l.a = read_int();
        if (pos >= s.size() || s[pos] != ',') fail("expected ','");
        ++pos;
        l.b = read_int();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        if (l.a >= l.b) fail("indices must satisfy a < b");
    } else if (l.kind == Kind::H) {
        if (pos >= s.size() || s[pos] != '(') fail("expected '('");
        ++pos;
        l.a = read_int();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        if (l.a < 1) fail("H index must be >= 1");
    } else {
        if (pos >= s.size() || s[pos] != '0') fail("expected 'E0'");
        ++pos;
    }
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        l.unit = read_int();
        if (l.unit < 1 || l.unit > 3) fail("unit must be 1, 2 or 3");
    }
    if (pos < s.size() && s[pos] == ';') {
        ++pos;
        if (pos >= s.size()) fail("missing doubling tag");
        if (s[pos] == 'd') {
            l.doubling = Doubling::Diag;
            ++pos;
        } else {
            int lam = read_int();
            if (lam < 1 || lam > 3) fail("doubling must be d, 1, 2 or 3");
            l.doubling = static_cast<Doubling>(lam);
        }
    }
    if (pos != s.size()) fail("trailing characters");
    return l;
}

bool operator<(const GeneratorLabel& x, const GeneratorLabel& y) {
    return std::tuple(static_cast<int>(x.kind), x.a, x.b, x.unit, static_cast<int>(x.doubling)) <
           std::tuple(static_cast<int>(y.kind), y.a, y.b, y.unit, static_cast<int>(y.doubling));
}

bool operator==(const GeneratorLabel& x, const GeneratorLabel& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.unit == y.unit &&
           x.doubling == y.doubling;
}

OmegaVector::OmegaVector(std::vector<Rational> values) : w_(std::move(values)) {
    if (w_.empty()) throw std::invalid_argument("omega vector must not be empty");
}

OmegaVector OmegaVector::ones(int n) {
    return OmegaVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

OmegaVector OmegaVector::parse(const std::string& csv) {
    std::vector<Rational> vals;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) vals.push_back(Rational::from_string(cur));
    return OmegaVector(std::move(vals));
}

const Rational& OmegaVector::value(int i) const {
    if (i < 1 || i > n()) throw std::out_of_range("omega index out of range");
    return w_[static_cast<std::size_t>(i - 1)];
}

Rational OmegaVector::omega(int a, int b) const {
    if (a > b || a < 0 || b > n()) throw std::out_of_range("omega(a,b): need 0 <= a <= b <= N");
    Rational p(1);
    for (int i = a + 1; i <= b; ++i) p *= value(i);
    return p;
}

bool OmegaVector::has_zero() const {
    for (const auto& w : w_)
        if (w.is_zero()) return true;
    return false;
}

std::string OmegaVector::sign_pattern() const {
    std::string s;
    for (const auto& w : w_) s += w.is_zero() ? '0' : (w.is_negative() ? '-' : '+');
    return s;
}

std::string OmegaVector::str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ",";
        s += w_[i].str();
    }
    return s;
}

} // namespace ck

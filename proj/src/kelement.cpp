#include "ck/kelement.hpp"

#include <stdexcept>

namespace ck {

int field_dim(Field f) {
    switch (f) {
        case Field::R: return 1;
        case Field::C: return 2;
        case Field::Q: return 4;
    }
    throw std::logic_error("bad field tag");
}

const char* field_name(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        case Field::Q: return "Q";
    }
    throw std::logic_error("bad field tag");
}

const char* field_symbol(Field f) {
    switch (f) {
        case Field::R: return "ℝ";
        case Field::C: return "ℂ";
        case Field::Q: return "ℍ";
    }
    throw std::logic_error("bad field tag");
}

Field field_from_name(const std::string& s) {
    if (s == "R" || s == "r") return Field::R;
    if (s == "C" || s == "c") return Field::C;
    if (s == "Q" || s == "q" || s == "H" || s == "h") return Field::Q;
    throw std::invalid_argument("unknown field '" + s + "' (expected R, C or Q)");
}

KElement::KElement(Field tag, Rational c0, Rational c1, Rational c2, Rational c3)
    : tag_(tag), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    check_tag();
}

void KElement::check_tag() const {
    int d = field_dim(tag_);
    for (int u = d; u < 4; ++u) {
        if (!c_[u].is_zero())
            throw std::invalid_argument("KElement: unit coordinate exceeds field");
    }
}

KElement KElement::unit(Field tag, int u) {
    if (u < 0 || u >= field_dim(tag))
        throw std::invalid_argument("KElement: unit index out of range for field");
    KElement e(tag);
    e.c_[u] = Rational(1);
    return e;
}

bool KElement::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

KElement KElement::conj() const {
    KElement r(tag_);
    r.c_[0] = c_[0];
    for (int u = 1; u < 4; ++u) r.c_[u] = -c_[u];
    return r;
}

Rational KElement::norm2() const {
    Rational n;
    for (const auto& c : c_) n += c * c;
    return n;
}

KElement KElement::widened(Field to) const {
    if (field_dim(to) < field_dim(tag_))
        throw std::invalid_argument("KElement: cannot narrow field");
    KElement r(to);
    r.c_ = c_;
    return r;
}

KElement operator+(const KElement& a, const KElement& b) {
    if (a.tag_ != b.tag_) throw std::invalid_argument("KElement: mismatched field tags");
    KElement r(a.tag_);
    for (int u = 0; u < 4; ++u) r.c_[u] = a.c_[u] + b.c_[u];
    return r;
}

KElement operator-(const KElement& a, const KElement& b) { return a + (-b); }

KElement KElement::operator-() const {
    KElement r(tag_);
    for (int u = 0; u < 4; ++u) r.c_[u] = -c_[u];
    return r;
}

KElement operator*(const KElement& a, const KElement& b) {
    if (a.tag_ != b.tag_) throw std::invalid_argument("KElement: mismatched field tags");
    KElement r(a.tag_);
    const auto& x = a.c_;
    const auto& y = b.c_;
    switch (a.tag_) {
        case Field::R:
            r.c_[0] = x[0] * y[0];
            break;
        case Field::C:
            r.c_[0] = x[0] * y[0] - x[1] * y[1];
            r.c_[1] = x[0] * y[1] + x[1] * y[0];
            break;
        case Field::Q:
            // Hamilton product: i2 = j2 = k2 = -1, ij = k, jk = i, ki = j.
            r.c_[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            r.c_[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
            r.c_[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
            r.c_[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
            break;
    }
    return r;
}

KElement operator*(const Rational& s, const KElement& a) {
    KElement r(a.tag_);
    for (int u = 0; u < 4; ++u) r.c_[u] = s * a.c_[u];
    return r;
}

std::string KElement::str() const {
    static const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int u = 0; u < 4; ++u) {
        if (c_[u].is_zero()) continue;
        std::string t = c_[u].str();
        if (u > 0) {
            if (t == "1") t = units[u];
            else if (t == "-1") t = std::string("-") + units[u];
            else t += units[u];
        }
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out.empty() ? "0" : out;
}

} // namespace ck

#include "ck/matrix.hpp"

#include <stdexcept>

namespace ck {

CKMatrix::CKMatrix(int order, Field tag) : order_(order), tag_(tag) {
    if (order <= 0) throw std::invalid_argument("CKMatrix: order must be positive");
    e_.assign(static_cast<std::size_t>(order) * order, KElement(tag));
}

int CKMatrix::idx(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw std::out_of_range("CKMatrix: index out of range");
    return i * order_ + j;
}

CKMatrix CKMatrix::identity(int order, Field tag) {
    CKMatrix m(order, tag);
    for (int i = 0; i < order; ++i) m.set(i, i, KElement::one(tag));
    return m;
}

CKMatrix CKMatrix::diag(Field tag, const std::vector<Rational>& entries) {
    CKMatrix m(static_cast<int>(entries.size()), tag);
    for (int i = 0; i < m.order_; ++i)
        m.set(i, i, KElement(tag, entries[static_cast<std::size_t>(i)]));
    return m;
}

CKMatrix CKMatrix::unit_entry(int order, Field tag, int i, int j, const KElement& s) {
    CKMatrix m(order, tag);
    m.set(i, j, s.widened(tag));
    return m;
}

void CKMatrix::set(int i, int j, KElement v) {
    if (v.tag() != tag_) throw std::invalid_argument("CKMatrix: entry tag mismatch");
    e_[static_cast<std::size_t>(idx(i, j))] = std::move(v);
}

bool CKMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CKMatrix CKMatrix::operator-() const {
    CKMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

CKMatrix operator+(const CKMatrix& a, const CKMatrix& b) {
    if (a.order_ != b.order_ || a.tag_ != b.tag_)
        throw std::invalid_argument("CKMatrix: dimension/tag mismatch in +");
    CKMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
    return r;
}

CKMatrix operator-(const CKMatrix& a, const CKMatrix& b) { return a + (-b); }

CKMatrix& CKMatrix::operator+=(const CKMatrix& b) {
    *this = *this + b;
    return *this;
}

CKMatrix operator*(const KElement& s, const CKMatrix& a) {
    if (s.tag() != a.tag_) throw std::invalid_argument("CKMatrix: scalar tag mismatch");
    CKMatrix r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
}

CKMatrix operator*(const Rational& s, const CKMatrix& a) {
    CKMatrix r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
}

bool operator==(const CKMatrix& a, const CKMatrix& b) {
    return a.order_ == b.order_ && a.tag_ == b.tag_ && a.e_ == b.e_;
}

CKMatrix CKMatrix::widened(Field to) const {
    CKMatrix r(order_, to);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            r.set(i, j, at(i, j).widened(to));
    return r;
}

CKMatrix mat_mul(const CKMatrix& a, const CKMatrix& b) {
    if (a.order() != b.order() || a.tag() != b.tag())
        throw std::invalid_argument("CKMatrix: dimension/tag mismatch in product");
    int n = a.order();
    CKMatrix r(n, a.tag());
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const KElement& aik = a.at(i, k);
            if (aik.is_zero()) continue; // generators are sparse
            for (int j = 0; j < n; ++j) {
                const KElement& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.set(i, j, r.at(i, j) + aik * bkj);
            }
        }
    }
    return r;
}

CKMatrix commutator(const CKMatrix& a, const CKMatrix& b) {
    return mat_mul(a, b) - mat_mul(b, a);
}

CKMatrix conj_transpose(const CKMatrix& a) {
    CKMatrix r(a.order(), a.tag());
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            r.set(i, j, a.at(j, i).conj());
    return r;
}

KElement trace(const CKMatrix& a) {
    KElement t(a.tag());
    for (int i = 0; i < a.order(); ++i) t += a.at(i, i);
    return t;
}

Rational re_trace(const CKMatrix& a) { return trace(a).real_part(); }

std::vector<Rational> flatten(const CKMatrix& a) {
    int d = field_dim(a.tag());
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(a.order()) * a.order() * d);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            for (int u = 0; u < d; ++u) v.push_back(a.at(i, j).coord(u));
    return v;
}

namespace {

// Left-regular representation of x on (1, i, j, k): column u is x * unit_u.
void real_block(const KElement& x, int d, std::vector<std::vector<Rational>>& blk) {
    blk.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int u = 0; u < d; ++u) {
        KElement col = x * KElement::unit(x.tag(), u);
        for (int v = 0; v < d; ++v) blk[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = col.coord(v);
    }
}

} // namespace

CKMatrix realify(const CKMatrix& a) {
    int d = field_dim(a.tag());
    int n = a.order();
    CKMatrix r(n * d, Field::R);
    std::vector<std::vector<Rational>> blk;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const KElement& x = a.at(i, j);
            if (x.is_zero()) continue;
            real_block(x, d, blk);
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v)
                    r.set(i * d + u, j * d + v,
                          KElement(Field::R, blk[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]));
        }
    }
    return r;
}

std::string CKMatrix::str() const {
    std::vector<std::string> cells(e_.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(order_), 0);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) {
            std::string s = at(i, j).str();
            cells[static_cast<std::size_t>(i * order_ + j)] = s;
            width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], s.size());
        }
    std::string out;
    for (int i = 0; i < order_; ++i) {
        out += "[ ";
        for (int j = 0; j < order_; ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i * order_ + j)];
            out.append(width[static_cast<std::size_t>(j)] - s.size(), ' ');
            out += s;
            out += (j + 1 < order_) ? "  " : " ";
        }
        out += "]\n";
    }
    return out;
}

} // namespace ck

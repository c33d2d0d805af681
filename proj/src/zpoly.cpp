#include "ddeq/zpoly.hpp"

namespace ddeq {

namespace {
const Scalar& zero_scalar() {
    static const Scalar z;
    return z;
}
} // namespace

ZPoly ZPoly::constant(const Scalar& c) {
    ZPoly p;
    if (!c.structurally_zero()) p.coeffs_.push_back(c);
    return p;
}

ZPoly ZPoly::z() { return monomial(Scalar::one(), 1); }

ZPoly ZPoly::monomial(const Scalar& c, std::size_t power) {
    ZPoly p;
    if (!c.structurally_zero()) {
        p.coeffs_.assign(power + 1, Scalar::zero());
        p.coeffs_[power] = c;
    }
    return p;
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().structurally_zero())
        coeffs_.pop_back();
}

const Scalar& ZPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : zero_scalar();
}

const Scalar& ZPoly::leading() const {
    return coeffs_.empty() ? zero_scalar() : coeffs_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    ZPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero());
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    r.trim();
    return r;
}

ZPoly ZPoly::operator*(const Scalar& c) const {
    ZPoly r;
    if (c.structurally_zero()) return r;
    r.coeffs_ = coeffs_;
    for (auto& k : r.coeffs_) k *= c;
    r.trim();
    return r;
}

ZPoly ZPoly::pow(unsigned k) const {
    ZPoly r = ZPoly::from_int(1);
    ZPoly b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        if (k >>= 1) b *= b;
    }
    return r;
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        r.coeffs_[k - 1] = coeffs_[k] * Scalar::from_int(long(k));
    r.trim();
    return r;
}

ZPoly ZPoly::shifted(const Scalar& s) const {
    if (s.structurally_zero()) return *this;
    // Horner over z + s: p(z + s) = (...(c_n (z+s) + c_{n-1})(z+s) + ...).
    ZPoly zs = ZPoly::z() + ZPoly::constant(s);
    ZPoly r;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        r = r * zs + ZPoly::constant(coeffs_[k]);
    return r;
}

Scalar ZPoly::eval(const Scalar& s) const {
    Scalar r;
    for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * s + coeffs_[k];
    return r;
}

ZPoly ZPoly::without_constant_term() const {
    if (coeffs_.empty()) return *this;
    ZPoly r = *this;
    r.coeffs_[0] = Scalar::zero();
    r.trim();
    return r;
}

int zpoly_cmp(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = a.coeffs().size(); k-- > 0;)
        if (int c = scalar_cmp(a.coeffs()[k], b.coeffs()[k])) return c;
    return 0;
}

} // namespace ddeq

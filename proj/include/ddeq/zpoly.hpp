#pragma once

#include <vector>

#include "ddeq/scalar.hpp"

namespace ddeq {

/// Dense polynomial in z with Scalar coefficients; index = power of z.
/// Canonical: the leading coefficient is structurally nonzero (the zero
/// polynomial stores no coefficients).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static ZPoly zero() { return ZPoly(); }
    static ZPoly constant(const Scalar& c);
    static ZPoly from_int(long v) { return constant(Scalar::from_int(v)); }
    static ZPoly z(); // the variable itself
    static ZPoly monomial(const Scalar& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k (zero Scalar beyond the degree).
    const Scalar& coeff(std::size_t k) const;
    const Scalar& leading() const;
    const Scalar& constant_term() const { return coeff(0); }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Scalar& c) const;
    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
    ZPoly pow(unsigned k) const;

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly derivative() const;
    /// p(z + s) by binomial expansion; s is any exact constant.
    ZPoly shifted(const Scalar& s) const;
    /// p(s), evaluated in the constant field.
    Scalar eval(const Scalar& s) const;
    /// p with the constant term dropped (used to canonicalize exponents).
    ZPoly without_constant_term() const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

int zpoly_cmp(const ZPoly& a, const ZPoly& b);

} // namespace ddeq

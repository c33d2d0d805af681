#pragma once

#include <map>

#include "ddeq/zpoly.hpp"

namespace ddeq {

struct ZPolyGreater {
    bool operator()(const ZPoly& a, const ZPoly& b) const {
        return zpoly_cmp(a, b) > 0;
    }
};

struct GrowthOrder {
    Rat order;
    Rat hyper_order; // 0 for every representable function
};

/// Exponential polynomial: a finite sum of p_i(z) * exp(q_i(z)). Canonical
/// form keyed by the exponent polynomial q_i, which always has zero constant
/// term (exp of the constant is folded into the coefficient as an exact
/// Scalar); the purely polynomial part is the term with exponent 0. Distinct
/// exponents are linearly independent over the coefficient class, which is
/// what makes the structural zero test meaningful.
class ExpPoly {
public:
    using TermMap = std::map<ZPoly, ZPoly, ZPolyGreater>;

    ExpPoly() = default;

    static ExpPoly zero() { return ExpPoly(); }
    static ExpPoly from_zpoly(const ZPoly& p);
    static ExpPoly from_scalar(const Scalar& c) {
        return from_zpoly(ZPoly::constant(c));
    }
    static ExpPoly from_int(long v) { return from_zpoly(ZPoly::from_int(v)); }
    static ExpPoly z() { return from_zpoly(ZPoly::z()); }
    /// coeff(z) * exp(exponent(z)); any constant term of the exponent is
    /// folded into the coefficient.
    static ExpPoly exp_term(const ZPoly& exponent, const ZPoly& coeff);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool structurally_zero() const { return terms_.empty(); }

    /// Decidable zero test; throws UnsupportedRootOfUnity when an unreduced
    /// root of unity makes coefficientwise comparison unsound.
    bool is_zero() const;

    /// The whole value as a polynomial in z, when it has no exponential part.
    std::optional<ZPoly> as_zpoly() const;

    ExpPoly operator-() const;
    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
    ExpPoly& operator-=(const ExpPoly& o) { return *this = *this - o; }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }
    ExpPoly pow(unsigned k) const;

    bool operator==(const ExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    /// Exact derivative: p*exp(q) -> (p' + p*q')*exp(q).
    ExpPoly derivative() const;
    ExpPoly derivative(unsigned order) const;

    /// f(z + eta) for an exact constant eta; exponential constants produced
    /// by the shift are pi-reduced and folded into coefficients. Throws
    /// UnsupportedRootOfUnity when the fold produces an unreduced root of
    /// unity (e.g. shifting exp(z) by i*pi/3).
    ExpPoly shifted(const ExpArg& eta) const;

    /// Symbolic growth order (max degree of the exponents) and hyper-order.
    /// Throws ZeroFunction on the zero function.
    GrowthOrder growth_order() const;

private:
    void insert(const ZPoly& exponent_zero_const, const ZPoly& coeff);
    TermMap terms_;
};

/// exp of an exact constant; the constant must be polynomial in
/// {pi} u params (no exponential part), else UnsupportedExponent.
Scalar exp_of_constant(const Scalar& c);

} // namespace ddeq

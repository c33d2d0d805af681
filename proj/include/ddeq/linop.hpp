#pragma once

#include <vector>

#include "ddeq/exppoly.hpp"

namespace ddeq {

/// Linear differential-difference operator
///     L(z, f) = sum_k a_k(z) * f^(d_k)(z + c_k) + v(z).
/// Terms are kept sorted by (shift, derivative order) with no duplicates and
/// no zero coefficients; v(z) is the inhomogeneous part.
class LinOp {
public:
    struct Term {
        ExpArg shift;
        unsigned dorder = 0;
        ExpPoly coeff;
    };

    LinOp() = default;

    static LinOp zero() { return LinOp(); }
    /// The identity-like single term coeff * f^(dorder)(z + shift).
    static LinOp single(const ExpArg& shift, unsigned dorder,
                        const ExpPoly& coeff);
    static LinOp inhomogeneous(const ExpPoly& v);

    const std::vector<Term>& op_terms() const { return terms_; }
    const ExpPoly& inhom() const { return inhom_; }

    void add_term(const ExpArg& shift, unsigned dorder, const ExpPoly& coeff);
    void add_inhom(const ExpPoly& v) { inhom_ += v; }

    /// sum a_k(z) * f^(d_k)(z + c_k) + v(z), exact.
    ExpPoly apply(const ExpPoly& f) const;

    /// Derivative of the composed function z -> L(z, f(z)) as an operator:
    /// each term a(z) f^(k)(z+c) contributes a'(z) f^(k)(z+c) and
    /// a(z) f^(k+1)(z+c); the inhomogeneous part differentiates.
    LinOp derivative() const;

    /// Operator-level vanishing: all coefficients and the inhomogeneous part
    /// are structurally zero. Distinct from applied_is_zero: an operator can
    /// annihilate a particular f without being the zero operator.
    bool is_zero_operator() const;

    /// Applied-level vanishing for a particular f.
    bool applied_is_zero(const ExpPoly& f) const {
        return apply(f).is_zero();
    }

    LinOp operator+(const LinOp& o) const;
    /// Multiply every coefficient and the inhomogeneous part by alpha, so
    /// (alpha * L)(f) = alpha * L(f).
    LinOp scaled(const ExpPoly& alpha) const;

    bool operator==(const LinOp& o) const;
    bool operator!=(const LinOp& o) const { return !(*this == o); }

private:
    std::vector<Term> terms_; // sorted by (shift, dorder)
    ExpPoly inhom_;
};

/// alpha * L1 + beta * L2 with polynomial multipliers (denominators already
/// cleared by the caller).
LinOp op_linear_combine(const ExpPoly& alpha, const LinOp& l1,
                        const ExpPoly& beta, const LinOp& l2);

} // namespace ddeq

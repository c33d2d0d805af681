#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ddeq/ratfunc.hpp"

namespace ddeq {

/// Exponent of a formal exponential: a polynomial over GaussRat in pi and the
/// session parameters. Only the pi-linear monomial takes part in root-of-unity
/// reduction.
using ExpArg = MPoly;

struct PiReduction {
    ExpArg arg;          // exponent with any reducible i*pi*s part removed
    GaussRat multiplier; // (-1)^s or +-i, folded into the coefficient
};

/// Writes the pi-linear part of `arg` as i*pi*s + pi*t (s, t rational). An
/// integer s reduces to (-1)^s, a half-integer s to +-i; any other rational s
/// is left in place and only rejected if a zero test later has to compare it.
PiReduction reduce_pi(const ExpArg& arg);

/// True when the exponent still carries exp(i*pi*s) with s outside Z and
/// Z + 1/2 (the unreduced case reduce_pi leaves behind).
bool exparg_has_unreduced_root_of_unity(const ExpArg& arg);

struct ExpArgLess {
    bool operator()(const ExpArg& a, const ExpArg& b) const {
        return mpoly_cmp(a, b) < 0;
    }
};

/// Exact constant: a finite sum of terms coeff * exp(arg), with rational
/// functions in {pi} u params as coefficients. Canonical form: every stored
/// arg is pi-reduced, no zero coefficients, no duplicate args; exp(0) is the
/// term with zero arg. Equality is structural on the canonical form.
class Scalar {
public:
    using TermMap = std::map<ExpArg, RatFunc, ExpArgLess>;

    Scalar() = default;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_int(1); }
    static Scalar from_int(long v);
    static Scalar from_rat(const Rat& r);
    static Scalar from_gauss(const GaussRat& g);
    static Scalar from_coeff(const RatFunc& c);
    static Scalar pi();
    static Scalar imag_unit();
    static Scalar param(unsigned index); // index into the session ParamSet
    /// exp(arg), pi-reduced on construction.
    static Scalar exp_of(const ExpArg& arg);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Structural emptiness; the canonical-form notion of zero.
    bool structurally_zero() const { return terms_.empty(); }

    /// Decidable zero test. Throws UnsupportedRootOfUnity when the value
    /// carries an unreduced root of unity, since coefficientwise comparison
    /// would then be unsound.
    bool is_zero() const;

    bool has_unreduced_root_of_unity() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar pow(unsigned k) const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True for a single term r*exp(c), the invertible class.
    bool is_single_term() const { return terms_.size() == 1; }

    /// r*exp(c) -> r^-1 * exp(-c). Throws NotInvertible otherwise.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    /// Both exact square roots (s, -s) when this is r*exp(c) with r a perfect
    /// square in the coefficient field. Throws NotAPerfectSquare otherwise.
    std::pair<Scalar, Scalar> sqrt_both() const;

    /// The value as a plain polynomial in {pi} u params, when it has no
    /// exponential part and a trivial denominator.
    std::optional<ExpArg> as_exparg() const;

    void add_term(const ExpArg& arg, const RatFunc& coeff);

private:
    TermMap terms_;
};

int scalar_cmp(const Scalar& a, const Scalar& b);

} // namespace ddeq

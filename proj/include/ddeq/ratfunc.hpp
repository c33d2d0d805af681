#pragma once

#include <optional>

#include "ddeq/mpoly.hpp"

namespace ddeq {

/// Ratio of two multivariate polynomials over GaussRat in pi and the session
/// parameters. Canonical form: gcd-reduced, denominator monic under the fixed
/// graded-lex order, zero stored as 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(MPoly::zero()), den_(MPoly::constant(GaussRat::one())) {}
    RatFunc(MPoly num, MPoly den);

    static RatFunc from(const MPoly& p) {
        return RatFunc(p, MPoly::constant(GaussRat::one()));
    }
    static RatFunc constant(const GaussRat& c) { return from(MPoly::constant(c)); }
    static RatFunc constant(const Rat& c) { return from(MPoly::constant(c)); }
    static RatFunc from_int(long v) { return from(MPoly::from_int(v)); }
    static RatFunc one() { return from_int(1); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the denominator is 1 (the value is a polynomial).
    bool is_polynomial() const;
    std::optional<GaussRat> constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const;
    RatFunc pow(long k) const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact square root within the rational-function field, if one exists.
    std::optional<RatFunc> sqrt_exact() const;

private:
    void normalize();

    MPoly num_;
    MPoly den_;
};

int ratfunc_cmp(const RatFunc& a, const RatFunc& b);

} // namespace ddeq

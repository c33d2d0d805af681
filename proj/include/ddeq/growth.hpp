#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <vector>

#include "ddeq/exppoly.hpp"

namespace ddeq {

using Real = boost::multiprecision::mpfr_float;

/// Minimal arbitrary-precision complex value over mpfr reals.
struct CNum {
    Real re;
    Real im;

    CNum() : re(0), im(0) {}
    CNum(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

    CNum operator-() const { return CNum(-re, -im); }
    CNum operator+(const CNum& o) const { return CNum(re + o.re, im + o.im); }
    CNum operator-(const CNum& o) const { return CNum(re - o.re, im - o.im); }
    CNum operator*(const CNum& o) const {
        return CNum(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    CNum operator/(const CNum& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return CNum((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }
    CNum& operator+=(const CNum& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    Real abs() const;
};

CNum cnum_exp(const CNum& z);
CNum cnum_pow(const CNum& base, uint32_t k);

/// Shared, read-only numeric evaluation state: working precision, exact
/// parameter bindings, and contour sampling limits.
class NumericContext {
public:
    explicit NumericContext(unsigned precision_bits = 256);

    unsigned precision_bits() const { return bits_; }
    unsigned digits10() const { return digits10_; }

    void bind(unsigned param_index, const CNum& value) {
        bindings_[param_index] = value;
    }
    const CNum& binding(unsigned param_index) const;

    const Real& pi_value() const { return pi_; }

    /// Re-assert the working precision on the calling thread; used at the
    /// top of parallel regions so worker-thread temporaries match.
    void assert_thread_precision() const;

    unsigned initial_samples = 1 << 10;
    unsigned max_samples = 1 << 18;
    bool use_parallel = true;

private:
    unsigned bits_;
    unsigned digits10_;
    Real pi_;
    std::map<unsigned, CNum> bindings_;
};

CNum eval_numeric(const GaussRat& g, const NumericContext& ctx);
CNum eval_numeric(const MPoly& p, const NumericContext& ctx);
CNum eval_numeric(const RatFunc& r, const NumericContext& ctx);
CNum eval_numeric(const Scalar& s, const NumericContext& ctx);
CNum eval_numeric(const ZPoly& p, const CNum& z, const NumericContext& ctx);
CNum eval_numeric(const ExpPoly& f, const CNum& z, const NumericContext& ctx);

/// z-independent parts of an exponential polynomial evaluated once, so the
/// contour loops only run Horner plus one complex exp per term.
class CompiledExpPoly {
public:
    CompiledExpPoly(const ExpPoly& f, const NumericContext& ctx);
    CNum eval(const CNum& z) const;

private:
    struct Term {
        std::vector<CNum> coeff;    // dense, index = power of z
        std::vector<CNum> exponent; // dense, zero constant term
    };
    std::vector<Term> terms_;
};

struct WindingStats {
    CNum mean;     // average of f'(z) z / f(z) over the contour samples
    Real min_abs_f;
    Real min_zero_distance; // first-order estimate min |f| / |f'|
};

/// Uniform-angle trapezoid sum of f' z / f on |z| = r; the real part of the
/// mean converges to the enclosed zero count. Serial reference kernel.
WindingStats winding_sum_serial(const CompiledExpPoly& f,
                                const CompiledExpPoly& fprime, const Real& r,
                                unsigned samples, const NumericContext& ctx);

/// OpenMP kernel; must agree with the serial reference to rounding error.
WindingStats winding_sum_parallel(const CompiledExpPoly& f,
                                  const CompiledExpPoly& fprime, const Real& r,
                                  unsigned samples, const NumericContext& ctx);

struct ZeroCountResult {
    long count = 0;
    double pre_rounding_error = 0; // |winding value - count| at acceptance
    unsigned samples = 0;          // samples used by the accepted pass
    double radius_used = 0;        // after any contour nudges
    int nudges = 0;
};

/// Multiplicity-weighted number of zeros of f in |z| <= r via the argument
/// principle. Nudges r outward (at most 5 times) when a zero sits within
/// 1e-6 * r of the contour; doubles the sampling until the winding value is
/// within 1e-6 of the same integer twice consecutively.
ZeroCountResult zero_count_detailed(const ExpPoly& f, double r,
                                    const NumericContext& ctx);
long zero_count(const ExpPoly& f, double r, const NumericContext& ctx);

struct GrowthReport {
    std::vector<double> radii;
    std::vector<long> counts;      // n(r), multiplicity-weighted
    bool too_few_zeros = false;    // n(max radius) < 2: slope not estimable
    double lambda_hat = 0;         // fitted slope of log n(r) vs log r
    double ci_low = 0, ci_high = 0;
    Rat sigma;                     // symbolic order from the exponent degrees
    Rat hyper_order;               // always 0 here
};

/// Regression estimate of the exponent of convergence of zeros, labelled
/// multiplicity-weighted, next to the symbolic order for comparison.
GrowthReport lambda_estimate(const ExpPoly& f, const std::vector<double>& radii,
                             const NumericContext& ctx);

} // namespace ddeq

#include "ddeq/growth.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ddeq/errors.hpp"

namespace ddeq {

Real CNum::abs() const {
    using boost::multiprecision::sqrt;
    return sqrt(re * re + im * im);
}

CNum cnum_exp(const CNum& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    Real m = exp(z.re);
    return CNum(m * cos(z.im), m * sin(z.im));
}

CNum cnum_pow(const CNum& base, uint32_t k) {
    CNum r(Real(1));
    CNum b = base;
    while (k > 0) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

NumericContext::NumericContext(unsigned precision_bits) : bits_(precision_bits) {
    if (bits_ < 64)
        throw EvaluationError("numeric precision must be at least 64 bits");
    digits10_ = unsigned(double(bits_) * 0.30103) + 4;
    Real::default_precision(digits10_);
    pi_ = boost::math::constants::pi<Real>();
}

const CNum& NumericContext::binding(unsigned param_index) const {
    auto it = bindings_.find(param_index);
    if (it == bindings_.end())
        throw UnboundParameter("parameter #" + std::to_string(param_index) +
                               " has no numeric binding");
    return it->second;
}

void NumericContext::assert_thread_precision() const {
    Real::default_precision(digits10_);
}

CNum eval_numeric(const GaussRat& g, const NumericContext& ctx) {
    ctx.assert_thread_precision();
    auto to_real = [](const Rat& r) {
        return Real(numerator(r)) / Real(denominator(r));
    };
    return CNum(to_real(g.re), to_real(g.im));
}

CNum eval_numeric(const MPoly& p, const NumericContext& ctx) {
    CNum acc;
    for (const auto& [mono, coeff] : p.terms()) {
        CNum term = eval_numeric(coeff, ctx);
        for (std::size_t v = 0; v < mono.exps.size(); ++v) {
            if (mono.exps[v] == 0) continue;
            CNum base = (v == kPiVar) ? CNum(ctx.pi_value())
                                      : ctx.binding(unsigned(v - kFirstParamVar));
            term = term * cnum_pow(base, mono.exps[v]);
        }
        acc += term;
    }
    return acc;
}

CNum eval_numeric(const RatFunc& r, const NumericContext& ctx) {
    CNum n = eval_numeric(r.num(), ctx);
    if (r.is_polynomial()) return n;
    return n / eval_numeric(r.den(), ctx);
}

CNum eval_numeric(const Scalar& s, const NumericContext& ctx) {
    CNum acc;
    for (const auto& [arg, coeff] : s.terms())
        acc += eval_numeric(coeff, ctx) * cnum_exp(eval_numeric(arg, ctx));
    return acc;
}

CNum eval_numeric(const ZPoly& p, const CNum& z, const NumericContext& ctx) {
    CNum acc;
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        acc = acc * z + eval_numeric(p.coeffs()[k], ctx);
    return acc;
}

CNum eval_numeric(const ExpPoly& f, const CNum& z, const NumericContext& ctx) {
    CNum acc;
    for (const auto& [q, p] : f.terms())
        acc += eval_numeric(p, z, ctx) * cnum_exp(eval_numeric(q, z, ctx));
    return acc;
}

CompiledExpPoly::CompiledExpPoly(const ExpPoly& f, const NumericContext& ctx) {
    for (const auto& [q, p] : f.terms()) {
        Term t;
        for (const auto& c : p.coeffs()) t.coeff.push_back(eval_numeric(c, ctx));
        for (const auto& c : q.coeffs())
            t.exponent.push_back(eval_numeric(c, ctx));
        terms_.push_back(std::move(t));
    }
}

CNum CompiledExpPoly::eval(const CNum& z) const {
    auto horner = [&z](const std::vector<CNum>& coeffs) {
        CNum acc;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
        return acc;
    };
    CNum acc;
    for (const auto& t : terms_) {
        CNum value = horner(t.coeff);
        if (!t.exponent.empty()) value = value * cnum_exp(horner(t.exponent));
        acc += value;
    }
    return acc;
}

namespace {

struct SampleAccum {
    CNum sum;
    Real min_abs_f{-1};
    Real min_dist{-1};

    void take(const CNum& fv, const CNum& fpv, const CNum& z) {
        sum += fpv * z / fv;
        Real a = fv.abs();
        Real d = fpv.abs();
        // First-order distance estimate |f| / |f'|; a vanishing derivative
        // means the sample says nothing about nearby zeros.
        if (min_abs_f < 0 || a < min_abs_f) min_abs_f = a;
        if (d > 0) {
            Real est = a / d;
            if (min_dist < 0 || est < min_dist) min_dist = est;
        }
    }

    void merge(const SampleAccum& o) {
        sum += o.sum;
        if (o.min_abs_f >= 0 && (min_abs_f < 0 || o.min_abs_f < min_abs_f))
            min_abs_f = o.min_abs_f;
        if (o.min_dist >= 0 && (min_dist < 0 || o.min_dist < min_dist))
            min_dist = o.min_dist;
    }
};

WindingStats finish(SampleAccum acc, unsigned samples) {
    WindingStats s;
    s.mean = CNum(acc.sum.re / samples, acc.sum.im / samples);
    s.min_abs_f = acc.min_abs_f < 0 ? Real(0) : acc.min_abs_f;
    s.min_zero_distance = acc.min_dist < 0 ? Real(0) : acc.min_dist;
    return s;
}

CNum contour_point(const Real& r, const Real& theta) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    return CNum(r * cos(theta), r * sin(theta));
}

} // namespace

WindingStats winding_sum_serial(const CompiledExpPoly& f,
                                const CompiledExpPoly& fprime, const Real& r,
                                unsigned samples, const NumericContext& ctx) {
    ctx.assert_thread_precision();
    Real step = 2 * ctx.pi_value() / samples;
    SampleAccum acc;
    for (unsigned k = 0; k < samples; ++k) {
        CNum z = contour_point(r, step * k);
        acc.take(f.eval(z), fprime.eval(z), z);
    }
    return finish(std::move(acc), samples);
}

WindingStats winding_sum_parallel(const CompiledExpPoly& f,
                                  const CompiledExpPoly& fprime, const Real& r,
                                  unsigned samples, const NumericContext& ctx) {
#ifndef _OPENMP
    return winding_sum_serial(f, fprime, r, samples, ctx);
#else
    int threads = omp_get_max_threads();
    std::vector<SampleAccum> partial(threads);
    Real step = 2 * ctx.pi_value() / samples;
#pragma omp parallel num_threads(threads)
    {
        ctx.assert_thread_precision();
        SampleAccum local;
#pragma omp for schedule(static)
        for (long k = 0; k < long(samples); ++k) {
            CNum z = contour_point(r, step * unsigned(k));
            local.take(f.eval(z), fprime.eval(z), z);
        }
        partial[omp_get_thread_num()].merge(local);
    }
    SampleAccum acc;
    for (auto& p : partial) acc.merge(p);
    return finish(std::move(acc), samples);
#endif
}

namespace {

WindingStats run_kernel(const CompiledExpPoly& f, const CompiledExpPoly& fp,
                        const Real& r, unsigned samples,
                        const NumericContext& ctx) {
    return ctx.use_parallel ? winding_sum_parallel(f, fp, r, samples, ctx)
                            : winding_sum_serial(f, fp, r, samples, ctx);
}

} // namespace

ZeroCountResult zero_count_detailed(const ExpPoly& f, double r,
                                    const NumericContext& ctx) {
    if (f.structurally_zero())
        throw ZeroFunction("zero counting requires a nonzero function");
    ctx.assert_thread_precision();

    CompiledExpPoly cf(f, ctx);
    CompiledExpPoly cfp(f.derivative(), ctx);

    ZeroCountResult out;
    Real radius(r);
    const double integer_tol = 1e-6;

    for (int nudge = 0;; ++nudge) {
        if (nudge > 5)
            throw ContourTooCloseToZero(
                "a zero stayed within 1e-6*r of the contour after 5 nudges");
        out.nudges = nudge;
        Real delta = Real(1e-6) * radius;

        unsigned samples = ctx.initial_samples;
        WindingStats stats = run_kernel(cf, cfp, radius, samples, ctx);
        if (stats.min_zero_distance < delta) {
            radius += 10 * delta;
            continue;
        }

        // Double the sampling until the value sits within 1e-6 of the same
        // integer twice in a row; trapezoid sums on periodic analytic
        // integrands converge geometrically, so this settles fast. A zero
        // surfacing near the contour at the finer sampling restarts the
        // outer loop with a nudged radius.
        //
        // Sampling at N points resolves zeros no closer than about
        // 32*ln(10)/N of the contour (relative); exhaustion with a zero
        // inside that band is a contour problem, not a quadrature one.
        Real resolvable =
            radius * std::min(0.01, 32.0 * 2.302585 / ctx.max_samples);
        bool contour_violation = false;
        double prev_value = double(stats.mean.re);
        while (!contour_violation) {
            if (samples * 2 > ctx.max_samples) {
                if (stats.min_zero_distance < resolvable) {
                    radius += 10 * delta;
                    break;
                }
                throw NonIntegerWinding(
                    "winding value failed to stabilize near an integer "
                    "within the sampling budget");
            }
            samples *= 2;
            stats = run_kernel(cf, cfp, radius, samples, ctx);
            if (stats.min_zero_distance < delta) {
                radius += 10 * delta;
                contour_violation = true;
                break;
            }
            double value = double(stats.mean.re);
            long rounded = std::lround(value);
            if (std::abs(prev_value - double(rounded)) < integer_tol &&
                std::abs(value - double(rounded)) < integer_tol) {
                out.count = rounded;
                out.pre_rounding_error = std::abs(value - double(rounded));
                out.samples = samples;
                out.radius_used = double(radius);
                return out;
            }
            prev_value = value;
        }
    }
}

long zero_count(const ExpPoly& f, double r, const NumericContext& ctx) {
    return zero_count_detailed(f, r, ctx).count;
}

GrowthReport lambda_estimate(const ExpPoly& f, const std::vector<double>& radii,
                             const NumericContext& ctx) {
    if (f.structurally_zero())
        throw ZeroFunction("growth estimation requires a nonzero function");
    if (radii.size() < 5)
        throw TooFewRadii("the radii schedule must contain at least 5 radii");

    GrowthReport report;
    report.radii = radii;
    // Ascending radii keep the reported counts nondecreasing.
    std::sort(report.radii.begin(), report.radii.end());
    GrowthOrder order = f.growth_order();
    report.sigma = order.order;
    report.hyper_order = order.hyper_order;

    for (double r : report.radii) report.counts.push_back(zero_count(f, r, ctx));

    // Entire functions with finitely many zeros have lambda = 0; the slope
    // of log n(r) is meaningless there, so that path is reported explicitly.
    // Both a starved count (n < 2 everywhere useful) and a flat count across
    // the whole schedule land here.
    if (report.counts.back() < 2 ||
        report.counts.front() == report.counts.back()) {
        report.too_few_zeros = true;
        report.lambda_hat = 0;
        return report;
    }

    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (report.counts[k] < 2) continue;
        xs.push_back(std::log(radii[k]));
        ys.push_back(std::log(double(report.counts[k])));
    }
    std::size_t m = xs.size();
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < m; ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= double(m);
    my /= double(m);
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < m; ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
    }
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double ss_resid = 0;
    for (std::size_t k = 0; k < m; ++k) {
        double resid = ys[k] - (intercept + slope * xs[k]);
        ss_resid += resid * resid;
    }
    double se = m > 2 ? std::sqrt(ss_resid / double(m - 2) / sxx) : 0.0;
    report.lambda_hat = slope;
    report.ci_low = slope - 1.96 * se;
    report.ci_high = slope + 1.96 * se;
    return report;
}

} // namespace ddeq

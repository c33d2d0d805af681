#include "ddeq/ratfunc.hpp"

#include <cassert>

#include "ddeq/errors.hpp"

namespace ddeq {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(GaussRat::one());
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = mpoly_gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = num_.divide_exact(g);
            auto qd = den_.divide_exact(g);
            assert(qn && qd);
            num_ = *qn;
            den_ = *qd;
        }
    }
    // Monic denominator pins the representative of each fraction.
    GaussRat lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatFunc::is_one() const {
    auto c = constant_value();
    return c && c->is_one();
}

bool RatFunc::is_polynomial() const {
    return den_.is_constant() && den_.constant_value()->is_one();
}

std::optional<GaussRat> RatFunc::constant_value() const {
    if (!is_polynomial()) return std::nullopt;
    return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw NotInvertible("division by zero coefficient");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r = RatFunc::one();
    RatFunc b = *this;
    unsigned long n = static_cast<unsigned long>(k);
    while (n > 0) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

std::optional<RatFunc> RatFunc::sqrt_exact() const {
    auto sn = mpoly_sqrt(num_);
    if (!sn) return std::nullopt;
    auto sd = mpoly_sqrt(den_);
    if (!sd) return std::nullopt;
    return RatFunc(*sn, *sd);
}

int ratfunc_cmp(const RatFunc& a, const RatFunc& b) {
    if (int c = mpoly_cmp(a.num(), b.num())) return c;
    return mpoly_cmp(a.den(), b.den());
}

} // namespace ddeq

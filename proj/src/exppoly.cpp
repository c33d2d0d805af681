#include "ddeq/exppoly.hpp"

#include "ddeq/errors.hpp"

namespace ddeq {

Scalar exp_of_constant(const Scalar& c) {
    if (c.structurally_zero()) return Scalar::one();
    auto arg = c.as_exparg();
    if (!arg)
        throw UnsupportedExponent(
            "exponential of a constant that is not polynomial in pi and the "
            "declared parameters (nested exponentials are not representable)");
    return Scalar::exp_of(*arg);
}

ExpPoly ExpPoly::from_zpoly(const ZPoly& p) {
    ExpPoly r;
    if (!p.is_zero()) r.terms_.emplace(ZPoly::zero(), p);
    return r;
}

ExpPoly ExpPoly::exp_term(const ZPoly& exponent, const ZPoly& coeff) {
    ExpPoly r;
    const Scalar& c0 = exponent.constant_term();
    if (c0.structurally_zero()) {
        r.insert(exponent, coeff);
    } else {
        r.insert(exponent.without_constant_term(),
                 coeff * exp_of_constant(c0));
    }
    return r;
}

void ExpPoly::insert(const ZPoly& exponent, const ZPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ExpPoly::is_zero() const {
    if (terms_.empty()) return true;
    for (const auto& [q, p] : terms_)
        for (const auto& c : p.coeffs())
            if (c.has_unreduced_root_of_unity())
                throw UnsupportedRootOfUnity(
                    "zero test on an exponential polynomial whose "
                    "coefficients contain an unreduced root of unity");
    return false;
}

std::optional<ZPoly> ExpPoly::as_zpoly() const {
    if (terms_.empty()) return ZPoly::zero();
    if (terms_.size() == 1 && terms_.begin()->first.is_zero())
        return terms_.begin()->second;
    return std::nullopt;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (const auto& [q, p] : terms_) r.terms_.emplace(q, -p);
    return r;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r = *this;
    for (const auto& [q, p] : o.terms_) r.insert(q, p);
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly r;
    // Exponents add; both sides carry zero constant terms, so no folding.
    for (const auto& [q1, p1] : terms_)
        for (const auto& [q2, p2] : o.terms_) r.insert(q1 + q2, p1 * p2);
    return r;
}

ExpPoly ExpPoly::pow(unsigned k) const {
    ExpPoly r = ExpPoly::from_int(1);
    ExpPoly b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        if (k >>= 1) b *= b;
    }
    return r;
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly r;
    for (const auto& [q, p] : terms_)
        r.insert(q, p.derivative() + p * q.derivative());
    return r;
}

ExpPoly ExpPoly::derivative(unsigned order) const {
    ExpPoly r = *this;
    for (unsigned k = 0; k < order; ++k) r = r.derivative();
    return r;
}

ExpPoly ExpPoly::shifted(const ExpArg& eta) const {
    Scalar s = Scalar::from_coeff(RatFunc::from(eta));
    ExpPoly r;
    for (const auto& [q, p] : terms_) {
        ZPoly q_shifted = q.shifted(s);
        Scalar fold = exp_of_constant(q_shifted.constant_term());
        if (fold.has_unreduced_root_of_unity())
            throw UnsupportedRootOfUnity(
                "shift produced exp(i*pi*s) with s outside Z and Z+1/2");
        r.insert(q_shifted.without_constant_term(), p.shifted(s) * fold);
    }
    return r;
}

GrowthOrder ExpPoly::growth_order() const {
    if (terms_.empty())
        throw ZeroFunction("growth order of the zero function is undefined");
    int max_deg = 0;
    for (const auto& [q, p] : terms_)
        max_deg = std::max(max_deg, q.degree());
    return GrowthOrder{Rat(max_deg), Rat(0)};
}

} // namespace ddeq

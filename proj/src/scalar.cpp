#include "ddeq/scalar.hpp"

#include "ddeq/errors.hpp"

namespace ddeq {

namespace {

const Monomial& pi_monomial() {
    static const Monomial m = Monomial::var(kPiVar);
    return m;
}

} // namespace

PiReduction reduce_pi(const ExpArg& arg) {
    PiReduction out{arg, GaussRat::one()};
    auto it = out.arg.terms().find(pi_monomial());
    if (it == out.arg.terms().end()) return out;
    // Coefficient of the pi monomial is t + i*s; the real part pi*t stays
    // formal, only i*pi*s is eligible for reduction.
    const Rat s = it->second.im;

    GaussRat mult;
    if (rat_is_integer(s)) {
        mult = (numerator(s) % 2 == 0) ? GaussRat(1) : GaussRat(-1);
    } else if (rat_is_half_integer(s)) {
        // s = m + 1/2: exp(i*pi*s) = (-1)^m * i.
        Int m = (numerator(s) - 1) / 2;
        mult = (m % 2 == 0) ? GaussRat(0, 1) : GaussRat(0, -1);
    } else {
        return out; // left unreduced; flagged only at zero-test time
    }
    out.multiplier = mult;
    out.arg = out.arg - MPoly::term(pi_monomial(), GaussRat(0, s));
    return out;
}

bool exparg_has_unreduced_root_of_unity(const ExpArg& arg) {
    auto it = arg.terms().find(pi_monomial());
    if (it == arg.terms().end()) return false;
    const Rat& s = it->second.im;
    return s != 0 && !rat_is_integer(s) && !rat_is_half_integer(s);
}

Scalar Scalar::from_int(long v) { return from_coeff(RatFunc::from_int(v)); }
Scalar Scalar::from_rat(const Rat& r) { return from_coeff(RatFunc::constant(r)); }
Scalar Scalar::from_gauss(const GaussRat& g) { return from_coeff(RatFunc::constant(g)); }

Scalar Scalar::from_coeff(const RatFunc& c) {
    Scalar s;
    s.add_term(ExpArg::zero(), c);
    return s;
}

Scalar Scalar::pi() { return from_coeff(RatFunc::from(MPoly::var(kPiVar))); }

Scalar Scalar::imag_unit() { return from_gauss(GaussRat::imag_unit()); }

Scalar Scalar::param(unsigned index) {
    return from_coeff(RatFunc::from(MPoly::var(kFirstParamVar + index)));
}

Scalar Scalar::exp_of(const ExpArg& arg) {
    Scalar s;
    s.add_term(arg, RatFunc::one());
    return s;
}

void Scalar::add_term(const ExpArg& arg, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    PiReduction red = reduce_pi(arg);
    RatFunc c = red.multiplier.is_one()
                    ? coeff
                    : coeff * RatFunc::constant(red.multiplier);
    auto it = terms_.find(red.arg);
    if (it == terms_.end()) {
        terms_.emplace(std::move(red.arg), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Scalar::has_unreduced_root_of_unity() const {
    for (const auto& [arg, c] : terms_)
        if (exparg_has_unreduced_root_of_unity(arg)) return true;
    return false;
}

bool Scalar::is_zero() const {
    if (terms_.empty()) return true;
    if (has_unreduced_root_of_unity())
        throw UnsupportedRootOfUnity(
            "zero test on a value containing exp(i*pi*s) with s not in Z or "
            "Z+1/2; such roots of unity can cancel nontrivially");
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [arg, c] : terms_) r.terms_.emplace(arg, -c);
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [arg, c] : o.terms_) {
        auto it = r.terms_.find(arg);
        if (it == r.terms_.end()) {
            r.terms_.emplace(arg, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [a1, c1] : terms_)
        for (const auto& [a2, c2] : o.terms_) r.add_term(a1 + a2, c1 * c2);
    return r;
}

Scalar Scalar::pow(unsigned k) const {
    Scalar r = Scalar::one();
    Scalar b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        if (k >>= 1) b *= b;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (terms_.empty()) throw NotInvertible("division by zero");
    if (terms_.size() != 1)
        throw NotInvertible(
            "only single-term constants r*exp(c) are invertible; sums of "
            "distinct exponentials are not closed under inversion");
    const auto& [arg, coeff] = *terms_.begin();
    Scalar r;
    r.add_term(-arg, coeff.inverse());
    return r;
}

std::pair<Scalar, Scalar> Scalar::sqrt_both() const {
    if (terms_.empty()) return {Scalar::zero(), Scalar::zero()};
    if (terms_.size() != 1)
        throw NotAPerfectSquare(
            "square root is only defined for single-term constants r*exp(c)");
    const auto& [arg, coeff] = *terms_.begin();
    auto root = coeff.sqrt_exact();
    if (!root)
        throw NotAPerfectSquare(
            "coefficient is not a perfect square in the constant field");
    ExpArg half = arg * GaussRat(Rat(1, 2));
    Scalar plus;
    plus.add_term(half, *root);
    return {plus, -plus};
}

std::optional<ExpArg> Scalar::as_exparg() const {
    if (terms_.empty()) return ExpArg::zero();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [arg, coeff] = *terms_.begin();
    if (!arg.is_zero() || !coeff.is_polynomial()) return std::nullopt;
    return coeff.num();
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (int c = mpoly_cmp(ia->first, ib->first)) return c;
        if (int c = ratfunc_cmp(ia->second, ib->second)) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

} // namespace ddeq

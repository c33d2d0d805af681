#include "ddeq/equation.hpp"

#include "ddeq/errors.hpp"

namespace ddeq {

const char* verdict_tag_name(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::NoEntireSolution_Lemma21:
            return "NoEntireSolution_Lemma21";
        case VerdictTag::NoTranscendentalFiniteOrder_Lemma24:
            return "NoTranscendentalFiniteOrder_Lemma24";
        case VerdictTag::ConstrainedN2:
            return "ConstrainedN2";
        case VerdictTag::Verified:
            return "Verified";
        case VerdictTag::NotASolution:
            return "NotASolution";
    }
    return "?";
}

ExpPoly equation_rhs(const Equation& eq) {
    return ExpPoly::exp_term(eq.p, eq.q);
}

ExpPoly residual(const Equation& eq, const ExpPoly& f) {
    return f.pow(eq.n) + eq.L.apply(f) - equation_rhs(eq);
}

Verdict verify(const Equation& eq, const ExpPoly& f) {
    ExpPoly r = residual(eq, f);
    if (!r.is_zero())
        return Verdict{VerdictTag::NotASolution, std::nullopt, std::move(r)};
    // A verified transcendental solution with n >= 3 and L(z, f) != 0 cannot
    // exist (no finite-order transcendental entire solutions there); reaching
    // this line would mean the exact arithmetic itself is broken. Inputs
    // whose composed L(z, f) vanishes are legitimate and not flagged.
    if (eq.n >= 3 && !f.structurally_zero() &&
        f.growth_order().order > Rat(0) && !eq.L.applied_is_zero(f))
        throw SoundnessBug(
            "verified a transcendental solution with n >= 3 and a "
            "non-vanishing composed operator");
    return Verdict{VerdictTag::Verified, std::nullopt, std::nullopt};
}

Verdict classify(const Equation& eq) {
    if (eq.n < 2) throw InvalidEquation("classification requires n >= 2");
    if (eq.q.is_zero() || eq.p.degree() < 1)
        return Verdict{VerdictTag::NoEntireSolution_Lemma21, std::nullopt,
                       std::nullopt};
    if (eq.n >= 3)
        return Verdict{VerdictTag::NoTranscendentalFiniteOrder_Lemma24,
                       std::nullopt, std::nullopt};
    int d = eq.p.degree();
    return Verdict{VerdictTag::ConstrainedN2, GrowthConstraints{d, d},
                   std::nullopt};
}

PQPair build_pq(const Equation& eq) {
    if (eq.q.is_zero())
        throw InvalidEquation("P/Q elimination requires q != 0");
    // Multiplying through by q keeps every coefficient polynomial:
    //   q*P = q*n*f' - (q*p' + q')*f,  q*Q = (q*p' + q')*L - q*L'.
    ZPoly weight = eq.q * eq.p.derivative() + eq.q.derivative();
    ExpPoly weight_ep = ExpPoly::from_zpoly(weight);
    ExpPoly q_ep = ExpPoly::from_zpoly(eq.q);

    LinOp P;
    P.add_term(ExpArg::zero(), 1,
               q_ep * ExpPoly::from_int(long(eq.n)));
    P.add_term(ExpArg::zero(), 0, -weight_ep);

    LinOp Qop = op_linear_combine(weight_ep, eq.L, -q_ep, eq.L.derivative());
    return PQPair{std::move(P), std::move(Qop), eq.q};
}

} // namespace ddeq

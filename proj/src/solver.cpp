#include "ddeq/solver.hpp"

#include "ddeq/errors.hpp"

namespace ddeq {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::TwoSolutions: return "TwoSolutions";
        case SolveStatus::SymbolicRoots: return "SymbolicRoots";
        case SolveStatus::NoFiniteOrderSolution: return "NoFiniteOrderSolution";
    }
    return "?";
}

const char* failed_identity_name(FailedIdentity f) {
    switch (f) {
        case FailedIdentity::None: return "none";
        case FailedIdentity::F0Vanishes: return "f0-vanishes";
        case FailedIdentity::VConsistency: return "v-consistency";
    }
    return "?";
}

ZPoly solve_linear_ode_poly(const OdeInstance& inst) {
    if (inst.H.is_zero())
        throw ZeroFunction("the right-hand side H must be non-vanishing");
    Scalar inv_a = inst.a.inverse();
    int n = inst.H.degree();
    std::vector<Scalar> b(std::size_t(n) + 1);
    b[n] = -(inst.H.coeff(n) * inv_a);
    for (int j = n - 1; j >= 0; --j)
        b[j] = (Scalar::from_int(2 * (j + 1)) * b[j + 1] - inst.H.coeff(j)) *
               inv_a;
    return ZPoly(std::move(b));
}

namespace {

void check_hypotheses(const T31Instance& inst) {
    if (inst.a.is_zero() || inst.b.is_zero() || inst.eta.is_zero())
        throw OutOfTheoremScope("the hypothesis a*b*eta != 0 is violated");
    if (inst.g.is_zero() && inst.h.is_zero() && inst.u.is_zero() &&
        inst.v.is_zero())
        throw OutOfTheoremScope("L(z, f) vanishes identically");
    (void)inst.a.inverse(); // single-term constants only
    (void)inst.b.inverse();
}

ZPoly closed_form_f0(const T31Instance& inst) {
    Scalar eta_const = Scalar::from_coeff(RatFunc::from(inst.eta));
    Scalar exp_half = exp_of_constant(inst.a * eta_const *
                                      Scalar::from_rat(Rat(1, 2)));
    Scalar half_a = inst.a * Scalar::from_rat(Rat(1, 2));
    ZPoly sum = inst.g * exp_half + inst.h * half_a + inst.u;
    return sum * Scalar::from_rat(Rat(-1, 2));
}

/// f0^2 + g f0(z+eta) + h f0' + u f0 + v, zero exactly when v is consistent.
ZPoly consistency_residual(const T31Instance& inst, const ZPoly& f0) {
    Scalar eta_const = Scalar::from_coeff(RatFunc::from(inst.eta));
    return f0 * f0 + inst.g * f0.shifted(eta_const) +
           inst.h * f0.derivative() + inst.u * f0 + inst.v;
}

ExpPoly assemble_solution(const Scalar& c, const Scalar& half_a,
                          const ZPoly& f0) {
    ExpPoly exp_part = ExpPoly::exp_term(ZPoly::monomial(half_a, 1),
                                         ZPoly::constant(c));
    return exp_part + ExpPoly::from_zpoly(f0);
}

} // namespace

Equation theorem31_equation(const T31Instance& inst) {
    LinOp L;
    L.add_term(inst.eta, 0, ExpPoly::from_zpoly(inst.g));
    L.add_term(ExpArg::zero(), 1, ExpPoly::from_zpoly(inst.h));
    L.add_term(ExpArg::zero(), 0, ExpPoly::from_zpoly(inst.u));
    L.add_inhom(ExpPoly::from_zpoly(inst.v));
    return Equation{2, std::move(L), ZPoly::constant(inst.b),
                    ZPoly::monomial(inst.a, 1)};
}

SolutionSet solve_theorem31(const T31Instance& inst,
                            const std::optional<Scalar>& c_hint) {
    check_hypotheses(inst);

    SolutionSet result;
    result.f0 = closed_form_f0(inst);
    if (result.f0.is_zero()) {
        // Case 3.1: f = c*exp((a/2)z) alone forces v = 0 hence L(z,f) = 0.
        result.status = SolveStatus::NoFiniteOrderSolution;
        result.failed = FailedIdentity::F0Vanishes;
        return result;
    }

    ZPoly vres = consistency_residual(inst, result.f0);
    if (!vres.is_zero()) {
        result.status = SolveStatus::NoFiniteOrderSolution;
        result.failed = FailedIdentity::VConsistency;
        result.failing_residual = std::move(vres);
        return result;
    }

    std::pair<Scalar, Scalar> roots;
    if (c_hint) {
        if (!((*c_hint * *c_hint - inst.b).is_zero()))
            throw RootConstraintViolated("supplied c does not satisfy c^2 = b");
        roots = {*c_hint, -*c_hint};
    } else {
        try {
            roots = inst.b.sqrt_both();
        } catch (const NotAPerfectSquare&) {
            result.status = SolveStatus::SymbolicRoots;
            return result;
        }
    }

    Scalar half_a = inst.a * Scalar::from_rat(Rat(1, 2));
    result.roots = roots;
    result.solutions = {assemble_solution(roots.first, half_a, result.f0),
                        assemble_solution(roots.second, half_a, result.f0)};

    // Both candidates must satisfy the original equation exactly.
    Equation eq = theorem31_equation(inst);
    for (const auto& f : result.solutions) {
        if (!residual(eq, f).is_zero())
            throw EvaluationError(
                "internal consistency failure: reconstructed solution does "
                "not satisfy the equation");
    }
    result.status = SolveStatus::TwoSolutions;
    return result;
}

SynthesisResult synthesize_v(const ZPoly& g, const ZPoly& h, const ZPoly& u,
                             const Scalar& a, const Scalar& b,
                             const ExpArg& eta) {
    T31Instance probe{g, h, u, ZPoly::zero(), a, b, eta};
    if (a.is_zero() || b.is_zero() || eta.is_zero())
        throw OutOfTheoremScope("the hypothesis a*b*eta != 0 is violated");
    ZPoly f0 = closed_form_f0(probe);
    if (f0.is_zero())
        throw DegenerateL(
            "exp(a*eta/2)*g + (a/2)*h + u vanishes identically, so the "
            "synthesized L(z, f) would vanish (Case 3.1)");
    probe.v = -consistency_residual(probe, f0); // with v = 0 folded in
    SynthesisResult out{probe.v, f0, solve_theorem31(probe)};
    return out;
}

T31Instance extract_theorem31(const Equation& eq) {
    if (eq.n != 2)
        throw OutOfTheoremScope("the closed-form solver covers n = 2 only");
    if (eq.q.is_zero() || eq.q.degree() != 0)
        throw OutOfTheoremScope(
            "the closed-form solver requires a constant right-hand side "
            "coefficient q = b (nonconstant q is outside Theorem scope)");
    if (eq.p.degree() != 1)
        throw OutOfTheoremScope("the exponent p(z) must be linear: p = a*z");

    T31Instance inst;
    inst.a = eq.p.coeff(1);
    inst.b = eq.q.coeff(0);
    // A constant term of p folds into b: q*exp(a z + p0) = (q*exp(p0))*exp(a z).
    const Scalar& p0 = eq.p.coeff(0);
    if (!p0.structurally_zero()) inst.b *= exp_of_constant(p0);

    bool have_shift = false;
    for (const auto& t : eq.L.op_terms()) {
        auto coeff = t.coeff.as_zpoly();
        if (!coeff)
            throw OutOfTheoremScope(
                "operator coefficients must be polynomial in z");
        if (t.shift.is_zero() && t.dorder == 0) {
            inst.u = *coeff;
        } else if (t.shift.is_zero() && t.dorder == 1) {
            inst.h = *coeff;
        } else if (!t.shift.is_zero() && t.dorder == 0) {
            if (have_shift)
                throw OutOfTheoremScope(
                    "the solver covers exactly one shift term");
            inst.g = *coeff;
            inst.eta = t.shift;
            have_shift = true;
        } else {
            throw OutOfTheoremScope(
                "operator term outside the g f(z+eta) + h f' + u f form");
        }
    }
    auto v = eq.L.inhom().as_zpoly();
    if (!v)
        throw OutOfTheoremScope("the inhomogeneous part must be polynomial");
    inst.v = *v;
    // With no shift term eta never enters the formulas; any nonzero value
    // satisfies the a*b*eta != 0 hypothesis.
    if (!have_shift) inst.eta = ExpArg::from_int(1);
    return inst;
}

} // namespace ddeq

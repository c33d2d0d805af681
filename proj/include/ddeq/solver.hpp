#pragma once

#include <optional>
#include <vector>

#include "ddeq/equation.hpp"

namespace ddeq {

/// The linear ODE 2 f'(z) - a f(z) = H(z) with constant a != 0 and a
/// non-vanishing polynomial right-hand side.
struct OdeInstance {
    Scalar a;
    ZPoly H;
};

/// Polynomial particular solution of 2 f' - a f = H by the descending
/// coefficient recursion b_n = -lambda_n / a,
/// b_j = (2 (j+1) b_{j+1} - lambda_j) / a; deg f0 = deg H.
ZPoly solve_linear_ode_poly(const OdeInstance& inst);

/// f(z)^2 + g(z) f(z+eta) + h(z) f'(z) + u(z) f(z) + v(z) = b * exp(a z)
/// with polynomial g, h, u, v and constants a, b, eta, a*b*eta != 0.
struct T31Instance {
    ZPoly g, h, u, v;
    Scalar a, b;
    ExpArg eta;
};

enum class SolveStatus {
    TwoSolutions,          // both f = +-c * exp((a/2) z) + f0, residual zero
    SymbolicRoots,         // b has no representable root; c constrained by c^2 = b
    NoFiniteOrderSolution, // one of the consistency identities failed
};

enum class FailedIdentity {
    None,
    F0Vanishes,   // f0 = 0 would force L(z, f) = 0, contradicting L != 0
    VConsistency, // f0^2 + g f0(z+eta) + h f0' + u f0 + v != 0
};

const char* solve_status_name(SolveStatus s);
const char* failed_identity_name(FailedIdentity f);

struct SolutionSet {
    SolveStatus status;
    ZPoly f0;
    std::optional<std::pair<Scalar, Scalar>> roots; // +-c with c^2 = b
    std::vector<ExpPoly> solutions;                 // both signs when solvable
    FailedIdentity failed = FailedIdentity::None;
    std::optional<ZPoly> failing_residual; // the nonzero consistency residual
};

/// Complete finite-order entire solution set of the Theorem-3.1 class.
/// `c_hint` binds the root c explicitly (checked against c^2 = b); without it
/// a non-square b yields SymbolicRoots.
SolutionSet solve_theorem31(const T31Instance& inst,
                            const std::optional<Scalar>& c_hint = std::nullopt);

struct SynthesisResult {
    ZPoly v;
    ZPoly f0;
    SolutionSet solutions;
};

/// Inverse mode: given g, h, u, a, b, eta, manufacture the unique v that makes
/// the instance exactly solvable. Throws DegenerateL when the induced f0
/// vanishes identically.
SynthesisResult synthesize_v(const ZPoly& g, const ZPoly& h, const ZPoly& u,
                             const Scalar& a, const Scalar& b,
                             const ExpArg& eta);

/// Shape-check an Eq-(1.6) instance against the Theorem 3.1 class and
/// extract its data. Throws OutOfTheoremScope when n != 2, q is nonconstant,
/// deg p != 1, or L is not of the g f(z+eta) + h f' + u f + v form.
/// When L carries no shift term, eta is irrelevant and defaults to 1.
T31Instance extract_theorem31(const Equation& eq);

/// The equation an instance denotes (n = 2, RHS b * exp(a z)).
Equation theorem31_equation(const T31Instance& inst);

} // namespace ddeq

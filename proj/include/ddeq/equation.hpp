#pragma once

#include <optional>

#include "ddeq/linop.hpp"

namespace ddeq {

/// An instance of f(z)^n + L(z, f) = q(z) * exp(p(z)).
/// Well-posed instances have n >= 2, q != 0 and deg p >= 1; degenerate q or p
/// are still accepted so the classifier can report on them.
struct Equation {
    unsigned n = 2;
    LinOp L;
    ZPoly q;
    ZPoly p;
};

enum class VerdictTag {
    NoEntireSolution_Lemma21,
    NoTranscendentalFiniteOrder_Lemma24,
    ConstrainedN2,
    Verified,
    NotASolution,
};

const char* verdict_tag_name(VerdictTag tag);

/// Growth constraints attached to an n = 2 classification: any transcendental
/// entire solution must satisfy sigma = lambda_bar = deg p.
struct GrowthConstraints {
    int sigma_deg;
    int lambda_bar_deg;
};

struct Verdict {
    VerdictTag tag;
    std::optional<GrowthConstraints> constraints;
    std::optional<ExpPoly> residual_witness; // nonzero residual, when relevant
};

/// The eliminated pair of Eq-(2.3) type, with denominators cleared by q:
///     P = q*n*D - (q*p' + q')*id        (pure differential, order <= 1)
///     Q = (q*p' + q')*L - q*L'
/// Every exact solution satisfies f^(n-1) * P(f) = Q(f) identically.
struct PQPair {
    LinOp P;
    LinOp Qop;
    ZPoly cleared; // the multiplier q used to clear q'/q
};

/// f^n + L(z, f) - q * exp(p), canonical; f solves the equation iff zero.
ExpPoly residual(const Equation& eq, const ExpPoly& f);

/// Right-hand side q(z) * exp(p(z)) as an exponential polynomial.
ExpPoly equation_rhs(const Equation& eq);

Verdict verify(const Equation& eq, const ExpPoly& f);

/// Declarative classification: q = 0 or constant p admit no entire solution
/// (of hyper-order < 1); n >= 3 admits no transcendental entire solution of
/// finite order; n = 2 forces sigma = lambda_bar = deg p.
Verdict classify(const Equation& eq);

PQPair build_pq(const Equation& eq);

} // namespace ddeq

#include <doctest.h>

#include "ddeq/printer.hpp"
#include "ddeq/solver.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ddeq;
using testfix::expr;
using testfix::load_equation;
using testgen::Rng;

namespace {

ZPoly zp(std::initializer_list<long> ascending) {
    std::vector<Scalar> coeffs;
    for (long v : ascending) coeffs.push_back(Scalar::from_int(v));
    return ZPoly(std::move(coeffs));
}

// Random instance data for round-trips; coefficients are z-polynomials over
// the exact constant field, a and eta polynomial constants so the shifted
// exponentials stay representable.
struct RandomInstance {
    ZPoly g, h, u;
    Scalar a, b, c;
    ExpArg eta;
};

RandomInstance random_instance(Rng& rng) {
    RandomInstance inst;
    inst.g = testgen::random_zpoly(rng, 1, 3, 1);
    inst.h = testgen::random_zpoly(rng, 1, 3, 1);
    inst.u = testgen::random_zpoly(rng, 1, 3, 1);
    inst.a = Scalar::from_rat(testgen::random_nonzero_rat(rng, 3, 2));
    inst.c = testgen::random_invertible_scalar(rng, 1);
    inst.b = inst.c * inst.c;
    inst.eta = testgen::random_shift_arg(rng, 1);
    if (inst.eta.is_zero()) inst.eta = ExpArg::from_int(1);
    return inst;
}

} // namespace

TEST_CASE("Lemma 3.2 fixtures") {
    // constant H: f0 = -H/a
    ZPoly f0 = solve_linear_ode_poly({Scalar::from_int(3), zp({5})});
    CHECK(f0 == ZPoly::constant(Scalar::from_rat(Rat(-5, 3))));

    // linear H with a symbolic: f0 = -(l1/a) z + (-l0/a - 2 l1/a^2)
    Scalar a = Scalar::param(0);
    Scalar inv_a = a.inverse();
    ZPoly h = zp({7, 4}); // l0 = 7, l1 = 4
    ZPoly got = solve_linear_ode_poly({a, h});
    ZPoly expect =
        ZPoly::monomial(-(Scalar::from_int(4) * inv_a), 1) +
        ZPoly::constant(-(Scalar::from_int(7) * inv_a) -
                        Scalar::from_int(8) * inv_a * inv_a);
    CHECK(got == expect);

    // H = z^2, a = 2: f0 = -z^2/2 - z - 1, checked by direct substitution
    ZPoly q = solve_linear_ode_poly({Scalar::from_int(2), zp({0, 0, 1})});
    std::vector<Scalar> want = {Scalar::from_int(-1), Scalar::from_int(-1),
                                Scalar::from_rat(Rat(-1, 2))};
    CHECK(q == ZPoly(want));
    CHECK((q.derivative() * Scalar::from_int(2) - q * Scalar::from_int(2) -
           zp({0, 0, 1}))
              .is_zero());

    // 1 + eta merges into one term with coefficient (1 + eta), which is
    // invertible; a sum of distinct exponentials is not.
    Scalar two_exps =
        Scalar::one() + Scalar::exp_of(MPoly::var(kFirstParamVar));
    CHECK_THROWS_AS(solve_linear_ode_poly({two_exps, zp({1})}),
                    NotInvertible);
    CHECK_THROWS_AS(solve_linear_ode_poly({Scalar::one(), ZPoly::zero()}),
                    ZeroFunction);
}

TEST_CASE("Lemma 3.2 recursion equals the linear-system oracle") {
    Rng rng(350125);
    for (int iter = 0; iter < 500; ++iter) {
        Scalar a = testgen::random_invertible_scalar(rng, 1);
        ZPoly h = testgen::random_nonzero_zpoly(rng, 1, 8);
        OdeInstance inst{a, h};
        ZPoly recursion = solve_linear_ode_poly(inst);
        ZPoly oracle = testoracle::ode_undetermined_coefficients(a, h);
        CHECK(recursion == oracle);
        CHECK(recursion.degree() == h.degree());
        // substitution identity 2 f0' - a f0 = H
        CHECK((recursion.derivative() * Scalar::from_int(2) - recursion * a -
               h)
                  .is_zero());
    }
}

TEST_CASE("Theorem 3.1 solves Example 3.1") {
    ParsedEquation pe = load_equation("example31.eq");
    T31Instance inst = extract_theorem31(pe.equation);
    SolutionSet s = solve_theorem31(inst);

    REQUIRE(s.status == SolveStatus::TwoSolutions);
    CHECK(s.f0 == zp({0, -1})); // f0 = -z
    REQUIRE(s.solutions.size() == 2);
    CHECK(s.solutions[0] == expr("exp(z) - z", pe.session));
    CHECK(s.solutions[1] == expr("-exp(z) - z", pe.session));
    REQUIRE(s.roots.has_value());
    CHECK(s.roots->first == Scalar::one());
    CHECK(s.roots->second == Scalar::from_int(-1));

    // the closing identity L(z, f) = -f0 (f0 + 2c e^{(a/2)z}), and L(z,f) != 0
    for (std::size_t k = 0; k < 2; ++k) {
        const ExpPoly& f = s.solutions[k];
        Scalar c = k == 0 ? s.roots->first : s.roots->second;
        ExpPoly f0 = ExpPoly::from_zpoly(s.f0);
        ExpPoly expfac = ExpPoly::exp_term(
            ZPoly::monomial(inst.a * Scalar::from_rat(Rat(1, 2)), 1),
            ZPoly::constant(c * Scalar::from_int(2)));
        ExpPoly expect = -(f0 * (f0 + expfac));
        CHECK(pe.equation.L.apply(f) == expect);
        CHECK_FALSE(pe.equation.L.applied_is_zero(f));
        CHECK(f.growth_order().order == Rat(1));
    }
}

TEST_CASE("Theorem 3.1 rejects the perturbed v with a named identity") {
    ParsedEquation pe = load_equation("theorem31_perturbed.eq");
    SolutionSet s = solve_theorem31(extract_theorem31(pe.equation));
    CHECK(s.status == SolveStatus::NoFiniteOrderSolution);
    CHECK(s.failed == FailedIdentity::VConsistency);
    REQUIRE(s.failing_residual.has_value());
    CHECK(*s.failing_residual == ZPoly::from_int(1)); // exactly the +1
}

TEST_CASE("derived fixture: g = 0, u = -2z") {
    ParsedEquation pe = load_equation("theorem31_derived.eq");
    SolutionSet s = solve_theorem31(extract_theorem31(pe.equation));
    REQUIRE(s.status == SolveStatus::TwoSolutions);
    CHECK(s.f0 == zp({0, 1})); // f0 = z
    CHECK(s.solutions[0] == expr("exp(z) + z"));
    CHECK(s.solutions[1] == expr("-exp(z) + z"));

    // with v = 0 instead, the consistency residual is -z^2
    T31Instance broken = extract_theorem31(pe.equation);
    broken.v = ZPoly::zero();
    SolutionSet bad = solve_theorem31(broken);
    CHECK(bad.status == SolveStatus::NoFiniteOrderSolution);
    CHECK(bad.failed == FailedIdentity::VConsistency);
    REQUIRE(bad.failing_residual.has_value());
    CHECK(*bad.failing_residual == zp({0, 0, -1}));
}

TEST_CASE("non-square b yields the symbolic-root report or a bound c") {
    ParsedEquation pe = load_equation("theorem31_derived.eq");
    T31Instance inst = extract_theorem31(pe.equation);
    inst.b = Scalar::from_int(2);
    SolutionSet s = solve_theorem31(inst);
    CHECK(s.status == SolveStatus::SymbolicRoots);
    CHECK(s.f0 == zp({0, 1}));
    CHECK(s.solutions.empty());

    // binding c explicitly must satisfy c^2 = b exactly
    CHECK_THROWS_AS(solve_theorem31(inst, Scalar::from_int(3)),
                    RootConstraintViolated);
    inst.b = Scalar::from_int(4);
    SolutionSet bound = solve_theorem31(inst, Scalar::from_int(2));
    REQUIRE(bound.status == SolveStatus::TwoSolutions);
    CHECK(bound.roots->first == Scalar::from_int(2));
}

TEST_CASE("scope guards") {
    // nonconstant q (Example 2.2) is outside the closed-form theorem
    CHECK_THROWS_AS(extract_theorem31(load_equation("example22.eq").equation),
                    OutOfTheoremScope);
    // n = 3 likewise
    CHECK_THROWS_AS(extract_theorem31(load_equation("n3.eq").equation),
                    OutOfTheoremScope);
}

TEST_CASE("synthesize_v reproduces Example 3.1's printed v") {
    ParsedEquation pe = load_equation("example31.eq");
    T31Instance inst = extract_theorem31(pe.equation);
    SynthesisResult r =
        synthesize_v(inst.g, inst.h, inst.u, inst.a, inst.b, inst.eta);

    ExpPoly printed = expr(
        "(2-exp(eta))*exp(-eta)*z^2 + (2*eta-1)*exp(-eta)*z + exp(-eta)",
        pe.session);
    CHECK(ExpPoly::from_zpoly(r.v) == printed);
    CHECK(r.f0 == zp({0, -1}));
    CHECK(r.v == inst.v); // the fixture file carries exactly the printed v
    CHECK(r.solutions.status == SolveStatus::TwoSolutions);

    // g = h = 0, u = -2z, a = 2 synthesizes v = z^2
    SynthesisResult r2 =
        synthesize_v(ZPoly::zero(), ZPoly::zero(), zp({0, -2}),
                     Scalar::from_int(2), Scalar::one(), ExpArg::from_int(1));
    CHECK(r2.v == zp({0, 0, 1}));

    // a degenerate combination is rejected: exp(a eta/2) g + (a/2) h + u = 0
    CHECK_THROWS_AS(synthesize_v(ZPoly::zero(), zp({2}), zp({-1}),
                                 Scalar::from_int(1), Scalar::one(),
                                 ExpArg::from_int(1)),
                    DegenerateL);
}

TEST_CASE("synthesize/solve round-trips on randomized instances") {
    Rng rng(5899);
    int done = 0;
    while (done < 120) {
        RandomInstance ri = random_instance(rng);
        SynthesisResult r;
        try {
            r = synthesize_v(ri.g, ri.h, ri.u, ri.a, ri.b, ri.eta);
        } catch (const DegenerateL&) {
            continue;
        }
        ++done;
        REQUIRE(r.solutions.status == SolveStatus::TwoSolutions);
        CHECK(r.solutions.f0 == r.f0);

        T31Instance inst{ri.g, ri.h, ri.u, r.v, ri.a, ri.b, ri.eta};
        Equation eq = theorem31_equation(inst);
        for (const auto& f : r.solutions.solutions) {
            CHECK(residual(eq, f).is_zero());
            CHECK(f.growth_order().order == Rat(1));
            CHECK_FALSE(eq.L.applied_is_zero(f));
        }
    }
}

#include <doctest.h>

#include "ddeq/equation.hpp"
#include "ddeq/growth.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace ddeq;
using testfix::expr;
using testfix::load_equation;
using testgen::Rng;

TEST_CASE("Example 2.2 verifies for both signs") {
    ParsedEquation pe = load_equation("example22.eq");
    CHECK(verify(pe.equation, expr("z*exp(z) - z")).tag == VerdictTag::Verified);
    CHECK(verify(pe.equation, expr("-z*exp(z) - z")).tag ==
          VerdictTag::Verified);
    // and a wrong candidate is flagged with a witness
    Verdict v = verify(pe.equation, expr("z*exp(z) + z"));
    CHECK(v.tag == VerdictTag::NotASolution);
    CHECK(v.residual_witness.has_value());
}

TEST_CASE("Example 3.1 verifies, symbolically and with eta = 1") {
    for (const char* name : {"example31.eq", "example31_eta1.eq"}) {
        ParsedEquation pe = load_equation(name);
        CHECK(verify(pe.equation, expr("exp(z) - z", pe.session)).tag ==
              VerdictTag::Verified);
        CHECK(verify(pe.equation, expr("-exp(z) - z", pe.session)).tag ==
              VerdictTag::Verified);
        // sign flip of the e^z group is not a solution
        Verdict v = verify(pe.equation, expr("exp(z) + z", pe.session));
        CHECK(v.tag == VerdictTag::NotASolution);
    }
}

TEST_CASE("Remark 2.1: solved although L(z, f) vanishes identically") {
    ParsedEquation pe = load_equation("remark21.eq");
    ExpPoly f = expr("z*exp(z)", pe.session);
    CHECK(verify(pe.equation, f).tag == VerdictTag::Verified);
    CHECK(verify(pe.equation, -f).tag == VerdictTag::Verified);
    CHECK(pe.equation.L.applied_is_zero(f));
    CHECK_FALSE(pe.equation.L.is_zero_operator());
}

TEST_CASE("Example 2.1 discrepancy: the printed solutions do not verify") {
    ParsedEquation pe = load_equation("example21.eq");

    // Independent brute-force expansion, bypassing the operator machinery:
    // all five products assembled directly in the ring.
    Session plain;
    ExpPoly z = ExpPoly::z();
    ExpPoly zez = expr("z*exp(z)");
    Scalar c = Scalar::pi().inverse() * Scalar::imag_unit() *
               Scalar::from_rat(Rat(-1, 2)); // 1/(2 pi i) = -i/(2 pi)
    ExpArg two_pi_i =
        MPoly::term(Monomial::var(kPiVar), GaussRat(Rat(0), Rat(2)));
    ExpPoly z2 = z * z;
    ExpPoly rhs = expr("exp(2*z)");

    for (int sign : {+1, -1}) {
        ExpPoly f = (sign > 0 ? zez : -zez) + z;
        ExpPoly brute = f * f +
                        ExpPoly::from_scalar(c) * z2 * f.shifted(two_pi_i) -
                        ExpPoly::from_scalar(c) * z2 * f -
                        ExpPoly::from_int(2) * z * f - rhs;
        ExpPoly engine = residual(pe.equation, f);
        CHECK(engine == brute);
        CHECK_FALSE(engine.is_zero());

        // Frozen closed form of the discrepancy: (z^2 - 1) e^{2z} +- z^2 e^z.
        ExpPoly frozen = expr(sign > 0
                                  ? "(z^2-1)*exp(2*z) + z^2*exp(z)"
                                  : "(z^2-1)*exp(2*z) - z^2*exp(z)");
        CHECK(engine == frozen);

        // Numeric confirmation at 5 random points through an evaluation path
        // that never touches the symbolic ring.
        NumericContext ctx(256);
        Rng rng(777 + sign);
        for (int k = 0; k < 5; ++k) {
            CNum zv(Real(rng.pick(-200, 200)) / 100,
                    Real(rng.pick(-200, 200)) / 100);
            CNum fz = CNum(Real(sign)) * zv * cnum_exp(zv) + zv;
            CNum fshift_arg = zv + CNum(Real(0), 2 * ctx.pi_value());
            CNum fshift = CNum(Real(sign)) * fshift_arg * cnum_exp(fshift_arg) +
                          fshift_arg;
            // 1/(2 pi i) = -i/(2 pi)
            CNum coeff = CNum(Real(0), Real(-1)) / CNum(2 * ctx.pi_value());
            CNum direct = fz * fz + coeff * zv * zv * fshift -
                          (coeff * zv * zv + CNum(Real(2)) * zv) * fz -
                          cnum_exp(CNum(Real(2)) * zv);
            CNum via_engine = eval_numeric(engine, zv, ctx);
            CHECK(double((direct - via_engine).abs()) < 1e-50);
            CHECK(double(direct.abs()) > 1e-20);
        }
    }
}

TEST_CASE("verify reports an error when a shift is undefined for f") {
    Equation eq;
    eq.n = 2;
    ExpArg third =
        MPoly::term(Monomial::var(kPiVar), GaussRat(Rat(0), Rat(1, 3)));
    eq.L = LinOp::single(third, 0, ExpPoly::from_int(1));
    eq.q = ZPoly::from_int(1);
    eq.p = ZPoly::monomial(Scalar::from_int(2), 1);
    CHECK_THROWS_AS(verify(eq, testfix::expr("exp(z)")),
                    UnsupportedRootOfUnity);
}

TEST_CASE("classification fixtures") {
    CHECK(classify(load_equation("lemma21.eq").equation).tag ==
          VerdictTag::NoEntireSolution_Lemma21);
    CHECK(classify(load_equation("n3.eq").equation).tag ==
          VerdictTag::NoTranscendentalFiniteOrder_Lemma24);

    Verdict v = classify(load_equation("example22.eq").equation);
    CHECK(v.tag == VerdictTag::ConstrainedN2);
    REQUIRE(v.constraints.has_value());
    CHECK(v.constraints->sigma_deg == 1);
    CHECK(v.constraints->lambda_bar_deg == 1);

    // q = 0 also lands in the Lemma 2.1 bucket
    Equation degenerate = load_equation("example22.eq").equation;
    degenerate.q = ZPoly::zero();
    CHECK(classify(degenerate).tag == VerdictTag::NoEntireSolution_Lemma21);
}

TEST_CASE("n >= 3 solutions verify only through an annihilated operator") {
    // f^3 + (f' - f) = exp(3z) is solved by exp(z) because the composed
    // operator vanishes on it; that case is Verified without complaint.
    Equation eq;
    eq.n = 3;
    eq.L = LinOp::single(ExpArg::zero(), 1, ExpPoly::from_int(1)) +
           LinOp::single(ExpArg::zero(), 0, ExpPoly::from_int(-1));
    eq.q = ZPoly::from_int(1);
    eq.p = ZPoly::monomial(Scalar::from_int(3), 1);
    ExpPoly f = testfix::expr("exp(z)");
    REQUIRE(eq.L.applied_is_zero(f));
    CHECK(verify(eq, f).tag == VerdictTag::Verified);
    // while a wrong candidate still reports the residual
    CHECK(verify(eq, testfix::expr("exp(z)+1")).tag ==
          VerdictTag::NotASolution);
}

TEST_CASE("classify never returns ConstrainedN2 for n >= 3") {
    Rng rng(24601);
    for (int iter = 0; iter < 50; ++iter) {
        Equation eq;
        eq.n = unsigned(rng.pick(3, 7));
        eq.L = testgen::random_linop(rng, 1);
        eq.q = testgen::random_zpoly(rng, 1, 2, 1);
        eq.p = testgen::random_nonzero_zpoly(rng, 0, 2);
        Verdict v = classify(eq);
        CHECK(v.tag != VerdictTag::ConstrainedN2);
    }
}

TEST_CASE("verified n=2 solutions have order = deg p") {
    ParsedEquation e22 = load_equation("example22.eq");
    ExpPoly f = expr("z*exp(z) - z");
    REQUIRE(verify(e22.equation, f).tag == VerdictTag::Verified);
    CHECK(f.growth_order().order == Rat(e22.equation.p.degree()));

    ParsedEquation e31 = load_equation("example31.eq");
    ExpPoly g = expr("exp(z) - z", e31.session);
    REQUIRE(verify(e31.equation, g).tag == VerdictTag::Verified);
    CHECK(g.growth_order().order == Rat(e31.equation.p.degree()));
}

TEST_CASE("P/Q elimination fixtures") {
    // Theorem 3.1 setting: q = b, p = a z gives P = b(2D - a), Q = b(aL - L').
    ParsedEquation pe = load_equation("example31.eq");
    PQPair pq = build_pq(pe.equation);
    const Equation& eq = pe.equation;

    LinOp expect_p;
    expect_p.add_term(ExpArg::zero(), 1, ExpPoly::from_int(2));
    expect_p.add_term(ExpArg::zero(), 0,
                      -ExpPoly::from_zpoly(eq.q * eq.p.derivative()));
    // with q = b = 1 the cleared P is literally 2 f' - a f
    CHECK(pq.P == expect_p);
    LinOp expect_q = op_linear_combine(
        ExpPoly::from_zpoly(eq.q * eq.p.derivative()), eq.L,
        -ExpPoly::from_zpoly(eq.q), eq.L.derivative());
    CHECK(pq.Qop == expect_q);

    // L = 0 kills Q and leaves P = 2 f' - f for q = 1, p = z.
    Equation trivial{2, LinOp::zero(), ZPoly::from_int(1),
                     ZPoly::monomial(Scalar::one(), 1)};
    PQPair pq2 = build_pq(trivial);
    CHECK(pq2.Qop.is_zero_operator());
    LinOp expect_p2;
    expect_p2.add_term(ExpArg::zero(), 1, ExpPoly::from_int(2));
    expect_p2.add_term(ExpArg::zero(), 0, ExpPoly::from_int(-1));
    CHECK(pq2.P == expect_p2);
}

TEST_CASE("Eq (2.3) identity on every verified fixture") {
    struct Case {
        const char* file;
        const char* f;
    };
    const Case cases[] = {
        {"example22.eq", "z*exp(z) - z"},
        {"example22.eq", "-z*exp(z) - z"},
        {"example31.eq", "exp(z) - z"},
        {"example31.eq", "-exp(z) - z"},
        {"example31_eta1.eq", "exp(z) - z"},
        {"remark21.eq", "z*exp(z)"},
        {"theorem31_derived.eq", "exp(z) + z"},
    };
    for (const auto& c : cases) {
        ParsedEquation pe = load_equation(c.file);
        ExpPoly f = expr(c.f, pe.session);
        REQUIRE(verify(pe.equation, f).tag == VerdictTag::Verified);
        PQPair pq = build_pq(pe.equation);
        ExpPoly lhs = f.pow(pe.equation.n - 1) * pq.P.apply(f);
        ExpPoly rhs = pq.Qop.apply(f);
        CHECK((lhs - rhs).is_zero());
    }
}

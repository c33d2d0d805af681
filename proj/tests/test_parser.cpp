#include <doctest.h>

#include "ddeq/printer.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace ddeq;
using testfix::expr;
using testfix::load_equation;
using testgen::Rng;

namespace {

bool equations_equal(const Equation& a, const Equation& b) {
    return a.n == b.n && a.L == b.L && a.q == b.q && a.p == b.p;
}

Session two_param_session() {
    Session s;
    s.params.declare("eta");
    s.params.declare("mu");
    return s;
}

} // namespace

TEST_CASE("scalar literal grammar") {
    Session s;
    s.params.declare("eta");
    CHECK(lower_scalar(*parse_expression("3/4"), s) ==
          Scalar::from_rat(Rat(3, 4)));
    CHECK(lower_scalar(*parse_expression("i*i"), s) == Scalar::from_int(-1));
    CHECK(lower_scalar(*parse_expression("2^10"), s) == Scalar::from_int(1024));
    CHECK(lower_scalar(*parse_expression("2^(-2)"), s) ==
          Scalar::from_rat(Rat(1, 4)));
    CHECK(lower_scalar(*parse_expression("exp(1)*exp(-1)"), s) ==
          Scalar::one());
    // e^(...) sugar is exp
    CHECK(lower_scalar(*parse_expression("e^(eta)"), s) ==
          lower_scalar(*parse_expression("exp(eta)"), s));
    // 1/(2*pi*i)
    Scalar c = lower_scalar(*parse_expression("1/(2*pi*i)"), s);
    CHECK(c * lower_scalar(*parse_expression("2*pi*i"), s) == Scalar::one());
}

TEST_CASE("expression grammar for exponential polynomials") {
    CHECK(expr("z") == ExpPoly::z());
    CHECK(expr("z^2 - 1") == ExpPoly::z() * ExpPoly::z() - ExpPoly::from_int(1));
    CHECK(expr("z*exp(z)+z") ==
          ExpPoly::exp_term(ZPoly::monomial(Scalar::one(), 1),
                            ZPoly::monomial(Scalar::one(), 1)) +
              ExpPoly::z());
    // exponent polynomials with constant parts fold exactly
    CHECK(expr("exp(z+1)") == expr("exp(1)*exp(z)"));
}

TEST_CASE("f-term grammar") {
    Session s;
    s.params.declare("eta");

    LinOp l1 = lower_linop(*parse_expression("f'"), s);
    LinOp e1 = LinOp::single(ExpArg::zero(), 1, ExpPoly::from_int(1));
    CHECK(l1 == e1);

    LinOp l2 = lower_linop(*parse_expression("f''(z+eta)"), s);
    LinOp e2 =
        LinOp::single(MPoly::var(kFirstParamVar), 2, ExpPoly::from_int(1));
    CHECK(l2 == e2);

    // f^(3)(z) is a third derivative; f^(3) alone is a power of f
    LinOp l3 = lower_linop(*parse_expression("f^(3)(z)"), s);
    LinOp e3 = LinOp::single(ExpArg::zero(), 3, ExpPoly::from_int(1));
    CHECK(l3 == e3);

    LinOp l4 = lower_linop(*parse_expression("f(z-1)"), s);
    LinOp e4 = LinOp::single(ExpArg::from_int(-1), 0, ExpPoly::from_int(1));
    CHECK(l4 == e4);

    // coefficient times f-term, and an inhomogeneous tail
    LinOp l5 = lower_linop(*parse_expression("z*f' - 2*f + z^2"), s);
    LinOp e5;
    e5.add_term(ExpArg::zero(), 1, ExpPoly::z());
    e5.add_term(ExpArg::zero(), 0, ExpPoly::from_int(-2));
    e5.add_inhom(ExpPoly::z() * ExpPoly::z());
    CHECK(l5 == e5);
}

TEST_CASE("the Example 2.2 one-line equation lowers to the file form") {
    ParsedEquation from_line = load_equation("example22_equation.eq");
    ParsedEquation from_file = load_equation("example22.eq");
    CHECK(equations_equal(from_line.equation, from_file.equation));
    CHECK(from_line.equation.n == 2);
    CHECK(from_line.equation.q == ZPoly::monomial(Scalar::one(), 2));
}

TEST_CASE("error paths carry distinct codes") {
    Session s;

    // undeclared parameter
    CHECK_THROWS_AS((void)lower_linop(*parse_expression("f(z+eta)"), s),
                    UndeclaredParameter);

    // bare e
    CHECK_THROWS_AS(parse_expression("e*z"), SyntaxError);

    // non-integer exponents
    CHECK_THROWS_AS(parse_expression("z^z"), NonIntegerExponent);
    CHECK_THROWS_AS(parse_expression("2^(1/2)"), NonIntegerExponent);

    // malformed input with a position
    try {
        parse_expression("z + * 2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 1);
        CHECK(std::string(e.code()) == "SyntaxError");
    }

    // nonlinear f products are outside the class
    CHECK_THROWS_AS((void)lower_linop(*parse_expression("f*f'"), s),
                    InvalidEquation);
    // division must be by an exact constant
    CHECK_THROWS_AS((void)expr("z/(z+1)"), InvalidEquation);
    // division by a sum of exponentials is not invertible
    CHECK_THROWS_AS((void)expr("z/(1+exp(pi))"), NotInvertible);
    // nested exponentials are not representable
    CHECK_THROWS_AS((void)expr("exp(exp(z))"), UnsupportedExponent);

    // equation assembly checks
    Session s2;
    CHECK_THROWS_AS(parse_equation_text("f^2 + f^3 = exp(z)", s2),
                    InvalidEquation);
    CHECK_THROWS_AS(parse_equation_text("2*f^2 = exp(z)", s2), InvalidEquation);
    CHECK_THROWS_AS(parse_equation_text("f + 1 = exp(z)", s2), InvalidEquation);
    // a polynomial right-hand side is the degenerate p = 0 instance
    Equation degenerate = parse_equation_text("f^2 + f = z", s2);
    CHECK(degenerate.p.is_zero());
    CHECK(degenerate.q == ZPoly::monomial(Scalar::one(), 1));
    CHECK(classify(degenerate).tag == VerdictTag::NoEntireSolution_Lemma21);
}

TEST_CASE("bindings substitute at lowering time") {
    ParsedEquation pe = load_equation("example31_eta1.eq");
    // with eta = 1 the shift is the literal constant 1
    bool found = false;
    for (const auto& t : pe.equation.L.op_terms()) {
        if (!t.shift.is_zero()) {
            CHECK(t.shift == ExpArg::from_int(1));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("print/parse round-trip on the fixture corpus") {
    for (const char* name :
         {"example21.eq", "example22.eq", "example31.eq", "remark21.eq",
          "lemma21.eq", "n3.eq", "theorem31_derived.eq",
          "theorem31_perturbed.eq"}) {
        ParsedEquation pe = load_equation(name);
        std::string printed = equation_to_file(pe.equation, pe.session.params);
        ParsedEquation again = parse_equation_file(printed);
        CHECK(equations_equal(pe.equation, again.equation));
    }
}

TEST_CASE("print/parse round-trip on randomized values") {
    Rng rng(90125);
    Session session = two_param_session();

    for (int iter = 0; iter < 200; ++iter) {
        Scalar s = testgen::random_scalar(rng, 2);
        std::string printed = to_string(s, session.params);
        CHECK(lower_scalar(*parse_expression(printed), session) == s);
    }
    for (int iter = 0; iter < 200; ++iter) {
        ExpPoly f = testgen::random_exppoly(rng, 2);
        std::string printed = to_string(f, session.params);
        CHECK(expr(printed, session) == f);
    }
    for (int iter = 0; iter < 100; ++iter) {
        LinOp op = testgen::random_linop(rng, 2);
        std::string printed = to_string(op, session.params);
        CHECK(lower_linop(*parse_expression(printed), session) == op);
    }
}

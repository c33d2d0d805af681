#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ddeq/cli.hpp"
#include "support/fixtures.hpp"

using namespace ddeq;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
    json payload; // parsed stdout when JSON was requested
};

CliResult run(std::vector<std::string> args, bool parse_json = true) {
    std::ostringstream out, err;
    if (parse_json) args.push_back("--json");
    CliResult r;
    r.exit_code = cli_main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    if (parse_json && !r.out.empty()) r.payload = json::parse(r.out);
    return r;
}

std::string fx(const std::string& name) {
    return testfix::fixture_path(name);
}

} // namespace

TEST_CASE("verify: positive and negative paths with exit codes") {
    CliResult ok = run({"verify", fx("example31.eq"), "--f", "exp(z)-z"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.payload["status"] == "Verified");

    CliResult neg = run({"verify", fx("example21.eq"), "--f", "z*exp(z)+z"});
    CHECK(neg.exit_code == 2);
    CHECK(neg.payload["status"] == "NotASolution");
    CHECK(neg.payload.contains("residual"));

    CliResult both = run({"verify", fx("example21.eq"), "--f", "-z*exp(z)+z"});
    CHECK(both.exit_code == 2);
}

TEST_CASE("solve: Example 3.1 and the perturbed variant") {
    CliResult s = run({"solve", fx("example31.eq")});
    CHECK(s.exit_code == 0);
    CHECK(s.payload["status"] == "TwoSolutions");
    CHECK(s.payload["f0"] == "-z");
    REQUIRE(s.payload["solutions"].size() == 2);
    CHECK(s.payload["solutions"][0] == "exp(z) - z");
    CHECK(s.payload["solutions"][1] == "-exp(z) - z");

    CliResult bad = run({"solve", fx("theorem31_perturbed.eq")});
    CHECK(bad.exit_code == 2);
    CHECK(bad.payload["status"] == "NoFiniteOrderSolution");
    CHECK(bad.payload["failed_identity"] == "v-consistency");
    CHECK(bad.payload["residual"] == "1");
}

TEST_CASE("solve: symbolic roots and explicit --c") {
    CliResult sym = run({"solve", fx("theorem31_b2.eq")});
    CHECK(sym.exit_code == 0);
    CHECK(sym.payload["status"] == "SymbolicRoots");
    CHECK(sym.payload["constraint"] == "c^2 = b");

    CliResult bound = run({"solve", fx("theorem31_b4.eq"), "--c", "2"});
    CHECK(bound.exit_code == 0);
    CHECK(bound.payload["status"] == "TwoSolutions");
    CHECK(bound.payload["solutions"][0] == "2*exp(z) + z");

    CliResult wrong = run({"solve", fx("theorem31_b4.eq"), "--c", "3"});
    CHECK(wrong.exit_code == 1);
    json err = json::parse(wrong.err);
    CHECK(err["error"]["code"] == "RootConstraintViolated");
}

TEST_CASE("solve: out-of-scope instances report a distinct code") {
    CliResult r = run({"solve", fx("example22.eq")});
    CHECK(r.exit_code == 1);
    json err = json::parse(r.err);
    CHECK(err["error"]["code"] == "OutOfTheoremScope");
}

TEST_CASE("classify subcommand") {
    CliResult l21 = run({"classify", fx("lemma21.eq")});
    CHECK(l21.exit_code == 0);
    CHECK(l21.payload["verdict"] == "NoEntireSolution_Lemma21");

    CliResult l24 = run({"classify", fx("n3.eq")});
    CHECK(l24.payload["verdict"] == "NoTranscendentalFiniteOrder_Lemma24");

    CliResult n2 = run({"classify", fx("example22.eq")});
    CHECK(n2.payload["verdict"] == "ConstrainedN2");
    CHECK(n2.payload["constraints"]["sigma"] == 1);
    CHECK(n2.payload["constraints"]["lambda_bar"] == 1);
}

TEST_CASE("synthesize reproduces the printed v") {
    CliResult r = run({"synthesize", fx("example31.eq")});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["f0"] == "-z");
    CHECK(r.payload["status"] == "TwoSolutions");

    // --emit v prints just the expression
    std::ostringstream out, err;
    int code = cli_main({"synthesize", fx("example31.eq"), "--emit", "v"}, out,
                        err);
    CHECK(code == 0);
    ParsedEquation pe = testfix::load_equation("example31.eq");
    std::string text = out.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    CHECK(testfix::expr(text, pe.session) ==
          testfix::expr("(2-exp(eta))*exp(-eta)*z^2 + (2*eta-1)*exp(-eta)*z + "
                        "exp(-eta)",
                        pe.session));
}

TEST_CASE("zeros subcommand") {
    CliResult r = run({"zeros", "z^3", "--r", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["results"][0]["count"] == 3);
    CHECK(double(r.payload["results"][0]["pre_rounding_error"]) < 1e-6);

    CliResult multi = run({"zeros", "z*(exp(z)-1)", "--r", "7,10"});
    CHECK(multi.payload["results"][0]["count"] == 4);
    CHECK(multi.payload["results"][1]["count"] == 4);
}

TEST_CASE("growth subcommand with the default schedule") {
    CliResult r = run({"growth", "z*(exp(z)-1)"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["counts"] == json::array({4, 8, 14, 26, 52}));
    double slope = r.payload["lambda_hat"];
    CHECK(slope > 0.9);
    CHECK(slope < 1.1);
    CHECK(r.payload["sigma"] == "1");
    CHECK(r.payload["too_few_zeros"] == false);

    CliResult few = run({"growth", "z*exp(z)"});
    CHECK(few.payload["too_few_zeros"] == true);
    CHECK(double(few.payload["lambda_hat"]) == 0);
    CHECK(few.payload["sigma"] == "1");
}

TEST_CASE("growth with a bound parameter") {
    CliResult r = run({"growth", "z*(exp(z)-exp(eta))", "--param", "eta",
                       "--bind", "eta=1/10", "--radii", "10,20,40,80,160"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload["too_few_zeros"] == false);
}

TEST_CASE("errors surface as machine-readable codes") {
    CliResult missing = run({"verify", fx("no_such.eq"), "--f", "z"});
    CHECK(missing.exit_code == 1);

    CliResult syntax = run({"verify", fx("example22.eq"), "--f", "z+*2"});
    CHECK(syntax.exit_code == 1);
    CHECK(json::parse(syntax.err)["error"]["code"] == "SyntaxError");

    CliResult undeclared = run({"zeros", "exp(alpha*z)", "--r", "1"});
    CHECK(undeclared.exit_code == 1);
    CHECK(json::parse(undeclared.err)["error"]["code"] ==
          "UndeclaredParameter");
}

TEST_CASE("human output and --serial kernel selection") {
    std::ostringstream out, err;
    int code = cli_main({"zeros", "z^3", "--r", "1", "--serial"}, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("n(1) = 3") != std::string::npos);
}

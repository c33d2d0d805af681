#include "ddeq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ddeq/errors.hpp"
#include "ddeq/growth.hpp"
#include "ddeq/printer.hpp"
#include "ddeq/solver.hpp"

namespace ddeq {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw EvaluationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_radii_list(const std::string& spec) {
    std::vector<double> out;
    std::size_t k = 0;
    while (k < spec.size()) {
        std::size_t comma = spec.find(',', k);
        std::string item =
            spec.substr(k, comma == std::string::npos ? comma : comma - k);
        if (!item.empty()) out.push_back(std::stod(item));
        if (comma == std::string::npos) break;
        k = comma + 1;
    }
    return out;
}

// "geometric:start,ratio,count" or a plain comma list.
std::vector<double> parse_radii_schedule(const std::string& spec) {
    if (spec.rfind("geometric:", 0) == 0) {
        auto nums = parse_radii_list(spec.substr(10));
        if (nums.size() != 3)
            throw EvaluationError(
                "geometric schedule needs start,ratio,count");
        std::vector<double> out;
        double r = nums[0];
        for (int k = 0; k < int(nums[2]); ++k, r *= nums[1]) out.push_back(r);
        return out;
    }
    return parse_radii_list(spec);
}

struct CommonOpts {
    bool json = false;
    unsigned precision = 256;
    bool serial = false;
    std::vector<std::string> params;
    std::vector<std::string> binds; // name=expr, numeric
};

Session make_expr_session(const CommonOpts& opts) {
    Session session;
    for (const auto& name : opts.params) session.params.declare(name);
    return session;
}

NumericContext make_context(const CommonOpts& opts, const Session& session) {
    NumericContext ctx(opts.precision);
    ctx.use_parallel = !opts.serial;
    for (const auto& spec : opts.binds) {
        std::size_t eq = spec.find('=');
        if (eq == std::string::npos)
            throw EvaluationError("--bind expects name=expression");
        std::string name = spec.substr(0, eq);
        auto idx = session.params.index_of(name);
        if (!idx)
            throw UndeclaredParameter("binding for undeclared parameter '" +
                                      name + "'");
        Scalar v = lower_scalar(*parse_expression(spec.substr(eq + 1)), session);
        ctx.bind(*idx, eval_numeric(v, ctx));
    }
    return ctx;
}

json verdict_json(const Verdict& v, const ParamSet& params) {
    json out;
    out["verdict"] = verdict_tag_name(v.tag);
    if (v.constraints) {
        out["constraints"] = {{"sigma", v.constraints->sigma_deg},
                              {"lambda_bar", v.constraints->lambda_bar_deg}};
    }
    if (v.residual_witness)
        out["residual"] = to_string(*v.residual_witness, params);
    return out;
}

int emit(std::ostream& os, const json& payload, bool as_json, int code,
         const std::string& human) {
    if (as_json)
        os << payload.dump(2) << "\n";
    else
        os << human << "\n";
    return code;
}

int run_verify(const std::string& file, const std::string& fexpr, bool as_json,
               std::ostream& out) {
    ParsedEquation pe = parse_equation_file(read_file(file));
    ExpPoly f = lower_exppoly(*parse_expression(fexpr), pe.session);
    Verdict v = verify(pe.equation, f);
    json payload = verdict_json(v, pe.session.params);
    payload["command"] = "verify";
    payload["status"] = verdict_tag_name(v.tag);
    bool ok = v.tag == VerdictTag::Verified;
    std::string human =
        ok ? "Verified: residual is exactly 0"
           : "NotASolution: residual = " +
                 to_string(*v.residual_witness, pe.session.params);
    return emit(out, payload, as_json, ok ? 0 : 2, human);
}

int run_classify(const std::string& file, bool as_json, std::ostream& out) {
    ParsedEquation pe = parse_equation_file(read_file(file));
    Verdict v = classify(pe.equation);
    json payload = verdict_json(v, pe.session.params);
    payload["command"] = "classify";
    std::string human = std::string("Classification: ") + verdict_tag_name(v.tag);
    if (v.constraints)
        human += " (sigma = lambda_bar = " +
                 std::to_string(v.constraints->sigma_deg) + ")";
    return emit(out, payload, as_json, 0, human);
}

json solution_set_json(const SolutionSet& s, const ParamSet& params) {
    json payload;
    payload["status"] = solve_status_name(s.status);
    payload["f0"] = to_string(s.f0, params);
    payload["solutions"] = json::array();
    for (const auto& f : s.solutions)
        payload["solutions"].push_back(to_string(f, params));
    if (s.roots) {
        payload["roots"] = {to_string(s.roots->first, params),
                            to_string(s.roots->second, params)};
    }
    if (s.status == SolveStatus::SymbolicRoots)
        payload["constraint"] = "c^2 = b";
    if (s.failed != FailedIdentity::None)
        payload["failed_identity"] = failed_identity_name(s.failed);
    if (s.failing_residual)
        payload["residual"] = to_string(*s.failing_residual, params);
    return payload;
}

int run_solve(const std::string& file, const std::string& c_expr, bool as_json,
              std::ostream& out) {
    ParsedEquation pe = parse_equation_file(read_file(file));
    T31Instance inst = extract_theorem31(pe.equation);
    std::optional<Scalar> c_hint;
    if (!c_expr.empty())
        c_hint = lower_scalar(*parse_expression(c_expr), pe.session);
    SolutionSet s = solve_theorem31(inst, c_hint);
    json payload = solution_set_json(s, pe.session.params);
    payload["command"] = "solve";

    std::string human;
    int code = 0;
    switch (s.status) {
        case SolveStatus::TwoSolutions:
            human = "TwoSolutions: f0 = " + to_string(s.f0, pe.session.params);
            for (const auto& f : s.solutions)
                human += "\n  f = " + to_string(f, pe.session.params);
            break;
        case SolveStatus::SymbolicRoots:
            human = "SymbolicRoots: f = c*exp(...) + f0 with c^2 = b; bind c "
                    "with --c";
            break;
        case SolveStatus::NoFiniteOrderSolution:
            human = std::string("NoFiniteOrderSolution: failed identity = ") +
                    failed_identity_name(s.failed);
            code = 2;
            break;
    }
    return emit(out, payload, as_json, code, human);
}

int run_synthesize(const std::string& file, const std::string& emit_what,
                   bool as_json, std::ostream& out) {
    ParsedEquation pe = parse_equation_file(read_file(file));
    T31Instance inst = extract_theorem31(pe.equation);
    SynthesisResult r =
        synthesize_v(inst.g, inst.h, inst.u, inst.a, inst.b, inst.eta);
    if (emit_what == "v" && !as_json) {
        out << to_string(r.v, pe.session.params) << "\n";
        return 0;
    }
    json payload = solution_set_json(r.solutions, pe.session.params);
    payload["command"] = "synthesize";
    payload["v"] = to_string(r.v, pe.session.params);
    payload["f0"] = to_string(r.f0, pe.session.params);
    std::string human = "v = " + to_string(r.v, pe.session.params) +
                        "\nf0 = " + to_string(r.f0, pe.session.params);
    return emit(out, payload, as_json, 0, human);
}

int run_zeros(const std::string& expr, const std::string& rlist,
              const CommonOpts& opts, std::ostream& out) {
    Session session = make_expr_session(opts);
    ExpPoly f = lower_exppoly(*parse_expression(expr), session);
    NumericContext ctx = make_context(opts, session);
    json results = json::array();
    std::ostringstream human;
    for (double r : parse_radii_list(rlist)) {
        ZeroCountResult zc = zero_count_detailed(f, r, ctx);
        results.push_back({{"r", r},
                           {"count", zc.count},
                           {"pre_rounding_error", zc.pre_rounding_error},
                           {"samples", zc.samples},
                           {"radius_used", zc.radius_used},
                           {"nudges", zc.nudges}});
        human << "n(" << r << ") = " << zc.count << "  [samples " << zc.samples
              << ", error " << zc.pre_rounding_error << "]\n";
    }
    json payload = {{"command", "zeros"}, {"expr", expr}, {"results", results}};
    std::string h = human.str();
    if (!h.empty()) h.pop_back();
    return emit(out, payload, opts.json, 0, h);
}

int run_growth(const std::string& expr, const std::string& schedule,
               const CommonOpts& opts, std::ostream& out) {
    Session session = make_expr_session(opts);
    ExpPoly f = lower_exppoly(*parse_expression(expr), session);
    NumericContext ctx = make_context(opts, session);
    GrowthReport rep = lambda_estimate(f, parse_radii_schedule(schedule), ctx);
    json payload = {{"command", "growth"},
                    {"expr", expr},
                    {"radii", rep.radii},
                    {"counts", rep.counts},
                    {"too_few_zeros", rep.too_few_zeros},
                    {"lambda_hat", rep.lambda_hat},
                    {"lambda_label", "lambda-hat (multiplicity-weighted)"},
                    {"ci", {rep.ci_low, rep.ci_high}},
                    {"sigma", to_string(rep.sigma)},
                    {"hyper_order", to_string(rep.hyper_order)}};
    std::ostringstream human;
    human << "sigma (symbolic order) = " << to_string(rep.sigma)
          << ", hyper-order = " << to_string(rep.hyper_order) << "\n";
    for (std::size_t k = 0; k < rep.radii.size(); ++k)
        human << "n(" << rep.radii[k] << ") = " << rep.counts[k] << "\n";
    if (rep.too_few_zeros)
        human << "too few zeros for a slope; lambda-hat = 0";
    else
        human << "lambda-hat (multiplicity-weighted) = " << rep.lambda_hat
              << "  CI95 [" << rep.ci_low << ", " << rep.ci_high << "]";
    return emit(out, payload, opts.json, 0, human.str());
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "exact verification, classification, closed-form solving and "
        "numeric zero counting for f^n + L(z,f) = q(z)*exp(p(z))"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string eqfile, fexpr, cexpr, expr, rlist;
    std::string radii = "geometric:10,2,5";
    std::string emit_what;

    auto add_common = [&](CLI::App* cmd, bool numeric) {
        cmd->add_flag("--json", opts.json, "emit the stable JSON report");
        if (numeric) {
            cmd->add_option("--precision", opts.precision,
                            "working precision in bits (>= 64)");
            cmd->add_flag("--serial", opts.serial,
                          "force the serial quadrature kernel");
            cmd->add_option("--param", opts.params,
                            "declare a formal parameter");
            cmd->add_option("--bind", opts.binds,
                            "bind a parameter numerically: name=expr");
        }
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "check f exactly");
    verify_cmd->add_option("eqfile", eqfile)->required();
    verify_cmd->add_option("--f", fexpr, "candidate solution")->required();
    add_common(verify_cmd, false);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "apply the classification rules");
    classify_cmd->add_option("eqfile", eqfile)->required();
    add_common(classify_cmd, false);

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "closed-form solutions (n = 2, RHS b*e^(az))");
    solve_cmd->add_option("eqfile", eqfile)->required();
    solve_cmd->add_option("--c", cexpr, "explicit root with c^2 = b");
    add_common(solve_cmd, false);

    CLI::App* synth_cmd = app.add_subcommand(
        "synthesize", "reconstruct the v making the instance solvable");
    synth_cmd->add_option("eqfile", eqfile)->required();
    synth_cmd->add_option("--emit", emit_what, "emit a single field (v)");
    add_common(synth_cmd, false);

    CLI::App* zeros_cmd =
        app.add_subcommand("zeros", "argument-principle zero counts");
    zeros_cmd->add_option("expr", expr)->required();
    zeros_cmd->add_option("--r", rlist, "comma-separated radii")->required();
    add_common(zeros_cmd, true);

    CLI::App* growth_cmd =
        app.add_subcommand("growth", "zero counts and lambda regression");
    growth_cmd->add_option("expr", expr)->required();
    growth_cmd->add_option("--radii", radii,
                           "schedule: geometric:start,ratio,count or a list");
    add_common(growth_cmd, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(verify_cmd))
            return run_verify(eqfile, fexpr, opts.json, out);
        if (app.got_subcommand(classify_cmd))
            return run_classify(eqfile, opts.json, out);
        if (app.got_subcommand(solve_cmd))
            return run_solve(eqfile, cexpr, opts.json, out);
        if (app.got_subcommand(synth_cmd))
            return run_synthesize(eqfile, emit_what, opts.json, out);
        if (app.got_subcommand(zeros_cmd))
            return run_zeros(expr, rlist, opts, out);
        if (app.got_subcommand(growth_cmd))
            return run_growth(expr, radii, opts, out);
    } catch (const Error& e) {
        json payload = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        if (opts.json)
            err << payload.dump(2) << "\n";
        else
            err << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand selected\n";
    return 1;
}

} // namespace ddeq

#include "ddeq/printer.hpp"

#include <sstream>

namespace ddeq {

namespace {

// True when s would change meaning as a factor of a product: any top-level
// + or - past the first character (a leading sign is fine, unary minus binds
// tighter than * in the grammar).
bool needs_parens_as_factor(const std::string& s) {
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

std::string parenthesize_factor(const std::string& s) {
    return needs_parens_as_factor(s) ? "(" + s + ")" : s;
}

std::string join_terms(const std::vector<std::string>& pieces) {
    if (pieces.empty()) return "0";
    std::string out = pieces.front();
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        const std::string& p = pieces[k];
        if (!p.empty() && p[0] == '-')
            out += " - " + p.substr(1);
        else
            out += " + " + p;
    }
    return out;
}

std::string var_name(unsigned v, const ParamSet& params) {
    if (v == kPiVar) return "pi";
    return params.name(v - kFirstParamVar);
}

std::string monomial_to_string(const Monomial& m, const ParamSet& params) {
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        std::string f = var_name(unsigned(v), params);
        if (m.exps[v] > 1) f += "^" + std::to_string(m.exps[v]);
        factors.push_back(f);
    }
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k)
        out += (k ? "*" : "") + factors[k];
    return out;
}

} // namespace

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string to_string(const GaussRat& g) {
    if (g.im == 0) return to_string(g.re);
    std::string imag;
    if (g.im == 1) imag = "i";
    else if (g.im == -1) imag = "-i";
    else imag = to_string(g.im) + "*i";
    if (g.re == 0) return imag;
    std::string out = to_string(g.re);
    if (imag[0] == '-')
        out += " - " + imag.substr(1);
    else
        out += " + " + imag;
    return out;
}

std::string to_string(const MPoly& p, const ParamSet& params) {
    std::vector<std::string> pieces;
    for (const auto& [mono, coeff] : p.terms()) {
        std::string ms = monomial_to_string(mono, params);
        if (ms.empty()) {
            pieces.push_back(to_string(coeff));
        } else if (coeff.is_one()) {
            pieces.push_back(ms);
        } else if ((-coeff).is_one()) {
            pieces.push_back("-" + ms);
        } else {
            pieces.push_back(parenthesize_factor(to_string(coeff)) + "*" + ms);
        }
    }
    return join_terms(pieces);
}

std::string to_string(const RatFunc& r, const ParamSet& params) {
    std::string num = to_string(r.num(), params);
    if (r.is_polynomial()) return num;
    return parenthesize_factor(num) + "/(" + to_string(r.den(), params) + ")";
}

std::string to_string(const Scalar& s, const ParamSet& params) {
    std::vector<std::string> pieces;
    for (const auto& [arg, coeff] : s.terms()) {
        if (arg.is_zero()) {
            pieces.push_back(to_string(coeff, params));
            continue;
        }
        std::string e = "exp(" + to_string(arg, params) + ")";
        if (coeff.is_one()) {
            pieces.push_back(e);
        } else if ((-coeff).is_one()) {
            pieces.push_back("-" + e);
        } else {
            pieces.push_back(parenthesize_factor(to_string(coeff, params)) +
                             "*" + e);
        }
    }
    return join_terms(pieces);
}

namespace {

bool scalar_is_one(const Scalar& s) { return s == Scalar::one(); }
bool scalar_is_minus_one(const Scalar& s) { return s == -Scalar::one(); }

std::string z_power(std::size_t k) {
    return k == 1 ? "z" : "z^" + std::to_string(k);
}

} // namespace

std::string to_string(const ZPoly& p, const ParamSet& params) {
    std::vector<std::string> pieces;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Scalar& c = p.coeffs()[k];
        if (c.structurally_zero()) continue;
        if (k == 0) {
            pieces.push_back(to_string(c, params));
        } else if (scalar_is_one(c)) {
            pieces.push_back(z_power(k));
        } else if (scalar_is_minus_one(c)) {
            pieces.push_back("-" + z_power(k));
        } else {
            pieces.push_back(parenthesize_factor(to_string(c, params)) + "*" +
                             z_power(k));
        }
    }
    return join_terms(pieces);
}

std::string to_string(const ExpPoly& f, const ParamSet& params) {
    std::vector<std::string> pieces;
    for (const auto& [q, p] : f.terms()) {
        if (q.is_zero()) {
            pieces.push_back(to_string(p, params));
            continue;
        }
        std::string e = "exp(" + to_string(q, params) + ")";
        if (p == ZPoly::from_int(1)) {
            pieces.push_back(e);
        } else if (p == ZPoly::from_int(-1)) {
            pieces.push_back("-" + e);
        } else {
            pieces.push_back(parenthesize_factor(to_string(p, params)) + "*" +
                             e);
        }
    }
    return join_terms(pieces);
}

namespace {

std::string f_factor(unsigned dorder, const ExpArg& shift,
                     const ParamSet& params) {
    std::string base = "f";
    if (dorder == 1) base += "'";
    else if (dorder == 2) base += "''";
    else if (dorder >= 3) base += "^(" + std::to_string(dorder) + ")";

    if (shift.is_zero()) {
        // f^(k) without an argument would parse as a power; spell out (z).
        return dorder >= 3 ? base + "(z)" : base;
    }
    std::string s = to_string(shift, params);
    if (!s.empty() && s[0] == '-') return base + "(z" + s + ")";
    return base + "(z+" + s + ")";
}

} // namespace

std::string to_string(const LinOp& op, const ParamSet& params) {
    std::vector<std::string> pieces;
    for (const auto& t : op.op_terms()) {
        std::string fp = f_factor(t.dorder, t.shift, params);
        if (t.coeff == ExpPoly::from_int(1)) {
            pieces.push_back(fp);
        } else if (t.coeff == ExpPoly::from_int(-1)) {
            pieces.push_back("-" + fp);
        } else {
            pieces.push_back(parenthesize_factor(to_string(t.coeff, params)) +
                             "*" + fp);
        }
    }
    if (!op.inhom().structurally_zero())
        pieces.push_back(to_string(op.inhom(), params));
    return join_terms(pieces);
}

std::string equation_to_file(const Equation& eq, const ParamSet& params) {
    std::ostringstream os;
    if (params.size() > 0) {
        os << "params = ";
        for (std::size_t k = 0; k < params.size(); ++k)
            os << (k ? ", " : "") << params.name(unsigned(k));
        os << "\n";
    }
    os << "n = " << eq.n << "\n";
    os << "L = " << to_string(eq.L, params) << "\n";
    os << "q = " << to_string(eq.q, params) << "\n";
    os << "p = " << to_string(eq.p, params) << "\n";
    return os.str();
}

} // namespace ddeq

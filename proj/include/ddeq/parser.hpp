#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ddeq/equation.hpp"

namespace ddeq {

/// Ordered set of declared formal parameters (e.g. "eta"); immutable after
/// the session is built. Indices feed Monomial variable slots.
class ParamSet {
public:
    unsigned declare(const std::string& name);
    std::optional<unsigned> index_of(const std::string& name) const;
    const std::string& name(unsigned index) const { return names_.at(index); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

/// Parse/lowering state: declared parameters plus optional exact-constant
/// bindings. A bound parameter lowers directly to its value.
struct Session {
    ParamSet params;
    std::map<unsigned, ExpArg> bindings;
};

/// Expression tree over literals, z, i, pi, parameters, exp, f-terms and the
/// arithmetic operators. Pow keeps its integer exponent inline; FTerm keeps
/// the derivative order and an optional shift subtree.
struct Ast {
    enum class Kind {
        Integer,
        ImagUnit,
        Pi,
        Param,
        Z,
        Exp,
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Pow,
        FTerm,
    };

    Kind kind;
    Int value;          // Integer
    std::string name;   // Param
    long exponent = 0;  // Pow
    unsigned dorder = 0; // FTerm
    std::unique_ptr<Ast> lhs; // binary left / unary child / FTerm shift
    std::unique_ptr<Ast> rhs; // binary right
    int line = 1, column = 1;
};

std::unique_ptr<Ast> parse_expression(const std::string& text);

/// Lower to an exponential polynomial; f-terms are rejected.
ExpPoly lower_exppoly(const Ast& ast, const Session& session);

/// Lower to an exact constant; z and f-terms are rejected.
Scalar lower_scalar(const Ast& ast, const Session& session);

/// Lower an f-linear expression to an operator; the f-free part becomes the
/// inhomogeneous term.
LinOp lower_linop(const Ast& ast, const Session& session);

struct ParsedEquation {
    Session session;
    Equation equation;
};

/// Equation file: `params = ...` and `bindings name = ...` headers followed
/// by either assignment form (n =, L =, q =, p =) or a single equation line
/// `<f-expression> = <rhs>`. Lines starting with # are comments.
ParsedEquation parse_equation_file(const std::string& text);

/// Single-string equation form parsed inside an existing session.
Equation parse_equation_text(const std::string& text, const Session& session);

} // namespace ddeq

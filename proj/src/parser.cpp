#include "ddeq/parser.hpp"

#include <algorithm>
#include <cctype>

#include "ddeq/errors.hpp"

namespace ddeq {

unsigned ParamSet::declare(const std::string& name) {
    static const std::vector<std::string> reserved = {
        "z", "i", "pi", "exp", "e", "f", "n", "L", "q", "p",
        "params", "bindings"};
    if (std::find(reserved.begin(), reserved.end(), name) != reserved.end())
        throw InvalidEquation("'" + name + "' is reserved and cannot be a parameter");
    if (index_of(name))
        throw InvalidEquation("parameter '" + name + "' declared twice");
    names_.push_back(name);
    return unsigned(names_.size() - 1);
}

std::optional<unsigned> ParamSet::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return unsigned(k);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Integer,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Prime,
    Equals,
    End,
};

struct Token {
    Tok kind;
    Int value;        // Integer
    std::string text; // Ident
    int line, column;
};

std::vector<Token> tokenize(const std::string& text, int line_offset = 1) {
    std::vector<Token> out;
    int line = line_offset, col = 1;
    std::size_t k = 0;
    auto push = [&](Tok t) { out.push_back({t, Int(0), "", line, col}); };
    while (k < text.size()) {
        char c = text[k];
        if (c == '\n') {
            ++line;
            col = 1;
            ++k;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++k;
            continue;
        }
        int start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (k < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[k]))) {
                digits += text[k++];
                ++col;
            }
            out.push_back({Tok::Integer, Int(digits), "", line, start_col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) ||
                    text[k] == '_')) {
                ident += text[k++];
                ++col;
            }
            out.push_back({Tok::Ident, Int(0), ident, line, start_col});
            continue;
        }
        switch (c) {
            case '+': push(Tok::Plus); break;
            case '-': push(Tok::Minus); break;
            case '*': push(Tok::Star); break;
            case '/': push(Tok::Slash); break;
            case '^': push(Tok::Caret); break;
            case '(': push(Tok::LParen); break;
            case ')': push(Tok::RParen); break;
            case ',': push(Tok::Comma); break;
            case '\'': push(Tok::Prime); break;
            case '=': push(Tok::Equals); break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c +
                                      "'",
                                  line, col);
        }
        ++k;
        ++col;
    }
    out.push_back({Tok::End, Int(0), "", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    std::unique_ptr<Ast> parse_full() {
        auto e = parse_sum();
        expect_end();
        return e;
    }

    std::unique_ptr<Ast> parse_sum() {
        auto lhs = parse_product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok op = next().kind;
            auto rhs = parse_product();
            lhs = make_binary(op == Tok::Plus ? Ast::Kind::Add : Ast::Kind::Sub,
                              std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    bool at_end() const { return peek().kind == Tok::End; }
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }

private:
    std::unique_ptr<Ast> parse_product() {
        auto lhs = parse_unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Tok op = next().kind;
            auto rhs = parse_unary();
            lhs = make_binary(op == Tok::Star ? Ast::Kind::Mul : Ast::Kind::Div,
                              std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    std::unique_ptr<Ast> parse_unary() {
        if (peek().kind == Tok::Minus) {
            const Token& t = next();
            auto node = make(Ast::Kind::Neg, t);
            node->lhs = parse_unary();
            return node;
        }
        return parse_postfix();
    }

    std::unique_ptr<Ast> parse_postfix() {
        auto base = parse_atom();
        if (peek().kind == Tok::Caret) {
            const Token& caret = next();
            auto node = make(Ast::Kind::Pow, caret);
            node->exponent = parse_integer_exponent();
            node->lhs = std::move(base);
            return node;
        }
        return base;
    }

    // `^` exponents are integer literals, optionally signed and optionally
    // parenthesized.
    long parse_integer_exponent() {
        bool parens = false;
        if (peek().kind == Tok::LParen) {
            parens = true;
            next();
        }
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            negative = true;
            next();
        }
        const Token& t = peek();
        if (t.kind != Tok::Integer)
            throw NonIntegerExponent("exponent must be an integer literal");
        next();
        if (parens) {
            if (peek().kind != Tok::RParen)
                throw NonIntegerExponent(
                    "exponent must be an integer literal");
            next();
        }
        long v = long(t.value);
        return negative ? -v : v;
    }

    std::unique_ptr<Ast> parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                next();
                auto node = make(Ast::Kind::Integer, t);
                node->value = t.value;
                return node;
            }
            case Tok::LParen: {
                next();
                auto inner = parse_sum();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                return parse_ident(t);
            default:
                throw SyntaxError("expected an expression", t.line, t.column);
        }
    }

    std::unique_ptr<Ast> parse_ident(const Token& t) {
        next();
        if (t.text == "z") return make(Ast::Kind::Z, t);
        if (t.text == "i") return make(Ast::Kind::ImagUnit, t);
        if (t.text == "pi") return make(Ast::Kind::Pi, t);
        if (t.text == "exp") {
            expect(Tok::LParen, "'(' after exp");
            auto node = make(Ast::Kind::Exp, t);
            node->lhs = parse_sum();
            expect(Tok::RParen, "')'");
            return node;
        }
        if (t.text == "e") {
            // e^(<arg>) is sugar for exp(<arg>); a bare `e` is reserved so
            // Euler's number is always written exp(1).
            if (peek().kind == Tok::Caret && peek(1).kind == Tok::LParen) {
                next(); // ^
                next(); // (
                auto node = make(Ast::Kind::Exp, t);
                node->lhs = parse_sum();
                expect(Tok::RParen, "')'");
                return node;
            }
            throw SyntaxError("write exp(1) for Euler's number (bare 'e' is "
                              "not a token)",
                              t.line, t.column);
        }
        if (t.text == "f") return parse_fterm(t);
        auto node = make(Ast::Kind::Param, t);
        node->name = t.text;
        return node;
    }

    // f, f', f''..., f(z+c), f'(z+c), f^(k)(z+c). A parenthesized `^(k)`
    // without a following argument list is an ordinary power of f.
    std::unique_ptr<Ast> parse_fterm(const Token& t) {
        auto node = make(Ast::Kind::FTerm, t);
        while (peek().kind == Tok::Prime) {
            next();
            ++node->dorder;
        }
        if (node->dorder == 0 && peek().kind == Tok::Caret &&
            peek(1).kind == Tok::LParen && peek(2).kind == Tok::Integer &&
            peek(3).kind == Tok::RParen && peek(4).kind == Tok::LParen) {
            next(); // ^
            next(); // (
            node->dorder = unsigned(long(peek().value));
            next(); // k
            next(); // )
        }
        if (peek().kind == Tok::LParen) {
            next();
            const Token& zt = peek();
            if (!(zt.kind == Tok::Ident && zt.text == "z"))
                throw SyntaxError("f argument must start with z", zt.line,
                                  zt.column);
            next();
            if (peek().kind == Tok::Plus) {
                next();
                node->lhs = parse_sum();
            } else if (peek().kind == Tok::Minus) {
                // leave the minus for the unary parser so later +/- terms
                // keep their own signs
                node->lhs = parse_sum();
            }
            expect(Tok::RParen, "')'");
        }
        return node;
    }

    std::unique_ptr<Ast> make(Ast::Kind kind, const Token& t) {
        auto node = std::make_unique<Ast>();
        node->kind = kind;
        node->line = t.line;
        node->column = t.column;
        return node;
    }

    std::unique_ptr<Ast> make_binary(Ast::Kind kind, std::unique_ptr<Ast> lhs,
                                     std::unique_ptr<Ast> rhs) {
        auto node = std::make_unique<Ast>();
        node->kind = kind;
        node->line = lhs->line;
        node->column = lhs->column;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    const Token& next() { return toks_[pos_++]; }

    void expect(Tok kind, const char* what) {
        const Token& t = peek();
        if (t.kind != kind)
            throw SyntaxError(std::string("expected ") + what, t.line,
                              t.column);
        next();
    }

    void expect_end() {
        const Token& t = peek();
        if (t.kind != Tok::End)
            throw SyntaxError("unexpected trailing input", t.line, t.column);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

std::unique_ptr<Ast> parse_expression(const std::string& text) {
    Parser parser(tokenize(text));
    return parser.parse_full();
}

// ---------------------------------------------------------------------------
// Lowering

namespace {

// Key of a degree-1 f-term: derivative order and exact shift.
struct FKey {
    unsigned dorder;
    ExpArg shift;
    bool operator<(const FKey& o) const {
        if (int c = mpoly_cmp(shift, o.shift)) return c < 0;
        return dorder < o.dorder;
    }
};

// Lowered value: polynomial in the f-terms of total degree <= 1, plus the
// single allowed pure power f^n.
struct FValue {
    ExpPoly free;
    std::map<FKey, ExpPoly> linear;
    std::map<unsigned, ExpPoly> powers;

    bool is_free() const { return linear.empty() && powers.empty(); }
    bool is_bare_f() const {
        return powers.empty() && free.structurally_zero() &&
               linear.size() == 1 && linear.begin()->first.dorder == 0 &&
               linear.begin()->first.shift.is_zero() &&
               linear.begin()->second == ExpPoly::from_int(1);
    }
};

FValue fv_from(const ExpPoly& e) {
    FValue v;
    v.free = e;
    return v;
}

FValue fv_neg(FValue v) {
    v.free = -v.free;
    for (auto& [k, c] : v.linear) c = -c;
    for (auto& [k, c] : v.powers) c = -c;
    return v;
}

FValue fv_add(FValue a, const FValue& b) {
    a.free += b.free;
    for (const auto& [k, c] : b.linear) {
        auto it = a.linear.find(k);
        if (it == a.linear.end()) {
            a.linear.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.structurally_zero()) a.linear.erase(it);
        }
    }
    for (const auto& [k, c] : b.powers) {
        auto it = a.powers.find(k);
        if (it == a.powers.end()) {
            a.powers.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.structurally_zero()) a.powers.erase(it);
        }
    }
    return a;
}

FValue fv_scale(FValue v, const ExpPoly& s) {
    v.free *= s;
    for (auto& [k, c] : v.linear) c *= s;
    for (auto& [k, c] : v.powers) c *= s;
    // Scaling by zero drops everything.
    std::erase_if(v.linear,
                  [](const auto& kv) { return kv.second.structurally_zero(); });
    std::erase_if(v.powers,
                  [](const auto& kv) { return kv.second.structurally_zero(); });
    if (s.structurally_zero()) v.free = ExpPoly::zero();
    return v;
}

FValue fv_mul(const FValue& a, const FValue& b) {
    if (a.is_free()) return fv_scale(b, a.free);
    if (b.is_free()) return fv_scale(a, b.free);
    throw InvalidEquation(
        "products of f-terms other than the single power f^n are outside the "
        "equation class");
}

Scalar fv_to_scalar(const FValue& v, const char* what) {
    if (!v.is_free())
        throw InvalidEquation(std::string(what) + " must not contain f");
    auto zp = v.free.as_zpoly();
    if (!zp || zp->degree() > 0)
        throw InvalidEquation(std::string(what) + " must be an exact constant");
    return zp->constant_term();
}

FValue fv_div(FValue a, const FValue& b) {
    Scalar divisor = fv_to_scalar(b, "a divisor");
    return fv_scale(std::move(a),
                    ExpPoly::from_scalar(divisor.inverse()));
}

FValue fv_pow(const FValue& base, long k) {
    if (base.is_bare_f()) {
        if (k < 1)
            throw InvalidEquation("f^k requires a positive integer k");
        FValue v;
        if (k == 1) {
            return FValue{ExpPoly::zero(),
                          {{FKey{0, ExpArg::zero()}, ExpPoly::from_int(1)}},
                          {}};
        }
        v.powers.emplace(unsigned(k), ExpPoly::from_int(1));
        return v;
    }
    if (!base.is_free())
        throw InvalidEquation(
            "only the bare f may be raised to a power in the equation class");
    if (k >= 0) return fv_from(base.free.pow(unsigned(k)));
    Scalar s = fv_to_scalar(base, "a negative-power base");
    return fv_from(ExpPoly::from_scalar(s.inverse().pow(unsigned(-k))));
}

class Lowerer {
public:
    explicit Lowerer(const Session& session) : session_(session) {}

    FValue lower(const Ast& ast) const {
        switch (ast.kind) {
            case Ast::Kind::Integer: {
                Scalar s = Scalar::from_rat(Rat(ast.value));
                return fv_from(ExpPoly::from_scalar(s));
            }
            case Ast::Kind::ImagUnit:
                return fv_from(ExpPoly::from_scalar(Scalar::imag_unit()));
            case Ast::Kind::Pi:
                return fv_from(ExpPoly::from_scalar(Scalar::pi()));
            case Ast::Kind::Z:
                return fv_from(ExpPoly::z());
            case Ast::Kind::Param: {
                auto idx = session_.params.index_of(ast.name);
                if (!idx)
                    throw UndeclaredParameter("parameter '" + ast.name +
                                              "' is not declared");
                auto bound = session_.bindings.find(*idx);
                Scalar s = bound != session_.bindings.end()
                               ? Scalar::from_coeff(RatFunc::from(bound->second))
                               : Scalar::param(*idx);
                return fv_from(ExpPoly::from_scalar(s));
            }
            case Ast::Kind::Exp: {
                FValue inner = lower(*ast.lhs);
                if (!inner.is_free())
                    throw InvalidEquation("exp of an f-term is not supported");
                auto zp = inner.free.as_zpoly();
                if (!zp)
                    throw UnsupportedExponent(
                        "nested exponentials are not representable");
                return fv_from(ExpPoly::exp_term(*zp, ZPoly::from_int(1)));
            }
            case Ast::Kind::Add:
                return fv_add(lower(*ast.lhs), lower(*ast.rhs));
            case Ast::Kind::Sub:
                return fv_add(lower(*ast.lhs), fv_neg(lower(*ast.rhs)));
            case Ast::Kind::Mul:
                return fv_mul(lower(*ast.lhs), lower(*ast.rhs));
            case Ast::Kind::Div:
                return fv_div(lower(*ast.lhs), lower(*ast.rhs));
            case Ast::Kind::Neg:
                return fv_neg(lower(*ast.lhs));
            case Ast::Kind::Pow:
                return fv_pow(lower(*ast.lhs), ast.exponent);
            case Ast::Kind::FTerm: {
                ExpArg shift = ExpArg::zero();
                if (ast.lhs) {
                    Scalar s = fv_to_scalar(lower(*ast.lhs), "a shift");
                    auto arg = s.as_exparg();
                    if (!arg)
                        throw InvalidEquation(
                            "shifts must be polynomial in pi and the declared "
                            "parameters");
                    shift = *arg;
                }
                FValue v;
                v.linear.emplace(FKey{ast.dorder, std::move(shift)},
                                 ExpPoly::from_int(1));
                return v;
            }
        }
        throw InvalidEquation("unreachable ast node");
    }

private:
    const Session& session_;
};

LinOp fvalue_to_linop(const FValue& v) {
    if (!v.powers.empty())
        throw InvalidEquation("an operator must be linear in f");
    LinOp op;
    for (const auto& [key, coeff] : v.linear)
        op.add_term(key.shift, key.dorder, coeff);
    op.add_inhom(v.free);
    return op;
}

Equation assemble_equation(const FValue& lhs, const FValue& rhs) {
    if (!rhs.is_free())
        throw InvalidEquation("the right-hand side must not contain f");
    if (lhs.powers.size() != 1)
        throw InvalidEquation(
            "the left-hand side must contain exactly one power f^n, n >= 2");
    const auto& [n, pc] = *lhs.powers.begin();
    if (pc != ExpPoly::from_int(1))
        throw InvalidEquation("the coefficient of f^n must be exactly 1");

    Equation eq;
    eq.n = n;
    FValue lin = lhs;
    lin.powers.clear();
    eq.L = fvalue_to_linop(lin);

    if (auto zp = rhs.free.as_zpoly()) {
        // Degenerate constant-exponent right-hand side: q * exp(0).
        eq.q = *zp;
        eq.p = ZPoly::zero();
        return eq;
    }
    if (rhs.free.term_count() != 1)
        throw InvalidEquation(
            "the right-hand side must be a single term q(z)*exp(p(z))");
    const auto& [p, q] = *rhs.free.terms().begin();
    eq.q = q;
    eq.p = p;
    return eq;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool contains_f_term(const std::string& line) {
    // A lone identifier `f` outside any longer name.
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] != 'f') continue;
        bool left_ok = k == 0 || (!std::isalnum(static_cast<unsigned char>(
                                      line[k - 1])) &&
                                  line[k - 1] != '_');
        bool right_ok =
            k + 1 >= line.size() ||
            (!std::isalnum(static_cast<unsigned char>(line[k + 1])) &&
             line[k + 1] != '_');
        if (left_ok && right_ok) return true;
    }
    return false;
}

} // namespace

ExpPoly lower_exppoly(const Ast& ast, const Session& session) {
    FValue v = Lowerer(session).lower(ast);
    if (!v.is_free())
        throw InvalidEquation("expected an expression without f-terms");
    return v.free;
}

Scalar lower_scalar(const Ast& ast, const Session& session) {
    return fv_to_scalar(Lowerer(session).lower(ast), "this expression");
}

LinOp lower_linop(const Ast& ast, const Session& session) {
    return fvalue_to_linop(Lowerer(session).lower(ast));
}

Equation parse_equation_text(const std::string& text, const Session& session) {
    std::size_t eq_pos = text.find('=');
    if (eq_pos == std::string::npos)
        throw InvalidEquation("an equation needs '=' between its sides");
    auto lhs_ast = parse_expression(text.substr(0, eq_pos));
    auto rhs_ast = parse_expression(text.substr(eq_pos + 1));
    Lowerer lw(session);
    return assemble_equation(lw.lower(*lhs_ast), lw.lower(*rhs_ast));
}

ParsedEquation parse_equation_file(const std::string& text) {
    ParsedEquation out;
    std::optional<long> n;
    std::optional<LinOp> L;
    std::optional<ZPoly> q, p;
    std::optional<Equation> whole;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string line =
            trim(text.substr(pos, end == std::string::npos ? end : end - pos));
        pos = end == std::string::npos ? text.size() + 1 : end + 1;
        if (line.empty() || line[0] == '#') continue;

        std::size_t eq_pos = line.find('=');
        if (eq_pos == std::string::npos)
            throw InvalidEquation("expected 'key = value': " + line);
        std::string key = trim(line.substr(0, eq_pos));
        std::string value = trim(line.substr(eq_pos + 1));

        if (key == "params") {
            std::size_t k = 0;
            while (k < value.size()) {
                std::size_t comma = value.find(',', k);
                std::string name = trim(value.substr(
                    k, comma == std::string::npos ? comma : comma - k));
                if (!name.empty()) out.session.params.declare(name);
                if (comma == std::string::npos) break;
                k = comma + 1;
            }
        } else if (key.rfind("bindings", 0) == 0) {
            std::string name = trim(key.substr(8));
            auto idx = out.session.params.index_of(name);
            if (!idx)
                throw UndeclaredParameter("binding for undeclared parameter '" +
                                          name + "'");
            Scalar v = lower_scalar(*parse_expression(value), out.session);
            auto arg = v.as_exparg();
            if (!arg)
                throw InvalidEquation(
                    "bindings must be polynomial in pi and other parameters");
            out.session.bindings[*idx] = *arg;
        } else if (key == "n") {
            auto ast = parse_expression(value);
            if (ast->kind != Ast::Kind::Integer)
                throw InvalidEquation("n must be an integer literal");
            n = long(ast->value);
        } else if (key == "L") {
            L = lower_linop(*parse_expression(value), out.session);
        } else if (key == "q") {
            auto ep = lower_exppoly(*parse_expression(value), out.session);
            auto zp = ep.as_zpoly();
            if (!zp) throw InvalidEquation("q must be polynomial in z");
            q = *zp;
        } else if (key == "p") {
            auto ep = lower_exppoly(*parse_expression(value), out.session);
            auto zp = ep.as_zpoly();
            if (!zp) throw InvalidEquation("p must be polynomial in z");
            p = *zp;
        } else if (contains_f_term(line)) {
            whole = parse_equation_text(line, out.session);
        } else {
            throw InvalidEquation("unrecognized line: " + line);
        }
    }

    if (whole) {
        if (n || L || q || p)
            throw InvalidEquation(
                "mix of single-equation form and n/L/q/p assignments");
        out.equation = std::move(*whole);
        return out;
    }
    if (!n) throw InvalidEquation("missing 'n = ...'");
    if (*n < 2) throw InvalidEquation("n must be at least 2");
    out.equation.n = unsigned(*n);
    out.equation.L = L ? std::move(*L) : LinOp::zero();
    if (!q) throw InvalidEquation("missing 'q = ...'");
    if (!p) throw InvalidEquation("missing 'p = ...'");
    out.equation.q = std::move(*q);
    out.equation.p = std::move(*p);
    return out;
}

} // namespace ddeq

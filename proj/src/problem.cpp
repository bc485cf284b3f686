#include "ctel/problem.hpp"

#include <cctype>
#include <map>

namespace ctel {

const DiffOp& Problem::named_operator() const {
    if (kind == Kind::Reduce) return M;
    if (!L_declared) throw std::logic_error("telescope problem without an operator");
    return *L_declared;
}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Colon, Equal, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    std::string src;
    size_t pos = 0;
    int line = 1, col = 1;
    std::vector<Token> tokens;

    void error(const std::string& msg) const { throw ParseError(line, col, msg); }

    void run() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') advance();
                continue;
            }
            if (std::isspace((unsigned char)c)) {
                advance();
                continue;
            }
            int l = line, co = col;
            if (std::isalpha((unsigned char)c) || c == '_') {
                std::string id;
                while (pos < src.size() &&
                       (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
                    id += src[pos];
                    advance();
                }
                tokens.push_back({Tok::Ident, id, l, co});
                continue;
            }
            if (std::isdigit((unsigned char)c)) {
                std::string num;
                while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
                    num += src[pos];
                    advance();
                }
                tokens.push_back({Tok::Int, num, l, co});
                continue;
            }
            Tok k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case ':': k = Tok::Colon; break;
                case '=': k = Tok::Equal; break;
                case ';': k = Tok::Semi; break;
                default:
                    if ((unsigned char)c >= 0x80)
                        error("non-ASCII character (unicode superscripts are not accepted)");
                    error(std::string("unexpected character '") + c + "'");
                    return;
            }
            tokens.push_back({k, std::string(1, c), l, co});
            advance();
        }
        tokens.push_back({Tok::End, "", line, col});
    }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

const char* kKeywords[] = {"params", "ore", "var", "L", "rel", "reduce", "by"};

bool is_keyword(const Token& t) {
    if (t.kind != Tok::Ident) return false;
    for (auto* k : kKeywords)
        if (t.text == k) return true;
    return false;
}

struct Env {
    std::map<std::string, int> params;  // name -> index
    int nparams = 0;
    std::string var;
    std::map<std::string, int> ores;  // name -> index
};

struct Parser {
    std::vector<Token> ts;
    size_t i = 0;
    Env env;

    const Token& peek() const { return ts[i]; }
    Token next() { return ts[i++]; }
    [[noreturn]] void error(const Token& t, const std::string& msg) const {
        throw ParseError(t.line, t.col, msg);
    }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++i;
            return true;
        }
        return false;
    }
    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k) error(peek(), "expected " + what);
        return next();
    }
    Token expect_ident(const std::string& what) { return expect(Tok::Ident, what); }

    // --- expressions over +,-,*,/,^ producing operators ---

    bool at_expr_end() const {
        const Token& t = peek();
        return t.kind == Tok::End || t.kind == Tok::Semi || is_keyword(t) ||
               t.kind == Tok::RParen || t.kind == Tok::Comma || t.kind == Tok::Colon;
    }

    DiffOp parse_expr() {
        DiffOp a = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool plus = next().kind == Tok::Plus;
            DiffOp b = parse_term();
            a = plus ? a + b : a - b;
        }
        return a;
    }

    DiffOp parse_term() {
        DiffOp a = parse_factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Token op = next();
            DiffOp b = parse_factor();
            if (op.kind == Tok::Star) {
                a = op_mul(a, b);
            } else {
                if (b.order() > 0)
                    error(op, "nonlinear use of Dx: division by an operator");
                if (b.is_zero()) error(op, "division by zero");
                a = op_mul(a, DiffOp::mult(b.coeff(0).inv()));
            }
        }
        return a;
    }

    DiffOp parse_factor() {
        if (peek().kind == Tok::Minus) {
            next();
            return -parse_factor();
        }
        return parse_power();
    }

    DiffOp parse_power() {
        DiffOp a = parse_atom();
        if (accept(Tok::Caret)) {
            Token t = expect(Tok::Int, "a nonnegative integer exponent");
            long k = std::stol(t.text);
            DiffOp r = DiffOp::mult(XRat::one(env.nparams));
            for (long j = 0; j < k; ++j) r = op_mul(r, a);
            return r;
        }
        return a;
    }

    DiffOp parse_atom() {
        const Token t = peek();
        if (t.kind == Tok::Int) {
            next();
            return DiffOp::mult(
                XRat::constant(KElem::constant(env.nparams, rat_from_string(t.text))));
        }
        if (t.kind == Tok::LParen) {
            next();
            DiffOp e = parse_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (t.kind == Tok::Ident) {
            if (is_keyword(t)) error(t, "unexpected keyword '" + t.text + "' in expression");
            next();
            if (t.text == "Dx") return DiffOp::dx(env.nparams);
            auto ip = env.params.find(t.text);
            if (ip != env.params.end())
                return DiffOp::mult(XRat::constant(KElem::variable(env.nparams, ip->second)));
            if (t.text == env.var) return DiffOp::mult(XRat::x(env.nparams));
            if (env.ores.count(t.text))
                error(t, "Ore operator '" + t.text + "' cannot appear inside an expression");
            error(t, "undeclared identifier '" + t.text + "'");
        }
        error(t, "expected an expression atom");
    }
};

XRat expect_rational(Parser& p, const Token& at, const DiffOp& d) {
    if (d.order() > 0)
        p.error(at, "nonlinear use of Dx: a rational-function expression is required");
    return d.is_zero() ? XRat(p.env.nparams) : d.coeff(0);
}

} // namespace

Problem parse_problem(const std::string& text) {
    Lexer lx{text};
    lx.run();
    Parser p{std::move(lx.tokens)};

    Problem out;
    bool saw_expr = false;
    bool saw_reduce = false;
    std::map<std::string, DiffOp> rels;

    while (p.peek().kind != Tok::End) {
        if (p.accept(Tok::Semi)) continue;
        Token head = p.expect_ident("a statement keyword");
        if (head.text == "params") {
            if (saw_expr) p.error(head, "parameter declarations must precede expressions");
            while (true) {
                Token id = p.expect_ident("a parameter name");
                if (is_keyword(id)) p.error(id, "'" + id.text + "' is reserved");
                if (p.env.params.count(id.text)) p.error(id, "duplicate parameter " + id.text);
                p.env.params[id.text] = p.env.nparams++;
                out.params.push_back(id.text);
                if (!p.accept(Tok::Comma)) break;
            }
        } else if (head.text == "var") {
            if (!p.env.var.empty()) p.error(head, "exactly one main variable is allowed");
            Token id = p.expect_ident("the main variable name");
            if (is_keyword(id) || id.text == "Dx") p.error(id, "'" + id.text + "' is reserved");
            if (p.env.params.count(id.text))
                p.error(id, "'" + id.text + "' is already a parameter");
            p.env.var = id.text;
            out.var = id.text;
        } else if (head.text == "ore") {
            if (saw_expr) p.error(head, "ore declarations must precede expressions");
            Token id = p.expect_ident("an Ore operator name");
            if (is_keyword(id) || id.text == "Dx") p.error(id, "'" + id.text + "' is reserved");
            if (p.env.ores.count(id.text)) p.error(id, "duplicate Ore operator " + id.text);
            p.expect(Tok::Equal, "'='");
            Token spec = p.expect_ident("'d' or 'shift'");
            OreAction action{};
            if (spec.text == "d") {
                p.expect(Tok::Slash, "'/' in d/d<param>");
                Token dp = p.expect_ident("d<param>");
                if (dp.text.size() < 2 || dp.text[0] != 'd')
                    p.error(dp, "expected d<param> after d/");
                std::string pname = dp.text.substr(1);
                auto it = p.env.params.find(pname);
                if (it == p.env.params.end()) p.error(dp, "undeclared parameter " + pname);
                action = {OreKind::Derivation, it->second};
            } else if (spec.text == "shift") {
                p.expect(Tok::LParen, "'('");
                Token pr = p.expect_ident("a parameter name");
                auto it = p.env.params.find(pr.text);
                if (it == p.env.params.end()) p.error(pr, "undeclared parameter " + pr.text);
                p.expect(Tok::RParen, "')'");
                action = {OreKind::Shift, it->second};
            } else {
                p.error(spec, "expected d/d<param> or shift(<param>)");
            }
            p.env.ores[id.text] = (int)out.ore_names.size();
            out.ore_names.push_back(id.text);
            out.specs.push_back(action);
        } else if (head.text == "L") {
            if (p.env.var.empty()) p.error(head, "declare the main variable before operators");
            p.expect(Tok::Equal, "'='");
            saw_expr = true;
            if (out.L_declared) p.error(head, "duplicate L definition");
            DiffOp L = p.parse_expr();
            if (L.is_zero()) p.error(head, "L must be nonzero");
            out.L_declared = L;
        } else if (head.text == "rel") {
            if (p.env.var.empty()) p.error(head, "declare the main variable before operators");
            Token id = p.expect_ident("an Ore operator name");
            if (!p.env.ores.count(id.text))
                p.error(id, "undeclared Ore operator '" + id.text + "'");
            p.expect(Tok::Colon, "':'");
            saw_expr = true;
            if (rels.count(id.text)) p.error(id, "duplicate relation for " + id.text);
            rels[id.text] = p.parse_expr();
        } else if (head.text == "reduce") {
            if (p.env.var.empty()) p.error(head, "declare the main variable before expressions");
            if (saw_reduce) p.error(head, "duplicate reduce statement");
            saw_expr = true;
            saw_reduce = true;
            Token at = p.peek();
            DiffOp r = p.parse_expr();
            out.R = expect_rational(p, at, r);
            Token by = p.expect_ident("'by'");
            if (by.text != "by") p.error(by, "expected 'by'");
            DiffOp M = p.parse_expr();
            if (M.is_zero()) p.error(by, "reduce operator must be nonzero");
            out.M = M;
        } else {
            p.error(head, "unknown statement '" + head.text + "'");
        }
    }

    if (out.var.empty()) throw ParseError(1, 1, "missing 'var' declaration");
    if (saw_reduce) {
        if (out.L_declared || !rels.empty())
            throw ParseError(1, 1, "a reduce file cannot also declare L or relations");
        if (!out.specs.empty())
            throw ParseError(1, 1, "a reduce file cannot declare Ore operators");
        out.kind = Problem::Kind::Reduce;
        return out;
    }
    if (!out.L_declared) throw ParseError(1, 1, "missing 'L =' or 'reduce' statement");
    out.kind = Problem::Kind::Telescope;
    out.system.L = *out.L_declared;
    out.system.specs = out.specs;
    for (auto& name : out.ore_names) {
        auto it = rels.find(name);
        if (it == rels.end())
            throw ParseError(1, 1, "missing relation for Ore operator " + name);
        out.system.rels.push_back(it->second);
    }
    if (!out.system.L.has_polynomial_coefficients()) {
        // left-clear denominators; the solution space is unchanged
        XPoly D = XPoly::one(out.nvars());
        for (int i = 0; i <= out.system.L.order(); ++i)
            if (!out.system.L.coeff(i).is_zero()) D = lcm_x(D, out.system.L.coeff(i).den());
        out.system.L = out.system.L.scaled(XRat(D));
        out.L_declared = out.system.L;
    }
    return out;
}

namespace {

Parser make_expr_parser(const std::string& text, const std::vector<std::string>& params,
                        const std::string& var, const std::vector<std::string>& ores = {}) {
    Lexer lx{text};
    lx.run();
    Parser p{std::move(lx.tokens)};
    for (auto& name : params) p.env.params[name] = p.env.nparams++;
    p.env.var = var;
    for (size_t i = 0; i < ores.size(); ++i) p.env.ores[ores[i]] = (int)i;
    return p;
}

} // namespace

DiffOp parse_opexpr(const std::string& text, const std::vector<std::string>& params,
                    const std::string& var) {
    Parser p = make_expr_parser(text, params, var);
    DiffOp d = p.parse_expr();
    if (p.peek().kind != Tok::End) p.error(p.peek(), "trailing input after expression");
    return d;
}

XRat parse_ratexpr(const std::string& text, const std::vector<std::string>& params,
                   const std::string& var) {
    Parser p = make_expr_parser(text, params, var);
    Token at = p.peek();
    DiffOp d = p.parse_expr();
    if (p.peek().kind != Tok::End) p.error(p.peek(), "trailing input after expression");
    return expect_rational(p, at, d);
}

XPoly parse_place(const std::string& text, const Problem& prob) {
    XRat r = parse_ratexpr(text, prob.params, prob.var);
    if (!r.is_polynomial()) throw ParseError(1, 1, "place must be a polynomial in " + prob.var);
    return r.num();
}

Telescoper parse_telescoper(const std::string& text, const std::vector<std::string>& params,
                            const std::vector<std::string>& ores, TermOrder order) {
    Parser p = make_expr_parser(text, params, "", ores);
    int n = p.env.nparams;
    int e = (int)ores.size();
    std::vector<std::pair<DMonomial, KElem>> terms;

    auto parse_one = [&](bool neg) {
        KElem coeff = KElem::one(n);
        DMonomial mono{std::vector<int>(e, 0)};
        bool seen_ore = false, dividing = false;
        while (true) {
            const Token t = p.peek();
            bool is_ore = t.kind == Tok::Ident && p.env.ores.count(t.text);
            if (is_ore) {
                if (dividing) p.error(t, "cannot divide by an Ore monomial");
                p.next();
                int idx = p.env.ores[t.text];
                int k = 1;
                if (p.accept(Tok::Caret)) k = std::stoi(p.expect(Tok::Int, "exponent").text);
                mono.e[idx] += k;
                seen_ore = true;
            } else {
                if (seen_ore) p.error(t, "coefficients must precede Ore monomials");
                DiffOp f = p.parse_power();
                if (f.order() > 0) p.error(t, "Dx cannot appear in a telescoper");
                KElem c = f.is_zero() ? KElem(n) : f.coeff(0).num().coeff(0);
                if (dividing) {
                    if (c.is_zero()) p.error(t, "division by zero");
                    coeff = coeff / c;
                } else {
                    coeff = coeff * c;
                }
            }
            dividing = false;
            if (p.accept(Tok::Star)) continue;
            if (p.accept(Tok::Slash)) {
                dividing = true;
                continue;
            }
            break;
        }
        if (neg) coeff = -coeff;
        terms.push_back({mono, coeff});
    };

    bool neg = p.accept(Tok::Minus);
    parse_one(neg);
    while (p.peek().kind == Tok::Plus || p.peek().kind == Tok::Minus) {
        bool minus = p.next().kind == Tok::Minus;
        parse_one(minus);
    }
    if (p.peek().kind != Tok::End) p.error(p.peek(), "trailing input after telescoper");
    return normalize_telescoper(std::move(terms), order);
}

} // namespace ctel

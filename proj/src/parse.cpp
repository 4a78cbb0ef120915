#include "nht/parse.hpp"

#include <cctype>
#include <functional>

namespace nht {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, colon, end };
    Kind kind;
    std::string text;
    Rational value;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
        tok_ = Token{Token::Kind::end, "", Rational(0), line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::number;
            tok_.text = num;
            tok_.value = Rational(Integer(num));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
                id += text_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::ident;
            tok_.text = id;
            return;
        }
        switch (c) {
            case '+': tok_.kind = Token::Kind::plus; break;
            case '-': tok_.kind = Token::Kind::minus; break;
            case '*': tok_.kind = Token::Kind::star; break;
            case '/': tok_.kind = Token::Kind::slash; break;
            case '^': tok_.kind = Token::Kind::caret; break;
            case '(': tok_.kind = Token::Kind::lparen; break;
            case ')': tok_.kind = Token::Kind::rparen; break;
            case ':': tok_.kind = Token::Kind::colon; break;
            default:
                throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
        }
        tok_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

ExprPtr make(ExprSyntax n) { return std::make_shared<const ExprSyntax>(std::move(n)); }

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw parse_error(t.line, t.column, "unexpected '" + t.text +
                                                    "', expected one of: '+', '-', '*', '/', '^', end of input");
        return e;
    }

private:
    ExprPtr parse_sum() {
        ExprPtr e = parse_term();
        for (;;) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::plus) {
                lex_.next();
                e = make({.kind = ExprSyntax::Kind::add, .lhs = e, .rhs = parse_term()});
            } else if (k == Token::Kind::minus) {
                lex_.next();
                e = make({.kind = ExprSyntax::Kind::sub, .lhs = e, .rhs = parse_term()});
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        for (;;) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::star) {
                lex_.next();
                e = make({.kind = ExprSyntax::Kind::mul, .lhs = e, .rhs = parse_unary()});
            } else if (k == Token::Kind::slash) {
                lex_.next();
                e = make({.kind = ExprSyntax::Kind::div, .lhs = e, .rhs = parse_divisor()});
            } else {
                return e;
            }
        }
    }

    // Division is restricted to exact units of the coefficient ring:
    // numerals, i, and powers of tau.
    ExprPtr parse_divisor() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            lex_.next();
            if (t.value == 0) throw parse_error(t.line, t.column, "division by zero");
            return maybe_pow(make({.kind = ExprSyntax::Kind::number, .number = t.value}));
        }
        if (t.kind == Token::Kind::ident && t.text == "tau") {
            lex_.next();
            return maybe_pow(make({.kind = ExprSyntax::Kind::tau_var}));
        }
        if (t.kind == Token::Kind::ident && t.text == "i") {
            lex_.next();
            return make({.kind = ExprSyntax::Kind::imag_unit});
        }
        throw parse_error(t.line, t.column,
                          "invalid divisor '" + t.text + "', expected one of: number, 'tau', 'i'");
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.next();
            return make({.kind = ExprSyntax::Kind::neg, .lhs = parse_unary()});
        }
        return maybe_pow(parse_atom());
    }

    ExprPtr maybe_pow(ExprPtr base) {
        if (lex_.peek().kind != Token::Kind::caret) return base;
        lex_.next();
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::minus)
            throw parse_error(t.line, t.column, "negative exponents are not allowed");
        if (t.kind != Token::Kind::number || denominator(t.value) != 1)
            throw parse_error(t.line, t.column, "expected non-negative integer exponent");
        lex_.next();
        return make({.kind = ExprSyntax::Kind::pow,
                     .exponent = static_cast<int>(numerator(t.value)),
                     .lhs = base});
    }

    ExprPtr parse_atom() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            lex_.next();
            return make({.kind = ExprSyntax::Kind::number, .number = t.value});
        }
        if (t.kind == Token::Kind::lparen) {
            lex_.next();
            ExprPtr e = parse_sum();
            expect(Token::Kind::rparen, "')'");
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            lex_.next();
            const std::string& id = t.text;
            if (id == "i") return make({.kind = ExprSyntax::Kind::imag_unit});
            if (id == "t") return make({.kind = ExprSyntax::Kind::time_var});
            if (id == "tau") return make({.kind = ExprSyntax::Kind::tau_var});
            if (id == "x1" || id == "x2" || id == "x3")
                return make({.kind = ExprSyntax::Kind::coord, .axis = id[1] - '0'});
            if (auto p = param_from_name(id))
                return make({.kind = ExprSyntax::Kind::param_ref, .param = *p});
            if (id == "cosh") return parse_func(t, ExprSyntax::Fn::cosh_fn);
            if (id == "sinh") return parse_func(t, ExprSyntax::Fn::sinh_fn);
            if (id == "cos") return parse_func(t, ExprSyntax::Fn::cos_fn);
            if (id == "sin") return parse_func(t, ExprSyntax::Fn::sin_fn);
            throw parse_error(t.line, t.column, "unknown identifier '" + id + "'");
        }
        throw parse_error(t.line, t.column,
                          "unexpected '" + (t.kind == Token::Kind::end ? "end of input" : t.text) +
                              "', expected one of: number, identifier, '(', '-'");
    }

    // fn '(' [-] [int *] t / tau ')'
    ExprPtr parse_func(const Token& name, ExprSyntax::Fn fn) {
        expect(Token::Kind::lparen, "'('");
        int mult = 1;
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.next();
            mult = -1;
        }
        if (lex_.peek().kind == Token::Kind::number) {
            const Token n = lex_.next();
            if (denominator(n.value) != 1)
                throw parse_error(n.line, n.column, "function argument multiplier must be an integer");
            mult *= static_cast<int>(numerator(n.value));
            expect(Token::Kind::star, "'*'");
        }
        const Token tv = lex_.peek();
        if (tv.kind != Token::Kind::ident || tv.text != "t")
            throw parse_error(tv.line, tv.column,
                              "function argument must have the form k*t/tau");
        lex_.next();
        expect(Token::Kind::slash, "'/'");
        const Token tauv = lex_.peek();
        if (tauv.kind != Token::Kind::ident || tauv.text != "tau")
            throw parse_error(tauv.line, tauv.column,
                              "function argument must have the form k*t/tau");
        lex_.next();
        expect(Token::Kind::rparen, "')'");
        (void)name;
        return make({.kind = ExprSyntax::Kind::func, .fn = fn, .fn_mult = mult});
    }

    void expect(Token::Kind k, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != k)
            throw parse_error(t.line, t.column,
                              "unexpected '" + (t.kind == Token::Kind::end ? "end of input" : t.text) +
                                  "', expected " + what);
        lex_.next();
    }

    Lexer lex_;
};

void scan_mode(const ExprPtr& e, std::optional<Mode>& found) {
    if (!e) return;
    if (e->kind == ExprSyntax::Kind::func) {
        Mode m = (e->fn == ExprSyntax::Fn::cosh_fn || e->fn == ExprSyntax::Fn::sinh_fn)
                     ? Mode::hyperbolic
                     : Mode::trigonometric;
        if (found && *found != m)
            throw mode_error("expression mixes hyperbolic and trigonometric functions");
        found = m;
    }
    scan_mode(e->lhs, found);
    scan_mode(e->rhs, found);
}

SpaceExpr eval(const ExprPtr& e, Mode mode) {
    using K = ExprSyntax::Kind;
    switch (e->kind) {
        case K::number: {
            GaussianRational c(e->number);
            return SpaceExpr::scalar(ScalarField::constant(c, mode));
        }
        case K::imag_unit:
            return SpaceExpr::scalar(ScalarField::unit_i(mode));
        case K::time_var:
            return SpaceExpr::scalar(ScalarField::t_power(1, mode));
        case K::tau_var:
            if (mode == Mode::flat)
                throw error("tau requires hyperbolic or trigonometric mode");
            return SpaceExpr::scalar(ScalarField::tau_power(1, mode));
        case K::coord:
            return SpaceExpr::coordinate(e->axis, mode);
        case K::param_ref:
            return SpaceExpr::scalar(ScalarField::param(e->param, mode));
        case K::func: {
            bool is_c = e->fn == ExprSyntax::Fn::cosh_fn || e->fn == ExprSyntax::Fn::cos_fn;
            ScalarField f = is_c ? ScalarField::cosh_like(mode, e->fn_mult)
                                 : ScalarField::sinh_like(mode, e->fn_mult);
            return SpaceExpr::scalar(f);
        }
        case K::add: return eval(e->lhs, mode) + eval(e->rhs, mode);
        case K::sub: return eval(e->lhs, mode) - eval(e->rhs, mode);
        case K::mul: return eval(e->lhs, mode) * eval(e->rhs, mode);
        case K::div: {
            SpaceExpr num = eval(e->lhs, mode);
            const ExprSyntax& d = *e->rhs;
            if (d.kind == K::number)
                return num.scaled(GaussianRational(Rational(1) / d.number));
            if (d.kind == K::imag_unit)
                return num.scaled(GaussianRational(Rational(0), Rational(-1)));
            if (d.kind == K::tau_var)
                return num.scaled(ScalarField::tau_power(-1, mode));
            if (d.kind == K::pow && d.lhs->kind == K::tau_var)
                return num.scaled(ScalarField::tau_power(-d.exponent, mode));
            if (d.kind == K::pow && d.lhs->kind == K::number) {
                Rational v = 1;
                for (int n = 0; n < d.exponent; ++n) v *= d.lhs->number;
                return num.scaled(GaussianRational(Rational(1) / v));
            }
            throw error("internal: unexpected divisor");
        }
        case K::pow: {
            SpaceExpr base = eval(e->lhs, mode);
            SpaceExpr r = SpaceExpr::one(mode);
            for (int n = 0; n < e->exponent; ++n) r *= base;
            return r;
        }
        case K::neg:
            return -eval(e->lhs, mode);
    }
    throw error("internal: bad AST node");
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::optional<Mode> required_mode(const ExprPtr& ast) {
    std::optional<Mode> m;
    scan_mode(ast, m);
    return m;
}

SpaceExpr elaborate(const ExprPtr& ast, Mode default_mode) {
    std::optional<Mode> required = required_mode(ast);
    Mode mode = default_mode;
    if (required) mode = join_modes(*required, default_mode);
    return eval(ast, mode);
}

SpaceExpr parse_expr(const std::string& text, Mode default_mode) {
    return elaborate(parse(text), default_mode);
}

}  // namespace nht

#include "ellop/parse.hpp"

#include "ellop/weyl.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace ellop {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Int, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Token::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Plus; break;
            case '-': kind = Token::Minus; break;
            case '*': kind = Token::Star; break;
            case '^': kind = Token::Caret; break;
            case '/': kind = Token::Slash; break;
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                                     std::to_string(start),
                                 start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

// One operator term under construction: polynomial coefficient times d^alpha.
struct OpTerm {
    Polynomial coeff;
    std::vector<std::uint32_t> alpha;
};

class Parser {
public:
    Parser(std::string_view text, ContextPtr ctx)
        : toks_(tokenize(text)), ctx_(std::move(ctx)) {}

    Polynomial parse_poly_toplevel() {
        Polynomial p = parse_poly_expr();
        expect_end();
        return p;
    }

    DiffOperator parse_op_toplevel() {
        DiffOperator l = parse_op_expr();
        expect_end();
        return l;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw ParseError(msg + " at position " + std::to_string(pos), pos);
    }
    void expect_end() {
        if (peek().kind != Token::End) fail("unexpected token '" + peek().text + "'", peek().pos);
    }

    unsigned parse_exponent() {
        if (peek().kind != Token::Int) fail("expected integer exponent after '^'", peek().pos);
        Token t = take();
        if (t.text.size() > 6) fail("exponent too large", t.pos);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Rational parse_number() {
        Token t = take();
        Int num(t.text);
        if (peek().kind == Token::Slash) {
            take();
            if (peek().kind != Token::Int) fail("expected denominator digits", peek().pos);
            Token d = take();
            Int den(d.text);
            if (den == 0) fail("zero denominator", d.pos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    // ---- polynomial grammar ----

    Polynomial parse_poly_expr() {
        bool negate = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus)
            negate = take().kind == Token::Minus;
        Polynomial p = parse_poly_term();
        if (negate) p = -p;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            Polynomial q = parse_poly_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial parse_poly_term() {
        Polynomial p = parse_poly_factor();
        while (peek().kind == Token::Star) {
            take();
            p = p * parse_poly_factor();
        }
        return p;
    }

    Polynomial parse_poly_factor() {
        Polynomial base = parse_poly_atom();
        if (peek().kind == Token::Caret) {
            take();
            base = base.pow(parse_exponent());
        }
        return base;
    }

    Polynomial parse_poly_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Int:
                return Polynomial::constant(ctx_, parse_number());
            case Token::Ident: {
                Token id = take();
                auto idx = ctx_->index_of(id.text);
                if (!idx)
                    fail("unknown variable '" + id.text + "' (context " + ctx_->to_string() + ")",
                         id.pos);
                return Polynomial::variable(ctx_, *idx);
            }
            case Token::LParen: {
                take();
                Polynomial inner = parse_poly_expr();
                if (peek().kind != Token::RParen) fail("expected ')'", peek().pos);
                take();
                return inner;
            }
            default:
                fail("expected a number, variable or '('", t.pos);
        }
    }

    // ---- operator grammar ----

    DiffOperator parse_op_expr() {
        DiffOperator total = DiffOperator::zero(ctx_);
        bool negate = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus)
            negate = take().kind == Token::Minus;
        total = total + finish_term(parse_op_term(), negate);
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            total = total + finish_term(parse_op_term(), minus);
        }
        return total;
    }

    static DiffOperator finish_term(const OpTerm& term, bool negate) {
        Polynomial c = negate ? -term.coeff : term.coeff;
        DiffOperator::TermMap map;
        if (!c.is_zero()) map.emplace(Monomial(term.alpha), c);
        return DiffOperator::from_terms(c.context(), std::move(map));
    }

    OpTerm parse_op_term() {
        OpTerm term{Polynomial::constant(ctx_, Rational(1)),
                    std::vector<std::uint32_t>(ctx_->size(), 0)};
        parse_op_factor(term);
        while (peek().kind == Token::Star) {
            take();
            parse_op_factor(term);
        }
        return term;
    }

    void parse_op_factor(OpTerm& term) {
        const Token& t = peek();
        if (t.kind == Token::Ident) {
            // An identifier "d"+<known variable> is always a derivative token.
            const std::string& name = t.text;
            if (name.size() > 1 && name[0] == 'd') {
                if (auto var = ctx_->index_of(name.substr(1))) {
                    Token id = take();
                    unsigned power = 1;
                    if (peek().kind == Token::Caret) {
                        take();
                        power = parse_exponent();
                    }
                    term.alpha[*var] += power;
                    return;
                }
            }
            auto idx = ctx_->index_of(name);
            if (!idx)
                fail("unknown variable '" + name + "' (context " + ctx_->to_string() + ")", t.pos);
            Token id = take();
            Polynomial base = Polynomial::variable(ctx_, *idx);
            if (peek().kind == Token::Caret) {
                take();
                base = base.pow(parse_exponent());
            }
            term.coeff = term.coeff * base;
            return;
        }
        if (t.kind == Token::Int) {
            Polynomial base = Polynomial::constant(ctx_, parse_number());
            if (peek().kind == Token::Caret) {
                take();
                base = base.pow(parse_exponent());
            }
            term.coeff = term.coeff * base;
            return;
        }
        if (t.kind == Token::LParen) {
            take();
            Polynomial inner = parse_poly_expr();  // parentheses hold polynomial coefficients
            if (peek().kind != Token::RParen) fail("expected ')'", peek().pos);
            take();
            if (peek().kind == Token::Caret) {
                take();
                inner = inner.pow(parse_exponent());
            }
            term.coeff = term.coeff * inner;
            return;
        }
        fail("expected a coefficient factor or d-token", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    ContextPtr ctx_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
    return Parser(text, ctx).parse_poly_toplevel();
}

DiffOperator parse_operator(std::string_view text, const ContextPtr& ctx) {
    return Parser(text, ctx).parse_op_toplevel();
}

std::vector<std::string> infer_operator_variables(std::string_view text) {
    std::vector<std::string> names;
    for (const Token& t : tokenize(text)) {
        if (t.kind != Token::Ident) continue;
        std::string name =
            (t.text.size() > 1 && t.text[0] == 'd') ? t.text.substr(1) : t.text;
        bool seen = false;
        for (const auto& n : names) seen = seen || n == name;
        if (!seen) names.push_back(name);
    }
    return names;
}

}  // namespace ellop

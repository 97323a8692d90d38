#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "cauchykit/errors.hpp"
#include "genfun_internal.hpp"

namespace cauchykit {
namespace ast {

namespace {

// ---------------------------------------------------------------- lexing

struct Token {
    enum class Type { Int, X, Plus, Minus, Star, Slash, Caret, LParen, RParen, Func, End };
    Type type;
    mpz_class value; // Int
    Fn fn = Fn::Exp; // Func
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            t.type = Token::Type::Int;
            t.value = mpz_class(std::string(text.substr(start, i - start)), 10);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
            std::string word(text.substr(start, i - start));
            if (word == "x") t.type = Token::Type::X;
            else if (word == "exp") { t.type = Token::Type::Func; t.fn = Fn::Exp; }
            else if (word == "sin") { t.type = Token::Type::Func; t.fn = Fn::Sin; }
            else if (word == "sinh") { t.type = Token::Type::Func; t.fn = Fn::Sinh; }
            else if (word == "ln") { t.type = Token::Type::Func; t.fn = Fn::Ln; }
            else throw SyntaxError(start, "'x', 'exp', 'sin', 'sinh' or 'ln'");
            out.push_back(std::move(t));
            continue;
        }
        switch (c) {
            case '+': t.type = Token::Type::Plus; break;
            case '-': t.type = Token::Type::Minus; break;
            case '*': t.type = Token::Type::Star; break;
            case '/': t.type = Token::Type::Slash; break;
            case '^': t.type = Token::Type::Caret; break;
            case '(': t.type = Token::Type::LParen; break;
            case ')': t.type = Token::Type::RParen; break;
            default: throw SyntaxError(i, "a rational, 'x', an operator or parentheses");
        }
        ++i;
        out.push_back(std::move(t));
    }
    Token end;
    end.type = Token::Type::End;
    end.pos = text.size();
    out.push_back(std::move(end));
    return out;
}

// --------------------------------------------------------------- parsing

std::shared_ptr<Node> make(Node::Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (cur().type != Token::Type::End)
            throw SyntaxError(cur().pos, "end of input or an operator");
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& lookahead() const { return toks_[std::min(i_ + 1, toks_.size() - 1)]; }
    Token advance() { return toks_[i_++]; }

    void expect(Token::Type type, const char* what) {
        if (cur().type != type) throw SyntaxError(cur().pos, what);
        ++i_;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (cur().type == Token::Type::Plus) { advance(); lhs = make(Node::Kind::Add, lhs, term()); }
            else if (cur().type == Token::Type::Minus) { advance(); lhs = make(Node::Kind::Sub, lhs, term()); }
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (cur().type == Token::Type::Star) { advance(); lhs = make(Node::Kind::Mul, lhs, factor()); }
            else if (cur().type == Token::Type::Slash) { advance(); lhs = make(Node::Kind::Div, lhs, factor()); }
            else return lhs;
        }
    }

    NodePtr factor() {
        if (cur().type == Token::Type::Minus) {
            advance();
            return make(Node::Kind::Neg, factor());
        }
        NodePtr a = atom();
        if (cur().type == Token::Type::Caret) {
            advance();
            if (cur().type != Token::Type::Int) throw SyntaxError(cur().pos, "an integer exponent");
            Token e = advance();
            if (!e.value.fits_ulong_p()) throw SyntaxError(e.pos, "a machine-representable exponent");
            auto p = make(Node::Kind::Pow, a);
            p->expo = e.value.get_ui();
            return p;
        }
        return a;
    }

    NodePtr atom() {
        switch (cur().type) {
            case Token::Type::Int: {
                Token num = advance();
                // 'p/q' is one rational literal when q is a positive integer.
                if (cur().type == Token::Type::Slash && lookahead().type == Token::Type::Int &&
                    lookahead().value > 0) {
                    advance();
                    Token den = advance();
                    auto n = make(Node::Kind::Lit);
                    n->lit = Rational(mpq_class(num.value, den.value));
                    return n;
                }
                auto n = make(Node::Kind::Lit);
                n->lit = Rational(num.value);
                return n;
            }
            case Token::Type::X:
                advance();
                return make(Node::Kind::Var);
            case Token::Type::LParen: {
                advance();
                NodePtr e = expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            case Token::Type::Func: {
                Token f = advance();
                expect(Token::Type::LParen, "'('");
                NodePtr arg = expr();
                expect(Token::Type::RParen, "')'");
                auto n = make(Node::Kind::Apply, arg);
                n->fn = f.fn;
                return n;
            }
            default:
                throw SyntaxError(cur().pos, "a rational, 'x', '(' or a function name");
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// ------------------------------------------------- polynomial structure

std::vector<Rational> trim(std::vector<Rational> p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    if (p.empty()) p.emplace_back(0);
    return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return trim(std::move(c));
}

const char* fn_name(Fn fn) {
    switch (fn) {
        case Fn::Exp: return "exp";
        case Fn::Sin: return "sin";
        case Fn::Sinh: return "sinh";
        default: return "ln";
    }
}

} // namespace

NodePtr parse_text(std::string_view text) { return Parser(text).parse(); }

std::optional<std::vector<Rational>> poly_of(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::Lit:
            return std::vector<Rational>{node->lit};
        case Node::Kind::Var:
            return std::vector<Rational>{Rational(0), Rational(1)};
        case Node::Kind::Neg: {
            auto p = poly_of(node->a);
            if (!p) return std::nullopt;
            for (auto& c : *p) c = -c;
            return p;
        }
        case Node::Kind::Add:
        case Node::Kind::Sub: {
            auto pa = poly_of(node->a), pb = poly_of(node->b);
            if (!pa || !pb) return std::nullopt;
            std::vector<Rational> c(std::max(pa->size(), pb->size()), Rational(0));
            for (std::size_t i = 0; i < pa->size(); ++i) c[i] += (*pa)[i];
            for (std::size_t i = 0; i < pb->size(); ++i)
                c[i] = node->kind == Node::Kind::Add ? c[i] + (*pb)[i] : c[i] - (*pb)[i];
            return trim(std::move(c));
        }
        case Node::Kind::Mul: {
            auto pa = poly_of(node->a), pb = poly_of(node->b);
            if (!pa || !pb) return std::nullopt;
            return poly_mul(*pa, *pb);
        }
        case Node::Kind::Div: {
            auto pa = poly_of(node->a), pb = poly_of(node->b);
            if (!pa || !pb) return std::nullopt;
            if (pb->size() != 1) return std::nullopt; // general quotients go through series
            if ((*pb)[0].is_zero()) throw DivisionByZeroSeries();
            for (auto& c : *pa) c /= (*pb)[0];
            return pa;
        }
        case Node::Kind::Pow: {
            auto pa = poly_of(node->a);
            if (!pa) return std::nullopt;
            std::vector<Rational> acc{Rational(1)};
            std::vector<Rational> base = *pa;
            unsigned long e = node->expo;
            while (e > 0) {
                if (e & 1UL) acc = poly_mul(acc, base);
                e >>= 1UL;
                if (e > 0) base = poly_mul(base, base);
            }
            return acc;
        }
        case Node::Kind::Apply:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Outer Maclaurin coefficient used for composing fn(h) with h(0) = 0.
Rational outer_coeff(Fn fn, int j) {
    switch (fn) {
        case Fn::Exp:
            return Rational(1) / factorial(static_cast<unsigned long>(j));
        case Fn::Sin:
            if (j % 2 == 0) return Rational(0);
            return (((j - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1)) /
                   factorial(static_cast<unsigned long>(j));
        case Fn::Sinh:
            return j % 2 == 1 ? Rational(1) / factorial(static_cast<unsigned long>(j)) : Rational(0);
        case Fn::Ln: // ln(1 + h)
            if (j == 0) return Rational(0);
            return j % 2 == 1 ? Rational(1, j) : Rational(-1, j);
    }
    return Rational(0);
}

SeriesTrunc compose(Fn fn, const NodePtr& arg, int order) {
    auto p = poly_of(arg);
    if (!p)
        throw UnsupportedComposition(std::string(fn_name(fn)) + " argument must be a polynomial");
    if (fn == Fn::Ln) {
        if ((*p)[0] != Rational(1))
            throw UnsupportedComposition("ln argument must be 1 plus or minus a polynomial with zero constant term");
    } else if (!(*p)[0].is_zero()) {
        throw UnsupportedComposition(std::string(fn_name(fn)) + " argument must have zero constant term");
    }

    // h = arg (or arg - 1 for ln); valuation >= 1, so h^j is empty past j = order.
    std::vector<Rational> hc(static_cast<std::size_t>(order) + 1, Rational(0));
    for (std::size_t k = 1; k < p->size() && k <= static_cast<std::size_t>(order); ++k) hc[k] = (*p)[k];
    SeriesTrunc h{std::move(hc)};

    SeriesTrunc acc = SeriesTrunc::constant(outer_coeff(fn, 0), order);
    SeriesTrunc pw = SeriesTrunc::constant(Rational(1), order);
    for (int j = 1; j <= order; ++j) {
        pw = series_mul(pw, h);
        Rational c = outer_coeff(fn, j);
        if (!c.is_zero()) acc = series_add(acc, series_scale(c, pw));
    }
    return acc;
}

} // namespace

SeriesTrunc series_of(const NodePtr& node, int order) {
    switch (node->kind) {
        case Node::Kind::Lit:
            return SeriesTrunc::constant(node->lit, order);
        case Node::Kind::Var:
            return SeriesTrunc::variable(order);
        case Node::Kind::Neg:
            return series_neg(series_of(node->a, order));
        case Node::Kind::Add:
            return series_add(series_of(node->a, order), series_of(node->b, order));
        case Node::Kind::Sub:
            return series_sub(series_of(node->a, order), series_of(node->b, order));
        case Node::Kind::Mul:
            return series_mul(series_of(node->a, order), series_of(node->b, order));
        case Node::Kind::Div: {
            SeriesTrunc num = series_of(node->a, order);
            SeriesTrunc den = series_of(node->b, order);
            if (den.at(0).is_zero()) throw DivisionByZeroSeries();
            return series_mul(num, series_reciprocal(den));
        }
        case Node::Kind::Pow:
            return series_pow(series_of(node->a, order), node->expo);
        case Node::Kind::Apply:
            return compose(node->fn, node->a, order);
    }
    return SeriesTrunc();
}

Parity structural_parity(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::Lit:
            return Parity::Even;
        case Node::Kind::Var:
            return Parity::Odd;
        case Node::Kind::Neg:
            return structural_parity(node->a);
        case Node::Kind::Add:
        case Node::Kind::Sub: {
            Parity a = structural_parity(node->a), b = structural_parity(node->b);
            return a == b && a != Parity::None ? a : Parity::None;
        }
        case Node::Kind::Mul:
        case Node::Kind::Div: {
            Parity a = structural_parity(node->a), b = structural_parity(node->b);
            if (a == Parity::None || b == Parity::None) return Parity::None;
            return a == b ? Parity::Even : Parity::Odd;
        }
        case Node::Kind::Pow: {
            Parity a = structural_parity(node->a);
            if (a == Parity::Odd) return node->expo % 2 == 0 ? Parity::Even : Parity::Odd;
            return a;
        }
        case Node::Kind::Apply: {
            Parity a = structural_parity(node->a);
            switch (node->fn) {
                case Fn::Exp:
                case Fn::Ln:
                    return a == Parity::Even ? Parity::Even : Parity::None;
                case Fn::Sin:
                case Fn::Sinh:
                    if (a == Parity::Odd) return Parity::Odd;
                    return a == Parity::Even ? Parity::Even : Parity::None;
            }
            return Parity::None;
        }
    }
    return Parity::None;
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    mpz_class n = q.num(), d = q.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(sn, sd));
}

// Every root r of p (with p(0) != 0) satisfies |r| >= |p_0| / (|p_0| + max_{i>=1} |p_i|).
Rational cauchy_root_lower_bound(const std::vector<Rational>& p) {
    Rational a0 = p[0].abs();
    Rational amax(0);
    for (std::size_t i = 1; i < p.size(); ++i) {
        Rational ai = p[i].abs();
        if (ai > amax) amax = ai;
    }
    return a0 / (a0 + amax);
}

// Distance from 0 to the nearest root: exact when that distance is rational,
// otherwise a rational lower bound. Requires p[0] != 0 (trimmed coefficients).
Radius min_root_radius(const std::vector<Rational>& p) {
    std::size_t deg = p.size() - 1;
    if (deg == 0) return Radius::infinite();
    if (deg == 1) return Radius::exact_of((p[0] / p[1]).abs());
    if (deg == 2) {
        Rational disc = p[1] * p[1] - Rational(4) * p[0] * p[2];
        if (disc.is_zero()) return Radius::exact_of((p[1] / (Rational(2) * p[2])).abs());
        if (disc.sign() > 0) {
            if (auto s = exact_sqrt(disc)) {
                Rational r1 = ((-p[1] + *s) / (Rational(2) * p[2])).abs();
                Rational r2 = ((-p[1] - *s) / (Rational(2) * p[2])).abs();
                return Radius::exact_of(std::min(r1, r2));
            }
        } else {
            // conjugate pair, |r|^2 = |p_0 / p_2|
            if (auto s = exact_sqrt((p[0] / p[2]).abs())) return Radius::exact_of(*s);
        }
    }
    return Radius::lower_bound(cauchy_root_lower_bound(p));
}

Radius rmin(const Radius& a, const Radius& b) {
    bool exact = a.exact && b.exact;
    if (!a.finite && !b.finite) return exact ? Radius::infinite() : Radius::lower_bound_infinite();
    Rational v = !a.finite ? b.value : (!b.finite ? a.value : std::min(a.value, b.value));
    return exact ? Radius::exact_of(v) : Radius::lower_bound(v);
}

Radius as_lower_bound(const Radius& r) {
    return r.finite ? Radius::lower_bound(r.value) : Radius::lower_bound_infinite();
}

} // namespace

Radius radius_of(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::Lit:
        case Node::Kind::Var:
            return Radius::infinite();
        case Node::Kind::Neg:
        case Node::Kind::Pow:
            return radius_of(node->a);
        case Node::Kind::Add:
        case Node::Kind::Sub:
        case Node::Kind::Mul:
            return rmin(radius_of(node->a), radius_of(node->b));
        case Node::Kind::Div: {
            Radius base = rmin(radius_of(node->a), radius_of(node->b));
            auto pb = poly_of(node->b);
            if (pb) {
                std::size_t deg = pb->size() - 1;
                if (deg == 0) return base;
                if (deg <= 2) return rmin(base, min_root_radius(*pb));
                return rmin(as_lower_bound(base), Radius::lower_bound(cauchy_root_lower_bound(*pb)));
            }
            return as_lower_bound(base);
        }
        case Node::Kind::Apply: {
            if (node->fn != Fn::Ln) return Radius::infinite(); // entire of a polynomial
            auto p = poly_of(node->a);
            if (!p || p->size() == 1) return Radius::infinite(); // ln(1) = 0
            if (p->size() - 1 <= 2) return min_root_radius(*p);
            return Radius::lower_bound(cauchy_root_lower_bound(*p));
        }
    }
    return Radius::infinite();
}

} // namespace ast
} // namespace cauchykit

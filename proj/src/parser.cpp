#include "trisub/parser.hpp"

#include <cctype>
#include <optional>

#include "trisub/errors.hpp"

namespace trisub {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.column = col_;
        if (pos_ >= src_.size()) {
            current_.kind = Token::End;
            current_.text.clear();
            return;
        }
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                consume();
            current_.kind = Token::Number;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                consume();
            current_.kind = Token::Ident;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        switch (ch) {
            case '+': current_.kind = Token::Plus; break;
            case '-': current_.kind = Token::Minus; break;
            case '*': current_.kind = Token::Star; break;
            case '^': current_.kind = Token::Caret; break;
            case '(': current_.kind = Token::LParen; break;
            case ')': current_.kind = Token::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'", line_, col_);
        }
        current_.text = std::string(1, ch);
        consume();
    }

    void consume() {
        ++pos_;
        ++col_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

using NodePtr = Expression::NodePtr;

NodePtr make(Expression::Node n) { return std::make_shared<const Expression::Node>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse() {
        NodePtr e = sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.line, t.column);
        return e;
    }

private:
    NodePtr sum() {
        NodePtr lhs = product();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Plus && t.kind != Token::Minus) return lhs;
            const char op = lex_.take().kind == Token::Plus ? '+' : '-';
            lhs = make({Expression::Binary{op, lhs, product()}});
        }
    }

    NodePtr product() {
        NodePtr lhs = unary();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            lhs = make({Expression::Binary{'*', lhs, unary()}});
        }
        return lhs;
    }

    NodePtr unary() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return make({Expression::Negate{unary()}});
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (lex_.peek().kind != Token::Caret) return base;
        lex_.take();
        const Token t = lex_.peek();
        if (t.kind != Token::Number)
            throw SyntaxError("expected a nonnegative integer exponent", t.line, t.column);
        lex_.take();
        unsigned long e = 0;
        try {
            e = std::stoul(t.text);
        } catch (const std::exception&) {
            throw SyntaxError("exponent out of range", t.line, t.column);
        }
        return make({Expression::Power{base, static_cast<unsigned>(e)}});
    }

    NodePtr primary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Number:
                lex_.take();
                return make({Expression::Literal{Rational::from_string(t.text)}});
            case Token::LParen: {
                lex_.take();
                NodePtr e = sum();
                expect(Token::RParen, "')'");
                return e;
            }
            case Token::Ident: {
                lex_.take();
                if (auto b = base_from_name(t.text)) return make({Expression::Symbol{*b}});
                if (t.text == "L") {
                    expect(Token::LParen, "'('");
                    NodePtr arg = sum();
                    expect(Token::RParen, "')'");
                    return make({Expression::Laplacian{arg}});
                }
                if (t.text.size() == 2 && t.text[0] == 'e' && t.text[1] >= '1' && t.text[1] <= '3') {
                    expect(Token::LParen, "'('");
                    NodePtr arg = sum();
                    expect(Token::RParen, "')'");
                    return make({Expression::Derivation{t.text[1] - '0', arg}});
                }
                throw UnknownSymbolError(t.text, t.line, t.column);
            }
            default:
                throw SyntaxError("expected a value, symbol, or '('", t.line, t.column);
        }
    }

    void expect(Token::Kind kind, const char* what) {
        const Token t = lex_.peek();
        if (t.kind != kind) throw SyntaxError(std::string("expected ") + what, t.line, t.column);
        lex_.take();
    }

    Lexer lex_;
};

bool node_equal(const Expression::Node& a, const Expression::Node& b);

bool ptr_equal(const NodePtr& a, const NodePtr& b) { return node_equal(*a, *b); }

bool node_equal(const Expression::Node& a, const Expression::Node& b) {
    if (a.v.index() != b.v.index()) return false;
    if (const auto* la = std::get_if<Expression::Literal>(&a.v))
        return la->value == std::get<Expression::Literal>(b.v).value;
    if (const auto* sa = std::get_if<Expression::Symbol>(&a.v))
        return sa->base == std::get<Expression::Symbol>(b.v).base;
    if (const auto* da = std::get_if<Expression::Derivation>(&a.v)) {
        const auto& db = std::get<Expression::Derivation>(b.v);
        return da->index == db.index && ptr_equal(da->arg, db.arg);
    }
    if (const auto* la = std::get_if<Expression::Laplacian>(&a.v))
        return ptr_equal(la->arg, std::get<Expression::Laplacian>(b.v).arg);
    if (const auto* na = std::get_if<Expression::Negate>(&a.v))
        return ptr_equal(na->arg, std::get<Expression::Negate>(b.v).arg);
    if (const auto* ba = std::get_if<Expression::Binary>(&a.v)) {
        const auto& bb = std::get<Expression::Binary>(b.v);
        return ba->op == bb.op && ptr_equal(ba->lhs, bb.lhs) && ptr_equal(ba->rhs, bb.rhs);
    }
    const auto& pa = std::get<Expression::Power>(a.v);
    const auto& pb = std::get<Expression::Power>(b.v);
    return pa.exponent == pb.exponent && ptr_equal(pa.base, pb.base);
}

int precedence_of(const Expression::Node& n) {
    if (std::holds_alternative<Expression::Binary>(n.v))
        return std::get<Expression::Binary>(n.v).op == '*' ? 2 : 1;
    if (std::holds_alternative<Expression::Negate>(n.v)) return 3;
    if (std::holds_alternative<Expression::Power>(n.v)) return 4;
    return 5;
}

std::string print_node(const Expression::Node& n);

std::string print_child(const NodePtr& child, int min_prec) {
    std::string s = print_node(*child);
    if (precedence_of(*child) < min_prec) return "(" + s + ")";
    return s;
}

std::string print_node(const Expression::Node& n) {
    if (const auto* l = std::get_if<Expression::Literal>(&n.v)) return l->value.str();
    if (const auto* s = std::get_if<Expression::Symbol>(&n.v))
        return std::string(base_name(s->base));
    if (const auto* d = std::get_if<Expression::Derivation>(&n.v))
        return "e" + std::to_string(d->index) + "(" + print_node(*d->arg) + ")";
    if (const auto* l = std::get_if<Expression::Laplacian>(&n.v))
        return "L(" + print_node(*l->arg) + ")";
    if (const auto* neg = std::get_if<Expression::Negate>(&n.v))
        return "-" + print_child(neg->arg, 3);
    if (const auto* b = std::get_if<Expression::Binary>(&n.v)) {
        const int prec = b->op == '*' ? 2 : 1;
        // left associativity: the right child needs strictly higher binding
        return print_child(b->lhs, prec) + " " + std::string(1, b->op) + " " +
               print_child(b->rhs, prec + 1);
    }
    const auto& p = std::get<Expression::Power>(n.v);
    return print_child(p.base, 5) + "^" + std::to_string(p.exponent);
}

Poly lower(const Expression::Node& n, const RewriteSystem& rules) {
    if (const auto* l = std::get_if<Expression::Literal>(&n.v)) return Poly::constant(l->value);
    if (const auto* s = std::get_if<Expression::Symbol>(&n.v))
        return normalize(Poly::symbol(s->base), rules);
    if (const auto* d = std::get_if<Expression::Derivation>(&n.v))
        return derive(lower(*d->arg, rules), d->index, rules);
    if (const auto* l = std::get_if<Expression::Laplacian>(&n.v))
        return laplacian(lower(*l->arg, rules), rules);
    if (const auto* neg = std::get_if<Expression::Negate>(&n.v)) return -lower(*neg->arg, rules);
    if (const auto* b = std::get_if<Expression::Binary>(&n.v)) {
        const Poly lhs = lower(*b->lhs, rules);
        const Poly rhs = lower(*b->rhs, rules);
        switch (b->op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            default: return lhs * rhs;
        }
    }
    const auto& p = std::get<Expression::Power>(n.v);
    return poly_pow(lower(*p.base, rules), p.exponent);
}

}  // namespace

bool Expression::operator==(const Expression& other) const {
    return node_equal(*root_, *other.root_);
}

Expression parse_expression(std::string_view src) { return Expression(Parser(src).parse()); }

std::string print_expression(const Expression& expr) { return print_node(expr.root()); }

Poly to_poly(const Expression& expr, const RewriteSystem& rules) {
    return lower(expr.root(), rules);
}

Poly parse_poly(std::string_view src, const RewriteSystem& rules) {
    return to_poly(parse_expression(src), rules);
}

}  // namespace trisub

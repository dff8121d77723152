#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trisub/derive.hpp"

namespace trisub {

// Surface syntax over the engine vocabulary: rational literals, base symbols
// (k1, k2, f1, f2, sigma, c), derivations e1(.), e2(.), e3(.), the Laplacian
// L(.), and the operators + - * ^ with nonnegative integer exponents.
// Precedence: ^ > unary - > * > + -; binary operators associate left.
class Expression {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Literal {
        Rational value;
    };
    struct Symbol {
        Base base;
    };
    struct Derivation {
        int index;  // 1..3
        NodePtr arg;
    };
    struct Laplacian {
        NodePtr arg;
    };
    struct Negate {
        NodePtr arg;
    };
    struct Binary {
        char op;  // '+', '-', '*'
        NodePtr lhs;
        NodePtr rhs;
    };
    struct Power {
        NodePtr base;
        unsigned exponent;
    };

    struct Node {
        std::variant<Literal, Symbol, Derivation, Laplacian, Negate, Binary, Power> v;
    };

    explicit Expression(NodePtr root) : root_(std::move(root)) {}
    const Node& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }

    bool operator==(const Expression& other) const;

private:
    NodePtr root_;
};

// Throws SyntaxError (with line/column) or UnknownSymbolError.
Expression parse_expression(std::string_view src);

// Structural rendering with minimal parentheses; parse(print(expr)) yields an
// equal tree.
std::string print_expression(const Expression& expr);

// Lowers the tree to a polynomial, resolving derivations and Laplacians
// through the given rewrite system.
Poly to_poly(const Expression& expr, const RewriteSystem& rules);

// parse + lower in one call.
Poly parse_poly(std::string_view src, const RewriteSystem& rules);

}  // namespace trisub

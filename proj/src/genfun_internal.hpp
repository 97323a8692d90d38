#pragma once

#include <mutex>
#include <optional>

#include "cauchykit/genfun.hpp"

namespace cauchykit {
namespace ast {

enum class Fn { Exp, Sin, Sinh, Ln };

struct Node {
    enum class Kind { Lit, Var, Neg, Add, Sub, Mul, Div, Pow, Apply };
    Kind kind;
    Rational lit;           // Lit
    unsigned long expo = 0; // Pow
    Fn fn = Fn::Exp;        // Apply
    NodePtr a, b;
};

NodePtr parse_text(std::string_view text);

SeriesTrunc series_of(const NodePtr& node, int order);

/// Coefficient vector when the subtree is structurally a polynomial
/// (no function applications, divisions only by nonzero constants), else nullopt.
std::optional<std::vector<Rational>> poly_of(const NodePtr& node);

Parity structural_parity(const NodePtr& node);

Radius radius_of(const NodePtr& node);

} // namespace ast

struct GenFun::Impl {
    enum class Kind { Catalog, Poly, Ast };
    Kind kind;
    std::string source;
    Catalog cat = Catalog::Geometric;  // Kind::Catalog
    std::vector<Rational> poly;        // Kind::Poly
    ast::NodePtr root;                 // Kind::Ast
    Parity parity = Parity::None;
    Radius radius = Radius::infinite();

    mutable std::mutex mu;             // guards memo (Kind::Ast)
    mutable std::vector<Rational> memo;
};

} // namespace cauchykit

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgraph/weights.hpp"

namespace vgraph {

enum class Style { text, latex, machine };

std::string_view to_string(Style style);
Style parse_style(std::string_view text);

/// One factor token of a derivative term.
struct Symbol {
  enum class Kind {
    field,           // D^k f(y) in the ode regime, D^k f(g(y)) in the inverse regime
    inverse_factor,  // Dg = (Df(g(y)))^{-1}
    partial,         // partial derivative of a skeleton function at its evaluation point
    increment,       // increment of a base variable
  };

  Kind kind = Kind::field;
  std::string name;              // "f", "g", or a skeleton colour name
  std::vector<unsigned> orders;  // field: {k}; partial: per-slot orders
  std::string expression;        // partial/increment: skeleton subexpression, e.g. "g(x)"
  std::string arguments;         // partial: evaluation point, e.g. "x"

  /// Symbols with equal keys always denote the same value.
  std::string key() const;

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.key() == b.key(); }
};

/// `head` applied multilinearly to `args`, then multiplied by `post`.
struct Expr {
  Symbol head;
  std::vector<Expr> args;
  std::optional<Symbol> post;
};

struct Term {
  int sign = 1;
  Rational weight = 1;
  Expr expr;
  WeightedGraph source;
};

struct Formula {
  Regime regime = Regime::ode;
  std::size_t order = 0;
  std::vector<Term> terms;  // natural order of the underlying trees
};

Expr to_expr(const DerivativeGraph& graph);

/// Display form of a single factor, e.g. "D²f(y)" or "g″(x)".
std::string render_symbol(const Symbol& symbol, Regime regime, Style style);
std::string render_term(const WeightedGraph& graph, Style style);

Formula make_formula(Regime regime, std::size_t order, const std::vector<WeightedGraph>& graphs);
Formula render_derivative(Regime regime, std::size_t n,
                          std::shared_ptr<const SkeletonPalette> skeleton = nullptr);
std::string to_string(const Formula& formula, Style style);

/// Inverse of `render_term(graph, Style::machine)`. Throws ParseError on
/// malformed input or when the stated sign/weight differ from the tree's.
WeightedGraph parse_machine_term(std::string_view text, Regime regime,
                                 std::shared_ptr<const SkeletonPalette> skeleton = nullptr);

/// Product of factor values over the expression.
template <class R, class ValueOf>
R evaluate(const Expr& expr, const ValueOf& value_of) {
  R out = value_of(expr.head);
  for (const auto& a : expr.args) out = out * evaluate<R>(a, value_of);
  if (expr.post) out = out * value_of(*expr.post);
  return out;
}

template <class R, class ValueOf>
R evaluate(const Term& term, const ValueOf& value_of) {
  R out = evaluate<R>(term.expr, value_of);
  return out * (term.sign < 0 ? Rational(-term.weight) : term.weight);
}

template <class R, class ValueOf>
R evaluate(const Formula& formula, const ValueOf& value_of) {
  R total = R(0);
  for (const auto& t : formula.terms) total = total + evaluate<R>(t, value_of);
  return total;
}

}  // namespace vgraph

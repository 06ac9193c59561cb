#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "vgraph/skeleton.hpp"
#include "vgraph/tree.hpp"

namespace vgraph {

/// What "order n" counts and how a tree reads as a derivative term.
///   composite: derivative of a skeleton composition; n = entrance count.
///   inverse:   derivative of g = f^{-1}; n = entrance count.
///   ode:       derivative of a solution of y' = f(y); n = vertex count.
enum class Regime { composite, inverse, ode };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

/// A canonical tree read in one regime. In the composite regime every vertex
/// is coloured by a skeleton node: function vertices carry the partial
/// derivative whose multi-index counts their children per argument slot, and
/// leaves are increments of base variables. Functions that are evaluated but
/// not differentiated are implicit in the skeleton and not part of the tree.
struct DerivativeGraph {
  Tree tree;
  Regime regime = Regime::ode;
  std::shared_ptr<const SkeletonPalette> skeleton;  // composite regime only

  std::size_t order() const;
};

/// Throws InvalidArgument unless `graph` is well-formed for its regime.
void validate(const DerivativeGraph& graph);

/// Per-slot child counts of a composite-regime vertex.
std::vector<unsigned> slot_orders(const Tree& vertex, const SkeletonPalette& skeleton);

/// The undifferentiated skeleton: the root function vertex with no children.
DerivativeGraph order_zero_graph(std::shared_ptr<const SkeletonPalette> skeleton);

std::vector<DerivativeGraph> enumerate_composite(std::shared_ptr<const SkeletonPalette> skeleton,
                                                 std::size_t n);
std::vector<DerivativeGraph> enumerate_composite(const Skeleton& skeleton, std::size_t n);

std::vector<DerivativeGraph> enumerate_ode(std::size_t n);

/// Trees with n entrances and no unary vertex; n >= 2.
std::vector<DerivativeGraph> enumerate_inverse(std::size_t n);

/// The single-entrance graph standing for Dg = (Df(g(y)))^{-1}.
DerivativeGraph inverse_first_order();

/// Dispatches on regime. Inverse order 1 yields `inverse_first_order()`.
std::vector<DerivativeGraph> enumerate(Regime regime, std::size_t n,
                                       std::shared_ptr<const SkeletonPalette> skeleton = nullptr);

/// Every distinct tree obtained by deleting one entrance (the reverse of one
/// induction step), canonical and sorted.
std::vector<Tree> delete_entrance(const DerivativeGraph& graph);

}  // namespace vgraph

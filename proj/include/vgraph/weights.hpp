#pragma once

#include <cstddef>

#include "vgraph/enumerate.hpp"
#include "vgraph/numeric.hpp"

namespace vgraph {

struct StructuralSummary {
  std::size_t order = 0;
  Integer symmetry = 1;
  Integer complexity = 1;  // tau in the ode regime, 1 elsewhere
};

/// A graph with its multiplicity in the derivative expansion:
///   composite  n!/S
///   inverse    n!/S with sign (-1)^(internal vertices)
///   ode        (n-1)!/(S*tau)
struct WeightedGraph {
  DerivativeGraph graph;
  StructuralSummary summary;
  int sign = 1;
  Rational weight = 1;

  Rational signed_weight() const { return sign < 0 ? Rational(-weight) : weight; }
};

StructuralSummary summarize(const DerivativeGraph& graph);
WeightedGraph weigh(const DerivativeGraph& graph);
std::vector<WeightedGraph> weigh_all(const std::vector<DerivativeGraph>& graphs);

/// Every permutation of the entrances yields the same term (weight 1).
bool totally_symmetric(const WeightedGraph& graph);
/// Only the identity fixes the term (weight n!).
bool totally_asymmetric(const WeightedGraph& graph);

}  // namespace vgraph

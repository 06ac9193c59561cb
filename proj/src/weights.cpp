#include "vgraph/weights.hpp"

#include "vgraph/error.hpp"

namespace vgraph {

StructuralSummary summarize(const DerivativeGraph& graph) {
  StructuralSummary s;
  s.order = graph.order();
  s.symmetry = symmetry_number(graph.tree);
  if (graph.regime == Regime::ode) s.complexity = complexity_number(graph.tree);
  return s;
}

WeightedGraph weigh(const DerivativeGraph& graph) {
  validate(graph);
  WeightedGraph wg{graph, summarize(graph), 1, 1};
  const auto n = wg.summary.order;
  switch (graph.regime) {
    case Regime::composite:
      wg.weight = Rational(factorial(n), wg.summary.symmetry);
      break;
    case Regime::inverse: {
      wg.weight = Rational(factorial(n), wg.summary.symmetry);
      std::size_t internal = graph.tree.cardinality() - graph.tree.entrance_count();
      wg.sign = internal % 2 == 0 ? 1 : -1;
      break;
    }
    case Regime::ode:
      wg.weight = Rational(factorial(n - 1), wg.summary.symmetry * wg.summary.complexity);
      break;
  }
  wg.weight.canonicalize();
  return wg;
}

std::vector<WeightedGraph> weigh_all(const std::vector<DerivativeGraph>& graphs) {
  std::vector<WeightedGraph> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(weigh(g));
  return out;
}

namespace {
void require_composite(const WeightedGraph& g) {
  if (g.graph.regime != Regime::composite)
    throw InvalidArgument("total symmetry is defined for composite-regime graphs");
}
}  // namespace

bool totally_symmetric(const WeightedGraph& graph) {
  require_composite(graph);
  return graph.weight == 1;
}

bool totally_asymmetric(const WeightedGraph& graph) {
  require_composite(graph);
  return graph.weight == Rational(factorial(graph.summary.order));
}

}  // namespace vgraph

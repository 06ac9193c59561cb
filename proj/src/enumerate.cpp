#include "vgraph/enumerate.hpp"

#include <optional>
#include <set>

#include "vgraph/error.hpp"

namespace vgraph {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::composite: return "composite";
    case Regime::inverse: return "inverse";
    case Regime::ode: return "ode";
  }
  return "?";
}

Regime parse_regime(std::string_view text) {
  if (text == "composite") return Regime::composite;
  if (text == "inverse") return Regime::inverse;
  if (text == "ode") return Regime::ode;
  throw InvalidArgument("unknown regime '" + std::string(text) + "' (expected composite, inverse or ode)");
}

std::size_t DerivativeGraph::order() const {
  switch (regime) {
    case Regime::ode: return tree.cardinality();
    case Regime::composite: return tree.is_leaf() ? 0 : tree.entrance_count();
    case Regime::inverse: return tree.entrance_count();
  }
  return 0;
}

namespace {

using TreeSet = std::set<Tree>;

void validate_composite(const Tree& t, const SkeletonPalette& sk, bool is_root) {
  if (t.colour().index >= sk.size()) throw InvalidArgument("vertex colour outside the skeleton palette");
  const auto& node = sk.node(t.colour());
  if (node.variable) {
    if (!t.is_leaf()) throw InvalidArgument("base-variable vertex '" + node.name + "' has children");
    return;
  }
  if (t.is_leaf() && !is_root)
    throw InvalidArgument("function vertex '" + node.name + "' carries no derivative");
  for (const auto& c : t.children()) {
    if (c.colour().index >= sk.size() || sk.node(c.colour()).parent != t.colour().index)
      throw InvalidArgument("child of '" + node.name + "' is not one of its skeleton arguments");
    validate_composite(c, sk, false);
  }
}

void validate_single_colour(const Tree& t) {
  if (t.colour().index != 0) throw InvalidArgument("ode and inverse trees use the single default colour");
  for (const auto& c : t.children()) validate_single_colour(c);
}

void validate_inverse(const Tree& t) {
  if (t.degree() == 1) throw InvalidArgument("inverse-regime trees have no unary vertices");
  for (const auto& c : t.children()) validate_inverse(c);
}

std::vector<Tree> replace_child(const Tree& t, std::size_t i, Tree replacement) {
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids[i] = std::move(replacement);
  return kids;
}

std::vector<Tree> with_child(const Tree& t, Tree extra) {
  std::vector<Tree> kids(t.children().begin(), t.children().end());
  kids.push_back(std::move(extra));
  return kids;
}

/// Applies `local` at every vertex of `t` and collects the resulting trees.
template <class Local>
void expand_everywhere(const Tree& t, const Local& local, std::vector<Tree>& out) {
  local(t, out);
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0 && kids[i] == kids[i - 1]) continue;
    std::vector<Tree> sub;
    expand_everywhere(kids[i], local, sub);
    for (auto& s : sub) out.emplace_back(t.colour(), replace_child(t, i, std::move(s)));
  }
}

/// First-derivative chains from a skeleton node down to each reachable base
/// variable, one per argument path.
std::vector<std::vector<Tree>> build_chains(const SkeletonPalette& sk) {
  std::vector<std::vector<Tree>> chains(sk.size());
  for (std::size_t idx = sk.size(); idx-- > 0;) {
    const auto& node = sk.node(idx);
    for (std::size_t a : node.args) {
      const auto& arg = sk.node(a);
      if (arg.variable) {
        chains[idx].push_back(Tree::leaf(arg.colour));
      } else {
        for (const auto& c : chains[a]) chains[idx].emplace_back(arg.colour, std::vector<Tree>{c});
      }
    }
  }
  return chains;
}

template <class Step>
TreeSet iterate(TreeSet frontier, std::size_t steps, const Step& step) {
  for (std::size_t k = 0; k < steps; ++k) {
    TreeSet next;
    for (const auto& t : frontier) {
      std::vector<Tree> grown;
      expand_everywhere(t, step, grown);
      for (auto& g : grown) next.insert(std::move(g));
    }
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<DerivativeGraph> to_graphs(const TreeSet& trees, Regime regime,
                                       const std::shared_ptr<const SkeletonPalette>& sk) {
  std::vector<DerivativeGraph> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(DerivativeGraph{t, regime, sk});
  return out;
}

}  // namespace

void validate(const DerivativeGraph& graph) {
  switch (graph.regime) {
    case Regime::composite:
      if (!graph.skeleton) throw InvalidArgument("composite-regime graph without a skeleton");
      if (graph.tree.colour().index != 0) throw InvalidArgument("composite root must be the skeleton root");
      validate_composite(graph.tree, *graph.skeleton, true);
      return;
    case Regime::inverse:
      validate_single_colour(graph.tree);
      validate_inverse(graph.tree);
      return;
    case Regime::ode:
      validate_single_colour(graph.tree);
      return;
  }
}

std::vector<unsigned> slot_orders(const Tree& vertex, const SkeletonPalette& skeleton) {
  const auto& node = skeleton.node(vertex.colour());
  std::vector<unsigned> orders(node.args.size(), 0);
  for (const auto& c : vertex.children()) ++orders.at(skeleton.node(c.colour()).slot);
  return orders;
}

DerivativeGraph order_zero_graph(std::shared_ptr<const SkeletonPalette> skeleton) {
  if (!skeleton) throw InvalidArgument("composite regime requires a skeleton");
  if (skeleton->root().variable)
    throw InvalidArgument("skeleton root must be a function, not the base variable '" +
                          skeleton->root().name + "'");
  Tree root = Tree::leaf(skeleton->root().colour);
  return DerivativeGraph{std::move(root), Regime::composite, std::move(skeleton)};
}

std::vector<DerivativeGraph> enumerate_composite(std::shared_ptr<const SkeletonPalette> skeleton,
                                                 std::size_t n) {
  if (n == 0) throw InvalidArgument("composite enumeration needs order n >= 1; order 0 is the skeleton itself");
  DerivativeGraph seed = order_zero_graph(skeleton);
  const auto chains = build_chains(*skeleton);
  const SkeletonPalette& sk = *skeleton;
  auto differentiate = [&](const Tree& v, std::vector<Tree>& out) {
    if (sk.node(v.colour()).variable) return;
    for (const auto& c : chains[v.colour().index]) out.emplace_back(v.colour(), with_child(v, c));
  };
  return to_graphs(iterate(TreeSet{seed.tree}, n, differentiate), Regime::composite, skeleton);
}

std::vector<DerivativeGraph> enumerate_composite(const Skeleton& skeleton, std::size_t n) {
  return enumerate_composite(std::make_shared<const SkeletonPalette>(skeleton), n);
}

std::vector<DerivativeGraph> enumerate_ode(std::size_t n) {
  if (n == 0) throw InvalidArgument("ode enumeration needs order n >= 1");
  auto attach = [](const Tree& v, std::vector<Tree>& out) {
    out.emplace_back(v.colour(), with_child(v, Tree::leaf()));
  };
  return to_graphs(iterate(TreeSet{Tree::leaf()}, n - 1, attach), Regime::ode, nullptr);
}

DerivativeGraph inverse_first_order() { return DerivativeGraph{Tree::leaf(), Regime::inverse, nullptr}; }

std::vector<DerivativeGraph> enumerate_inverse(std::size_t n) {
  if (n < 2) throw InvalidArgument("inverse enumeration needs order n >= 2; Dg is the closed form (Df(g(y)))^-1");
  // Differentiating D^k f adds an entrance to that vertex; differentiating the
  // Dg that closes a vertex (or an entrance) inserts a new D^2 f above it.
  auto grow = [](const Tree& v, std::vector<Tree>& out) {
    if (!v.is_leaf()) out.emplace_back(v.colour(), with_child(v, Tree::leaf()));
    out.emplace_back(Colour{}, std::vector<Tree>{v, Tree::leaf()});
  };
  return to_graphs(iterate(TreeSet{Tree::leaf()}, n - 1, grow), Regime::inverse, nullptr);
}

std::vector<DerivativeGraph> enumerate(Regime regime, std::size_t n,
                                       std::shared_ptr<const SkeletonPalette> skeleton) {
  switch (regime) {
    case Regime::composite:
      if (!skeleton) throw InvalidArgument("composite regime requires a skeleton");
      return enumerate_composite(std::move(skeleton), n);
    case Regime::ode:
      return enumerate_ode(n);
    case Regime::inverse:
      if (n == 1) return {inverse_first_order()};
      return enumerate_inverse(n);
  }
  return {};
}

namespace {

/// Each way of removing one entrance below `t`; nullopt when `t` vanishes.
std::vector<std::optional<Tree>> remove_one(const Tree& t, Regime regime, bool is_root) {
  if (t.is_leaf()) return {std::nullopt};
  std::vector<std::optional<Tree>> out;
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0 && kids[i] == kids[i - 1]) continue;
    for (auto& r : remove_one(kids[i], regime, false)) {
      std::vector<Tree> rest;
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (j != i) rest.push_back(kids[j]);
      if (r) rest.push_back(std::move(*r));
      if (regime == Regime::composite && rest.empty() && !is_root) {
        out.emplace_back(std::nullopt);
      } else if (regime == Regime::inverse && rest.size() == 1) {
        out.emplace_back(std::move(rest.front()));
      } else {
        out.emplace_back(Tree(t.colour(), std::move(rest)));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Tree> delete_entrance(const DerivativeGraph& graph) {
  if (graph.order() <= 1 && graph.regime != Regime::composite) return {};
  if (graph.order() == 0) return {};
  TreeSet out;
  for (auto& r : remove_one(graph.tree, graph.regime, true))
    if (r) out.insert(std::move(*r));
  return {out.begin(), out.end()};
}

}  // namespace vgraph

#pragma once

// Exhaustive structural checks shared by the unit tests and the acceptance
// gate. Each returns the number of violations found.

#include <functional>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "vgraph/tree.hpp"

namespace props {

struct Count {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

inline std::vector<vgraph::Tree> canonical_classes(int max_vertices, int colours) {
  auto palette = bf::palette_of(colours);
  std::set<vgraph::Tree> out;
  for (int v = 1; v <= max_vertices; ++v)
    for (const auto& p : bf::plane_trees(v, colours)) out.insert(vgraph::canonicalize(bf::to_raw(p, palette)));
  return {out.begin(), out.end()};
}

/// Trichotomy, antisymmetry, agreement with isomorphism and transitivity.
inline Count total_order(int max_vertices, int colours) {
  auto trees = canonical_classes(max_vertices, colours);
  Count c;
  for (const auto& a : trees)
    for (const auto& b : trees) {
      ++c.checked;
      auto ab = compare_trees(a, b), ba = compare_trees(b, a);
      if ((ab == 0) != bf::isomorphic(bf::from_tree(a), bf::from_tree(b))) ++c.failures;
      if ((ab < 0) != (ba > 0) || (ab == 0) != (ba == 0)) ++c.failures;
    }
  for (const auto& a : trees)
    for (const auto& b : trees) {
      if (compare_trees(a, b) >= 0) continue;
      for (const auto& t : trees) {
        if (compare_trees(b, t) >= 0) continue;
        ++c.checked;
        if (compare_trees(a, t) >= 0) ++c.failures;
      }
    }
  return c;
}

/// Every plane tree, shuffled several times, canonicalizes to one tree, and
/// canonical trees are fixed points.
inline Count shuffle_invariance(int max_vertices, int colours, int shuffles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto palette = bf::palette_of(colours);
  Count c;
  for (int v = 1; v <= max_vertices; ++v)
    for (const auto& p : bf::plane_trees(v, colours)) {
      vgraph::RawTree raw = bf::to_raw(p, palette);
      vgraph::Tree t = vgraph::canonicalize(raw);
      ++c.checked;
      if (!(vgraph::canonicalize(vgraph::to_raw(t)) == t)) ++c.failures;
      for (int k = 0; k < shuffles; ++k) {
        vgraph::Tree s = vgraph::canonicalize(bf::shuffled(raw, rng));
        if (!(s == t) || vgraph::to_text(s) != vgraph::to_text(t)) ++c.failures;
      }
    }
  return c;
}

/// symmetry_number against the brute-force count of fixing child assignments.
inline Count symmetry_vs_automorphisms(int max_vertices, int colours) {
  Count c;
  for (const auto& t : canonical_classes(max_vertices, colours)) {
    auto p = bf::from_tree(t);
    ++c.checked;
    if (vgraph::symmetry_number(t) != vgraph::Integer(static_cast<long>(bf::fixing_assignments(p, p)))) ++c.failures;
  }
  return c;
}

/// For trees whose siblings are all isomorphic, S is the product of degree factorials.
inline Count uniform_sibling_symmetry(int max_vertices) {
  Count c;
  for (const auto& t : canonical_classes(max_vertices, 1)) {
    bool uniform = true;
    vgraph::Integer product = 1;
    std::function<void(const vgraph::Tree&)> walk = [&](const vgraph::Tree& v) {
      auto kids = v.children();
      for (std::size_t i = 1; i < kids.size(); ++i)
        if (!(kids[i] == kids[0])) uniform = false;
      product *= vgraph::factorial(v.degree());
      for (const auto& k : kids) walk(k);
    };
    walk(t);
    if (!uniform) continue;
    ++c.checked;
    if (vgraph::symmetry_number(t) != product) ++c.failures;
  }
  return c;
}

}  // namespace props

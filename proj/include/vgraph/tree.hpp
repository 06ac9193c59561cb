#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vgraph/numeric.hpp"

namespace vgraph {

/// A vertex colour. Colours are ranked by `index` within one palette; the
/// name is only used for printing and parsing.
struct Colour {
  std::uint32_t index = 0;
  std::string name = "*";

  friend bool operator==(const Colour& a, const Colour& b) noexcept { return a.index == b.index; }
};

/// An ordered set of colours with unique indices and names.
class Palette {
 public:
  Palette() = default;

  /// The one-colour palette whose only colour is named `*`.
  static Palette single();

  const Colour& add(std::string name);
  const Colour& at(std::uint32_t index) const;
  std::optional<Colour> find(std::string_view name) const;
  std::size_t size() const noexcept { return colours_.size(); }
  std::span<const Colour> colours() const noexcept { return colours_; }

 private:
  std::vector<Colour> colours_;
};

class Tree;

/// A coloured rooted tree whose children are in no particular order. Input to
/// `canonicalize`.
struct RawTree {
  Colour colour;
  std::vector<RawTree> children;
};

/// Immutable coloured rooted tree kept in canonical form: every child list is
/// sorted non-decreasingly under `compare_trees`, so two trees are equal
/// exactly when they are isomorphic as coloured rooted trees.
class Tree {
 public:
  explicit Tree(Colour colour, std::vector<Tree> children = {});

  static Tree leaf(Colour colour = {}) { return Tree(std::move(colour)); }
  /// Path of `vertices` vertices of one colour.
  static Tree chain(std::size_t vertices, const Colour& colour = {});

  const Colour& colour() const noexcept { return colour_; }
  std::span<const Tree> children() const noexcept { return children_; }
  std::size_t degree() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  std::size_t cardinality() const noexcept { return cardinality_; }
  std::size_t entrance_count() const noexcept { return entrances_; }

 private:
  Colour colour_;
  std::vector<Tree> children_;
  std::size_t cardinality_;
  std::size_t entrances_;
};

/// Natural order: root colour index, then root degree, then children
/// pairwise from the left.
std::strong_ordering compare_trees(const Tree& a, const Tree& b);

inline bool operator==(const Tree& a, const Tree& b) { return compare_trees(a, b) == 0; }
inline std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return compare_trees(a, b); }

Tree canonicalize(const RawTree& raw);
RawTree to_raw(const Tree& tree);

/// Order of the colour-preserving automorphism group.
Integer symmetry_number(const Tree& tree);

/// Product over vertices of the vertex counts of their child subtrees.
Integer complexity_number(const Tree& tree);

inline std::size_t cardinality(const Tree& tree) { return tree.cardinality(); }
inline std::size_t entrance_count(const Tree& tree) { return tree.entrance_count(); }

/// Resolves a colour name while parsing. `parent` is empty for the root.
using ColourResolver =
    std::function<std::optional<Colour>(const std::optional<Colour>& parent, std::string_view name)>;

/// `name{child,child,...}`, children in canonical order, `name{}` for a leaf.
std::string to_text(const Tree& tree);

/// Parses tree notation. Child order in the input is irrelevant.
Tree parse_tree(std::string_view text, const Palette& palette);
Tree parse_tree(std::string_view text, const ColourResolver& resolve);

nlohmann::json to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& json, const Palette& palette);

}  // namespace vgraph

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgraph/tree.hpp"

namespace vgraph {

/// A composition of named functions, e.g. `f(g(x),h(x,y))`. Nodes without
/// arguments are base variables.
struct Skeleton {
  std::string name;
  std::vector<Skeleton> args;

  std::size_t arity() const noexcept { return args.size(); }
  bool is_variable() const noexcept { return args.empty(); }
};

/// Nested-application syntax. Identifiers are `[A-Za-z_][A-Za-z0-9_]*`;
/// whitespace is ignored.
Skeleton parse_skeleton(std::string_view text);
std::string to_text(const Skeleton& skeleton);

/// Colours a skeleton: one colour per node, ranked in pre-order. Colour names
/// are the node names, suffixed with `.k` (k = 1-based argument slot) where
/// two arguments of one function share a name.
class SkeletonPalette {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    Colour colour;
    std::string name;
    bool variable = false;
    std::size_t parent = npos;
    std::size_t slot = 0;             // argument position in the parent
    std::vector<std::size_t> args;    // colour indices, by slot
    std::string expression;           // e.g. "g(x)"; identifies function and evaluation point
    std::string arguments;            // e.g. "x" for g(x); empty for variables
  };

  explicit SkeletonPalette(Skeleton skeleton);

  const Skeleton& skeleton() const noexcept { return skeleton_; }
  const Node& node(std::size_t colour_index) const { return nodes_.at(colour_index); }
  const Node& node(const Colour& colour) const { return node(colour.index); }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& root() const { return nodes_.front(); }

  /// Colour of the argument named `name` of `parent` (the root when empty).
  std::optional<Colour> resolve(const std::optional<Colour>& parent, std::string_view name) const;
  ColourResolver resolver() const;

 private:
  std::size_t add(const Skeleton& s, std::size_t parent, std::size_t slot, std::string name);

  Skeleton skeleton_;
  std::vector<Node> nodes_;
};

}  // namespace vgraph

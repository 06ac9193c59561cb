#include "vgraph/skeleton.hpp"

#include <cctype>
#include <map>

#include "vgraph/error.hpp"

namespace vgraph {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class SkeletonParser {
 public:
  explicit SkeletonParser(std::string_view text) : text_(text) {}

  Skeleton parse() {
    Skeleton s = node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after skeleton", pos_);
    return s;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Skeleton node() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw ParseError("expected function or variable name", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    Skeleton s{std::string(text_.substr(start, pos_ - start)), {}};
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        s.args.push_back(node());
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unterminated argument list", pos_);
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ')'", pos_);
      }
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const Skeleton& s, std::string& out) {
  out += s.name;
  if (s.is_variable()) return;
  out += '(';
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) out += ',';
    write(s.args[i], out);
  }
  out += ')';
}

void check_names(const Skeleton& s) {
  if (s.name.empty() || !ident_start(s.name.front()))
    throw InvalidArgument("skeleton contains an unnamed or badly named function");
  for (char c : s.name)
    if (!ident_char(c)) throw InvalidArgument("invalid character in skeleton name '" + s.name + "'");
  for (const auto& a : s.args) check_names(a);
}

}  // namespace

Skeleton parse_skeleton(std::string_view text) { return SkeletonParser(text).parse(); }

std::string to_text(const Skeleton& skeleton) {
  std::string out;
  write(skeleton, out);
  return out;
}

SkeletonPalette::SkeletonPalette(Skeleton skeleton) : skeleton_(std::move(skeleton)) {
  check_names(skeleton_);
  add(skeleton_, npos, 0, skeleton_.name);
}

std::size_t SkeletonPalette::add(const Skeleton& s, std::size_t parent, std::size_t slot,
                                 std::string name) {
  std::size_t index = nodes_.size();
  Node n;
  n.colour = Colour{static_cast<std::uint32_t>(index), name};
  n.name = s.name;
  n.variable = s.is_variable();
  n.parent = parent;
  n.slot = slot;
  n.expression = to_text(s);
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) n.arguments += ',';
    n.arguments += to_text(s.args[i]);
  }
  nodes_.push_back(std::move(n));
  // Palette names must be unique; distinct skeleton positions can share a
  // display name, so the palette is keyed by index only.
  std::map<std::string, int> seen;
  for (const auto& a : s.args) ++seen[a.name];
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    std::string child_name = s.args[i].name;
    if (seen[child_name] > 1) child_name += "." + std::to_string(i + 1);
    std::size_t child = add(s.args[i], index, i, child_name);
    nodes_[index].args.push_back(child);
  }
  return index;
}

std::optional<Colour> SkeletonPalette::resolve(const std::optional<Colour>& parent,
                                               std::string_view name) const {
  if (!parent) {
    if (root().colour.name == name) return root().colour;
    return std::nullopt;
  }
  if (parent->index >= nodes_.size()) return std::nullopt;
  for (std::size_t a : nodes_[parent->index].args)
    if (nodes_[a].colour.name == name) return nodes_[a].colour;
  return std::nullopt;
}

ColourResolver SkeletonPalette::resolver() const {
  return [this](const std::optional<Colour>& parent, std::string_view name) {
    return resolve(parent, name);
  };
}

}  // namespace vgraph

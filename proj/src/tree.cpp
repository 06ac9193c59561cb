#include "vgraph/tree.hpp"

#include <algorithm>
#include <cctype>

#include "vgraph/error.hpp"

namespace vgraph {

Palette Palette::single() {
  Palette palette;
  palette.add("*");
  return palette;
}

const Colour& Palette::add(std::string name) {
  if (name.empty()) throw InvalidArgument("colour name must not be empty");
  if (find(name)) throw InvalidArgument("duplicate colour name '" + name + "'");
  colours_.push_back(Colour{static_cast<std::uint32_t>(colours_.size()), std::move(name)});
  return colours_.back();
}

const Colour& Palette::at(std::uint32_t index) const {
  if (index >= colours_.size()) throw InvalidArgument("colour index out of range");
  return colours_[index];
}

std::optional<Colour> Palette::find(std::string_view name) const {
  for (const auto& c : colours_)
    if (c.name == name) return c;
  return std::nullopt;
}

Tree::Tree(Colour colour, std::vector<Tree> children)
    : colour_(std::move(colour)), children_(std::move(children)), cardinality_(1), entrances_(0) {
  std::sort(children_.begin(), children_.end(),
            [](const Tree& a, const Tree& b) { return compare_trees(a, b) < 0; });
  for (const auto& c : children_) {
    cardinality_ += c.cardinality_;
    entrances_ += c.entrances_;
  }
  if (children_.empty()) entrances_ = 1;
}

Tree Tree::chain(std::size_t vertices, const Colour& colour) {
  if (vertices == 0) throw InvalidArgument("a tree has at least one vertex");
  Tree t = leaf(colour);
  for (std::size_t i = 1; i < vertices; ++i) t = Tree(colour, {std::move(t)});
  return t;
}

std::strong_ordering compare_trees(const Tree& a, const Tree& b) {
  if (auto c = a.colour().index <=> b.colour().index; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ac = a.children();
  auto bc = b.children();
  for (std::size_t i = 0; i < ac.size(); ++i)
    if (auto c = compare_trees(ac[i], bc[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

Tree canonicalize(const RawTree& raw) {
  std::vector<Tree> children;
  children.reserve(raw.children.size());
  for (const auto& c : raw.children) children.push_back(canonicalize(c));
  return Tree(raw.colour, std::move(children));
}

RawTree to_raw(const Tree& tree) {
  RawTree raw{tree.colour(), {}};
  for (const auto& c : tree.children()) raw.children.push_back(to_raw(c));
  return raw;
}

Integer symmetry_number(const Tree& tree) {
  Integer s = 1;
  auto children = tree.children();
  std::size_t run = 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    s *= symmetry_number(children[i]);
    run = (i > 0 && children[i] == children[i - 1]) ? run + 1 : 1;
    s *= run;  // accumulates m! over each run of isomorphic siblings
  }
  return s;
}

Integer complexity_number(const Tree& tree) {
  Integer tau = 1;
  for (const auto& c : tree.children()) {
    tau *= static_cast<unsigned long>(c.cardinality());
    tau *= complexity_number(c);
  }
  return tau;
}

namespace {

void write_text(const Tree& tree, std::string& out) {
  out += tree.colour().name;
  out += '{';
  bool first = true;
  for (const auto& c : tree.children()) {
    if (!first) out += ',';
    first = false;
    write_text(c, out);
  }
  out += '}';
}

class TreeParser {
 public:
  TreeParser(std::string_view text, const ColourResolver& resolve) : text_(text), resolve_(resolve) {}

  Tree parse() {
    Tree t = node(std::nullopt);
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Tree node(const std::optional<Colour>& parent) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '{' && text_[pos_] != '}' && text_[pos_] != ',' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected colour name", pos_);
    std::string_view name = text_.substr(start, pos_ - start);
    auto colour = resolve_(parent, name);
    if (!colour) throw ParseError("unknown colour '" + std::string(name) + "'", start);
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '{') throw ParseError("expected '{'", pos_);
    ++pos_;
    std::vector<Tree> children;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return Tree(*colour);
    }
    for (;;) {
      children.push_back(node(colour));
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unterminated child list", pos_);
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == '}') {
        ++pos_;
        break;
      }
      throw ParseError("expected ',' or '}'", pos_);
    }
    return Tree(*colour, std::move(children));
  }

  std::string_view text_;
  const ColourResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Tree& tree) {
  std::string out;
  write_text(tree, out);
  return out;
}

Tree parse_tree(std::string_view text, const ColourResolver& resolve) {
  return TreeParser(text, resolve).parse();
}

Tree parse_tree(std::string_view text, const Palette& palette) {
  ColourResolver resolve = [&palette](const std::optional<Colour>&, std::string_view name) {
    return palette.find(name);
  };
  return parse_tree(text, resolve);
}

nlohmann::json to_json(const Tree& tree) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : tree.children()) children.push_back(to_json(c));
  return {{"colour", {{"index", tree.colour().index}, {"name", tree.colour().name}}},
          {"children", std::move(children)}};
}

Tree tree_from_json(const nlohmann::json& json, const Palette& palette) {
  try {
    const auto& colour = json.at("colour");
    const Colour& c = palette.at(colour.at("index").get<std::uint32_t>());
    if (c.name != colour.at("name").get<std::string>())
      throw InvalidArgument("colour name does not match palette index");
    std::vector<Tree> children;
    for (const auto& child : json.at("children")) children.push_back(tree_from_json(child, palette));
    return Tree(c, std::move(children));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed tree JSON: ") + e.what());
  }
}

}  // namespace vgraph

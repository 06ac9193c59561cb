#include "vgraph/listing.hpp"

#include <algorithm>

#include "vgraph/error.hpp"

namespace vgraph {
namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

nlohmann::json graphs_document(const std::vector<WeightedGraph>& graphs) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& g : graphs) list.push_back(to_json(g));
  nlohmann::json doc = {{"count", graphs.size()}, {"graphs", std::move(list)}};
  if (!graphs.empty()) {
    doc["regime"] = std::string(to_string(graphs.front().graph.regime));
    doc["order"] = graphs.front().summary.order;
    if (graphs.front().graph.skeleton) doc["skeleton"] = to_text(graphs.front().graph.skeleton->skeleton());
  }
  return doc;
}

void reject_latex(Style style, const char* what) {
  if (style == Style::latex) throw UnsupportedStyle(std::string("latex style is not available for ") + what);
}

}  // namespace

nlohmann::json to_json(const WeightedGraph& g) {
  return {{"tree", to_text(g.graph.tree)},
          {"structure", to_json(g.graph.tree)},
          {"regime", std::string(to_string(g.graph.regime))},
          {"order", g.summary.order},
          {"symmetry", g.summary.symmetry.get_str()},
          {"complexity", g.summary.complexity.get_str()},
          {"sign", g.sign},
          {"weight", g.weight.get_str()},
          {"term", render_term(g, Style::machine)}};
}

std::string render_tree_listing(const std::vector<WeightedGraph>& graphs, Style style) {
  reject_latex(style, "tree listings");
  if (style == Style::machine) return graphs_document(graphs).dump(2) + "\n";
  std::string out;
  for (const auto& g : graphs) out += to_text(g.graph.tree) + "\n";
  return out;
}

std::string render_table(const std::vector<WeightedGraph>& graphs, Style style) {
  reject_latex(style, "tables");
  if (style == Style::machine) return graphs_document(graphs).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{{"tree", "S", "τ", "sign", "weight"}};
  for (const auto& g : graphs)
    rows.push_back({to_text(g.graph.tree), g.summary.symmetry.get_str(), g.summary.complexity.get_str(),
                    g.sign < 0 ? "-" : "+", g.weight.get_str()});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string render_formula_output(const Formula& formula, Style style) {
  if (style != Style::machine) return to_string(formula, style) + "\n";
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : formula.terms) terms.push_back(to_json(t.source));
  nlohmann::json doc = {{"regime", std::string(to_string(formula.regime))},
                        {"order", formula.order},
                        {"formula", to_string(formula, Style::machine)},
                        {"terms", std::move(terms)}};
  return doc.dump(2) + "\n";
}

}  // namespace vgraph

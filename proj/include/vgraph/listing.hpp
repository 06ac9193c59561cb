#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vgraph/formula.hpp"

namespace vgraph {

nlohmann::json to_json(const WeightedGraph& graph);

/// One tree per line in natural order (text), or a JSON document (machine).
std::string render_tree_listing(const std::vector<WeightedGraph>& graphs, Style style);

/// Aligned columns tree, S, tau, sign, weight (text), or JSON (machine).
std::string render_table(const std::vector<WeightedGraph>& graphs, Style style);

/// The formula on one line (text, latex), or JSON carrying the machine form.
std::string render_formula_output(const Formula& formula, Style style);

}  // namespace vgraph

#include "vgraph/vgraph.h"

#include <array>
#include <map>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "vgraph/error.hpp"
#include "vgraph/listing.hpp"
#include "vgraph/verify.hpp"

struct vg_skeleton {
  std::shared_ptr<const vgraph::SkeletonPalette> palette;
  std::string text;
};

struct vg_graph_set {
  std::vector<vgraph::WeightedGraph> graphs;
  struct Row {
    std::string tree, symmetry, complexity, weight;
  };
  std::vector<Row> rows;
  mutable std::map<std::pair<std::size_t, int>, std::string> terms;
  mutable std::array<std::optional<std::string>, 3> listing, table;
};

struct vg_formula {
  vgraph::Formula formula;
  mutable std::array<std::optional<std::string>, 3> rendered;
};

struct vg_report {
  vgraph::VerifyReport report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_position = static_cast<std::size_t>(-1);

vg_status fail(vg_status status, const std::string& message, std::size_t position = static_cast<std::size_t>(-1)) {
  last_error = message;
  last_error_position = position;
  return status;
}

template <class Body>
vg_status guarded(Body&& body) {
  last_error.clear();
  last_error_position = static_cast<std::size_t>(-1);
  try {
    body();
    return VG_OK;
  } catch (const vgraph::ParseError& e) {
    return fail(VG_ERROR_PARSE, e.what(), e.position());
  } catch (const vgraph::OrderLimitError& e) {
    return fail(VG_ERROR_ORDER_LIMIT, e.what());
  } catch (const vgraph::UnsupportedStyle& e) {
    return fail(VG_ERROR_UNSUPPORTED_STYLE, e.what());
  } catch (const vgraph::InvalidArgument& e) {
    return fail(VG_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VG_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VG_ERROR_INTERNAL, e.what());
  }
}

vgraph::Regime to_regime(vg_regime r) {
  switch (r) {
    case VG_REGIME_COMPOSITE: return vgraph::Regime::composite;
    case VG_REGIME_INVERSE: return vgraph::Regime::inverse;
    case VG_REGIME_ODE: return vgraph::Regime::ode;
  }
  throw vgraph::InvalidArgument("unknown regime value");
}

vgraph::Style to_style(vg_style s) {
  switch (s) {
    case VG_STYLE_TEXT: return vgraph::Style::text;
    case VG_STYLE_LATEX: return vgraph::Style::latex;
    case VG_STYLE_MACHINE: return vgraph::Style::machine;
  }
  throw vgraph::UnsupportedStyle("unknown style value");
}

std::shared_ptr<const vgraph::SkeletonPalette> skeleton_for(vg_regime regime, const vg_skeleton* skeleton) {
  if (regime != VG_REGIME_COMPOSITE) return nullptr;
  if (!skeleton) throw vgraph::InvalidArgument("composite regime requires a skeleton");
  return skeleton->palette;
}

void check_order(unsigned order, unsigned max_order) {
  if (order < 1) throw vgraph::InvalidArgument("order must be >= 1");
  if (order > max_order)
    throw vgraph::OrderLimitError("order " + std::to_string(order) + " exceeds the supported limit " +
                                  std::to_string(max_order) + " (raise it with --max-order)");
}

void require(const void* p, const char* what) {
  if (!p) throw vgraph::InvalidArgument(std::string(what) + " must not be null");
}

const vg_graph_set::Row* row(const vg_graph_set* set, std::size_t index) {
  if (!set || index >= set->rows.size()) return nullptr;
  return &set->rows[index];
}

}  // namespace

extern "C" {

const char* vg_version(void) { return "1.0.0"; }
const char* vg_last_error(void) { return last_error.c_str(); }
size_t vg_last_error_position(void) { return last_error_position; }

vg_status vg_regime_from_string(const char* text, vg_regime* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    switch (vgraph::parse_regime(text)) {
      case vgraph::Regime::composite: *out = VG_REGIME_COMPOSITE; break;
      case vgraph::Regime::inverse: *out = VG_REGIME_INVERSE; break;
      case vgraph::Regime::ode: *out = VG_REGIME_ODE; break;
    }
  });
}

vg_status vg_style_from_string(const char* text, vg_style* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    switch (vgraph::parse_style(text)) {
      case vgraph::Style::text: *out = VG_STYLE_TEXT; break;
      case vgraph::Style::latex: *out = VG_STYLE_LATEX; break;
      case vgraph::Style::machine: *out = VG_STYLE_MACHINE; break;
    }
  });
}

vg_status vg_skeleton_parse(const char* text, vg_skeleton** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto palette = std::make_shared<const vgraph::SkeletonPalette>(vgraph::parse_skeleton(text));
    if (palette->root().variable)
      throw vgraph::InvalidArgument("skeleton root must be a function, not the base variable '" +
                                    palette->root().name + "'");
    std::string canonical = vgraph::to_text(palette->skeleton());
    *out = new vg_skeleton{std::move(palette), std::move(canonical)};
  });
}

const char* vg_skeleton_text(const vg_skeleton* skeleton) { return skeleton ? skeleton->text.c_str() : nullptr; }
void vg_skeleton_destroy(vg_skeleton* skeleton) { delete skeleton; }

vg_status vg_enumerate(vg_regime regime, unsigned order, const vg_skeleton* skeleton, unsigned max_order,
                       vg_graph_set** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    check_order(order, max_order);
    auto set = std::make_unique<vg_graph_set>();
    set->graphs = vgraph::weigh_all(vgraph::enumerate(to_regime(regime), order, skeleton_for(regime, skeleton)));
    for (const auto& g : set->graphs)
      set->rows.push_back({vgraph::to_text(g.graph.tree), g.summary.symmetry.get_str(),
                           g.summary.complexity.get_str(), g.weight.get_str()});
    *out = set.release();
  });
}

void vg_graph_set_destroy(vg_graph_set* set) { delete set; }
size_t vg_graph_set_size(const vg_graph_set* set) { return set ? set->graphs.size() : 0; }

const char* vg_graph_tree(const vg_graph_set* set, size_t index) {
  auto* r = row(set, index);
  return r ? r->tree.c_str() : nullptr;
}
const char* vg_graph_symmetry(const vg_graph_set* set, size_t index) {
  auto* r = row(set, index);
  return r ? r->symmetry.c_str() : nullptr;
}
const char* vg_graph_complexity(const vg_graph_set* set, size_t index) {
  auto* r = row(set, index);
  return r ? r->complexity.c_str() : nullptr;
}
const char* vg_graph_weight(const vg_graph_set* set, size_t index) {
  auto* r = row(set, index);
  return r ? r->weight.c_str() : nullptr;
}
int vg_graph_sign(const vg_graph_set* set, size_t index) {
  if (!set || index >= set->graphs.size()) return 0;
  return set->graphs[index].sign;
}

vg_status vg_graph_term(const vg_graph_set* set, size_t index, vg_style style, const char** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    if (index >= set->graphs.size()) throw vgraph::InvalidArgument("graph index out of range");
    auto key = std::make_pair(index, static_cast<int>(style));
    auto it = set->terms.find(key);
    if (it == set->terms.end())
      it = set->terms.emplace(key, vgraph::render_term(set->graphs[index], to_style(style))).first;
    *out = it->second.c_str();
  });
}

vg_status vg_graph_set_listing(const vg_graph_set* set, vg_style style, const char** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    vgraph::Style s = to_style(style);
    auto& slot = set->listing.at(static_cast<std::size_t>(style));
    if (!slot) slot = vgraph::render_tree_listing(set->graphs, s);
    *out = slot->c_str();
  });
}

vg_status vg_graph_set_table(const vg_graph_set* set, vg_style style, const char** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    vgraph::Style s = to_style(style);
    auto& slot = set->table.at(static_cast<std::size_t>(style));
    if (!slot) slot = vgraph::render_table(set->graphs, s);
    *out = slot->c_str();
  });
}

vg_status vg_formula_compute(vg_regime regime, unsigned order, const vg_skeleton* skeleton, unsigned max_order,
                             vg_formula** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    check_order(order, max_order);
    auto f = std::make_unique<vg_formula>();
    f->formula = vgraph::render_derivative(to_regime(regime), order, skeleton_for(regime, skeleton));
    *out = f.release();
  });
}

vg_status vg_formula_render(const vg_formula* formula, vg_style style, const char** out) {
  return guarded([&] {
    require(formula, "formula");
    require(out, "out");
    vgraph::Style s = to_style(style);
    auto& slot = formula->rendered.at(static_cast<std::size_t>(style));
    if (!slot) slot = vgraph::render_formula_output(formula->formula, s);
    *out = slot->c_str();
  });
}

void vg_formula_destroy(vg_formula* formula) { delete formula; }

vg_status vg_verify(vg_regime regime, unsigned order, const vg_skeleton* skeleton, unsigned max_order,
                    unsigned trials, uint64_t seed, vg_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    check_order(order, max_order);
    auto r = std::make_unique<vg_report>();
    r->report = vgraph::verify(to_regime(regime), order, trials, seed, skeleton_for(regime, skeleton));
    r->text = vgraph::to_text(r->report);
    r->json = vgraph::to_json(r->report).dump(2) + "\n";
    *out = r.release();
  });
}

int vg_report_passed(const vg_report* report) { return report && report->report.passed ? 1 : 0; }
const char* vg_report_text(const vg_report* report) { return report ? report->text.c_str() : nullptr; }
const char* vg_report_json(const vg_report* report) { return report ? report->json.c_str() : nullptr; }
void vg_report_destroy(vg_report* report) { delete report; }

}  // extern "C"

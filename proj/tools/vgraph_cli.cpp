// Command-line front end over the vgraph C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vgraph/vgraph.h"

namespace {

constexpr int kExitFailure = 1;  // verification mismatch
constexpr int kExitError = 2;    // bad arguments or input

struct Options {
  std::string regime;
  unsigned order = 0;
  std::string skeleton;
  std::string skeleton_file;
  std::string style = "text";
  std::string output;
  unsigned max_order = VG_DEFAULT_MAX_ORDER;
  unsigned trials = 20;
  std::uint64_t seed = 1;
};

struct Failure {
  std::string message;
};

void check(vg_status status) {
  if (status != VG_OK) throw Failure{vg_last_error()};
}

using SkeletonHandle = std::unique_ptr<vg_skeleton, decltype(&vg_skeleton_destroy)>;

SkeletonHandle load_skeleton(const Options& o, vg_regime regime) {
  SkeletonHandle handle(nullptr, &vg_skeleton_destroy);
  if (!o.skeleton.empty() && !o.skeleton_file.empty()) throw Failure{"give either --skeleton or --skeleton-file"};
  std::string text = o.skeleton;
  if (!o.skeleton_file.empty()) {
    std::ifstream in(o.skeleton_file);
    if (!in) throw Failure{"cannot read skeleton file '" + o.skeleton_file + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) {
    if (regime == VG_REGIME_COMPOSITE) throw Failure{"--regime composite requires --skeleton or --skeleton-file"};
    return handle;
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  vg_skeleton* raw = nullptr;
  if (vg_skeleton_parse(text.c_str(), &raw) != VG_OK) throw Failure{std::string("skeleton: ") + vg_last_error()};
  handle.reset(raw);
  return handle;
}

void emit(const Options& o, const std::string& data) {
  if (o.output.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Failure{"cannot write '" + o.output + "'"};
  out << data;
}

enum class Listing { trees, table };

int run_listing(const Options& o, Listing kind) {
  vg_regime regime;
  vg_style style;
  check(vg_regime_from_string(o.regime.c_str(), &regime));
  check(vg_style_from_string(o.style.c_str(), &style));
  auto skeleton = load_skeleton(o, regime);
  vg_graph_set* raw = nullptr;
  check(vg_enumerate(regime, o.order, skeleton.get(), o.max_order, &raw));
  std::unique_ptr<vg_graph_set, decltype(&vg_graph_set_destroy)> set(raw, &vg_graph_set_destroy);
  const char* text = nullptr;
  check(kind == Listing::trees ? vg_graph_set_listing(set.get(), style, &text)
                               : vg_graph_set_table(set.get(), style, &text));
  emit(o, text);
  return 0;
}

int run_formula(const Options& o) {
  vg_regime regime;
  vg_style style;
  check(vg_regime_from_string(o.regime.c_str(), &regime));
  check(vg_style_from_string(o.style.c_str(), &style));
  auto skeleton = load_skeleton(o, regime);
  vg_formula* raw = nullptr;
  check(vg_formula_compute(regime, o.order, skeleton.get(), o.max_order, &raw));
  std::unique_ptr<vg_formula, decltype(&vg_formula_destroy)> formula(raw, &vg_formula_destroy);
  const char* text = nullptr;
  check(vg_formula_render(formula.get(), style, &text));
  emit(o, text);
  return 0;
}

int run_verify(const Options& o) {
  vg_regime regime;
  vg_style style;
  check(vg_regime_from_string(o.regime.c_str(), &regime));
  check(vg_style_from_string(o.style.c_str(), &style));
  if (style == VG_STYLE_LATEX) throw Failure{"latex style is not available for verification reports"};
  auto skeleton = load_skeleton(o, regime);
  vg_report* raw = nullptr;
  check(vg_verify(regime, o.order, skeleton.get(), o.max_order, o.trials, o.seed, &raw));
  std::unique_ptr<vg_report, decltype(&vg_report_destroy)> report(raw, &vg_report_destroy);
  emit(o, style == VG_STYLE_MACHINE ? vg_report_json(report.get()) : vg_report_text(report.get()));
  return vg_report_passed(report.get()) ? 0 : kExitFailure;
}

void common_options(CLI::App* cmd, Options& o, bool with_style = true) {
  cmd->add_option("--regime", o.regime, "composite, inverse or ode")->required();
  cmd->add_option("--order", o.order, "derivative order n (>= 1)")->required();
  cmd->add_option("--skeleton", o.skeleton, "composition, e.g. 'f(g(x),h(x,y))'");
  cmd->add_option("--skeleton-file", o.skeleton_file, "file holding the composition");
  if (with_style) cmd->add_option("--style", o.style, "text, latex or machine (JSON)");
  cmd->add_option("--output,-o", o.output, "write to this file instead of stdout");
  cmd->add_option("--max-order", o.max_order, "largest accepted order");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual-graph derivative engine: enumerate, tabulate, emit and verify higher-order derivatives"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vg_version()));

  Options o;
  auto* trees = app.add_subcommand("trees", "list canonical trees in natural order");
  common_options(trees, o);
  auto* table = app.add_subcommand("table", "tabulate tree, S, tau, sign and weight");
  common_options(table, o);
  auto* formula = app.add_subcommand("formula", "emit the derivative formula");
  common_options(formula, o);
  auto* verify = app.add_subcommand("verify", "check the formula against truncated power series");
  common_options(verify, o);
  verify->add_option("--trials", o.trials, "number of random rational instances");
  verify->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*trees) return run_listing(o, Listing::trees);
    if (*table) return run_listing(o, Listing::table);
    if (*formula) return run_formula(o);
    if (*verify) return run_verify(o);
  } catch (const Failure& f) {
    std::cerr << "vgraph: " << f.message << "\n";
    return kExitError;
  }
  return kExitError;
}

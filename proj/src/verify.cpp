#include "vgraph/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "vgraph/jet.hpp"

namespace vgraph {
namespace {

/// Numerators in [-9, 9], denominators in [1, 9]. Draws use the raw engine
/// output so sequences are identical across standard libraries.
class SmallRationals {
 public:
  explicit SmallRationals(std::uint64_t seed) : rng_(seed) {}

  Rational draw(bool nonzero = false) {
    for (;;) {
      long num = static_cast<long>(rng_() % 19) - 9;
      unsigned long den = static_cast<unsigned long>(rng_() % 9) + 1;
      if (nonzero && num == 0) continue;
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
  }

 private:
  std::mt19937_64 rng_;
};

class SymbolTable {
 public:
  Polynomial get(const std::string& key, const std::string& display) {
    auto [it, inserted] = ids_.emplace(key, static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.push_back(display);
    return Polynomial::variable(it->second);
  }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
};

template <class R>
R scaled(const R& value, const Integer& factor) {
  return value * Rational(factor);
}

std::string field_display(unsigned k, Regime regime) {
  return render_symbol(Symbol{Symbol::Kind::field, "f", {k}, "", ""}, regime, Style::text);
}

// ----------------------------------------------------------------------------
// ode: y' = f(y)

template <class R>
struct OdeInstance {
  std::size_t n;
  Jet<R> poly;  // f as a polynomial in y
  R y0;
  std::vector<R> derivatives;  // f^(k)(y0)

  void finish() {
    derivatives.assign(n + 1, R(0));
    for (std::size_t k = 0; k <= n; ++k) {
      R total(0);
      for (std::size_t j = k; j <= poly.order(); ++j) {
        R p(1);
        for (std::size_t e = 0; e < j - k; ++e) p = p * y0;
        total = total + poly[j] * p * Rational(factorial(j) / factorial(j - k));
      }
      derivatives[k] = total;
    }
  }

  R value(const Symbol& s) const { return derivatives.at(s.orders.at(0)); }
  R oracle() const { return scaled(jet_ode_flow(poly, y0, n)[n], factorial(n)); }
};

OdeInstance<Rational> random_ode(std::size_t n, SmallRationals& rng) {
  OdeInstance<Rational> inst{n, Jet<Rational>(n), rng.draw(), {}};
  for (std::size_t j = 0; j <= n; ++j) inst.poly[j] = rng.draw();
  inst.finish();
  return inst;
}

OdeInstance<Polynomial> symbolic_ode(std::size_t n, SymbolTable& table) {
  OdeInstance<Polynomial> inst{n, Jet<Polynomial>(n), Polynomial(0), {}};
  for (std::size_t j = 0; j <= n; ++j) {
    Polynomial s = table.get("D" + std::to_string(j) + "f", field_display(static_cast<unsigned>(j), Regime::ode));
    inst.poly[j] = s * Rational(1, factorial(j));
  }
  inst.finish();
  return inst;
}

// ----------------------------------------------------------------------------
// inverse: g = f^{-1}, f expanded about the point g(y) with f_0 = 0

template <class R>
struct InverseInstance {
  std::size_t n;
  Jet<R> f;
  R inverse_linear;

  R value(const Symbol& s) const {
    if (s.kind == Symbol::Kind::inverse_factor) return inverse_linear;
    unsigned k = s.orders.at(0);
    return scaled(f[k], factorial(k));
  }
  R oracle() const { return scaled(jet_reverse(f, inverse_linear)[n], factorial(n)); }
};

InverseInstance<Rational> random_inverse(std::size_t n, SmallRationals& rng) {
  InverseInstance<Rational> inst{n, Jet<Rational>(n), Rational(0)};
  inst.f[1] = rng.draw(true);
  for (std::size_t k = 2; k <= n; ++k) inst.f[k] = rng.draw();
  inst.inverse_linear = 1 / inst.f[1];
  return inst;
}

InverseInstance<Polynomial> symbolic_inverse(std::size_t n, SymbolTable& table) {
  InverseInstance<Polynomial> inst{n, Jet<Polynomial>(n), table.get("Dg", "Dg")};
  inst.f[1] = table.get("D1f", field_display(1, Regime::inverse));
  for (std::size_t k = 2; k <= n; ++k)
    inst.f[k] = table.get("D" + std::to_string(k) + "f", field_display(static_cast<unsigned>(k), Regime::inverse)) *
                Rational(1, factorial(k));
  return inst;
}

// ----------------------------------------------------------------------------
// composite: every skeleton function carries a Taylor jet at its evaluation
// point; base variables move linearly, x(t) = x0 + c_x t.

template <class R>
struct CompositeInstance {
  std::size_t n;
  const SkeletonPalette* skeleton;
  std::map<std::string, MultiJet<R>> functions;  // by skeleton subexpression
  std::map<std::string, R> increments;           // by variable name

  R value(const Symbol& s) const {
    if (s.kind == Symbol::Kind::increment) return increments.at(s.name);
    Integer alpha_factorial = 1;
    for (unsigned a : s.orders) alpha_factorial *= factorial(a);
    return scaled(functions.at(s.expression).get(s.orders), alpha_factorial);
  }

  Jet<R> increment_of(std::size_t index) const {
    const auto& node = skeleton->node(index);
    if (node.variable) {
      Jet<R> j(n);
      if (n >= 1) j[1] = increments.at(node.name);
      return j;
    }
    Jet<R> out = apply(index);
    out[0] = R(0);
    return out;
  }

  Jet<R> apply(std::size_t index) const {
    const auto& node = skeleton->node(index);
    const auto& jet = functions.at(node.expression);
    if (node.args.size() == 1) {
      Jet<R> outer(n);
      for (std::size_t k = 0; k <= n; ++k) outer[k] = jet.get({static_cast<unsigned>(k)});
      return jet_compose(outer, increment_of(node.args[0]));
    }
    std::vector<Jet<R>> args;
    for (std::size_t a : node.args) args.push_back(increment_of(a));
    return multi_compose(jet, std::span<const Jet<R>>(args));
  }

  R oracle() const { return scaled(apply(0)[n], factorial(n)); }
};

template <class R, class Draw>
CompositeInstance<R> build_composite(std::size_t n, const SkeletonPalette& sk, Draw&& draw) {
  CompositeInstance<R> inst{n, &sk, {}, {}};
  for (std::size_t i = 0; i < sk.size(); ++i) {
    const auto& node = sk.node(i);
    if (node.variable) {
      if (!inst.increments.count(node.name)) inst.increments.emplace(node.name, draw.increment(node));
      continue;
    }
    if (inst.functions.count(node.expression)) continue;
    MultiJet<R> jet(node.args.size(), n);
    for (const auto& alpha : MultiJet<R>::indices(node.args.size(), n)) jet.set(alpha, draw.coefficient(node, alpha));
    inst.functions.emplace(node.expression, std::move(jet));
  }
  return inst;
}

struct RandomCompositeDraw {
  SmallRationals& rng;
  Rational increment(const SkeletonPalette::Node&) { return rng.draw(); }
  Rational coefficient(const SkeletonPalette::Node&, const std::vector<unsigned>&) { return rng.draw(); }
};

struct SymbolicCompositeDraw {
  SymbolTable& table;
  Polynomial increment(const SkeletonPalette::Node& node) {
    Symbol s{Symbol::Kind::increment, node.name, {}, node.expression, ""};
    return table.get(s.key(), render_symbol(s, Regime::composite, Style::text));
  }
  Polynomial coefficient(const SkeletonPalette::Node& node, const std::vector<unsigned>& alpha) {
    std::size_t total = 0;
    Integer alpha_factorial = 1;
    for (unsigned a : alpha) {
      total += a;
      alpha_factorial *= factorial(a);
    }
    if (total == 0) return Polynomial(0);
    Symbol s{Symbol::Kind::partial, node.name, alpha, node.expression, node.arguments};
    return table.get(s.key(), render_symbol(s, Regime::composite, Style::text)) * Rational(1, alpha_factorial);
  }
};

// ----------------------------------------------------------------------------

template <class R, class Instance>
R emitted_value(const Formula& formula, const Instance& inst) {
  return evaluate<R>(formula, [&inst](const Symbol& s) { return inst.value(s); });
}

template <class Instance>
void symbolic_check(VerifyReport& report, const Formula& formula, const Instance& inst,
                    const SymbolTable& table) {
  Polynomial expected = inst.oracle();
  std::map<Polynomial::Monomial, Rational> emitted;
  std::map<Polynomial::Monomial, std::vector<std::string>> sources;
  for (const auto& term : formula.terms) {
    Polynomial v = evaluate<Polynomial>(term, [&inst](const Symbol& s) { return inst.value(s); });
    for (const auto& [m, c] : v.terms()) {
      emitted[m] += c;
      sources[m].push_back(to_text(term.source.graph.tree));
    }
  }
  std::map<Polynomial::Monomial, MonomialCheck> checks;
  for (const auto& [m, c] : expected.terms()) checks[m].oracle = c;
  for (const auto& [m, c] : emitted) checks[m].formula = c;
  Rational worst = 0;
  for (auto& [m, check] : checks) {
    check.monomial = Polynomial::monomial_string(m, table.names());
    check.trees = sources[m];
    if (!check.matches()) {
      Rational gap = abs(check.oracle - check.formula);
      if (!report.worst_monomial || gap > worst) {
        worst = gap;
        report.worst_monomial = report.monomials.size();
      }
      for (const auto& t : check.trees) report.mismatching_trees.push_back(t);
    }
    report.monomials.push_back(std::move(check));
  }
}

template <class Instance>
void record_trial(VerifyReport& report, std::size_t trial, const Formula& formula, const Instance& inst) {
  TrialResult r{trial, inst.oracle(), emitted_value<Rational>(formula, inst)};
  Rational gap = abs(r.oracle - r.formula);
  if (gap > report.max_discrepancy) {
    report.max_discrepancy = gap;
    report.worst_trial = trial;
  }
  report.trial_results.push_back(std::move(r));
}

}  // namespace

VerifyReport verify(Regime regime, std::size_t n, std::size_t trials, std::uint64_t seed,
                    std::shared_ptr<const SkeletonPalette> skeleton) {
  if (n == 0) throw InvalidArgument("verify needs order n >= 1");
  if (regime == Regime::composite && !skeleton) throw InvalidArgument("composite regime requires a skeleton");
  return verify_formula(render_derivative(regime, n, skeleton), trials, seed, skeleton);
}

VerifyReport verify_formula(const Formula& formula, std::size_t trials, std::uint64_t seed,
                            std::shared_ptr<const SkeletonPalette> skeleton) {
  if (trials == 0) throw InvalidArgument("verify needs at least one trial");
  const Regime regime = formula.regime;
  const std::size_t n = formula.order;
  if (n == 0) throw InvalidArgument("verify needs order n >= 1");
  VerifyReport report;
  report.regime = regime;
  report.order = n;
  report.trials = trials;
  report.seed = seed;
  if (regime == Regime::composite) {
    if (!skeleton) throw InvalidArgument("composite regime requires a skeleton");
    report.skeleton = to_text(skeleton->skeleton());
  }

  for (const auto& t : formula.terms)
    report.terms.emplace_back(to_text(t.source.graph.tree), t.sign < 0 ? Rational(-t.weight) : t.weight);

  SmallRationals rng(seed);
  SymbolTable table;
  switch (regime) {
    case Regime::ode:
      for (std::size_t i = 0; i < trials; ++i) record_trial(report, i, formula, random_ode(n, rng));
      symbolic_check(report, formula, symbolic_ode(n, table), table);
      break;
    case Regime::inverse:
      for (std::size_t i = 0; i < trials; ++i) record_trial(report, i, formula, random_inverse(n, rng));
      symbolic_check(report, formula, symbolic_inverse(n, table), table);
      break;
    case Regime::composite: {
      for (std::size_t i = 0; i < trials; ++i)
        record_trial(report, i, formula, build_composite<Rational>(n, *skeleton, RandomCompositeDraw{rng}));
      auto sym = build_composite<Polynomial>(n, *skeleton, SymbolicCompositeDraw{table});
      symbolic_check(report, formula, sym, table);
      break;
    }
  }
  report.passed = report.max_discrepancy == 0 && !report.worst_monomial;
  return report;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "verify regime=" << to_string(r.regime);
  if (!r.skeleton.empty()) out << " skeleton=" << r.skeleton;
  out << " order=" << r.order << " trials=" << r.trials << " seed=" << r.seed << "\n";
  out << "terms: " << r.terms.size() << "\n";
  for (const auto& [tree, w] : r.terms) out << "  " << (w > 0 ? "+" : "") << w.get_str() << "  " << tree << "\n";
  std::size_t failed = 0;
  for (const auto& t : r.trial_results)
    if (t.oracle != t.formula) ++failed;
  out << "trials: " << (r.trial_results.size() - failed) << " exact, " << failed
      << " mismatched, max discrepancy " << r.max_discrepancy.get_str() << "\n";
  if (r.worst_trial) {
    const auto& t = r.trial_results[*r.worst_trial];
    out << "  worst trial " << t.trial << ": oracle " << t.oracle.get_str() << ", formula " << t.formula.get_str()
        << "\n";
  }
  std::size_t bad = 0;
  for (const auto& m : r.monomials)
    if (!m.matches()) ++bad;
  out << "monomials: " << r.monomials.size() << " checked, " << bad << " mismatched\n";
  for (const auto& m : r.monomials) {
    out << (m.matches() ? "  " : "! ") << m.oracle.get_str() << "  " << m.monomial;
    if (!m.matches()) out << "  (emitted " << m.formula.get_str() << ")";
    out << "\n";
  }
  if (r.worst_monomial) {
    const auto& m = r.monomials[*r.worst_monomial];
    out << "worst term: " << m.monomial << " oracle " << m.oracle.get_str() << " emitted " << m.formula.get_str()
        << "\n";
  }
  if (!r.mismatching_trees.empty()) {
    out << "mismatching trees:\n";
    for (const auto& t : r.mismatching_trees) out << "  " << t << "\n";
  }
  out << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json to_json(const VerifyReport& r) {
  using nlohmann::json;
  json terms = json::array();
  for (const auto& [tree, w] : r.terms) terms.push_back({{"tree", tree}, {"signed_weight", w.get_str()}});
  json trials = json::array();
  for (const auto& t : r.trial_results)
    trials.push_back({{"trial", t.trial}, {"oracle", t.oracle.get_str()}, {"formula", t.formula.get_str()}});
  json monomials = json::array();
  for (const auto& m : r.monomials)
    monomials.push_back({{"monomial", m.monomial},
                         {"oracle", m.oracle.get_str()},
                         {"formula", m.formula.get_str()},
                         {"trees", m.trees},
                         {"matches", m.matches()}});
  json out = {{"regime", std::string(to_string(r.regime))},
              {"order", r.order},
              {"trials", r.trials},
              {"seed", r.seed},
              {"passed", r.passed},
              {"max_discrepancy", r.max_discrepancy.get_str()},
              {"terms", std::move(terms)},
              {"trial_results", std::move(trials)},
              {"monomials", std::move(monomials)},
              {"mismatching_trees", r.mismatching_trees}};
  if (!r.skeleton.empty()) out["skeleton"] = r.skeleton;
  out["worst_trial"] = r.worst_trial ? json(*r.worst_trial) : json(nullptr);
  out["worst_term"] = r.worst_monomial ? json(r.monomials[*r.worst_monomial].monomial) : json(nullptr);
  return out;
}

}  // namespace vgraph

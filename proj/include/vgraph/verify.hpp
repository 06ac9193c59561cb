#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vgraph/formula.hpp"

namespace vgraph {

/// Oracle and emitted value of the n-th derivative for one random instance.
struct TrialResult {
  std::size_t trial = 0;
  Rational oracle;
  Rational formula;
};

/// One monomial of the symbolic expansion: its coefficient in the direct
/// series computation against the sum of emitted terms producing it.
struct MonomialCheck {
  std::string monomial;
  Rational oracle;
  Rational formula;
  std::vector<std::string> trees;

  bool matches() const { return oracle == formula; }
};

struct VerifyReport {
  Regime regime = Regime::ode;
  std::size_t order = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string skeleton;  // composite regime only

  bool passed = false;
  std::vector<std::pair<std::string, Rational>> terms;  // tree text, signed weight
  std::vector<TrialResult> trial_results;
  std::vector<MonomialCheck> monomials;

  Rational max_discrepancy;                   // over trials, |oracle - formula|
  std::optional<std::size_t> worst_trial;     // set when max_discrepancy > 0
  std::optional<std::size_t> worst_monomial;  // largest coefficient discrepancy, when any
  std::vector<std::string> mismatching_trees;
};

/// Evaluates the emitted n-th derivative formula on `trials` random rational
/// instances drawn from `seed` and compares it exactly with direct jet
/// arithmetic; additionally compares the symbolic expansions monomial by
/// monomial to attribute any mismatch to trees.
VerifyReport verify(Regime regime, std::size_t n, std::size_t trials, std::uint64_t seed,
                    std::shared_ptr<const SkeletonPalette> skeleton = nullptr);

/// Checks an arbitrary formula of `formula.order` against the oracle.
VerifyReport verify_formula(const Formula& formula, std::size_t trials, std::uint64_t seed,
                            std::shared_ptr<const SkeletonPalette> skeleton = nullptr);

std::string to_text(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace vgraph

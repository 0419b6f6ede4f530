// Copyright 2026 The bundlepmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bundlepmg/policy.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bundlepmg {

SubgameSolution SolveSubgame(const MarketParams& params,
                             const Scenario& scenario,
                             const SolveOptions& options) {
  ValidateParams(params);
  SubgameSolution out;
  out.scenario = scenario.Canonical();
  for (Branch branch : BranchesFor(out.scenario)) {
    out.candidates.push_back(
        SolveBranch(branch, params, out.scenario, options.feasibility));
  }
  // Candidates are few; selection scans all of them so the pick does not
  // depend on their order.
  for (const EquilibriumResult& c : out.candidates) {
    if (!c.feasible) continue;
    if (!out.chosen || c.profits.r1 > out.chosen->profits.r1 ||
        (c.profits.r1 == out.chosen->profits.r1 &&
         BranchName(c.branch) < BranchName(out.chosen->branch))) {
      out.chosen = c;
    }
  }
  if (out.chosen && !out.chosen->conditions.all_satisfied) {
    out.warnings.push_back(std::string("conditions-not-verified: set ") +
                           out.chosen->conditions.set_id +
                           " does not hold; admitted as feasible and "
                           "stationary");
  }
  if (options.cross_check_oracle) {
    out.oracle = FindFixedPoint(params, out.scenario, options.oracle);
    if (out.chosen && out.oracle->converged) {
      out.oracle_gap = RelativePriceGap(out.oracle->prices,
                                        out.chosen->prices);
    }
  }
  return out;
}

PolicyComparison ComparePolicies(const MarketParams& params,
                                 const SolveOptions& options) {
  PolicyComparison out;
  const auto& all = AllScenarios();
  for (size_t i = 0; i < all.size(); ++i) {
    out.subgames[i] = SolveSubgame(params, all[i], options);
    out.exists[i] = out.subgames[i].chosen.has_value();
  }

  std::vector<size_t> bundling;
  for (size_t i = 0; i < 4; ++i) {
    if (out.exists[i]) bundling.push_back(i);
  }
  if (!bundling.empty()) {
    double top = -std::numeric_limits<double>::infinity();
    for (size_t i : bundling) {
      top = std::max(top, out.subgames[i].chosen->profits.r1);
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(top));
    std::vector<size_t> tied;
    for (size_t i : bundling) {
      if (out.subgames[i].chosen->profits.r1 >= top - tol) tied.push_back(i);
    }
    auto rank = [&](size_t i) {
      // nocm/nocm first, then label order.
      const std::string label = all[i].Label();
      return std::make_pair(label == "nocm/nocm" ? 0 : 1, label);
    };
    const size_t pick = *std::min_element(
        tied.begin(), tied.end(),
        [&](size_t x, size_t y) { return rank(x) < rank(y); });
    out.pi_bundle = out.subgames[pick].chosen->profits.r1;
    out.best_regime = all[pick];
    if (tied.size() > 1) {
      std::string names;
      for (size_t i : tied) {
        if (!names.empty()) names += ", ";
        names += all[i].Label();
      }
      out.tie_break = "tie among " + names + "; picked " + all[pick].Label();
    }
  }
  if (out.exists[4]) out.pi_nobundle = out.subgames[4].chosen->profits.r1;
  if (out.pi_bundle && out.pi_nobundle) {
    out.delta_pi_bundling = *out.pi_bundle - *out.pi_nobundle;
  }
  return out;
}

}  // namespace bundlepmg

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

#ifndef BUNDLEPMG_SWEEP_H_
#define BUNDLEPMG_SWEEP_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bundlepmg/config.h"
#include "bundlepmg/policy.h"

namespace bundlepmg {

struct GridCell {
  double value1 = 0;  // axis1
  double value2 = 0;  // axis2
  // False when the cell's parameters leave the model's domain; such a cell
  // has no equilibrium by definition.
  bool valid = true;
  std::array<bool, 5> subgame_exists{};  // indexed like AllScenarios()
  // Both a bundling and the no-bundling equilibrium exist.
  bool exists = false;
  std::optional<double> delta_pi_bundling;
  std::optional<std::string> best_regime;  // Scenario label
};

// Evaluates one cell. Never throws for parameter or solver trouble; such
// cells come back with exists = false.
GridCell EvaluateCell(const MarketParams& params, double value1,
                      double value2, const SolveOptions& options = {});

// Row order is axis1 outer, axis2 inner, independent of `threads`.
std::vector<GridCell> RunGrid(const MarketParams& base, const SweepSpec& spec,
                              const Panel& panel, int threads,
                              const SolveOptions& options = {});

}  // namespace bundlepmg

#endif  // BUNDLEPMG_SWEEP_H_

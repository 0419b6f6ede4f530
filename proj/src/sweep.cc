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

#include "bundlepmg/sweep.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bundlepmg/errors.h"

namespace bundlepmg {

GridCell EvaluateCell(const MarketParams& params, double value1,
                      double value2, const SolveOptions& options) {
  GridCell cell;
  cell.value1 = value1;
  cell.value2 = value2;
  if (!ParamViolations(params).empty()) {
    cell.valid = false;
    return cell;
  }
  try {
    const PolicyComparison cmp = ComparePolicies(params, options);
    cell.subgame_exists = cmp.exists;
    if (cmp.delta_pi_bundling) {
      cell.exists = true;
      cell.delta_pi_bundling = cmp.delta_pi_bundling;
      cell.best_regime = cmp.best_regime->Label();
    }
  } catch (const Error&) {
    // Degenerate closed forms count as no equilibrium for this cell.
    cell.exists = false;
  }
  return cell;
}

std::vector<GridCell> RunGrid(const MarketParams& base, const SweepSpec& spec,
                              const Panel& panel, int threads,
                              const SolveOptions& options) {
  const int n1 = spec.axis1.steps;
  const int n2 = spec.axis2.steps;
  const int total = n1 * n2;
  std::vector<GridCell> cells(total);

  std::atomic<int> next{0};
  auto work = [&] {
    for (int k = next++; k < total; k = next++) {
      const double v1 = spec.axis1.Value(k / n2);
      const double v2 = spec.axis2.Value(k % n2);
      MarketParams params = base;
      panel.Apply(params);
      SetParam(params, spec.axis1.name, v1);
      SetParam(params, spec.axis2.name, v2);
      cells[k] = EvaluateCell(params, v1, v2, options);
    }
  };

  const int workers = std::clamp(threads, 1, std::max(1, total));
  if (workers == 1) {
    work();
    return cells;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return cells;
}

}  // namespace bundlepmg

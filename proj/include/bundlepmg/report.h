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

#ifndef BUNDLEPMG_REPORT_H_
#define BUNDLEPMG_REPORT_H_

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bundlepmg/config.h"
#include "bundlepmg/policy.h"
#include "bundlepmg/sweep.h"

namespace bundlepmg {

// Six significant digits, '.' separator, no locale. Negative zero prints as
// "0".
std::string FormatNumber(double value);

// Empty, numeric or text cell.
using Field = std::variant<std::monostate, double, std::string>;

// A CSV table with a JSON mirror. Numbers are rounded to FormatNumber's
// precision in both renderings so the two agree exactly.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;

  std::string Csv() const;
  // Array of objects keyed by column; empty cells become null.
  nlohmann::ordered_json Json() const;
};

// Five rows in AllScenarios() order: prices, the seven demands, and profits
// and welfare in thousands. pb1 holds p1 + p2 for the no-bundling row.
// Subgames without an equilibrium get empty cells.
Table EquilibriumTable(const PolicyComparison& comparison);

// Columns: axis1 name, axis2 name, exists, delta_pi_B, best_regime.
Table GridTable(const SweepSpec& spec, const std::vector<GridCell>& cells);

// "<name>" or "<name>_<key>-<value>_..." for a panel, safe as a file name.
std::string PanelFileStem(const SweepSpec& spec, const Panel& panel);

// Human-readable solve output: chosen result, condition report, FOC
// residual, warnings, rejected candidates and the oracle comparison if run.
std::string SolveText(const SubgameSolution& solution);
nlohmann::ordered_json SolveJson(const SubgameSolution& solution);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_REPORT_H_

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

#ifndef BUNDLEPMG_CONDITIONS_H_
#define BUNDLEPMG_CONDITIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "bundlepmg/market_model.h"

namespace bundlepmg {

// Parameter inequalities under which a closed-form branch is claimed to be
// the unique admissible equilibrium. Sets are labeled 'A' through 'F' and
// pair with the closed forms as listed in closed_form.h.

struct ConditionLine {
  std::string label;     // the inequality as text
  std::string relation;  // ">=" or "<="
  double lhs = 0;
  double rhs = 0;
  bool satisfied = false;
};

struct ConditionReport {
  char set_id = 'A';
  std::vector<ConditionLine> lines;
  bool all_satisfied = false;
};

struct ConditionOptions {
  // Each inequality is accepted when it holds up to this absolute slack.
  double slack = 0;
  // One line of set B compares against a_q_jb + a_q_jb as written. When true
  // it uses a_l_jb + a_q_jb instead.
  bool set_b_loyal_pair = false;
};

// Throws UnknownSet for ids outside 'A'..'F'.
ConditionReport CheckConditionSet(char set_id, const MarketParams& params,
                                  const ConditionOptions& options = {});

// Second-order structure of one retailer's regime profit.
struct HessianReport {
  int dim = 0;                               // 1, 2 or 3
  std::vector<std::vector<double>> matrix;   // dim x dim, symmetric
  std::vector<double> closed_eigenvalues;    // ascending
  std::vector<double> numeric_eigenvalues;   // ascending
  bool negative_definite = false;            // all numeric eigenvalues < 0
  double t1 = 0;                             // b_l + lambda_l
  double t2 = 0;                             // b_l * theta_l + lambda_l
  std::optional<double> psi;  // square-root term of the paired eigenvalues
};

// Hessian of r1's profit in (p1, p2, pb1), or (p1, p2) without bundling.
HessianReport HessianR1(const MarketParams& params, const Scenario& scenario,
                        Regime regime);
// Second derivative of r2's profit in pb2.
HessianReport HessianR2(const MarketParams& params, const Scenario& scenario,
                        Regime regime);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_CONDITIONS_H_

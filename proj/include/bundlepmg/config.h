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

#ifndef BUNDLEPMG_CONFIG_H_
#define BUNDLEPMG_CONFIG_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bundlepmg/market_model.h"

namespace bundlepmg {

// One grid axis. Values run from min to max inclusive in `steps` evenly
// spaced points; steps == 1 requires min == max.
struct Axis {
  std::string name;  // a parameter key such as "lambda_l"
  double min = 0;
  double max = 0;
  int steps = 0;

  double Value(int index) const;
};

// Extra parameter overrides applied on top of the config's [params].
struct Panel {
  std::vector<std::pair<std::string, double>> overrides;

  // "b_l=0.1 b_s=0.9", or "" when there are no overrides.
  std::string Label() const;
  void Apply(MarketParams& params) const;
};

struct SweepSpec {
  std::string name = "sweep";
  Axis axis1;  // outer loop
  Axis axis2;  // inner loop
  // Empty means one panel without overrides.
  std::vector<Panel> panels;
};

struct Config {
  MarketParams params;  // baseline values for keys not set
  std::optional<SweepSpec> sweep;
};

// Format, one statement per line:
//
//   # comment
//   [params]
//   b_l = 0.4
//   [sweep]
//   name = lambda_theta
//   axis1 = lambda_l 0.05 0.4 20
//   axis2 = theta_l 0.05 0.95 20
//   panel = b_l=0.1 b_s=0.9
//
// Lines before any section header belong to [params]. Parameter values are
// not range-checked here, since sweep cells may legitimately leave the
// domain. Throws ConfigError with the offending line number.
Config ParseConfig(std::string_view text);

// Throws ConfigError (line 0) if the file cannot be read.
Config LoadConfig(const std::string& path);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_CONFIG_H_

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

#ifndef BUNDLEPMG_MARKET_MODEL_H_
#define BUNDLEPMG_MARKET_MODEL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bundlepmg {

// Retailer 1 sells two complementary items and, when bundling, a bundle of
// both. Retailer 2 sells only the bundle. Three customer segments buy:
// loyal price-unaware, loyal price-aware (pays the effective price after any
// price match), and strategic (buys wherever the bundle-equivalent price is
// lowest).
//
// Defaults are the symmetric reference market used throughout the tests.
// The comment after each field is its configuration key.
struct MarketParams {
  double item1_base = 100;        // a_l_i1, loyal unaware, item 1 at r1
  double item2_base = 100;        // a_l_i2, loyal unaware, item 2 at r1
  double bundle1_base = 100;      // a_l_ib, loyal unaware, bundle at r1
  double bundle2_base = 100;      // a_l_jb, loyal unaware, bundle at r2
  double aware1_base = 100;       // a_q_ib, loyal aware, bundle at r1
  double aware2_base = 100;       // a_q_jb, loyal aware, bundle at r2
  double strategic_base = 100;    // a_s
  double loyal_slope = 0.4;       // b_l
  double strategic_slope = 0.4;   // b_s
  double item_coupling = 0.5;     // theta_l, cross-item sensitivity ratio
  double bundle_coupling = 0.3;   // lambda_l, bundle-vs-items substitution
  double cost1 = 10;              // c1
  double cost2 = 10;              // c2
  double tie_share = 0.5;         // alpha, r1's strategic share at a tie

  double bundle_cost() const { return cost1 + cost2; }
};

MarketParams Baseline();

// Every violated domain rule, as readable messages naming the field by its
// configuration key. Empty means valid.
std::vector<std::string> ParamViolations(const MarketParams& params);

// Throws InvalidParams listing ParamViolations().
void ValidateParams(const MarketParams& params);

// Configuration keys in declaration order.
const std::vector<std::string_view>& ParamKeys();
bool IsParamKey(std::string_view key);
double GetParam(const MarketParams& params, std::string_view key);
// Returns false when the key is unknown.
bool SetParam(MarketParams& params, std::string_view key, double value);

struct Scenario {
  bool bundling = true;
  bool r1_matches = false;  // r1 offers a price-matching guarantee
  bool r2_matches = false;

  // Matching applies to bundles only, so without bundling both flags are
  // cleared.
  static Scenario Make(bool bundling, bool r1_matches, bool r2_matches);
  Scenario Canonical() const;
  // "cm/cm", "cm/nocm", "nocm/cm", "nocm/nocm" or "no_bundle".
  std::string Label() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// The four bundling subgames in the order (cm,cm), (cm,nocm), (nocm,cm),
// (nocm,nocm), followed by the no-bundling game.
const std::array<Scenario, 5>& AllScenarios();

// Price ordering between r1's bundle-equivalent price and r2's bundle price.
// A tie belongs to kR1High.
enum class Regime { kR1High, kR1Low };

std::string_view RegimeName(Regime regime);

struct PriceVector {
  double item1 = 0;
  double item2 = 0;
  std::optional<double> bundle1;  // present iff bundling
  double bundle2 = 0;

  // pb1 under bundling, p1 + p2 otherwise.
  double R1BundleEquivalent() const {
    return bundle1 ? *bundle1 : item1 + item2;
  }
};

// Throws InvalidPrices for non-finite values or a bundle1 presence that
// disagrees with the scenario.
void CheckPrices(const Scenario& scenario, const PriceVector& prices);

Regime ClassifyRegime(const PriceVector& prices);

struct EffectivePrices {
  double aware1 = 0;     // paid by r1's loyal aware customers
  double aware2 = 0;     // paid by r2's loyal aware customers
  double strategic = 0;  // lowest bundle-equivalent price on the market
  Regime regime = Regime::kR1High;
};

// Resolves the regime from the prices, then applies the matching rules.
EffectivePrices ComputeEffectivePrices(const Scenario& scenario,
                                       const PriceVector& prices);

// Matching rules of a fixed regime, applied whatever the prices. Agrees with
// ComputeEffectivePrices() whenever the prices lie in that regime.
EffectivePrices EffectivePricesInRegime(const Scenario& scenario,
                                        const PriceVector& prices,
                                        Regime regime);

struct DemandProfile {
  double item1 = 0;             // d_l_i1
  double item2 = 0;             // d_l_i2
  double bundle1_unaware = 0;   // d_l_ib
  double bundle1_aware = 0;     // d_q_ib
  double bundle2_unaware = 0;   // d_l_jb
  double bundle2_aware = 0;     // d_q_jb
  double strategic = 0;         // d_s

  std::array<double, 7> AsArray() const {
    return {item1,           item2,         bundle1_unaware, bundle1_aware,
            bundle2_unaware, bundle2_aware, strategic};
  }
  double Min() const;
};

// Column names matching DemandProfile::AsArray().
const std::array<std::string_view, 7>& DemandKeys();

// Raw linear demands. Negative values are returned unchanged.
DemandProfile ComputeDemands(const MarketParams& params,
                             const Scenario& scenario,
                             const PriceVector& prices,
                             const EffectivePrices& eff);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_MARKET_MODEL_H_

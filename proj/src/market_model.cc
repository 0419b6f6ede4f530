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

#include "bundlepmg/market_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bundlepmg/errors.h"

namespace bundlepmg {
namespace {

struct FieldEntry {
  std::string_view key;
  double MarketParams::*member;
};

constexpr FieldEntry kFields[] = {
    {"a_l_i1", &MarketParams::item1_base},
    {"a_l_i2", &MarketParams::item2_base},
    {"a_l_ib", &MarketParams::bundle1_base},
    {"a_l_jb", &MarketParams::bundle2_base},
    {"a_q_ib", &MarketParams::aware1_base},
    {"a_q_jb", &MarketParams::aware2_base},
    {"a_s", &MarketParams::strategic_base},
    {"b_l", &MarketParams::loyal_slope},
    {"b_s", &MarketParams::strategic_slope},
    {"theta_l", &MarketParams::item_coupling},
    {"lambda_l", &MarketParams::bundle_coupling},
    {"c1", &MarketParams::cost1},
    {"c2", &MarketParams::cost2},
    {"alpha", &MarketParams::tie_share},
};

const FieldEntry* FindField(std::string_view key) {
  for (const FieldEntry& f : kFields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

std::string Num(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << v;
  return out.str();
}

}  // namespace

MarketParams Baseline() { return MarketParams{}; }

std::vector<std::string> ParamViolations(const MarketParams& p) {
  std::vector<std::string> out;
  for (const FieldEntry& f : kFields) {
    if (!std::isfinite(p.*f.member)) {
      out.push_back(std::string(f.key) + " must be finite");
    }
  }
  if (!out.empty()) return out;
  for (int i = 0; i < 7; ++i) {
    if (p.*kFields[i].member < 0) {
      out.push_back(std::string(kFields[i].key) + " must be >= 0, got " +
                    Num(p.*kFields[i].member));
    }
  }
  if (p.loyal_slope <= 0) {
    out.push_back("b_l must be > 0, got " + Num(p.loyal_slope));
  }
  if (p.strategic_slope <= 0) {
    out.push_back("b_s must be > 0, got " + Num(p.strategic_slope));
  }
  if (!(p.item_coupling > 0 && p.item_coupling < 1)) {
    out.push_back("theta_l must lie in (0, 1), got " + Num(p.item_coupling));
  }
  if (p.bundle_coupling <= 0) {
    out.push_back("lambda_l must be > 0, got " + Num(p.bundle_coupling));
  }
  if (p.loyal_slope < p.bundle_coupling) {
    out.push_back("b_l must be >= lambda_l, got b_l=" + Num(p.loyal_slope) +
                  " lambda_l=" + Num(p.bundle_coupling));
  }
  if (p.cost1 < 0) out.push_back("c1 must be >= 0, got " + Num(p.cost1));
  if (p.cost2 < 0) out.push_back("c2 must be >= 0, got " + Num(p.cost2));
  if (!(p.tie_share >= 0 && p.tie_share <= 1)) {
    out.push_back("alpha must lie in [0, 1], got " + Num(p.tie_share));
  }
  return out;
}

void ValidateParams(const MarketParams& params) {
  std::vector<std::string> problems = ParamViolations(params);
  if (problems.empty()) return;
  std::string message = "invalid market parameters: " + problems[0];
  for (size_t i = 1; i < problems.size(); ++i) message += "; " + problems[i];
  throw InvalidParams(message);
}

const std::vector<std::string_view>& ParamKeys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const FieldEntry& f : kFields) k.push_back(f.key);
    return k;
  }();
  return keys;
}

bool IsParamKey(std::string_view key) { return FindField(key) != nullptr; }

double GetParam(const MarketParams& params, std::string_view key) {
  const FieldEntry* f = FindField(key);
  if (f == nullptr) throw InvalidParams("unknown parameter '" +
                                        std::string(key) + "'");
  return params.*f->member;
}

bool SetParam(MarketParams& params, std::string_view key, double value) {
  const FieldEntry* f = FindField(key);
  if (f == nullptr) return false;
  params.*f->member = value;
  return true;
}

Scenario Scenario::Make(bool bundling, bool r1_matches, bool r2_matches) {
  return Scenario{bundling, r1_matches, r2_matches}.Canonical();
}

Scenario Scenario::Canonical() const {
  if (bundling) return *this;
  return Scenario{false, false, false};
}

std::string Scenario::Label() const {
  if (!bundling) return "no_bundle";
  return std::string(r1_matches ? "cm" : "nocm") + "/" +
         (r2_matches ? "cm" : "nocm");
}

const std::array<Scenario, 5>& AllScenarios() {
  static const std::array<Scenario, 5> all = {
      Scenario{true, true, true}, Scenario{true, true, false},
      Scenario{true, false, true}, Scenario{true, false, false},
      Scenario{false, false, false}};
  return all;
}

std::string_view RegimeName(Regime regime) {
  return regime == Regime::kR1High ? "r1_high" : "r1_low";
}

void CheckPrices(const Scenario& scenario, const PriceVector& prices) {
  if (!std::isfinite(prices.item1) || !std::isfinite(prices.item2) ||
      !std::isfinite(prices.bundle2) ||
      (prices.bundle1 && !std::isfinite(*prices.bundle1))) {
    throw InvalidPrices("prices must be finite");
  }
  if (scenario.bundling && !prices.bundle1) {
    throw InvalidPrices("bundling scenario requires r1's bundle price");
  }
  if (!scenario.bundling && prices.bundle1) {
    throw InvalidPrices("r1's bundle price supplied without bundling");
  }
}

Regime ClassifyRegime(const PriceVector& prices) {
  return prices.R1BundleEquivalent() >= prices.bundle2 ? Regime::kR1High
                                                       : Regime::kR1Low;
}

EffectivePrices ComputeEffectivePrices(const Scenario& scenario,
                                       const PriceVector& prices) {
  CheckPrices(scenario, prices);
  return EffectivePricesInRegime(scenario, prices, ClassifyRegime(prices));
}

EffectivePrices EffectivePricesInRegime(const Scenario& scenario,
                                        const PriceVector& prices,
                                        Regime regime) {
  const Scenario s = scenario.Canonical();
  const double own = prices.R1BundleEquivalent();
  const double rival = prices.bundle2;
  EffectivePrices eff;
  eff.regime = regime;
  if (regime == Regime::kR1High) {
    eff.aware1 = s.r1_matches ? rival : own;
    eff.aware2 = rival;
    eff.strategic = rival;
  } else {
    eff.aware1 = own;
    eff.aware2 = s.r2_matches ? own : rival;
    eff.strategic = own;
  }
  return eff;
}

double DemandProfile::Min() const {
  std::array<double, 7> v = AsArray();
  return *std::min_element(v.begin(), v.end());
}

const std::array<std::string_view, 7>& DemandKeys() {
  static const std::array<std::string_view, 7> keys = {
      "d_l_i1", "d_l_i2", "d_l_ib", "d_q_ib", "d_l_jb", "d_q_jb", "d_s"};
  return keys;
}

DemandProfile ComputeDemands(const MarketParams& params,
                             const Scenario& scenario,
                             const PriceVector& prices,
                             const EffectivePrices& eff) {
  CheckPrices(scenario.Canonical(), prices);
  const double b = params.loyal_slope;
  const double theta = params.item_coupling;
  const double lam = params.bundle_coupling;
  const double p1 = prices.item1;
  const double p2 = prices.item2;
  const double items = p1 + p2;

  DemandProfile d;
  if (scenario.bundling) {
    const double pb1 = *prices.bundle1;
    // Customers shift between the items and r1's bundle in proportion to the
    // bundle discount.
    const double discount = items - pb1;
    d.item1 = params.item1_base - b * p1 - b * theta * p2 - lam * discount;
    d.item2 = params.item2_base - b * theta * p1 - b * p2 - lam * discount;
    d.bundle1_unaware = params.bundle1_base - b * pb1 + lam * discount;
    d.bundle1_aware =
        params.aware1_base - b * eff.aware1 + lam * (items - eff.aware1);
  } else {
    d.item1 = params.item1_base - b * p1 - b * theta * p2;
    d.item2 = params.item2_base - b * theta * p1 - b * p2;
    d.bundle1_unaware = params.bundle1_base - b * items;
    d.bundle1_aware = params.aware1_base - b * items;
  }
  d.bundle2_unaware = params.bundle2_base - b * prices.bundle2;
  d.bundle2_aware = params.aware2_base - b * eff.aware2;
  d.strategic = params.strategic_base - params.strategic_slope * eff.strategic;
  return d;
}

}  // namespace bundlepmg

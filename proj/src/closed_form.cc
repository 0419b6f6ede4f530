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

#include "bundlepmg/closed_form.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bundlepmg/errors.h"

namespace bundlepmg {

std::string_view BranchName(Branch branch) {
  switch (branch) {
    case Branch::kR1MatchHigh: return "r1_match_high";
    case Branch::kR1PlainHigh: return "r1_plain_high";
    case Branch::kR2MatchLow: return "r2_match_low";
    case Branch::kR2PlainLow: return "r2_plain_low";
    case Branch::kItemsHigh: return "items_high";
    case Branch::kItemsLow: return "items_low";
  }
  return "unknown";
}

Regime BranchRegime(Branch branch) {
  switch (branch) {
    case Branch::kR1MatchHigh:
    case Branch::kR1PlainHigh:
    case Branch::kItemsHigh:
      return Regime::kR1High;
    default:
      return Regime::kR1Low;
  }
}

char BranchConditionSet(Branch branch) {
  return static_cast<char>('A' + static_cast<int>(branch));
}

bool BranchCovers(Branch branch, const Scenario& scenario) {
  const Scenario s = scenario.Canonical();
  switch (branch) {
    case Branch::kR1MatchHigh: return s.bundling && s.r1_matches;
    case Branch::kR1PlainHigh: return s.bundling && !s.r1_matches;
    case Branch::kR2MatchLow: return s.bundling && s.r2_matches;
    case Branch::kR2PlainLow: return s.bundling && !s.r2_matches;
    case Branch::kItemsHigh:
    case Branch::kItemsLow:
      return !s.bundling;
  }
  return false;
}

std::vector<Branch> BranchesFor(const Scenario& scenario) {
  const Scenario s = scenario.Canonical();
  if (!s.bundling) return {Branch::kItemsHigh, Branch::kItemsLow};
  return {s.r1_matches ? Branch::kR1MatchHigh : Branch::kR1PlainHigh,
          s.r2_matches ? Branch::kR2MatchLow : Branch::kR2PlainLow};
}

Scenario RepresentativeScenario(Branch branch) {
  for (const Scenario& s : AllScenarios()) {
    if (BranchCovers(branch, s)) return s;
  }
  return Scenario::Make(false, false, false);
}

namespace {

void RequireNonzero(double v, const char* what) {
  if (v == 0 || !std::isfinite(v)) {
    throw DegenerateParams(std::string("degenerate parameters: ") + what +
                           " vanishes");
  }
}

std::string Fmt(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(10);
  out << v;
  return out.str();
}

}  // namespace

PriceVector BranchPrices(Branch branch, const MarketParams& p) {
  const double b = p.loyal_slope;
  const double bs = p.strategic_slope;
  const double theta = p.item_coupling;
  const double lam = p.bundle_coupling;
  const double alpha = p.tie_share;
  const double c1 = p.cost1;
  const double c2 = p.cost2;
  const double c = c1 + c2;
  const double a1 = p.item1_base;
  const double a2 = p.item2_base;
  const double as = p.strategic_base;
  const double r2_pair = p.bundle2_base + p.aware2_base;
  const double r1_pair = p.bundle1_base + p.aware1_base;

  if (theta == 1) {
    throw DegenerateParams("degenerate parameters: theta_l = 1");
  }
  RequireNonzero(b, "b_l");
  // Half the gap between item base demands, scaled by the antisymmetric
  // curvature. Shifts p1 up and p2 down by the same amount.
  const double skew = (a1 - a2) / (4 * b * (1 - theta));

  PriceVector out;
  switch (branch) {
    case Branch::kR1MatchHigh: {
      RequireNonzero(lam, "lambda_l");
      const double r2_den = 2 * b + (1 - alpha) * bs;
      RequireNonzero(r2_den, "2b_l+(1-alpha)b_s");
      const double r2_level = (r2_pair + (1 - alpha) * as) / r2_den;
      out.bundle2 = 0.5 * (r2_level + c);
      const double den = (b + lam) * b * (1 + theta) + 2 * b * lam;
      RequireNonzero(den, "(b_l+lambda_l)b_l(1+theta_l)+2b_l lambda_l");
      const double pb1 =
          0.5 * (((a1 + a2) * lam + (b * (1 + theta) + 2 * lam) *
                                        p.bundle1_base) / den +
                 (r2_level - c) * lam * lam / den + c);
      out.bundle1 = pb1;
      const double common = -p.bundle1_base / (4 * lam) +
                            (2 * pb1 - c) * (b + lam) / (4 * lam);
      out.item1 = skew + common + c1 / 2;
      out.item2 = -skew + common + c2 / 2;
      return out;
    }
    case Branch::kR1PlainHigh:
    case Branch::kR2MatchLow:
    case Branch::kR2PlainLow: {
      RequireNonzero(lam, "lambda_l");
      // Strategic demand r1 internalizes when it prices its own bundle.
      double strat_base = 0;
      double strat_slope = 0;
      if (branch == Branch::kR1PlainHigh) {
        const double den = 2 * b + bs;
        out.bundle2 = 0.5 * ((r2_pair + as) / den + c);
      } else if (branch == Branch::kR2MatchLow) {
        strat_base = alpha * as;
        strat_slope = alpha * bs;
        out.bundle2 = 0.5 * (p.bundle2_base / b + c);
      } else {
        strat_base = as;
        strat_slope = bs;
        out.bundle2 = 0.5 * (r2_pair / (2 * b) + c);
      }
      const double den = 2 * (2 * b + strat_slope) * (b * (1 + theta) + 2 * lam) +
                         4 * b * (1 + theta) * lam - lam * lam;
      RequireNonzero(den, "bundle-price denominator");
      const double own = r1_pair + strat_base;
      const double pb1 =
          0.5 * ((3 * (a1 + a2) * lam + 2 * (b * (1 + theta) + 2 * lam) * own) /
                     den +
                 c * (1 + (b * (1 + theta) * lam - lam * lam) / den));
      out.bundle1 = pb1;
      const double common = -own / (6 * lam) + (2 * pb1 - c) / (3 * lam) *
                                                   (b + lam + strat_slope / 2);
      out.item1 = skew + 5 * c1 / 12 - c2 / 12 + common;
      out.item2 = -skew - c1 / 12 + 5 * c2 / 12 + common;
      return out;
    }
    case Branch::kItemsHigh: {
      const double level =
          (a1 + a2 + 2 * r1_pair) / (4 * b * (5 + theta));
      out.item1 = skew + c1 / 2 + level;
      out.item2 = -skew + c2 / 2 + level;
      out.bundle2 = (r2_pair + as) / (2 * (2 * b + bs)) + c / 2;
      return out;
    }
    case Branch::kItemsLow: {
      // r1 serves every strategic customer, so their demand enters twice per
      // item through the shared bundle-equivalent price.
      const double level = (a1 + a2 + 2 * r1_pair + 2 * as) /
                           (4 * b * (5 + theta) + 8 * bs);
      out.item1 = skew + c1 / 2 + level;
      out.item2 = -skew + c2 / 2 + level;
      out.bundle2 = r2_pair / (4 * b) + c / 2;
      return out;
    }
  }
  return out;
}

EquilibriumResult SolveBranch(Branch branch, const MarketParams& params,
                              const Scenario& scenario,
                              const FeasibilityOptions& options) {
  const Scenario s = scenario.Canonical();
  if (!BranchCovers(branch, s)) {
    throw Error(std::string(BranchName(branch)) +
                " does not cover subgame " + s.Label());
  }
  EquilibriumResult r;
  r.branch = branch;
  r.scenario = s;
  r.regime = BranchRegime(branch);
  r.prices = BranchPrices(branch, params);
  ValidateParams(params);

  const EffectivePrices eff =
      EffectivePricesInRegime(s, r.prices, r.regime);
  r.demands = ComputeDemands(params, s, r.prices, eff);
  r.profits = ProfitsInRegime(params, s, r.prices, r.regime);
  r.conditions =
      CheckConditionSet(BranchConditionSet(branch), params, options.conditions);

  double residual =
      std::abs(ProfitGradientR2InRegime(params, s, r.prices, r.regime));
  for (double g : ProfitGradientR1InRegime(params, s, r.prices, r.regime)) {
    residual = std::max(residual, std::abs(g));
  }
  r.foc_residual = residual;

  const double tol = options.tol;
  const double own = r.prices.R1BundleEquivalent();
  const double rival = r.prices.bundle2;
  if (r.regime == Regime::kR1High ? own < rival - tol : own >= rival + tol) {
    r.violations.push_back(
        std::string("ordering: r1 bundle-equivalent ") + Fmt(own) +
        (r.regime == Regime::kR1High ? " < " : " >= ") + "pb2 " + Fmt(rival));
  }
  const auto& keys = DemandKeys();
  const auto demand = r.demands.AsArray();
  for (size_t i = 0; i < demand.size(); ++i) {
    if (demand[i] < -tol) {
      r.violations.push_back("negative demand " + std::string(keys[i]) + " = " +
                             Fmt(demand[i]));
    }
  }
  const double lowest = std::min({r.prices.item1, r.prices.item2, rival,
                                  r.prices.bundle1.value_or(0.0)});
  if (lowest < -tol) {
    r.violations.push_back("negative price " + Fmt(lowest));
  }
  if (s.bundling &&
      r.prices.item1 + r.prices.item2 < *r.prices.bundle1 - tol) {
    r.violations.push_back("bundle priced above p1+p2");
  }
  if (!(residual <= options.foc_tol)) {
    r.violations.push_back("FOC residual " + Fmt(residual));
  }
  r.feasible = r.violations.empty();
  return r;
}

EquilibriumResult SolveBranch(Branch branch, const MarketParams& params,
                              const FeasibilityOptions& options) {
  return SolveBranch(branch, params, RepresentativeScenario(branch), options);
}

}  // namespace bundlepmg

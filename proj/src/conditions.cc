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

#include "bundlepmg/conditions.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "bundlepmg/errors.h"
#include "bundlepmg/profit.h"

namespace bundlepmg {
namespace {

class ReportBuilder {
 public:
  ReportBuilder(char id, double slack) : slack_(slack) { report_.set_id = id; }

  void Ge(std::string label, double lhs, double rhs) {
    Add(std::move(label), ">=", lhs, rhs, lhs >= rhs - slack_);
  }
  void Le(std::string label, double lhs, double rhs) {
    Add(std::move(label), "<=", lhs, rhs, lhs <= rhs + slack_);
  }

  ConditionReport Finish() {
    report_.all_satisfied =
        std::all_of(report_.lines.begin(), report_.lines.end(),
                    [](const ConditionLine& l) { return l.satisfied; });
    return std::move(report_);
  }

 private:
  void Add(std::string label, const char* rel, double lhs, double rhs,
           bool ok) {
    report_.lines.push_back({std::move(label), rel, lhs, rhs, ok});
  }

  double slack_;
  ConditionReport report_;
};

}  // namespace

ConditionReport CheckConditionSet(char set_id, const MarketParams& p,
                                  const ConditionOptions& options) {
  const double items = p.item1_base + p.item2_base;
  const double r2_pair = p.bundle2_base + p.aware2_base;
  const double r1_pair = p.bundle1_base + p.aware1_base;
  const double as = p.strategic_base;
  const double ratio = p.loyal_slope / p.strategic_slope;
  const double theta = p.item_coupling;
  const double c = p.bundle_cost();
  // Cost cushion shared by sets C and D.
  const double cushion = c / 2 * (2 * p.loyal_slope + p.strategic_slope) /
                         (2 * p.loyal_slope) * p.bundle_coupling;

  ReportBuilder r(set_id, options.slack);
  switch (set_id) {
    case 'A':
      r.Ge("a_l_i1+a_l_i2 >= 4/3(a_l_jb+a_q_jb)", items, 4.0 / 3 * r2_pair);
      r.Ge("a_l_ib >= (a_l_jb+a_q_jb)/2", p.bundle1_base, r2_pair / 2);
      r.Ge("a_q_ib >= a_q_jb", p.aware1_base, p.aware2_base);
      r.Ge("a_q_jb >= a_l_jb", p.aware2_base, p.bundle2_base);
      r.Ge("(a_l_i1+a_l_i2)/(2a_s) >= b_l/b_s", items / (2 * as), ratio);
      r.Ge("b_l/b_s >= (a_l_jb+a_q_jb)/(2a_s)", ratio, r2_pair / (2 * as));
      r.Ge("a_l_ib/a_s >= b_l/b_s", p.bundle1_base / as, ratio);
      r.Ge("b_l/b_s >= a_l_jb/a_s", ratio, p.bundle2_base / as);
      break;
    case 'B': {
      r.Ge("a_l_i1+a_l_i2 >= 4/3(a_l_jb+a_q_jb)", items, 4.0 / 3 * r2_pair);
      r.Ge("a_l_ib+a_q_ib >= a_l_jb+a_q_jb", r1_pair, r2_pair);
      r.Ge("a_q_jb >= a_l_jb", p.aware2_base, p.bundle2_base);
      r.Ge("(a_l_i1+a_l_i2)/(2a_s) >= 4/3 b_l/b_s", items / (2 * as),
           4.0 / 3 * ratio);
      // The lower bound sums a_q_jb with itself as stated; the alternative
      // reading pairs it with a_l_jb like the neighboring lines.
      if (options.set_b_loyal_pair) {
        r.Ge("4/3 b_l/b_s >= (a_l_jb+a_q_jb)/(2a_s)", 4.0 / 3 * ratio,
             r2_pair / (2 * as));
      } else {
        r.Ge("4/3 b_l/b_s >= (a_q_jb+a_q_jb)/(2a_s)", 4.0 / 3 * ratio,
             2 * p.aware2_base / (2 * as));
      }
      r.Ge("b_l/b_s >= a_l_jb/a_s", ratio, p.bundle2_base / as);
      break;
    }
    case 'C':
    case 'D':
      r.Le("(a_l_i1+a_l_i2)/((1+theta_l)a_s) <= b_l/b_s",
           items / ((1 + theta) * as), ratio);
      r.Le("b_l/b_s <= (a_l_jb+a_q_jb)/(2a_s)", ratio, r2_pair / (2 * as));
      r.Le("a_l_ib/a_s 2/(1+theta_l) <= b_l/b_s",
           p.bundle1_base / as * 2 / (1 + theta), ratio);
      r.Le("b_l/b_s <= a_l_jb/a_s", ratio, p.bundle2_base / as);
      if (set_id == 'C') {
        r.Le("a_l_ib 2/(1+theta_l) <= (a_l_jb+a_q_jb)/2",
             p.bundle1_base * 2 / (1 + theta), r2_pair / 2);
        r.Le("a_q_ib <= a_l_ib", p.aware1_base, p.bundle1_base);
        r.Le("a_l_ib <= a_q_jb", p.bundle1_base, p.aware2_base);
        r.Le("a_q_jb <= a_l_jb", p.aware2_base, p.bundle2_base);
        r.Le("(a_l_ib+a_q_ib) + (c1+c2)/2 (2b_l+b_s)/(2b_l) lambda_l <= "
             "a_l_jb+a_q_jb",
             r1_pair + cushion, r2_pair);
      } else {
        r.Le("(a_l_ib+a_q_ib) 2/(1+theta_l) + (c1+c2)/2 (2b_l+b_s)/(2b_l) "
             "lambda_l <= a_l_jb+a_q_jb",
             r1_pair * 2 / (1 + theta) + cushion, r2_pair);
        r.Le("a_q_jb <= a_l_jb", p.aware2_base, p.bundle2_base);
      }
      r.Le("a_l_jb <= (c1+c2)b_l", p.bundle2_base, c * p.loyal_slope);
      r.Le("a_s <= (c1+c2)(1-alpha)b_s", as,
           c * (1 - p.tie_share) * p.strategic_slope);
      break;
    case 'E':
      r.Ge("a_l_ib+a_q_ib >= a_l_jb+a_q_jb", r1_pair, r2_pair);
      r.Ge("a_l_i1+a_l_i2 >= a_l_jb+a_q_jb", items, r2_pair);
      r.Ge("(a_l_i1+a_l_i2)/(2a_s) >= b_l/b_s", items / (2 * as), ratio);
      r.Ge("(a_l_ib+a_q_ib)/(2a_s) >= b_l/b_s", r1_pair / (2 * as), ratio);
      r.Ge("b_l/b_s >= (a_l_jb+a_q_jb)/(2a_s)", ratio, r2_pair / (2 * as));
      break;
    case 'F':
      r.Le("a_l_ib+a_q_ib <= (3+theta_l)/4 (a_l_jb+a_q_jb)", r1_pair,
           (3 + theta) / 4 * r2_pair);
      r.Le("a_l_i1+a_l_i2 <= a_l_jb+a_q_jb", items, r2_pair);
      r.Le("(a_l_i1+a_l_i2)/(2a_s) <= b_l/b_s", items / (2 * as), ratio);
      r.Le("(a_l_ib+a_q_ib)/(2a_s) 4/(3+theta_l) <= b_l/b_s",
           r1_pair / (2 * as) * 4 / (3 + theta), ratio);
      r.Le("b_l/b_s <= (a_l_jb+a_q_jb)/(2a_s)", ratio, r2_pair / (2 * as));
      break;
    default:
      throw UnknownSet(std::string("unknown condition set '") + set_id +
                       "', expected A-F");
  }
  return r.Finish();
}

namespace {

std::vector<double> NumericEigenvalues(
    const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

void Finish(HessianReport& h) {
  std::sort(h.closed_eigenvalues.begin(), h.closed_eigenvalues.end());
  h.numeric_eigenvalues = NumericEigenvalues(h.matrix);
  h.negative_definite =
      std::all_of(h.numeric_eigenvalues.begin(), h.numeric_eigenvalues.end(),
                  [](double e) { return e < 0; });
}

}  // namespace

HessianReport HessianR1(const MarketParams& params, const Scenario& scenario,
                        Regime regime) {
  const Scenario s = scenario.Canonical();
  const double b = params.loyal_slope;
  const double bs = params.strategic_slope;
  const double theta = params.item_coupling;
  const double lam = params.bundle_coupling;
  const bool low = regime == Regime::kR1Low;
  const double share = RegimeStrategicShare(params, s, regime);

  HessianReport h;
  h.t1 = b + lam;
  h.t2 = b * theta + lam;
  const double antisym = -2 * b * (1 - theta);

  if (!s.bundling) {
    const double sb = low ? 2 * bs : 0.0;
    const double diag = -6 * b - sb;
    const double off = -4 * b - 2 * b * theta - sb;
    h.dim = 2;
    h.matrix = {{diag, off}, {off, diag}};
    h.closed_eigenvalues = {
        antisym, low ? -10 * b - 4 * bs - 2 * b * theta : -2 * b * (5 + theta)};
    Finish(h);
    return h;
  }

  // When r1 matches in kR1High its aware customers pay pb2, which removes one
  // pb1 channel from the bundle row.
  const bool matched = !low && s.r1_matches;
  const double cross = matched ? 2 * lam : 3 * lam;
  const double corner =
      matched ? -2 * h.t1 : -4 * h.t1 - (low ? 2 * share * bs : 0.0);
  h.dim = 3;
  h.matrix = {{-2 * h.t1, -2 * h.t2, cross},
              {-2 * h.t2, -2 * h.t1, cross},
              {cross, cross, corner}};

  double mid;
  if (matched) {
    mid = -2 * b - 3 * lam - b * theta;
    h.psi = std::sqrt(h.t2 * h.t2 + 8 * lam * lam);
  } else if (!low) {
    mid = -3 * b - 4 * lam - b * theta;
    h.psi = std::sqrt(b * b * (1 - theta) * (1 - theta) + 18 * lam * lam);
  } else {
    const double w = share * bs;
    mid = -w - b * theta - 3 * b - 4 * lam;
    h.psi = std::sqrt(w * w - 2 * w * b * theta + 2 * w * b +
                      b * b * theta * theta - 2 * b * b * theta + b * b +
                      18 * lam * lam);
  }
  h.closed_eigenvalues = {antisym, mid - *h.psi, mid + *h.psi};
  Finish(h);
  return h;
}

HessianReport HessianR2(const MarketParams& params, const Scenario& scenario,
                        Regime regime) {
  const Scenario s = scenario.Canonical();
  const double b = params.loyal_slope;
  const double bs = params.strategic_slope;
  const bool high = regime == Regime::kR1High;
  const double share = RegimeStrategicShare(params, s, regime);

  double v;
  if (high) {
    v = -4 * b - 2 * (1 - share) * bs;
  } else {
    // A matching r2 serves its aware customers at pb1, so only the unaware
    // segment responds to pb2.
    v = s.r2_matches ? -2 * b : -4 * b;
  }
  HessianReport h;
  h.dim = 1;
  h.t1 = b + params.bundle_coupling;
  h.t2 = b * params.item_coupling + params.bundle_coupling;
  h.matrix = {{v}};
  h.closed_eigenvalues = {v};
  Finish(h);
  return h;
}

}  // namespace bundlepmg

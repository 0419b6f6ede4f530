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

#include "bundlepmg/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Dense>

#include "bundlepmg/errors.h"
#include "bundlepmg/profit.h"

namespace bundlepmg {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// f(x) = f0 + g.x + x'Hx/2.
struct Quadratic {
  MatrixXd h;
  VectorXd g;
  double f0 = 0;

  double operator()(const VectorXd& x) const {
    return f0 + g.dot(x) + 0.5 * x.dot(h * x);
  }
};

// Central differences with unit steps are exact for a quadratic up to
// rounding, so the regime profit is recovered without touching its formula.
Quadratic FitQuadratic(const std::function<double(const VectorXd&)>& f,
                       int n) {
  Quadratic q;
  q.h = MatrixXd::Zero(n, n);
  q.g = VectorXd::Zero(n);
  const VectorXd zero = VectorXd::Zero(n);
  q.f0 = f(zero);
  std::vector<double> plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    VectorXd e = VectorXd::Unit(n, i);
    plus[i] = f(e);
    minus[i] = f(-e);
    q.g(i) = (plus[i] - minus[i]) / 2;
    q.h(i, i) = plus[i] - 2 * q.f0 + minus[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VectorXd e = VectorXd::Unit(n, i) + VectorXd::Unit(n, j);
      q.h(i, j) = q.h(j, i) = f(e) - plus[i] - plus[j] + q.f0;
    }
  }
  return q;
}

void RequireConcave(const MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().maxCoeff() >= 0) {
    throw SingularSystem(
        "regime profit is not strictly concave; largest curvature " +
        std::to_string(solver.eigenvalues().maxCoeff()));
  }
}

struct QpSolution {
  VectorXd x;
  double value = -std::numeric_limits<double>::infinity();
  bool found = false;
};

double RowTolerance(double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); }

// Maximizes a strictly concave quadratic subject to a x <= b by trying every
// active set of at most n rows. The optimum solves the equality-constrained
// problem on its own active set, so the best feasible candidate is it.
QpSolution MaximizeQp(const Quadratic& q, const MatrixXd& a,
                      const VectorXd& b) {
  const int n = static_cast<int>(q.g.size());
  const int m = static_cast<int>(b.size());
  QpSolution best;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) rows.push_back(i);
    }
    const int k = static_cast<int>(rows.size());
    if (k > n) continue;
    MatrixXd kkt = MatrixXd::Zero(n + k, n + k);
    VectorXd rhs(n + k);
    kkt.topLeftCorner(n, n) = q.h;
    rhs.head(n) = -q.g;
    for (int r = 0; r < k; ++r) {
      kkt.block(n + r, 0, 1, n) = a.row(rows[r]);
      kkt.block(0, n + r, n, 1) = a.row(rows[r]).transpose();
      rhs(n + r) = b(rows[r]);
    }
    Eigen::FullPivLU<MatrixXd> lu(kkt);
    if (!lu.isInvertible()) continue;
    const VectorXd x = lu.solve(rhs).head(n);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      ok = a.row(i).dot(x) <= b(i) + RowTolerance(b(i));
    }
    if (!ok) continue;
    const double v = q(x);
    if (!best.found || v > best.value) {
      best.x = x;
      best.value = v;
      best.found = true;
    }
  }
  return best;
}

PriceVector R1Prices(const Scenario& s, const VectorXd& x, double bundle2) {
  PriceVector p;
  p.item1 = x(0);
  p.item2 = x(1);
  if (s.bundling) p.bundle1 = x(2);
  p.bundle2 = bundle2;
  return p;
}

// Both regimes give the same effective prices at a tie; only the strategic
// split differs.
ProfitPair TieProfits(const MarketParams& params, const Scenario& s,
                      const PriceVector& prices) {
  const EffectivePrices eff =
      EffectivePricesInRegime(s, prices, Regime::kR1High);
  return ProfitsWithShare(params, s, prices, eff, params.tie_share);
}

}  // namespace

double OracleValueR1(const MarketParams& params, const Scenario& scenario,
                     const PriceVector& prices, TieValuation tie) {
  if (tie == TieValuation::kSharedSplit) {
    return ComputeProfits(params, scenario, prices).r1;
  }
  return ProfitsInRegime(params, scenario, prices, ClassifyRegime(prices)).r1;
}

double OracleValueR2(const MarketParams& params, const Scenario& scenario,
                     const PriceVector& prices, TieValuation tie) {
  if (tie == TieValuation::kSharedSplit) {
    return ComputeProfits(params, scenario, prices).r2;
  }
  return ProfitsInRegime(params, scenario, prices, ClassifyRegime(prices)).r2;
}

BestResponseR1 BestResponseToR2(const MarketParams& params,
                                const Scenario& scenario, double bundle2,
                                TieValuation tie) {
  const Scenario s = scenario.Canonical();
  if (!std::isfinite(bundle2)) throw InvalidPrices("pb2 must be finite");
  const int n = s.bundling ? 3 : 2;

  // Row 0 is the regime boundary, then the bundle discount, then price
  // nonnegativity.
  MatrixXd a = MatrixXd::Zero(s.bundling ? 5 : 3, n);
  VectorXd b = VectorXd::Zero(a.rows());
  if (s.bundling) {
    a.row(1) << -1, -1, 1;
    a.row(2) << -1, 0, 0;
    a.row(3) << 0, -1, 0;
    a.row(4) << 0, 0, -1;
  } else {
    a.row(1) << -1, 0;
    a.row(2) << 0, -1;
  }

  BestResponseR1 best;
  bool have = false;
  for (Regime regime : {Regime::kR1High, Regime::kR1Low}) {
    auto profit = [&](const VectorXd& x) {
      return ProfitsInRegime(params, s, R1Prices(s, x, bundle2), regime).r1;
    };
    const Quadratic q = FitQuadratic(profit, n);
    RequireConcave(q.h);

    const double sign = regime == Regime::kR1High ? -1.0 : 1.0;
    if (s.bundling) {
      a.row(0) << 0, 0, sign;
    } else {
      a.row(0) << sign, sign;
    }
    b(0) = sign * bundle2;
    const QpSolution sol = MaximizeQp(q, a, b);
    if (!sol.found) continue;

    const bool on_boundary =
        a.row(0).dot(sol.x) >= b(0) - RowTolerance(b(0));
    const PriceVector prices = R1Prices(s, sol.x, bundle2);
    double value = sol.value;
    if (on_boundary && tie == TieValuation::kSharedSplit) {
      value = TieProfits(params, s, prices).r1;
    } else if (on_boundary && regime == Regime::kR1Low) {
      best.boundary_value = sol.value;
      continue;
    }
    if (!have || value > best.value) {
      best.item1 = prices.item1;
      best.item2 = prices.item2;
      best.bundle1 = prices.bundle1;
      best.value = value;
      best.regime = regime;
      have = true;
    }
  }
  if (!have) {
    throw SingularSystem("no admissible best response for r1");
  }
  return best;
}

BestResponseR2 BestResponseToR1(const MarketParams& params,
                                const Scenario& scenario,
                                const PriceVector& r1_prices,
                                TieValuation tie) {
  const Scenario s = scenario.Canonical();
  PriceVector prices = r1_prices;
  CheckPrices(s, prices);
  const double ref = prices.R1BundleEquivalent();

  BestResponseR2 best;
  bool have = false;
  for (Regime regime : {Regime::kR1High, Regime::kR1Low}) {
    auto profit = [&](double pb2) {
      prices.bundle2 = pb2;
      return ProfitsInRegime(params, s, prices, regime).r2;
    };
    const double f0 = profit(0);
    const double fp = profit(1);
    const double fm = profit(-1);
    const double curvature = (fp - 2 * f0 + fm) / 2;
    const double slope = (fp - fm) / 2;
    if (curvature >= 0) {
      throw SingularSystem("r2 regime profit is not strictly concave");
    }
    const double peak = -slope / (2 * curvature);

    double pb2;
    bool on_boundary = false;
    if (regime == Regime::kR1High) {
      // r1 stays at or above pb2.
      if (ref < 0) continue;
      pb2 = std::clamp(peak, 0.0, ref);
      on_boundary = pb2 == ref;
    } else {
      const double lo = std::max(ref, 0.0);
      pb2 = std::max(peak, lo);
      on_boundary = ref >= 0 && pb2 <= ref;
    }
    double value = profit(pb2);
    if (on_boundary && tie == TieValuation::kSharedSplit) {
      prices.bundle2 = ref;
      value = TieProfits(params, s, prices).r2;
    } else if (on_boundary && regime == Regime::kR1Low) {
      best.boundary_value = value;
      continue;
    }
    if (!have || value > best.value) {
      best.bundle2 = pb2;
      best.value = value;
      best.regime = regime;
      have = true;
    }
  }
  if (!have) throw SingularSystem("no admissible best response for r2");
  return best;
}

namespace {

PriceVector DefaultStart(const MarketParams& params, const Scenario& s) {
  PriceVector p;
  p.item1 = params.cost1 + 1;
  p.item2 = params.cost2 + 1;
  if (s.bundling) p.bundle1 = params.bundle_cost() + 1;
  p.bundle2 = params.bundle_cost() + 1;
  return p;
}

}  // namespace

OracleOutcome FindFixedPoint(const MarketParams& params,
                             const Scenario& scenario,
                             const OracleConfig& config) {
  ValidateParams(params);
  if (!(config.tol_fp > 0)) throw Error("tol_fp must be > 0");
  if (!(config.damping > 0 && config.damping <= 1)) {
    throw Error("damping must lie in (0, 1]");
  }
  const Scenario s = scenario.Canonical();
  PriceVector x = config.initial ? *config.initial : DefaultStart(params, s);
  if (!s.bundling) x.bundle1.reset();
  if (s.bundling && !x.bundle1) x.bundle1 = params.bundle_cost() + 1;
  CheckPrices(s, x);

  const double d = config.damping;
  OracleOutcome out;
  if (config.record_trajectory) out.trajectory.push_back(x);
  for (int it = 1; it <= config.max_iters; ++it) {
    const BestResponseR1 r1 = BestResponseToR2(params, s, x.bundle2, config.tie);
    double gap = std::max(std::abs(r1.item1 - x.item1),
                          std::abs(r1.item2 - x.item2));
    if (s.bundling) gap = std::max(gap, std::abs(*r1.bundle1 - *x.bundle1));
    x.item1 += d * (r1.item1 - x.item1);
    x.item2 += d * (r1.item2 - x.item2);
    if (s.bundling) *x.bundle1 += d * (*r1.bundle1 - *x.bundle1);

    const BestResponseR2 r2 = BestResponseToR1(params, s, x, config.tie);
    gap = std::max(gap, std::abs(r2.bundle2 - x.bundle2));
    x.bundle2 += d * (r2.bundle2 - x.bundle2);

    if (config.record_trajectory) out.trajectory.push_back(x);
    out.iterations = it;
    out.residual = gap;
    out.r1_boundary_gain =
        r1.boundary_value ? std::max(0.0, *r1.boundary_value - r1.value) : 0;
    out.r2_boundary_gain =
        r2.boundary_value ? std::max(0.0, *r2.boundary_value - r2.value) : 0;
    if (gap < config.tol_fp) {
      out.converged = true;
      break;
    }
  }
  out.prices = x;
  out.classified_regime = ClassifyRegime(x);
  return out;
}

MultiStartReport FindFixedPoints(const MarketParams& params,
                                 const Scenario& scenario,
                                 const OracleConfig& config) {
  const Scenario s = scenario.Canonical();
  MultiStartReport report;
  report.starts.push_back(config.initial ? *config.initial
                                         : DefaultStart(params, s));
  const double span =
      std::max({params.item1_base, params.item2_base, params.bundle1_base,
                params.bundle2_base, params.aware1_base, params.aware2_base,
                params.strategic_base, 1.0}) /
      params.loyal_slope;
  for (int r1_high = 0; r1_high < 2; ++r1_high) {
    for (int r2_high = 0; r2_high < 2; ++r2_high) {
      PriceVector p;
      p.item1 = params.cost1 + r1_high * span;
      p.item2 = params.cost2 + r1_high * span;
      if (s.bundling) p.bundle1 = params.bundle_cost() + r1_high * span;
      p.bundle2 = params.bundle_cost() + r2_high * span;
      report.starts.push_back(p);
    }
  }
  for (const PriceVector& start : report.starts) {
    OracleConfig cfg = config;
    cfg.initial = start;
    report.runs.push_back(FindFixedPoint(params, s, cfg));
    const OracleOutcome& run = report.runs.back();
    if (!run.converged) continue;
    const bool seen = std::any_of(
        report.distinct_fixed_points.begin(),
        report.distinct_fixed_points.end(), [&](const PriceVector& q) {
          return RelativePriceGap(run.prices, q) < 1e-6;
        });
    if (!seen) report.distinct_fixed_points.push_back(run.prices);
  }
  return report;
}

double RelativePriceGap(const PriceVector& a, const PriceVector& reference) {
  if (a.bundle1.has_value() != reference.bundle1.has_value()) {
    return std::numeric_limits<double>::infinity();
  }
  double gap = std::max({std::abs(a.item1 - reference.item1),
                         std::abs(a.item2 - reference.item2),
                         std::abs(a.bundle2 - reference.bundle2)});
  double scale = std::max({1.0, std::abs(reference.item1),
                           std::abs(reference.item2),
                           std::abs(reference.bundle2)});
  if (a.bundle1) {
    gap = std::max(gap, std::abs(*a.bundle1 - *reference.bundle1));
    scale = std::max(scale, std::abs(*reference.bundle1));
  }
  return gap / scale;
}

}  // namespace bundlepmg

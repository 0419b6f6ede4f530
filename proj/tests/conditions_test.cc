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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "bundlepmg/conditions.h"
#include "bundlepmg/errors.h"
#include "test_support.h"

namespace bundlepmg {
namespace {

const ConditionLine* FindLine(const ConditionReport& r, std::string_view text) {
  for (const ConditionLine& line : r.lines) {
    if (line.label == text) return &line;
  }
  return nullptr;
}

TEST_CASE("baseline fails set A on the item-demand line") {
  const ConditionReport r = CheckConditionSet('A', Baseline());
  CHECK(r.set_id == 'A');
  CHECK_FALSE(r.all_satisfied);
  const ConditionLine* line =
      FindLine(r, "a_l_i1+a_l_i2 >= 4/3(a_l_jb+a_q_jb)");
  REQUIRE(line != nullptr);
  CHECK(line->lhs == 200);
  CHECK(line->rhs == doctest::Approx(266.6667).epsilon(1e-6));
  CHECK_FALSE(line->satisfied);
}

TEST_CASE("constructed point satisfies every set A line") {
  const ConditionReport r = CheckConditionSet('A', testing::SetAExample());
  CHECK(r.all_satisfied);
  for (const ConditionLine& line : r.lines) CHECK(line.satisfied);
}

TEST_CASE("alpha = 1 breaks the strategic-base line of set C") {
  MarketParams p = Baseline();
  p.tie_share = 1;
  const ConditionReport r = CheckConditionSet('C', p);
  const ConditionLine* line = FindLine(r, "a_s <= (c1+c2)(1-alpha)b_s");
  REQUIRE(line != nullptr);
  CHECK(line->rhs == 0);
  CHECK_FALSE(line->satisfied);
  CHECK_FALSE(r.all_satisfied);
}

TEST_CASE("unknown set") {
  CHECK_THROWS_AS(CheckConditionSet('G', Baseline()), UnknownSet);
  CHECK_THROWS_AS(CheckConditionSet('a', Baseline()), UnknownSet);
}

TEST_CASE("set B second bound: literal and paired readings") {
  MarketParams p = Baseline();
  p.aware2_base = 80;
  p.bundle2_base = 60;
  const ConditionReport literal = CheckConditionSet('B', p);
  ConditionOptions opt;
  opt.set_b_loyal_pair = true;
  const ConditionReport paired = CheckConditionSet('B', p, opt);
  const ConditionLine* a =
      FindLine(literal, "4/3 b_l/b_s >= (a_q_jb+a_q_jb)/(2a_s)");
  const ConditionLine* b =
      FindLine(paired, "4/3 b_l/b_s >= (a_l_jb+a_q_jb)/(2a_s)");
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(a->rhs == doctest::Approx(0.8));
  CHECK(b->rhs == doctest::Approx(0.7));
}

TEST_CASE("slack relaxes every line") {
  const ConditionReport tight = CheckConditionSet('A', Baseline());
  ConditionOptions opt;
  opt.slack = 100;
  const ConditionReport loose = CheckConditionSet('A', Baseline(), opt);
  CHECK_FALSE(tight.all_satisfied);
  CHECK(loose.all_satisfied);
}

TEST_CASE("every set reports at least one line") {
  for (char id : {'A', 'B', 'C', 'D', 'E', 'F'}) {
    const ConditionReport r = CheckConditionSet(id, Baseline());
    CHECK(r.set_id == id);
    CHECK_FALSE(r.lines.empty());
  }
}

TEST_CASE("baseline eigenvalues") {
  const MarketParams p = Baseline();
  const HessianReport a =
      HessianR1(p, Scenario::Make(true, true, true), Regime::kR1High);
  REQUIRE(a.dim == 3);
  // -2 b_l (1 - theta_l) is shared by every bundled case.
  CHECK(std::count_if(a.closed_eigenvalues.begin(), a.closed_eigenvalues.end(),
                      [](double e) { return std::abs(e + 0.4) < 1e-12; }) >= 1);
  const HessianReport e =
      HessianR1(p, Scenario::Make(false, false, false), Regime::kR1High);
  REQUIRE(e.dim == 2);
  CHECK(e.closed_eigenvalues[0] == doctest::Approx(-4.4));
  CHECK(e.closed_eigenvalues[1] == doctest::Approx(-0.4));
  CHECK(e.negative_definite);
}

TEST_CASE("closed-form eigenvalues match the eigensolver") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const MarketParams p = testing::RandomParams(rng);
    const Scenario& s = AllScenarios()[i % 5];
    for (Regime regime : {Regime::kR1High, Regime::kR1Low}) {
      for (const HessianReport& h :
           {HessianR1(p, s, regime), HessianR2(p, s, regime)}) {
        REQUIRE(h.closed_eigenvalues.size() == h.numeric_eigenvalues.size());
        for (size_t k = 0; k < h.closed_eigenvalues.size(); ++k) {
          REQUIRE(std::abs(h.closed_eigenvalues[k] - h.numeric_eigenvalues[k]) <=
                  1e-9);
        }
        REQUIRE(h.negative_definite);
        for (double e : h.closed_eigenvalues) REQUIRE(e < 0);
      }
    }
  }
}

TEST_CASE("hessian matrices are symmetric") {
  const MarketParams p = Baseline();
  for (const Scenario& s : AllScenarios()) {
    for (Regime regime : {Regime::kR1High, Regime::kR1Low}) {
      const HessianReport h = HessianR1(p, s, regime);
      for (int a = 0; a < h.dim; ++a) {
        for (int b = 0; b < h.dim; ++b) CHECK(h.matrix[a][b] == h.matrix[b][a]);
      }
    }
  }
}

}  // namespace
}  // namespace bundlepmg

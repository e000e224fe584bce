// Copyright 2026 The LAFF Authors
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

#include "laff/bargaining.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "laff/games.h"
#include "oracles.h"

namespace laff {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double EbsObjective(const PairSolution& s, double mu1, double mu2) {
  return std::min(s.u1 - mu1, s.u2 - mu2);
}

TEST_CASE("deviation profit") {
  const BimatrixGame g = BuiltinGame("chicken");
  const std::vector<JointAction> ebs_pairs{{0, 1}, {1, 0}};
  CHECK(DeviationProfit(g, ebs_pairs) == doctest::Approx(-0.25));
  const std::vector<JointAction> dare{{1, 0}};
  CHECK(DeviationProfit(g, dare) == doctest::Approx(-0.25));
  // Column 1 is player 2's strict best response to row 0.
  const std::vector<JointAction> br{{0, 1}};
  CHECK(DeviationProfit(g, br) < 0);
  CHECK_THROWS_AS(DeviationProfit(g, std::vector<JointAction>{}),
                  std::invalid_argument);
  const BimatrixGame one_col("c", Matrix::FromRows({{0.2}, {0.4}}),
                             Matrix::FromRows({{0.1}, {0.3}}));
  const std::vector<JointAction> x{{0, 0}};
  CHECK(DeviationProfit(one_col, x) == -kInf);
}

TEST_CASE("alpha lower bound") {
  const BimatrixGame g = BuiltinGame("chicken");
  const EnforceParams ep{1, 0.05};
  const auto bound = AlphaLowerBound(g, {0, 1}, {1, 0}, ep, 0.25);
  REQUIRE(bound.has_value());
  CHECK(*bound == doctest::Approx((-0.25 + 0.05) / 0.75));
  CHECK_THROWS_AS(AlphaLowerBound(g, {1, 0}, {0, 1}, ep, 0.25),
                  std::invalid_argument);

  // Equal player-2 rewards at the security value with r = -eps: boundary.
  const BimatrixGame flat("f", Matrix::FromRows({{0.5, 0.5}, {0.5, 0.5}}),
                          Matrix::FromRows({{0.5, 0.45}, {0.5, 0.45}}));
  const auto edge = AlphaLowerBound(flat, {0, 0}, {1, 0}, {1, 0.05}, 0.5);
  REQUIRE(edge.has_value());
  CHECK(*edge == 0.0);
  CHECK_FALSE(AlphaLowerBound(flat, {0, 0}, {1, 0}, {1, 0.06}, 0.5));

  // A bound above one marks an infeasible pair and is returned unchanged.
  const BimatrixGame steep("s", Matrix::FromRows({{0.5, 0.5}, {0.5, 0.5}}),
                           Matrix::FromRows({{0.6, 1.0}, {0.0, 0.4}}));
  const auto high = AlphaLowerBound(steep, {0, 0}, {1, 0}, {1, 0.05}, 0.4);
  REQUIRE(high.has_value());
  CHECK(*high > 1.0);
}

TEST_CASE("chicken EBS and bully") {
  const BimatrixGame g = BuiltinGame("chicken");
  const PairSolution ebs = EnforceableEbs(g, {1, 0.05});
  CHECK(ebs.kind == SolutionKind::kEbs);
  CHECK(ebs.alpha == doctest::Approx(0.5));
  CHECK(ebs.u1 == doctest::Approx(0.625));
  CHECK(ebs.u2 == doctest::Approx(0.625));
  CHECK(ebs.deviation_profit == doctest::Approx(-0.25));
  CHECK(PunishmentLength(ebs, {1, 0.05}, 0.25) == 0);

  const PairSolution bully = BullySolution(g, {1, 0.05});
  CHECK(bully.kind == SolutionKind::kBully);
  CHECK(bully.IsSingle());
  CHECK(bully.xa == JointAction{1, 0});
  CHECK(bully.u1 == doctest::Approx(1.0));
  CHECK(bully.u2 == doctest::Approx(0.25));

  // (1, 0) alone needs eps <= 0.25.
  const PairSolution strict = BullySolution(g, {1, 0.3});
  CHECK(strict.u1 < 1.0);
  const oracle::BargainOptimum o =
      oracle::BruteBargain(g, 1, 0.3, 0.25, 0.25, 1e-4);
  CHECK(strict.u1 == doctest::Approx(o.bully_u1).epsilon(1e-3));
}

TEST_CASE("chicken EBS feasibility flips at eps = 0.375 K + 0.25") {
  const BimatrixGame g = BuiltinGame("chicken");
  for (int k = 1; k <= 3; ++k) {
    const double flip = 0.375 * k + 0.25;
    const PairSolution below = EnforceableEbs(g, {k, flip - 1e-4});
    CHECK(below.u1 == doctest::Approx(0.625));
    CHECK(below.u2 == doctest::Approx(0.625));
    const PairSolution above = EnforceableEbs(g, {k, flip + 1e-4});
    CHECK(EbsObjective(above, 0.25, 0.25) < 0.375 - 1e-6);
  }
}

TEST_CASE("fallback when nothing is enforceable") {
  const BimatrixGame g("flat", Matrix::FromRows({{0.3, 0.6}, {0.9, 0.1}}),
                       Matrix::FromRows({{0.5, 0.5}, {0.5, 0.5}}));
  const PairSolution e = EnforceableEbs(g, {1, 0.05});
  CHECK(e.IsFallback());
  CHECK(e.u1 == doctest::Approx(SecurityValue(g, Player::kOne).value));
  CHECK(e.u2 == doctest::Approx(0.5));
  CHECK(PunishmentLength(e, {1, 0.05}, 0.5) == 0);
  CHECK(BullySolution(g, {1, 0.05}).IsFallback());
}

TEST_CASE("punishment length") {
  PairSolution s;
  s.kind = SolutionKind::kEbs;
  s.xa = {0, 0};
  s.xb = {0, 0};
  s.u2 = 0.5;
  s.deviation_profit = 0.2;
  CHECK(PunishmentLength(s, {1, 0.05}, 0.25) == 1);
  s.deviation_profit = -0.05;
  CHECK(PunishmentLength(s, {1, 0.05}, 0.25) == 0);
  s.deviation_profit = 0.2;
  s.u2 = 0.3;  // needs 5 steps
  CHECK(PunishmentLength(s, {5, 0.05}, 0.25) == 5);
  CHECK_THROWS_AS(PunishmentLength(s, {4, 0.05}, 0.25), std::invalid_argument);
  s.u2 = 0.25;
  CHECK_THROWS_AS(PunishmentLength(s, {4, 0.05}, 0.25), std::invalid_argument);
}

TEST_CASE("xi branches") {
  CHECK(Xi(0.05, -0.25, 0) == doctest::Approx(0.25));
  CHECK(Xi(0.1, 0.2, 2) == doctest::Approx(0.025));
  CHECK(Xi(0.1, -0.05, 1) == doctest::Approx(0.025));
  CHECK_THROWS_AS(Xi(0.1, 0.0, 0), std::invalid_argument);
}

TEST_CASE("practical slack") {
  CHECK(PracticalSlack(1, 200000, 0.05) ==
        doctest::Approx(0.05 + 0.005 * std::sqrt(std::log(4e6) / 2)));
  CHECK(PracticalSlack(1, 200000, 0.05) == doctest::Approx(0.0638).epsilon(1e-3));
  for (long tau = 1; tau < 1'000'000; tau *= 2) {
    CHECK(PracticalSlack(2 * tau, 20000, 0.05) < PracticalSlack(tau, 20000, 0.05));
  }
  CHECK(PracticalSlack(1'000'000'000, 20000, 0.05) < 1e-6);
  CHECK_THROWS_AS(PracticalSlack(0, 10, 0.05), std::invalid_argument);
}

TEST_CASE("theoretical slack decreases and is positive") {
  TheoreticalSlackParams p;
  p.horizon = 20000;
  p.xi = 0.25;
  p.kp = 1;
  double prev = kInf;
  for (long tau = 1; tau <= 1 << 20; tau *= 4) {
    const double b = TheoreticalSlack(tau, std::pow(tau, 2.0 / 3), p);
    CHECK(b > 0);
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("all built-in games agree with the alpha-grid oracle") {
  for (const std::string& name : BuiltinGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    const double mu1 = oracle::ExactTwoRowMaximin(g.rewards(Player::kOne));
    const double mu2 =
        oracle::ExactTwoRowMaximin(g.rewards(Player::kTwo).Transposed());
    for (int k : {1, 2}) {
      for (double eps : {0.05, 0.2}) {
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(eps);
        const EnforceParams ep{k, eps};
        const PairSolution ebs = EnforceableEbs(g, ep);
        const PairSolution bully = BullySolution(g, ep);
        const oracle::BargainOptimum o =
            oracle::BruteBargain(g, k, eps, mu1, mu2, 1e-4);
        CHECK(o.feasible == !ebs.IsFallback());
        CHECK(o.feasible == !bully.IsFallback());
        if (!o.feasible) continue;
        CHECK(std::abs(EbsObjective(ebs, mu1, mu2) - o.ebs_objective) <= 1e-3);
        CHECK(std::abs(bully.u1 - o.bully_u1) <= 1e-3);
        for (const PairSolution* s : {&ebs, &bully}) {
          CHECK(IsEnforceable(g, *s, ep, mu1, mu2));
          const double a = s->alpha;
          CHECK(s->u1 == doctest::Approx(
                             a * g.reward(Player::kOne, s->xa.a1, s->xa.a2) +
                             (1 - a) * g.reward(Player::kOne, s->xb.a1, s->xb.a2))
                             .epsilon(1e-9));
          CHECK(s->u2 == doctest::Approx(
                             a * g.reward(Player::kTwo, s->xa.a1, s->xa.a2) +
                             (1 - a) * g.reward(Player::kTwo, s->xb.a1, s->xb.a2))
                             .epsilon(1e-9));
          // Re-check enforceability with the brute-force deviation profit.
          std::vector<std::pair<int, int>> support{{s->xa.a1, s->xa.a2}};
          if (!s->IsSingle()) support.emplace_back(s->xb.a1, s->xb.a2);
          CHECK(k * s->u2 >=
                k * mu2 + oracle::BruteDeviation(g, support) + eps - 1e-9);
          const int kp = PunishmentLength(*s, ep, mu2);
          CHECK(kp >= 0);
          CHECK(kp <= k);
        }
        CHECK(bully.u1 >= ebs.u1 - 1e-9);
      }
    }
  }
}

TEST_CASE("symmetric games have equal EBS values") {
  for (const std::string& name : BuiltinGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    if (!g.IsSymmetric()) continue;
    CAPTURE(name);
    const PairSolution e = EnforceableEbs(g, {1, 0.05});
    CHECK(e.u1 == doctest::Approx(e.u2).epsilon(1e-6));
  }
}

TEST_CASE("larger eps never improves the EBS objective") {
  for (const std::string& name : BuiltinGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    const double mu1 = SecurityValue(g, Player::kOne).value;
    const double mu2 = SecurityValue(g, Player::kTwo).value;
    for (int k : {1, 2}) {
      double prev = kInf;
      for (double eps = 0.01; eps < 1.5; eps += 0.07) {
        const PairSolution e = EnforceableEbs(g, {k, eps});
        const double obj = e.IsFallback() ? -kInf : EbsObjective(e, mu1, mu2);
        CHECK(obj <= prev + 1e-12);
        prev = obj;
      }
    }
  }
}

TEST_CASE("summary targets are ordered") {
  for (const std::string& name : BuiltinGameNames()) {
    CAPTURE(name);
    const BargainingSummary s = Summarize(BuiltinGame(name), {1, 0.05});
    CHECK(s.bully.u1 >= s.ebs.u1 - 1e-9);
    CHECK(s.ebs.u1 >= s.security1.value - 1e-9);
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(EnforceParams({0, 0.05}).Validate(), std::invalid_argument);
  CHECK_THROWS_AS(EnforceParams({1, 0.0}).Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace laff

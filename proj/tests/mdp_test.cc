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

#include "laff/mdp.h"

#include <cmath>

#include "doctest.h"
#include "laff/experts.h"
#include "laff/games.h"
#include "laff/opponents.h"
#include "laff/rng.h"
#include "oracles.h"

namespace laff {
namespace {

OpponentPolicy Fixed(int n, int a) {
  return [n, a](const HistoryState&) { return MixedStrategy::Pure(n, a); };
}

OpponentPolicy TitForTat(int n) {
  return [n](const HistoryState& s) {
    return MixedStrategy::Pure(n, s.a1().back() % n);
  };
}

TEST_CASE("joint signal probabilities") {
  const std::vector<double> p = JointSignalProbabilities(0.3, 0.7);
  REQUIRE(p.size() == 4);
  CHECK(p[0] == doctest::Approx(0.3));
  CHECK(p[1] == doctest::Approx(0.0));
  CHECK(p[2] == doctest::Approx(0.4));
  CHECK(p[3] == doctest::Approx(0.3));
  const std::vector<double> q = JointSignalProbabilities(0.5, 0.5);
  CHECK(q[0] == doctest::Approx(0.5));
  CHECK(q[3] == doctest::Approx(0.5));
}

TEST_CASE("chicken against fixed and uniform opponents") {
  const BimatrixGame g = BuiltinGame("chicken");
  const InducedMdp dare = InduceMdp(g, Fixed(2, 1), 0.0, 0.0, 1);
  CHECK(dare.num_states() <= 64);
  CHECK(OptimalAverageReward(dare).gain == doctest::Approx(0.25).epsilon(1e-7));
  const InducedMdp yield = InduceMdp(g, Fixed(2, 0), 0.0, 0.0, 1);
  CHECK(OptimalAverageReward(yield).gain == doctest::Approx(1.0).epsilon(1e-7));
  const InducedMdp coin = InduceMdp(
      g, [](const HistoryState&) { return MixedStrategy::Uniform(2); }, 0.0,
      0.0, 1);
  CHECK(OptimalAverageReward(coin).gain == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("state space bounds and transition sanity") {
  for (const std::string& name : BuiltinGameNames()) {
    CAPTURE(name);
    const BimatrixGame g = BuiltinGame(name);
    for (int k : {1, 2}) {
      const InducedMdp m = InduceMdp(g, TitForTat(g.n2()), 0.3, 0.6, k);
      CHECK(m.num_states() <= HistoryState::NumStates(g.n1(), g.n2(), k));
      double init = 0;
      for (double p : m.initial) init += p;
      CHECK(init == doctest::Approx(1.0));
      for (int s = 0; s < m.num_states(); ++s) {
        for (int a = 0; a < m.num_actions; ++a) {
          double total = 0;
          for (const Transition& t : m.transitions[s][a]) {
            CHECK(t.next >= 0);
            CHECK(t.next < m.num_states());
            total += t.prob;
          }
          CHECK(total == doctest::Approx(1.0));
        }
      }
    }
  }
}

TEST_CASE("optimal gain matches the exhaustive Abel oracle") {
  for (const char* name : {"chicken", "sym_inferior", "asym_cyclic"}) {
    CAPTURE(name);
    const BimatrixGame g = BuiltinGame(name);
    const MatchConfig c;
    std::vector<OpponentPolicy> opps = {
        Fixed(g.n2(), 0), TitForTat(g.n2()),
        [&](const HistoryState&) { return MixedStrategy::Uniform(g.n2()); }};
    std::vector<double> weights = {0.0, 0.0, 0.0};
    for (const char* leader : {"egalitarian", "ftft"}) {
      const auto s = MakeStationaryOpponent({leader, {}}, g, c);
      REQUIRE(s.has_value());
      opps.push_back(s->policy);
      weights.push_back(s->weight);
    }
    for (size_t i = 0; i < opps.size(); ++i) {
      CAPTURE(i);
      const InducedMdp m = InduceMdp(g, opps[i], 0.0, weights[i], 1);
      REQUIRE(m.num_states() <= 16);
      const OptimalGain opt = OptimalAverageReward(m);
      CHECK(opt.gain ==
            doctest::Approx(oracle::ExhaustiveOptimalGain(m)).epsilon(1e-6));
      CHECK(oracle::AbelGain(m, opt.policy) ==
            doctest::Approx(opt.gain).epsilon(1e-6));
      CHECK(PolicyAverageReward(m, opt.policy).player1 ==
            doctest::Approx(opt.gain).epsilon(1e-7));
      CHECK(opt.gain >= SecurityValue(g, Player::kOne).value - 1e-9);
    }
  }
}

TEST_CASE("optimal gain dominates random deterministic policies") {
  const BimatrixGame g = BuiltinGame("asym_biased");
  const MatchConfig c;
  const auto opp = MakeStationaryOpponent({"ftft", {}}, g, c);
  const InducedMdp m = InduceMdp(g, opp->policy, 0.2, opp->weight, 2);
  const double best = OptimalAverageReward(m).gain;
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> policy(m.num_states());
    for (int& a : policy) a = rng.UniformInt(m.num_actions);
    CHECK(PolicyAverageReward(m, policy).player1 <= best + 1e-7);
  }
}

TEST_CASE("egalitarian leaders in self-play earn the EBS") {
  const BimatrixGame g = BuiltinGame("chicken");
  MatchConfig c;
  const auto ctx = MakePlayerContext(g, Seat::kRow, c);
  const auto opp = MakeStationaryOpponent({"egalitarian", {}}, g, c);
  auto leader = MakeEgalitarianLeader(*ctx, 0);
  const InducedMdp m =
      InduceMdp(g, opp->policy, leader->Weight(0), opp->weight, 1);
  std::vector<MixedStrategy> policy;
  for (const HistoryState& s : m.states) {
    policy.push_back(leader->ActionDistribution(s));
  }
  const PolicyGain pg = PolicyAverageReward(m, policy);
  CHECK(pg.player1 == doctest::Approx(0.625).epsilon(1e-9));
  CHECK(pg.player2 == doctest::Approx(0.625).epsilon(1e-9));
  CHECK(OptimalAverageReward(m).gain >= pg.player1 - 1e-9);
}

TEST_CASE("policy length must match") {
  const InducedMdp m = InduceMdp(BuiltinGame("chicken"), Fixed(2, 0), 0, 0, 1);
  CHECK_THROWS_AS(PolicyAverageReward(m, std::vector<int>{0}),
                  std::invalid_argument);
}

}  // namespace
}  // namespace laff

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

#include <benchmark/benchmark.h>

#include "laff/bargaining.h"
#include "laff/engine.h"
#include "laff/games.h"
#include "laff/matrix_game.h"
#include "laff/mdp.h"
#include "laff/opponents.h"

namespace laff {
namespace {

void BM_SecurityValue(benchmark::State& state) {
  const BimatrixGame g = BuiltinGame("asym_cyclic");
  for (auto _ : state) {
    benchmark::DoNotOptimize(SecurityValue(g, Player::kOne));
  }
}
BENCHMARK(BM_SecurityValue);

void BM_EnforceableEbs(benchmark::State& state) {
  const BimatrixGame g = BuiltinGame("asym_biased");
  const EnforceParams ep{static_cast<int>(state.range(0)), 0.05};
  for (auto _ : state) benchmark::DoNotOptimize(EnforceableEbs(g, ep));
}
BENCHMARK(BM_EnforceableEbs)->Arg(1)->Arg(2);

void BM_OptimalGain(benchmark::State& state) {
  const BimatrixGame g = BuiltinGame("chicken");
  const MatchConfig c;
  const auto opp = MakeStationaryOpponent({"ftft", {}}, g, c);
  const InducedMdp m =
      InduceMdp(g, opp->policy, 0.0, opp->weight, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(OptimalAverageReward(m));
}
BENCHMARK(BM_OptimalGain)->Arg(1)->Arg(2);

void BM_MatchSteps(benchmark::State& state) {
  const BimatrixGame g = BuiltinGame("chicken");
  MatchConfig c;
  c.horizon = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PlayMatch(g, {"laff", {}}, {"qlearning", {}}, c));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchSteps)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace laff

BENCHMARK_MAIN();

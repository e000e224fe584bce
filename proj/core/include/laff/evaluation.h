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

// Regret curves, round-robin tournaments, pure equilibria of the resulting
// learning game and replicator dynamics over it.

#ifndef LAFF_CORE_EVALUATION_H_
#define LAFF_CORE_EVALUATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laff/engine.h"
#include "laff/matrix_game.h"
#include "laff/opponents.h"
#include "laff/rng.h"

namespace laff {

enum class OpponentClass {
  kBoundedMemory,
  kAdversarial,
  kFollowerConditional,
  kFollowerUnconditional,
};

std::string ToString(OpponentClass c);
OpponentClass OpponentClassFromString(const std::string& s);

// Benchmark reward for the row player. kBoundedMemory needs `opponent`
// (throws std::invalid_argument otherwise) and uses the optimal average
// reward of the induced MDP with row weight 0.
double BenchmarkFor(const BimatrixGame& game, OpponentClass c,
                    const MatchConfig& config,
                    const std::optional<StationaryOpponent>& opponent = {});

// cumulative[t - 1] = t * benchmark - (r_1 + ... + r_t).
struct RegretCurve {
  double benchmark = 0.0;
  std::vector<double> cumulative;

  // Average regret cumulative[t - 1] / t; t in [1, size].
  double AverageAt(long t) const;
};

RegretCurve MakeRegretCurve(std::span<const double> rewards, double benchmark);
RegretCurve PlayerRegret(const MatchTrace& trace, Player player,
                         double benchmark);
// Player 2's regret with respect to mu_E2 + c.
RegretCurve ExploiterRegret(const MatchTrace& trace, double mu_e2, double c);

// Least-squares slope of cumulative regret over the second half of the curve.
// Zero for curves shorter than four points.
double SecondHalfSlope(const RegretCurve& curve);

// Mean rewards of algorithm pairs: m1(i, j) is the row algorithm i's reward
// against column algorithm j, m2(i, j) the column algorithm's reward.
struct LearningGameMatrix {
  std::vector<std::string> names;
  Matrix m1;
  Matrix m2;

  int size() const { return static_cast<int>(names.size()); }
};

// Cells (i, j) where neither side gains by switching algorithm; ties count.
std::vector<std::pair<int, int>> PureNash(const LearningGameMatrix& m);

// One game's pairwise rewards for one trial (same layout as above).
struct PairwiseRewards {
  Matrix m1;
  Matrix m2;
};

struct RoundRobinResult {
  LearningGameMatrix average;
  // [game][trial]
  std::vector<std::vector<PairwiseRewards>> per_trial;
};

struct RoundRobinOptions {
  int trials = 1;
  int jobs = 1;
};

// Every ordered pair of algorithms plays every game `trials` times. For a
// symmetric game only pairs with i <= j are played; the reversed pairing is
// the mirror of the played one. Match (g, k, i, j) uses seed
// DeriveSeed(config.seed, ((g * trials + k) * J + i) * J + j). Results do not
// depend on `jobs`.
RoundRobinResult RoundRobin(const std::vector<AgentSpec>& algorithms,
                            const std::vector<BimatrixGame>& games,
                            const MatchConfig& config,
                            const RoundRobinOptions& options);

// Fitness of each algorithm: for every game the reward vector against each
// opponent is the elementwise minimum over both seats, weighted by p and
// averaged over games.
std::vector<double> ReplicatorFitness(
    std::span<const double> p, std::span<const PairwiseRewards> games);

// p <- p * ((1 - mean(f)) + f), renormalized. Throws std::runtime_error if a
// share would become negative.
std::vector<double> ReplicatorStep(std::span<const double> p,
                                   std::span<const PairwiseRewards> games);

// Runs `generations` steps from `p0`; each generation uses one randomly drawn
// trial per game. Returns the shares after every generation (index 0 = p0).
std::vector<std::vector<double>> ReplicatorRun(
    std::span<const double> p0,
    const std::vector<std::vector<PairwiseRewards>>& per_trial,
    int generations, Rng& rng);

// Restricts pairwise rewards to a subset of algorithms, in the given order.
std::vector<std::vector<PairwiseRewards>> SelectAlgorithms(
    const std::vector<std::vector<PairwiseRewards>>& per_trial,
    const std::vector<int>& indices);

}  // namespace laff

#endif  // LAFF_CORE_EVALUATION_H_

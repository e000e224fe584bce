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

// Average-reward MDP faced by the row player against a stationary memory-K
// opponent. States are the HistoryStates reachable from the start of a match
// (zero action history, signal bits drawn from both weights).

#ifndef LAFF_CORE_MDP_H_
#define LAFF_CORE_MDP_H_

#include <functional>
#include <vector>

#include "laff/engine.h"
#include "laff/matrix_game.h"

namespace laff {

struct Transition {
  int next;
  double prob;
};

struct InducedMdp {
  int num_actions = 0;
  std::vector<HistoryState> states;
  std::vector<double> initial;  // start distribution over states
  // Indexed [s][a].
  std::vector<std::vector<std::vector<Transition>>> transitions;
  std::vector<std::vector<double>> reward1;
  std::vector<std::vector<double>> reward2;

  int num_states() const { return static_cast<int>(states.size()); }
};

using OpponentPolicy = std::function<MixedStrategy(const HistoryState&)>;

// Probabilities of the signal pairs (1,1), (1,0), (0,1), (0,0) when both
// bits come from one uniform draw.
std::vector<double> JointSignalProbabilities(double w1, double w2);

// `opp_policy` maps a row-view state to the column player's distribution.
// Rewards are expectations over the opponent's action. Throws
// std::invalid_argument for weights outside [0, 1] or a policy of the wrong
// size.
InducedMdp InduceMdp(const BimatrixGame& game, const OpponentPolicy& opp_policy,
                     double w1, double w2, int k);

struct OptimalGain {
  double gain = 0.0;
  std::vector<int> policy;
  long sweeps = 0;
};

// Relative value iteration on the lazy chain (P + I) / 2 until the span of
// successive differences is below `tol`. When the gain is not constant over
// states, the gain from the initial distribution is returned. Throws
// std::runtime_error after `max_sweeps`.
OptimalGain OptimalAverageReward(const InducedMdp& mdp, double tol = 1e-8,
                                 long max_sweeps = 1'000'000);

struct PolicyGain {
  double player1 = 0.0;
  double player2 = 0.0;
};

// Long-run average rewards from the initial distribution under a stochastic
// row policy (one distribution per state), by power iteration on the lazy
// chain.
PolicyGain PolicyAverageReward(const InducedMdp& mdp,
                               const std::vector<MixedStrategy>& policy,
                               double tol = 1e-13,
                               long max_iterations = 10'000'000);
PolicyGain PolicyAverageReward(const InducedMdp& mdp,
                               const std::vector<int>& policy);

}  // namespace laff

#endif  // LAFF_CORE_MDP_H_

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

// Opponent algorithms and the name-based agent factory.
//
//   name              parameters (defaults)
//   laff              -
//   bully             -
//   egalitarian       -
//   ftft              p (0.2)
//   qlearning         gamma (0.95)
//   fictitious_play   -
//   manipulator       eps_prime (0.025), p_switch (0.00005)
//   maximin           -
//   fixed             action (0)

#ifndef LAFF_CORE_OPPONENTS_H_
#define LAFF_CORE_OPPONENTS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laff/engine.h"
#include "laff/experts.h"
#include "laff/matrix_game.h"
#include "laff/rng.h"

namespace laff {

// Epsilon-greedy Q-learning. At its n-th step (n from 0) it explores
// uniformly with probability 1/(10 + n/10), otherwise acts greedily, and
// learns with rate 5/(10 + n/100). Q-values start at 1/(1 - gamma).
class EpsGreedyQAgent : public Agent {
 public:
  EpsGreedyQAgent(const BimatrixGame& own_game, int memory, uint64_t seed,
                  double gamma = 0.95);

  std::string name() const override { return "qlearning"; }
  double Weight(long) const override { return 0.0; }
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;

  static double ExploreProbability(long n) { return 1.0 / (10.0 + n / 10.0); }
  static double LearningRate(long n) { return 5.0 / (10.0 + n / 100.0); }

  // Forget the (s, a, r) awaiting its next state; used when another policy
  // acted in between.
  void DropPending() { pending_state_ = -1; }
  const QTable& table() const { return table_; }

 private:
  int n1_;
  int n2_;
  double gamma_;
  QTable table_;
  Rng rng_;
  long steps_ = 0;
  long pending_state_ = -1;
  int pending_action_ = 0;
  double pending_reward_ = 0.0;
};

// Best response to the empirical frequencies of the opponent's actions;
// uniform prior before the first observation, lowest-index ties.
class FictitiousPlayAgent : public Agent {
 public:
  explicit FictitiousPlayAgent(const BimatrixGame& own_game);

  std::string name() const override { return "fictitious_play"; }
  double Weight(long) const override { return 0.0; }
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;

  const std::vector<long>& counts() const { return counts_; }

 private:
  BimatrixGame game_;
  std::vector<long> counts_;
};

class FixedActionAgent : public Agent {
 public:
  explicit FixedActionAgent(int action) : action_(action) {}

  std::string name() const override {
    return "fixed" + std::to_string(action_);
  }
  double Weight(long) const override { return 0.0; }
  int Act(const HistoryState&, long) override { return action_; }
  void Observe(const StepRecord&) override {}

 private:
  int action_;
};

// Memoryless maximin play.
class MaximinAgent : public Agent {
 public:
  MaximinAgent(MixedStrategy strategy, uint64_t seed)
      : strategy_(std::move(strategy)), rng_(seed) {}

  std::string name() const override { return "maximin"; }
  double Weight(long) const override { return 0.0; }
  int Act(const HistoryState&, long) override {
    return rng_.Sample(strategy_.probs);
  }
  void Observe(const StepRecord&) override {}

 private:
  MixedStrategy strategy_;
  Rng rng_;
};

struct ManipulatorParams {
  double eps_prime = 0.025;
  double p_switch = 0.00005;
  double tv_threshold = 0.1;
};

// Leads with its bully solution for T/20 steps, may fall back to Q-learning
// while its average stays below the bully target, and locks in an expert
// after 7T/20 (or 8T/20 when it first tries learning against a stationary
// opponent). A locked expert is replaced by maximin whenever the average
// since the lock drops below the security value minus eps_prime.
class ManipulatorAgent : public Agent {
 public:
  enum class Phase { kLead, kWatch, kTestLearner, kLocked };
  enum class Expert { kLeader = 0, kLearner = 1 };

  ManipulatorAgent(std::shared_ptr<const PlayerContext> ctx, uint64_t seed,
                   ManipulatorParams params = {});

  std::string name() const override { return "manipulator"; }
  double Weight(long t) const override;
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;

  Phase phase() const { return phase_; }
  Expert current() const { return current_; }
  bool overriding() const { return overriding_; }
  long override_steps() const { return override_steps_; }

 private:
  bool OpponentNonstationary() const;
  Expert BestExpert() const;
  void Lock(Expert e);

  std::shared_ptr<const PlayerContext> ctx_;
  ManipulatorParams params_;
  std::unique_ptr<Leader> leader_;
  EpsGreedyQAgent learner_;
  Rng rng_;
  long window_;
  Phase phase_ = Phase::kLead;
  Expert current_ = Expert::kLeader;
  bool overriding_ = false;
  long override_steps_ = 0;
  long steps_ = 0;
  double total_ = 0.0;
  double expert_sum_[2] = {0.0, 0.0};
  long expert_count_[2] = {0, 0};
  double lock_sum_ = 0.0;
  long lock_count_ = 0;
  std::vector<int> opp_actions_;
};

struct AgentSpec {
  std::string name;
  std::map<std::string, double> params;
};

// Names accepted by MakeAgent.
const std::vector<std::string>& AgentNames();

// Builds an agent for `seat` of `game` (given in row-seat orientation).
// Throws std::invalid_argument for unknown names or parameters.
std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec,
                                 const BimatrixGame& game, Seat seat,
                                 const MatchConfig& config, uint64_t seed);

// A stationary memory-K opponent in the column seat, as seen from the row
// player: its action distribution for each row-view state and its constant
// signal weight.
struct StationaryOpponent {
  std::function<MixedStrategy(const HistoryState&)> policy;
  double weight = 0.0;
};

// Available for bully, egalitarian, ftft, maximin and fixed; nullopt for
// learning agents.
std::optional<StationaryOpponent> MakeStationaryOpponent(
    const AgentSpec& spec, const BimatrixGame& game, const MatchConfig& config);

// Plays a full match between two named agents with the usual seed split.
MatchTrace PlayMatch(const BimatrixGame& game, const AgentSpec& p1,
                     const AgentSpec& p2, const MatchConfig& config);

}  // namespace laff

#endif  // LAFF_CORE_OPPONENTS_H_

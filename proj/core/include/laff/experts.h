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

// The LAFF sub-algorithms:
//   Leader             phi_E (egalitarian) and phi_B (bully); also FTFT.
//   ConditionalFollower phi_F: optimistic Q-learning plus an exploitation
//                      test that hands over to phi_E.
//   ConditionalMaximin phi_M: maximin plus a test on the opponent's rewards.

#ifndef LAFF_CORE_EXPERTS_H_
#define LAFF_CORE_EXPERTS_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "laff/bargaining.h"
#include "laff/engine.h"
#include "laff/matrix_game.h"
#include "laff/rng.h"

namespace laff {

// What every expert of one player needs to know: the game from its own seat
// plus the solutions computed on it.
struct PlayerContext {
  BimatrixGame game;  // own seat is player 1
  Seat seat = Seat::kRow;
  MatchConfig config;
  BargainingSummary summary;
  long epoch_length = 1;     // H = floor(sqrt(T))
  long subepoch_length = 1;  // ceil(sqrt(H))
};

// `own_game` must already be oriented so that this player is player 1.
std::shared_ptr<const PlayerContext> MakePlayerContext(BimatrixGame own_game,
                                                       Seat seat,
                                                       const MatchConfig& config);

// Leader behavior derived from a PairSolution. The two joint actions are
// keyed by signal bit so that both seats agree on the labeling: bit 1 selects
// the action with the higher row-player reward (ties: smaller row-seat
// coordinates). `weight` is the probability of bit 1.
struct LeaderPlan {
  bool fallback = false;
  std::array<JointAction, 2> target;  // own coordinates, indexed by bit
  double weight = 0.0;
  int kp = 0;
  MixedStrategy punish;   // v_P
  MixedStrategy maximin;  // v_M, played when there is no solution
  PairSolution solution;
};

LeaderPlan MakeLeaderPlan(const PlayerContext& ctx, const PairSolution& sol,
                          int kp);

class Leader : public Agent {
 public:
  // `punish_prob` < 1 gives forgiving behavior: each punishment step is
  // replaced by the target action with probability 1 - punish_prob.
  Leader(std::string name, LeaderPlan plan, int memory, uint64_t seed,
         double punish_prob = 1.0);

  std::string name() const override { return name_; }
  double Weight(long) const override { return plan_.weight; }
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord&) override {}

  // True when some of the last K' opponent actions broke the plan.
  bool OpponentDeviated(const HistoryState& state) const;
  // The stationary policy (ignores the start-up amnesty).
  MixedStrategy ActionDistribution(const HistoryState& state) const;

  const LeaderPlan& plan() const { return plan_; }
  long punishment_steps() const { return punishment_steps_; }
  long steps_active() const { return steps_active_; }

 private:
  std::string name_;
  LeaderPlan plan_;
  int memory_;
  double punish_prob_;
  Rng rng_;
  Rng forgive_rng_;
  long steps_active_ = 0;
  long punishment_steps_ = 0;
};

std::unique_ptr<Leader> MakeEgalitarianLeader(const PlayerContext& ctx,
                                              uint64_t seed);
std::unique_ptr<Leader> MakeBullyLeader(const PlayerContext& ctx,
                                        uint64_t seed);

// (S * A * log(tau / delta))^(1/3) * tau^(2/3); the log is floored at zero.
double RqBound(long tau, double delta, double num_states, int num_actions);

// Dense tabular Q-values over HistoryState indices.
class QTable {
 public:
  QTable(long num_states, int num_actions, double init);

  double q(long s, int a) const { return q_[s * num_actions_ + a]; }
  long visits(long s, int a) const { return n_[s * num_actions_ + a]; }
  int num_actions() const { return num_actions_; }
  // Argmax with lowest-index ties.
  int Greedy(long s) const;
  double MaxQ(long s) const;
  // Q(s,a) += lr * (r + gamma * max Q(s') - Q(s,a)); counts the visit.
  void Update(long s, int a, double r, long s_next, double gamma, double lr);
  void CountVisit(long s, int a) { ++n_[s * num_actions_ + a]; }

 private:
  int num_actions_;
  std::vector<double> q_;
  std::vector<long> n_;
};

// Optimistic Q-learning: Q0 = 1/(1-gamma), lr = (H0+1)/(H0+n), greedy.
// Each update for (s, a, r) is applied once the next state is known.
class OptimisticQLearner {
 public:
  OptimisticQLearner(int n1, int n2, int memory, double gamma = 0.95,
                     double h0 = 10.0);

  int Act(const HistoryState& state);
  void Reward(double r);
  const QTable& table() const { return table_; }

 private:
  int n1_;
  int n2_;
  double gamma_;
  double h0_;
  QTable table_;
  long pending_state_ = -1;
  int pending_action_ = 0;
  double pending_reward_ = 0.0;
};

// Trip flag shared by all phi_F instances of one LAFF player.
struct SharedTrip {
  bool tripped = false;
};

class ConditionalFollower : public Agent {
 public:
  ConditionalFollower(std::shared_ptr<const PlayerContext> ctx,
                      std::shared_ptr<SharedTrip> trip, uint64_t seed);

  std::string name() const override { return "conditional_follower"; }
  double Weight(long t) const override;
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;

  bool delegating() const { return leader_ != nullptr; }
  // Right-hand side of the exploitation test after tau steps.
  double Threshold(long tau) const;
  const OptimisticQLearner& learner() const { return learner_; }

 private:
  std::shared_ptr<const PlayerContext> ctx_;
  std::shared_ptr<SharedTrip> trip_;
  uint64_t seed_;
  OptimisticQLearner learner_;
  std::unique_ptr<Leader> leader_;
  long tau_ = 0;
  double reward_sum_ = 0.0;
};

class ConditionalMaximin : public Agent {
 public:
  ConditionalMaximin(std::shared_ptr<const PlayerContext> ctx, uint64_t seed);

  std::string name() const override { return "conditional_maximin"; }
  double Weight(long t) const override;
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;

  bool tripped() const { return leader_ != nullptr; }
  // Right-hand side of the test after tau > K steps.
  double Threshold(long tau) const;

 private:
  std::shared_ptr<const PlayerContext> ctx_;
  uint64_t seed_;
  Rng rng_;
  std::unique_ptr<Leader> leader_;
  long tau_ = 0;
  double opp_sum_ = 0.0;
};

}  // namespace laff

#endif  // LAFF_CORE_EXPERTS_H_

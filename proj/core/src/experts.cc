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

#include "laff/experts.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace laff {
namespace {

// Row-player reward and row-seat coordinates of an own-seat joint action.
double RowReward(const PlayerContext& ctx, JointAction x) {
  return ctx.game.reward(
      ctx.seat == Seat::kRow ? Player::kOne : Player::kTwo, x.a1, x.a2);
}

JointAction RowSeatCoords(const PlayerContext& ctx, JointAction x) {
  return ctx.seat == Seat::kRow ? x : JointAction{x.a2, x.a1};
}

// True when `x` should be selected by signal bit 1 rather than `y`.
bool PrefersForBitOne(const PlayerContext& ctx, JointAction x, JointAction y) {
  const double rx = RowReward(ctx, x);
  const double ry = RowReward(ctx, y);
  if (rx != ry) return rx > ry;
  return RowSeatCoords(ctx, x) < RowSeatCoords(ctx, y);
}

constexpr uint64_t kLeaderStream = 0;
constexpr uint64_t kForgiveStream = 1;

}  // namespace

std::shared_ptr<const PlayerContext> MakePlayerContext(
    BimatrixGame own_game, Seat seat, const MatchConfig& config) {
  config.Validate();
  auto ctx = std::make_shared<PlayerContext>(PlayerContext{
      std::move(own_game), seat, config, {}, 1, 1});
  ctx->summary = Summarize(ctx->game, config.enforce());
  ctx->epoch_length = std::max<long>(
      1, static_cast<long>(std::floor(std::sqrt(static_cast<double>(
             config.horizon)))));
  ctx->subepoch_length = static_cast<long>(
      std::ceil(std::sqrt(static_cast<double>(ctx->epoch_length))));
  return ctx;
}

LeaderPlan MakeLeaderPlan(const PlayerContext& ctx, const PairSolution& sol,
                          int kp) {
  LeaderPlan plan;
  plan.solution = sol;
  plan.kp = kp;
  plan.punish = ctx.summary.punishment.strategy;
  plan.maximin = ctx.summary.security1.strategy;
  if (sol.IsFallback()) {
    plan.fallback = true;
    plan.kp = 0;
    return plan;
  }
  if (PrefersForBitOne(ctx, sol.xb, sol.xa) && !sol.IsSingle()) {
    plan.target = {sol.xa, sol.xb};
    plan.weight = 1.0 - sol.alpha;
  } else {
    plan.target = {sol.xb, sol.xa};
    plan.weight = sol.alpha;
  }
  return plan;
}

Leader::Leader(std::string name, LeaderPlan plan, int memory, uint64_t seed,
               double punish_prob)
    : name_(std::move(name)),
      plan_(std::move(plan)),
      memory_(memory),
      punish_prob_(punish_prob),
      rng_(DeriveSeed(seed, kLeaderStream)),
      forgive_rng_(DeriveSeed(seed, kForgiveStream)) {
  if (plan_.kp < 0 || plan_.kp > memory_) {
    throw std::invalid_argument("Leader: punishment length outside [0, K]");
  }
  if (!(punish_prob_ >= 0.0 && punish_prob_ <= 1.0)) {
    throw std::invalid_argument("Leader: punish probability outside [0, 1]");
  }
}

bool Leader::OpponentDeviated(const HistoryState& state) const {
  const int k = state.K();
  for (int back = 1; back <= plan_.kp; ++back) {
    const int y = state.y1()[k - back];
    if (state.a2()[k - back] != plan_.target[y].a2) return true;
  }
  return false;
}

int Leader::Act(const HistoryState& state, long /*t*/) {
  ++steps_active_;
  if (plan_.fallback) return rng_.Sample(plan_.maximin.probs);
  const int target = plan_.target[state.current_y1()].a1;
  if (steps_active_ <= plan_.kp || !OpponentDeviated(state)) return target;
  if (punish_prob_ < 1.0 && !forgive_rng_.Bernoulli(punish_prob_)) {
    return target;
  }
  ++punishment_steps_;
  return rng_.Sample(plan_.punish.probs);
}

MixedStrategy Leader::ActionDistribution(const HistoryState& state) const {
  if (plan_.fallback) return plan_.maximin;
  const int n = plan_.punish.size();
  const MixedStrategy target =
      MixedStrategy::Pure(n, plan_.target[state.current_y1()].a1);
  if (!OpponentDeviated(state)) return target;
  MixedStrategy mix = plan_.punish;
  for (int i = 0; i < n; ++i) {
    mix.probs[i] = punish_prob_ * plan_.punish.probs[i] +
                   (1.0 - punish_prob_) * target.probs[i];
  }
  return mix;
}

std::unique_ptr<Leader> MakeEgalitarianLeader(const PlayerContext& ctx,
                                              uint64_t seed) {
  return std::make_unique<Leader>(
      "egalitarian_leader",
      MakeLeaderPlan(ctx, ctx.summary.ebs, ctx.summary.kp_ebs), ctx.config.K,
      seed);
}

std::unique_ptr<Leader> MakeBullyLeader(const PlayerContext& ctx,
                                        uint64_t seed) {
  return std::make_unique<Leader>(
      "bully_leader",
      MakeLeaderPlan(ctx, ctx.summary.bully, ctx.summary.kp_bully),
      ctx.config.K, seed);
}

double RqBound(long tau, double delta, double num_states, int num_actions) {
  const double t = static_cast<double>(tau);
  const double log_term = std::max(0.0, std::log(t / delta));
  return std::cbrt(num_states * num_actions * log_term) * std::pow(t, 2.0 / 3);
}

QTable::QTable(long num_states, int num_actions, double init)
    : num_actions_(num_actions) {
  constexpr long kMaxEntries = 50'000'000;
  if (num_states <= 0 || num_actions <= 0 ||
      num_states > kMaxEntries / num_actions) {
    throw std::invalid_argument("QTable: state space too large for a table");
  }
  q_.assign(num_states * num_actions, init);
  n_.assign(num_states * num_actions, 0);
}

int QTable::Greedy(long s) const {
  const double* row = &q_[s * num_actions_];
  return static_cast<int>(std::max_element(row, row + num_actions_) - row);
}

double QTable::MaxQ(long s) const {
  const double* row = &q_[s * num_actions_];
  return *std::max_element(row, row + num_actions_);
}

void QTable::Update(long s, int a, double r, long s_next, double gamma,
                    double lr) {
  double& q = q_[s * num_actions_ + a];
  q += lr * (r + gamma * MaxQ(s_next) - q);
}

OptimisticQLearner::OptimisticQLearner(int n1, int n2, int memory,
                                       double gamma, double h0)
    : n1_(n1),
      n2_(n2),
      gamma_(gamma),
      h0_(h0),
      table_(HistoryState::NumStates(n1, n2, memory), n1,
             1.0 / (1.0 - gamma)) {}

int OptimisticQLearner::Act(const HistoryState& state) {
  const long s = state.Index(n1_, n2_);
  if (pending_state_ >= 0) {
    table_.CountVisit(pending_state_, pending_action_);
    const double n =
        static_cast<double>(table_.visits(pending_state_, pending_action_));
    table_.Update(pending_state_, pending_action_, pending_reward_, s, gamma_,
                  (h0_ + 1.0) / (h0_ + n));
  }
  pending_state_ = s;
  pending_action_ = table_.Greedy(s);
  pending_reward_ = 0.0;
  return pending_action_;
}

void OptimisticQLearner::Reward(double r) { pending_reward_ = r; }

ConditionalFollower::ConditionalFollower(
    std::shared_ptr<const PlayerContext> ctx, std::shared_ptr<SharedTrip> trip,
    uint64_t seed)
    : ctx_(std::move(ctx)),
      trip_(std::move(trip)),
      seed_(seed),
      learner_(ctx_->game.n1(), ctx_->game.n2(), ctx_->config.K) {}

double ConditionalFollower::Weight(long t) const {
  return leader_ ? leader_->Weight(t) : 0.0;
}

double ConditionalFollower::Threshold(long tau) const {
  const MatchConfig& c = ctx_->config;
  const double s = static_cast<double>(
      HistoryState::NumStates(ctx_->game.n1(), ctx_->game.n2(), c.K));
  const double rq =
      RqBound(tau, c.delta / static_cast<double>(c.horizon), s,
              ctx_->game.n1());
  return ctx_->summary.ebs.u1 - c.c4 * rq / static_cast<double>(tau);
}

int ConditionalFollower::Act(const HistoryState& state, long t) {
  if (!leader_ && trip_->tripped) leader_ = MakeEgalitarianLeader(*ctx_, seed_);
  if (leader_) return leader_->Act(state, t);
  return learner_.Act(state);
}

void ConditionalFollower::Observe(const StepRecord& record) {
  if (leader_) {
    leader_->Observe(record);
    return;
  }
  learner_.Reward(record.r1);
  ++tau_;
  reward_sum_ += record.r1;
  if (tau_ % ctx_->subepoch_length == 0 &&
      reward_sum_ / static_cast<double>(tau_) < Threshold(tau_)) {
    trip_->tripped = true;
  }
}

ConditionalMaximin::ConditionalMaximin(std::shared_ptr<const PlayerContext> ctx,
                                       uint64_t seed)
    : ctx_(std::move(ctx)), seed_(seed), rng_(DeriveSeed(seed, 7)) {}

double ConditionalMaximin::Weight(long t) const {
  return leader_ ? leader_->Weight(t) : 0.0;
}

double ConditionalMaximin::Threshold(long tau) const {
  const MatchConfig& c = ctx_->config;
  const double n = static_cast<double>(tau - c.K);
  return ctx_->summary.ebs.u2 - c.eta_m +
         std::sqrt(std::log(static_cast<double>(c.horizon) / c.delta) /
                   (2.0 * n));
}

int ConditionalMaximin::Act(const HistoryState& state, long t) {
  if (leader_) return leader_->Act(state, t);
  return rng_.Sample(ctx_->summary.security1.strategy.probs);
}

void ConditionalMaximin::Observe(const StepRecord& record) {
  if (leader_) {
    leader_->Observe(record);
    return;
  }
  ++tau_;
  if (tau_ > ctx_->config.K) opp_sum_ += record.r2;
  if (tau_ > ctx_->config.K && tau_ % ctx_->subepoch_length == 0 &&
      opp_sum_ / static_cast<double>(tau_ - ctx_->config.K) >
          Threshold(tau_)) {
    leader_ = MakeEgalitarianLeader(*ctx_, seed_);
  }
}

}  // namespace laff

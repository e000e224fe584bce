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

#include "laff/opponents.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "laff/laff.h"

namespace laff {

EpsGreedyQAgent::EpsGreedyQAgent(const BimatrixGame& own_game, int memory,
                                 uint64_t seed, double gamma)
    : n1_(own_game.n1()),
      n2_(own_game.n2()),
      gamma_(gamma),
      table_(HistoryState::NumStates(n1_, n2_, memory), n1_,
             1.0 / (1.0 - gamma)),
      rng_(seed) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("qlearning: gamma must lie in (0, 1)");
  }
}

int EpsGreedyQAgent::Act(const HistoryState& state, long /*t*/) {
  const long s = state.Index(n1_, n2_);
  if (pending_state_ >= 0) {
    table_.CountVisit(pending_state_, pending_action_);
    table_.Update(pending_state_, pending_action_, pending_reward_, s, gamma_,
                  LearningRate(steps_ - 1));
  }
  int a;
  if (rng_.Bernoulli(ExploreProbability(steps_))) {
    a = rng_.UniformInt(n1_);
  } else {
    a = table_.Greedy(s);
  }
  ++steps_;
  pending_state_ = s;
  pending_action_ = a;
  pending_reward_ = 0.0;
  return a;
}

void EpsGreedyQAgent::Observe(const StepRecord& record) {
  pending_reward_ = record.r1;
}

FictitiousPlayAgent::FictitiousPlayAgent(const BimatrixGame& own_game)
    : game_(own_game), counts_(own_game.n2(), 0) {}

int FictitiousPlayAgent::Act(const HistoryState&, long) {
  long total = 0;
  for (long c : counts_) total += c;
  int best = 0;
  double best_value = -1.0;
  for (int a = 0; a < game_.n1(); ++a) {
    double value = 0.0;
    for (int j = 0; j < game_.n2(); ++j) {
      const double weight = total == 0 ? 1.0 : static_cast<double>(counts_[j]);
      value += weight * game_.reward(Player::kOne, a, j);
    }
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }
  return best;
}

void FictitiousPlayAgent::Observe(const StepRecord& record) {
  ++counts_[record.a2];
}

ManipulatorAgent::ManipulatorAgent(std::shared_ptr<const PlayerContext> ctx,
                                   uint64_t seed, ManipulatorParams params)
    : ctx_(std::move(ctx)),
      params_(params),
      leader_(MakeBullyLeader(*ctx_, DeriveSeed(seed, 0))),
      learner_(ctx_->game, ctx_->config.K, DeriveSeed(seed, 1)),
      rng_(DeriveSeed(seed, 2)),
      window_(std::max<long>(1, ctx_->config.horizon / 20)) {
  opp_actions_.reserve(ctx_->config.horizon);
}

double ManipulatorAgent::Weight(long t) const {
  return current_ == Expert::kLeader ? leader_->Weight(t) : 0.0;
}

int ManipulatorAgent::Act(const HistoryState& state, long t) {
  overriding_ = phase_ == Phase::kLocked && lock_count_ > 0 &&
                lock_sum_ / static_cast<double>(lock_count_) <
                    ctx_->summary.security1.value - params_.eps_prime;
  if (overriding_) {
    ++override_steps_;
    learner_.DropPending();
    return rng_.Sample(ctx_->summary.security1.strategy.probs);
  }
  if (current_ == Expert::kLeader) return leader_->Act(state, t);
  return learner_.Act(state, t);
}

bool ManipulatorAgent::OpponentNonstationary() const {
  const long n = static_cast<long>(opp_actions_.size());
  if (n < 2 * window_) return false;
  std::vector<double> recent(ctx_->game.n2(), 0.0);
  std::vector<double> before(ctx_->game.n2(), 0.0);
  for (long i = n - window_; i < n; ++i) recent[opp_actions_[i]] += 1.0;
  for (long i = n - 2 * window_; i < n - window_; ++i) {
    before[opp_actions_[i]] += 1.0;
  }
  double tv = 0.0;
  for (int j = 0; j < ctx_->game.n2(); ++j) {
    tv += std::abs(recent[j] - before[j]);
  }
  tv *= 0.5 / static_cast<double>(window_);
  return tv > params_.tv_threshold;
}

ManipulatorAgent::Expert ManipulatorAgent::BestExpert() const {
  auto mean = [&](int e) {
    return expert_count_[e] == 0
               ? -1.0
               : expert_sum_[e] / static_cast<double>(expert_count_[e]);
  };
  return mean(1) > mean(0) ? Expert::kLearner : Expert::kLeader;
}

void ManipulatorAgent::Lock(Expert e) {
  if (e != current_ && e == Expert::kLearner) learner_.DropPending();
  phase_ = Phase::kLocked;
  current_ = e;
  lock_sum_ = 0.0;
  lock_count_ = 0;
}

void ManipulatorAgent::Observe(const StepRecord& record) {
  ++steps_;
  total_ += record.r1;
  opp_actions_.push_back(record.a2);
  if (!overriding_) {
    const int e = static_cast<int>(current_);
    expert_sum_[e] += record.r1;
    ++expert_count_[e];
    if (current_ == Expert::kLeader) {
      leader_->Observe(record);
    } else {
      learner_.Observe(record);
    }
  }
  if (phase_ == Phase::kLocked) {
    lock_sum_ += record.r1;
    ++lock_count_;
    return;
  }

  switch (phase_) {
    case Phase::kLead:
      if (steps_ >= window_) phase_ = Phase::kWatch;
      break;
    case Phase::kWatch:
      if (current_ == Expert::kLeader &&
          total_ / static_cast<double>(steps_) <
              ctx_->summary.bully.u1 - params_.eps_prime &&
          rng_.Bernoulli(params_.p_switch)) {
        current_ = Expert::kLearner;
      }
      if (steps_ >= 7 * window_) {
        if (OpponentNonstationary()) {
          Lock(BestExpert());
        } else {
          phase_ = Phase::kTestLearner;
          current_ = Expert::kLearner;
        }
      }
      break;
    case Phase::kTestLearner:
      if (steps_ >= 8 * window_) {
        Lock(OpponentNonstationary() ? BestExpert() : Expert::kLearner);
      }
      break;
    case Phase::kLocked:
      break;
  }
}

namespace {

void CheckParams(const AgentSpec& spec, std::set<std::string> allowed) {
  for (const auto& [key, value] : spec.params) {
    if (allowed.count(key) == 0) {
      throw std::invalid_argument("agent '" + spec.name +
                                  "' has no parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw std::invalid_argument("agent '" + spec.name + "' parameter '" +
                                  key + "' is not finite");
    }
  }
}

double Param(const AgentSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

int FixedAction(const AgentSpec& spec, int num_actions) {
  const double a = Param(spec, "action", 0.0);
  if (a != std::floor(a) || a < 0 || a >= num_actions) {
    throw std::invalid_argument("fixed: action must be an integer in [0, " +
                                std::to_string(num_actions) + ")");
  }
  return static_cast<int>(a);
}

double FtftProbability(const AgentSpec& spec) {
  const double p = Param(spec, "p", 0.2);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ftft: p must lie in [0, 1]");
  }
  return p;
}

}  // namespace

const std::vector<std::string>& AgentNames() {
  static const auto* names = new std::vector<std::string>{
      "laff",        "bully",   "egalitarian", "ftft", "qlearning",
      "fictitious_play", "manipulator", "maximin", "fixed"};
  return *names;
}

std::unique_ptr<Agent> MakeAgent(const AgentSpec& spec,
                                 const BimatrixGame& game, Seat seat,
                                 const MatchConfig& config, uint64_t seed) {
  BimatrixGame own = seat == Seat::kRow ? game : game.Swapped();
  const std::string& n = spec.name;
  if (n == "qlearning") {
    CheckParams(spec, {"gamma"});
    return std::make_unique<EpsGreedyQAgent>(own, config.K, seed,
                                             Param(spec, "gamma", 0.95));
  }
  if (n == "fictitious_play") {
    CheckParams(spec, {});
    return std::make_unique<FictitiousPlayAgent>(own);
  }
  if (n == "fixed") {
    CheckParams(spec, {"action"});
    return std::make_unique<FixedActionAgent>(FixedAction(spec, own.n1()));
  }
  if (n != "laff" && n != "bully" && n != "egalitarian" && n != "ftft" &&
      n != "manipulator" && n != "maximin") {
    throw std::invalid_argument("unknown agent '" + n + "'");
  }
  auto ctx = MakePlayerContext(std::move(own), seat, config);
  if (n == "laff") {
    CheckParams(spec, {});
    return std::make_unique<LaffAgent>(ctx, seed);
  }
  if (n == "bully") {
    CheckParams(spec, {});
    return MakeBullyLeader(*ctx, seed);
  }
  if (n == "egalitarian") {
    CheckParams(spec, {});
    return MakeEgalitarianLeader(*ctx, seed);
  }
  if (n == "ftft") {
    CheckParams(spec, {"p"});
    return std::make_unique<Leader>(
        "ftft", MakeLeaderPlan(*ctx, ctx->summary.ebs, ctx->summary.kp_ebs),
        config.K, seed, FtftProbability(spec));
  }
  if (n == "maximin") {
    CheckParams(spec, {});
    return std::make_unique<MaximinAgent>(ctx->summary.security1.strategy,
                                          seed);
  }
  CheckParams(spec, {"eps_prime", "p_switch", "tv_threshold"});
  ManipulatorParams mp;
  mp.eps_prime = Param(spec, "eps_prime", mp.eps_prime);
  mp.p_switch = Param(spec, "p_switch", mp.p_switch);
  mp.tv_threshold = Param(spec, "tv_threshold", mp.tv_threshold);
  return std::make_unique<ManipulatorAgent>(ctx, seed, mp);
}

std::optional<StationaryOpponent> MakeStationaryOpponent(
    const AgentSpec& spec, const BimatrixGame& game,
    const MatchConfig& config) {
  const std::string& n = spec.name;
  if (n == "fixed") {
    CheckParams(spec, {"action"});
    const int a = FixedAction(spec, game.n2());
    const int n2 = game.n2();
    return StationaryOpponent{
        [a, n2](const HistoryState&) { return MixedStrategy::Pure(n2, a); },
        0.0};
  }
  if (n != "bully" && n != "egalitarian" && n != "ftft" && n != "maximin") {
    return std::nullopt;
  }
  auto ctx = MakePlayerContext(game.Swapped(), Seat::kColumn, config);
  if (n == "maximin") {
    CheckParams(spec, {});
    MixedStrategy s = ctx->summary.security1.strategy;
    return StationaryOpponent{[s](const HistoryState&) { return s; }, 0.0};
  }
  std::shared_ptr<Leader> leader;
  if (n == "ftft") {
    CheckParams(spec, {"p"});
    leader = std::make_shared<Leader>(
        "ftft", MakeLeaderPlan(*ctx, ctx->summary.ebs, ctx->summary.kp_ebs),
        config.K, 0, FtftProbability(spec));
  } else {
    CheckParams(spec, {});
    leader = n == "bully" ? MakeBullyLeader(*ctx, 0)
                          : MakeEgalitarianLeader(*ctx, 0);
  }
  const double weight = leader->Weight(0);
  return StationaryOpponent{
      [leader](const HistoryState& row_view) {
        return leader->ActionDistribution(row_view.Swapped());
      },
      weight};
}

MatchTrace PlayMatch(const BimatrixGame& game, const AgentSpec& p1,
                     const AgentSpec& p2, const MatchConfig& config) {
  auto row = MakeAgent(p1, game, Seat::kRow, config, DeriveSeed(config.seed, 1));
  auto col =
      MakeAgent(p2, game, Seat::kColumn, config, DeriveSeed(config.seed, 2));
  return RunMatch(game, *row, *col, config);
}

}  // namespace laff

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

#include "laff/laff.h"

#include <algorithm>
#include <utility>

#include "laff/rng.h"

namespace laff {

std::string ToString(ExpertKind kind) {
  switch (kind) {
    case ExpertKind::kFollower:
      return "follower";
    case ExpertKind::kBully:
      return "bully";
    case ExpertKind::kEgalitarian:
      return "egalitarian";
    case ExpertKind::kMaximin:
      return "maximin";
  }
  return "unknown";
}

LaffAgent::LaffAgent(std::shared_ptr<const PlayerContext> ctx, uint64_t seed)
    : ctx_(std::move(ctx)),
      seed_(seed),
      trip_(std::make_shared<SharedTrip>()) {
  const BargainingSummary& s = ctx_->summary;
  targets_ = {s.bully.u1, s.bully.u1, s.ebs.u1, s.ebs.u1, s.security1.value};
  Activate(0);
}

void LaffAgent::Activate(int j) {
  j_ = j;
  tau_ = 0;
  reward_sum_ = 0.0;
  const uint64_t seed = DeriveSeed(seed_, static_cast<uint64_t>(j));
  switch (kSchedule[j]) {
    case ExpertKind::kFollower:
      expert_ = std::make_unique<ConditionalFollower>(ctx_, trip_, seed);
      break;
    case ExpertKind::kBully:
      expert_ = MakeBullyLeader(*ctx_, seed);
      break;
    case ExpertKind::kEgalitarian:
      expert_ = MakeEgalitarianLeader(*ctx_, seed);
      break;
    case ExpertKind::kMaximin:
      expert_ = std::make_unique<ConditionalMaximin>(ctx_, seed);
      break;
  }
}

double LaffAgent::Slack(long tau) const {
  const MatchConfig& c = ctx_->config;
  if (c.slack_mode == SlackMode::kPractical) {
    return PracticalSlack(tau, c.horizon, c.delta, c.slack);
  }
  const PairSolution& ebs = ctx_->summary.ebs;
  TheoreticalSlackParams p;
  p.horizon = c.horizon;
  p.delta = c.delta;
  p.kp = ctx_->summary.kp_ebs;
  p.xi = ebs.IsFallback() ? 1.0
                          : Xi(c.eps, ebs.deviation_profit, std::max(p.kp, 1));
  p.c1 = c.slack.c1;
  p.c2 = c.theory_c2;
  p.t0 = c.theory_t0;
  const double states = static_cast<double>(
      HistoryState::NumStates(ctx_->game.n1(), ctx_->game.n2(), c.K));
  const double rq = RqBound(tau, c.delta / static_cast<double>(c.horizon),
                            states, ctx_->game.n1());
  return TheoreticalSlack(tau, rq, p);
}

int LaffAgent::Act(const HistoryState& state, long t) {
  return expert_->Act(state, t);
}

void LaffAgent::Observe(const StepRecord& record) {
  expert_->Observe(record);
  ++tau_;
  reward_sum_ += record.r1;
  if (j_ + 1 < kNumExperts && tau_ % ctx_->epoch_length == 0 &&
      reward_sum_ / static_cast<double>(tau_) < targets_[j_] - Slack(tau_)) {
    switch_times_.push_back(record.t);
    Activate(j_ + 1);
  }
}

}  // namespace laff

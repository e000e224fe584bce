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

#include "laff/engine.h"

#include <algorithm>
#include <stdexcept>

#include "laff/rng.h"

namespace laff {

HistoryState::HistoryState(int k)
    : k_(k), a1_(k, 0), a2_(k, 0), y1_(k + 1, 0), y2_(k + 1, 0) {
  if (k < 1) throw std::invalid_argument("HistoryState: K must be >= 1");
}

void HistoryState::PushSignals(int y1, int y2) {
  std::rotate(y1_.begin(), y1_.begin() + 1, y1_.end());
  std::rotate(y2_.begin(), y2_.begin() + 1, y2_.end());
  y1_.back() = static_cast<uint8_t>(y1);
  y2_.back() = static_cast<uint8_t>(y2);
}

void HistoryState::PushActions(int a1, int a2) {
  std::rotate(a1_.begin(), a1_.begin() + 1, a1_.end());
  std::rotate(a2_.begin(), a2_.begin() + 1, a2_.end());
  a1_.back() = a1;
  a2_.back() = a2;
}

HistoryState HistoryState::Swapped() const {
  HistoryState s(*this);
  std::swap(s.a1_, s.a2_);
  std::swap(s.y1_, s.y2_);
  return s;
}

long HistoryState::NumStates(int n1, int n2, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<long>(n1) * n2;
  return count << (2 * k + 2);
}

long HistoryState::Index(int n1, int n2) const {
  long index = 0;
  for (int i = 0; i < k_; ++i) index = index * n1 + a1_[i];
  for (int i = 0; i < k_; ++i) index = index * n2 + a2_[i];
  for (int i = 0; i <= k_; ++i) index = (index << 1) | y1_[i];
  for (int i = 0; i <= k_; ++i) index = (index << 1) | y2_[i];
  return index;
}

HistoryState HistoryState::FromIndex(long index, int n1, int n2, int k) {
  HistoryState s(k);
  for (int i = k; i >= 0; --i) {
    s.y2_[i] = static_cast<uint8_t>(index & 1);
    index >>= 1;
  }
  for (int i = k; i >= 0; --i) {
    s.y1_[i] = static_cast<uint8_t>(index & 1);
    index >>= 1;
  }
  for (int i = k - 1; i >= 0; --i) {
    s.a2_[i] = static_cast<int>(index % n2);
    index /= n2;
  }
  for (int i = k - 1; i >= 0; --i) {
    s.a1_[i] = static_cast<int>(index % n1);
    index /= n1;
  }
  return s;
}

StepRecord StepRecord::Swapped() const {
  StepRecord r = *this;
  std::swap(r.a1, r.a2);
  std::swap(r.y1, r.y2);
  std::swap(r.r1, r.r2);
  return r;
}

void MatchConfig::Validate() const {
  if (horizon < 1) throw std::invalid_argument("horizon T must be >= 1");
  enforce().Validate();
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
}

double MatchTrace::MeanReward(Player p) const {
  if (steps.empty()) return 0.0;
  double total = 0.0;
  for (const StepRecord& s : steps) total += p == Player::kOne ? s.r1 : s.r2;
  return total / static_cast<double>(steps.size());
}

SignalPair DrawSignals(double x, double w1, double w2) {
  return {x < w1 ? 1 : 0, x < w2 ? 1 : 0};
}

namespace {

void CheckAction(const Agent& agent, int action, int limit, long t) {
  if (action < 0 || action >= limit) {
    throw std::runtime_error("agent '" + agent.name() + "' returned action " +
                             std::to_string(action) + " at step " +
                             std::to_string(t) + "; valid range is [0, " +
                             std::to_string(limit) + ")");
  }
}

}  // namespace

MatchTrace RunMatch(const BimatrixGame& game, Agent& row, Agent& column,
                    const MatchConfig& config) {
  config.Validate();
  Rng public_signal(DeriveSeed(config.seed, 0));

  HistoryState state(config.K);
  {
    const double w1 = row.Weight(0);
    const double w2 = column.Weight(0);
    for (int i = 0; i <= config.K; ++i) {
      const SignalPair y = DrawSignals(public_signal.Uniform(), w1, w2);
      state.PushSignals(y.y1, y.y2);
    }
  }

  MatchTrace trace;
  trace.steps.reserve(config.horizon);
  trace.expert1.reserve(config.horizon);
  trace.expert2.reserve(config.horizon);
  for (long t = 1; t <= config.horizon; ++t) {
    const double w1 = row.Weight(t);
    const double w2 = column.Weight(t);
    StepRecord rec;
    rec.t = t;
    rec.x = public_signal.Uniform();
    const SignalPair y = DrawSignals(rec.x, w1, w2);
    rec.y1 = y.y1;
    rec.y2 = y.y2;
    state.PushSignals(y.y1, y.y2);

    trace.expert1.push_back(row.ActiveExpert());
    trace.expert2.push_back(column.ActiveExpert());
    rec.a1 = row.Act(state, t);
    CheckAction(row, rec.a1, game.n1(), t);
    rec.a2 = column.Act(state.Swapped(), t);
    CheckAction(column, rec.a2, game.n2(), t);
    rec.r1 = game.reward(Player::kOne, rec.a1, rec.a2);
    rec.r2 = game.reward(Player::kTwo, rec.a1, rec.a2);

    row.Observe(rec);
    column.Observe(rec.Swapped());
    state.PushActions(rec.a1, rec.a2);
    trace.steps.push_back(rec);
  }
  return trace;
}

}  // namespace laff

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

// The LAFF controller. Experts are tried in the fixed order
//
//   phi_F, phi_B, phi_F, phi_E, phi_F, phi_M
//
// and expert j is abandoned for j + 1 when, after a whole epoch of H steps,
// its average reward since activation falls below target[j] - B(tau).
// phi_M is terminal.

#ifndef LAFF_CORE_LAFF_H_
#define LAFF_CORE_LAFF_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "laff/engine.h"
#include "laff/experts.h"

namespace laff {

enum class ExpertKind { kFollower, kBully, kEgalitarian, kMaximin };

std::string ToString(ExpertKind kind);

class LaffAgent : public Agent {
 public:
  static constexpr int kNumExperts = 6;
  static constexpr std::array<ExpertKind, kNumExperts> kSchedule = {
      ExpertKind::kFollower,    ExpertKind::kBully,
      ExpertKind::kFollower,    ExpertKind::kEgalitarian,
      ExpertKind::kFollower,    ExpertKind::kMaximin};

  LaffAgent(std::shared_ptr<const PlayerContext> ctx, uint64_t seed);

  std::string name() const override { return "laff"; }
  double Weight(long t) const override { return expert_->Weight(t); }
  int Act(const HistoryState& state, long t) override;
  void Observe(const StepRecord& record) override;
  int ActiveExpert() const override { return j_; }

  const std::array<double, kNumExperts - 1>& targets() const {
    return targets_;
  }
  long epoch_length() const { return ctx_->epoch_length; }
  // Slack B(tau) in the configured mode.
  double Slack(long tau) const;
  // Steps (1-based match time) at which a switch happened.
  const std::vector<long>& switch_times() const { return switch_times_; }
  bool follower_tripped() const { return trip_->tripped; }
  const Agent& expert() const { return *expert_; }

 private:
  void Activate(int j);

  std::shared_ptr<const PlayerContext> ctx_;
  uint64_t seed_;
  std::shared_ptr<SharedTrip> trip_;
  std::array<double, kNumExperts - 1> targets_;
  std::unique_ptr<Agent> expert_;
  int j_ = 0;
  long tau_ = 0;
  double reward_sum_ = 0.0;
  std::vector<long> switch_times_;
};

}  // namespace laff

#endif  // LAFF_CORE_LAFF_H_

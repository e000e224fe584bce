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

// Repeated-game runner. Each step:
//   1. both agents report a weight w_i in [0, 1];
//   2. one public uniform X is drawn and y_i = [X < w_i];
//   3. both agents act on the memory-K state, which holds the last K joint
//      actions and the last K plus current signal bits of each player;
//   4. rewards are paid and both agents observe the step.
// Agents always see the game from their own seat: the column player is
// handed the swapped game, swapped states and swapped records, so every
// algorithm is written as "player 1".

#ifndef LAFF_CORE_ENGINE_H_
#define LAFF_CORE_ENGINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "laff/bargaining.h"
#include "laff/matrix_game.h"

namespace laff {

enum class Seat { kRow, kColumn };

// Memory-K state. Histories are stored oldest first.
class HistoryState {
 public:
  explicit HistoryState(int k);

  int K() const { return k_; }
  const std::vector<int>& a1() const { return a1_; }
  const std::vector<int>& a2() const { return a2_; }
  const std::vector<uint8_t>& y1() const { return y1_; }
  const std::vector<uint8_t>& y2() const { return y2_; }

  // Current signal bits (the newest entries).
  int current_y1() const { return y1_.back(); }
  int current_y2() const { return y2_.back(); }

  void PushSignals(int y1, int y2);
  void PushActions(int a1, int a2);

  HistoryState Swapped() const;

  // Dense index in [0, NumStates(n1, n2, K)).
  long Index(int n1, int n2) const;
  static long NumStates(int n1, int n2, int k);
  static HistoryState FromIndex(long index, int n1, int n2, int k);

  bool operator==(const HistoryState&) const = default;

 private:
  int k_;
  std::vector<int> a1_;
  std::vector<int> a2_;
  std::vector<uint8_t> y1_;
  std::vector<uint8_t> y2_;
};

struct StepRecord {
  long t = 0;
  int a1 = 0;
  int a2 = 0;
  int y1 = 0;
  int y2 = 0;
  double x = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;

  StepRecord Swapped() const;
};

enum class SlackMode { kPractical, kTheoretical };

struct MatchConfig {
  long horizon = 20000;  // T
  int K = 1;
  double eps = 0.05;
  double delta = 0.05;
  uint64_t seed = 0;
  SlackTuning slack;
  double c4 = 0.005;     // scales the Q-learning regret bound in expert tests
  double eta_m = 0.05;   // maximin exploitation-test margin
  SlackMode slack_mode = SlackMode::kPractical;
  // Only used with SlackMode::kTheoretical.
  double theory_c2 = 1.0;
  double theory_t0 = 0.0;

  EnforceParams enforce() const { return {K, eps}; }
  // Throws std::invalid_argument unless T >= 1, K >= 1, eps > 0 and
  // 0 < delta < 1.
  void Validate() const;
};

// The interface shared by LAFF, its experts and every opponent. Agents see
// the game from their own seat.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  // Signal weight for step t; requested once per step before acting.
  virtual double Weight(long t) const = 0;
  virtual int Act(const HistoryState& state, long t) = 0;
  virtual void Observe(const StepRecord& record) = 0;
  // Active sub-algorithm index for diagnostics, or -1.
  virtual int ActiveExpert() const { return -1; }
};

struct MatchTrace {
  std::vector<StepRecord> steps;
  std::vector<int> expert1;
  std::vector<int> expert2;

  double MeanReward(Player p) const;
};

// Draws both signal bits from one public uniform x.
struct SignalPair {
  int y1;
  int y2;
};
SignalPair DrawSignals(double x, double w1, double w2);

// Plays `config.horizon` steps. `row` must have been built for `game` and
// `column` for `game.Swapped()`. Identical seeds give identical traces.
// Throws std::runtime_error if an agent returns an out-of-range action.
MatchTrace RunMatch(const BimatrixGame& game, Agent& row, Agent& column,
                    const MatchConfig& config);

}  // namespace laff

#endif  // LAFF_CORE_ENGINE_H_

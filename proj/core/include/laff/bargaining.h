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

// Enforceable bargaining solutions for a leader (player 1) who can punish
// player 2 for K steps at player 2's security value.
//
// A reward pair u is eps-enforceable for memory K when
//
//   K * u2 >= K * muS2 + r(X) + eps,
//
// where X is the set of joint actions mixed to obtain u and r(X) is the best
// one-shot gain player 2 can get by deviating from any of them. Optima of
// monotone objectives over the enforceable region are attained by mixing at
// most two joint actions, so the solvers below search all joint-action pairs
// and optimize the mixing weight in closed form.

#ifndef LAFF_CORE_BARGAINING_H_
#define LAFF_CORE_BARGAINING_H_

#include <optional>
#include <span>
#include <string>

#include "laff/matrix_game.h"

namespace laff {

struct JointAction {
  int a1 = 0;
  int a2 = 0;

  auto operator<=>(const JointAction&) const = default;
};

enum class SolutionKind { kEbs, kBully, kSecurityFallback };

std::string ToString(SolutionKind kind);

// Mix of two joint actions: xa with probability alpha, xb otherwise. A single
// joint action is stored with xa == xb and alpha == 1.
struct PairSolution {
  JointAction xa;
  JointAction xb;
  double alpha = 1.0;
  double u1 = 0.0;
  double u2 = 0.0;
  // r({xa, xb}); zero for the fallback.
  double deviation_profit = 0.0;
  SolutionKind kind = SolutionKind::kSecurityFallback;

  bool IsFallback() const { return kind == SolutionKind::kSecurityFallback; }
  bool IsSingle() const { return xa == xb; }
};

struct EnforceParams {
  int K = 1;
  double eps = 0.05;

  // Throws std::invalid_argument unless K >= 1 and eps > 0.
  void Validate() const;
};

// Player 2's deviation profit r(X). Returns -infinity when player 2 has a
// single action. Throws std::invalid_argument for an empty set.
double DeviationProfit(const BimatrixGame& game,
                       std::span<const JointAction> actions);

// Lower bound on the weight of `xa` imposed by eps-enforceability of a mix
// of xa and xb. Requires R2(xa) >= R2(xb) (throws otherwise). When the two
// rewards coincide the weight is unconstrained: returns 0 if the pair is
// enforceable and nullopt if it is not. Values above one mean infeasible.
std::optional<double> AlphaLowerBound(const BimatrixGame& game, JointAction xa,
                                      JointAction xb, const EnforceParams& ep,
                                      double mu_s2);

// True when `sol` is eps-enforceable and gives both players at least their
// security values, each within `tol`.
bool IsEnforceable(const BimatrixGame& game, const PairSolution& sol,
                   const EnforceParams& ep, double mu_s1, double mu_s2,
                   double tol = 1e-9);

// The eps-enforceable egalitarian bargaining solution: maximizes
// min_i(u_i - muS_i). Falls back to the security values when no enforceable
// pair exists. Ties prefer higher u1, then the lexicographically first pair.
PairSolution EnforceableEbs(const BimatrixGame& game, const EnforceParams& ep);

// The eps-enforceable solution maximizing u1. Ties prefer higher u2, then the
// lexicographically first pair.
PairSolution BullySolution(const BimatrixGame& game, const EnforceParams& ep);

// Shortest punishment K' <= K that still enforces `sol`. Zero for the
// fallback. Throws std::invalid_argument if `sol` cannot be enforced.
int PunishmentLength(const PairSolution& sol, const EnforceParams& ep,
                     double mu_s2);

// Per-step margin xi(eps, r) by which a deviation followed by K' punishment
// steps loses against compliance. Requires kp >= 1 when r > -eps.
double Xi(double eps, double r, int kp);

// Constants of the practical slack; defaults are the tuned values.
struct SlackTuning {
  double c1 = 0.05;
  double c3 = 0.005;
};

// Practical switch-test slack B(tau) = C1/tau + C3*sqrt(log(T/delta)/(2 tau)).
double PracticalSlack(long tau, long horizon, double delta,
                      const SlackTuning& tuning = {});

// Inputs of the slack used by the regret analysis. These involve quantities
// a player cannot know in practice (burn-in T0, follower constant C2), so this
// form is for experimentation only.
struct TheoreticalSlackParams {
  long horizon = 1;
  double delta = 0.05;
  double xi = 1.0;
  int kp = 0;
  double c1 = 1.0;
  double c2 = 1.0;
  double t0 = 0.0;
};

// B(tau) from the analysis; `rq` is the Q-learning regret bound evaluated at
// (tau, delta / T).
double TheoreticalSlack(long tau, double rq, const TheoreticalSlackParams& p);

// Everything a player-1 leader needs: security values and both solutions.
struct BargainingSummary {
  ZeroSumSolution security1;
  ZeroSumSolution security2;
  ZeroSumSolution punishment;
  PairSolution ebs;
  PairSolution bully;
  int kp_ebs = 0;
  int kp_bully = 0;
};

BargainingSummary Summarize(const BimatrixGame& game, const EnforceParams& ep);

}  // namespace laff

#endif  // LAFF_CORE_BARGAINING_H_

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

#include "laff/bargaining.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace laff {
namespace {

constexpr double kTol = 1e-12;

double R(const BimatrixGame& g, Player p, JointAction x) {
  return g.reward(p, x.a1, x.a2);
}

// Closed interval of admissible mixing weights.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  // Intersects with {alpha : slope * alpha >= rhs}. Returns false if empty.
  bool Require(double slope, double rhs) {
    if (slope > kTol) {
      lo = std::max(lo, rhs / slope);
    } else if (slope < -kTol) {
      hi = std::min(hi, rhs / slope);
    } else if (rhs > kTol) {
      return false;
    }
    return lo <= hi + kTol;
  }
};

enum class Objective { kEgalitarian, kSelfish };

struct Candidate {
  JointAction xa;
  JointAction xb;
  double alpha;
};

// Best weight for one oriented pair (R2(xa) >= R2(xb)), or nullopt if no
// weight is enforceable and individually rational.
std::optional<double> OptimizePair(const BimatrixGame& game, JointAction xa,
                                   JointAction xb, const EnforceParams& ep,
                                   double mu_s1, double mu_s2,
                                   Objective objective) {
  const double r1a = R(game, Player::kOne, xa);
  const double r1b = R(game, Player::kOne, xb);
  const double r2a = R(game, Player::kTwo, xa);
  const double r2b = R(game, Player::kTwo, xb);

  Interval range;
  const std::optional<double> bound = AlphaLowerBound(game, xa, xb, ep, mu_s2);
  if (!bound.has_value()) return std::nullopt;
  range.lo = std::max(range.lo, *bound);
  if (range.lo > range.hi + kTol) return std::nullopt;
  // Individual rationality: u_i >= muS_i.
  if (!range.Require(r1a - r1b, mu_s1 - r1b)) return std::nullopt;
  if (!range.Require(r2a - r2b, mu_s2 - r2b)) return std::nullopt;
  range.hi = std::max(range.hi, range.lo);

  if (xa == xb) return 1.0;

  if (objective == Objective::kSelfish) {
    if (r1a > r1b) return range.hi;
    if (r1a < r1b) return range.lo;
    return r2a > r2b ? range.hi : range.lo;
  }

  // Both gains rise toward xa: the min is nondecreasing in alpha.
  if (r1a >= r1b && r2a >= r2b) return range.hi;
  // Otherwise the two gains cross at `a`; the concave min peaks there.
  const double denom = (r1a - r1b) - (r2a - r2b);
  if (std::abs(denom) <= kTol) return range.lo;
  const double a = ((r2b - mu_s2) - (r1b - mu_s1)) / denom;
  return std::clamp(a, range.lo, range.hi);
}

PairSolution MakeSolution(const BimatrixGame& game, Candidate c,
                          SolutionKind kind) {
  // Collapse degenerate mixes to the joint action actually played.
  if (c.alpha >= 1.0 - kTol) {
    c.xb = c.xa;
    c.alpha = 1.0;
  } else if (c.alpha <= kTol) {
    c.xa = c.xb;
    c.alpha = 1.0;
  }
  PairSolution sol;
  sol.xa = c.xa;
  sol.xb = c.xb;
  sol.alpha = c.alpha;
  sol.u1 = c.alpha * R(game, Player::kOne, c.xa) +
           (1.0 - c.alpha) * R(game, Player::kOne, c.xb);
  sol.u2 = c.alpha * R(game, Player::kTwo, c.xa) +
           (1.0 - c.alpha) * R(game, Player::kTwo, c.xb);
  const std::array<JointAction, 2> support{c.xa, c.xb};
  sol.deviation_profit =
      DeviationProfit(game, std::span<const JointAction>(
                                support.data(), sol.IsSingle() ? 1 : 2));
  sol.kind = kind;
  return sol;
}

PairSolution SearchPairs(const BimatrixGame& game, const EnforceParams& ep,
                         Objective objective) {
  ep.Validate();
  const double mu_s1 = SecurityValue(game, Player::kOne).value;
  const double mu_s2 = SecurityValue(game, Player::kTwo).value;

  std::vector<JointAction> joint;
  for (int i = 0; i < game.n1(); ++i) {
    for (int j = 0; j < game.n2(); ++j) joint.push_back({i, j});
  }

  std::optional<Candidate> best;
  double best_score = -std::numeric_limits<double>::infinity();
  double best_u1 = 0.0;
  double best_u2 = 0.0;
  for (const JointAction& first : joint) {
    for (const JointAction& second : joint) {
      JointAction xa = first;
      JointAction xb = second;
      if (R(game, Player::kTwo, xa) < R(game, Player::kTwo, xb)) {
        std::swap(xa, xb);
      }
      const std::optional<double> alpha =
          OptimizePair(game, xa, xb, ep, mu_s1, mu_s2, objective);
      if (!alpha.has_value()) continue;
      const double u1 = *alpha * R(game, Player::kOne, xa) +
                        (1.0 - *alpha) * R(game, Player::kOne, xb);
      const double u2 = *alpha * R(game, Player::kTwo, xa) +
                        (1.0 - *alpha) * R(game, Player::kTwo, xb);
      const double score = objective == Objective::kEgalitarian
                               ? std::min(u1 - mu_s1, u2 - mu_s2)
                               : u1;
      const double secondary = objective == Objective::kEgalitarian ? u1 : u2;
      const double best_secondary =
          objective == Objective::kEgalitarian ? best_u1 : best_u2;
      bool better = false;
      if (!best.has_value() || score > best_score + kTol) {
        better = true;
      } else if (score >= best_score - kTol &&
                 secondary > best_secondary + kTol) {
        better = true;
      }
      if (better) {
        best = Candidate{xa, xb, *alpha};
        best_score = score;
        best_u1 = u1;
        best_u2 = u2;
      }
    }
  }

  if (!best.has_value()) {
    PairSolution fallback;
    fallback.u1 = mu_s1;
    fallback.u2 = mu_s2;
    fallback.kind = SolutionKind::kSecurityFallback;
    return fallback;
  }
  return MakeSolution(game, *best,
                      objective == Objective::kEgalitarian
                          ? SolutionKind::kEbs
                          : SolutionKind::kBully);
}

}  // namespace

std::string ToString(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::kEbs:
      return "EBS";
    case SolutionKind::kBully:
      return "Bully";
    case SolutionKind::kSecurityFallback:
      return "SecurityFallback";
  }
  return "unknown";
}

void EnforceParams::Validate() const {
  if (K < 1) throw std::invalid_argument("memory length K must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
}

double DeviationProfit(const BimatrixGame& game,
                       std::span<const JointAction> actions) {
  if (actions.empty()) {
    throw std::invalid_argument("DeviationProfit: empty joint-action set");
  }
  double profit = -std::numeric_limits<double>::infinity();
  for (const JointAction& x : actions) {
    const double base = game.reward(Player::kTwo, x.a1, x.a2);
    for (int j = 0; j < game.n2(); ++j) {
      if (j == x.a2) continue;
      profit = std::max(profit, game.reward(Player::kTwo, x.a1, j) - base);
    }
  }
  return profit;
}

std::optional<double> AlphaLowerBound(const BimatrixGame& game, JointAction xa,
                                      JointAction xb, const EnforceParams& ep,
                                      double mu_s2) {
  const double r2a = R(game, Player::kTwo, xa);
  const double r2b = R(game, Player::kTwo, xb);
  if (r2a < r2b) {
    throw std::invalid_argument("AlphaLowerBound: requires R2(xa) >= R2(xb)");
  }
  const std::array<JointAction, 2> support{xa, xb};
  const double r = DeviationProfit(game, support);
  const double k = static_cast<double>(ep.K);
  if (r2a > r2b) {
    return (r + ep.eps + k * (mu_s2 - r2b)) / (k * (r2a - r2b));
  }
  if (k * r2a >= k * mu_s2 + r + ep.eps - kTol) return 0.0;
  return std::nullopt;
}

bool IsEnforceable(const BimatrixGame& game, const PairSolution& sol,
                   const EnforceParams& ep, double mu_s1, double mu_s2,
                   double tol) {
  if (sol.u1 < mu_s1 - tol || sol.u2 < mu_s2 - tol) return false;
  const std::array<JointAction, 2> support{sol.xa, sol.xb};
  const double r = DeviationProfit(
      game, std::span<const JointAction>(support.data(), sol.IsSingle() ? 1 : 2));
  const double k = static_cast<double>(ep.K);
  return k * sol.u2 >= k * mu_s2 + r + ep.eps - tol;
}

PairSolution EnforceableEbs(const BimatrixGame& game, const EnforceParams& ep) {
  return SearchPairs(game, ep, Objective::kEgalitarian);
}

PairSolution BullySolution(const BimatrixGame& game, const EnforceParams& ep) {
  return SearchPairs(game, ep, Objective::kSelfish);
}

int PunishmentLength(const PairSolution& sol, const EnforceParams& ep,
                     double mu_s2) {
  if (sol.IsFallback()) return 0;
  const double need = sol.deviation_profit + ep.eps;
  if (need <= 0.0) return 0;
  const double margin = sol.u2 - mu_s2;
  if (margin <= 0.0) {
    throw std::invalid_argument(
        "PunishmentLength: deviation is profitable and punishment gains "
        "nothing; solution is not enforceable");
  }
  const double ratio = need / margin;
  if (ratio > ep.K + 1e-7) {
    throw std::invalid_argument(
        "PunishmentLength: solution needs more than K punishment steps");
  }
  const int steps = static_cast<int>(std::ceil(ratio - 1e-9));
  return std::clamp(steps, 0, ep.K);
}

double Xi(double eps, double r, int kp) {
  if (r <= -eps) return -r;
  if (kp < 1) throw std::invalid_argument("Xi: K' must be >= 1 when r > -eps");
  if (r >= 0.0) return eps / (2.0 * kp);
  return (eps + r) / (2.0 * kp);
}

double PracticalSlack(long tau, long horizon, double delta,
                      const SlackTuning& tuning) {
  if (tau < 1) throw std::invalid_argument("PracticalSlack: tau must be >= 1");
  const double t = static_cast<double>(tau);
  return tuning.c1 / t +
         tuning.c3 * std::sqrt(std::log(static_cast<double>(horizon) / delta) /
                               (2.0 * t));
}

double TheoreticalSlack(long tau, double rq, const TheoreticalSlackParams& p) {
  if (tau < 1) {
    throw std::invalid_argument("TheoreticalSlack: tau must be >= 1");
  }
  const double t = static_cast<double>(tau);
  const double kp = static_cast<double>(p.kp);
  const double log_term =
      std::sqrt(t * std::log(static_cast<double>(p.horizon) / p.delta) / 2.0);
  return (kp * p.xi + p.c1 * p.t0 + kp + 1.0) / (t * p.xi) +
         (p.c2 * rq + (3.0 + p.xi) * log_term) / (t * p.xi);
}

BargainingSummary Summarize(const BimatrixGame& game, const EnforceParams& ep) {
  BargainingSummary s;
  s.security1 = SecurityValue(game, Player::kOne);
  s.security2 = SecurityValue(game, Player::kTwo);
  s.punishment = PunishmentStrategy(game);
  s.ebs = EnforceableEbs(game, ep);
  s.bully = BullySolution(game, ep);
  s.kp_ebs = PunishmentLength(s.ebs, ep, s.security2.value);
  s.kp_bully = PunishmentLength(s.bully, ep, s.security2.value);
  return s;
}

}  // namespace laff

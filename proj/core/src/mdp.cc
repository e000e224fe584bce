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

#include "laff/mdp.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace laff {
namespace {

constexpr int kSignalY1[4] = {1, 1, 0, 0};
constexpr int kSignalY2[4] = {1, 0, 1, 0};

class StateRegistry {
 public:
  StateRegistry(InducedMdp& mdp, int n1, int n2) : mdp_(mdp), n1_(n1), n2_(n2) {}

  int Intern(const HistoryState& s) {
    const long key = s.Index(n1_, n2_);
    auto [it, inserted] = ids_.try_emplace(key, mdp_.num_states());
    if (inserted) {
      mdp_.states.push_back(s);
      pending_.push_back(it->second);
    }
    return it->second;
  }

  bool Next(int* id) {
    if (pending_.empty()) return false;
    *id = pending_.front();
    pending_.pop_front();
    return true;
  }

 private:
  InducedMdp& mdp_;
  int n1_;
  int n2_;
  std::unordered_map<long, int> ids_;
  std::deque<int> pending_;
};

double Span(const std::vector<double>& d, double* lo, double* hi) {
  *lo = *std::min_element(d.begin(), d.end());
  *hi = *std::max_element(d.begin(), d.end());
  return *hi - *lo;
}

}  // namespace

std::vector<double> JointSignalProbabilities(double w1, double w2) {
  return {std::min(w1, w2), std::max(0.0, w1 - w2), std::max(0.0, w2 - w1),
          1.0 - std::max(w1, w2)};
}

InducedMdp InduceMdp(const BimatrixGame& game, const OpponentPolicy& opp_policy,
                     double w1, double w2, int k) {
  if (!(w1 >= 0.0 && w1 <= 1.0 && w2 >= 0.0 && w2 <= 1.0)) {
    throw std::invalid_argument("InduceMdp: weights must lie in [0, 1]");
  }
  const int n1 = game.n1();
  const int n2 = game.n2();
  const std::vector<double> q = JointSignalProbabilities(w1, w2);

  InducedMdp mdp;
  mdp.num_actions = n1;
  StateRegistry registry(mdp, n1, n2);

  // Start states: zero actions, K + 1 independent signal draws.
  std::map<int, double> start;
  const int combos = 1 << (2 * (k + 1));
  for (int code = 0; code < combos; ++code) {
    HistoryState s(k);
    double p = 1.0;
    for (int i = 0; i <= k; ++i) {
      const int outcome = (code >> (2 * i)) & 3;
      p *= q[outcome];
      s.PushSignals(kSignalY1[outcome], kSignalY2[outcome]);
    }
    if (p > 0.0) start[registry.Intern(s)] += p;
  }

  int id;
  while (registry.Next(&id)) {
    const HistoryState s = mdp.states[id];
    const MixedStrategy opp = opp_policy(s);
    if (opp.size() != n2 || !opp.IsValid(1e-9)) {
      throw std::invalid_argument("InduceMdp: opponent policy is not a valid "
                                  "distribution over its actions");
    }
    std::vector<std::vector<Transition>> rows(n1);
    std::vector<double> r1(n1, 0.0);
    std::vector<double> r2(n1, 0.0);
    for (int a = 0; a < n1; ++a) {
      std::map<int, double> next;
      for (int b = 0; b < n2; ++b) {
        const double pb = opp.probs[b];
        if (pb <= 0.0) continue;
        r1[a] += pb * game.reward(Player::kOne, a, b);
        r2[a] += pb * game.reward(Player::kTwo, a, b);
        for (int o = 0; o < 4; ++o) {
          if (q[o] <= 0.0) continue;
          HistoryState t = s;
          t.PushActions(a, b);
          t.PushSignals(kSignalY1[o], kSignalY2[o]);
          next[registry.Intern(t)] += pb * q[o];
        }
      }
      for (const auto& [to, p] : next) rows[a].push_back({to, p});
    }
    if (static_cast<int>(mdp.transitions.size()) <= id) {
      mdp.transitions.resize(id + 1);
      mdp.reward1.resize(id + 1);
      mdp.reward2.resize(id + 1);
    }
    mdp.transitions[id] = std::move(rows);
    mdp.reward1[id] = std::move(r1);
    mdp.reward2[id] = std::move(r2);
  }
  mdp.initial.assign(mdp.num_states(), 0.0);
  for (const auto& [s, p] : start) mdp.initial[s] = p;
  return mdp;
}

OptimalGain OptimalAverageReward(const InducedMdp& mdp, double tol,
                                 long max_sweeps) {
  const int n = mdp.num_states();
  if (n == 0) throw std::invalid_argument("OptimalAverageReward: empty MDP");
  std::vector<double> v(n, 0.0);
  std::vector<double> w(n, 0.0);
  std::vector<double> d(n, 0.0);
  std::vector<double> d_prev(n, 0.0);
  std::vector<int> policy(n, 0);
  int anchor = 0;
  for (int s = 0; s < n; ++s) {
    if (mdp.initial[s] > 0.0) {
      anchor = s;
      break;
    }
  }

  for (long sweep = 1; sweep <= max_sweeps; ++sweep) {
    for (int s = 0; s < n; ++s) {
      double best = -INFINITY;
      int best_a = 0;
      for (int a = 0; a < mdp.num_actions; ++a) {
        double ev = 0.0;
        for (const Transition& tr : mdp.transitions[s][a]) {
          ev += tr.prob * v[tr.next];
        }
        const double value = mdp.reward1[s][a] + 0.5 * v[s] + 0.5 * ev;
        if (value > best + 1e-12) {
          best = value;
          best_a = a;
        }
      }
      w[s] = best;
      policy[s] = best_a;
    }
    double lo, hi;
    for (int s = 0; s < n; ++s) d[s] = w[s] - v[s];
    if (Span(d, &lo, &hi) < tol) {
      return {0.5 * (lo + hi), policy, sweep};
    }
    if (sweep > 1) {
      double change = 0.0;
      for (int s = 0; s < n; ++s) {
        change = std::max(change, std::abs(d[s] - d_prev[s]));
      }
      if (change < tol * 1e-3) {
        double gain = 0.0;
        for (int s = 0; s < n; ++s) gain += mdp.initial[s] * d[s];
        return {gain, policy, sweep};
      }
    }
    d_prev = d;
    const double shift = w[anchor];
    for (int s = 0; s < n; ++s) v[s] = w[s] - shift;
  }
  throw std::runtime_error("OptimalAverageReward: no convergence after " +
                           std::to_string(max_sweeps) + " sweeps");
}

PolicyGain PolicyAverageReward(const InducedMdp& mdp,
                               const std::vector<MixedStrategy>& policy,
                               double tol, long max_iterations) {
  const int n = mdp.num_states();
  if (static_cast<int>(policy.size()) != n) {
    throw std::invalid_argument("PolicyAverageReward: policy size mismatch");
  }
  std::vector<double> d = mdp.initial;
  std::vector<double> next(n, 0.0);
  for (long it = 0; it < max_iterations; ++it) {
    for (int s = 0; s < n; ++s) next[s] = 0.5 * d[s];
    for (int s = 0; s < n; ++s) {
      if (d[s] == 0.0) continue;
      for (int a = 0; a < mdp.num_actions; ++a) {
        const double pa = policy[s].probs[a];
        if (pa <= 0.0) continue;
        for (const Transition& tr : mdp.transitions[s][a]) {
          next[tr.next] += 0.5 * d[s] * pa * tr.prob;
        }
      }
    }
    double change = 0.0;
    for (int s = 0; s < n; ++s) change += std::abs(next[s] - d[s]);
    d.swap(next);
    if (change < tol) break;
  }
  PolicyGain g;
  for (int s = 0; s < n; ++s) {
    for (int a = 0; a < mdp.num_actions; ++a) {
      g.player1 += d[s] * policy[s].probs[a] * mdp.reward1[s][a];
      g.player2 += d[s] * policy[s].probs[a] * mdp.reward2[s][a];
    }
  }
  return g;
}

PolicyGain PolicyAverageReward(const InducedMdp& mdp,
                               const std::vector<int>& policy) {
  std::vector<MixedStrategy> mixed;
  mixed.reserve(policy.size());
  for (int a : policy) mixed.push_back(MixedStrategy::Pure(mdp.num_actions, a));
  return PolicyAverageReward(mdp, mixed);
}

}  // namespace laff

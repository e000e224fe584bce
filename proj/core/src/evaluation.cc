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

#include "laff/evaluation.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "laff/bargaining.h"
#include "laff/mdp.h"

namespace laff {

std::string ToString(OpponentClass c) {
  switch (c) {
    case OpponentClass::kBoundedMemory:
      return "bounded_memory";
    case OpponentClass::kAdversarial:
      return "adversarial";
    case OpponentClass::kFollowerConditional:
      return "follower_conditional";
    case OpponentClass::kFollowerUnconditional:
      return "follower_unconditional";
  }
  return "unknown";
}

OpponentClass OpponentClassFromString(const std::string& s) {
  for (OpponentClass c :
       {OpponentClass::kBoundedMemory, OpponentClass::kAdversarial,
        OpponentClass::kFollowerConditional,
        OpponentClass::kFollowerUnconditional}) {
    if (ToString(c) == s) return c;
  }
  throw std::invalid_argument("unknown opponent class '" + s + "'");
}

double BenchmarkFor(const BimatrixGame& game, OpponentClass c,
                    const MatchConfig& config,
                    const std::optional<StationaryOpponent>& opponent) {
  switch (c) {
    case OpponentClass::kAdversarial:
      return SecurityValue(game, Player::kOne).value;
    case OpponentClass::kFollowerConditional:
      return EnforceableEbs(game, config.enforce()).u1;
    case OpponentClass::kFollowerUnconditional:
      return BullySolution(game, config.enforce()).u1;
    case OpponentClass::kBoundedMemory: {
      if (!opponent) {
        throw std::invalid_argument(
            "bounded-memory benchmark needs a stationary opponent policy");
      }
      const InducedMdp mdp =
          InduceMdp(game, opponent->policy, 0.0, opponent->weight, config.K);
      return OptimalAverageReward(mdp).gain;
    }
  }
  return 0.0;
}

double RegretCurve::AverageAt(long t) const {
  if (t < 1 || t > static_cast<long>(cumulative.size())) {
    throw std::out_of_range("RegretCurve::AverageAt: t out of range");
  }
  return cumulative[t - 1] / static_cast<double>(t);
}

RegretCurve MakeRegretCurve(std::span<const double> rewards,
                            double benchmark) {
  RegretCurve curve;
  curve.benchmark = benchmark;
  curve.cumulative.reserve(rewards.size());
  double total = 0.0;
  for (double r : rewards) {
    total += benchmark - r;
    curve.cumulative.push_back(total);
  }
  return curve;
}

RegretCurve PlayerRegret(const MatchTrace& trace, Player player,
                         double benchmark) {
  std::vector<double> rewards;
  rewards.reserve(trace.steps.size());
  for (const StepRecord& s : trace.steps) {
    rewards.push_back(player == Player::kOne ? s.r1 : s.r2);
  }
  return MakeRegretCurve(rewards, benchmark);
}

RegretCurve ExploiterRegret(const MatchTrace& trace, double mu_e2, double c) {
  return PlayerRegret(trace, Player::kTwo, mu_e2 + c);
}

double SecondHalfSlope(const RegretCurve& curve) {
  const long n = static_cast<long>(curve.cumulative.size());
  if (n < 4) return 0.0;
  const long begin = n / 2;
  const double count = static_cast<double>(n - begin);
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (long i = begin; i < n; ++i) {
    mean_x += static_cast<double>(i + 1);
    mean_y += curve.cumulative[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (long i = begin; i < n; ++i) {
    const double dx = static_cast<double>(i + 1) - mean_x;
    sxy += dx * (curve.cumulative[i] - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<std::pair<int, int>> PureNash(const LearningGameMatrix& m) {
  const int n = m.m1.rows();
  const int k = m.m1.cols();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      bool stable = true;
      for (int r = 0; r < n && stable; ++r) {
        if (m.m1(r, j) > m.m1(i, j)) stable = false;
      }
      for (int c = 0; c < k && stable; ++c) {
        if (m.m2(i, c) > m.m2(i, j)) stable = false;
      }
      if (stable) cells.emplace_back(i, j);
    }
  }
  return cells;
}

RoundRobinResult RoundRobin(const std::vector<AgentSpec>& algorithms,
                            const std::vector<BimatrixGame>& games,
                            const MatchConfig& config,
                            const RoundRobinOptions& options) {
  const int num_algs = static_cast<int>(algorithms.size());
  const int num_games = static_cast<int>(games.size());
  if (num_algs == 0 || num_games == 0 || options.trials < 1) {
    throw std::invalid_argument(
        "RoundRobin: need algorithms, games and trials >= 1");
  }
  config.Validate();

  struct Job {
    int g, k, i, j;
  };
  std::vector<Job> jobs;
  for (int g = 0; g < num_games; ++g) {
    const bool symmetric = games[g].IsSymmetric();
    for (int k = 0; k < options.trials; ++k) {
      for (int i = 0; i < num_algs; ++i) {
        for (int j = symmetric ? i : 0; j < num_algs; ++j) {
          jobs.push_back({g, k, i, j});
        }
      }
    }
  }

  RoundRobinResult result;
  result.per_trial.assign(
      num_games, std::vector<PairwiseRewards>(
                     options.trials, PairwiseRewards{Matrix(num_algs, num_algs),
                                                     Matrix(num_algs, num_algs)}));
  std::vector<std::pair<double, double>> means(jobs.size());

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t idx = next++; idx < jobs.size(); idx = next++) {
      const Job& job = jobs[idx];
      try {
        MatchConfig c = config;
        c.seed = DeriveSeed(
            config.seed,
            static_cast<uint64_t>(
                ((static_cast<long>(job.g) * options.trials + job.k) *
                     num_algs + job.i) * num_algs + job.j));
        const MatchTrace trace =
            PlayMatch(games[job.g], algorithms[job.i], algorithms[job.j], c);
        means[idx] = {trace.MeanReward(Player::kOne),
                      trace.MeanReward(Player::kTwo)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int num_threads =
      std::max(1, std::min<int>(options.jobs, static_cast<int>(jobs.size())));
  if (num_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < num_threads; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (size_t idx = 0; idx < jobs.size(); ++idx) {
    const Job& job = jobs[idx];
    PairwiseRewards& pr = result.per_trial[job.g][job.k];
    pr.m1(job.i, job.j) = means[idx].first;
    pr.m2(job.i, job.j) = means[idx].second;
    if (games[job.g].IsSymmetric() && job.i != job.j) {
      pr.m1(job.j, job.i) = means[idx].second;
      pr.m2(job.j, job.i) = means[idx].first;
    }
  }

  LearningGameMatrix& avg = result.average;
  for (const AgentSpec& a : algorithms) avg.names.push_back(a.name);
  avg.m1 = Matrix(num_algs, num_algs);
  avg.m2 = Matrix(num_algs, num_algs);
  const double count = static_cast<double>(num_games) * options.trials;
  for (const auto& game_trials : result.per_trial) {
    for (const PairwiseRewards& pr : game_trials) {
      for (int i = 0; i < num_algs; ++i) {
        for (int j = 0; j < num_algs; ++j) {
          avg.m1(i, j) += pr.m1(i, j) / count;
          avg.m2(i, j) += pr.m2(i, j) / count;
        }
      }
    }
  }
  return result;
}

std::vector<double> ReplicatorFitness(std::span<const double> p,
                                      std::span<const PairwiseRewards> games) {
  const int n = static_cast<int>(p.size());
  if (games.empty()) throw std::invalid_argument("ReplicatorFitness: no games");
  std::vector<double> f(n, 0.0);
  for (const PairwiseRewards& g : games) {
    if (g.m1.rows() != n || g.m1.cols() != n || g.m2.rows() != n ||
        g.m2.cols() != n) {
      throw std::invalid_argument("ReplicatorFitness: size mismatch");
    }
    for (int i = 0; i < n; ++i) {
      double fi = 0.0;
      for (int k = 0; k < n; ++k) {
        fi += std::min(g.m1(i, k), g.m2(k, i)) * p[k];
      }
      f[i] += fi / static_cast<double>(games.size());
    }
  }
  return f;
}

std::vector<double> ReplicatorStep(std::span<const double> p,
                                   std::span<const PairwiseRewards> games) {
  const std::vector<double> f = ReplicatorFitness(p, games);
  double f_bar = 0.0;
  for (double x : f) f_bar += x;
  f_bar /= static_cast<double>(f.size());
  std::vector<double> next(p.size());
  double total = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    next[i] = p[i] * ((1.0 - f_bar) + f[i]);
    if (next[i] < 0.0) {
      throw std::runtime_error("ReplicatorStep: negative population share");
    }
    total += next[i];
  }
  if (!(total > 0.0)) {
    throw std::runtime_error("ReplicatorStep: population vanished");
  }
  for (double& x : next) x /= total;
  return next;
}

std::vector<std::vector<double>> ReplicatorRun(
    std::span<const double> p0,
    const std::vector<std::vector<PairwiseRewards>>& per_trial,
    int generations, Rng& rng) {
  std::vector<std::vector<double>> history;
  history.reserve(generations + 1);
  history.emplace_back(p0.begin(), p0.end());
  std::vector<PairwiseRewards> drawn;
  drawn.reserve(per_trial.size());
  for (int gen = 0; gen < generations; ++gen) {
    drawn.clear();
    for (const auto& trials : per_trial) {
      drawn.push_back(trials[rng.UniformInt(static_cast<int>(trials.size()))]);
    }
    history.push_back(ReplicatorStep(history.back(), drawn));
  }
  return history;
}

std::vector<std::vector<PairwiseRewards>> SelectAlgorithms(
    const std::vector<std::vector<PairwiseRewards>>& per_trial,
    const std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  std::vector<std::vector<PairwiseRewards>> out;
  for (const auto& trials : per_trial) {
    auto& dst = out.emplace_back();
    for (const PairwiseRewards& pr : trials) {
      PairwiseRewards sub{Matrix(n, n), Matrix(n, n)};
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          sub.m1(a, b) = pr.m1(indices[a], indices[b]);
          sub.m2(a, b) = pr.m2(indices[a], indices[b]);
        }
      }
      dst.push_back(std::move(sub));
    }
  }
  return out;
}

}  // namespace laff

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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "laff/bargaining.h"
#include "laff/evaluation.h"
#include "laff/games.h"
#include "laff/matrix_game.h"
#include "laff/mdp.h"
#include "laff/opponents.h"
#include "laff/rng.h"
#include "oracles.h"

namespace laff {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

MatchConfig Config(long horizon, uint64_t seed) {
  MatchConfig c;
  c.horizon = horizon;
  c.seed = seed;
  return c;
}

Outcome BargainingOracle() {
  const auto start = Clock::now();
  double worst = 0.0;
  int mismatched = 0;
  int cases = 0;
  for (const std::string& name : BuiltinGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    const double mu1 = SecurityValue(g, Player::kOne).value;
    const double mu2 = SecurityValue(g, Player::kTwo).value;
    for (int k : {1, 2}) {
      for (double eps : {0.05, 0.2}) {
        ++cases;
        const EnforceParams ep{k, eps};
        const PairSolution ebs = EnforceableEbs(g, ep);
        const PairSolution bully = BullySolution(g, ep);
        const oracle::BargainOptimum o =
            oracle::BruteBargain(g, k, eps, mu1, mu2, 1e-4);
        if (o.feasible == ebs.IsFallback() || o.feasible == bully.IsFallback()) {
          ++mismatched;
          continue;
        }
        if (!o.feasible) continue;
        const double e =
            std::abs(std::min(ebs.u1 - mu1, ebs.u2 - mu2) - o.ebs_objective);
        const double b = std::abs(bully.u1 - o.bully_u1);
        worst = std::max({worst, e, b});
      }
    }
  }
  const double secs = Seconds(start);
  return {mismatched == 0 && worst <= 1e-3 && secs < 10.0,
          Fmt("%.0f cases, max objective gap %.2e, %.0f feasibility "
              "mismatches, %.2f s",
              cases, worst, mismatched, secs)};
}

Outcome ChickenAnalytics() {
  const BimatrixGame g = BuiltinGame("chicken");
  const double s1 = SecurityValue(g, Player::kOne).value;
  const double s2 = SecurityValue(g, Player::kTwo).value;
  bool ok = std::abs(s1 - 0.25) < 1e-9 && std::abs(s2 - 0.25) < 1e-9;
  const PairSolution ebs = EnforceableEbs(g, {1, 0.05});
  ok = ok && std::abs(ebs.u1 - 0.625) < 1e-9 &&
       std::abs(ebs.u2 - 0.625) < 1e-9 && std::abs(ebs.alpha - 0.5) < 1e-9;
  const PairSolution bully = BullySolution(g, {1, 0.05});
  ok = ok && std::abs(bully.u1 - 1.0) < 1e-9;
  // Feasibility of the 0.625 split just below and just above the flip.
  int flips = 0;
  for (int k = 1; k <= 3; ++k) {
    const double flip = 0.375 * k + 0.25;
    const PairSolution below = EnforceableEbs(g, {k, flip - 1e-4});
    const PairSolution above = EnforceableEbs(g, {k, flip + 1e-4});
    const bool before = std::abs(below.u1 - 0.625) < 1e-9 &&
                        std::abs(below.u2 - 0.625) < 1e-9;
    const bool after = std::min(above.u1, above.u2) < 0.625 - 1e-9 ||
                       above.IsFallback();
    flips += before && after;
  }
  ok = ok && flips == 3;
  return {ok, Fmt("muS=(%.4f, %.4f), EBS u=%.4f alpha=%.4f", s1, s2, ebs.u1,
                  ebs.alpha) +
                  Fmt(", bully u1=%.4f, flips at 0.375K+0.25 for %.0f/3 K", bully.u1,
                      flips)};
}

Outcome MdpExhaustive() {
  const auto start = Clock::now();
  const MatchConfig c;
  double worst = 0.0;
  int count = 0;
  for (const std::string& name : BuiltinGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    if (g.n1() != 2 || g.n2() != 2) continue;
    std::vector<OpponentPolicy> opps = {
        [](const HistoryState&) { return MixedStrategy::Pure(2, 0); },
        [](const HistoryState&) { return MixedStrategy::Uniform(2); },
        [](const HistoryState& s) {
          return MixedStrategy::Pure(2, s.a1().back());
        }};
    std::vector<double> weights = {0.0, 0.0, 0.0};
    for (const char* leader : {"egalitarian", "ftft"}) {
      const auto s = MakeStationaryOpponent({leader, {}}, g, c);
      opps.push_back(s->policy);
      weights.push_back(s->weight);
    }
    for (size_t i = 0; i < opps.size(); ++i) {
      const InducedMdp m = InduceMdp(g, opps[i], 0.0, weights[i], 1);
      const double gain = OptimalAverageReward(m).gain;
      worst = std::max(worst, std::abs(gain - oracle::ExhaustiveOptimalGain(m)));
      ++count;
    }
  }
  return {worst <= 1e-6 && count > 0,
          Fmt("%.0f induced MDPs, max gap %.2e, %.2f s", count, worst,
              Seconds(start))};
}

Outcome NonExploitability() {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;
  for (const char* name : {"sym_unfair", "sym_inferior"}) {
    const BimatrixGame g = BuiltinGame(name);
    int positive = 0;
    double slope_sum = 0.0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const MatchConfig c = Config(20000, seed);
      const double mu_e2 = EnforceableEbs(g, c.enforce()).u2;
      const MatchTrace t = PlayMatch(g, {"laff", {}}, {"bully", {}}, c);
      const double slope = SecondHalfSlope(ExploiterRegret(t, mu_e2, 0.05));
      slope_sum += slope;
      positive += slope > 0.005;
    }
    ok = ok && positive >= 9;
    detail += std::string(name) +
              Fmt(" %.0f/10 (mean slope %.4f); ", positive, slope_sum / 10);
  }
  const double secs = Seconds(start);
  ok = ok && secs < 120.0;
  return {ok, detail + Fmt("%.1f s", secs)};
}

// Games where the seed-averaged regret at T is at most half of that at T/10,
// or already non-positive.
int SublinearGames(const AgentSpec& opp, bool bounded_memory,
                   std::string* failed) {
  int pass = 0;
  const long horizon = 20000;
  for (const std::string& name : TestGameNames()) {
    const BimatrixGame g = BuiltinGame(name);
    const MatchConfig base = Config(horizon, 0);
    const double benchmark =
        bounded_memory
            ? BenchmarkFor(g, OpponentClass::kBoundedMemory, base,
                           MakeStationaryOpponent(opp, g, base))
            : BenchmarkFor(g, OpponentClass::kFollowerUnconditional, base);
    double at_t = 0.0;
    double at_tenth = 0.0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const MatchTrace t = PlayMatch(g, {"laff", {}}, opp, Config(horizon, seed));
      const RegretCurve r = PlayerRegret(t, Player::kOne, benchmark);
      at_t += r.AverageAt(horizon) / 10;
      at_tenth += r.AverageAt(horizon / 10) / 10;
    }
    if (at_t <= 0.0 || at_t <= 0.5 * at_tenth) {
      ++pass;
    } else {
      *failed += name + Fmt("(%.3f vs %.3f) ", at_t, at_tenth);
    }
  }
  return pass;
}

Outcome Adaptability() {
  std::string q_failed, f_failed;
  const int q = SublinearGames({"qlearning", {}}, false, &q_failed);
  const int f = SublinearGames({"ftft", {}}, true, &f_failed);
  return {q >= 7 && f >= 7,
          Fmt("qlearning %.0f/11, ftft %.0f/11", q, f) +
              (q_failed.empty() ? "" : "; qlearning misses: " + q_failed) +
              (f_failed.empty() ? "" : "; ftft misses: " + f_failed)};
}

Outcome SelfPlay() {
  std::string detail;
  bool ok = true;
  for (const char* name : {"chicken", "sym_winwin"}) {
    const BimatrixGame g = BuiltinGame(name);
    const PairSolution ebs = EnforceableEbs(g, {1, 0.05});
    int good = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const MatchTrace t =
          PlayMatch(g, {"laff", {}}, {"laff", {}}, Config(50000, seed));
      good += std::abs(t.MeanReward(Player::kOne) - ebs.u1) <= 0.1 &&
              std::abs(t.MeanReward(Player::kTwo) - ebs.u2) <= 0.1;
    }
    ok = ok && good >= 8;
    detail += std::string(name) + Fmt(" %.0f/10; ", good);
  }
  return {ok, detail};
}

Outcome ReferenceTableNash() {
  const std::vector<std::string> names = {"S++",        "Manipulator", "M-Qubed",
                                          "Bully",      "Q-Learning",  "LAFF",
                                          "FTFT",       "FP"};
  const std::vector<std::vector<double>> m1 = {
      {0.75, 0.73, 0.73, 0.65, 0.82, 0.71, 0.70, 0.72},
      {0.87, 0.76, 0.77, 0.65, 0.89, 0.70, 0.71, 0.76},
      {0.88, 0.68, 0.80, 0.65, 0.79, 0.76, 0.78, 0.62},
      {0.86, 0.83, 0.85, 0.48, 0.91, 0.61, 0.72, 0.76},
      {0.82, 0.73, 0.79, 0.68, 0.83, 0.71, 0.81, 0.64},
      {0.87, 0.71, 0.74, 0.55, 0.90, 0.77, 0.80, 0.75},
      {0.64, 0.49, 0.59, 0.60, 0.59, 0.61, 0.80, 0.46},
      {0.70, 0.66, 0.66, 0.63, 0.69, 0.61, 0.71, 0.68}};
  const std::vector<std::vector<double>> m2 = {
      {0.76, 0.80, 0.81, 0.77, 0.76, 0.80, 0.68, 0.55},
      {0.68, 0.71, 0.65, 0.77, 0.67, 0.65, 0.60, 0.55},
      {0.68, 0.68, 0.74, 0.80, 0.75, 0.73, 0.65, 0.56},
      {0.61, 0.60, 0.61, 0.44, 0.63, 0.49, 0.55, 0.56},
      {0.77, 0.83, 0.67, 0.85, 0.74, 0.84, 0.67, 0.56},
      {0.65, 0.66, 0.72, 0.61, 0.66, 0.74, 0.70, 0.57},
      {0.70, 0.71, 0.76, 0.71, 0.78, 0.78, 0.75, 0.72},
      {0.73, 0.74, 0.55, 0.73, 0.57, 0.71, 0.60, 0.55}};
  LearningGameMatrix m{names, Matrix::FromRows(m1), Matrix::FromRows(m2)};
  const auto cells = PureNash(m);
  std::set<std::pair<std::string, std::string>> found;
  for (auto [i, j] : cells) found.insert({names[i], names[j]});
  const std::set<std::pair<std::string, std::string>> expected = {
      {"Bully", "Q-Learning"}, {"Q-Learning", "Bully"}, {"LAFF", "LAFF"}};
  std::string detail;
  for (const auto& [a, b] : found) detail += "(" + a + "," + b + ") ";
  return {found == expected, "flagged " + detail};
}

Outcome Replicator() {
  const auto start = Clock::now();
  const std::vector<AgentSpec> algs = {{"laff", {}},
                                       {"bully", {}},
                                       {"qlearning", {}},
                                       {"fictitious_play", {}}};
  std::vector<BimatrixGame> games;
  for (const std::string& n : TestGameNames()) games.push_back(BuiltinGame(n));
  const RoundRobinResult rr =
      RoundRobin(algs, games, Config(20000, 0), {5, 4});
  const std::vector<double> p0(4, 0.25);
  double laff_share = 0.0;
  double worst_sum = 0.0;
  for (int run = 0; run < 100; ++run) {
    Rng rng(DeriveSeed(0, static_cast<uint64_t>(run)));
    const auto hist = ReplicatorRun(p0, rr.per_trial, 500, rng);
    for (const auto& p : hist) {
      worst_sum = std::max(
          worst_sum, std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0));
    }
    laff_share += hist.back()[0] / 100;
  }
  bool vertices = true;
  Rng rng(7);
  for (int v = 0; v < 4; ++v) {
    std::vector<double> vertex(4, 0.0);
    vertex[v] = 1.0;
    vertices = vertices &&
               ReplicatorRun(vertex, rr.per_trial, 500, rng).back() == vertex;
  }
  return {laff_share > 0.5 && worst_sum <= 1e-9 && vertices,
          Fmt("mean final LAFF share %.3f, max simplex error %.1e, vertices "
              "fixed %.0f, %.1f s",
              laff_share, worst_sum, vertices ? 1 : 0, Seconds(start))};
}

std::string Slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome CliDeterminism() {
  const fs::path root = fs::current_path() / "acceptance_tmp";
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--game", "asym_cyclic", "--K", "2"},
      {"benchmark", "--game", "sym_inferior", "--opp", "ftft"},
      {"match", "--game", "asym_biased", "--p1", "laff", "--p2",
       "manipulator", "--T", "3000", "--seed", "5", "--trace", "@/trace.csv"},
      {"regret", "--games", "chicken,asym_cyclic", "--opp", "qlearning",
       "--class", "follower_unconditional", "--T", "2000", "--seeds", "3",
       "--seed", "5", "--svg", "--out", "@"},
      {"tournament", "--games", "sym_unfair,asym_inferior", "--algs",
       "laff,bully,qlearning,ftft", "--trials", "2", "--jobs", "3", "--T",
       "1000", "--seed", "5", "--out", "@"},
      {"replicator", "--games", "chicken", "--trials", "2", "--T", "1000",
       "--generations", "50", "--runs", "5", "--seed", "5", "--svg", "--out",
       "@"}};
  int identical = 0;
  for (size_t c = 0; c < commands.size(); ++c) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / (std::to_string(c) + "_" + std::to_string(run));
      fs::remove_all(dir);
      fs::create_directories(dir);
      std::vector<std::string> args;
      for (std::string a : commands[c]) {
        if (a[0] == '@') a = dir.string() + a.substr(1);
        args.push_back(a);
      }
      std::ostringstream out, err;
      if (RunCli(args, out, err) != 0) return {false, "command failed: " + err.str()};
      outputs[run] = out.str();
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const fs::path& f : files) {
        outputs[run] += "\n--" + f.filename().string() + "--\n" + Slurp(f);
      }
    }
    identical += outputs[0] == outputs[1];
  }
  fs::remove_all(root);
  return {identical == static_cast<int>(commands.size()),
          Fmt("%.0f/%.0f subcommands byte-identical (stdout and files)",
              identical, static_cast<double>(commands.size()))};
}

}  // namespace
}  // namespace laff

int main() {
  using laff::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"1 bargaining oracle equivalence", laff::BargainingOracle},
       {"2 chicken analytics", laff::ChickenAnalytics},
       {"3 MDP gain vs exhaustive enumeration", laff::MdpExhaustive},
       {"4 non-exploitability vs Bully", laff::NonExploitability},
       {"5 adaptability (qlearning, ftft)", laff::Adaptability},
       {"6 self-play fairness", laff::SelfPlay},
       {"7 pure-NE cells of the reference table", laff::ReferenceTableNash},
       {"8 replicator dynamics", laff::Replicator},
       {"9 CLI determinism", laff::CliDeterminism}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "laff/bargaining.h"
#include "laff/evaluation.h"
#include "laff/games.h"
#include "laff/io.h"
#include "laff/laff.h"
#include "laff/mdp.h"
#include "laff/opponents.h"
#include "laff/rng.h"

namespace laff {
namespace {

using nlohmann::json;

struct CommonOptions {
  std::string game = "chicken";
  long horizon = 20000;
  int k = 1;
  double eps = 0.05;
  double delta = 0.05;
  uint64_t seed = 0;
  double c1 = 0.05;
  double c3 = 0.005;
  double c4 = 0.005;
  double eta_m = 0.05;
  std::string slack = "practical";
  std::string out_dir = ".";

  MatchConfig Config() const {
    MatchConfig c;
    c.horizon = horizon;
    c.K = k;
    c.eps = eps;
    c.delta = delta;
    c.seed = seed;
    c.slack.c1 = c1;
    c.slack.c3 = c3;
    c.c4 = c4;
    c.eta_m = eta_m;
    if (slack == "practical") {
      c.slack_mode = SlackMode::kPractical;
    } else if (slack == "theoretical") {
      c.slack_mode = SlackMode::kTheoretical;
    } else {
      throw std::invalid_argument("--slack must be practical or theoretical");
    }
    c.Validate();
    return c;
  }
};

void AddModelOptions(CLI::App* cmd, CommonOptions* o) {
  cmd->add_option("--K", o->k, "memory length")->capture_default_str();
  cmd->add_option("--eps", o->eps, "enforceability slack")
      ->capture_default_str();
}

void AddRunOptions(CLI::App* cmd, CommonOptions* o) {
  AddModelOptions(cmd, o);
  cmd->add_option("--T", o->horizon, "horizon")->capture_default_str();
  cmd->add_option("--delta", o->delta, "confidence")->capture_default_str();
  cmd->add_option("--seed", o->seed, "seed (default: $LAFF_SEED or 0)");
  cmd->add_option("--c1", o->c1, "slack constant C1")->capture_default_str();
  cmd->add_option("--c3", o->c3, "slack constant C3")->capture_default_str();
  cmd->add_option("--c4", o->c4, "follower-test constant C4")
      ->capture_default_str();
  cmd->add_option("--eta-m", o->eta_m, "maximin-test margin")
      ->capture_default_str();
  cmd->add_option("--slack", o->slack, "practical | theoretical")
      ->capture_default_str();
}

std::map<std::string, double> ParseParams(const std::string& text,
                                          const std::string& flag) {
  std::map<std::string, double> params;
  if (text.empty()) return params;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument(flag + ": expected object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) {
      throw std::invalid_argument(flag + ": '" + key + "' must be a number");
    }
    params[key] = value.get<double>();
  }
  return params;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<BimatrixGame> LoadGames(const std::string& list) {
  std::vector<std::string> names;
  if (list == "test") {
    names = TestGameNames();
  } else if (list == "training") {
    names = TrainingGameNames();
  } else {
    names = SplitList(list);
  }
  if (names.empty()) throw std::invalid_argument("no games given");
  std::vector<BimatrixGame> games;
  for (const std::string& n : names) games.push_back(LoadGame(n));
  return games;
}

std::filesystem::path OutPath(const CommonOptions& o, const std::string& name) {
  std::filesystem::create_directories(o.out_dir);
  return std::filesystem::path(o.out_dir) / name;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

json StrategyJson(const MixedStrategy& s) { return s.probs; }

json SolutionJson(const PairSolution& s, int kp) {
  return {{"kind", ToString(s.kind)},
          {"xA", {s.xa.a1, s.xa.a2}},
          {"xB", {s.xb.a1, s.xb.a2}},
          {"alpha", s.alpha},
          {"u1", s.u1},
          {"u2", s.u2},
          {"deviation_profit", s.deviation_profit},
          {"Kp", kp}};
}

OpponentClass DefaultClass(const std::string& opp) {
  if (opp == "qlearning") return OpponentClass::kFollowerUnconditional;
  if (opp == "laff") return OpponentClass::kFollowerConditional;
  if (opp == "manipulator" || opp == "fictitious_play") {
    return OpponentClass::kAdversarial;
  }
  return OpponentClass::kBoundedMemory;
}

int RunSolve(const CommonOptions& o, std::ostream& out) {
  const BimatrixGame game = LoadGame(o.game);
  EnforceParams ep{o.k, o.eps};
  ep.Validate();
  const BargainingSummary s = Summarize(game, ep);
  json j = {
      {"game", game.name()},
      {"K", o.k},
      {"eps", o.eps},
      {"security",
       {{"mu_s1", s.security1.value},
        {"mu_s2", s.security2.value},
        {"maximin1", StrategyJson(s.security1.strategy)},
        {"maximin2", StrategyJson(s.security2.strategy)}}},
      {"punishment",
       {{"value", s.punishment.value},
        {"strategy", StrategyJson(s.punishment.strategy)}}},
      {"ebs", SolutionJson(s.ebs, s.kp_ebs)},
      {"bully", SolutionJson(s.bully, s.kp_bully)},
  };
  out << j.dump(2) << '\n';
  return 0;
}

int RunBenchmark(const CommonOptions& o, const std::string& opp,
                 const std::string& opp_params, std::ostream& out) {
  const BimatrixGame game = LoadGame(o.game);
  MatchConfig config = o.Config();
  const AgentSpec spec{opp, ParseParams(opp_params, "--opp-params")};
  json j = {{"game", game.name()}, {"opponent", opp}};
  j["mu_s"] = BenchmarkFor(game, OpponentClass::kAdversarial, config);
  j["mu_e"] = BenchmarkFor(game, OpponentClass::kFollowerConditional, config);
  j["mu_b"] = BenchmarkFor(game, OpponentClass::kFollowerUnconditional, config);
  const auto stationary = MakeStationaryOpponent(spec, game, config);
  if (stationary) {
    const InducedMdp mdp =
        InduceMdp(game, stationary->policy, 0.0, stationary->weight, o.k);
    const OptimalGain g = OptimalAverageReward(mdp);
    j["mu_star"] = g.gain;
    j["mdp_states"] = mdp.num_states();
    j["opponent_weight"] = stationary->weight;
  } else {
    j["mu_star"] = nullptr;
  }
  const OpponentClass cls = DefaultClass(opp);
  j["class"] = ToString(cls);
  j["benchmark"] = cls == OpponentClass::kBoundedMemory
                       ? j["mu_star"]
                       : json(BenchmarkFor(game, cls, config));
  out << j.dump(2) << '\n';
  return 0;
}

int RunMatchCommand(const CommonOptions& o, const std::string& p1,
                    const std::string& p1_params, const std::string& p2,
                    const std::string& p2_params, const std::string& trace_path,
                    std::ostream& out) {
  const BimatrixGame game = LoadGame(o.game);
  const MatchConfig config = o.Config();
  const AgentSpec a{p1, ParseParams(p1_params, "--p1-params")};
  const AgentSpec b{p2, ParseParams(p2_params, "--p2-params")};
  const MatchTrace trace = PlayMatch(game, a, b, config);
  if (!trace_path.empty()) {
    std::ofstream f = OpenOut(trace_path);
    WriteTraceCsv(trace, f);
  }
  json j = {{"game", game.name()},
            {"p1", p1},
            {"p2", p2},
            {"T", o.horizon},
            {"seed", o.seed},
            {"mean_r1", trace.MeanReward(Player::kOne)},
            {"mean_r2", trace.MeanReward(Player::kTwo)},
            {"final_expert1", trace.expert1.back()},
            {"final_expert2", trace.expert2.back()}};
  out << j.dump(2) << '\n';
  return 0;
}

struct RegretOptions {
  std::string games = "test";
  std::string p1 = "laff";
  std::string opp = "qlearning";
  std::string opp_params;
  std::string cls;
  int seeds = 1;
  double exploiter_c = -1.0;
  bool svg = false;
};

int RunRegret(const CommonOptions& o, const RegretOptions& r,
              std::ostream& out) {
  const MatchConfig base = o.Config();
  if (r.seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
  const AgentSpec p1{r.p1, {}};
  const AgentSpec p2{r.opp, ParseParams(r.opp_params, "--opp-params")};
  const bool exploiter = r.exploiter_c >= 0.0;
  const OpponentClass cls =
      r.cls.empty() ? DefaultClass(r.opp) : OpponentClassFromString(r.cls);
  json summary = json::array();
  std::vector<SvgSeries> series;
  for (const BimatrixGame& game : LoadGames(r.games)) {
    double benchmark;
    if (exploiter) {
      benchmark = EnforceableEbs(game, base.enforce()).u2 + r.exploiter_c;
    } else if (cls == OpponentClass::kBoundedMemory) {
      benchmark = BenchmarkFor(game, cls, base,
                               MakeStationaryOpponent(p2, game, base));
    } else {
      benchmark = BenchmarkFor(game, cls, base);
    }
    std::vector<double> mean(base.horizon, 0.0);
    double slope_sum = 0.0;
    for (int s = 0; s < r.seeds; ++s) {
      MatchConfig c = base;
      c.seed = DeriveSeed(base.seed, static_cast<uint64_t>(s));
      const MatchTrace trace = PlayMatch(game, p1, p2, c);
      const RegretCurve curve =
          PlayerRegret(trace, exploiter ? Player::kTwo : Player::kOne,
                       benchmark);
      slope_sum += SecondHalfSlope(curve);
      for (long t = 0; t < base.horizon; ++t) {
        mean[t] += curve.cumulative[t] / r.seeds;
      }
    }
    RegretCurve avg{benchmark, mean};
    const std::string stem = "regret_" + game.name() + "_" + r.opp +
                             (exploiter ? "_exploiter" : "");
    {
      std::ofstream f = OpenOut(OutPath(o, stem + ".csv"));
      WriteRegretCsv(avg, f);
    }
    const long tenth = std::max<long>(1, base.horizon / 10);
    summary.push_back({{"game", game.name()},
                       {"benchmark", benchmark},
                       {"avg_regret_T", avg.AverageAt(base.horizon)},
                       {"avg_regret_T10", avg.AverageAt(tenth)},
                       {"mean_second_half_slope", slope_sum / r.seeds}});
    if (r.svg) {
      SvgSeries sv{game.name(), {}, {}};
      for (long t = 1; t <= base.horizon; ++t) {
        sv.x.push_back(static_cast<double>(t));
        sv.y.push_back(avg.AverageAt(t));
      }
      series.push_back(std::move(sv));
    }
  }
  if (r.svg) {
    std::ofstream f = OpenOut(OutPath(
        o, "regret_" + r.opp + (exploiter ? "_exploiter" : "") + ".svg"));
    WriteSvgPlot(series, "average regret vs " + r.opp, f);
  }
  out << json{{"opponent", r.opp},
              {"class", exploiter ? "exploiter" : ToString(cls)},
              {"games", summary}}
             .dump(2)
      << '\n';
  return 0;
}

struct TournamentOptions {
  std::string games = "test";
  std::string algs = "laff,bully,qlearning,ftft,fictitious_play,manipulator";
  int trials = 1;
  int jobs = 1;
};

std::vector<AgentSpec> AlgorithmSpecs(const std::string& list) {
  std::vector<AgentSpec> specs;
  for (const std::string& n : SplitList(list)) specs.push_back({n, {}});
  if (specs.empty()) throw std::invalid_argument("no algorithms given");
  return specs;
}

void WriteMatchesCsv(const std::vector<BimatrixGame>& games,
                     const RoundRobinResult& rr, std::ostream& out) {
  out << "game,trial,i,j,m1,m2\n";
  const auto& names = rr.average.names;
  for (size_t g = 0; g < games.size(); ++g) {
    for (size_t k = 0; k < rr.per_trial[g].size(); ++k) {
      const PairwiseRewards& pr = rr.per_trial[g][k];
      for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = 0; j < names.size(); ++j) {
          out << games[g].name() << ',' << k << ',' << names[i] << ','
              << names[j] << ',' << FormatDouble(pr.m1(i, j)) << ','
              << FormatDouble(pr.m2(i, j)) << '\n';
        }
      }
    }
  }
}

json NashJson(const LearningGameMatrix& m) {
  json cells = json::array();
  for (const auto& [i, j] : PureNash(m)) {
    cells.push_back({m.names[i], m.names[j]});
  }
  return cells;
}

RoundRobinResult RunRoundRobin(const CommonOptions& o,
                               const TournamentOptions& t,
                               std::vector<BimatrixGame>* games) {
  *games = LoadGames(t.games);
  return RoundRobin(AlgorithmSpecs(t.algs), *games, o.Config(),
                    {t.trials, t.jobs});
}

int RunTournament(const CommonOptions& o, const TournamentOptions& t,
                  std::ostream& out) {
  std::vector<BimatrixGame> games;
  const RoundRobinResult rr = RunRoundRobin(o, t, &games);
  {
    std::ofstream f = OpenOut(OutPath(o, "learning_game.csv"));
    WriteLearningGameCsv(rr.average, f);
  }
  {
    std::ofstream f = OpenOut(OutPath(o, "matches.csv"));
    WriteMatchesCsv(games, rr, f);
  }
  out << json{{"algorithms", rr.average.names},
              {"pure_nash", NashJson(rr.average)}}
             .dump(2)
      << '\n';
  return 0;
}

// Reads a matches.csv file into per-game, per-trial pairwise rewards.
std::vector<std::vector<PairwiseRewards>> ReadMatchesCsv(
    const std::string& path, std::vector<std::string>* names) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("game,trial,i,j,m1,m2", 0) != 0) {
    throw std::invalid_argument(path + ": unexpected header");
  }
  struct Row {
    std::string game;
    int trial;
    std::string i, j;
    double m1, m2;
  };
  std::vector<Row> rows;
  std::vector<std::string> game_order;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitList(line);
    if (f.size() != 6) throw std::invalid_argument(path + ": bad row " + line);
    Row r{f[0], std::stoi(f[1]), f[2], f[3], std::stod(f[4]), std::stod(f[5])};
    if (std::find(game_order.begin(), game_order.end(), r.game) ==
        game_order.end()) {
      game_order.push_back(r.game);
    }
    if (std::find(names->begin(), names->end(), r.i) == names->end()) {
      names->push_back(r.i);
    }
    rows.push_back(std::move(r));
  }
  const int n = static_cast<int>(names->size());
  std::vector<std::vector<PairwiseRewards>> out(game_order.size());
  for (const Row& r : rows) {
    const size_t g = std::find(game_order.begin(), game_order.end(), r.game) -
                     game_order.begin();
    if (static_cast<int>(out[g].size()) <= r.trial) {
      out[g].resize(r.trial + 1, PairwiseRewards{Matrix(n, n), Matrix(n, n)});
    }
    const int i = std::find(names->begin(), names->end(), r.i) - names->begin();
    const int j = std::find(names->begin(), names->end(), r.j) - names->begin();
    if (j >= n) throw std::invalid_argument(path + ": unknown column " + r.j);
    out[g][r.trial].m1(i, j) = r.m1;
    out[g][r.trial].m2(i, j) = r.m2;
  }
  return out;
}

struct ReplicatorOptions {
  std::string matches;
  std::string population = "laff,bully,qlearning,fictitious_play";
  int generations = 500;
  int runs = 100;
  bool svg = false;
};

int RunReplicatorCommand(const CommonOptions& o, const TournamentOptions& t,
                         const ReplicatorOptions& r, std::ostream& out) {
  std::vector<std::string> names;
  std::vector<std::vector<PairwiseRewards>> per_trial;
  if (r.matches.empty()) {
    TournamentOptions tt = t;
    tt.algs = r.population;
    std::vector<BimatrixGame> games;
    const RoundRobinResult rr = RunRoundRobin(o, tt, &games);
    names = rr.average.names;
    per_trial = rr.per_trial;
  } else {
    per_trial = ReadMatchesCsv(r.matches, &names);
  }
  std::vector<int> indices;
  std::vector<std::string> chosen = SplitList(r.population);
  for (const std::string& n : chosen) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) {
      throw std::invalid_argument("algorithm '" + n + "' not in match data");
    }
    indices.push_back(static_cast<int>(it - names.begin()));
  }
  per_trial = SelectAlgorithms(per_trial, indices);
  if (r.generations < 0 || r.runs < 1) {
    throw std::invalid_argument("--generations >= 0 and --runs >= 1 required");
  }

  const size_t j = chosen.size();
  std::vector<double> p0(j, 1.0 / static_cast<double>(j));
  std::vector<std::vector<double>> mean(r.generations + 1,
                                        std::vector<double>(j, 0.0));
  for (int run = 0; run < r.runs; ++run) {
    Rng rng(DeriveSeed(o.seed, static_cast<uint64_t>(run)));
    const auto history = ReplicatorRun(p0, per_trial, r.generations, rng);
    for (size_t g = 0; g < history.size(); ++g) {
      for (size_t i = 0; i < j; ++i) mean[g][i] += history[g][i] / r.runs;
    }
  }
  {
    std::ofstream f = OpenOut(OutPath(o, "population.csv"));
    WritePopulationCsv(mean, chosen, f);
  }
  if (r.svg) {
    std::vector<SvgSeries> series;
    for (size_t i = 0; i < j; ++i) {
      SvgSeries s{chosen[i], {}, {}};
      for (size_t g = 0; g < mean.size(); ++g) {
        s.x.push_back(static_cast<double>(g));
        s.y.push_back(mean[g][i]);
      }
      series.push_back(std::move(s));
    }
    std::ofstream f = OpenOut(OutPath(o, "population.svg"));
    WriteSvgPlot(series, "population shares", f);
  }
  json final_shares;
  for (size_t i = 0; i < j; ++i) final_shares[chosen[i]] = mean.back()[i];
  out << json{{"generations", r.generations},
              {"runs", r.runs},
              {"final_mean_shares", final_shares}}
             .dump(2)
      << '\n';
  return 0;
}

uint64_t DefaultSeed() {
  const char* env = std::getenv("LAFF_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw std::invalid_argument("LAFF_SEED must be an integer");
  return v;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Repeated-game laboratory for the LAFF algorithm", "laff"};
  app.require_subcommand(1);

  CommonOptions o;
  try {
    o.seed = DefaultSeed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto* solve = app.add_subcommand("solve", "security values, EBS and Bully");
  solve->add_option("--game", o.game, "built-in name or JSON file")
      ->required();
  AddModelOptions(solve, &o);

  std::string opp = "ftft", opp_params;
  auto* bench = app.add_subcommand("benchmark", "benchmarks against an opponent");
  bench->add_option("--game", o.game, "built-in name or JSON file")
      ->required();
  bench->add_option("--opp", opp, "opponent name")->capture_default_str();
  bench->add_option("--opp-params", opp_params, "JSON parameter overrides");
  AddModelOptions(bench, &o);
  bench->add_option("--delta", o.delta, "confidence")->capture_default_str();

  std::string p1 = "laff", p2, p1_params, p2_params, trace;
  auto* match = app.add_subcommand("match", "play one match");
  match->add_option("--game", o.game, "built-in name or JSON file")
      ->required();
  match->add_option("--p1", p1, "row agent")->required();
  match->add_option("--p2", p2, "column agent")->required();
  match->add_option("--p1-params", p1_params, "JSON parameter overrides");
  match->add_option("--p2-params", p2_params, "JSON parameter overrides");
  match->add_option("--trace", trace, "write the trace CSV here");
  AddRunOptions(match, &o);

  RegretOptions ro;
  auto* regret = app.add_subcommand("regret", "regret curves over games");
  regret->add_option("--games", ro.games, "test | training | name,...")
      ->capture_default_str();
  regret->add_option("--p1", ro.p1, "row agent")->capture_default_str();
  regret->add_option("--opp", ro.opp, "column agent")->capture_default_str();
  regret->add_option("--opp-params", ro.opp_params, "JSON parameter overrides");
  regret->add_option("--class", ro.cls,
                     "bounded_memory | adversarial | follower_conditional | "
                     "follower_unconditional (default: by opponent)");
  regret->add_option("--seeds", ro.seeds, "matches per game")
      ->capture_default_str();
  regret->add_option("--exploiter-c", ro.exploiter_c,
                     "report player 2's regret against mu_E2 + c instead");
  regret->add_flag("--svg", ro.svg, "also write an SVG plot");
  regret->add_option("--out", o.out_dir, "output directory")
      ->capture_default_str();
  AddRunOptions(regret, &o);

  TournamentOptions to;
  auto* tourn = app.add_subcommand("tournament", "round-robin learning game");
  tourn->add_option("--games", to.games, "test | training | name,...")
      ->capture_default_str();
  tourn->add_option("--algs", to.algs, "comma-separated agents")
      ->capture_default_str();
  tourn->add_option("--trials", to.trials, "trials per game")
      ->capture_default_str();
  tourn->add_option("--jobs", to.jobs, "concurrent matches")
      ->capture_default_str();
  tourn->add_option("--out", o.out_dir, "output directory")
      ->capture_default_str();
  AddRunOptions(tourn, &o);

  ReplicatorOptions rep;
  auto* repl = app.add_subcommand("replicator", "replicator dynamics");
  repl->add_option("--matches", rep.matches,
                   "matches.csv from a tournament (default: run one)");
  repl->add_option("--population", rep.population, "algorithms to evolve")
      ->capture_default_str();
  repl->add_option("--generations", rep.generations)->capture_default_str();
  repl->add_option("--runs", rep.runs)->capture_default_str();
  repl->add_flag("--svg", rep.svg, "also write an SVG plot");
  repl->add_option("--games", to.games, "games for the inline tournament")
      ->capture_default_str();
  repl->add_option("--trials", to.trials, "trials for the inline tournament")
      ->capture_default_str();
  repl->add_option("--jobs", to.jobs, "concurrent matches")
      ->capture_default_str();
  repl->add_option("--out", o.out_dir, "output directory")
      ->capture_default_str();
  AddRunOptions(repl, &o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*solve) return RunSolve(o, out);
    if (*bench) return RunBenchmark(o, opp, opp_params, out);
    if (*match) {
      return RunMatchCommand(o, p1, p1_params, p2, p2_params, trace, out);
    }
    if (*regret) return RunRegret(o, ro, out);
    if (*tourn) return RunTournament(o, to, out);
    if (*repl) return RunReplicatorCommand(o, to, rep, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace laff

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

#include "laff/games.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace laff {
namespace {

using Cells = std::vector<std::vector<std::pair<double, double>>>;

BimatrixGame FromCells(std::string name, const Cells& cells) {
  Matrix r1(static_cast<int>(cells.size()), static_cast<int>(cells[0].size()));
  Matrix r2(r1.rows(), r1.cols());
  for (int i = 0; i < r1.rows(); ++i) {
    for (int j = 0; j < r1.cols(); ++j) {
      r1(i, j) = cells[i][j].first;
      r2(i, j) = cells[i][j].second;
    }
  }
  return BimatrixGame(std::move(name), std::move(r1), std::move(r2));
}

// Each cell is (player-1 reward, player-2 reward).
const std::map<std::string, Cells, std::less<>>& Library() {
  static const auto* lib = new std::map<std::string, Cells, std::less<>>{
      {"chicken", {{{0.5, 0.5}, {0.25, 1.0}}, {{1.0, 0.25}, {0.0, 0.0}}}},
      // Test games.
      {"sym_winwin",
       {{{1.0, 1.0}, {0.0, 2.0 / 3}}, {{2.0 / 3, 0.0}, {1.0 / 3, 1.0 / 3}}}},
      {"asym_winwin",
       {{{1.0, 1.0}, {0.0, 5.0 / 6}}, {{1.0 / 3, 0.0}, {2.0 / 3, 2.0 / 3}}}},
      {"sym_biased",
       {{{1.0 / 3, 1.0 / 3}, {2.0 / 3, 1.0}}, {{1.0, 2.0 / 3}, {0.0, 0.0}}}},
      {"asym_biased",
       {{{2.0 / 3, 0.0}, {0.0, 1.0}}, {{1.0, 2.0 / 3}, {1.0 / 3, 1.0 / 3}}}},
      {"sym_secondbest",
       {{{1.0 / 3, 1.0 / 3}, {0.0, 1.0}}, {{1.0, 0.0}, {2.0 / 3, 2.0 / 3}}}},
      {"asym_secondbest",
       {{{1.0, 1.0 / 3}, {1.0 / 3, 1.0}}, {{0.0, 0.0}, {2.0 / 3, 2.0 / 3}}}},
      {"sym_unfair", {{{0.5, 0.5}, {0.25, 1.0}}, {{1.0, 0.25}, {0.0, 0.0}}}},
      {"asym_unfair",
       {{{0.0, 1.0}, {0.75, 0.75}}, {{1.0, 0.25}, {0.25, 0.0}}}},
      {"sym_inferior", {{{0.8, 0.8}, {0.0, 1.0}}, {{1.0, 0.0}, {0.2, 0.2}}}},
      {"asym_inferior",
       {{{1.0, 0.75}, {0.0, 1.0}}, {{0.75, 0.0}, {0.25, 0.25}}}},
      {"asym_cyclic",
       {{{0.0, 1.0}, {0.75, 0.75}}, {{1.0, 0.0}, {0.25, 0.25}}}},
      // Training games.
      {"train_1", {{{0.75, 0.75}, {0.0, 1.0}}, {{1.0, 0.0}, {0.25, 0.25}}}},
      {"train_2",
       {{{5.0 / 8, 5.0 / 8}, {3.0 / 8, 1.0}}, {{1.0, 3.0 / 8}, {0.0, 0.0}}}},
      {"train_3", {{{1.0, 0.5}, {0.0, 0.0}}, {{0.0, 0.0}, {0.2, 1.0}}}},
      {"train_4",
       {{{0.0, 1.0}, {1.0, 2.0 / 3}}, {{1.0 / 3, 0.0}, {2.0 / 3, 1.0 / 3}}}},
  };
  return *lib;
}

std::vector<std::vector<double>> ParseMatrix(const nlohmann::json& j,
                                             const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
    throw std::invalid_argument(std::string("game file: missing matrix ") +
                                key);
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) {
      throw std::invalid_argument(std::string("game file: ") + key +
                                  " rows must be arrays");
    }
    std::vector<double> values;
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw std::invalid_argument(std::string("game file: ") + key +
                                    " entries must be numbers");
      }
      values.push_back(v.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& TestGameNames() {
  static const auto* names = new std::vector<std::string>{
      "sym_winwin",     "asym_winwin",     "sym_biased", "asym_biased",
      "sym_secondbest", "asym_secondbest", "sym_unfair", "asym_unfair",
      "sym_inferior",   "asym_inferior",   "asym_cyclic"};
  return *names;
}

const std::vector<std::string>& TrainingGameNames() {
  static const auto* names =
      new std::vector<std::string>{"train_1", "train_2", "train_3", "train_4"};
  return *names;
}

const std::vector<std::string>& BuiltinGameNames() {
  static const auto* names = [] {
    auto* all = new std::vector<std::string>(TestGameNames());
    all->insert(all->end(), TrainingGameNames().begin(),
                TrainingGameNames().end());
    all->push_back("chicken");
    return all;
  }();
  return *names;
}

BimatrixGame BuiltinGame(std::string_view name) {
  const auto& lib = Library();
  auto it = lib.find(name);
  if (it == lib.end()) {
    throw std::invalid_argument("unknown game '" + std::string(name) + "'");
  }
  return FromCells(it->first, it->second);
}

BimatrixGame GameFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("game file: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("game file: not an object");
  const std::string name =
      j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                  : "custom";
  return BimatrixGame(name, Matrix::FromRows(ParseMatrix(j, "R1")),
                      Matrix::FromRows(ParseMatrix(j, "R2")));
}

BimatrixGame LoadGame(std::string_view name_or_path) {
  if (Library().count(name_or_path) > 0) return BuiltinGame(name_or_path);
  std::ifstream in{std::string(name_or_path)};
  if (!in) {
    throw std::invalid_argument("unknown game '" + std::string(name_or_path) +
                                "' (not a built-in name or readable file)");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return GameFromJson(buffer.str());
}

std::string GameToJson(const BimatrixGame& game) {
  nlohmann::json j;
  j["name"] = game.name();
  j["R1"] = game.rewards(Player::kOne).ToRows();
  j["R2"] = game.rewards(Player::kTwo).ToRows();
  return j.dump();
}

}  // namespace laff

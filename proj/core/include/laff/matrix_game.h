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

#ifndef LAFF_CORE_MATRIX_GAME_H_
#define LAFF_CORE_MATRIX_GAME_H_

#include <span>
#include <string>
#include <vector>

namespace laff {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  // Builds from nested rows; all rows must have equal length.
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return data_[r * cols_ + c]; }
  double& operator()(int r, int c) { return data_[r * cols_ + c]; }

  Matrix Transposed() const;
  double MinEntry() const;
  double MaxEntry() const;
  std::vector<std::vector<double>> ToRows() const;

  bool operator==(const Matrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

enum class Player { kOne = 1, kTwo = 2 };

// Probability vector over a player's actions.
struct MixedStrategy {
  std::vector<double> probs;

  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int size() const { return static_cast<int>(probs.size()); }
  // Nonnegative entries summing to one within `tol`.
  bool IsValid(double tol = 1e-9) const;
};

// A two-player stage game with rewards in [0, 1]. Player 1 picks rows,
// player 2 picks columns; r1(i, j) and r2(i, j) are their rewards.
class BimatrixGame {
 public:
  // Throws std::invalid_argument on shape mismatch, empty matrices or
  // entries outside [0, 1].
  BimatrixGame(std::string name, Matrix r1, Matrix r2);

  const std::string& name() const { return name_; }
  int num_actions(Player p) const {
    return p == Player::kOne ? r1_.rows() : r1_.cols();
  }
  int n1() const { return r1_.rows(); }
  int n2() const { return r1_.cols(); }
  const Matrix& rewards(Player p) const {
    return p == Player::kOne ? r1_ : r2_;
  }
  double reward(Player p, int a1, int a2) const {
    return p == Player::kOne ? r1_(a1, a2) : r2_(a1, a2);
  }

  // The same game seen from player 2's seat: rows become player 2's actions
  // and "player 1" rewards become player 2's.
  BimatrixGame Swapped() const;

  // True when swapping the players leaves the game unchanged (R2 = R1^T).
  bool IsSymmetric(double tol = 1e-12) const;

 private:
  std::string name_;
  Matrix r1_;
  Matrix r2_;
};

struct ZeroSumSolution {
  double value = 0.0;
  MixedStrategy strategy;
};

// Maximin value of a row player maximizing over `payoff` against a column
// player minimizing it, and an optimal row strategy.
ZeroSumSolution SolveMaximin(const Matrix& payoff);

// The player's security value max_v min_w of its own reward matrix, with the
// maximin strategy over that player's own actions.
ZeroSumSolution SecurityValue(const BimatrixGame& game, Player player);

// Player 1's strategy minimizing player 2's best-response reward. The value
// equals player 2's security value.
ZeroSumSolution PunishmentStrategy(const BimatrixGame& game);

// s1^T R^(player) s2. Throws std::invalid_argument on dimension mismatch.
double ExpectedReward(const BimatrixGame& game, const MixedStrategy& s1,
                      const MixedStrategy& s2, Player player);

}  // namespace laff

#endif  // LAFF_CORE_MATRIX_GAME_H_

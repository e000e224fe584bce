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

#include "laff/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace laff {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("Matrix: negative dimension");
  }
}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("Matrix: ragged rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::MinEntry() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Matrix::MaxEntry() const {
  return *std::max_element(data_.begin(), data_.end());
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  MixedStrategy s{std::vector<double>(num_actions, 0.0)};
  s.probs.at(action) = 1.0;
  return s;
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy{std::vector<double>(num_actions, 1.0 / num_actions)};
}

bool MixedStrategy::IsValid(double tol) const {
  if (probs.empty()) return false;
  double sum = 0.0;
  for (double p : probs) {
    if (p < -tol) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= tol;
}

BimatrixGame::BimatrixGame(std::string name, Matrix r1, Matrix r2)
    : name_(std::move(name)), r1_(std::move(r1)), r2_(std::move(r2)) {
  if (r1_.rows() < 1 || r1_.cols() < 1) {
    throw std::invalid_argument("game '" + name_ + "': empty reward matrix");
  }
  if (r1_.rows() != r2_.rows() || r1_.cols() != r2_.cols()) {
    throw std::invalid_argument("game '" + name_ +
                                "': reward matrices differ in shape");
  }
  for (const Matrix* m : {&r1_, &r2_}) {
    for (int i = 0; i < m->rows(); ++i) {
      for (int j = 0; j < m->cols(); ++j) {
        const double v = (*m)(i, j);
        if (!(v >= 0.0 && v <= 1.0)) {
          throw std::invalid_argument("game '" + name_ +
                                      "': reward outside [0,1]");
        }
      }
    }
  }
}

BimatrixGame BimatrixGame::Swapped() const {
  return BimatrixGame(name_, r2_.Transposed(), r1_.Transposed());
}

bool BimatrixGame::IsSymmetric(double tol) const {
  if (n1() != n2()) return false;
  for (int i = 0; i < n1(); ++i) {
    for (int j = 0; j < n2(); ++j) {
      if (std::abs(r2_(i, j) - r1_(j, i)) > tol) return false;
    }
  }
  return true;
}

namespace {

constexpr double kPivotTol = 1e-12;

// Solves max 1^T y s.t. A y <= 1, y >= 0 for a strictly positive A with a
// dense tableau and Bland's rule. Returns the row duals (the shadow prices of
// the <= constraints) and the optimal objective.
std::pair<std::vector<double>, double> SolvePositiveCovering(const Matrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  const int width = n + m + 1;  // structural, slack, rhs
  std::vector<std::vector<double>> tab(m + 1, std::vector<double>(width, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = a(i, j);
    tab[i][n + i] = 1.0;
    tab[i][width - 1] = 1.0;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) tab[m][j] = -1.0;

  const int max_iters = 50 * (n + m) + 1000;
  for (int iter = 0; iter < max_iters; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (tab[m][j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      std::vector<double> duals(m);
      for (int i = 0; i < m; ++i) duals[i] = std::max(0.0, tab[m][n + i]);
      return {duals, tab[m][width - 1]};
    }
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] > kPivotTol) {
        const double ratio = tab[i][width - 1] / tab[i][enter];
        if (ratio < best_ratio - kPivotTol ||
            (ratio <= best_ratio + kPivotTol && leave >= 0 &&
             basis[i] < basis[leave])) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
    }
    if (leave < 0) {
      // Cannot happen with A > 0: every column is bounded by the rows.
      throw std::runtime_error("simplex: unbounded covering program");
    }
    const double pivot = tab[leave][enter];
    for (double& v : tab[leave]) v /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double factor = tab[i][enter];
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
  }
  throw std::runtime_error("simplex: iteration limit reached");
}

}  // namespace

ZeroSumSolution SolveMaximin(const Matrix& payoff) {
  const int m = payoff.rows();
  const int n = payoff.cols();
  if (m < 1 || n < 1) throw std::invalid_argument("SolveMaximin: empty matrix");

  if (m == 1) {
    double v = payoff(0, 0);
    for (int j = 1; j < n; ++j) v = std::min(v, payoff(0, j));
    return {v, MixedStrategy::Pure(1, 0)};
  }
  if (n == 1) {
    int best = 0;
    for (int i = 1; i < m; ++i) {
      if (payoff(i, 0) > payoff(best, 0)) best = i;
    }
    return {payoff(best, 0), MixedStrategy::Pure(m, best)};
  }

  // Shift so every entry is at least one; the value shifts by the same amount.
  const double shift = 1.0 - payoff.MinEntry();
  Matrix shifted(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) shifted(i, j) = payoff(i, j) + shift;
  }
  auto [duals, objective] = SolvePositiveCovering(shifted);
  const double dual_sum = std::accumulate(duals.begin(), duals.end(), 0.0);
  MixedStrategy strategy{std::vector<double>(m)};
  for (int i = 0; i < m; ++i) strategy.probs[i] = duals[i] / dual_sum;

  // Report the guaranteed payoff of the returned strategy so value and
  // strategy are mutually consistent to rounding.
  double guaranteed = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < m; ++i) col += strategy.probs[i] * payoff(i, j);
    guaranteed = std::min(guaranteed, col);
  }
  const double lp_value = 1.0 / objective - shift;
  return {std::abs(guaranteed - lp_value) < 1e-9 ? guaranteed : lp_value,
          std::move(strategy)};
}

ZeroSumSolution SecurityValue(const BimatrixGame& game, Player player) {
  if (player == Player::kOne) return SolveMaximin(game.rewards(Player::kOne));
  return SolveMaximin(game.rewards(Player::kTwo).Transposed());
}

ZeroSumSolution PunishmentStrategy(const BimatrixGame& game) {
  const Matrix& r2 = game.rewards(Player::kTwo);
  Matrix negated(r2.rows(), r2.cols());
  for (int i = 0; i < r2.rows(); ++i) {
    for (int j = 0; j < r2.cols(); ++j) negated(i, j) = -r2(i, j);
  }
  ZeroSumSolution sol = SolveMaximin(negated);
  sol.value = -sol.value;
  return sol;
}

double ExpectedReward(const BimatrixGame& game, const MixedStrategy& s1,
                      const MixedStrategy& s2, Player player) {
  if (s1.size() != game.n1() || s2.size() != game.n2()) {
    throw std::invalid_argument("ExpectedReward: strategy dimension mismatch");
  }
  const Matrix& r = game.rewards(player);
  double total = 0.0;
  for (int i = 0; i < game.n1(); ++i) {
    if (s1.probs[i] == 0.0) continue;
    for (int j = 0; j < game.n2(); ++j) {
      total += s1.probs[i] * s2.probs[j] * r(i, j);
    }
  }
  return total;
}

}  // namespace laff

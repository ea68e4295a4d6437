// Copyright 2026 The uavplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uavplan/simplex.hpp"

#include <vector>

namespace uavplan {

namespace {
constexpr double kEps = 1e-10;
}

SimplexResult simplex_max(const Eigen::VectorXd &c, const Eigen::MatrixXd &A,
                          const Eigen::VectorXd &b, int max_iters) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());

  // Tableau rows 0..m-1: [A | I | b]; row m: [-c | 0 | 0].
  Eigen::MatrixXd T(m + 1, n + m + 1);
  T.setZero();
  T.block(0, 0, m, n) = A;
  T.block(0, n, m, m).setIdentity();
  T.col(n + m).head(m) = b;
  T.row(m).head(n) = -c.transpose();

  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

  SimplexResult res;
  int stall = 0;
  double last_obj = 0.0;
  for (res.iterations = 0; res.iterations < max_iters; ++res.iterations) {
    // Pricing. Dantzig normally; Bland once the objective stalls, which
    // guarantees termination on degenerate schedules.
    const bool bland = stall > 2 * (m + n);
    int col = -1;
    double best = -kEps;
    for (int j = 0; j < n + m; ++j) {
      const double r = T(m, j);
      if (r < -kEps) {
        if (bland) {
          col = j;
          break;
        }
        if (r < best) {
          best = r;
          col = j;
        }
      }
    }
    if (col < 0) break;  // optimal

    int row = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = T(i, col);
      if (a > kEps) {
        const double ratio = T(i, n + m) / a;
        if (row < 0 || ratio < best_ratio - kEps ||
            (bland && ratio < best_ratio + kEps &&
             basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(row)])) {
          best_ratio = ratio;
          row = i;
        }
      }
    }
    if (row < 0) {
      res.status = SimplexResult::kUnbounded;
      return res;
    }

    // Pivot.
    T.row(row) /= T(row, col);
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      const double f = T(i, col);
      if (f != 0.0) T.row(i) -= f * T.row(row);
    }
    basis[static_cast<size_t>(row)] = col;

    const double obj = T(m, n + m);
    stall = (obj > last_obj + kEps) ? 0 : stall + 1;
    last_obj = obj;
  }

  if (res.iterations >= max_iters) {
    res.status = SimplexResult::kIterLimit;
    return res;
  }

  res.status = SimplexResult::kOptimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<size_t>(i)] < n)
      res.x[basis[static_cast<size_t>(i)]] = T(i, n + m);
  res.value = T(m, n + m);
  return res;
}

}  // namespace uavplan

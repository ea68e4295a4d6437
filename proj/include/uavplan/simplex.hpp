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

#pragma once

#include <Eigen/Dense>

namespace uavplan {

// Dense primal simplex for the scheduling LPs:
//   max c'x  s.t.  A x <= b,  x >= 0,  with b >= 0
// (slack basis is a valid start). Dantzig pricing with a Bland fallback after
// stalling. Small problems only; this is deliberately not a general LP solver.
struct SimplexResult {
  enum Status { kOptimal, kUnbounded, kIterLimit } status = kOptimal;
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

SimplexResult simplex_max(const Eigen::VectorXd &c, const Eigen::MatrixXd &A,
                          const Eigen::VectorXd &b, int max_iters = 20000);

}  // namespace uavplan

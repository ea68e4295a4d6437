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

#include "uavplan/conic.hpp"

namespace uavplan::conic {

// Bundled homogeneous self-dual interior-point solver for
//   min c'x  s.t.  Ax = b,  Gx + s = h,  s in K,
// K a product of the nonnegative orthant and small second-order cones.
// Nesterov-Todd scaling, Mehrotra predictor-corrector, sparse LDLT on the
// quasi-definite KKT system with static regularization and iterative
// refinement against the unregularized matrix. Ruiz equilibration
// preconditions the data; final status is classified from residuals
// recomputed on the original data.
class IpmSolver final : public SolverBackend {
 public:
  ConicSolution solve(const StandardForm &sf,
                      const SolverSettings &settings) const override;
};

}  // namespace uavplan::conic

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

#include <cstdint>
#include <string>
#include <vector>

#include "uavplan/sca.hpp"
#include "uavplan/wind.hpp"

namespace uavplan {

struct SaaConfig {
  int samples = 100;       // S
  std::uint64_t seed = 1;  // path i drawn with seed + i
  double eps1 = 1.0;       // start-velocity expectation tolerance, m/s
  double eps2 = 1.0;       // end-velocity expectation tolerance, m/s
};

// Reference plan the online phase follows. Ground-velocity parameterized;
// airspeed plan is v_e minus the mean wind.
struct OfflinePlan {
  std::vector<Vec2> q;        // N+2
  std::vector<Vec2> v_e;      // N+2
  Eigen::MatrixXd tau;        // (N+1) x K, row n = slot n+1
  Eigen::MatrixXd rate_bps;   // (N+1) x K, planned rate for slot n+1
  Eigen::MatrixXd remaining;  // (N+2) x K, row n = bits still planned after
                              // the first n slots; row N+1 is zero
  WindModel wind;
  double slot_s = 1.0;
  double objective_J = 0.0;   // SP objective (lower bound when sigma_f > 0)
  double energy_J = 0.0;      // mean-wind propulsion energy of the plan
  int saa_samples = 0;
  std::uint64_t saa_seed = 0;
  std::string source;         // "sp" or "fixed"

  int n_interior() const { return static_cast<int>(q.size()) - 2; }
  int n_buoys() const { return static_cast<int>(tau.cols()); }
  Vec2 v_air(int n) const { return v_e[static_cast<size_t>(n)] - wind.mean; }
};

// Suffix sums of planned collection: row n holds, per buoy, the bits the plan
// still collects in slots n+1..N+1.
Eigen::MatrixXd remaining_volume_table(const Eigen::MatrixXd &tau,
                                       const Eigen::MatrixXd &rate_bps);

OfflinePlan plan_from_fixed(const FixedWindPlan &plan, const P22Spec &spec,
                            const WindModel &wind);

struct P32Vars {
  int q = 0;      // q + 2n, n = 0..N+1
  int ve = 0;     // ground velocity, same layout
  int tau = 0;    // tau + n*K + k
  int A = 0;
  int delta = 0;  // delta + (n-1), n = 1..N
  int n_interior = 0;
  int n_buoys = 0;
};

struct BuiltP32 {
  conic::Program prog;
  P32Vars vars;
};

// SAA local point: ground-velocity iterate plus volume slacks.
struct SpPoint {
  std::vector<Vec2> q;    // N+2
  std::vector<Vec2> v_e;  // N+2
  Eigen::MatrixXd A;      // (N+1) x K
};

// spec.wind must hold the mean wind; sample paths carry the randomness.
BuiltP32 build_p32(const P22Spec &spec, const SpPoint &lp,
                   const std::vector<WindPath> &samples, double eps1,
                   double eps2);

struct SpSolveResult {
  OfflinePlan plan;
  ScaTrace trace;
};

// SCA over the SAA program, seeded by a fixed-wind plan at the mean wind.
// Sample paths are drawn once and held fixed across iterations.
SpSolveResult solve_offline_sp(const P22Spec &spec, const WindModel &wind,
                               const SaaConfig &cfg, const FixedWindPlan &init,
                               const ScaSettings &opts = {});

// Mean-wind trajectory and true propulsion energy implied by a ground plan.
Trajectory plan_trajectory(const OfflinePlan &plan);

void save_plan(const OfflinePlan &plan, const std::string &path);
OfflinePlan load_plan(const std::string &path);

}  // namespace uavplan

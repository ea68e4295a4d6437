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

#include "uavplan/offline_sp.hpp"

namespace uavplan {

struct OnlineState {
  int slot = 1;                 // next slot to decide, 1..N+1
  Vec2 q_prev;                  // q[slot-1]
  Vec2 ve_prev;                 // ground velocity at slot-1
  Vec2 wind_prev;               // measured wind at slot-1
  Eigen::VectorXd q_acc_bits;   // per buoy, collected before this slot
  double energy_J = 0.0;
};

enum class StepStatus {
  kOk,
  kRelaxedPath,      // waypoint-deviation bound dropped
  kRelaxedVelocity,  // ground-velocity bound dropped too
  kFallback,         // airspeed held, schedule-only solve
};

const char *to_string(StepStatus s);

struct StepDecision {
  Vec2 v_e;
  Eigen::VectorXd tau_s;    // per buoy
  double delta = 0.0;
  double zeta_bits = 0.0;
  double energy_J = 0.0;    // full slot cost at realized airspeeds
  StepStatus status = StepStatus::kOk;
};

struct P42Vars {
  int ve = 0;
  int tau = 0;   // tau + k
  int delta = 0;
  int zeta = 0;  // scaled by bandwidth: bits = zeta * B
  int n_buoys = 0;
};

struct BuiltP42 {
  conic::Program prog;
  P42Vars vars;
};

struct P42Options {
  bool bound_path = true;      // keep the waypoint-deviation cone
  bool bound_velocity = true;  // keep the ground-velocity-deviation cone
  bool pin_ve = false;         // fallback: v_e fixed, schedule only
  Vec2 ve_pin = Vec2::Zero();
};

BuiltP42 build_p42(const OnlineState &state, const OfflinePlan &plan,
                   const Scenario &sc, const Vec2 &wind_now,
                   const P42Options &opts = {});

StepDecision online_step(OnlineState &state, const OfflinePlan &plan,
                         const Scenario &sc, const Vec2 &wind_now,
                         const conic::SolverSettings &solver = {});

struct SlotRow {
  int slot = 0;
  Vec2 q;        // waypoint reached at the end of the slot
  Vec2 v_e;
  Vec2 v_air;
  Vec2 wind;
  Eigen::VectorXd tau_s;
  double zeta_bits = 0.0;
  double energy_J = 0.0;
  StepStatus status = StepStatus::kOk;
};

struct RunReport {
  std::vector<SlotRow> rows;
  Trajectory traj;              // realized
  double energy_J = 0.0;        // full mission, kinetic delta included
  Eigen::VectorXd collected_bits;
  Eigen::VectorXd shortfall_bits;
  int relaxed_steps = 0;
  int unrecovered_steps = 0;
  std::vector<std::string> violations;  // hard-limit breaches at realized values
  // same wind path, offline ground plan replayed without adaptation
  double baseline_energy_J = 0.0;
  int baseline_violations = 0;
  std::uint64_t seed = 0;
};

RunReport run_ho2(const Scenario &sc, const OfflinePlan &plan,
                  std::uint64_t seed,
                  const conic::SolverSettings &solver = {});

struct EnsembleRow {
  std::uint64_t seed = 0;
  double energy_J = 0.0;
  double baseline_energy_J = 0.0;
  double shortfall_bits = 0.0;  // summed over buoys
  int relaxed_steps = 0;
  int unrecovered_steps = 0;
  int violations = 0;
};

struct EnsembleSummary {
  std::vector<EnsembleRow> rows;
  double mean_energy_J = 0.0;
  double stddev_energy_J = 0.0;
  double mean_baseline_J = 0.0;
  double max_shortfall_bits = 0.0;
};

EnsembleSummary run_ensemble(const Scenario &sc, const OfflinePlan &plan,
                             std::uint64_t seed_lo, std::uint64_t seed_hi,
                             int jobs = 1,
                             const conic::SolverSettings &solver = {});

}  // namespace uavplan

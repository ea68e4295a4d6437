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

#include "uavplan/sca.hpp"

namespace uavplan {

enum class Pattern { kCircular, kEight };

const char *to_string(Pattern p);

struct PatternParams {
  Pattern pattern = Pattern::kCircular;
  double radius_m = 0.0;
  double period_s = 0.0;     // T0
  double theta_deg = 0.0;    // 8-shape axis orientation, ignored for circles
  double speed_mps = 0.0;    // constant ground speed V
  Vec2 center = Vec2::Zero();
};

// Closed constant-ground-speed waypoint loop (N+2 points, last = first).
// Circle: 2*pi*r = V*T0. Eight: two tangent circles, 4*pi*r = V*T0, lobe
// centers at center +- r * axis(theta).
std::vector<Vec2> pattern_waypoints(const PatternParams &p, int n_interior);
std::vector<Vec2> pattern_velocities(const PatternParams &p, int n_interior);

int laps_for(double total_bits, double q0_bits);  // ceil partition

struct PatternCandidate {
  PatternParams params;
  int n_interior = 0;
  double slot_s = 0.0;
  bool feasible = false;
  double energy_J = 0.0;   // constant-speed loop, centripetal term included
  double lp_margin = 0.0;  // feasibility LP t*, meaningful when limits pass
  std::string reject;
};

struct InitSearchOptions {
  double t0_lo_s = 20.0;
  double t0_factor = 1.25;
  int t0_count = 14;       // l1
  double r_lo_m = 50.0;
  int r_count = 12;        // l2
  double theta_step_deg = 15.0;
  int n_slot_cap = 100;    // slot count cap; slot length stretches above it
  double theta_fixed_deg = -1.0;  // >= 0 pins the 8-shape orientation
};

struct InitialTrajectory {
  PatternParams params;
  int n_interior = 0;
  double slot_s = 0.0;
  LocalPoint point;
  CommSchedule schedule;
  double energy_J = 0.0;
  std::vector<PatternCandidate> trace;
};

// Constant-speed pattern search (outer grid on T0, inner on r, and theta for
// 8-shapes). Throws InfeasibleError with tightest-margin diagnostics when no
// candidate passes. q0_bits is the per-lap target per buoy.
InitialTrajectory initial_trajectory(const P22Spec &base, double q0_bits,
                                     Pattern pattern,
                                     const InitSearchOptions &opts = {});

struct FineTuneRow {
  double period_s = 0.0;
  double theta_deg = 0.0;
  bool feasible = false;
  double energy_J = 0.0;
};

struct CyclicalPlan {
  int laps = 1;
  double q0_bits = 0.0;
  FixedWindPlan lap;       // optimized closed lap
  P22Spec lap_spec;
  InitialTrajectory init;
  double lap_energy_J = 0.0;
  double total_energy_J = 0.0;  // laps * lap_energy_J
  std::vector<FineTuneRow> fine_trace;
};

struct CyclicalOptions {
  InitSearchOptions init;
  ScaSettings sca;
  int l0 = 12;             // fine-tune SCA call cap
  bool fine_tune = true;
};

// Pass laps > 0 to fix M, else it is derived from q0_bits. base supplies
// buoys, full targets, channel/energy/limits, wind, and base slot length.
CyclicalPlan optimize_cyclical(const P22Spec &base, Pattern pattern, int laps,
                               double q0_bits,
                               const CyclicalOptions &opts = {});

}  // namespace uavplan

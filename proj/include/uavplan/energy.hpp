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

#include <vector>

#include "uavplan/scenario.hpp"

namespace uavplan {

// Slotted flight: waypoints 0..N+1 (N+2 entries in q/v_e/v_air/wind),
// accelerations 0..N (N+1 entries). Slot n spans waypoints n-1 -> n.
struct Trajectory {
  std::vector<Vec2> q;      // position
  std::vector<Vec2> v_e;    // ground velocity
  std::vector<Vec2> v_air;  // airspeed = v_e - wind
  std::vector<Vec2> a;      // airspeed acceleration
  std::vector<Vec2> wind;   // wind the plan was built against
  double slot_s = 1.0;

  int n_waypoints() const { return static_cast<int>(q.size()); }
  int n_interior() const { return n_waypoints() - 2; }  // N
};

struct EnergyBreakdown {
  double cubic_J = 0.0;    // sum of w1*|v|^3 * T_s
  double induced_J = 0.0;  // sum of (w2/|v|)(1+|a|^2/g^2) * T_s
  double delta_J = 0.0;    // kinetic-energy change between endpoints
  double total_J = 0.0;
  std::vector<double> power_W;  // per interior waypoint 1..N
};

// Instantaneous propulsion power for level flight at airspeed v with
// acceleration a. Throws InputError below 0.1 m/s: the model's induced term
// diverges there and a silent clamp would hide an infeasible plan.
double propulsion_power(const Vec2 &v_air, const Vec2 &a, const EnergyParams &p);

// Analytic gradient of propulsion_power, for validation against finite
// differences. Returned as (d/dv, d/da).
void power_gradient(const Vec2 &v_air, const Vec2 &a, const EnergyParams &p,
                    Vec2 &dv, Vec2 &da);

// Propulsion energy over interior waypoints 1..N plus the kinetic delta
// 0.5*m*(|v[N+1]|^2 - |v[0]|^2). The delta is reported separately: it nets to
// zero on closed laps and equal-speed missions but not in general.
EnergyBreakdown trajectory_energy(const Trajectory &t, const EnergyParams &p);

double kinetic_energy_delta(const Vec2 &v_first, const Vec2 &v_last,
                            const EnergyParams &p);

// Speed minimizing steady-flight power w1*v^3 + w2/v.
double optimal_loiter_speed(const EnergyParams &p);

}  // namespace uavplan

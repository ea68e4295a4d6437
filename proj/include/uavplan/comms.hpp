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
#include <vector>

#include "uavplan/energy.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

// Uplink spectral efficiency [bits/s/Hz] from a buoy to the UAV overhead
// position q: log2(1 + gamma0 / (H^2 + |q - b|^2)).
double spectral_efficiency(const Vec2 &q, const Vec2 &buoy,
                           const ChannelParams &ch);

// Rate in bits/s (bandwidth times spectral efficiency).
double link_rate(const Vec2 &q, const Vec2 &buoy, const ChannelParams &ch);

// Rates precomputed at waypoints 0..N for each buoy; slot n (1..N+1) transmits
// at its leading waypoint n-1, so r(n-1, k) is the rate slot n sees.
struct RateTable {
  Eigen::MatrixXd r;  // (N+1) x K, bits/s; row n = waypoint n
  int n_waypoints() const { return static_cast<int>(r.rows()); }
  int n_buoys() const { return static_cast<int>(r.cols()); }
};

RateTable build_rate_table(const std::vector<Vec2> &waypoints,
                           const std::vector<Buoy> &buoys,
                           const ChannelParams &ch);

// TDMA schedule: tau(n-1, k) is buoy k's share of slot n, n = 1..N+1.
struct CommSchedule {
  Eigen::MatrixXd tau;  // (N+1) x K, seconds
  int n_slots() const { return static_cast<int>(tau.rows()); }
  int n_buoys() const { return static_cast<int>(tau.cols()); }
};

// Per-buoy collected bits: Q_k = sum_n tau(n-1,k) * r(n-1,k).
Eigen::VectorXd collected_volume(const CommSchedule &s, const RateTable &r);

// Max-min collection-ratio LP:
//   max t  s.t.  sum_n tau_k[n] r_k[n] >= t * target_k,  sum_k tau_k[n] <= T_s
// Feasible iff t* >= 1. On success the returned schedule is the LP optimum
// scaled by 1/t*, which meets every target exactly at the binding buoy and
// uses proportionally less airtime elsewhere. Buoys with target 0 are skipped.
struct FeasibilityResult {
  bool feasible = false;
  double margin = 0.0;  // t*, the achievable min ratio
  CommSchedule schedule;
};

FeasibilityResult feasibility_lp(const RateTable &rates,
                                 const Eigen::VectorXd &targets_bits,
                                 double slot_s);

// Brute-force check of a schedule against TDMA, nonnegativity and the targets,
// all with 1e-9 slack. Independent of the LP path; used as its oracle.
struct ScheduleCheck {
  bool ok = false;
  double worst_tdma = 0.0;      // max over slots of (sum_k tau - T_s)
  double worst_negative = 0.0;  // most negative tau entry
  Eigen::VectorXd collected;    // per-buoy bits
  Eigen::VectorXd shortfall;    // max(0, target - collected)
};

ScheduleCheck check_schedule(const CommSchedule &s, const RateTable &r,
                             const Eigen::VectorXd &targets_bits, double slot_s);

}  // namespace uavplan

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

#include <string>
#include <vector>

#include "uavplan/comms.hpp"
#include "uavplan/conic.hpp"
#include "uavplan/energy.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

// Affine lower bound of ||v||^2 at v_ref. Touches at v = v_ref with matching
// gradient 2 v_ref; below ||v||^2 everywhere else.
double taylor_speed_lb(const Vec2 &v, const Vec2 &v_ref);

// Concave quadratic lower bound of the spectral efficiency seen from q:
//   rate_lb(q) = c0 - beta * ||q - buoy||^2   [bits/s/Hz]
// c0 and beta are picked so the bound touches the true rate at q_ref.
struct RateBound {
  double c0 = 0.0;
  double beta = 0.0;
  double eval(const Vec2 &q, const Vec2 &buoy) const {
    return c0 - beta * (q - buoy).squaredNorm();
  }
};
RateBound taylor_rate_lb(const Vec2 &q_ref, const Vec2 &buoy,
                         const ChannelParams &ch);

// Everything one fixed-wind trajectory program needs. Decoupled from Scenario
// so the cyclical planner can vary horizon, slot length and per-lap targets.
struct P22Spec {
  int n_interior = 0;  // N; waypoints 0..N+1, slots 1..N+1
  double slot_s = 1.0;
  Vec2 wind = Vec2::Zero();
  bool periodic = false;  // lap closure q[0]=q[N+1], v[0]=v[N+1]
  Endpoints endpoints;    // used when !periodic
  std::vector<Vec2> buoy_pos;
  std::vector<double> target_bits;
  ChannelParams ch;
  EnergyParams energy;
  FlightLimits limits;

  int n_buoys() const { return static_cast<int>(buoy_pos.size()); }
  double v_min() const { return v_min_for(limits, wind.norm()); }
  double horizon_s() const { return (n_interior + 1) * slot_s; }
};

P22Spec p22_from_scenario(const Scenario &sc, const Vec2 &wind,
                          int n_interior, bool periodic = false);

// SCA local point: positions, airspeeds, and the collected-volume slacks
// A(n,k) = sqrt(tau * spectral_efficiency) for slot n+1.
struct LocalPoint {
  std::vector<Vec2> q;      // N+2
  std::vector<Vec2> v_air;  // N+2
  Eigen::MatrixXd A;        // (N+1) x K

  int n_interior() const { return static_cast<int>(q.size()) - 2; }
};

// Straight path q0 -> qF at constant ground speed, airspeed = ground - wind,
// schedule from the max-margin feasibility LP. May be infeasible at itself;
// callers screen with validate_local_point.
LocalPoint straight_line_init(const P22Spec &spec);

// A from a schedule: A(n,k) = sqrt(tau(n,k) * se(n,k)).
Eigen::MatrixXd volume_slacks(const Eigen::MatrixXd &tau,
                              const RateTable &rates, double bandwidth_hz);

// Empty string when lp is feasible for the convexified program built at lp
// itself; otherwise the tag of a violated constraint.
std::string validate_local_point(const P22Spec &spec, const LocalPoint &lp);

struct P22Vars {
  int q = 0;      // q[n] at q + 2n, n = 0..N+1
  int v = 0;      // airspeed, same layout
  int a = 0;      // a[n] at a + 2n, n = 0..N
  int tau = 0;    // tau + n*K + k = slot n+1, buoy k
  int A = 0;      // same layout as tau
  int delta = 0;  // delta + (n-1), n = 1..N
  int n_interior = 0;
  int n_buoys = 0;
};

struct BuiltP22 {
  conic::Program prog;
  P22Vars vars;
};

BuiltP22 build_p22(const P22Spec &spec, const LocalPoint &lp);

LocalPoint extract_p22_point(const P22Vars &vars, const Eigen::VectorXd &x,
                             double bandwidth_hz);
Eigen::MatrixXd extract_p22_tau(const P22Vars &vars, const Eigen::VectorXd &x);

// True (non-surrogate) objective: Eq-style propulsion energy over interior
// waypoints, endpoint kinetic-energy delta excluded.
double p22_true_objective(const P22Spec &spec, const LocalPoint &lp);

struct ScaSettings {
  int max_iters = 50;
  double rel_decrease_tol = 1e-4;
  bool verbose = false;
  conic::SolverSettings solver;
};

struct ScaIterate {
  double objective_J = 0.0;
  double max_violation = 0.0;
};

struct ScaTrace {
  std::vector<ScaIterate> log;  // accepted iterates only; non-increasing
  bool converged = false;
  std::string stop_reason;
};

struct FixedWindPlan {
  Trajectory traj;
  CommSchedule schedule;
  EnergyBreakdown energy;  // full mission energy of the realized trajectory
  double objective_J = 0.0;  // interior-waypoint sum the SCA minimized
  ScaTrace trace;
  LocalPoint point;
};

// Validation of a plan against the true nonconvex constraints; tol is
// relative. Returns empty string when clean, else a description.
std::string validate_plan(const P22Spec &spec, const FixedWindPlan &plan,
                          double rel_tol = 1e-6);

FixedWindPlan sca_solve(const P22Spec &spec, const LocalPoint &init,
                        const ScaSettings &opts = {});

// Constant-ground-speed straight-line scheme: grid over slot counts, pick the
// feasible speed with least propulsion energy.
struct BenchmarkResult {
  bool feasible = false;
  double energy_J = 0.0;
  double ground_speed = 0.0;
  int n_interior = 0;
  Trajectory traj;
  CommSchedule schedule;
};

BenchmarkResult benchmark_straight(const P22Spec &base, int n_cap = 400);

// Scalar horizon search for chain-like flights: SCA at each candidate slot
// count near the benchmark optimum, keep the cheapest feasible plan.
struct ChainCandidate {
  int n_interior = 0;
  bool feasible = false;
  double energy_J = 0.0;
  std::string note;
};

struct ChainPlan {
  FixedWindPlan plan;
  P22Spec spec;  // with the winning horizon
  std::vector<ChainCandidate> trace;
};

struct ChainSearchOptions {
  int n_cap = 120;
  int n_candidates = 5;  // horizon grid size around the seed
  ScaSettings sca;
};

ChainPlan plan_chain(const P22Spec &base, const ChainSearchOptions &opts = {});

}  // namespace uavplan

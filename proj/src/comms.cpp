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

#include "uavplan/comms.hpp"

#include <cmath>
#include <limits>

#include "uavplan/simplex.hpp"

namespace uavplan {

double spectral_efficiency(const Vec2 &q, const Vec2 &buoy,
                           const ChannelParams &ch) {
  const double d2 = (q - buoy).squaredNorm();
  const double h2 = ch.altitude_m * ch.altitude_m;
  return std::log2(1.0 + ch.gamma0 / (h2 + d2));
}

double link_rate(const Vec2 &q, const Vec2 &buoy, const ChannelParams &ch) {
  return ch.bandwidth_hz * spectral_efficiency(q, buoy, ch);
}

RateTable build_rate_table(const std::vector<Vec2> &waypoints,
                           const std::vector<Buoy> &buoys,
                           const ChannelParams &ch) {
  RateTable t;
  t.r.resize(static_cast<Eigen::Index>(waypoints.size()),
             static_cast<Eigen::Index>(buoys.size()));
  for (size_t n = 0; n < waypoints.size(); ++n)
    for (size_t k = 0; k < buoys.size(); ++k)
      t.r(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) =
          link_rate(waypoints[n], buoys[k].position, ch);
  return t;
}

Eigen::VectorXd collected_volume(const CommSchedule &s, const RateTable &r) {
  if (s.tau.rows() != r.r.rows() || s.tau.cols() != r.r.cols())
    throw InputError("schedule and rate table dimensions disagree");
  return (s.tau.array() * r.r.array()).colwise().sum();
}

FeasibilityResult feasibility_lp(const RateTable &rates,
                                 const Eigen::VectorXd &targets_bits,
                                 double slot_s) {
  const int n_slots = rates.n_waypoints();
  const int n_buoys = rates.n_buoys();
  if (targets_bits.size() != n_buoys)
    throw InputError("targets and rate table dimensions disagree");

  FeasibilityResult out;
  out.schedule.tau = Eigen::MatrixXd::Zero(n_slots, n_buoys);

  std::vector<int> active;
  for (int k = 0; k < n_buoys; ++k)
    if (targets_bits[k] > 0.0) active.push_back(k);
  if (active.empty()) {
    out.feasible = true;
    out.margin = std::numeric_limits<double>::infinity();
    return out;
  }

  // Variables: tau flattened slot-major, then the ratio t.
  const int n_tau = n_slots * n_buoys;
  const int n_rows = static_cast<int>(active.size()) + n_slots;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_rows, n_tau + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n_rows);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_tau + 1);
  c[n_tau] = 1.0;

  int row = 0;
  for (int k : active) {
    for (int n = 0; n < n_slots; ++n) A(row, n * n_buoys + k) = -rates.r(n, k);
    A(row, n_tau) = targets_bits[k];
    b[row] = 0.0;
    ++row;
  }
  for (int n = 0; n < n_slots; ++n) {
    for (int k = 0; k < n_buoys; ++k) A(row, n * n_buoys + k) = 1.0;
    b[row] = slot_s;
    ++row;
  }

  const SimplexResult lp = simplex_max(c, A, b);
  if (lp.status == SimplexResult::kUnbounded)
    throw SolverError("feasibility LP unbounded (zero-target buoy slipped in)");
  if (lp.status == SimplexResult::kIterLimit)
    throw SolverError("feasibility LP hit its iteration limit");

  out.margin = lp.value;
  out.feasible = lp.value >= 1.0 - 1e-9;
  const double scale = out.feasible ? 1.0 / lp.value : 1.0;
  for (int n = 0; n < n_slots; ++n)
    for (int k = 0; k < n_buoys; ++k)
      out.schedule.tau(n, k) = scale * lp.x[n * n_buoys + k];
  return out;
}

ScheduleCheck check_schedule(const CommSchedule &s, const RateTable &r,
                             const Eigen::VectorXd &targets_bits,
                             double slot_s) {
  ScheduleCheck c;
  c.worst_tdma = (s.tau.rowwise().sum().array() - slot_s).maxCoeff();
  c.worst_negative = s.tau.minCoeff();
  c.collected = collected_volume(s, r);
  c.shortfall = (targets_bits - c.collected).cwiseMax(0.0);
  c.ok = c.worst_tdma <= 1e-9 && c.worst_negative >= -1e-9 &&
         c.shortfall.maxCoeff() <= 1e-9 * targets_bits.cwiseMax(1.0).maxCoeff();
  return c;
}

}  // namespace uavplan

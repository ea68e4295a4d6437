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

#include "uavplan/energy.hpp"

#include <cmath>
#include <sstream>

namespace uavplan {

namespace {
constexpr double kSpeedFloor = 0.1;  // m/s; induced power diverges below
}

double propulsion_power(const Vec2 &v_air, const Vec2 &a,
                        const EnergyParams &p) {
  const double speed = v_air.norm();
  if (speed < kSpeedFloor) {
    std::ostringstream os;
    os << "propulsion power undefined at airspeed " << speed
       << " m/s (fixed-wing model needs forward flight)";
    throw InputError(os.str());
  }
  const double g2 = p.gravity * p.gravity;
  return p.w1 * speed * speed * speed +
         (p.w2 / speed) * (1.0 + a.squaredNorm() / g2);
}

void power_gradient(const Vec2 &v_air, const Vec2 &a, const EnergyParams &p,
                    Vec2 &dv, Vec2 &da) {
  const double speed = v_air.norm();
  if (speed < kSpeedFloor)
    throw InputError("power gradient undefined near zero airspeed");
  const double g2 = p.gravity * p.gravity;
  const double induced = (p.w2 / speed) * (1.0 + a.squaredNorm() / g2);
  // d/dv: 3 w1 |v| v  -  induced * v / |v|^2
  dv = 3.0 * p.w1 * speed * v_air - (induced / (speed * speed)) * v_air;
  da = (2.0 * p.w2 / (speed * g2)) * a;
}

double kinetic_energy_delta(const Vec2 &v_first, const Vec2 &v_last,
                            const EnergyParams &p) {
  return 0.5 * p.mass_kg * (v_last.squaredNorm() - v_first.squaredNorm());
}

EnergyBreakdown trajectory_energy(const Trajectory &t, const EnergyParams &p) {
  const int n_wp = t.n_waypoints();
  if (n_wp < 2) throw InputError("trajectory needs at least two waypoints");
  if (t.v_air.size() != t.q.size())
    throw InputError("trajectory arrays disagree on waypoint count");
  if (static_cast<int>(t.a.size()) < n_wp - 1)
    throw InputError("trajectory is missing accelerations");

  EnergyBreakdown e;
  const double g2 = p.gravity * p.gravity;
  for (int n = 1; n <= t.n_interior(); ++n) {
    const Vec2 &v = t.v_air[static_cast<size_t>(n)];
    const Vec2 &a = t.a[static_cast<size_t>(n)];
    const double speed = v.norm();
    if (speed < kSpeedFloor) {
      std::ostringstream os;
      os << "waypoint " << n << ": airspeed " << speed << " m/s below model floor";
      throw InputError(os.str());
    }
    const double cubic = p.w1 * speed * speed * speed;
    const double induced = (p.w2 / speed) * (1.0 + a.squaredNorm() / g2);
    e.cubic_J += cubic * t.slot_s;
    e.induced_J += induced * t.slot_s;
    e.power_W.push_back(cubic + induced);
  }
  e.delta_J = kinetic_energy_delta(t.v_air.front(), t.v_air.back(), p);
  e.total_J = e.cubic_J + e.induced_J + e.delta_J;
  return e;
}

double optimal_loiter_speed(const EnergyParams &p) {
  // d/dv (w1 v^3 + w2 / v) = 0  =>  v = (w2 / (3 w1))^(1/4)
  return std::pow(p.w2 / (3.0 * p.w1), 0.25);
}

}  // namespace uavplan

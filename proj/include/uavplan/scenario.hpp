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

#include <optional>
#include <string>
#include <vector>

#include "uavplan/common.hpp"
#include "uavplan/wind.hpp"

namespace uavplan {

struct Buoy {
  int id = 0;
  Vec2 position{0.0, 0.0};
  double target_bits = 0.0;  // data volume to collect from this buoy
};

// Channel: rate = B * log2(1 + gamma0 / (H^2 + d^2)), d = horizontal distance.
// gamma0 is the lumped reference SNR at 1 m, stored linear; scenario files may
// give it in dB (ref_snr_db) and it is converted once at parse time.
struct ChannelParams {
  double bandwidth_hz = 1.0e6;
  double gamma0 = 1.0e7;
  double altitude_m = 100.0;
};

struct EnergyParams {
  double w1 = 9.26e-4;  // cubic (parasite) coefficient [W s^3/m^3]
  double w2 = 2250.0;   // induced coefficient [W m/s]
  double gravity = 9.8;
  double mass_kg = 10.0;  // only enters the kinetic-energy delta
};

struct FlightLimits {
  double v_max = 50.0;      // max airspeed [m/s]
  double stall_speed = 3.0; // absolute floor on airspeed [m/s]
  double a_max = 5.0;       // max acceleration [m/s^2]
};

// Minimum sustainable airspeed: the stall floor, raised to the local wind
// speed so the aircraft can always make headway against it.
double v_min_for(const FlightLimits &limits, double wind_speed);

struct Slotting {
  double slot_s = 1.0;  // slot length T_s [s]
  int n_slots = 100;    // default N when a command does not derive it
};

struct Endpoints {
  Vec2 q0{0.0, 0.0}, qF{0.0, 0.0};   // start / final position
  Vec2 v0{30.0, 0.0}, vF{30.0, 0.0}; // start / final airspeed vector
};

// Slack weights and online trust-region widths.
struct Tolerances {
  double eps1 = 1.0;  // start-airspeed relaxation [m/s]
  double eps2 = 1.0;  // final-airspeed relaxation [m/s]
  double xi_q = 3.0;  // online waypoint deviation [m]
  double xi_v = 0.2;  // online ground-velocity deviation [m/s]
  double w3 = 100.0;  // online throughput-slack weight [J/bit-ish, see docs]
};

// A fully validated problem instance. Immutable by convention: every solver
// takes `const Scenario &` and nothing mutates one after load/validate.
struct Scenario {
  std::string name = "scenario";
  std::vector<Buoy> buoys;
  ChannelParams channel;
  EnergyParams energy;
  FlightLimits limits;
  Slotting slotting;
  Endpoints endpoints;
  WindModel wind;
  Tolerances tolerances;

  int n_buoys() const { return static_cast<int>(buoys.size()); }
};

// What validation did: every defaulted field is echoed here so a run's
// effective configuration is auditable from its artifacts.
struct ValidationReport {
  std::vector<std::string> defaulted;  // "channel.bandwidth_hz = 1e+06"
  std::vector<std::string> warnings;
};

struct LoadedScenario {
  Scenario scenario;
  ValidationReport report;
};

// Parse + validate a scenario JSON file. Throws InputError naming the violated
// field on any malformed or inconsistent input.
LoadedScenario load_scenario(const std::string &path);
LoadedScenario parse_scenario(const std::string &json_text);

// Serialize with stable key order and full precision; load(save(s)) == s to
// 1e-9 relative on every numeric field.
std::string scenario_to_json(const Scenario &s);
void save_scenario(const Scenario &s, const std::string &path);

}  // namespace uavplan

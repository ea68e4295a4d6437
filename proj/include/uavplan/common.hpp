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
#include <stdexcept>
#include <string>

namespace uavplan {

using Vec2 = Eigen::Vector2d;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Rotate v by angle (radians, counterclockwise).
inline Vec2 rotate(const Vec2 &v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

// Base for all domain errors thrown by the library. The CLI maps subtypes to
// exit codes, so keep the taxonomy small.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : Error {  // bad file, bad field, bad argument
  using Error::Error;
};
struct InfeasibleError : Error {  // no plan exists under the given limits
  using Error::Error;
};
struct SolverError : Error {  // numerical failure inside a solve
  using Error::Error;
};

}  // namespace uavplan

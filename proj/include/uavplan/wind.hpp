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
#include <random>
#include <vector>

#include "uavplan/common.hpp"

namespace uavplan {

// First-order Gauss-Markov (AR(1)) wind process, per axis:
//   v' = mean + rho_c * (v - mean) + sigma_f * sqrt(1 - rho_c^2) * n,  n ~ N(0,1)
// Wide-sense stationary with per-axis stationary std exactly sigma_f and
// lag-1 autocorrelation rho_c. sigma_f = 0 degenerates to constant mean wind.
struct WindModel {
  Vec2 mean{0.0, 0.0};
  double sigma_f = 0.0;
  double rho_c = 0.5;
};

// Wind sampled at waypoints 0..N+1 of a slotted flight (length N+2).
struct WindPath {
  std::vector<Vec2> v;
  int size() const { return static_cast<int>(v.size()); }
  const Vec2 &operator[](int n) const { return v[static_cast<size_t>(n)]; }
};

// Deterministic gaussian stream: mt19937_64 + explicit Box-Muller so sampled
// paths are bit-identical across standard libraries (std::normal_distribution
// is not pinned by the standard).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1], u2 in [0,1)
    const double u1 = 1.0 - std::ldexp(static_cast<double>(gen_() >> 11), -53);
    const double u2 = std::ldexp(static_cast<double>(gen_() >> 11), -53);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// One AR(1) transition from current wind.
Vec2 wind_step(const WindModel &m, const Vec2 &current, GaussianStream &g);

// Sample a path of `length` waypoints; sample 0 is drawn from the stationary
// distribution so every path is a stationary-process window.
WindPath sample_path(const WindModel &m, int length, std::uint64_t seed);

// S independent paths for sample-average approximation; path i uses seed+i so
// sample sets are reproducible and extensible.
std::vector<WindPath> saa_samples(const WindModel &m, int length, int count,
                                  std::uint64_t seed);

// Mean over a sample set at each waypoint (length of first path).
std::vector<Vec2> sample_mean(const std::vector<WindPath> &paths);

}  // namespace uavplan

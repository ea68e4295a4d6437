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

#include "uavplan/wind.hpp"

#include <cmath>

namespace uavplan {

Vec2 wind_step(const WindModel &m, const Vec2 &current, GaussianStream &g) {
  const double drive = m.sigma_f * std::sqrt(1.0 - m.rho_c * m.rho_c);
  Vec2 next;
  // x first, then y: the draw order is part of the reproducibility contract.
  next.x() = m.mean.x() + m.rho_c * (current.x() - m.mean.x()) + drive * g.next();
  next.y() = m.mean.y() + m.rho_c * (current.y() - m.mean.y()) + drive * g.next();
  return next;
}

WindPath sample_path(const WindModel &m, int length, std::uint64_t seed) {
  WindPath path;
  if (length <= 0) return path;
  path.v.reserve(static_cast<size_t>(length));
  GaussianStream g(seed);
  // Stationary start: the marginal at every waypoint is N(mean, sigma_f^2).
  Vec2 w = m.mean + Vec2(m.sigma_f * g.next(), m.sigma_f * g.next());
  path.v.push_back(w);
  for (int n = 1; n < length; ++n) {
    w = wind_step(m, w, g);
    path.v.push_back(w);
  }
  return path;
}

std::vector<WindPath> saa_samples(const WindModel &m, int length, int count,
                                  std::uint64_t seed) {
  std::vector<WindPath> paths;
  paths.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    paths.push_back(sample_path(m, length, seed + static_cast<std::uint64_t>(i)));
  return paths;
}

std::vector<Vec2> sample_mean(const std::vector<WindPath> &paths) {
  std::vector<Vec2> mean;
  if (paths.empty()) return mean;
  const size_t n = paths.front().v.size();
  mean.assign(n, Vec2::Zero());
  for (const auto &p : paths)
    for (size_t i = 0; i < n; ++i) mean[i] += p.v[i];
  for (auto &v : mean) v /= static_cast<double>(paths.size());
  return mean;
}

}  // namespace uavplan

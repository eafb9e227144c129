// Copyright 2026 The latknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>

#include "latknot/curve.hpp"

namespace fixtures {

/// Circle of radius R in the xy-plane centred at c, as four quarter arcs.
inline latknot::LineArcCurve circle(double R, latknot::Vec3d c = {}) {
  latknot::LineArcCurve out;
  for (int k = 0; k < 4; ++k) {
    out.pieces.push_back(latknot::Arc{c, R, {1, 0, 0}, {0, 1, 0}, k * M_PI / 2, M_PI / 2});
  }
  return out;
}

/// Axis-aligned rectangle w x h as four segments.
inline latknot::LineArcCurve rectangle_segments(double w, double h) {
  const latknot::Vec3d a{0, 0, 0}, b{w, 0, 0}, c{w, h, 0}, d{0, h, 0};
  return {{latknot::Segment{a, b}, latknot::Segment{b, c}, latknot::Segment{c, d}, latknot::Segment{d, a}}};
}

/// Uniformly random rotation (via a random unit quaternion).
inline latknot::Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double q[4] = {n(rng), n(rng), n(rng), n(rng)};
  const double s = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& x : q) x /= s;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
           {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
           {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
}

inline latknot::Vec3d random_point(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

/// Random segment or arc near the origin.
inline latknot::Piece random_piece(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.5) return latknot::Segment{random_point(rng, 2.0), random_point(rng, 2.0)};
  const latknot::Mat3 m = random_rotation(rng);
  return latknot::Arc{random_point(rng, 2.0), 0.1 + u(rng), {m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]},
                      2 * M_PI * u(rng), 0.1 + 1.5 * u(rng)};
}

/// Minimum of |A(s) - B(t)| over a k x k parameter grid.
inline double sampled_min_distance(const latknot::Piece& a, const latknot::Piece& b, int k) {
  std::vector<latknot::Vec3d> pa(k + 1), pb(k + 1);
  for (int i = 0; i <= k; ++i) {
    pa[i] = latknot::point_at(a, double(i) / k);
    pb[i] = latknot::point_at(b, double(i) / k);
  }
  double best = INFINITY;
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      const latknot::Vec3d d = x - y;
      best = std::min(best, d.dot(d));
    }
  }
  return std::sqrt(best);
}

}  // namespace fixtures

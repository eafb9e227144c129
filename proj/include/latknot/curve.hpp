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

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace latknot {

struct Vec3d {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3d operator+(const Vec3d& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3d operator-(const Vec3d& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3d operator-() const { return {-x, -y, -z}; }
  constexpr Vec3d operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr double dot(const Vec3d& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  friend constexpr Vec3d operator*(double s, const Vec3d& v) { return v * s; }
  friend bool operator==(const Vec3d&, const Vec3d&) = default;
};

struct Segment {
  Vec3d start;
  Vec3d end;
};

/// Circular arc c + r (cos t u + sin t v), t in [theta0, theta0 + sweep],
/// with u, v orthonormal and sweep > 0.
struct Arc {
  Vec3d center;
  double radius = 0.0;
  Vec3d u;
  Vec3d v;
  double theta0 = 0.0;
  double sweep = 0.0;
};

using Piece = std::variant<Segment, Arc>;

/// Pieces are parametrized proportionally to arclength by s in [0, 1].
Vec3d point_at(const Piece& p, double s);
/// Unit tangent at s.
Vec3d tangent_at(const Piece& p, double s);
double piece_length(const Piece& p);
inline Vec3d piece_start(const Piece& p) { return point_at(p, 0.0); }
inline Vec3d piece_end(const Piece& p) { return point_at(p, 1.0); }

/// Closed C^1 curve made of segments and circular arcs, in traversal order.
struct LineArcCurve {
  std::vector<Piece> pieces;

  std::size_t size() const noexcept { return pieces.size(); }
};

struct JunctionReport {
  double max_gap = 0.0;               // endpoint mismatch
  double max_tangent_mismatch = 0.0;  // |T_out - T_in|
};

/// Measures every junction, including last -> first.
JunctionReport check_junctions(const LineArcCurve& c);

/// x -> R x + shift with R orthogonal (row-major).
using Mat3 = std::array<std::array<double, 3>, 3>;
LineArcCurve rigid_transform(const LineArcCurve& c, const Mat3& rotation, const Vec3d& shift);
LineArcCurve scaled(const LineArcCurve& c, double factor);

/// One piece per line:
///   S x1 y1 z1 x2 y2 z2
///   A cx cy cz r ux uy uz vx vy vz theta0 sweep
/// '#' comments; numbers printed with 17 significant digits.
std::string serialize_curve(const LineArcCurve& c);
LineArcCurve parse_curve(std::string_view text);

}  // namespace latknot

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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latknot {

struct Vec3i {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Vec3i&, const Vec3i&) = default;
  constexpr Vec3i operator+(const Vec3i& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3i operator-(const Vec3i& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3i operator-() const { return {-x, -y, -z}; }
  constexpr long long dot(const Vec3i& o) const {
    return static_cast<long long>(x) * o.x + static_cast<long long>(y) * o.y +
           static_cast<long long>(z) * o.z;
  }
  constexpr long long norm2() const { return dot(*this); }
};

// Unit axis directions are coded 0..5 in increasing lexicographic order of the
// vector, so comparing codes orders edge vectors the same way as comparing the
// flattened coordinates. Negation maps code c to 5 - c.
using DirCode = std::uint8_t;
inline constexpr std::array<Vec3i, 6> kDirections = {{
    {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
inline constexpr DirCode negate(DirCode c) { return static_cast<DirCode>(5 - c); }
inline constexpr bool parallel(DirCode a, DirCode b) { return a == b || a == negate(b); }

/// Returns the code of a unit axis vector, or -1 for anything else.
int direction_code(const Vec3i& v);

/// Human-readable direction token: "+x", "-x", "+y", ...
std::string direction_name(DirCode c);
/// Inverse of direction_name; throws std::invalid_argument.
DirCode parse_direction(std::string_view token);

class InvalidPolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Closed simple-cubic lattice polygon. The vertex list is cyclic and the
/// constructor enforces: even length >= 4, unit axis edges (closing edge
/// included), pairwise distinct vertices.
class LatticePolygon {
 public:
  explicit LatticePolygon(std::vector<Vec3i> vertices);

  std::size_t length() const noexcept { return vertices_.size(); }
  std::span<const Vec3i> vertices() const noexcept { return vertices_; }
  const Vec3i& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Direction code of the edge vertex(i) -> vertex(i+1).
  DirCode edge(std::size_t i) const;
  std::vector<DirCode> edge_codes() const;
  bool contains(const Vec3i& v) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  struct Unchecked {};
  LatticePolygon(std::vector<Vec3i> vertices, Unchecked) : vertices_(std::move(vertices)) {}
  friend LatticePolygon polygon_from_trusted(std::vector<Vec3i>);

  std::vector<Vec3i> vertices_;
};

/// Skips validation; callers guarantee the polygon invariants.
LatticePolygon polygon_from_trusted(std::vector<Vec3i> vertices);

/// Throws InvalidPolygon describing the first violated invariant.
void validate_vertices(std::span<const Vec3i> vertices);

/// Builds a polygon from the start vertex and a cyclic edge code sequence.
LatticePolygon polygon_from_edges(const Vec3i& start, std::span<const DirCode> edges);

/// Seed-file parsing: one "x y z" per line, '#' comments, blank lines ignored.
/// Errors carry the offending line number.
LatticePolygon parse_polygon(std::string_view text);
std::string serialize_polygon(const LatticePolygon& p);

/// Orientation-preserving isometry of Z^3: a signed permutation matrix with
/// determinant +1 followed by a translation.
struct Rotation {
  std::array<std::array<int, 3>, 3> m{};
  Vec3i apply(const Vec3i& v) const;
  DirCode apply(DirCode c) const;
};

/// The 24 orientation-preserving cube rotations, identity first.
const std::array<Rotation, 24>& cube_rotations();

LatticePolygon transform(const LatticePolygon& p, const Rotation& r, const Vec3i& shift);
LatticePolygon reflect_x(const LatticePolygon& p);
LatticePolygon cyclic_shift(const LatticePolygon& p, std::size_t k);
LatticePolygon reversed(const LatticePolygon& p);

/// Class of a polygon modulo translation, proper cube rotations, cyclic
/// re-indexing and traversal reversal.
///
/// The stored bytes are the edge direction codes of the lexicographically
/// minimal vertex stream (first vertex at the origin). Because consecutive
/// vertices of two streams with a common prefix differ exactly by their edge
/// vectors, ordering the code sequences orders the vertex streams identically.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<DirCode> codes) : codes_(std::move(codes)) {}

  std::span<const DirCode> codes() const noexcept { return codes_; }
  std::size_t length() const noexcept { return codes_.size(); }

  /// Flattened vertex stream "0,0,0,x1,y1,z1,..." of the canonical representative.
  std::string to_string() const;
  static CanonicalKey from_string(std::string_view text);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::vector<DirCode> codes_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// Writes the canonical edge code sequence of a cyclic edge code sequence
/// into `out` (same size). This is the hot path of the explorer.
void canonical_codes(std::span<const DirCode> edges, std::span<DirCode> out);

CanonicalKey canonical_key(const LatticePolygon& p);

/// The polygon encoded by a key, first vertex at the origin.
LatticePolygon canonical_representative(const CanonicalKey& key);

}  // namespace latknot

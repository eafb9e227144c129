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

#include "latknot/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace latknot {

namespace {

struct Vec3iHash {
  std::size_t operator()(const Vec3i& v) const noexcept {
    auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x));
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(v.y);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(v.z);
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

Vec3i cross(const Vec3i& a, const Vec3i& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// kAlign[a][b] is the code map of the unique proper rotation sending a to -x
// and b to -y (a perpendicular to b). Rows for parallel (a, b) are unused.
using CodeMap = std::array<DirCode, 6>;
const std::array<std::array<CodeMap, 6>, 6>& align_tables() {
  static const auto tables = [] {
    std::array<std::array<CodeMap, 6>, 6> t{};
    for (DirCode a = 0; a < 6; ++a) {
      for (DirCode b = 0; b < 6; ++b) {
        if (parallel(a, b)) continue;
        const Vec3i va = kDirections[a];
        const Vec3i vb = kDirections[b];
        const Vec3i vc = cross(va, vb);
        for (DirCode c = 0; c < 6; ++c) {
          const Vec3i v = kDirections[c];
          const Vec3i image{static_cast<int>(-v.dot(va)), static_cast<int>(-v.dot(vb)),
                            static_cast<int>(v.dot(vc))};
          t[a][b][c] = static_cast<DirCode>(direction_code(image));
        }
      }
    }
    return t;
  }();
  return tables;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

int direction_code(const Vec3i& v) {
  for (int c = 0; c < 6; ++c) {
    if (kDirections[c] == v) return c;
  }
  return -1;
}

std::string direction_name(DirCode c) {
  static constexpr std::array<const char*, 6> names = {"-x", "-y", "-z", "+z", "+y", "+x"};
  return names.at(c);
}

DirCode parse_direction(std::string_view token) {
  for (DirCode c = 0; c < 6; ++c) {
    if (direction_name(c) == token) return c;
  }
  throw std::invalid_argument("unknown direction '" + std::string(token) + "'");
}

void validate_vertices(std::span<const Vec3i> vertices) {
  const std::size_t n = vertices.size();
  if (n < 4) throw InvalidPolygon("polygon needs at least 4 vertices, got " + std::to_string(n));
  if (n % 2 != 0) throw InvalidPolygon("lattice polygon length must be even, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i d = vertices[(i + 1) % n] - vertices[i];
    if (direction_code(d) < 0) {
      throw InvalidPolygon("edge " + std::to_string(i) + " -> " + std::to_string((i + 1) % n) +
                           " is not a unit axis step");
    }
  }
  std::unordered_set<Vec3i, Vec3iHash> seen;
  seen.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(vertices[i]).second) {
      throw InvalidPolygon("vertex " + std::to_string(i) + " repeats an earlier vertex");
    }
  }
  // Distinct vertices already rule this out; kept as an explicit invariant.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i a = vertices[(i + 1) % n] - vertices[i];
    const Vec3i b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (a == -b) throw InvalidPolygon("backtracking at vertex " + std::to_string((i + 1) % n));
  }
}

LatticePolygon::LatticePolygon(std::vector<Vec3i> vertices) : vertices_(std::move(vertices)) {
  validate_vertices(vertices_);
}

LatticePolygon polygon_from_trusted(std::vector<Vec3i> vertices) {
  return LatticePolygon(std::move(vertices), LatticePolygon::Unchecked{});
}

DirCode LatticePolygon::edge(std::size_t i) const {
  const std::size_t n = vertices_.size();
  return static_cast<DirCode>(direction_code(vertices_[(i + 1) % n] - vertices_[i % n]));
}

std::vector<DirCode> LatticePolygon::edge_codes() const {
  std::vector<DirCode> out(length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge(i);
  return out;
}

bool LatticePolygon::contains(const Vec3i& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

LatticePolygon polygon_from_edges(const Vec3i& start, std::span<const DirCode> edges) {
  std::vector<Vec3i> v;
  v.reserve(edges.size());
  Vec3i cur = start;
  for (const DirCode c : edges) {
    v.push_back(cur);
    cur = cur + kDirections.at(c);
  }
  if (cur != start) throw InvalidPolygon("edge sequence does not close");
  return LatticePolygon(std::move(v));
}

LatticePolygon parse_polygon(std::string_view text) {
  std::vector<Vec3i> vertices;
  std::vector<std::size_t> line_of;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    line = trim(line.substr(0, line.find('#')));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;

    std::array<int, 3> xyz{};
    std::size_t count = 0;
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
      if (p >= line.size()) break;
      std::size_t q = p;
      while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
      const std::string_view token = line.substr(p, q - p);
      if (count >= 3) throw ParseError(line_no, "expected 3 integers, found more");
      int value = 0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
      }
      xyz[count++] = value;
      p = q;
    }
    if (count != 3) throw ParseError(line_no, "expected 3 integers, found " + std::to_string(count));
    vertices.push_back({xyz[0], xyz[1], xyz[2]});
    line_of.push_back(line_no);
  }
  if (vertices.size() < 4) {
    throw ParseError(line_no, "polygon needs at least 4 vertices, got " + std::to_string(vertices.size()));
  }
  // Re-run the checks here so errors point at a line.
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (direction_code(vertices[(i + 1) % n] - vertices[i]) < 0) {
      const std::string what = i + 1 == n ? "closing edge (last -> first vertex) is not a unit axis step"
                                          : "edge to the next vertex is not a unit axis step";
      throw ParseError(line_of[i], what);
    }
  }
  std::unordered_set<Vec3i, Vec3iHash> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(vertices[i]).second) throw ParseError(line_of[i], "duplicate vertex");
  }
  try {
    return LatticePolygon(std::move(vertices));
  } catch (const InvalidPolygon& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string serialize_polygon(const LatticePolygon& p) {
  std::ostringstream os;
  for (const Vec3i& v : p.vertices()) os << v.x << ' ' << v.y << ' ' << v.z << '\n';
  return os.str();
}

Vec3i Rotation::apply(const Vec3i& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

DirCode Rotation::apply(DirCode c) const {
  return static_cast<DirCode>(direction_code(apply(kDirections[c])));
}

const std::array<Rotation, 24>& cube_rotations() {
  static const auto rotations = [] {
    std::array<Rotation, 24> out{};
    std::size_t k = 0;
    std::array<int, 3> perm = {0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        Rotation r;
        for (int row = 0; row < 3; ++row) {
          r.m[row][perm[row]] = (signs >> row & 1) ? -1 : 1;
        }
        const auto& a = r.m;
        const int det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                        a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                        a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        if (det == 1) out[k++] = r;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return rotations;
}

LatticePolygon transform(const LatticePolygon& p, const Rotation& r, const Vec3i& shift) {
  std::vector<Vec3i> v;
  v.reserve(p.length());
  for (const Vec3i& x : p.vertices()) v.push_back(r.apply(x) + shift);
  return polygon_from_trusted(std::move(v));
}

LatticePolygon reflect_x(const LatticePolygon& p) {
  std::vector<Vec3i> v;
  v.reserve(p.length());
  for (const Vec3i& x : p.vertices()) v.push_back({-x.x, x.y, x.z});
  return polygon_from_trusted(std::move(v));
}

LatticePolygon cyclic_shift(const LatticePolygon& p, std::size_t k) {
  std::vector<Vec3i> v(p.vertices().begin(), p.vertices().end());
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
  return polygon_from_trusted(std::move(v));
}

LatticePolygon reversed(const LatticePolygon& p) {
  std::vector<Vec3i> v(p.vertices().rbegin(), p.vertices().rend());
  return polygon_from_trusted(std::move(v));
}

std::string CanonicalKey::to_string() const {
  std::string out = "0,0,0";
  Vec3i cur{};
  // The last edge returns to the origin; it is implied by the vertex stream.
  for (std::size_t i = 0; i + 1 < codes_.size(); ++i) {
    cur = cur + kDirections[codes_[i]];
    out += ',' + std::to_string(cur.x) + ',' + std::to_string(cur.y) + ',' + std::to_string(cur.z);
  }
  return out;
}

CanonicalKey CanonicalKey::from_string(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = trim(text.substr(pos, end - pos));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("malformed canonical key");
    }
    values.push_back(v);
    pos = end + 1;
  }
  if (values.size() % 3 != 0) throw std::invalid_argument("canonical key is not a list of triples");
  std::vector<Vec3i> vertices;
  for (std::size_t i = 0; i < values.size(); i += 3) vertices.push_back({values[i], values[i + 1], values[i + 2]});
  const LatticePolygon p(std::move(vertices));
  CanonicalKey key(p.edge_codes());
  if (canonical_key(p) != key) throw std::invalid_argument("string is not a canonical key");
  return key;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  const auto codes = k.codes();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(codes.data()), codes.size()));
}

void canonical_codes(std::span<const DirCode> edges, std::span<DirCode> out) {
  const std::size_t n = edges.size();
  const auto& tables = align_tables();

  // Forward sequence followed by the reversed traversal (negated, backwards).
  std::array<DirCode, 512> stack_buf{};
  std::vector<DirCode> heap_buf;
  DirCode* seq = stack_buf.data();
  if (2 * n > stack_buf.size()) {
    heap_buf.resize(2 * n);
    seq = heap_buf.data();
  }
  for (std::size_t i = 0; i < n; ++i) {
    seq[i] = edges[i];
    seq[n + i] = negate(edges[n - 1 - i]);
  }

  bool have_best = false;
  for (std::size_t orient = 0; orient < 2; ++orient) {
    const DirCode* s = seq + orient * n;
    for (std::size_t start = 0; start < n; ++start) {
      const DirCode a = s[start];
      std::size_t k = 1;
      while (parallel(s[(start + k) % n], a)) ++k;
      const CodeMap& map = tables[a][s[(start + k) % n]];
      if (!have_best) {
        for (std::size_t t = 0; t < n; ++t) out[t] = map[s[(start + t) % n]];
        have_best = true;
        continue;
      }
      for (std::size_t t = 0; t < n; ++t) {
        const DirCode c = map[s[(start + t) % n]];
        if (c > out[t]) break;
        if (c < out[t]) {
          for (std::size_t u = t; u < n; ++u) out[u] = map[s[(start + u) % n]];
          break;
        }
      }
    }
  }
}

CanonicalKey canonical_key(const LatticePolygon& p) {
  const auto edges = p.edge_codes();
  std::vector<DirCode> out(edges.size());
  canonical_codes(edges, out);
  return CanonicalKey(std::move(out));
}

LatticePolygon canonical_representative(const CanonicalKey& key) {
  return polygon_from_edges(Vec3i{}, key.codes());
}

}  // namespace latknot

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

#include "latknot/moves.hpp"

#include <charconv>

namespace latknot {

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::plus2: return "plus2";
    case MoveKind::minus2: return "minus2";
    case MoveKind::zero: return "zero";
  }
  return "?";
}

std::string format_move(const MoveDescriptor& m) {
  return std::string(to_string(m.kind)) + ':' + std::to_string(m.edge_index) + ':' +
         direction_name(m.direction);
}

MoveDescriptor parse_move(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("move must look like kind:edge:direction");
  MoveDescriptor m;
  const auto kind = text.substr(0, c1);
  if (kind == "plus2") m.kind = MoveKind::plus2;
  else if (kind == "minus2") m.kind = MoveKind::minus2;
  else if (kind == "zero") m.kind = MoveKind::zero;
  else throw std::invalid_argument("unknown move kind '" + std::string(kind) + "'");
  const auto idx = text.substr(c1 + 1, c2 - c1 - 1);
  const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), m.edge_index);
  if (ec != std::errc{} || ptr != idx.data() + idx.size() || idx.empty()) {
    throw std::invalid_argument("bad edge index '" + std::string(idx) + "'");
  }
  m.direction = parse_direction(text.substr(c2 + 1));
  return m;
}

std::optional<LatticePolygon> try_apply(const LatticePolygon& p, const MoveDescriptor& m) {
  const std::size_t n = p.length();
  if (m.edge_index >= n) return std::nullopt;
  const std::size_t i = m.edge_index;
  const auto verts = p.vertices();
  const Vec3i step = kDirections.at(m.direction);

  switch (m.kind) {
    case MoveKind::plus2: {
      if (parallel(p.edge(i), m.direction)) return std::nullopt;
      const Vec3i a = verts[i] + step;
      const Vec3i b = verts[(i + 1) % n] + step;
      if (p.contains(a) || p.contains(b)) return std::nullopt;
      std::vector<Vec3i> v;
      v.reserve(n + 2);
      v.insert(v.end(), verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(i + 1));
      v.push_back(a);
      v.push_back(b);
      v.insert(v.end(), verts.begin() + static_cast<std::ptrdiff_t>(i + 1), verts.end());
      return polygon_from_trusted(std::move(v));
    }
    case MoveKind::minus2: {
      if (n < 6) return std::nullopt;
      const DirCode d = p.edge(i);
      const DirCode e = p.edge(i + 1);
      if (e != m.direction || parallel(d, e) || p.edge(i + 2) != negate(d)) return std::nullopt;
      const std::size_t r1 = (i + 1) % n;
      const std::size_t r2 = (i + 2) % n;
      std::vector<Vec3i> v;
      v.reserve(n - 2);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != r1 && k != r2) v.push_back(verts[k]);
      }
      return polygon_from_trusted(std::move(v));
    }
    case MoveKind::zero: {
      const DirCode d1 = p.edge(i);
      const DirCode d2 = p.edge(i + 1);
      if (parallel(d1, d2) || d2 != m.direction) return std::nullopt;
      const Vec3i flipped = verts[i] + kDirections[d2];
      if (p.contains(flipped)) return std::nullopt;
      std::vector<Vec3i> v(verts.begin(), verts.end());
      v[(i + 1) % n] = flipped;
      return polygon_from_trusted(std::move(v));
    }
  }
  return std::nullopt;
}

std::vector<MoveResult> enumerate_plus2(const LatticePolygon& p) {
  std::vector<MoveResult> out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (const DirCode e : detail::kMoveDirectionOrder) {
      const MoveDescriptor m{MoveKind::plus2, i, e};
      if (auto child = try_apply(p, m)) out.emplace_back(m, std::move(*child));
    }
  }
  return out;
}

std::vector<MoveResult> enumerate_minus2(const LatticePolygon& p) {
  std::vector<MoveResult> out;
  if (p.length() < 6) return out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const MoveDescriptor m{MoveKind::minus2, i, p.edge(i + 1)};
    if (auto child = try_apply(p, m)) out.emplace_back(m, std::move(*child));
  }
  return out;
}

std::vector<MoveResult> enumerate_zero(const LatticePolygon& p) {
  std::vector<MoveResult> out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const MoveDescriptor m{MoveKind::zero, i, p.edge(i + 1)};
    if (auto child = try_apply(p, m)) out.emplace_back(m, std::move(*child));
  }
  return out;
}

std::vector<MoveResult> enumerate_all(const LatticePolygon& p) {
  auto out = enumerate_plus2(p);
  auto minus = enumerate_minus2(p);
  auto zero = enumerate_zero(p);
  out.insert(out.end(), std::make_move_iterator(minus.begin()), std::make_move_iterator(minus.end()));
  out.insert(out.end(), std::make_move_iterator(zero.begin()), std::make_move_iterator(zero.end()));
  return out;
}

}  // namespace latknot

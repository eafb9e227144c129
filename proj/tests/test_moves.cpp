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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "latknot/moves.hpp"

using namespace latknot;

namespace {

// b is a as a cycle, possibly re-indexed but with the same orientation.
bool same_cycle(const LatticePolygon& a, const LatticePolygon& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t k = 0; k < a.length(); ++k) {
    if (cyclic_shift(a, k) == b) return true;
  }
  return false;
}

std::set<Vec3i> point_set(const LatticePolygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

}  // namespace

// Reference counts below come from tests/oracles/lattice_oracle.py.

TEST_CASE("move descriptor text") {
  const MoveDescriptor m{MoveKind::plus2, 4, parse_direction("+y")};
  CHECK(format_move(m) == "plus2:4:+y");
  CHECK(parse_move("plus2:4:+y") == m);
  CHECK(parse_move("zero:0:-z") == MoveDescriptor{MoveKind::zero, 0, parse_direction("-z")});
  CHECK_THROWS(parse_move("plus3:1:+x"));
  CHECK_THROWS(parse_move("plus2:a:+x"));
  CHECK_THROWS(parse_move("plus2:1"));
}

TEST_CASE("plus2 on the unit square") {
  const auto res = enumerate_plus2(fixtures::square());
  CHECK(res.size() == 12);  // of 16 raw candidates
  for (const auto& [m, child] : res) {
    CHECK(m.kind == MoveKind::plus2);
    CHECK(child.length() == 6);
  }
}

TEST_CASE("plus2 on the trefoil gives the 26-edge polygon") {
  const auto child = try_apply(fixtures::trefoil(), {MoveKind::plus2, 4, parse_direction("+y")});
  REQUIRE(child);
  CHECK(child->length() == 26);
  CHECK(child->vertex(4) == Vec3i{0, 2, 1});
  CHECK(child->vertex(5) == Vec3i{0, 3, 1});
  CHECK(child->vertex(6) == Vec3i{-1, 3, 1});
  CHECK(child->vertex(7) == Vec3i{-1, 2, 1});
}

TEST_CASE("illegal moves are rejected") {
  const auto sq = fixtures::square();
  // Inward in-plane detour collides with the opposite side.
  CHECK_FALSE(try_apply(sq, {MoveKind::plus2, 0, parse_direction("+y")}));
  // Parallel direction is never a detour.
  CHECK_FALSE(try_apply(sq, {MoveKind::plus2, 0, parse_direction("+x")}));
  CHECK_FALSE(try_apply(sq, {MoveKind::minus2, 0, parse_direction("+y")}));
  CHECK_FALSE(try_apply(sq, {MoveKind::zero, 0, parse_direction("+y")}));
  CHECK_FALSE(try_apply(sq, {MoveKind::plus2, 9, parse_direction("+z")}));
}

TEST_CASE("minus2 on the 1x2 rectangle") {
  const auto res = enumerate_minus2(fixtures::rectangle());
  REQUIRE(res.size() == 2);
  CHECK(res[0].second.length() == 4);
  CHECK(res[1].second.length() == 4);
  CHECK(point_set(res[0].second) != point_set(res[1].second));
  CHECK(enumerate_minus2(fixtures::square()).empty());
}

TEST_CASE("zero moves") {
  CHECK(enumerate_zero(fixtures::square()).empty());
  CHECK(enumerate_zero(fixtures::rectangle()).empty());
  const auto res = enumerate_zero(fixtures::trefoil_detour());
  CHECK(res.size() == 5);
  for (const auto& [m, child] : res) {
    CHECK(child.length() == 26);
    CHECK_NOTHROW(validate_vertices(child.vertices()));
  }
}

TEST_CASE("enumerate_all on the detour polygon") {
  const auto d = fixtures::trefoil_detour();
  CHECK(enumerate_plus2(d).size() == 51);
  CHECK(enumerate_minus2(d).size() == 1);
  const auto all = enumerate_all(d);
  CHECK(all.size() == 57);
  CHECK(all.front().first.kind == MoveKind::plus2);
  CHECK(all.back().first.kind == MoveKind::zero);
}

TEST_CASE("enumerated moves replay through try_apply") {
  const auto d = fixtures::trefoil_detour();
  for (const auto& [m, child] : enumerate_all(d)) {
    const auto again = try_apply(d, m);
    REQUIRE(again);
    CHECK(*again == child);
  }
}

TEST_CASE("every move has an inverse move") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = fixtures::random_polygon(rng, 15);
    const auto moves = enumerate_all(p);
    REQUIRE_FALSE(moves.empty());
    const auto& [m, child] = moves[rng() % moves.size()];
    const auto back = enumerate_all(child);
    const bool found = std::any_of(back.begin(), back.end(), [&](const auto& r) { return same_cycle(p, r.second); });
    CHECK_MESSAGE(found, format_move(m));
  }
}

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "geometry_fixtures.hpp"
#include "latknot/certify.hpp"
#include "latknot/smoothing.hpp"
#include "latknot/smoothfunc.hpp"

using namespace latknot;

namespace {

std::size_t count_arcs(const LineArcCurve& c) {
  std::size_t n = 0;
  for (const auto& p : c.pieces) n += std::holds_alternative<Arc>(p);
  return n;
}

// A straight edge run of N edges with T turns loses 2r and gains pi r / 2 per turn.
double rounded_length(std::size_t n, std::size_t turns, double r) {
  return double(n) - double(turns) * r * (2.0 - M_PI / 2.0);
}

}  // namespace

TEST_CASE("rounded unit square") {
  const auto c = round_corners(fixtures::square(), 0.25);
  CHECK(c.size() == 8);
  CHECK(count_arcs(c) == 4);
  CHECK(std::holds_alternative<Arc>(c.pieces[0]));
  CHECK(curve_length(c) == doctest::Approx(rounded_length(4, 4, 0.25)).epsilon(1e-14));
  const auto j = check_junctions(c);
  CHECK(j.max_gap < 1e-12);
  CHECK(j.max_tangent_mismatch < 1e-12);
}

TEST_CASE("rounded trefoil has one arc per turning vertex") {
  const auto p = fixtures::trefoil();
  CHECK(turning_vertex_count(p) == 13);
  const auto c = round_corners(p, 0.25);
  CHECK(count_arcs(c) == 13);
  CHECK(c.size() == 26);
  // Dense-sampling reference length from tests/oracles/curve_oracle.py.
  CHECK(curve_length(c) == doctest::Approx(22.605088062083).epsilon(1e-11));
  CHECK(curve_length(c) == doctest::Approx(rounded_length(24, 13, 0.25)));
  const auto j = check_junctions(c);
  CHECK(j.max_gap < 1e-12);
  CHECK(j.max_tangent_mismatch < 1e-12);
}

TEST_CASE("arcs are quarter circles tangent to both edges") {
  const auto c = round_corners(fixtures::rectangle(), 0.3);
  for (const auto& piece : c.pieces) {
    if (const auto* a = std::get_if<Arc>(&piece)) {
      CHECK(a->radius == 0.3);
      CHECK(a->sweep == doctest::Approx(M_PI / 2));
      CHECK(std::abs(a->u.dot(a->v)) < 1e-15);
    }
  }
}

TEST_CASE("rounding a random polygon keeps junctions continuous") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = fixtures::random_polygon(rng, 12, 30);
    const auto c = round_corners(p, 0.2);
    CHECK(count_arcs(c) == turning_vertex_count(p));
    CHECK(curve_length(c) == doctest::Approx(rounded_length(p.length(), turning_vertex_count(p), 0.2)));
    const auto j = check_junctions(c);
    CHECK(j.max_gap < 1e-12);
    CHECK(j.max_tangent_mismatch < 1e-12);
  }
}

TEST_CASE("radius outside (0, 1/2) is rejected") {
  const auto p = fixtures::square();
  for (const double r : {0.0, -0.1, 0.5, 0.6, std::nan("")}) CHECK_THROWS_AS(round_corners(p, r), std::invalid_argument);
  SmoothingScheme s;
  s.radii = {0.25, 0.5};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.radii = {};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.radii = {0.1, 0.49};
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("scheme with three radii yields three curves") {
  SmoothingScheme s;
  s.radii = {0.1, 0.25, 0.4};
  const auto out = scheme_curves(fixtures::square(), s);
  REQUIRE(out.kept.size() == 3);
  CHECK(out.discarded.empty());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(out.kept[i].radius == s.radii[i]);
    const auto cert = thickness_certificate(out.kept[i].curve);
    CHECK(cert.status == CertStatus::certified);
    CHECK(cert.tau_cert == doctest::Approx(s.radii[i]).epsilon(1e-9));
  }
}

TEST_CASE("long thin rectangle with a large radius") {
  // 1 x 4 rectangle, ten edges.
  std::vector<Vec3i> v;
  for (int y = 0; y <= 4; ++y) v.push_back({0, y, 0});
  for (int y = 4; y >= 1; --y) v.push_back({1, y, 0});
  v.push_back({1, 0, 0});
  const LatticePolygon p(v);
  REQUIRE(p.length() == 10);
  SmoothingScheme s;
  s.radii = {0.45};
  const auto out = scheme_curves(p, s);
  REQUIRE(out.kept.size() == 1);
  const auto cert = thickness_certificate(out.kept[0].curve);
  CHECK(cert.status == CertStatus::certified);
  CHECK(cert.tau_cert == doctest::Approx(0.45).epsilon(1e-9));
}

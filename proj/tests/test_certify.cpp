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
#include "latknot/interval.hpp"
#include "latknot/smoothing.hpp"

using namespace latknot;

TEST_CASE("interval arithmetic encloses sampled values") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0), t(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    double a0 = u(rng), a1 = u(rng), b0 = u(rng), b1 = u(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Interval A(a0, a1), B(b0, b1);
    const double x = a0 + t(rng) * (a1 - a0), y = b0 + t(rng) * (b1 - b0);
    CHECK((A + B).contains(x + y));
    CHECK((A - B).contains(x - y));
    CHECK((A * B).contains(x * y));
    CHECK(sqr(A).contains(x * x));
    CHECK(sqrt(sqr(A)).contains(std::abs(x)));
    CHECK(cos(A).contains(std::cos(x)));
    CHECK(sin(A).contains(std::sin(x)));
  }
  CHECK_THROWS(Interval(1.0, 0.0));
  CHECK(cos(Interval(-0.1, 0.1)).hi() == 1.0);
  CHECK(sin(Interval(M_PI / 2 - 0.1, M_PI / 2 + 0.1)).hi() == 1.0);
  CHECK(cos(Interval(0.0, 7.0)).lo() == -1.0);
}

TEST_CASE("opposite sides of the unit square") {
  const Segment bottom{{0, 0, 0}, {1, 0, 0}}, top{{1, 1, 0}, {0, 1, 0}};
  const auto d = piece_distance_lower_bound(bottom, top, {});
  CHECK(d.conclusive);
  CHECK(d.lower_bound >= 1.0 - 1e-6);
  CHECK(d.lower_bound <= 1.0);
}

TEST_CASE("opposite trimmed sides of the rounded square") {
  const auto c = round_corners(fixtures::square(), 0.25);
  // Pieces alternate arc, segment; segments 1 and 5 are opposite sides.
  REQUIRE(std::holds_alternative<Segment>(c.pieces[1]));
  REQUIRE(std::holds_alternative<Segment>(c.pieces[5]));
  DistanceOptions o;
  o.tol = 1e-3;
  const auto d = piece_distance_lower_bound(c.pieces[1], c.pieces[5], o);
  CHECK(d.conclusive);
  CHECK(d.lower_bound >= 0.999);
}

TEST_CASE("segment to arc bound agrees with a dense grid") {
  const auto c = round_corners(fixtures::square(), 0.25);
  const Piece& seg = c.pieces[1];
  const Piece& arc = c.pieces[4];
  REQUIRE(std::holds_alternative<Arc>(arc));
  DistanceOptions o;
  o.tol = 1e-6;
  const auto d = piece_distance_lower_bound(seg, arc, o);
  const double grid = fixtures::sampled_min_distance(seg, arc, 10000);
  CHECK(d.conclusive);
  CHECK(d.lower_bound <= grid);
  CHECK(d.lower_bound >= grid - 2e-6);
}

TEST_CASE("certified bounds never exceed the sampled minimum") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Piece a = fixtures::random_piece(rng), b = fixtures::random_piece(rng);
    DistanceOptions o;
    o.tol = 1e-7;
    const auto d = piece_distance_lower_bound(a, b, o);
    const double grid = fixtures::sampled_min_distance(a, b, 600);
    CHECK(d.conclusive);
    CHECK(d.lower_bound <= grid + 1e-12);
    CHECK(d.lower_bound >= grid - 0.01);
  }
}

TEST_CASE("bounds do not decrease with depth") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Piece a = fixtures::random_piece(rng), b = fixtures::random_piece(rng);
    double prev = 0.0;
    for (const int depth : {2, 4, 8, 16, 48}) {
      DistanceOptions o;
      o.tol = 1e-9;
      o.max_depth = depth;
      const double lb = piece_distance_lower_bound(a, b, o).lower_bound;
      CHECK(lb >= prev);
      prev = lb;
    }
  }
}

TEST_CASE("distance options are validated") {
  const Segment s{{0, 0, 0}, {1, 0, 0}};
  DistanceOptions o;
  o.stop_threshold = -1.0;
  CHECK_THROWS(piece_distance_lower_bound(s, s, o));
  o.stop_threshold = 0.0;
  o.tol = 0.0;
  CHECK_THROWS(piece_distance_lower_bound(s, s, o));
}

TEST_CASE("embeddedness") {
  CHECK(embeddedness_certificate(round_corners(fixtures::square(), 0.25)).pass);
  CHECK(embeddedness_certificate(round_corners(fixtures::trefoil(), 0.25)).pass);

  // The same circle traversed twice.
  auto twice = fixtures::circle(1.0);
  const auto copy = twice.pieces;
  twice.pieces.insert(twice.pieces.end(), copy.begin(), copy.end());
  const auto r = embeddedness_certificate(twice);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 0);
  CHECK(r.witness->second == 3);  // quarter 3 ends where quarter 0 starts
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("thickness of the rounded square") {
  const auto cert = thickness_certificate(round_corners(fixtures::square(), 0.25));
  CHECK(cert.status == CertStatus::certified);
  CHECK(cert.tau_cert == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cert.min_arc_radius == 0.25);
  CHECK(cert.min_nonadjacent_halfdist >= 0.25);
  CHECK(cert.max_curvature == doctest::Approx(4.0));
  CHECK(cert.max_tangent_mismatch < 1e-12);
  CHECK(cert.boxes_explored > 0);
  CHECK(to_string(cert.status) == "certified");
}

TEST_CASE("thickness of a circle is its radius") {
  for (const double R : {0.5, 1.0, 3.0}) {
    const auto cert = thickness_certificate(fixtures::circle(R));
    CHECK(cert.status == CertStatus::certified);
    CHECK(cert.tau_cert <= R);
    CHECK(cert.tau_cert >= R - 1e-6);
  }
}

// Dense-sampling reference from tests/oracles/curve_oracle.py: the smallest
// distance between points of the rounded trefoil (r = 1/4) at arclength
// separation >= pi r is 0.6320083337 on a 12000-point sample.
TEST_CASE("thickness of the rounded trefoil") {
  const auto c = round_corners(fixtures::trefoil(), 0.25);
  const auto quick = thickness_certificate(c);
  CHECK(quick.status == CertStatus::certified);
  CHECK(quick.tau_cert == 0.25);
  CHECK(quick.min_nonadjacent_halfdist >= 0.25);

  CertifyOptions o;
  o.exact_distance = true;
  const auto cert = thickness_certificate(c, o);
  CHECK(cert.status == CertStatus::certified);
  CHECK(cert.tau_cert == 0.25);
  CHECK(2.0 * cert.min_nonadjacent_halfdist <= 0.6320083337);
  CHECK(2.0 * cert.min_nonadjacent_halfdist >= 0.6320083337 - 1e-3);
}

TEST_CASE("certificates scale with the curve") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  const auto base = round_corners(fixtures::rectangle(), 0.3);
  const auto c0 = thickness_certificate(base);
  for (int trial = 0; trial < 5; ++trial) {
    const double a = u(rng);
    const auto c = thickness_certificate(scaled(base, a));
    CHECK(c.status == CertStatus::certified);
    CHECK(c.tau_cert >= a * (c0.tau_cert - 1e-6));
    CHECK(c.min_arc_radius == doctest::Approx(a * c0.min_arc_radius));
  }
}

TEST_CASE("a corner without tangent continuity is rejected") {
  const auto c = fixtures::rectangle_segments(1.0, 2.0);
  const auto cert = thickness_certificate(c);
  CHECK(cert.status == CertStatus::inconclusive);
  CHECK_FALSE(cert.note.empty());
}

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
#include "latknot/explorer.hpp"
#include "latknot/smoothing.hpp"
#include "latknot/smoothfunc.hpp"

using namespace latknot;

TEST_CASE("straight-segment rectangle") {
  const auto c = fixtures::rectangle_segments(1.0, 2.0);
  CHECK(curve_length(c) == doctest::Approx(6.0));
  CHECK(curve_d2(c) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
  CHECK(curve_diameter(c) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  const auto sq = fixtures::rectangle_segments(1.0, 1.0);
  CHECK(curve_d2(sq) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("circle") {
  for (const double R : {0.5, 1.0, 2.5}) {
    const auto c = fixtures::circle(R, {1.0, -2.0, 3.0});
    CHECK(curve_length(c) == doctest::Approx(2 * M_PI * R));
    CHECK(curve_d2(c) == doctest::Approx(R * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(curve_diameter(c) == doctest::Approx(2 * R).epsilon(1e-9));
    const auto row = smoothed_row(c, thickness_certificate(c));
    CHECK(row.rho2 == doctest::Approx(std::sqrt(2.0) * M_PI).epsilon(1e-12));
    CHECK(row.rho_inf == doctest::Approx(M_PI).epsilon(1e-9));
    // tau is certified to within the 1e-6 search tolerance.
    CHECK(row.crad2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(row.crad_inf == doctest::Approx(2.0).epsilon(1e-6));
  }
}

// Dense-sampling references from tests/oracles/curve_oracle.py (r = 1/4).
TEST_CASE("rounded curves against the sampling oracle") {
  const auto sq = round_corners(fixtures::square(), 0.25);
  CHECK(curve_d2(sq) == doctest::Approx(0.7799836658).epsilon(1e-6));
  CHECK(curve_diameter(sq) == doctest::Approx(1.2071067293).epsilon(1e-6));
  CHECK(curve_diameter(sq) == doctest::Approx(0.5 + 1.0 / std::sqrt(2.0)).epsilon(1e-9));

  const auto tr = round_corners(fixtures::trefoil(), 0.25);
  CHECK(curve_d2(tr) == doctest::Approx(2.0895404257).epsilon(1e-6));
  CHECK(curve_diameter(tr) == doctest::Approx(3.9544544423).epsilon(1e-6));
}

TEST_CASE("concentric arcs") {
  // Quarter arcs of the unit circle; q1r traces q1 in its own frame.
  const Arc q0{{0, 0, 0}, 1.0, {1, 0, 0}, {0, 1, 0}, 0.0, M_PI / 2};
  const Arc q2{{0, 0, 0}, 1.0, {1, 0, 0}, {0, 1, 0}, M_PI, M_PI / 2};
  const Arc q1{{0, 0, 0}, 1.0, {1, 0, 0}, {0, 1, 0}, M_PI / 2, M_PI / 2};
  const Arc q1r{{0, 0, 0}, 1.0, {-1, 0, 0}, {0, -1, 0}, -M_PI / 2, M_PI / 2};  // same points as q1
  CHECK(curve_diameter({{q0, q2}}) == doctest::Approx(2.0));
  CHECK(curve_diameter({{q0, q1}}) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(curve_diameter({{q0, q1r}}) == doctest::Approx(2.0).epsilon(1e-9));
  // A short arc pair far from antipodal: endpoints (1,0) and (0,1) give sqrt 2.
  const Arc s0{{0, 0, 0}, 1.0, {1, 0, 0}, {0, 1, 0}, 0.0, 0.1};
  const Arc s1{{0, 0, 0}, 1.0, {1, 0, 0}, {0, 1, 0}, M_PI / 2 - 0.1, 0.1};
  CHECK(curve_diameter({{s0, s1}}) == doctest::Approx(std::sqrt(2.0)));
  const Arc s1r{{0, 0, 0}, 1.0, {-1, 0, 0}, {0, -1, 0}, -M_PI / 2 - 0.1, 0.1};
  CHECK(curve_diameter({{s0, s1r}}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("diameter is attained and within tolerance") {
  const auto tr = round_corners(fixtures::trefoil(), 0.25);
  const double coarse = curve_diameter(tr, 1e-3);
  const double fine = curve_diameter(tr, 1e-10);
  CHECK(coarse <= fine + 1e-12);
  CHECK(fine <= coarse + 1e-3);
  CHECK_THROWS(curve_diameter(tr, 0.0));
}

TEST_CASE("functionals are invariant under rigid motions") {
  std::mt19937_64 rng(17);
  const auto base = round_corners(fixtures::trefoil(), 0.3);
  const double d2 = curve_d2(base), dinf = curve_diameter(base), len = curve_length(base);
  for (int trial = 0; trial < 5; ++trial) {
    const auto moved = rigid_transform(base, fixtures::random_rotation(rng), fixtures::random_point(rng, 50.0));
    CHECK(curve_length(moved) == doctest::Approx(len).epsilon(1e-9));
    CHECK(curve_d2(moved) == doctest::Approx(d2).epsilon(1e-9));
    CHECK(curve_diameter(moved) == doctest::Approx(dinf).epsilon(1e-9));
  }
}

TEST_CASE("scale covariance and normalization") {
  const auto base = round_corners(fixtures::rectangle(), 0.25);
  const auto cert = thickness_certificate(base);
  REQUIRE(cert.status == CertStatus::certified);
  const auto row = smoothed_row(base, cert);
  for (const double a : {0.1, 3.0, 40.0}) {
    const auto big = scaled(base, a);
    CHECK(curve_length(big) == doctest::Approx(a * row.length).epsilon(1e-9));
    CHECK(curve_d2(big) == doctest::Approx(a * row.d2).epsilon(1e-9));
    CHECK(curve_diameter(big) == doctest::Approx(a * row.d_inf).epsilon(1e-9));
    const auto r2 = smoothed_row(big, thickness_certificate(big));
    CHECK(r2.rho2 == doctest::Approx(row.rho2).epsilon(1e-9));
    CHECK(r2.crad2 == doctest::Approx(row.crad2).epsilon(1e-6));
  }
  const auto unit = normalize(base, cert.tau_cert);
  const auto ucert = thickness_certificate(unit);
  CHECK(ucert.tau_cert == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(curve_d2(unit) == doctest::Approx(row.crad2).epsilon(1e-9));
  CHECK(curve_diameter(unit) == doctest::Approx(row.crad_inf).epsilon(1e-9));
  CHECK_THROWS(normalize(base, 0.0));
}

TEST_CASE("smoothed row requires a certified certificate") {
  const auto c = round_corners(fixtures::square(), 0.25);
  ThicknessCertificate cert;
  CHECK_THROWS_AS(smoothed_row(c, cert), std::invalid_argument);
}

TEST_CASE("rounded square row") {
  const auto c = round_corners(fixtures::square(), 0.25);
  const auto row = smoothed_row(c, thickness_certificate(c));
  CHECK(row.tau_cert == doctest::Approx(0.25));
  CHECK(row.rho2 == doctest::Approx(row.length / row.d2));
  CHECK(row.crad_inf == doctest::Approx(4 * (0.5 + 1.0 / std::sqrt(2.0))).epsilon(1e-8));
  // No closed curve has diameter more than half its length.
  CHECK(row.rho_inf >= 2.0);
}

TEST_CASE("smoothed profile of the unit square") {
  DetourOptions o;
  const auto levels = positive_detour_levels(fixtures::square(), 8, o).levels;
  SmoothingScheme s;
  s.radii = {0.25};
  const auto prof = smoothed_profile(levels, s, {}, 2);
  REQUIRE(prof.exact.size() == 3);
  REQUIRE(prof.filtered.size() == 3);
  const std::uint64_t members[3] = {1, 12, 138};
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& e = prof.exact[i];
    total += e.members;
    CHECK(e.members == members[i]);
    CHECK(e.curves == members[i]);
    CHECK(e.skipped == 0);
    CHECK(e.best_rho_inf >= 2.0);
    CHECK(prof.filtered[i].members == total);
    CHECK(prof.filtered[i].best_rho2 <= e.best_rho2);
    if (i > 0) CHECK(prof.filtered[i].best_rho2 <= prof.filtered[i - 1].best_rho2);
  }
  const auto c = round_corners(fixtures::square(), 0.25);
  CHECK(prof.exact[0].best_rho2 == doctest::Approx(smoothed_row(c, thickness_certificate(c)).rho2));
  CHECK(prof.exact[0].argbest[0] == canonical_key(fixtures::square()));

  const auto serial = smoothed_profile(levels, s, {}, 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(serial.exact[i].best_crad2 == prof.exact[i].best_crad2);
}

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
#include <limits>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "latknot/functionals.hpp"

using namespace latknot;

namespace {
double round4(double x) { return std::round(x * 1e4) / 1e4; }
}  // namespace

TEST_CASE("Rational reduces and prints") {
  CHECK(Rational::make(4, 6) == Rational{2, 3});
  CHECK(Rational::make(-4, -6) == Rational{2, 3});
  CHECK(Rational::make(3, -9) == Rational{-1, 3});
  CHECK(Rational::make(6, 3).to_string() == "2");
  CHECK(Rational{643, 144}.to_string() == "643/144");
  CHECK_THROWS(Rational::make(1, 0));
}

TEST_CASE("exact D2 squared") {
  CHECK(d2_squared(fixtures::square()) == Rational{2, 3});
  CHECK(d2_squared(fixtures::rectangle()) == Rational{3, 2});
  CHECK(d2_squared(fixtures::trefoil()) == Rational{643, 144});
  CHECK(d2_squared(fixtures::trefoil_detour()) == Rational{5359, 1014});
}

TEST_CASE("diameter") {
  CHECK(diameter_squared(fixtures::square()) == 2);
  CHECK(diameter_squared(fixtures::trefoil()) == 17);
  CHECK(diameter_squared(fixtures::trefoil_detour()) == 24);
  CHECK(round4(diameter(fixtures::trefoil())) == doctest::Approx(4.1231));
  CHECK(round4(diameter(fixtures::trefoil_detour())) == doctest::Approx(4.8990));
}

TEST_CASE("raw rows") {
  struct Expect {
    latknot::LatticePolygon p;
    double rho2, rho_inf, crad2, crad_inf;
  };
  const Expect rows[] = {
      {fixtures::square(), 4.8990, 2.8284, 1.6330, 2.8284},
      {fixtures::rectangle(), 4.8990, 2.6833, 2.4495, 4.4721},
      {fixtures::trefoil(), 11.3576, 5.8209, 4.2262, 8.2462},
      {fixtures::trefoil_detour(), 11.3097, 5.3072, 4.5978, 9.7980},
  };
  for (const auto& e : rows) {
    const auto r = raw_row(e.p);
    CHECK(r.length == e.p.length());
    CHECK(round4(r.rho2) == doctest::Approx(e.rho2).epsilon(1e-12));
    CHECK(round4(r.rho_inf) == doctest::Approx(e.rho_inf).epsilon(1e-12));
    CHECK(round4(r.crad2_sc) == doctest::Approx(e.crad2).epsilon(1e-12));
    CHECK(round4(r.crad_inf_sc) == doctest::Approx(e.crad_inf).epsilon(1e-12));
    // The simple-cubic convention makes rho * CRad = 2 l exactly.
    CHECK(r.rho2 * r.crad2_sc == doctest::Approx(2.0 * double(r.length)).epsilon(1e-14));
    CHECK(r.rho_inf * r.crad_inf_sc == doctest::Approx(2.0 * double(r.length)).epsilon(1e-14));
    const auto from_codes = raw_row(e.p.edge_codes());
    CHECK(from_codes.d2_squared == r.d2_squared);
    CHECK(from_codes.d_inf == r.d_inf);
  }
}

TEST_CASE("D2 squared equals twice the radius of gyration squared") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = fixtures::random_polygon(rng, 20);
    const double exact = d2_squared(p).to_double();
    CHECK(exact == doctest::Approx(2.0 * radius_of_gyration_squared(p)).epsilon(1e-12));
  }
}

// Reference spreads from tests/oracles/dp_oracle.py (adaptive double quadrature).
TEST_CASE("dp on the unit square matches the quadrature oracle") {
  const auto sq = fixtures::square();
  DpOptions opts;
  opts.tol = 1e-9;
  CHECK(dp(sq, 1.0, opts).value == doctest::Approx(0.735090124789234).epsilon(1e-8));
  CHECK(dp(sq, -0.5, opts).value == doctest::Approx(0.425437850518887).epsilon(1e-8));
  CHECK(dp(sq, 0.0, opts).value == doctest::Approx(0.581982417922274).epsilon(1e-8));
  CHECK(dp(sq, 4.0, opts).value == doctest::Approx(0.907343706843534).epsilon(1e-8));
  CHECK(dp(sq, 2.0, opts).value == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(dp(sq, std::numeric_limits<double>::infinity()).value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("dp at p = 2 reproduces the exact D2") {
  for (const auto& p : {fixtures::rectangle(), fixtures::trefoil(), fixtures::trefoil_detour()}) {
    const auto r = dp(p, 2.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::sqrt(d2_squared(p).to_double())).epsilon(1e-10));
  }
}

TEST_CASE("dp rejects exponents outside (-1, inf]") {
  const auto sq = fixtures::square();
  CHECK_THROWS_AS(dp(sq, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(dp(sq, -3.0), std::invalid_argument);
  CHECK_THROWS_AS(dp(sq, std::nan("")), std::invalid_argument);
}

TEST_CASE("dp is nondecreasing in p") {
  std::mt19937_64 rng(5);
  const double ps[] = {-0.5, 0.0, 1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()};
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = fixtures::random_polygon(rng, 10, 20);
    double prev = 0.0;
    for (const double e : ps) {
      const auto r = dp(p, e);
      CHECK(r.converged);
      CHECK(r.value >= prev * (1.0 - 1e-7));
      prev = r.value;
    }
  }
}

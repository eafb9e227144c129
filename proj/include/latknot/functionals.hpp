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

#include <cstddef>
#include <cstdint>
#include <string>

#include "latknot/lattice.hpp"

namespace latknot {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "643/144", or "2" for integers
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// D2^2 = (2/l) * integral |x - xbar|^2 ds, exact.
Rational d2_squared(const LatticePolygon& p);

/// Radius of gyration squared (1/l) * integral |x - xbar|^2 ds, evaluated in
/// floating point from centroid-shifted edge moments.
double radius_of_gyration_squared(const LatticePolygon& p);

std::int64_t diameter_squared(const LatticePolygon& p);
double diameter(const LatticePolygon& p);

struct DpResult {
  double value = 0.0;
  bool converged = true;
  std::size_t boxes = 0;
};

struct DpOptions {
  double tol = 1e-8;
  /// Per edge pair subdivision budget.
  std::size_t max_boxes_per_pair = 200000;
};

/// p-spread over unit edges. p must lie in (-1, inf]; p = 0 is the geometric
/// mean of chord lengths and p = +inf is the diameter. Throws
/// std::invalid_argument for p <= -1 or NaN.
DpResult dp(const LatticePolygon& p, double exponent, const DpOptions& opts = {});

/// Raw lattice row under the simple-cubic convention Thi_poly = 1/2.
struct RawFunctionalRow {
  std::size_t length = 0;
  Rational d2_squared;
  double d2 = 0.0;
  double d_inf = 0.0;
  double rho2 = 0.0;
  double rho_inf = 0.0;
  double crad2_sc = 0.0;
  double crad_inf_sc = 0.0;
};

RawFunctionalRow raw_row(const LatticePolygon& p);

/// Same row from the edge code sequence alone (all raw functionals are
/// translation invariant). Used on the level generator's hot path.
RawFunctionalRow raw_row(std::span<const DirCode> edges);

}  // namespace latknot

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
#include <cstddef>
#include <vector>

#include "latknot/certify.hpp"
#include "latknot/curve.hpp"
#include "latknot/explorer.hpp"
#include "latknot/smoothing.hpp"

namespace latknot {

double curve_length(const LineArcCurve& c);

/// D2 from closed-form piece moments: D2^2 = 2 [(1/L) int |x|^2 - |xbar|^2].
double curve_d2(const LineArcCurve& c);

/// Diameter to within tol: the returned value is attained by a pair of curve
/// points and the true diameter is at most value + tol.
double curve_diameter(const LineArcCurve& c, double tol = 1e-9);

struct SmoothedRow {
  double length = 0.0;
  double tau_cert = 0.0;
  double d2 = 0.0;
  double d_inf = 0.0;
  double rho2 = 0.0;
  double rho_inf = 0.0;
  double crad2 = 0.0;
  double crad_inf = 0.0;
};

/// Throws std::invalid_argument unless the certificate is certified.
SmoothedRow smoothed_row(const LineArcCurve& c, const ThicknessCertificate& cert);

/// Scale by 1/tau.
LineArcCurve normalize(const LineArcCurve& c, double tau);

struct SmoothedProfileRow {
  int level = 0;
  std::uint64_t members = 0;
  std::uint64_t curves = 0;   // certified curves that contributed
  std::uint64_t skipped = 0;  // discarded by embeddedness or inconclusive
  double best_rho2 = 0.0;     // infinity when no curve contributed
  double best_rho_inf = 0.0;
  double best_crad2 = 0.0;
  double best_crad_inf = 0.0;
  std::array<CanonicalKey, 4> argbest;
};

struct SmoothedProfile {
  std::vector<SmoothedProfileRow> exact;
  std::vector<SmoothedProfileRow> filtered;  // running minima, counts accumulated
};

SmoothedProfile smoothed_profile(const std::vector<LevelSet>& levels, const SmoothingScheme& scheme,
                                 const CertifyOptions& opts = {}, unsigned workers = 1);

}  // namespace latknot

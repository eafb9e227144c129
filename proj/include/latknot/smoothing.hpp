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

#include <string>
#include <vector>

#include "latknot/certify.hpp"
#include "latknot/curve.hpp"
#include "latknot/lattice.hpp"

namespace latknot {

/// Placeholder for vertex displacement records; always empty here.
struct Perturbation {};

struct SmoothingScheme {
  std::vector<double> radii{0.25};
  std::vector<Perturbation> perturbations;

  /// Throws std::invalid_argument unless every radius lies in (0, 1/2) and
  /// the list is non-empty.
  void validate() const;
};

/// Replace every right-angle corner of P by the tangent quarter circle of
/// radius r. Pieces start with the arc at the first turning vertex.
LineArcCurve round_corners(const LatticePolygon& p, double r);

/// Number of vertices where the polygon turns.
std::size_t turning_vertex_count(const LatticePolygon& p);

struct RoundedCurve {
  double radius = 0.0;
  LineArcCurve curve;
};

struct DiscardedCurve {
  double radius = 0.0;
  std::string reason;
};

struct SchemeCurves {
  std::vector<RoundedCurve> kept;
  std::vector<DiscardedCurve> discarded;
};

/// One rounded curve per radius, keeping only those that pass the
/// embeddedness certificate.
SchemeCurves scheme_curves(const LatticePolygon& p, const SmoothingScheme& scheme, const CertifyOptions& opts = {});

}  // namespace latknot

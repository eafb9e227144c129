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
#include <optional>
#include <string>
#include <utility>

#include "latknot/curve.hpp"
#include "latknot/interval.hpp"

namespace latknot {

/// Interval enclosure of a piece over the parameter range [s0, s1].
IVec3 enclose_point(const Piece& p, double s0, double s1);
/// Enclosure of d/ds of the piece position over [s0, s1].
IVec3 enclose_derivative(const Piece& p, double s0, double s1);

/// Point pairs whose arclength separation along the closed curve is below
/// `min_separation` are excluded from the distance minimum.
struct ArclengthExclusion {
  double offset_a = 0.0;  // arclength position of piece A's start
  double offset_b = 0.0;
  double total_length = 0.0;
  double min_separation = 0.0;
};

struct DistanceOptions {
  /// Boxes whose distance lower bound reaches this are closed immediately.
  double stop_threshold = 0.0;
  /// Arclength width below which a box is closed, and the slack allowed
  /// against the best sampled distance.
  double tol = 1e-6;
  int max_depth = 48;
  std::optional<ArclengthExclusion> exclusion;
};

struct DistanceBound {
  bool conclusive = true;
  /// Certified lower bound on the distance (infinity if every box was excluded).
  double lower_bound = 0.0;
  /// Smallest sampled distance (an attained value), infinity if none.
  double upper_bound = 0.0;
  std::size_t boxes = 0;
};

/// Branch and bound over the parameter rectangle of the two pieces using
/// interval enclosures of |A(s) - B(t)|^2 (natural and mean-value forms).
DistanceBound piece_distance_lower_bound(const Piece& a, const Piece& b, const DistanceOptions& opts);

struct CertifyOptions {
  double tol = 1e-6;
  int max_depth = 48;
  /// Embeddedness requires every non-adjacent pair to be at least this far apart.
  double embed_margin = 1e-9;
  /// Junction tolerances for the C^1 check.
  double junction_tol = 1e-9;
  /// Pair searches normally stop once a pair is known to be 2 r_min apart,
  /// since tau is then r_min whatever the exact distance. Set this to bound
  /// the non-adjacent distance to within tol instead (slower).
  bool exact_distance = false;
};

struct EmbeddednessResult {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
  std::size_t boxes = 0;
};

/// Non-adjacent pieces (not consecutive in cyclic order) must be separated by
/// more than the margin.
EmbeddednessResult embeddedness_certificate(const LineArcCurve& curve, const CertifyOptions& opts = {});

enum class CertStatus { certified, inconclusive };

struct ThicknessCertificate {
  CertStatus status = CertStatus::inconclusive;
  double tau_cert = 0.0;
  double min_arc_radius = 0.0;            // infinity without arcs
  // Lower bound; tight to tol/2 only with exact_distance or when below r_min.
  double min_nonadjacent_halfdist = 0.0;  // infinity when every pair is exempt
  double max_curvature = 0.0;
  double max_tangent_mismatch = 0.0;
  double exclusion_arclength = 0.0;
  std::size_t pairs_checked = 0;
  std::size_t boxes_explored = 0;
  double tol = 0.0;
  int max_depth = 0;
  std::string note;
};

/// Certified lower bound on thickness: min(smallest arc radius, half the
/// smallest distance between non-adjacent pieces). Point pairs closer than
/// pi * (smallest arc radius) in arclength are left out of the distance
/// minimum: on a curve with curvature at most 1/R, a chord spanning less than
/// pi R of arc makes an acute angle with the tangent, so such pairs are never
/// doubly critical.
ThicknessCertificate thickness_certificate(const LineArcCurve& curve, const CertifyOptions& opts = {});

std::string_view to_string(CertStatus s);

}  // namespace latknot

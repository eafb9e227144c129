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

#include "latknot/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace latknot {

namespace {

Vec3d to_d(const Vec3i& v) { return {double(v.x), double(v.y), double(v.z)}; }

bool turns(const LatticePolygon& p, std::size_t i) {
  const std::size_t n = p.length();
  return p.edge((i + n - 1) % n) != p.edge(i);
}

}  // namespace

void SmoothingScheme::validate() const {
  if (radii.empty()) throw std::invalid_argument("smoothing scheme has no radii");
  for (const double r : radii) {
    if (!(r > 0.0 && r < 0.5)) throw std::invalid_argument("smoothing radius must lie in (0, 1/2)");
  }
}

std::size_t turning_vertex_count(const LatticePolygon& p) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.length(); ++i) k += turns(p, i) ? 1 : 0;
  return k;
}

LineArcCurve round_corners(const LatticePolygon& p, double r) {
  if (!(r > 0.0 && r < 0.5)) throw std::invalid_argument("rounding radius must lie in (0, 1/2)");
  const std::size_t n = p.length();
  std::vector<std::size_t> corners;
  for (std::size_t i = 0; i < n; ++i) {
    if (!turns(p, i)) continue;
    if (p.edge((i + n - 1) % n) == negate(p.edge(i))) throw std::logic_error("backtracking vertex in polygon");
    corners.push_back(i);
  }

  LineArcCurve c;
  c.pieces.reserve(2 * corners.size());
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const std::size_t i = corners[k];
    const Vec3d v = to_d(p.vertex(i));
    const Vec3d a = to_d(kDirections[p.edge((i + n - 1) % n)]);
    const Vec3d b = to_d(kDirections[p.edge(i)]);
    c.pieces.push_back(Arc{v - r * a + r * b, r, -b, a, 0.0, 0.5 * M_PI});

    const std::size_t j = corners[(k + 1) % corners.size()];
    const Vec3d w = to_d(p.vertex(j));
    const Vec3d a2 = to_d(kDirections[p.edge((j + n - 1) % n)]);
    const Segment seg{v + r * b, w - r * a2};
    if ((seg.end - seg.start).norm() > 0.0) c.pieces.push_back(seg);
  }
  return c;
}

SchemeCurves scheme_curves(const LatticePolygon& p, const SmoothingScheme& scheme, const CertifyOptions& opts) {
  scheme.validate();
  SchemeCurves out;
  for (const double r : scheme.radii) {
    LineArcCurve curve = round_corners(p, r);
    const auto emb = embeddedness_certificate(curve, opts);
    if (emb.pass) {
      out.kept.push_back({r, std::move(curve)});
    } else {
      out.discarded.push_back({r, emb.reason});
    }
  }
  return out;
}

}  // namespace latknot

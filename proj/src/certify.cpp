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

#include "latknot/certify.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace latknot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

IVec3 point_interval(const Vec3d& v) { return {Interval(v.x), Interval(v.y), Interval(v.z)}; }

Interval angle_range(const Arc& a, double s0, double s1) {
  const Interval s = s0 == s1 ? Interval(s0) : Interval(s0, s1);
  return Interval(a.theta0) + s * Interval(a.sweep);
}

// Distance from x to the nearest multiple of period.
double tri(double x, double period) {
  const double r = std::fmod(std::abs(x), period);
  return std::min(r, period - r);
}

// Largest arclength separation over the box.
double max_separation(const ArclengthExclusion& ex, double a0, double a1, double b0, double b1) {
  const double lo = ex.offset_b + b0 - (ex.offset_a + a1);
  const double hi = ex.offset_b + b1 - (ex.offset_a + a0);
  const double L = ex.total_length;
  // Does [lo, hi] contain an odd multiple of L/2?
  const double k = std::ceil((lo / L) - 0.5);
  if (k + 0.5 <= hi / L) return 0.5 * L;
  return std::max(tri(lo, L), tri(hi, L));
}

double separation(const ArclengthExclusion& ex, double a, double b) {
  return tri(ex.offset_b + b - (ex.offset_a + a), ex.total_length);
}

struct Box {
  double s0, s1, t0, t1;
  double lb;  // lower bound on the squared distance
  int depth;
  friend bool operator<(const Box& x, const Box& y) { return x.lb > y.lb; }  // min-heap
};

double lower_bound_sq(const Piece& a, const Piece& b, double s0, double s1, double t0, double t1) {
  const IVec3 pa = enclose_point(a, s0, s1);
  const IVec3 pb = enclose_point(b, t0, t1);
  const IVec3 d = pa - pb;
  const double natural = norm2(d).lo();

  const double sc = 0.5 * (s0 + s1), tc = 0.5 * (t0 + t1);
  const Interval fc = norm2(enclose_point(a, sc, sc) - enclose_point(b, tc, tc));
  const Interval gs = Interval(2.0) * dot(d, enclose_derivative(a, s0, s1));
  const Interval gt = Interval(-2.0) * dot(d, enclose_derivative(b, t0, t1));
  const Interval ds = s0 == s1 ? Interval(0.0) : Interval(s0, s1) - Interval(sc);
  const Interval dt = t0 == t1 ? Interval(0.0) : Interval(t0, t1) - Interval(tc);
  const double mean_value = (fc + gs * ds + gt * dt).lo();
  return std::max({natural, mean_value, 0.0});
}

double sqrt_down(double x) { return x <= 0.0 ? 0.0 : std::nextafter(std::sqrt(x), 0.0); }

}  // namespace

IVec3 enclose_point(const Piece& p, double s0, double s1) {
  if (const auto* seg = std::get_if<Segment>(&p)) {
    const Interval s = s0 == s1 ? Interval(s0) : Interval(s0, s1);
    const Vec3d d = seg->end - seg->start;
    return point_interval(seg->start) + IVec3{s * Interval(d.x), s * Interval(d.y), s * Interval(d.z)};
  }
  const Arc& a = std::get<Arc>(p);
  const Interval t = angle_range(a, s0, s1);
  const Interval c = cos(t), s = sin(t);
  const Interval r(a.radius);
  return point_interval(a.center) + r * (c * point_interval(a.u) + s * point_interval(a.v));
}

IVec3 enclose_derivative(const Piece& p, double s0, double s1) {
  if (const auto* seg = std::get_if<Segment>(&p)) return point_interval(seg->end - seg->start);
  const Arc& a = std::get<Arc>(p);
  const Interval t = angle_range(a, s0, s1);
  const Interval c = cos(t), s = sin(t);
  const Interval k = Interval(a.radius) * Interval(a.sweep);
  return k * ((-s) * point_interval(a.u) + c * point_interval(a.v));
}

namespace {

DistanceBound distance_search(const Piece& a, const Piece& b, const DistanceOptions& opts, double abort_below) {
  DistanceBound out;
  out.lower_bound = kInf;
  out.upper_bound = kInf;
  const double len_a = piece_length(a), len_b = piece_length(b);
  const auto& ex = opts.exclusion;

  auto admissible = [&](double s, double t) { return !ex || separation(*ex, s * len_a, t * len_b) >= ex->min_separation; };
  auto sample = [&](double s, double t) {
    if (!admissible(s, t)) return;
    out.upper_bound = std::min(out.upper_bound, (point_at(a, s) - point_at(b, t)).norm());
  };
  for (const double s : {0.0, 0.5, 1.0}) {
    for (const double t : {0.0, 0.5, 1.0}) sample(s, t);
  }

  std::priority_queue<Box> queue;
  queue.push({0.0, 1.0, 0.0, 1.0, lower_bound_sq(a, b, 0.0, 1.0, 0.0, 1.0), 0});
  ++out.boxes;
  while (!queue.empty()) {
    const Box box = queue.top();
    queue.pop();
    if (out.upper_bound < abort_below) {
      out.lower_bound = 0.0;
      return out;
    }
    if (ex && max_separation(*ex, box.s0 * len_a, box.s1 * len_a, box.t0 * len_b, box.t1 * len_b) <
                  ex->min_separation) {
      continue;
    }
    const double ld = sqrt_down(box.lb);
    const double width = std::max((box.s1 - box.s0) * len_a, (box.t1 - box.t0) * len_b);
    if ((opts.stop_threshold > 0.0 && ld >= opts.stop_threshold) || ld >= out.upper_bound - opts.tol ||
        width < opts.tol) {
      out.lower_bound = std::min(out.lower_bound, ld);
      continue;
    }
    if (box.depth >= opts.max_depth) {
      out.conclusive = false;
      out.lower_bound = std::min(out.lower_bound, ld);
      continue;
    }
    const double sm = 0.5 * (box.s0 + box.s1), tm = 0.5 * (box.t0 + box.t1);
    sample(sm, tm);
    const double ss[3] = {box.s0, sm, box.s1};
    const double ts[3] = {box.t0, tm, box.t1};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        // The parent's bound also holds on each child.
        const double lb = std::max(box.lb, lower_bound_sq(a, b, ss[i], ss[i + 1], ts[j], ts[j + 1]));
        queue.push({ss[i], ss[i + 1], ts[j], ts[j + 1], lb, box.depth + 1});
        ++out.boxes;
      }
    }
  }
  return out;
}

}  // namespace

DistanceBound piece_distance_lower_bound(const Piece& a, const Piece& b, const DistanceOptions& opts) {
  if (opts.stop_threshold < 0.0) throw std::invalid_argument("stop threshold must be non-negative");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return distance_search(a, b, opts, -1.0);
}

std::string_view to_string(CertStatus s) { return s == CertStatus::certified ? "certified" : "inconclusive"; }

namespace {

bool adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return j == i + 1 || (i == 0 && j + 1 == n) || i == j;
}

}  // namespace

EmbeddednessResult embeddedness_certificate(const LineArcCurve& curve, const CertifyOptions& opts) {
  EmbeddednessResult r;
  const std::size_t n = curve.size();
  DistanceOptions dopts;
  dopts.stop_threshold = opts.embed_margin;
  dopts.tol = opts.tol;
  dopts.max_depth = opts.max_depth;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent(i, j, n)) continue;
      const auto d = distance_search(curve.pieces[i], curve.pieces[j], dopts, opts.embed_margin);
      r.boxes += d.boxes;
      if (!d.conclusive || d.lower_bound <= opts.embed_margin) {
        r.pass = false;
        r.witness = {i, j};
        r.reason = !d.conclusive ? "distance bound inconclusive at the depth budget"
                                 : "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                       " come within the embedding margin";
        return r;
      }
    }
  }
  return r;
}

ThicknessCertificate thickness_certificate(const LineArcCurve& curve, const CertifyOptions& opts) {
  ThicknessCertificate cert;
  cert.tol = opts.tol;
  cert.max_depth = opts.max_depth;
  const std::size_t n = curve.size();

  const JunctionReport junctions = check_junctions(curve);
  cert.max_tangent_mismatch = junctions.max_tangent_mismatch;

  std::vector<double> offsets(n + 1, 0.0);
  cert.min_arc_radius = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i + 1] = offsets[i] + piece_length(curve.pieces[i]);
    if (const auto* arc = std::get_if<Arc>(&curve.pieces[i])) cert.min_arc_radius = std::min(cert.min_arc_radius, arc->radius);
  }
  cert.max_curvature = std::isinf(cert.min_arc_radius) ? 0.0 : 1.0 / cert.min_arc_radius;
  const double total = offsets[n];

  if (junctions.max_gap > opts.junction_tol || junctions.max_tangent_mismatch > opts.junction_tol) {
    cert.note = "curve is not C^1 at some junction";
    return cert;
  }

  DistanceOptions dopts;
  dopts.tol = opts.tol;
  dopts.max_depth = opts.max_depth;
  cert.exclusion_arclength = std::isinf(cert.min_arc_radius) ? 0.0 : M_PI * cert.min_arc_radius;

  double best_ub = kInf;
  double min_dist = kInf;
  bool conclusive = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent(i, j, n)) continue;
      if (cert.exclusion_arclength > 0.0) {
        dopts.exclusion = ArclengthExclusion{offsets[i], offsets[j], total, cert.exclusion_arclength};
      }
      double stop = best_ub;
      if (!opts.exact_distance) stop = std::min(stop, 2.0 * cert.min_arc_radius);
      dopts.stop_threshold = std::isinf(stop) ? 0.0 : stop;
      const auto d = piece_distance_lower_bound(curve.pieces[i], curve.pieces[j], dopts);
      ++cert.pairs_checked;
      cert.boxes_explored += d.boxes;
      conclusive = conclusive && d.conclusive;
      min_dist = std::min(min_dist, d.lower_bound);
      best_ub = std::min(best_ub, d.upper_bound);
    }
  }
  cert.min_nonadjacent_halfdist = 0.5 * min_dist;
  cert.tau_cert = std::min(cert.min_arc_radius, cert.min_nonadjacent_halfdist);
  if (!conclusive) {
    cert.note = "a piece-pair distance bound hit the depth budget";
    return cert;
  }
  if (!(cert.tau_cert > 0.0) || std::isinf(cert.tau_cert)) {
    cert.note = "no positive finite thickness bound";
    return cert;
  }
  cert.status = CertStatus::certified;
  return cert;
}

}  // namespace latknot

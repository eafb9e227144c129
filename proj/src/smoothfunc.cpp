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

#include "latknot/smoothfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>

namespace latknot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Moments {
  double length = 0.0;
  Vec3d first;
  double second = 0.0;
};

// Moments of a piece relative to origin o.
Moments piece_moments(const Piece& p, const Vec3d& o) {
  Moments m;
  if (const auto* s = std::get_if<Segment>(&p)) {
    const Vec3d a = s->start - o, d = s->end - s->start;
    m.length = d.norm();
    m.first = m.length * (a + 0.5 * d);
    m.second = m.length * (a.dot(a) + a.dot(d) + d.dot(d) / 3.0);
    return m;
  }
  const Arc& a = std::get<Arc>(p);
  const Vec3d c = a.center - o;
  const double r = a.radius, t0 = a.theta0, t1 = a.theta0 + a.sweep;
  const double ds = std::sin(t1) - std::sin(t0), dc = std::cos(t0) - std::cos(t1);
  m.length = r * a.sweep;
  m.first = r * (a.sweep * c + r * (ds * a.u + dc * a.v));
  m.second = r * ((c.dot(c) + r * r) * a.sweep + 2.0 * r * (c.dot(a.u) * ds + c.dot(a.v) * dc));
  return m;
}

IVec3 ipoint(const Vec3d& v) { return {Interval(v.x), Interval(v.y), Interval(v.z)}; }

struct MaxBox {
  std::size_t i, j;
  double s0, s1, t0, t1;
  double ub;
  friend bool operator<(const MaxBox& x, const MaxBox& y) { return x.ub < y.ub; }
};

double upper_bound_sq(const Piece& a, const Piece& b, double s0, double s1, double t0, double t1) {
  const IVec3 d = enclose_point(a, s0, s1) - enclose_point(b, t0, t1);
  const double natural = norm2(d).hi();
  const double sc = 0.5 * (s0 + s1), tc = 0.5 * (t0 + t1);
  const Interval fc = norm2(ipoint(point_at(a, sc) - point_at(b, tc)));
  const Interval gs = Interval(2.0) * dot(d, enclose_derivative(a, s0, s1));
  const Interval gt = Interval(-2.0) * dot(d, enclose_derivative(b, t0, t1));
  const double mv = (fc + gs * (Interval(s0, s1) - Interval(sc)) + gt * (Interval(t0, t1) - Interval(tc))).hi();
  return std::min(natural, mv);
}

Vec3d cross(const Vec3d& a, const Vec3d& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Arcs on a common centre and plane have a continuum of farthest pairs, which
// branch and bound cannot close. Their largest distance is closed-form.
std::optional<double> concentric_max(const Arc& a, const Arc& b) {
  constexpr double kEps = 1e-12;
  const double scale = std::max({1.0, a.radius, b.radius});
  if ((a.center - b.center).norm() > kEps * scale) return std::nullopt;
  const Vec3d na = cross(a.u, a.v), nb = cross(b.u, b.v);
  if (cross(na, nb).norm() > kEps) return std::nullopt;
  const double sigma = na.dot(nb) > 0.0 ? 1.0 : -1.0;
  const double phi = std::atan2(b.u.dot(a.v), b.u.dot(a.u));
  // Angles of b measured in a's frame.
  const double b0 = sigma > 0 ? phi + b.theta0 : phi - b.theta0 - b.sweep;
  const double b1 = b0 + b.sweep;
  const double lo = a.theta0 - b1, hi = a.theta0 + a.sweep - b0;
  // Angular difference in [lo, hi] closest to an odd multiple of pi.
  const double k = std::ceil((lo - M_PI) / (2.0 * M_PI));
  double delta;
  if (M_PI + 2.0 * M_PI * k <= hi) {
    delta = M_PI;
  } else {
    auto gap = [](double x) { return std::abs(std::remainder(x - M_PI, 2.0 * M_PI)); };
    delta = M_PI - std::min(gap(lo), gap(hi));
  }
  const double r1 = a.radius, r2 = b.radius;
  return std::sqrt(std::max(0.0, r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(delta)));
}

}  // namespace

double curve_length(const LineArcCurve& c) {
  double L = 0.0;
  for (const Piece& p : c.pieces) L += piece_length(p);
  return L;
}

double curve_d2(const LineArcCurve& c) {
  if (c.pieces.empty()) throw std::invalid_argument("empty curve");
  const Vec3d o = piece_start(c.pieces.front());
  double L = 0.0, second = 0.0;
  Vec3d first;
  for (const Piece& p : c.pieces) {
    const Moments m = piece_moments(p, o);
    L += m.length;
    first = first + m.first;
    second += m.second;
  }
  const Vec3d mean = first * (1.0 / L);
  return std::sqrt(std::max(0.0, 2.0 * (second / L - mean.dot(mean))));
}

double curve_diameter(const LineArcCurve& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = c.size();
  // Candidate points: piece endpoints, midpoints and arc points in the
  // coordinate directions.
  std::vector<Vec3d> pts;
  for (const Piece& p : c.pieces) {
    for (const double s : {0.0, 0.5, 1.0}) pts.push_back(point_at(p, s));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, (pts[i] - pts[j]).norm());
  }

  std::priority_queue<MaxBox> queue;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto* ai = std::get_if<Arc>(&c.pieces[i]);
      const auto* aj = std::get_if<Arc>(&c.pieces[j]);
      if (ai && aj) {
        if (const auto exact = concentric_max(*ai, *aj)) {
          best = std::max(best, *exact);
          continue;
        }
      }
      const double ub = upper_bound_sq(c.pieces[i], c.pieces[j], 0.0, 1.0, 0.0, 1.0);
      queue.push({i, j, 0.0, 1.0, 0.0, 1.0, ub});
    }
  }
  while (!queue.empty()) {
    const MaxBox box = queue.top();
    queue.pop();
    if (std::sqrt(box.ub) <= best + tol) break;  // every remaining box is lower
    const Piece& a = c.pieces[box.i];
    const Piece& b = c.pieces[box.j];
    const double sm = 0.5 * (box.s0 + box.s1), tm = 0.5 * (box.t0 + box.t1);
    best = std::max(best, (point_at(a, sm) - point_at(b, tm)).norm());
    if (std::max((box.s1 - box.s0) * piece_length(a), (box.t1 - box.t0) * piece_length(b)) < tol) continue;
    const double ss[3] = {box.s0, sm, box.s1};
    const double ts[3] = {box.t0, tm, box.t1};
    for (int u = 0; u < 2; ++u) {
      for (int v = 0; v < 2; ++v) {
        const double ub = upper_bound_sq(a, b, ss[u], ss[u + 1], ts[v], ts[v + 1]);
        if (std::sqrt(ub) > best + tol) queue.push({box.i, box.j, ss[u], ss[u + 1], ts[v], ts[v + 1], ub});
      }
    }
  }
  return best;
}

SmoothedRow smoothed_row(const LineArcCurve& c, const ThicknessCertificate& cert) {
  if (cert.status != CertStatus::certified || !(cert.tau_cert > 0.0)) {
    throw std::invalid_argument("smoothed row needs a certified positive thickness bound");
  }
  SmoothedRow r;
  r.length = curve_length(c);
  r.tau_cert = cert.tau_cert;
  r.d2 = curve_d2(c);
  r.d_inf = curve_diameter(c);
  r.rho2 = r.length / r.d2;
  r.rho_inf = r.length / r.d_inf;
  r.crad2 = r.d2 / r.tau_cert;
  r.crad_inf = r.d_inf / r.tau_cert;
  return r;
}

LineArcCurve normalize(const LineArcCurve& c, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("normalization thickness must be positive");
  return scaled(c, 1.0 / tau);
}

namespace {

struct Partial {
  std::uint64_t curves = 0, skipped = 0;
  std::array<double, 4> best{kInf, kInf, kInf, kInf};
  std::array<std::size_t, 4> arg{};
};

void absorb(Partial& into, const Partial& from) {
  into.curves += from.curves;
  into.skipped += from.skipped;
  for (int k = 0; k < 4; ++k) {
    // Workers cover increasing member ranges, so strict < keeps the first.
    if (from.best[k] < into.best[k]) {
      into.best[k] = from.best[k];
      into.arg[k] = from.arg[k];
    }
  }
}

Partial evaluate_range(const LevelSet& level, std::size_t lo, std::size_t hi, const SmoothingScheme& scheme,
                       const CertifyOptions& opts) {
  Partial part;
  for (std::size_t m = lo; m < hi; ++m) {
    const auto curves = scheme_curves(level.representative(m), scheme, opts);
    part.skipped += curves.discarded.size();
    for (const auto& rc : curves.kept) {
      const auto cert = thickness_certificate(rc.curve, opts);
      if (cert.status != CertStatus::certified) {
        ++part.skipped;
        continue;
      }
      ++part.curves;
      const SmoothedRow row = smoothed_row(rc.curve, cert);
      const std::array<double, 4> vals{row.rho2, row.rho_inf, row.crad2, row.crad_inf};
      for (int k = 0; k < 4; ++k) {
        if (vals[k] < part.best[k]) {
          part.best[k] = vals[k];
          part.arg[k] = m;
        }
      }
    }
  }
  return part;
}

}  // namespace

SmoothedProfile smoothed_profile(const std::vector<LevelSet>& levels, const SmoothingScheme& scheme,
                                 const CertifyOptions& opts, unsigned workers) {
  scheme.validate();
  workers = std::max(1u, workers);
  SmoothedProfile out;
  for (const LevelSet& level : levels) {
    const std::size_t n = level.size();
    const std::size_t w = std::min<std::size_t>(workers, std::max<std::size_t>(1, n));
    std::vector<Partial> parts(w);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t lo = n * t / w, hi = n * (t + 1) / w;
      threads.emplace_back([&, t, lo, hi] { parts[t] = evaluate_range(level, lo, hi, scheme, opts); });
    }
    for (auto& th : threads) th.join();
    Partial total;
    for (const Partial& p : parts) absorb(total, p);

    SmoothedProfileRow row;
    row.level = static_cast<int>(level.level());
    row.members = n;
    row.curves = total.curves;
    row.skipped = total.skipped;
    row.best_rho2 = total.best[0];
    row.best_rho_inf = total.best[1];
    row.best_crad2 = total.best[2];
    row.best_crad_inf = total.best[3];
    for (int k = 0; k < 4; ++k) {
      if (std::isfinite(total.best[k])) row.argbest[k] = level.key(total.arg[k]);
    }
    out.exact.push_back(row);
  }

  for (const auto& row : out.exact) {
    if (out.filtered.empty()) {
      out.filtered.push_back(row);
      continue;
    }
    SmoothedProfileRow f = row;
    const SmoothedProfileRow& prev = out.filtered.back();
    f.members += prev.members;
    f.curves += prev.curves;
    f.skipped += prev.skipped;
    const double* pb[4] = {&prev.best_rho2, &prev.best_rho_inf, &prev.best_crad2, &prev.best_crad_inf};
    double* fb[4] = {&f.best_rho2, &f.best_rho_inf, &f.best_crad2, &f.best_crad_inf};
    for (int k = 0; k < 4; ++k) {
      if (*pb[k] <= *fb[k]) {
        *fb[k] = *pb[k];
        f.argbest[k] = prev.argbest[k];
      }
    }
    out.filtered.push_back(f);
  }
  return out;
}

}  // namespace latknot

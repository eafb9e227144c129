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

#include "latknot/functionals.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace latknot {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// With a = edge start and d = unit edge vector, 2*int(x) = 2a + d and
// 6*int|x|^2 = 6|a|^2 + 6 a.d + 2. Summing gives U = 2*S1 and T = 6*S2, and
// D2^2 = (2 l T - 3 |U|^2) / (6 l^2).
template <typename VertexAt>
Rational d2_squared_impl(std::size_t n, VertexAt&& vertex_at) {
  Vec3i u{};
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i a = vertex_at(i);
    const Vec3i d = vertex_at(i + 1) - a;
    u = u + a + a + d;
    t += 6 * a.norm2() + 6 * a.dot(d) + 2;
  }
  const auto l = static_cast<std::int64_t>(n);
  return Rational::make(2 * l * t - 3 * u.norm2(), 6 * l * l);
}

}  // namespace

Rational d2_squared(const LatticePolygon& p) {
  return d2_squared_impl(p.length(), [&](std::size_t i) { return p.vertex(i); });
}

double radius_of_gyration_squared(const LatticePolygon& p) {
  const std::size_t n = p.length();
  double cx = 0, cy = 0, cz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i& a = p.vertex(i);
    const Vec3i& b = p.vertex(i + 1);
    cx += 0.5 * (a.x + b.x);
    cy += 0.5 * (a.y + b.y);
    cz += 0.5 * (a.z + b.z);
  }
  cx /= static_cast<double>(n);
  cy /= static_cast<double>(n);
  cz /= static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i& a = p.vertex(i);
    const Vec3i& b = p.vertex(i + 1);
    const double ax = a.x - cx, ay = a.y - cy, az = a.z - cz;
    const double dx = b.x - a.x, dy = b.y - a.y, dz = b.z - a.z;
    acc += ax * ax + ay * ay + az * az + (ax * dx + ay * dy + az * dz) + 1.0 / 3.0;
  }
  return acc / static_cast<double>(n);
}

std::int64_t diameter_squared(const LatticePolygon& p) {
  const auto v = p.vertices();
  std::int64_t best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max<std::int64_t>(best, (v[i] - v[j]).norm2());
  }
  return best;
}

double diameter(const LatticePolygon& p) { return std::sqrt(static_cast<double>(diameter_squared(p))); }

namespace {

using Gauss = boost::math::quadrature::gauss<double, 10>;

struct EdgeGeom {
  double ax, ay, az;
  double dx, dy, dz;
};

class PairIntegrator {
 public:
  PairIntegrator(const EdgeGeom& e, const EdgeGeom& f, double exponent, std::size_t budget)
      : e_(e), f_(f), p_(exponent), budget_(budget) {
    // Full node/weight set on [0, 1].
    const auto& x = Gauss::abscissa();
    const auto& w = Gauss::weights();
    for (std::size_t k = 0; k < x.size(); ++k) {
      nodes_.push_back(0.5 + 0.5 * x[k]);
      weights_.push_back(0.5 * w[k]);
      if (x[k] != 0.0) {
        nodes_.push_back(0.5 - 0.5 * x[k]);
        weights_.push_back(0.5 * w[k]);
      }
    }
  }

  double integrand(double s, double t) const {
    const double x = e_.ax + s * e_.dx - f_.ax - t * f_.dx;
    const double y = e_.ay + s * e_.dy - f_.ay - t * f_.dy;
    const double z = e_.az + s * e_.dz - f_.az - t * f_.dz;
    const double r2 = x * x + y * y + z * z;
    if (p_ == 0.0) return 0.5 * std::log(r2);
    return std::pow(r2, 0.5 * p_);
  }

  double rule(double s0, double s1, double t0, double t1) const {
    const double hs = s1 - s0, ht = t1 - t0;
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double s = s0 + hs * nodes_[i];
      double row = 0.0;
      for (std::size_t j = 0; j < nodes_.size(); ++j) row += weights_[j] * integrand(s, t0 + ht * nodes_[j]);
      acc += weights_[i] * row;
    }
    return acc * hs * ht;
  }

  /// Recursive bisection; a box is accepted when one refinement changes its
  /// value by less than its tolerance share. Children inherit half the
  /// parent's tolerance, so refinement concentrates at point singularities.
  double integrate(double abs_tol) {
    const double whole = rule(0, 1, 0, 1);
    return refine(0, 1, 0, 1, whole, abs_tol, 0);
  }

  bool converged() const { return converged_; }
  std::size_t boxes() const { return boxes_; }

 private:
  double refine(double s0, double s1, double t0, double t1, double coarse, double tol, int depth) {
    const double sm = 0.5 * (s0 + s1), tm = 0.5 * (t0 + t1);
    const double q[4] = {rule(s0, sm, t0, tm), rule(sm, s1, t0, tm), rule(s0, sm, tm, t1), rule(sm, s1, tm, t1)};
    boxes_ += 4;
    const double fine = q[0] + q[1] + q[2] + q[3];
    if (std::abs(fine - coarse) <= tol) return fine;
    if (boxes_ > budget_ || depth > 60) {
      converged_ = false;
      return fine;
    }
    return refine(s0, sm, t0, tm, q[0], 0.5 * tol, depth + 1) + refine(sm, s1, t0, tm, q[1], 0.5 * tol, depth + 1) +
           refine(s0, sm, tm, t1, q[2], 0.5 * tol, depth + 1) + refine(sm, s1, tm, t1, q[3], 0.5 * tol, depth + 1);
  }

  EdgeGeom e_, f_;
  double p_;
  std::size_t budget_;
  std::size_t boxes_ = 0;
  bool converged_ = true;
  std::vector<double> nodes_, weights_;
};

// Double integral of |s - t|^p (or log|s - t|) over the unit square, the
// same-edge contribution. The integrand depends on |s - t| only, so it
// reduces to 2 * int_0^1 (1 - u) u^p du.
double same_edge_integral(double exponent) {
  if (exponent == 0.0) return -1.5;
  return 2.0 / ((exponent + 1.0) * (exponent + 2.0));
}

}  // namespace

DpResult dp(const LatticePolygon& poly, double exponent, const DpOptions& opts) {
  if (std::isnan(exponent) || exponent <= -1.0) {
    throw std::invalid_argument("p-spread requires p > -1");
  }
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (std::isinf(exponent)) return {diameter(poly), true, 0};

  const std::size_t n = poly.length();
  std::vector<EdgeGeom> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3i& a = poly.vertex(i);
    const Vec3i d = poly.vertex(i + 1) - a;
    edges[i] = {double(a.x), double(a.y), double(a.z), double(d.x), double(d.y), double(d.z)};
  }

  // Relative accuracy of the mean translates into relative accuracy of the
  // value with factor 1/|p|; for p = 0 an absolute error in the mean of logs
  // is a relative error of the exponential.
  const double mean_tol = 0.25 * opts.tol * (exponent == 0.0 ? 1.0 : std::min(1.0, std::abs(exponent)));

  DpResult result;
  double total = static_cast<double>(n) * same_edge_integral(exponent);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairIntegrator integ(edges[i], edges[j], exponent, opts.max_boxes_per_pair);
      double pair_tol;
      if (exponent == 0.0) {
        pair_tol = mean_tol / static_cast<double>(n);
      } else {
        pair_tol = mean_tol * std::abs(integ.rule(0, 1, 0, 1));
      }
      total += 2.0 * integ.integrate(pair_tol);
      result.boxes += integ.boxes();
      result.converged = result.converged && integ.converged();
    }
  }
  const double mean = total / static_cast<double>(n * n);
  result.value = exponent == 0.0 ? std::exp(mean) : std::pow(mean, 1.0 / exponent);
  return result;
}

namespace {

RawFunctionalRow assemble(std::size_t length, const Rational& d2sq, std::int64_t diam2) {
  RawFunctionalRow row;
  row.length = length;
  row.d2_squared = d2sq;
  row.d2 = std::sqrt(d2sq.to_double());
  row.d_inf = std::sqrt(static_cast<double>(diam2));
  const auto l = static_cast<double>(length);
  row.rho2 = l / row.d2;
  row.rho_inf = l / row.d_inf;
  row.crad2_sc = 2.0 * row.d2;
  row.crad_inf_sc = 2.0 * row.d_inf;
  return row;
}

}  // namespace

RawFunctionalRow raw_row(const LatticePolygon& p) {
  return assemble(p.length(), d2_squared(p), diameter_squared(p));
}

RawFunctionalRow raw_row(std::span<const DirCode> edges) {
  const std::size_t n = edges.size();
  std::array<Vec3i, 256> stack_buf{};
  std::vector<Vec3i> heap_buf;
  Vec3i* v = stack_buf.data();
  if (n + 1 > stack_buf.size()) {
    heap_buf.resize(n + 1);
    v = heap_buf.data();
  }
  v[0] = {};
  for (std::size_t i = 0; i < n; ++i) v[i + 1] = v[i] + kDirections[edges[i]];
  const Rational d2sq = d2_squared_impl(n, [&](std::size_t i) { return v[i % n]; });
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) best = std::max<std::int64_t>(best, (v[i] - v[j]).norm2());
  }
  return assemble(n, d2sq, best);
}

}  // namespace latknot

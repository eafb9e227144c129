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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latknot {

// Closed interval [lo, hi]. Every operation rounds its result outward by one
// unit in the last place, so the exact range of the operation over the inputs
// is contained in the result.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return 0.5 * (lo_ + hi_); }
  double width() const noexcept { return hi_ - lo_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

  static Interval outward(double lo, double hi) {
    return raw(std::nextafter(lo, -kInf), std::nextafter(hi, kInf));
  }

  friend Interval operator+(const Interval& a, const Interval& b) { return outward(a.lo_ + b.lo_, a.hi_ + b.hi_); }
  friend Interval operator-(const Interval& a, const Interval& b) { return outward(a.lo_ - b.hi_, a.hi_ - b.lo_); }
  friend Interval operator-(const Interval& a) { return raw(-a.hi_, -a.lo_); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return outward(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  friend Interval hull(const Interval& a, const Interval& b) {
    return raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }

  friend Interval sqr(const Interval& a) {
    const double l2 = a.lo_ * a.lo_, h2 = a.hi_ * a.hi_;
    if (a.lo_ <= 0.0 && a.hi_ >= 0.0) return raw(0.0, std::nextafter(std::max(l2, h2), kInf));
    const auto r = outward(std::min(l2, h2), std::max(l2, h2));
    return raw(std::max(0.0, r.lo_), r.hi_);
  }

  friend Interval sqrt(const Interval& a) {
    const double lo = a.lo_ <= 0.0 ? 0.0 : std::max(0.0, std::nextafter(std::sqrt(a.lo_), -kInf));
    return raw(lo, std::nextafter(std::sqrt(std::max(0.0, a.hi_)), kInf));
  }

  /// Enclosures of cos and sin over an angle range. Endpoint values are
  /// widened by a few ulps to absorb libm error; interior extrema are
  /// detected conservatively.
  friend Interval cos(const Interval& a) { return trig(a, 0.0); }
  friend Interval sin(const Interval& a) { return trig(a, 0.5 * M_PI); }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  static Interval raw(double lo, double hi) {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  // cos over [a.lo - shift, a.hi - shift]; sin(x) = cos(x - pi/2).
  static Interval trig(const Interval& a, double shift) {
    if (a.width() >= 2.0 * M_PI) return raw(-1.0, 1.0);
    const double x0 = a.lo_ - shift, x1 = a.hi_ - shift;
    const double c0 = std::cos(x0), c1 = std::cos(x1);
    double lo = std::min(c0, c1), hi = std::max(c0, c1);
    constexpr double kSlack = 1e-15;
    // Maxima at 2k pi, minima at (2k + 1) pi; a small slack only widens.
    const double two_pi = 2.0 * M_PI;
    if (std::floor((x1 + kSlack) / two_pi) >= std::ceil((x0 - kSlack) / two_pi)) hi = 1.0;
    if (std::floor((x1 - M_PI + kSlack) / two_pi) >= std::ceil((x0 - M_PI - kSlack) / two_pi)) lo = -1.0;
    lo = std::max(-1.0, lo - 4.0 * std::numeric_limits<double>::epsilon());
    hi = std::min(1.0, hi + 4.0 * std::numeric_limits<double>::epsilon());
    return raw(lo, hi);
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

struct IVec3 {
  Interval x, y, z;

  friend IVec3 operator+(const IVec3& a, const IVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend IVec3 operator-(const IVec3& a, const IVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend IVec3 operator*(const Interval& s, const IVec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend Interval dot(const IVec3& a, const IVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
  friend Interval norm2(const IVec3& a) { return sqr(a.x) + sqr(a.y) + sqr(a.z); }
};

}  // namespace latknot

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

#include "latknot/curve.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "latknot/lattice.hpp"

namespace latknot {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Vec3d apply(const Mat3& m, const Vec3d& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z, m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

}  // namespace

Vec3d point_at(const Piece& p, double s) {
  return std::visit(Overloaded{
                        [&](const Segment& seg) { return seg.start + s * (seg.end - seg.start); },
                        [&](const Arc& a) {
                          const double t = a.theta0 + s * a.sweep;
                          return a.center + a.radius * (std::cos(t) * a.u + std::sin(t) * a.v);
                        },
                    },
                    p);
}

Vec3d tangent_at(const Piece& p, double s) {
  return std::visit(Overloaded{
                        [&](const Segment& seg) {
                          const Vec3d d = seg.end - seg.start;
                          return d * (1.0 / d.norm());
                        },
                        [&](const Arc& a) {
                          const double t = a.theta0 + s * a.sweep;
                          return -std::sin(t) * a.u + std::cos(t) * a.v;
                        },
                    },
                    p);
}

double piece_length(const Piece& p) {
  return std::visit(Overloaded{
                        [](const Segment& seg) { return (seg.end - seg.start).norm(); },
                        [](const Arc& a) { return a.radius * a.sweep; },
                    },
                    p);
}

JunctionReport check_junctions(const LineArcCurve& c) {
  JunctionReport r;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& a = c.pieces[i];
    const Piece& b = c.pieces[(i + 1) % n];
    r.max_gap = std::max(r.max_gap, (piece_end(a) - piece_start(b)).norm());
    r.max_tangent_mismatch = std::max(r.max_tangent_mismatch, (tangent_at(a, 1.0) - tangent_at(b, 0.0)).norm());
  }
  return r;
}

LineArcCurve rigid_transform(const LineArcCurve& c, const Mat3& rotation, const Vec3d& shift) {
  LineArcCurve out;
  out.pieces.reserve(c.size());
  for (const Piece& p : c.pieces) {
    out.pieces.push_back(std::visit(Overloaded{
                                        [&](const Segment& s) -> Piece {
                                          return Segment{apply(rotation, s.start) + shift, apply(rotation, s.end) + shift};
                                        },
                                        [&](const Arc& a) -> Piece {
                                          Arc b = a;
                                          b.center = apply(rotation, a.center) + shift;
                                          b.u = apply(rotation, a.u);
                                          b.v = apply(rotation, a.v);
                                          return b;
                                        },
                                    },
                                    p));
  }
  return out;
}

LineArcCurve scaled(const LineArcCurve& c, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  LineArcCurve out;
  out.pieces.reserve(c.size());
  for (const Piece& p : c.pieces) {
    out.pieces.push_back(std::visit(Overloaded{
                                        [&](const Segment& s) -> Piece { return Segment{s.start * factor, s.end * factor}; },
                                        [&](const Arc& a) -> Piece {
                                          Arc b = a;
                                          b.center = a.center * factor;
                                          b.radius = a.radius * factor;
                                          return b;
                                        },
                                    },
                                    p));
  }
  return out;
}

std::string serialize_curve(const LineArcCurve& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  auto put = [&](const Vec3d& v) { os << ' ' << v.x << ' ' << v.y << ' ' << v.z; };
  for (const Piece& p : c.pieces) {
    std::visit(Overloaded{
                   [&](const Segment& s) {
                     os << 'S';
                     put(s.start);
                     put(s.end);
                   },
                   [&](const Arc& a) {
                     os << 'A';
                     put(a.center);
                     os << ' ' << a.radius;
                     put(a.u);
                     put(a.v);
                     os << ' ' << a.theta0 << ' ' << a.sweep;
                   },
               },
               p);
    os << '\n';
  }
  return os.str();
}

LineArcCurve parse_curve(std::string_view text) {
  LineArcCurve c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    std::vector<double> v;
    double x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) throw ParseError(line_no, "non-numeric field");
    if (tag == "S" && v.size() == 6) {
      c.pieces.push_back(Segment{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}});
    } else if (tag == "A" && v.size() == 12) {
      c.pieces.push_back(Arc{{v[0], v[1], v[2]}, v[3], {v[4], v[5], v[6]}, {v[7], v[8], v[9]}, v[10], v[11]});
    } else {
      throw ParseError(line_no, "expected 'S' with 6 numbers or 'A' with 12 numbers");
    }
  }
  if (c.pieces.empty()) throw ParseError(line_no, "curve has no pieces");
  return c;
}

}  // namespace latknot

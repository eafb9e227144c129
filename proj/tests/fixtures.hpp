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

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "latknot/lattice.hpp"
#include "latknot/moves.hpp"

namespace fixtures {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(LATKNOT_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline latknot::LatticePolygon load(const std::string& name) { return latknot::parse_polygon(read_data(name)); }

inline latknot::LatticePolygon square() { return load("unit_square.txt"); }
inline latknot::LatticePolygon rectangle() { return load("rectangle_1x2.txt"); }
inline latknot::LatticePolygon trefoil() { return load("trefoil24.txt"); }

/// Trefoil seed with edge (0,2,1) -> (-1,2,1) detoured through y = 3.
inline latknot::LatticePolygon trefoil_detour() {
  return *latknot::try_apply(trefoil(), {latknot::MoveKind::plus2, 4, latknot::parse_direction("+y")});
}

/// Random polygon grown from the unit square by `steps` random legal moves,
/// keeping the length at most `cap`.
inline latknot::LatticePolygon random_polygon(std::mt19937_64& rng, int steps, std::size_t cap = 40) {
  latknot::LatticePolygon p = square();
  for (int s = 0; s < steps; ++s) {
    auto moves = latknot::enumerate_all(p);
    std::erase_if(moves, [&](const auto& m) { return m.second.length() > cap; });
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    p = moves[pick(rng)].second;
  }
  return p;
}

}  // namespace fixtures

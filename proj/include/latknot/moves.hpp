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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latknot/lattice.hpp"

namespace latknot {

enum class MoveKind { plus2, minus2, zero };

std::string_view to_string(MoveKind k);

/// One BFACF elementary move on a specific polygon.
///
///   plus2:  edge i (v_i -> v_i+1) is replaced by the detour v_i, v_i+e,
///           v_i+1+e, v_i+1; `direction` is e.
///   minus2: the run of edges i, i+1, i+2 with vectors (d, e, -d) is replaced
///           by the single edge e; `direction` is e.
///   zero:   the corner v_i -> v_i+d1 -> v_i+d1+d2 is rerouted through
///           v_i+d2; `direction` is d2.
struct MoveDescriptor {
  MoveKind kind = MoveKind::plus2;
  std::size_t edge_index = 0;
  DirCode direction = 0;

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// "kind:edge_index:direction", e.g. "plus2:4:+y".
std::string format_move(const MoveDescriptor& m);
MoveDescriptor parse_move(std::string_view text);

/// Result of applying `m` to `p`, or nullopt when the move does not apply or
/// would break embeddedness.
std::optional<LatticePolygon> try_apply(const LatticePolygon& p, const MoveDescriptor& m);

using MoveResult = std::pair<MoveDescriptor, LatticePolygon>;

// Enumeration order is edge index first, then direction in the order
// +x, -x, +y, -y, +z, -z.
std::vector<MoveResult> enumerate_plus2(const LatticePolygon& p);
std::vector<MoveResult> enumerate_minus2(const LatticePolygon& p);
std::vector<MoveResult> enumerate_zero(const LatticePolygon& p);
/// plus2, then minus2, then zero.
std::vector<MoveResult> enumerate_all(const LatticePolygon& p);

/// Edge-code-only plus2 expansion used by the level generator. For each
/// embedded detour, calls sink(child_edge_codes). Children are written into a
/// scratch buffer that is only valid during the call.
template <typename Sink>
void for_each_plus2_codes(std::span<const Vec3i> vertices, std::span<const DirCode> edges,
                          Sink&& sink);

}  // namespace latknot

#include "latknot/moves_inl.hpp"

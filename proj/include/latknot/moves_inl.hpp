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
#include <array>

namespace latknot {

namespace detail {
// +x, -x, +y, -y, +z, -z
inline constexpr std::array<DirCode, 6> kMoveDirectionOrder = {5, 0, 4, 1, 3, 2};
}  // namespace detail

template <typename Sink>
void for_each_plus2_codes(std::span<const Vec3i> vertices, std::span<const DirCode> edges,
                          Sink&& sink) {
  const std::size_t n = edges.size();
  std::vector<DirCode> child(n + 2);
  auto occupied = [&](const Vec3i& v) {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  };
  for (std::size_t i = 0; i < n; ++i) {
    const DirCode d = edges[i];
    const Vec3i& u = vertices[i];
    const Vec3i& w = vertices[(i + 1) % n];
    for (const DirCode e : detail::kMoveDirectionOrder) {
      if (parallel(d, e)) continue;
      const Vec3i step = kDirections[e];
      if (occupied(u + step) || occupied(w + step)) continue;
      // Edge i becomes e, d, -e; all other edges keep their order.
      std::copy(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(i), child.begin());
      child[i] = e;
      child[i + 1] = d;
      child[i + 2] = negate(e);
      std::copy(edges.begin() + static_cast<std::ptrdiff_t>(i + 1), edges.end(),
                child.begin() + static_cast<std::ptrdiff_t>(i + 3));
      sink(std::span<const DirCode>(child));
    }
  }
}

}  // namespace latknot

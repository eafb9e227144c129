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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/functionals.hpp"
#include "latknot/lattice.hpp"
#include "latknot/moves.hpp"

namespace latknot {

enum class SearchLabel { exhaustive, seed_generated, capped, positive_detour };
std::string_view to_string(SearchLabel label);

/// {n0, n0 + 2, ..., <= nmax}. Throws std::invalid_argument unless n0 >= 4 is
/// even and nmax >= n0.
std::vector<int> admissible_levels(int n0, int nmax);

/// Largest admissible level under the window cap N <= lambda * n0.
int window_cap(int n0, double lambda);

/// How generated polygons are identified when a level is deduplicated.
///   isometry:  canonical key (translation, proper rotation, cyclic shift,
///              reversal).
///   point_set: the same curve in space (cyclic shift and reversal only).
enum class Dedup { isometry, point_set };
std::string_view to_string(Dedup d);

/// Classes at one exact length, sorted by record. A record is the edge code
/// sequence, preceded for point_set levels by the start vertex (three
/// big-endian biased 16-bit coordinates) so that distinct placements stay
/// distinct. Representatives are decoded on demand.
class LevelSet {
 public:
  LevelSet(std::size_t level, Dedup dedup, std::vector<DirCode> flat_sorted_records);

  static constexpr std::size_t kOriginBytes = 6;

  std::size_t level() const noexcept { return level_; }
  Dedup dedup() const noexcept { return dedup_; }
  std::size_t record_width() const noexcept { return header() + level_; }
  std::size_t size() const noexcept { return flat_.size() / record_width(); }
  std::span<const DirCode> record(std::size_t i) const {
    return std::span<const DirCode>(flat_).subspan(i * record_width(), record_width());
  }
  std::span<const DirCode> codes(std::size_t i) const { return record(i).subspan(header()); }
  Vec3i origin(std::size_t i) const;
  CanonicalKey key(std::size_t i) const;
  LatticePolygon representative(std::size_t i) const;
  /// Whether some member has this canonical key (linear scan for point_set).
  bool contains(const CanonicalKey& key) const;

 private:
  std::size_t header() const noexcept { return dedup_ == Dedup::point_set ? kOriginBytes : 0; }

  std::size_t level_;
  Dedup dedup_;
  std::vector<DirCode> flat_;
};

/// Point-set record of a polygon: start at its smallest vertex and walk
/// towards the smaller of that vertex's two neighbours.
std::vector<DirCode> point_set_record(const LatticePolygon& p);

struct DetourOptions {
  /// Stop before a level whose member count would exceed this.
  std::size_t max_members = 50'000'000;
  unsigned workers = 1;
  Dedup dedup = Dedup::point_set;
};

struct DetourLevels {
  std::vector<LevelSet> levels;
  bool complete = true;
};

/// Levels generated from a seed by +2 plaquette detours only. Each level is
/// deduplicated before it is expanded.
DetourLevels positive_detour_levels(const LatticePolygon& seed, int nmax, const DetourOptions& opts = {});

struct ProfileRow {
  int level = 0;
  std::uint64_t exact_count = 0;
  std::uint64_t cumulative_count = 0;
  double best_rho2 = 0.0;
  double best_rho_inf = 0.0;
  double best_crad2 = 0.0;
  double best_crad_inf = 0.0;
  SearchLabel label = SearchLabel::positive_detour;
  /// Realizing classes for rho2, rho_inf, crad2, crad_inf (first record on ties).
  std::array<CanonicalKey, 4> argbest;
};

struct ProfileTables {
  std::vector<ProfileRow> exact;
  std::vector<ProfileRow> filtered;
};

ProfileTables profile_tables(const std::vector<LevelSet>& levels, SearchLabel label,
                             unsigned workers = 1);

/// Running minima; input rows must be in increasing level order.
std::vector<ProfileRow> filter_rows(const std::vector<ProfileRow>& exact);

struct ExploreBudget {
  std::size_t max_vertices = 5'000'000;
  /// Wall-clock limit in seconds; <= 0 disables.
  double max_seconds = 0.0;
};

/// Seed-generated filtered move graph: canonical classes reachable from the
/// seeds by BFACF moves through states of length <= cap. Vertices are sorted by
/// key; edges are unordered vertex pairs, each listed once.
struct MoveGraph {
  int cap = 0;
  std::vector<CanonicalKey> keys;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::vector<std::uint32_t> seed_vertices;
  bool complete = true;

  std::optional<std::uint32_t> find(const CanonicalKey& key) const;
  LatticePolygon representative(std::uint32_t v) const { return canonical_representative(keys[v]); }
};

MoveGraph bfacf_reachable(const std::vector<LatticePolygon>& seeds, int cap, const ExploreBudget& budget = {});

struct Component {
  std::vector<std::uint32_t> vertices;
  std::vector<std::size_t> seeds;  // indices into MoveGraph::seed_vertices
  double min_rho2 = 0.0;
  double min_rho_inf = 0.0;
  double min_crad2 = 0.0;
  double min_crad_inf = 0.0;
};

/// Connected components ordered by their smallest vertex.
std::vector<Component> components(const MoveGraph& graph);

enum class MergeStatus { merged, not_merged, inconclusive };
std::string_view to_string(MergeStatus s);

struct MergeOutcome {
  MergeStatus status = MergeStatus::not_merged;
  /// Merging level when merged; last completed cap otherwise.
  int level = 0;
  /// Graph at the merging level (merged only).
  std::optional<MoveGraph> graph;
};

MergeOutcome merge_scale(const LatticePolygon& a, const LatticePolygon& b, int nmax,
                         const ExploreBudget& budget = {});

struct MovePath {
  std::vector<LatticePolygon> states;
  std::vector<MoveDescriptor> moves;  // moves[k] takes states[k] to states[k+1]
  bool first_is_seed = true;
  bool last_is_seed = true;
  std::optional<std::size_t> connecting_state;
};

/// Shortest move path between two seeds of the graph, ties broken towards
/// smaller canonical keys. States are literal polygons: each is the result of
/// applying the recorded move to its predecessor, starting from `a` itself.
/// Throws std::invalid_argument if the seeds lie in different components.
MovePath extract_path(const MoveGraph& graph, const LatticePolygon& a, const LatticePolygon& b);

/// Throws std::invalid_argument naming the first step whose move does not
/// reproduce the next state.
void validate_path(const MovePath& path);

std::vector<RawFunctionalRow> evaluate_path(const MovePath& path);

/// Certificate text: state count, then state blocks separated by move lines.
std::string serialize_path(const MovePath& path);
MovePath parse_path(std::string_view text);

}  // namespace latknot

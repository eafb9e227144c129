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

#include "latknot/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace latknot {

std::string_view to_string(SearchLabel label) {
  switch (label) {
    case SearchLabel::exhaustive: return "exhaustive";
    case SearchLabel::seed_generated: return "seed-generated";
    case SearchLabel::capped: return "capped";
    case SearchLabel::positive_detour: return "positive-detour";
  }
  return "?";
}

std::string_view to_string(MergeStatus s) {
  switch (s) {
    case MergeStatus::merged: return "merged";
    case MergeStatus::not_merged: return "not-merged";
    case MergeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<int> admissible_levels(int n0, int nmax) {
  if (n0 < 4 || n0 % 2 != 0) throw std::invalid_argument("start level must be even and >= 4");
  if (nmax < n0) throw std::invalid_argument("level cap below the start level");
  std::vector<int> out;
  for (int n = n0; n <= nmax; n += 2) out.push_back(n);
  return out;
}

int window_cap(int n0, double lambda) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("window factor must be >= 1");
  const auto cap = static_cast<int>(std::floor(lambda * n0 + 1e-9));
  return cap - ((cap - n0) % 2 != 0 ? 1 : 0);
}

namespace {

// Sorts fixed-width records and drops duplicates, in place.
void sort_unique_records(std::vector<DirCode>& flat, std::size_t width) {
  const std::size_t count = flat.size() / width;
  if (count < 2) return;
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
  const DirCode* base = flat.data();
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(base + a * width, base + b * width, width) < 0;
  });
  std::vector<DirCode> out;
  out.reserve(flat.size());
  const DirCode* prev = nullptr;
  for (const std::uint32_t idx : order) {
    const DirCode* rec = base + idx * width;
    if (prev != nullptr && std::memcmp(prev, rec, width) == 0) continue;
    out.insert(out.end(), rec, rec + width);
    prev = rec;
  }
  flat.swap(out);
}

void encode_origin(const Vec3i& v, DirCode* out) {
  for (const int c : {v.x, v.y, v.z}) {
    if (c < -32768 || c > 32767) throw std::out_of_range("coordinate outside the point-set record range");
    const auto u = static_cast<std::uint16_t>(c + 32768);
    *out++ = static_cast<DirCode>(u >> 8);
    *out++ = static_cast<DirCode>(u & 0xFF);
  }
}

Vec3i decode_origin(const DirCode* in) {
  std::array<int, 3> c{};
  for (int k = 0; k < 3; ++k) c[k] = (static_cast<int>(in[2 * k]) << 8 | in[2 * k + 1]) - 32768;
  return {c[0], c[1], c[2]};
}

// Writes the point-set record of the polygon with the given vertices and edges.
void point_set_record_into(std::span<const Vec3i> v, std::span<const DirCode> edges, DirCode* out) {
  const std::size_t n = v.size();
  const std::size_t m = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  const Vec3i& next = v[(m + 1) % n];
  const Vec3i& prev = v[(m + n - 1) % n];
  encode_origin(v[m], out);
  out += LevelSet::kOriginBytes;
  if (next < prev) {
    for (std::size_t t = 0; t < n; ++t) out[t] = edges[(m + t) % n];
  } else {
    for (std::size_t t = 0; t < n; ++t) out[t] = negate(edges[(m + n - 1 - t) % n]);
  }
}

// Deduplicated children of parents [begin, end), sorted.
std::vector<DirCode> expand_range(const LevelSet& parents, std::size_t begin, std::size_t end) {
  const std::size_t n = parents.level();
  const bool literal = parents.dedup() == Dedup::point_set;
  const std::size_t width = parents.record_width() + 2;
  constexpr std::size_t kCompactEvery = 1u << 20;  // records

  std::vector<DirCode> out;
  std::vector<Vec3i> vertices(n);
  std::vector<Vec3i> child_vertices(n + 2);
  std::vector<DirCode> rec(width);
  std::size_t since_compact = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const auto edges = parents.codes(i);
    Vec3i cur = parents.origin(i);
    for (std::size_t k = 0; k < n; ++k) {
      vertices[k] = cur;
      cur = cur + kDirections[edges[k]];
    }
    for_each_plus2_codes(vertices, edges, [&](std::span<const DirCode> child) {
      if (literal) {
        Vec3i c = vertices[0];
        for (std::size_t k = 0; k < n + 2; ++k) {
          child_vertices[k] = c;
          c = c + kDirections[child[k]];
        }
        point_set_record_into(child_vertices, child, rec.data());
      } else {
        canonical_codes(child, rec);
      }
      out.insert(out.end(), rec.begin(), rec.end());
      ++since_compact;
    });
    if (since_compact >= kCompactEvery) {
      sort_unique_records(out, width);
      since_compact = 0;
    }
  }
  sort_unique_records(out, width);
  return out;
}

}  // namespace

std::string_view to_string(Dedup d) { return d == Dedup::isometry ? "isometry" : "point-set"; }

std::vector<DirCode> point_set_record(const LatticePolygon& p) {
  std::vector<DirCode> out(LevelSet::kOriginBytes + p.length());
  const auto edges = p.edge_codes();
  point_set_record_into(p.vertices(), edges, out.data());
  return out;
}

LevelSet::LevelSet(std::size_t level, Dedup dedup, std::vector<DirCode> flat_sorted_records)
    : level_(level), dedup_(dedup), flat_(std::move(flat_sorted_records)) {}

Vec3i LevelSet::origin(std::size_t i) const {
  if (dedup_ == Dedup::isometry) return {};
  return decode_origin(record(i).data());
}

CanonicalKey LevelSet::key(std::size_t i) const {
  const auto c = codes(i);
  if (dedup_ == Dedup::isometry) return CanonicalKey(std::vector<DirCode>(c.begin(), c.end()));
  std::vector<DirCode> out(c.size());
  canonical_codes(c, out);
  return CanonicalKey(std::move(out));
}

LatticePolygon LevelSet::representative(std::size_t i) const { return polygon_from_edges(origin(i), codes(i)); }

bool LevelSet::contains(const CanonicalKey& key) const {
  if (key.length() != level_) return false;
  if (dedup_ == Dedup::point_set) {
    for (std::size_t i = 0; i < size(); ++i) {
      if (this->key(i) == key) return true;
    }
    return false;
  }
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = std::memcmp(codes(mid).data(), key.codes().data(), level_);
    if (c == 0) return true;
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return false;
}

DetourLevels positive_detour_levels(const LatticePolygon& seed, int nmax, const DetourOptions& opts) {
  const int n0 = static_cast<int>(seed.length());
  const auto levels = admissible_levels(n0, nmax);
  DetourLevels result;
  std::vector<DirCode> first;
  if (opts.dedup == Dedup::point_set) {
    first = point_set_record(seed);
  } else {
    const CanonicalKey k = canonical_key(seed);
    first.assign(k.codes().begin(), k.codes().end());
  }
  result.levels.emplace_back(seed.length(), opts.dedup, std::move(first));

  const unsigned workers = std::max(1u, opts.workers);
  for (std::size_t li = 1; li < levels.size(); ++li) {
    const LevelSet& parents = result.levels.back();
    const std::size_t width = parents.record_width() + 2;
    const std::size_t count = parents.size();

    std::vector<std::vector<DirCode>> parts(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t b = std::min(count, w * chunk);
      const std::size_t e = std::min(count, b + chunk);
      if (workers == 1) {
        parts[w] = expand_range(parents, b, e);
      } else {
        threads.emplace_back([&, w, b, e] { parts[w] = expand_range(parents, b, e); });
      }
    }
    for (auto& t : threads) t.join();

    std::vector<DirCode> merged;
    for (auto& part : parts) {
      merged.insert(merged.end(), part.begin(), part.end());
      std::vector<DirCode>().swap(part);
    }
    if (workers > 1) sort_unique_records(merged, width);

    if (merged.size() / width > opts.max_members) {
      result.complete = false;
      break;
    }
    result.levels.emplace_back(parents.level() + 2, opts.dedup, std::move(merged));
  }
  return result;
}

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  void offer(double v, std::size_t i) {
    if (v < value) {
      value = v;
      index = i;
    }
  }
};

}  // namespace

ProfileTables profile_tables(const std::vector<LevelSet>& levels, SearchLabel label, unsigned workers) {
  if (levels.empty()) throw std::invalid_argument("no levels to tabulate");
  ProfileTables out;
  std::uint64_t cumulative = 0;
  workers = std::max(1u, workers);
  for (const LevelSet& level : levels) {
    const std::size_t count = level.size();
    std::vector<std::array<Best, 4>> partial(workers);
    auto scan = [&](unsigned w, std::size_t b, std::size_t e) {
      auto& best = partial[w];
      for (std::size_t i = b; i < e; ++i) {
        const RawFunctionalRow row = raw_row(level.codes(i));
        best[0].offer(row.rho2, i);
        best[1].offer(row.rho_inf, i);
        best[2].offer(row.crad2_sc, i);
        best[3].offer(row.crad_inf_sc, i);
      }
    };
    const std::size_t chunk = (count + workers - 1) / workers;
    if (workers == 1) {
      scan(0, 0, count);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = std::min(count, w * chunk);
        threads.emplace_back(scan, w, b, std::min(count, b + chunk));
      }
      for (auto& t : threads) t.join();
    }
    // Chunks are in index order and each keeps its first minimum, so taking
    // strict improvements in chunk order keeps the smallest realizing key.
    std::array<Best, 4> best;
    for (const auto& p : partial) {
      for (int k = 0; k < 4; ++k) {
        if (p[k].value < best[k].value) best[k] = p[k];
      }
    }
    cumulative += count;
    ProfileRow row;
    row.level = static_cast<int>(level.level());
    row.exact_count = count;
    row.cumulative_count = cumulative;
    row.best_rho2 = best[0].value;
    row.best_rho_inf = best[1].value;
    row.best_crad2 = best[2].value;
    row.best_crad_inf = best[3].value;
    row.label = label;
    for (int k = 0; k < 4; ++k) {
      if (count > 0) row.argbest[k] = level.key(best[k].index);
    }
    out.exact.push_back(std::move(row));
  }
  out.filtered = filter_rows(out.exact);
  return out;
}

std::vector<ProfileRow> filter_rows(const std::vector<ProfileRow>& exact) {
  std::vector<ProfileRow> out;
  out.reserve(exact.size());
  for (const ProfileRow& row : exact) {
    if (out.empty()) {
      out.push_back(row);
      continue;
    }
    ProfileRow next = out.back();
    next.level = row.level;
    next.exact_count = row.exact_count;
    next.cumulative_count = row.cumulative_count;
    next.label = row.label;
    auto take = [&](double& dst, double src, int k) {
      if (src < dst) {
        dst = src;
        next.argbest[k] = row.argbest[k];
      }
    };
    take(next.best_rho2, row.best_rho2, 0);
    take(next.best_rho_inf, row.best_rho_inf, 1);
    take(next.best_crad2, row.best_crad2, 2);
    take(next.best_crad_inf, row.best_crad_inf, 3);
    out.push_back(std::move(next));
  }
  return out;
}

std::optional<std::uint32_t> MoveGraph::find(const CanonicalKey& key) const {
  const auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys.begin());
}

MoveGraph bfacf_reachable(const std::vector<LatticePolygon>& seeds, int cap, const ExploreBudget& budget) {
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  for (const auto& s : seeds) {
    if (static_cast<int>(s.length()) > cap) throw std::invalid_argument("seed longer than the length cap");
  }
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (budget.max_seconds <= 0.0) return false;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    return dt.count() > budget.max_seconds;
  };

  std::unordered_map<CanonicalKey, std::uint32_t, CanonicalKeyHash> index;
  std::vector<CanonicalKey> keys;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> seed_ids;
  std::deque<std::uint32_t> queue;
  bool complete = true;

  auto intern = [&](CanonicalKey key) -> std::optional<std::uint32_t> {
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (keys.size() >= budget.max_vertices) {
      complete = false;
      return std::nullopt;
    }
    const auto id = static_cast<std::uint32_t>(keys.size());
    index.emplace(key, id);
    keys.push_back(std::move(key));
    queue.push_back(id);
    return id;
  };

  for (const auto& s : seeds) {
    const auto id = intern(canonical_key(s));
    if (!id) throw std::invalid_argument("vertex budget smaller than the seed count");
    seed_ids.push_back(*id);
  }

  while (!queue.empty()) {
    if (!complete) break;
    if (out_of_time()) {
      complete = false;
      break;
    }
    const std::uint32_t v = queue.front();
    queue.pop_front();
    const LatticePolygon rep = canonical_representative(keys[v]);
    for (auto& [move, child] : enumerate_all(rep)) {
      if (static_cast<int>(child.length()) > cap) continue;
      const auto w = intern(canonical_key(child));
      if (!w) break;
      if (*w != v) edges.emplace_back(std::min(v, *w), std::max(v, *w));
    }
  }

  // Relabel by sorted key so the output does not depend on discovery order.
  const std::size_t nv = keys.size();
  std::vector<std::uint32_t> order(nv);
  for (std::uint32_t i = 0; i < nv; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> relabel(nv);
  for (std::uint32_t r = 0; r < nv; ++r) relabel[order[r]] = r;

  MoveGraph g;
  g.cap = cap;
  g.complete = complete;
  g.keys.reserve(nv);
  for (const auto old : order) g.keys.push_back(std::move(keys[old]));
  for (auto& [a, b] : edges) {
    const auto x = relabel[a], y = relabel[b];
    a = std::min(x, y);
    b = std::max(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adjacency.resize(nv);
  for (const auto& [a, b] : g.edges) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  for (const auto s : seed_ids) g.seed_vertices.push_back(relabel[s]);
  return g;
}

std::vector<Component> components(const MoveGraph& graph) {
  const std::size_t nv = graph.keys.size();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(nv, kUnset);
  std::vector<Component> out;
  for (std::uint32_t root = 0; root < nv; ++root) {
    if (comp[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.size());
    Component c;
    c.min_rho2 = c.min_rho_inf = c.min_crad2 = c.min_crad_inf = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> stack = {root};
    comp[root] = id;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (const auto w : graph.adjacency[v]) {
        if (comp[w] == kUnset) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    for (const auto v : c.vertices) {
      const RawFunctionalRow row = raw_row(graph.keys[v].codes());
      c.min_rho2 = std::min(c.min_rho2, row.rho2);
      c.min_rho_inf = std::min(c.min_rho_inf, row.rho_inf);
      c.min_crad2 = std::min(c.min_crad2, row.crad2_sc);
      c.min_crad_inf = std::min(c.min_crad_inf, row.crad_inf_sc);
    }
    out.push_back(std::move(c));
  }
  for (std::size_t s = 0; s < graph.seed_vertices.size(); ++s) out[comp[graph.seed_vertices[s]]].seeds.push_back(s);
  return out;
}

namespace {

bool same_component(const MoveGraph& g, std::uint32_t a, std::uint32_t b) {
  if (a == b) return true;
  std::vector<bool> seen(g.keys.size(), false);
  std::vector<std::uint32_t> stack = {a};
  seen[a] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : g.adjacency[v]) {
      if (w == b) return true;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

MergeOutcome merge_scale(const LatticePolygon& a, const LatticePolygon& b, int nmax, const ExploreBudget& budget) {
  const int n0 = static_cast<int>(std::max(a.length(), b.length()));
  MergeOutcome outcome;
  if (nmax < n0) {
    outcome.status = MergeStatus::not_merged;
    outcome.level = nmax;
    return outcome;
  }
  for (const int cap : admissible_levels(n0, nmax)) {
    MoveGraph g = bfacf_reachable({a, b}, cap, budget);
    if (same_component(g, g.seed_vertices[0], g.seed_vertices[1])) {
      outcome.status = MergeStatus::merged;
      outcome.level = cap;
      outcome.graph = std::move(g);
      return outcome;
    }
    // Without the full closure a missing connection proves nothing.
    if (!g.complete) {
      outcome.status = MergeStatus::inconclusive;
      outcome.level = cap;
      return outcome;
    }
    outcome.level = cap;
  }
  outcome.status = MergeStatus::not_merged;
  return outcome;
}

MovePath extract_path(const MoveGraph& graph, const LatticePolygon& a, const LatticePolygon& b) {
  const auto va = graph.find(canonical_key(a));
  const auto vb = graph.find(canonical_key(b));
  if (!va || !vb) throw std::invalid_argument("seed is not a vertex of the move graph");

  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(graph.keys.size(), kUnreached);
  std::deque<std::uint32_t> queue = {*vb};
  dist[*vb] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto w : graph.adjacency[v]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[*va] == kUnreached) throw std::invalid_argument("seeds lie in different components");

  // Vertex indices follow key order, so the first qualifying neighbour in the
  // sorted adjacency list is the lexicographically smallest.
  std::vector<std::uint32_t> route = {*va};
  while (route.back() != *vb) {
    const auto v = route.back();
    for (const auto w : graph.adjacency[v]) {
      if (dist[w] + 1 == dist[v]) {
        route.push_back(w);
        break;
      }
    }
  }

  MovePath path;
  path.states.push_back(a);
  for (std::size_t k = 1; k < route.size(); ++k) {
    const CanonicalKey& target = graph.keys[route[k]];
    bool found = false;
    for (auto& [move, child] : enumerate_all(path.states.back())) {
      if (child.length() != target.length() || canonical_key(child) != target) continue;
      path.moves.push_back(move);
      path.states.push_back(std::move(child));
      found = true;
      break;
    }
    if (!found) throw std::logic_error("graph edge has no realizing move");
  }
  return path;
}

void validate_path(const MovePath& path) {
  if (path.states.empty()) throw std::invalid_argument("path has no states");
  if (path.moves.size() + 1 != path.states.size()) {
    throw std::invalid_argument("path needs exactly one move between consecutive states");
  }
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    const auto next = try_apply(path.states[k], path.moves[k]);
    if (!next || *next != path.states[k + 1]) {
      throw std::invalid_argument("step " + std::to_string(k) + " (" + format_move(path.moves[k]) +
                                  ") does not reproduce state " + std::to_string(k + 1));
    }
  }
}

std::vector<RawFunctionalRow> evaluate_path(const MovePath& path) {
  std::vector<RawFunctionalRow> rows;
  rows.reserve(path.states.size());
  for (const auto& s : path.states) rows.push_back(raw_row(s));
  return rows;
}

std::string serialize_path(const MovePath& path) {
  std::ostringstream os;
  os << path.states.size() << '\n';
  os << "# latknot move path: " << path.moves.size() << " moves\n";
  if (path.connecting_state) os << "# connecting-state: " << *path.connecting_state << '\n';
  for (std::size_t k = 0; k < path.states.size(); ++k) {
    os << "# state " << k;
    if ((k == 0 && path.first_is_seed) || (k + 1 == path.states.size() && path.last_is_seed)) os << " (seed)";
    os << '\n' << serialize_polygon(path.states[k]);
    if (k < path.moves.size()) os << format_move(path.moves[k]) << '\n';
  }
  return os.str();
}

MovePath parse_path(std::string_view text) {
  MovePath path;
  std::optional<std::size_t> declared;
  std::string block;
  std::size_t line_no = 0;
  auto flush_block = [&] {
    if (block.empty()) throw ParseError(line_no, "expected a state block before this line");
    try {
      path.states.push_back(parse_polygon(block));
    } catch (const ParseError& e) {
      throw ParseError(line_no, std::string("state ") + std::to_string(path.states.size()) + ": " + e.what());
    }
    block.clear();
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string line = raw.substr(first, raw.find_last_not_of(" \t\r") - first + 1);
    if (line.front() == '#') {
      constexpr std::string_view tag = "# connecting-state:";
      if (line.rfind(tag, 0) == 0) path.connecting_state = std::stoul(line.substr(tag.size()));
      continue;
    }
    if (!declared) {
      try {
        declared = std::stoul(line);
      } catch (const std::exception&) {
        throw ParseError(line_no, "first line must be the state count");
      }
      continue;
    }
    if (line.find(':') != std::string::npos) {
      flush_block();
      try {
        path.moves.push_back(parse_move(line));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    block += line;
    block += '\n';
  }
  ++line_no;
  flush_block();
  if (!declared || *declared != path.states.size()) {
    throw ParseError(line_no, "state count does not match the declared count");
  }
  return path;
}

}  // namespace latknot

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

#include "latknot/latknot.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "latknot/certify.hpp"
#include "latknot/explorer.hpp"
#include "latknot/functionals.hpp"
#include "latknot/moves.hpp"
#include "latknot/smoothfunc.hpp"
#include "latknot/smoothing.hpp"

using namespace latknot;

struct lk_polygon {
  LatticePolygon poly;
};
struct lk_levels {
  DetourLevels levels;
};
struct lk_profile {
  ProfileTables tables;
};
struct lk_graph {
  MoveGraph graph;
  std::vector<Component> comps;
};
struct lk_path {
  MovePath path;
};
struct lk_curve {
  LineArcCurve curve;
};

namespace {

thread_local std::string g_error;

lk_status fail(lk_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

template <typename F>
lk_status guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(LK_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(LK_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LK_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(LK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LK_ERR_INTERNAL, "unknown error");
  }
}

#define LK_REQUIRE(cond)                                                      \
  do {                                                                        \
    if (!(cond)) return fail(LK_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill(lk_raw_row* out, const RawFunctionalRow& r) {
  out->length = r.length;
  out->d2_squared_num = r.d2_squared.num;
  out->d2_squared_den = r.d2_squared.den;
  out->d2 = r.d2;
  out->d_inf = r.d_inf;
  out->rho2 = r.rho2;
  out->rho_inf = r.rho_inf;
  out->crad2_sc = r.crad2_sc;
  out->crad_inf_sc = r.crad_inf_sc;
}

CertifyOptions certify_options(const lk_certify_options* o) {
  CertifyOptions opts;
  if (o && o->tol > 0.0) opts.tol = o->tol;
  if (o && o->max_depth > 0) opts.max_depth = o->max_depth;
  return opts;
}

ExploreBudget budget(size_t max_vertices, double max_seconds) {
  ExploreBudget b;
  if (max_vertices > 0) b.max_vertices = max_vertices;
  b.max_seconds = max_seconds;
  return b;
}

void fill(lk_smoothed_profile_row* out, const SmoothedProfileRow& r) {
  out->level = r.level;
  out->members = r.members;
  out->curves = r.curves;
  out->skipped = r.skipped;
  out->best_rho2 = r.best_rho2;
  out->best_rho_inf = r.best_rho_inf;
  out->best_crad2 = r.best_crad2;
  out->best_crad_inf = r.best_crad_inf;
}

}  // namespace

extern "C" {

const char* lk_last_error(void) { return g_error.c_str(); }

const char* lk_status_name(lk_status s) {
  switch (s) {
    case LK_OK: return "ok";
    case LK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LK_ERR_PARSE: return "parse error";
    case LK_ERR_BUDGET: return "budget exhausted";
    case LK_ERR_INCONCLUSIVE: return "inconclusive";
    case LK_ERR_OUT_OF_RANGE: return "out of range";
    case LK_ERR_MEMORY: return "out of memory";
    case LK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lk_version(void) { return "1.0.0"; }

void lk_string_free(char* s) { std::free(s); }

lk_status lk_polygon_parse(const char* text, lk_polygon** out) {
  LK_REQUIRE(text && out);
  return guarded([&] {
    *out = new lk_polygon{parse_polygon(text)};
    return LK_OK;
  });
}

lk_status lk_polygon_from_vertices(const int32_t* xyz, size_t n, lk_polygon** out) {
  LK_REQUIRE(xyz && out);
  return guarded([&] {
    std::vector<Vec3i> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
    *out = new lk_polygon{LatticePolygon(std::move(v))};
    return LK_OK;
  });
}

void lk_polygon_free(lk_polygon* p) { delete p; }

size_t lk_polygon_length(const lk_polygon* p) { return p ? p->poly.length() : 0; }

lk_status lk_polygon_vertices(const lk_polygon* p, int32_t* xyz, size_t capacity) {
  LK_REQUIRE(p && xyz);
  if (capacity < 3 * p->poly.length()) return fail(LK_ERR_OUT_OF_RANGE, "vertex buffer too small");
  size_t k = 0;
  for (const Vec3i& v : p->poly.vertices()) {
    xyz[k++] = v.x;
    xyz[k++] = v.y;
    xyz[k++] = v.z;
  }
  return LK_OK;
}

lk_status lk_polygon_serialize(const lk_polygon* p, char** out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    *out = dup_string(serialize_polygon(p->poly));
    return LK_OK;
  });
}

lk_status lk_polygon_canonical_key(const lk_polygon* p, char** out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    *out = dup_string(canonical_key(p->poly).to_string());
    return LK_OK;
  });
}

lk_status lk_polygon_from_key(const char* key, lk_polygon** out) {
  LK_REQUIRE(key && out);
  return guarded([&] {
    *out = new lk_polygon{canonical_representative(CanonicalKey::from_string(key))};
    return LK_OK;
  });
}

lk_status lk_raw_row_eval(const lk_polygon* p, lk_raw_row* out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    fill(out, raw_row(p->poly));
    return LK_OK;
  });
}

lk_status lk_dp(const lk_polygon* p, double exponent, double tol, double* value, int* converged) {
  LK_REQUIRE(p && value);
  return guarded([&] {
    DpOptions opts;
    if (tol > 0.0) opts.tol = tol;
    const DpResult r = dp(p->poly, exponent, opts);
    *value = r.value;
    if (converged) *converged = r.converged ? 1 : 0;
    return LK_OK;
  });
}

lk_status lk_move_apply(const lk_polygon* p, const char* move, lk_polygon** out) {
  LK_REQUIRE(p && move && out);
  return guarded([&] {
    auto child = try_apply(p->poly, parse_move(move));
    if (!child) return fail(LK_ERR_INVALID_ARGUMENT, std::string("move ") + move + " does not apply");
    *out = new lk_polygon{std::move(*child)};
    return LK_OK;
  });
}

lk_status lk_moves_enumerate(const lk_polygon* p, char** out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    std::string s;
    for (const auto& [m, child] : enumerate_all(p->poly)) s += format_move(m) + "\n";
    *out = dup_string(s);
    return LK_OK;
  });
}

lk_status lk_detour_levels(const lk_polygon* seed, int nmax, lk_dedup dedup, unsigned workers, size_t max_members,
                           lk_levels** out) {
  LK_REQUIRE(seed && out);
  return guarded([&] {
    DetourOptions opts;
    opts.dedup = dedup == LK_DEDUP_ISOMETRY ? Dedup::isometry : Dedup::point_set;
    opts.workers = workers;
    if (max_members > 0) opts.max_members = max_members;
    *out = new lk_levels{positive_detour_levels(seed->poly, nmax, opts)};
    return LK_OK;
  });
}

void lk_levels_free(lk_levels* l) { delete l; }

size_t lk_levels_count(const lk_levels* l) { return l ? l->levels.levels.size() : 0; }

int lk_levels_complete(const lk_levels* l) { return l && l->levels.complete ? 1 : 0; }

lk_status lk_levels_info(const lk_levels* l, size_t index, int* level, size_t* members) {
  LK_REQUIRE(l);
  if (index >= l->levels.levels.size()) return fail(LK_ERR_OUT_OF_RANGE, "level index out of range");
  const LevelSet& s = l->levels.levels[index];
  if (level) *level = static_cast<int>(s.level());
  if (members) *members = s.size();
  return LK_OK;
}

lk_status lk_levels_member(const lk_levels* l, size_t index, size_t member, lk_polygon** out) {
  LK_REQUIRE(l && out);
  if (index >= l->levels.levels.size()) return fail(LK_ERR_OUT_OF_RANGE, "level index out of range");
  const LevelSet& s = l->levels.levels[index];
  if (member >= s.size()) return fail(LK_ERR_OUT_OF_RANGE, "member index out of range");
  return guarded([&] {
    *out = new lk_polygon{s.representative(member)};
    return LK_OK;
  });
}

const char* lk_search_label_name(lk_search_label label) {
  switch (label) {
    case LK_LABEL_EXHAUSTIVE: return "exhaustive";
    case LK_LABEL_SEED_GENERATED: return "seed-generated";
    case LK_LABEL_CAPPED: return "capped";
    case LK_LABEL_POSITIVE_DETOUR: return "positive-detour";
  }
  return "unknown";
}

lk_status lk_profile_compute(const lk_levels* l, lk_search_label label, unsigned workers, lk_profile** out) {
  LK_REQUIRE(l && out);
  return guarded([&] {
    SearchLabel sl = SearchLabel::positive_detour;
    if (label == LK_LABEL_EXHAUSTIVE) sl = SearchLabel::exhaustive;
    if (label == LK_LABEL_SEED_GENERATED) sl = SearchLabel::seed_generated;
    if (label == LK_LABEL_CAPPED) sl = SearchLabel::capped;
    *out = new lk_profile{profile_tables(l->levels.levels, sl, workers)};
    return LK_OK;
  });
}

void lk_profile_free(lk_profile* p) { delete p; }

size_t lk_profile_row_count(const lk_profile* p) { return p ? p->tables.exact.size() : 0; }

lk_status lk_profile_get_row(const lk_profile* p, int filtered, size_t index, lk_profile_row* out) {
  LK_REQUIRE(p && out);
  const auto& rows = filtered ? p->tables.filtered : p->tables.exact;
  if (index >= rows.size()) return fail(LK_ERR_OUT_OF_RANGE, "row index out of range");
  const ProfileRow& r = rows[index];
  *out = {r.level, r.exact_count, r.cumulative_count, r.best_rho2, r.best_rho_inf, r.best_crad2, r.best_crad_inf};
  return LK_OK;
}

lk_status lk_profile_argbest(const lk_profile* p, int filtered, size_t index, int k, char** out) {
  LK_REQUIRE(p && out);
  const auto& rows = filtered ? p->tables.filtered : p->tables.exact;
  if (index >= rows.size() || k < 0 || k > 3) return fail(LK_ERR_OUT_OF_RANGE, "row or column out of range");
  return guarded([&] {
    *out = dup_string(rows[index].argbest[k].to_string());
    return LK_OK;
  });
}

lk_status lk_bfacf(const lk_polygon* const* seeds, size_t nseeds, int cap, size_t max_vertices, double max_seconds,
                   lk_graph** out) {
  LK_REQUIRE(seeds && out);
  return guarded([&] {
    std::vector<LatticePolygon> s;
    for (size_t i = 0; i < nseeds; ++i) {
      if (!seeds[i]) return fail(LK_ERR_INVALID_ARGUMENT, "null seed");
      s.push_back(seeds[i]->poly);
    }
    auto g = std::make_unique<lk_graph>();
    g->graph = bfacf_reachable(s, cap, budget(max_vertices, max_seconds));
    g->comps = components(g->graph);
    *out = g.release();
    return LK_OK;
  });
}

void lk_graph_free(lk_graph* g) { delete g; }

int lk_graph_complete(const lk_graph* g) { return g && g->graph.complete ? 1 : 0; }

size_t lk_graph_vertex_count(const lk_graph* g) { return g ? g->graph.keys.size() : 0; }

size_t lk_graph_edge_count(const lk_graph* g) { return g ? g->graph.edges.size() : 0; }

size_t lk_graph_component_count(const lk_graph* g) { return g ? g->comps.size() : 0; }

lk_status lk_graph_component(const lk_graph* g, size_t index, lk_component* out) {
  LK_REQUIRE(g && out);
  if (index >= g->comps.size()) return fail(LK_ERR_OUT_OF_RANGE, "component index out of range");
  const Component& c = g->comps[index];
  *out = {c.vertices.size(), c.seeds.size(), c.min_rho2, c.min_rho_inf, c.min_crad2, c.min_crad_inf};
  return LK_OK;
}

lk_status lk_graph_seed_component(const lk_graph* g, size_t seed, size_t* component) {
  LK_REQUIRE(g && component);
  for (size_t c = 0; c < g->comps.size(); ++c) {
    for (const size_t s : g->comps[c].seeds) {
      if (s == seed) {
        *component = c;
        return LK_OK;
      }
    }
  }
  return fail(LK_ERR_OUT_OF_RANGE, "seed index out of range");
}

lk_status lk_graph_vertex_key(const lk_graph* g, size_t vertex, char** out) {
  LK_REQUIRE(g && out);
  if (vertex >= g->graph.keys.size()) return fail(LK_ERR_OUT_OF_RANGE, "vertex index out of range");
  return guarded([&] {
    *out = dup_string(g->graph.keys[vertex].to_string());
    return LK_OK;
  });
}

lk_status lk_merge_scale(const lk_polygon* a, const lk_polygon* b, int nmax, size_t max_vertices, double max_seconds,
                         lk_merge_status* status, int* level, lk_path** path) {
  LK_REQUIRE(a && b && status);
  return guarded([&] {
    const MergeOutcome m = merge_scale(a->poly, b->poly, nmax, budget(max_vertices, max_seconds));
    *status = m.status == MergeStatus::merged       ? LK_MERGED
              : m.status == MergeStatus::not_merged ? LK_NOT_MERGED
                                                    : LK_MERGE_INCONCLUSIVE;
    if (level) *level = m.level;
    if (path) {
      *path = nullptr;
      if (m.status == MergeStatus::merged) *path = new lk_path{extract_path(*m.graph, a->poly, b->poly)};
    }
    return LK_OK;
  });
}

lk_status lk_path_parse(const char* text, lk_path** out) {
  LK_REQUIRE(text && out);
  return guarded([&] {
    *out = new lk_path{parse_path(text)};
    return LK_OK;
  });
}

void lk_path_free(lk_path* p) { delete p; }

lk_status lk_path_serialize(const lk_path* p, char** out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    *out = dup_string(serialize_path(p->path));
    return LK_OK;
  });
}

lk_status lk_path_validate(const lk_path* p) {
  LK_REQUIRE(p);
  return guarded([&] {
    validate_path(p->path);
    return LK_OK;
  });
}

size_t lk_path_state_count(const lk_path* p) { return p ? p->path.states.size() : 0; }

lk_status lk_path_state(const lk_path* p, size_t index, lk_polygon** out) {
  LK_REQUIRE(p && out);
  if (index >= p->path.states.size()) return fail(LK_ERR_OUT_OF_RANGE, "state index out of range");
  return guarded([&] {
    *out = new lk_polygon{p->path.states[index]};
    return LK_OK;
  });
}

lk_status lk_path_move(const lk_path* p, size_t index, char** out) {
  LK_REQUIRE(p && out);
  if (index >= p->path.moves.size()) return fail(LK_ERR_OUT_OF_RANGE, "move index out of range");
  return guarded([&] {
    *out = dup_string(format_move(p->path.moves[index]));
    return LK_OK;
  });
}

lk_status lk_path_eval(const lk_path* p, lk_raw_row* rows, size_t capacity) {
  LK_REQUIRE(p && rows);
  if (capacity < p->path.states.size()) return fail(LK_ERR_OUT_OF_RANGE, "row buffer too small");
  return guarded([&] {
    const auto r = evaluate_path(p->path);
    for (size_t i = 0; i < r.size(); ++i) fill(&rows[i], r[i]);
    return LK_OK;
  });
}

lk_status lk_round_corners(const lk_polygon* p, double radius, lk_curve** out) {
  LK_REQUIRE(p && out);
  return guarded([&] {
    *out = new lk_curve{round_corners(p->poly, radius)};
    return LK_OK;
  });
}

lk_status lk_curve_parse(const char* text, lk_curve** out) {
  LK_REQUIRE(text && out);
  return guarded([&] {
    *out = new lk_curve{parse_curve(text)};
    return LK_OK;
  });
}

void lk_curve_free(lk_curve* c) { delete c; }

lk_status lk_curve_serialize(const lk_curve* c, char** out) {
  LK_REQUIRE(c && out);
  return guarded([&] {
    *out = dup_string(serialize_curve(c->curve));
    return LK_OK;
  });
}

size_t lk_curve_piece_count(const lk_curve* c) { return c ? c->curve.size() : 0; }

double lk_curve_length(const lk_curve* c) { return c ? curve_length(c->curve) : 0.0; }

lk_status lk_curve_d2(const lk_curve* c, double* out) {
  LK_REQUIRE(c && out);
  return guarded([&] {
    *out = curve_d2(c->curve);
    return LK_OK;
  });
}

lk_status lk_curve_diameter(const lk_curve* c, double tol, double* out) {
  LK_REQUIRE(c && out);
  return guarded([&] {
    *out = tol > 0.0 ? curve_diameter(c->curve, tol) : curve_diameter(c->curve);
    return LK_OK;
  });
}

lk_status lk_curve_normalize(const lk_curve* c, double tau, lk_curve** out) {
  LK_REQUIRE(c && out);
  return guarded([&] {
    *out = new lk_curve{normalize(c->curve, tau)};
    return LK_OK;
  });
}

lk_status lk_curve_embedded(const lk_curve* c, const lk_certify_options* opts, int* pass, char** reason) {
  LK_REQUIRE(c && pass);
  return guarded([&] {
    const auto r = embeddedness_certificate(c->curve, certify_options(opts));
    *pass = r.pass ? 1 : 0;
    if (reason) *reason = r.pass ? nullptr : dup_string(r.reason);
    return LK_OK;
  });
}

lk_status lk_curve_certify(const lk_curve* c, const lk_certify_options* opts, lk_certificate* out) {
  LK_REQUIRE(c && out);
  return guarded([&] {
    const auto t = thickness_certificate(c->curve, certify_options(opts));
    out->certified = t.status == CertStatus::certified ? 1 : 0;
    out->tau_cert = t.tau_cert;
    out->min_arc_radius = t.min_arc_radius;
    out->min_nonadjacent_halfdist = t.min_nonadjacent_halfdist;
    out->max_curvature = t.max_curvature;
    out->max_tangent_mismatch = t.max_tangent_mismatch;
    out->exclusion_arclength = t.exclusion_arclength;
    out->pairs_checked = t.pairs_checked;
    out->boxes_explored = t.boxes_explored;
    out->tol = t.tol;
    out->max_depth = t.max_depth;
    if (!t.note.empty()) g_error = t.note;
    return LK_OK;
  });
}

lk_status lk_curve_smoothed_row(const lk_curve* c, const lk_certificate* cert, lk_smoothed_row* out) {
  LK_REQUIRE(c && cert && out);
  if (!cert->certified) return fail(LK_ERR_INCONCLUSIVE, "certificate is not certified");
  return guarded([&] {
    ThicknessCertificate t;
    t.status = CertStatus::certified;
    t.tau_cert = cert->tau_cert;
    const SmoothedRow r = smoothed_row(c->curve, t);
    *out = {r.length, r.tau_cert, r.d2, r.d_inf, r.rho2, r.rho_inf, r.crad2, r.crad_inf};
    return LK_OK;
  });
}

lk_status lk_smoothed_profile(const lk_levels* l, const double* radii, size_t nradii, const lk_certify_options* opts,
                              unsigned workers, lk_smoothed_profile_row* exact, lk_smoothed_profile_row* filtered,
                              size_t capacity) {
  LK_REQUIRE(l && radii && exact && filtered);
  if (capacity < l->levels.levels.size()) return fail(LK_ERR_OUT_OF_RANGE, "row buffer too small");
  return guarded([&] {
    SmoothingScheme scheme;
    scheme.radii.assign(radii, radii + nradii);
    const auto prof = smoothed_profile(l->levels.levels, scheme, certify_options(opts), workers);
    for (size_t i = 0; i < prof.exact.size(); ++i) {
      fill(&exact[i], prof.exact[i]);
      fill(&filtered[i], prof.filtered[i]);
    }
    return LK_OK;
  });
}

}  // extern "C"

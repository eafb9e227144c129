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

/* C interface to the latknot library.
 *
 * Every object is an opaque handle released with its *_free function. Calls
 * return an lk_status; on failure lk_last_error() describes the problem (the
 * message is per thread and stays valid until the next failing call on that
 * thread). Strings returned through char** are owned by the caller and freed
 * with lk_string_free. */
#ifndef LATKNOT_H
#define LATKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LK_API __declspec(dllexport)
#else
#define LK_API __attribute__((visibility("default")))
#endif

typedef enum {
  LK_OK = 0,
  LK_ERR_INVALID_ARGUMENT = 1,
  LK_ERR_PARSE = 2,
  LK_ERR_BUDGET = 3,
  LK_ERR_INCONCLUSIVE = 4,
  LK_ERR_OUT_OF_RANGE = 5,
  LK_ERR_MEMORY = 6,
  LK_ERR_INTERNAL = 7
} lk_status;

LK_API const char* lk_last_error(void);
LK_API const char* lk_status_name(lk_status s);
LK_API const char* lk_version(void);
LK_API void lk_string_free(char* s);

/* ---- polygons ---- */

typedef struct lk_polygon lk_polygon;

/* Seed-file text: one "x y z" per line, '#' comments. */
LK_API lk_status lk_polygon_parse(const char* text, lk_polygon** out);
/* xyz holds 3 * n coordinates. */
LK_API lk_status lk_polygon_from_vertices(const int32_t* xyz, size_t n, lk_polygon** out);
LK_API void lk_polygon_free(lk_polygon* p);
LK_API size_t lk_polygon_length(const lk_polygon* p);
/* Writes 3 * length coordinates; capacity counts int32 slots. */
LK_API lk_status lk_polygon_vertices(const lk_polygon* p, int32_t* xyz, size_t capacity);
LK_API lk_status lk_polygon_serialize(const lk_polygon* p, char** out);
/* Canonical key as the comma-separated vertex stream of the representative. */
LK_API lk_status lk_polygon_canonical_key(const lk_polygon* p, char** out);
LK_API lk_status lk_polygon_from_key(const char* key, lk_polygon** out);

/* ---- raw functionals ---- */

typedef struct {
  size_t length;
  int64_t d2_squared_num;
  int64_t d2_squared_den;
  double d2;
  double d_inf;
  double rho2;
  double rho_inf;
  double crad2_sc;
  double crad_inf_sc;
} lk_raw_row;

LK_API lk_status lk_raw_row_eval(const lk_polygon* p, lk_raw_row* out);
/* p-spread; p = INFINITY gives the diameter. tol <= 0 selects the default. */
LK_API lk_status lk_dp(const lk_polygon* p, double exponent, double tol, double* value, int* converged);

/* ---- moves ---- */

/* move: "kind:edge:direction", e.g. "plus2:4:+y". LK_ERR_INVALID_ARGUMENT
 * when the move does not apply. */
LK_API lk_status lk_move_apply(const lk_polygon* p, const char* move, lk_polygon** out);
/* All legal moves, one per line, in enumeration order. */
LK_API lk_status lk_moves_enumerate(const lk_polygon* p, char** out);

/* ---- positive-detour levels and profiles ---- */

typedef enum { LK_DEDUP_POINT_SET = 0, LK_DEDUP_ISOMETRY = 1 } lk_dedup;

typedef struct lk_levels lk_levels;

/* max_members = 0 selects the default cap. */
LK_API lk_status lk_detour_levels(const lk_polygon* seed, int nmax, lk_dedup dedup, unsigned workers,
                                  size_t max_members, lk_levels** out);
LK_API void lk_levels_free(lk_levels* l);
LK_API size_t lk_levels_count(const lk_levels* l);
/* 1 when every requested level was generated. */
LK_API int lk_levels_complete(const lk_levels* l);
LK_API lk_status lk_levels_info(const lk_levels* l, size_t index, int* level, size_t* members);
LK_API lk_status lk_levels_member(const lk_levels* l, size_t index, size_t member, lk_polygon** out);

typedef enum {
  LK_LABEL_EXHAUSTIVE = 0,
  LK_LABEL_SEED_GENERATED = 1,
  LK_LABEL_CAPPED = 2,
  LK_LABEL_POSITIVE_DETOUR = 3
} lk_search_label;

LK_API const char* lk_search_label_name(lk_search_label label);

typedef struct {
  int level;
  uint64_t exact_count;
  uint64_t cumulative_count;
  double best_rho2;
  double best_rho_inf;
  double best_crad2;
  double best_crad_inf;
} lk_profile_row;

typedef struct lk_profile lk_profile;

LK_API lk_status lk_profile_compute(const lk_levels* l, lk_search_label label, unsigned workers, lk_profile** out);
LK_API void lk_profile_free(lk_profile* p);
LK_API size_t lk_profile_row_count(const lk_profile* p);
/* filtered != 0 selects the running-minimum table. */
LK_API lk_status lk_profile_get_row(const lk_profile* p, int filtered, size_t index, lk_profile_row* out);
/* Canonical key realizing column k (0 rho2, 1 rho_inf, 2 crad2, 3 crad_inf). */
LK_API lk_status lk_profile_argbest(const lk_profile* p, int filtered, size_t index, int k, char** out);

/* ---- BFACF move graphs ---- */

typedef struct lk_graph lk_graph;

typedef struct {
  size_t vertices;
  size_t seeds;
  double min_rho2;
  double min_rho_inf;
  double min_crad2;
  double min_crad_inf;
} lk_component;

/* Returns LK_OK for budget-truncated graphs; check lk_graph_complete.
 * max_vertices = 0 selects the default; max_seconds <= 0 disables the clock. */
LK_API lk_status lk_bfacf(const lk_polygon* const* seeds, size_t nseeds, int cap, size_t max_vertices,
                          double max_seconds, lk_graph** out);
LK_API void lk_graph_free(lk_graph* g);
LK_API int lk_graph_complete(const lk_graph* g);
LK_API size_t lk_graph_vertex_count(const lk_graph* g);
LK_API size_t lk_graph_edge_count(const lk_graph* g);
LK_API size_t lk_graph_component_count(const lk_graph* g);
LK_API lk_status lk_graph_component(const lk_graph* g, size_t index, lk_component* out);
/* Component containing seed `seed` (index into the seeds passed to lk_bfacf). */
LK_API lk_status lk_graph_seed_component(const lk_graph* g, size_t seed, size_t* component);
LK_API lk_status lk_graph_vertex_key(const lk_graph* g, size_t vertex, char** out);

/* ---- merge scale and move paths ---- */

typedef enum { LK_MERGED = 0, LK_NOT_MERGED = 1, LK_MERGE_INCONCLUSIVE = 2 } lk_merge_status;

typedef struct lk_path lk_path;

/* level: merging level when merged, last completed cap otherwise. When path
 * is non-null and the seeds merged, *path receives a move path from a to b. */
LK_API lk_status lk_merge_scale(const lk_polygon* a, const lk_polygon* b, int nmax, size_t max_vertices,
                                double max_seconds, lk_merge_status* status, int* level, lk_path** path);
LK_API lk_status lk_path_parse(const char* text, lk_path** out);
LK_API void lk_path_free(lk_path* p);
LK_API lk_status lk_path_serialize(const lk_path* p, char** out);
/* LK_ERR_INVALID_ARGUMENT naming the first step that fails to replay. */
LK_API lk_status lk_path_validate(const lk_path* p);
LK_API size_t lk_path_state_count(const lk_path* p);
LK_API lk_status lk_path_state(const lk_path* p, size_t index, lk_polygon** out);
LK_API lk_status lk_path_move(const lk_path* p, size_t index, char** out);
/* rows holds capacity entries; one per state. */
LK_API lk_status lk_path_eval(const lk_path* p, lk_raw_row* rows, size_t capacity);

/* ---- smoothing, certification and smoothed functionals ---- */

typedef struct lk_curve lk_curve;

LK_API lk_status lk_round_corners(const lk_polygon* p, double radius, lk_curve** out);
LK_API lk_status lk_curve_parse(const char* text, lk_curve** out);
LK_API void lk_curve_free(lk_curve* c);
LK_API lk_status lk_curve_serialize(const lk_curve* c, char** out);
LK_API size_t lk_curve_piece_count(const lk_curve* c);
LK_API double lk_curve_length(const lk_curve* c);
LK_API lk_status lk_curve_d2(const lk_curve* c, double* out);
LK_API lk_status lk_curve_diameter(const lk_curve* c, double tol, double* out);
LK_API lk_status lk_curve_normalize(const lk_curve* c, double tau, lk_curve** out);

typedef struct {
  double tol;      /* <= 0 selects 1e-6 */
  int max_depth;   /* <= 0 selects 48 */
} lk_certify_options;

/* *pass = 1 when embedded; otherwise reason (if non-null) receives a message. */
LK_API lk_status lk_curve_embedded(const lk_curve* c, const lk_certify_options* opts, int* pass, char** reason);

typedef struct {
  int certified;
  double tau_cert;
  double min_arc_radius;
  double min_nonadjacent_halfdist;
  double max_curvature;
  double max_tangent_mismatch;
  double exclusion_arclength;
  uint64_t pairs_checked;
  uint64_t boxes_explored;
  double tol;
  int max_depth;
} lk_certificate;

/* Returns LK_OK with certified = 0 for inconclusive certificates. */
LK_API lk_status lk_curve_certify(const lk_curve* c, const lk_certify_options* opts, lk_certificate* out);

typedef struct {
  double length;
  double tau_cert;
  double d2;
  double d_inf;
  double rho2;
  double rho_inf;
  double crad2;
  double crad_inf;
} lk_smoothed_row;

/* LK_ERR_INCONCLUSIVE when the certificate is not certified. */
LK_API lk_status lk_curve_smoothed_row(const lk_curve* c, const lk_certificate* cert, lk_smoothed_row* out);

typedef struct {
  int level;
  uint64_t members;
  uint64_t curves;
  uint64_t skipped;
  double best_rho2;
  double best_rho_inf;
  double best_crad2;
  double best_crad_inf;
} lk_smoothed_profile_row;

/* exact and filtered each hold capacity rows (one per level). Radii must lie
 * in (0, 1/2). */
LK_API lk_status lk_smoothed_profile(const lk_levels* l, const double* radii, size_t nradii,
                                     const lk_certify_options* opts, unsigned workers,
                                     lk_smoothed_profile_row* exact, lk_smoothed_profile_row* filtered,
                                     size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* LATKNOT_H */

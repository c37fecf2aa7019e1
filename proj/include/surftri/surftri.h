/* C interface to the surftri library. Every function returns a status code;
 * results come back through out parameters. Handles are opaque and owned by
 * the caller. */
#ifndef SURFTRI_H
#define SURFTRI_H

#include <stddef.h>

#if defined(SURFTRI_BUILDING)
#define SURFTRI_API __attribute__((visibility("default")))
#else
#define SURFTRI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum surftri_status {
  SURFTRI_OK = 0,
  SURFTRI_NONE = 1,             /* search finished without a witness */
  SURFTRI_SEARCH_EXHAUSTED = 2, /* length bound hit without a witness */
  SURFTRI_E_INVALID_ARGUMENT = -1,
  SURFTRI_E_PARSE = -2,
  SURFTRI_E_IO = -3,
  SURFTRI_E_NON_TRIANGLE = -4,
  SURFTRI_E_EDGE_DEGREE = -5,
  SURFTRI_E_SHARED_EDGES = -6,
  SURFTRI_E_PINCHED = -7,
  SURFTRI_E_DISCONNECTED = -8,
  SURFTRI_E_LABEL_RANGE = -9,
  SURFTRI_E_NO_SUCH_EDGE = -10,
  SURFTRI_E_NOT_CONTRACTIBLE = -11,
  SURFTRI_E_ILLEGAL_SITE = -12,
  SURFTRI_E_NOT_FLIPPABLE = -13,
  SURFTRI_E_INVALID_RESULT = -14,
  SURFTRI_E_WRONG_ORIENTABILITY = -15,
  SURFTRI_E_WRONG_DEGREE = -16,
  SURFTRI_E_INVALID_CYCLE = -17,
  SURFTRI_E_BAD_H = -18,
  SURFTRI_E_IMPOSSIBLE_TYPE = -19,
  SURFTRI_E_INCOMPLETE_SEEDS = -20,
  SURFTRI_E_LONG_RUN_REQUIRED = -21,
  SURFTRI_E_NO_NONSEPARATING_3CYCLE = -22,
  SURFTRI_E_MIXED_INPUT = -23,
  SURFTRI_E_BAD_G = -24,
  SURFTRI_E_UNSUPPORTED_SURFACE = -25,
  SURFTRI_E_INTERNAL = -100
} surftri_status;

typedef struct surftri_tri surftri_tri;
typedef struct surftri_set surftri_set;

typedef struct surftri_surface {
  int orientable; /* 1: S_g, 0: N_g */
  int genus;
} surftri_surface;

/* Message of the last failing call on this thread. */
SURFTRI_API const char* surftri_last_error(void);
SURFTRI_API const char* surftri_status_name(int status);
SURFTRI_API void surftri_string_free(char* s);

/* Surfaces */
SURFTRI_API int surftri_surface_parse(const char* name, surftri_surface* out);
SURFTRI_API int surftri_surface_name(surftri_surface s, char** out);
SURFTRI_API int surftri_v_min(surftri_surface s, int* out);
SURFTRI_API int surftri_v_max_lower_bound(surftri_surface s, int* out);

/* Triangulations */
SURFTRI_API int surftri_tri_parse(const char* record, surftri_tri** out);
/* faces: 3 * face_count labels in 0..n-1 */
SURFTRI_API int surftri_tri_from_faces(int n, const int* faces, size_t face_count, surftri_tri** out);
SURFTRI_API int surftri_tri_clone(const surftri_tri* t, surftri_tri** out);
SURFTRI_API void surftri_tri_free(surftri_tri* t);
SURFTRI_API int surftri_tri_record(const surftri_tri* t, char** out);
SURFTRI_API int surftri_tri_vertex_count(const surftri_tri* t);
SURFTRI_API int surftri_tri_face_count(const surftri_tri* t);
/* Copies the sorted faces; out holds 3 * face_count ints. */
SURFTRI_API int surftri_tri_faces(const surftri_tri* t, int* out);
SURFTRI_API int surftri_tri_surface(const surftri_tri* t, surftri_surface* out);

/* Local operations */
SURFTRI_API int surftri_is_contractible(const surftri_tri* t, int u, int v, int* out);
SURFTRI_API int surftri_contract(const surftri_tri* t, int u, int v, surftri_tri** out);
SURFTRI_API int surftri_is_irreducible(const surftri_tri* t, int* out);
SURFTRI_API int surftri_contract_to_irreducible(const surftri_tri* t, surftri_tri** out);
SURFTRI_API int surftri_flip(const surftri_tri* t, int u, int v, surftri_tri** out);
SURFTRI_API int surftri_is_pseudo_minimal(const surftri_tri* t, int* out);
SURFTRI_API int surftri_is_almost_irreducible(const surftri_tri* t, int* out);

/* Canonical forms */
SURFTRI_API int surftri_canonical_form(const surftri_tri* t, surftri_tri** out);
SURFTRI_API int surftri_are_equivalent(const surftri_tri* a, const surftri_tri* b, int* out);

/* Cycles. Cycle buffers hold at least vertex_count ints. */
typedef struct surftri_cycle_info {
  int separating;
  int contractible;
  int one_sided;
  int nonorientable_leaving;
  int component_count; /* 1 or 2 */
  int euler_genus[2];  /* capped components */
  int orientable[2];
} surftri_cycle_info;

SURFTRI_API int surftri_classify_cycle(const surftri_tri* t, const int* cycle, size_t len, surftri_cycle_info* out);
/* Calls f for each simple cycle of exactly len vertices; f returns 0 to stop. */
typedef int (*surftri_cycle_fn)(const int* cycle, size_t len, void* user);
SURFTRI_API int surftri_for_each_cycle(const surftri_tri* t, int len, surftri_cycle_fn f, void* user);
/* max_len <= 0: no bound. Status OK with a witness, NONE, or SEARCH_EXHAUSTED. */
SURFTRI_API int surftri_edge_width(const surftri_tri* t, int max_len, int* cycle, size_t* len);
/* require_orientable: -1 any, 0 nonorientable, 1 orientable (h side, other side). */
SURFTRI_API int surftri_find_nsc(const surftri_tri* t, int h, int require_h, int require_rest, int max_len,
                                 int* cycle, size_t* len);
SURFTRI_API int surftri_find_nonseparating(const surftri_tri* t, int one_sided, int nonorientable_leaving,
                                           int max_len, int* cycle, size_t* len);
SURFTRI_API int surftri_nonseparating_3cycles_at(const surftri_tri* t, int v, int* out);

/* Constructions */
SURFTRI_API int surftri_build_large_irreducible(surftri_surface s, surftri_tri** out);
SURFTRI_API int surftri_n3_counterexample(surftri_tri** out);
/* removed_faces holds 3 * g ints. */
SURFTRI_API int surftri_build_base(int g, surftri_tri** out, int* removed_faces);
SURFTRI_API int surftri_k7_torus(surftri_tri** out);

/* Sets */
SURFTRI_API surftri_set* surftri_set_new(void);
SURFTRI_API void surftri_set_free(surftri_set* s);
SURFTRI_API size_t surftri_set_size(const surftri_set* s);
SURFTRI_API int surftri_set_get(const surftri_set* s, size_t i, surftri_tri** out);
SURFTRI_API int surftri_set_add(surftri_set* s, const surftri_tri* t);
SURFTRI_API int surftri_set_read(const char* path, surftri_set** out);
SURFTRI_API int surftri_set_write(const surftri_set* s, const char* path, const char* comment);
/* class_of[i] receives the flip class of member i; classes ordered by first member. */
SURFTRI_API int surftri_flip_classes(const surftri_set* s, size_t* class_of, size_t* class_count);

typedef void (*surftri_progress_fn)(const char* message, void* user);

typedef struct surftri_generate_options {
  surftri_surface surface;
  int max_vertices;           /* 0: the known maximum for the surface */
  const char* checkpoint_dir; /* NULL: none */
  const char* seed_dir;       /* NULL: derive desk-scale seeds */
  int jobs;                   /* 0 or 1: single-threaded */
  int allow_long;
  surftri_progress_fn progress;
  void* progress_user;
} surftri_generate_options;

/* Irreducible triangulations, canonical, sorted. Seeds for a lower surface X
 * come from <seed_dir>/X.tri when present, else are generated when that is
 * desk scale, else INCOMPLETE_SEEDS. Jobs past desk scale need allow_long. */
SURFTRI_API int surftri_generate(const surftri_generate_options* opt, surftri_set** out);
/* All triangulations of s with n vertices by exhaustive backtracking. */
SURFTRI_API int surftri_oracle(surftri_surface s, int n, surftri_set** out);
SURFTRI_API int surftri_reduce_genus(const surftri_tri* t, surftri_set** out);

#ifdef __cplusplus
}
#endif

#endif

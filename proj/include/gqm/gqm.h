/* SPDX-License-Identifier: Apache-2.0 */

/*
 * gqm: graph Laplacians, Hodge theory and discrete Morse theory on finite
 * graphs, with exact rational arithmetic.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions return a gqm_status; on failure gqm_last_error() describes the
 * problem (per thread, valid until the next call on that thread).
 *
 * Vertices are addressed by index 0..N-1 in graph order; the graph file ids
 * are available through gqm_graph_vertex_index. Edges are addressed by their
 * 0-based position in the edge list.
 */

#ifndef GQM_GQM_H
#define GQM_GQM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GQM_BUILDING_LIBRARY)
#define GQM_API __declspec(dllexport)
#else
#define GQM_API __declspec(dllimport)
#endif
#else
#define GQM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gqm_graph gqm_graph;
typedef struct gqm_morse gqm_morse;

/* Values 0-3 double as CLI exit codes. */
typedef enum gqm_status {
  GQM_OK = 0,
  GQM_ERR_PARSE = 1,         /* malformed graph or Morse-function text */
  GQM_ERR_INVALID_MORSE = 2, /* function violates the Morse conditions */
  GQM_ERR_INVARIANT = 3,     /* an internal cross-check failed */
  GQM_ERR_ARGUMENT = 4,      /* null pointer, bad index, unmet precondition */
  GQM_ERR_DIVERGENT = 5,     /* s -> infinity limit does not exist */
  GQM_ERR_OVERFLOW = 6,      /* exact result does not fit the output type */
  GQM_ERR_INTERNAL = 7
} gqm_status;

GQM_API const char* gqm_version(void);
GQM_API const char* gqm_last_error(void);
GQM_API const char* gqm_status_name(gqm_status status);
GQM_API void gqm_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Edge-list text: optional "vertices N" header, one "tail head" pair per
 * line, '#' comments. */
GQM_API gqm_status gqm_graph_parse(const char* text, gqm_graph** out);
GQM_API gqm_status gqm_graph_create(size_t vertex_count, const size_t* tails, const size_t* heads,
                                    size_t edge_count, gqm_graph** out);
GQM_API void gqm_graph_free(gqm_graph* g);

GQM_API size_t gqm_graph_vertex_count(const gqm_graph* g);
GQM_API size_t gqm_graph_edge_count(const gqm_graph* g);
/* Index of the vertex written as `label` in the graph file. */
GQM_API gqm_status gqm_graph_vertex_index(const gqm_graph* g, uint64_t label, size_t* out);
GQM_API gqm_status gqm_graph_vertex_label(const gqm_graph* g, size_t index, uint64_t* out);

GQM_API gqm_status gqm_graph_betti(const gqm_graph* g, size_t* h0, size_t* h1);
GQM_API gqm_status gqm_graph_cutoff_cohomology(const gqm_graph* g, double a, size_t* h0, size_t* h1);
/* Entry (i, j) of (-Delta_+)^k, and entry (a, b) of (Delta_-)^k. */
GQM_API gqm_status gqm_graph_walk_count(const gqm_graph* g, unsigned k, size_t i, size_t j, int64_t* out);
GQM_API gqm_status gqm_graph_odd_walk_count(const gqm_graph* g, unsigned k, size_t a, size_t b, int64_t* out);

/* ---- Morse functions ------------------------------------------------- */

/* "V <vertex_id> <p/q>" and "E <edge_index> <p/q>" lines. The function is
 * parsed but not validated; see gqm_morse_is_valid. */
GQM_API gqm_status gqm_morse_parse(const gqm_graph* g, const char* text, gqm_morse** out);
GQM_API gqm_status gqm_morse_random(const gqm_graph* g, uint64_t seed, gqm_morse** out);
/* Height function of the BFS spanning tree rooted at vertex index `root`. */
GQM_API gqm_status gqm_morse_height(const gqm_graph* g, size_t root, gqm_morse** out);
GQM_API gqm_status gqm_morse_flatten(const gqm_graph* g, const gqm_morse* f, gqm_morse** out);
GQM_API void gqm_morse_free(gqm_morse* f);

GQM_API gqm_status gqm_morse_to_text(const gqm_graph* g, const gqm_morse* f, char** out);
GQM_API gqm_status gqm_morse_is_valid(const gqm_graph* g, const gqm_morse* f, int* valid);
GQM_API gqm_status gqm_morse_critical_counts(const gqm_graph* g, const gqm_morse* f, size_t* c0, size_t* c1);
GQM_API gqm_status gqm_morse_homology(const gqm_graph* g, const gqm_morse* f, size_t* h0, size_t* h1);
GQM_API gqm_status gqm_morse_limit_kernel_dims(const gqm_graph* g, const gqm_morse* f, size_t* even, size_t* odd);
/* Exact kernel dimensions of the deformed Laplacians with exp(-s/step) set to
 * base_num/base_den (step = 1 for integer-valued functions). */
GQM_API gqm_status gqm_morse_deformed_kernel_dims(const gqm_graph* g, const gqm_morse* f, int64_t base_num,
                                                  int64_t base_den, size_t* h0, size_t* h1);

/* ---- JSON reports ---------------------------------------------------- */

typedef struct gqm_morse_options {
  int witten;            /* include deformed operators and s -> infinity limits */
  int flatten;           /* analyse the flattened function in the deformation */
  const double* s_grid;  /* ascending; spectral flow table when non-empty */
  size_t s_grid_length;
  int has_cutoff;
  double cutoff;         /* energy cutoff a >= 0 */
} gqm_morse_options;

typedef struct gqm_fuzz_options {
  size_t graphs;
  uint64_t seed;
  size_t max_vertices;
  size_t max_edges;
  const char* artifact_dir; /* reproducers are written here; NULL means "." */
  int inject_fault;         /* corrupt the even Laplacian to exercise the failure path */
} gqm_fuzz_options;

GQM_API void gqm_morse_options_init(gqm_morse_options* options);
GQM_API void gqm_fuzz_options_init(gqm_fuzz_options* options);

/* On GQM_OK, GQM_ERR_INVALID_MORSE and GQM_ERR_INVARIANT the report is
 * stored in *json_out (release with gqm_string_free); otherwise *json_out is
 * set to NULL. */
GQM_API gqm_status gqm_report_hodge(const gqm_graph* g, char** json_out);
GQM_API gqm_status gqm_report_morse(const gqm_graph* g, const gqm_morse* f, const gqm_morse_options* options,
                                    char** json_out);
GQM_API gqm_status gqm_report_tree(const gqm_graph* g, size_t root, char** json_out);
GQM_API gqm_status gqm_report_walks(const gqm_graph* g, unsigned k, int odd, int oracle, char** json_out);
GQM_API gqm_status gqm_report_fuzz(const gqm_fuzz_options* options, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GQM_GQM_H */

#ifndef ORIENTCOUNT_H
#define ORIENTCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NULL_POINTER = 1,
  OC_STATUS_INVALID_UTF8 = 2,
  OC_STATUS_PARSE = 3,
  OC_STATUS_INVALID_ARGUMENT = 4,
  OC_STATUS_BUDGET = 5,
  OC_STATUS_OVERFLOW = 6,
  OC_STATUS_IO = 7,
  OC_STATUS_PANIC = 8,
} OcStatus;

// A forbidden tournament family.
typedef struct OcFamily OcFamily;

// A simple graph on at most 16 vertices.
typedef struct OcGraph OcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Valid until the next
// failing call on the same thread; do not free.
const char *oc_last_error(void);

// Library version, static.
const char *oc_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void oc_string_free(char *s);

// Parses a graph6 string.
//
// # Safety
// `code` must be a NUL-terminated string; `out` must be writable.
enum OcStatus oc_graph_from_graph6(const char *code, struct OcGraph **out);

// Complete multipartite graph with the given part sizes.
//
// # Safety
// `sizes` must point to `len` values; `out` must be writable.
enum OcStatus oc_graph_from_parts(const size_t *sizes, size_t len, struct OcGraph **out);

// Balanced complete `r`-partite graph on `n` vertices.
//
// # Safety
// `out` must be writable.
enum OcStatus oc_graph_turan(size_t n, size_t r, struct OcGraph **out);

// Canonical relabeling of `g` as a new handle.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum OcStatus oc_graph_canonical(const struct OcGraph *g, struct OcGraph **out);

// # Safety
// `g` must be null or a live handle from this library.
void oc_graph_free(struct OcGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t oc_graph_order(const struct OcGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t oc_graph_edge_count(const struct OcGraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum OcStatus oc_graph_to_graph6(const struct OcGraph *g, char **out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum OcStatus oc_graph_is_complete_multipartite(const struct OcGraph *g, bool *out);

// Parses a family name: `s<k>`, `r<k>`, `u<k>` or `c3`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be writable.
enum OcStatus oc_family_parse(const char *name, struct OcFamily **out);

// # Safety
// `f` must be null or a live handle from this library.
void oc_family_free(struct OcFamily *f);

// Number of family-free orientations as a decimal string.
//
// # Safety
// Handles must be live; `out` must be writable.
enum OcStatus oc_count(const struct OcGraph *g, const struct OcFamily *f, char **out);

// Same as [`oc_count`] with a method name: `naive`, `backtrack` or
// `independent-set` (largest independent set).
//
// # Safety
// Handles and `method` must be valid; `out` must be writable.
enum OcStatus oc_count_with_method(const struct OcGraph *g,
                                   const struct OcFamily *f,
                                   const char *method,
                                   char **out);

// Number of family-free orientations; `Overflow` if it exceeds 64 bits.
//
// # Safety
// Handles must be live; `out` must be writable.
enum OcStatus oc_count_u64(const struct OcGraph *g, const struct OcFamily *f, uint64_t *out);

// Edge count of the Turán graph `T_r(n)`.
//
// # Safety
// `out` must be writable.
enum OcStatus oc_turan_edges(uint64_t n, uint64_t r, uint64_t *out);

// Strongly connected tournaments on `k` labeled vertices.
//
// # Safety
// `out` must be writable.
enum OcStatus oc_sc_count(size_t k, uint64_t *out);

// Extremal search over all graphs (`all`) or complete multipartite graphs
// (`multipartite`) on `n` vertices; the report is a JSON object.
//
// # Safety
// `f` must be live, `mode` NUL-terminated, `out` writable.
enum OcStatus oc_search_json(size_t n, const struct OcFamily *f, const char *mode, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORIENTCOUNT_H */

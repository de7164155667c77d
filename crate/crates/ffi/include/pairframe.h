#ifndef PAIRFRAME_H
#define PAIRFRAME_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum PfStatus {
  PF_STATUS_OK = 0,
  PF_STATUS_NULL_POINTER = 1,
  PF_STATUS_INVALID_ARGUMENT = 2,
  PF_STATUS_PARSE = 3,
  PF_STATUS_SIZE_LIMIT = 4,
  PF_STATUS_DIMENSION_MISMATCH = 5,
  PF_STATUS_UTF8 = 6,
  PF_STATUS_OVERFLOW = 7,
  PF_STATUS_NOT_ISOMORPHIC = 8,
  PF_STATUS_PANIC = 99,
} PfStatus;

/**
 * Which search to run in `pf_canonize`.
 */
typedef enum PfEngine {
  PF_ENGINE_PRUNED = 0,
  PF_ENGINE_BRUTE = 1,
} PfEngine;

/**
 * Canonical vector, frame and automorphism group of a graph.
 */
typedef struct PfCanonResult PfCanonResult;

/**
 * An edge-weighted graph.
 */
typedef struct PfEdgeVector PfEdgeVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the weighted edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PfStatus pf_edge_vector_parse_weighted(const char *text, struct PfEdgeVector **out);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PfStatus pf_edge_vector_parse_graph6(const char *text, struct PfEdgeVector **out);

/**
 * Builds a graph on `n` vertices from `C(n,2)` weights `nums[s] / dens[s]` in
 * lexicographic pair order. `dens` may be null, meaning all denominators are 1.
 *
 * # Safety
 * `nums` (and `dens` if non-null) must point to `len` readable values.
 */
enum PfStatus pf_edge_vector_from_i64(size_t n,
                                      const int64_t *nums,
                                      const int64_t *dens,
                                      size_t len,
                                      struct PfEdgeVector **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
size_t pf_edge_vector_n(const struct PfEdgeVector *v);

/**
 * Number of edge slots `C(n,2)`, or 0 for a null handle.
 *
 * # Safety
 * `v` must be null or a live handle.
 */
size_t pf_edge_vector_len(const struct PfEdgeVector *v);

/**
 * # Safety
 * `v` must be null or a handle not yet freed.
 */
void pf_edge_vector_free(struct PfEdgeVector *v);

/**
 * Writes the graph in the weighted edge-list format; free with `pf_string_free`.
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
enum PfStatus pf_edge_vector_emit_weighted(const struct PfEdgeVector *v, char **out);

/**
 * Writes a simple graph as graph6; free with `pf_string_free`.
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
enum PfStatus pf_edge_vector_emit_graph6(const struct PfEdgeVector *v, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void pf_string_free(char *s);

/**
 * Canonizes `v`. `max_n` bounds the brute-force engine; 0 selects the default.
 *
 * # Safety
 * `v` must be a live handle and `out` a valid pointer.
 */
enum PfStatus pf_canonize(const struct PfEdgeVector *v,
                          enum PfEngine engine,
                          size_t max_n,
                          struct PfCanonResult **out);

/**
 * Returns the canonical vector as a new graph handle.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum PfStatus pf_canon_result_canonical(const struct PfCanonResult *r, struct PfEdgeVector **out);

/**
 * Reads weight `slot` (1-based, lexicographic pair order) as `num / den`.
 *
 * # Safety
 * `v` must be a live handle; `num` and `den` valid pointers.
 */
enum PfStatus pf_edge_vector_weight(const struct PfEdgeVector *v,
                                    size_t slot,
                                    int64_t *num,
                                    int64_t *den);

/**
 * Copies the frame into `out` (1-based one-line notation, `n` entries).
 *
 * # Safety
 * `r` must be a live handle and `out` must have room for `cap` values.
 */
enum PfStatus pf_canon_result_frame(const struct PfCanonResult *r, size_t *out, size_t cap);

/**
 * Order of the automorphism group, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t pf_canon_result_aut_order(const struct PfCanonResult *r);

/**
 * Copies automorphism `index` (0-based, lexicographic order) into `out`.
 *
 * # Safety
 * `r` must be a live handle and `out` must have room for `cap` values.
 */
enum PfStatus pf_canon_result_automorphism(const struct PfCanonResult *r,
                                           size_t index,
                                           size_t *out,
                                           size_t cap);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void pf_canon_result_free(struct PfCanonResult *r);

/**
 * Returns `Ok` and writes a witness `sigma` with `relabel(sigma, a) = b` into
 * `witness` (which may be null), or `NotIsomorphic`.
 *
 * # Safety
 * `a` and `b` must be live handles; `witness`, if non-null, must have room
 * for `cap` values.
 */
enum PfStatus pf_is_isomorphic(const struct PfEdgeVector *a,
                               const struct PfEdgeVector *b,
                               size_t *witness,
                               size_t cap);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *pf_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAIRFRAME_H */

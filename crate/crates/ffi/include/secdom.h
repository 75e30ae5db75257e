#ifndef SECDOM_H
#define SECDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_ARGUMENT = 2,
  SD_STATUS_PARSE_ERROR = 3,
  SD_STATUS_TOO_LARGE = 4,
  SD_STATUS_VERTEX_OUT_OF_RANGE = 5,
  SD_STATUS_NOT_SECURE = 6,
  SD_STATUS_NOT_OUTERPLANAR_INPUT = 7,
  SD_STATUS_UTF8 = 8,
  SD_STATUS_PANIC = 99,
} SdStatus;

/**
 * Opaque graph handle.
 */
typedef struct SdGraph SdGraph;

/**
 * Counts describing a secure dominating set; see `partition_profile`.
 */
typedef struct {
  uint64_t s2;
  uint64_t s1;
  uint64_t s0;
  uint64_t c_set;
  size_t x2;
  size_t x1;
  size_t x0;
  size_t c;
  size_t x;
  size_t y;
  bool extremal_count_holds;
} SdPartitionProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *sd_last_error(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`edges[2i]`, `edges[2i+1]`). `edges` may be null when
 * `edge_count` is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values and `out` must be
 * writable.
 */
SdStatus sd_graph_new(size_t n, const uint32_t *edges, size_t edge_count, SdGraph **out);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
SdStatus sd_graph_from_graph6(const char *text, SdGraph **out);

/**
 * Parses the `n m` header plus `m` edge lines format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
SdStatus sd_graph_from_edge_list(const char *text, SdGraph **out);

/**
 * Releases a graph; null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void sd_graph_free(SdGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sd_graph_vertex_count(const SdGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sd_graph_edge_count(const SdGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_graph_to_graph6(const SdGraph *g, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sd_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_is_dominating(const SdGraph *g, uint64_t set, bool *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_is_secure_dominating(const SdGraph *g, uint64_t set, bool *out);

/**
 * Domination number; `set` (may be null) receives the lexicographically
 * smallest minimum dominating set.
 *
 * # Safety
 * `g` must be a live handle, `value` writable, `set` null or writable.
 */
SdStatus sd_gamma(const SdGraph *g, size_t *value, uint64_t *set);

/**
 * Secure domination number; `set` (may be null) receives the
 * lexicographically smallest minimum secure dominating set.
 *
 * # Safety
 * `g` must be a live handle, `value` writable, `set` null or writable.
 */
SdStatus sd_gamma_s(const SdGraph *g, size_t *value, uint64_t *set);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_is_outerplanar(const SdGraph *g, bool *out);

/**
 * The extremal graph `G_k` (`k >= 2`) with hub 0 and spokes `1..=k`.
 *
 * # Safety
 * `out` must be writable.
 */
SdStatus sd_build_extremal(size_t k, SdGraph **out);

/**
 * JSON object describing a spanning `G_k` labeling, or `null` if none
 * exists. Fails with `InvalidArgument` unless `n = 5k + 1`, `k >= 2`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_detect_extremal(const SdGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
SdStatus sd_partition_profile(const SdGraph *g, uint64_t set, SdPartitionProfile *out);

/**
 * Library version as a static string.
 */
const char *sd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SECDOM_H */

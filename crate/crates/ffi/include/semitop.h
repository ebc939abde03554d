#ifndef SEMITOP_H
#define SEMITOP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SEMITOP_REGULAR (1 << 0)

#define SEMITOP_WEAKLY_REGULAR (1 << 1)

#define SEMITOP_QUASIREGULAR (1 << 2)

#define SEMITOP_INDIRECTLY_REGULAR (1 << 3)

#define SEMITOP_UNCONFLICTED (1 << 4)

#define SEMITOP_CONFLICTED (1 << 5)

#define SEMITOP_HYPERTRANSITIVE (1 << 6)

#define SEMITOP_HYPERDEFINITE (1 << 7)

#define SEMITOP_MCN (1 << 8)

typedef enum SemitopStatus {
  SEMITOP_STATUS_OK = 0,
  SEMITOP_STATUS_NULL_ARGUMENT = 1,
  SEMITOP_STATUS_INVALID_UTF8 = 2,
  SEMITOP_STATUS_PARSE = 3,
  SEMITOP_STATUS_INVALID_INPUT = 4,
  SEMITOP_STATUS_UNKNOWN_POINT = 5,
  SEMITOP_STATUS_UNKNOWN_CATALOG = 6,
  SEMITOP_STATUS_OUT_OF_RANGE = 7,
  SEMITOP_STATUS_PRECONDITION = 8,
  SEMITOP_STATUS_PANIC = 9,
} SemitopStatus;

/**
 * Opaque handle to a finite semitopology.
 */
typedef struct SemitopSpace SemitopSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *semitop_version(void);

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. The pointer stays valid until the next call on this
 * thread.
 */
const char *semitop_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that has not
 * been freed.
 */
void semitop_string_free(char *s);

/**
 * Load a space, a witness function or a semiframe from JSON. Witness
 * functions and semiframes are converted to their semitopology.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SemitopStatus semitop_space_from_json(const char *json, struct SemitopSpace **out);

/**
 * A catalogued space. `n` is ignored by fixed figures.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SemitopStatus semitop_space_from_catalog(const char *name,
                                              size_t n,
                                              struct SemitopSpace **out);

/**
 * # Safety
 * `space` must be NULL or a handle from this library that has not been
 * freed.
 */
void semitop_space_free(struct SemitopSpace *space);

/**
 * Number of points, or 0 for NULL.
 *
 * # Safety
 * `space` must be NULL or a live handle.
 */
size_t semitop_space_len(const struct SemitopSpace *space);

/**
 * # Safety
 * `space` must be a live handle, `label` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum SemitopStatus semitop_space_index_of(const struct SemitopSpace *space,
                                          const char *label,
                                          size_t *out);

/**
 * Canonical JSON for the space.
 *
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_space_to_json(const struct SemitopSpace *space, char **out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_is_open(const struct SemitopSpace *space, uint64_t set, bool *out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_interior(const struct SemitopSpace *space, uint64_t set, uint64_t *out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_closure(const struct SemitopSpace *space, uint64_t set, uint64_t *out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_intertwined(const struct SemitopSpace *space,
                                       size_t p,
                                       size_t q,
                                       bool *out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_community(const struct SemitopSpace *space, size_t p, uint64_t *out);

/**
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_kernel(const struct SemitopSpace *space, size_t p, uint64_t *out);

/**
 * Classification flags of a point as an OR of the `SEMITOP_*` bits.
 *
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum SemitopStatus semitop_classify(const struct SemitopSpace *space, size_t p, uint32_t *out);

/**
 * Soberification of the space as a new handle. `nbhd_out`, when not
 * NULL, receives the abstract point of each original point and must have
 * room for `semitop_space_len(space)` entries.
 *
 * # Safety
 * `space` must be a live handle, `out` a valid pointer, and `nbhd_out`
 * NULL or a buffer of the stated length.
 */
enum SemitopStatus semitop_soberify(const struct SemitopSpace *space,
                                    struct SemitopSpace **out,
                                    size_t *nbhd_out);

/**
 * Evaluate a predicate under a valuation, written either as a string of
 * `T`, `B`, `F` in point order or as a JSON object from labels. The
 * result is the character `'T'`, `'B'` or `'F'`.
 *
 * # Safety
 * `space` must be a live handle, `pred` and `valuation` NUL-terminated
 * strings and `out` a valid pointer.
 */
enum SemitopStatus semitop_eval(const struct SemitopSpace *space,
                                const char *pred,
                                const char *valuation,
                                char *out);

/**
 * Whether a predicate is valid, i.e. designated under every continuous
 * valuation.
 *
 * # Safety
 * `space` must be a live handle, `pred` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum SemitopStatus semitop_valid(const struct SemitopSpace *space, const char *pred, bool *out);

/**
 * Satisfiability of a DIMACS CNF.
 *
 * # Safety
 * `dimacs_text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SemitopStatus semitop_sat(const char *dimacs_text, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEMITOP_H */

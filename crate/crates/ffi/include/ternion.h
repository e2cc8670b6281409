/* C interface to the ternion finite-ring library. Generated by cbindgen; do not edit. */

#ifndef TERNION_H
#define TERNION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum TnStatus {
  TN_STATUS_OK = 0,
  TN_STATUS_NULL_ARGUMENT,
  TN_STATUS_INVALID_ARGUMENT,
  TN_STATUS_RING_AXIOM,
  TN_STATUS_FIELD,
  TN_STATUS_PARSE,
  TN_STATUS_BUDGET_EXCEEDED,
  TN_STATUS_INCONSISTENT,
  TN_STATUS_CORE_UNAVAILABLE,
  TN_STATUS_BUFFER_TOO_SMALL,
  TN_STATUS_UTF8,
} TnStatus;

/**
 * Report kinds understood by [`tn_report_json`].
 */
typedef enum TnReportKind {
  TN_REPORT_KIND_IDEALS = 0,
  TN_REPORT_KIND_ENUMERATE,
  TN_REPORT_KIND_CLASSIFY,
  TN_REPORT_KIND_FACTORIZE,
} TnReportKind;

/**
 * Opaque enumeration handle: the submodules plus each one's radical
 * signature when it is well defined.
 */
typedef struct TnEnumeration TnEnumeration;

/**
 * Opaque ring handle.
 */
typedef struct TnRing TnRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tn_last_error_message(void);

/**
 * Crate version as a static string.
 */
const char *tn_version(void);

/**
 * Builds the ternion ring T(q) for a prime power q.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle that must
 * be released with [`tn_ring_free`].
 */
enum TnStatus tn_ring_new_ternion(uint32_t q, struct TnRing **out);

/**
 * Builds the Galois field GF(p^k).
 *
 * # Safety
 * `out` must be a valid pointer; release the handle with [`tn_ring_free`].
 */
enum TnStatus tn_ring_new_field(uint32_t p, uint32_t k, struct TnRing **out);

/**
 * Loads a ring from Cayley-table text (the same format the CLI emits).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TnStatus tn_ring_from_table_text(const char *text, struct TnRing **out);

/**
 * Releases a ring handle. Accepts null.
 *
 * # Safety
 * `ring` must be null or a pointer previously returned by a constructor,
 * not yet freed.
 */
void tn_ring_free(struct TnRing *ring);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t tn_ring_order(const struct TnRing *ring);

/**
 * a + b.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_ring_add(const struct TnRing *ring, uint16_t a, uint16_t b, uint16_t *out);

/**
 * a * b.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_ring_mul(const struct TnRing *ring, uint16_t a, uint16_t b, uint16_t *out);

/**
 * Number of units.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_ring_unit_count(const struct TnRing *ring, size_t *out);

/**
 * Number of zero divisors, with or without zero itself.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_ring_zero_divisor_count(const struct TnRing *ring, bool include_zero, size_t *out);

/**
 * Writes the sorted Jacobson radical into `buf` and its length into `len`.
 * Call with `cap = 0` to query the length alone.
 *
 * # Safety
 * `ring` and `len` must be valid; `buf` must point to at least `cap`
 * writable entries unless `cap` is 0.
 */
enum TnStatus tn_ring_radical(const struct TnRing *ring, uint16_t *buf, size_t cap, size_t *len);

/**
 * Emits the Cayley tables in the plain-text file format; free the string
 * with [`tn_string_free`].
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_ring_table_text(const struct TnRing *ring, char **out);

/**
 * Releases a string returned by this library. Accepts null.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library, not
 * yet freed.
 */
void tn_string_free(char *s);

/**
 * Enumerates the free cyclic submodules of R^rank with only non-unimodular
 * generators.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer; release the
 * result with [`tn_enumeration_free`].
 */
enum TnStatus tn_enumerate(const struct TnRing *ring,
                           size_t rank,
                           uint64_t budget,
                           struct TnEnumeration **out);

/**
 * Releases an enumeration handle. Accepts null.
 *
 * # Safety
 * `e` must be null or a pointer returned by [`tn_enumerate`], not yet freed.
 */
void tn_enumeration_free(struct TnEnumeration *e);

/**
 * Number of submodules, or 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t tn_enumeration_count(const struct TnEnumeration *e);

/**
 * Orbit size of one submodule.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_enumeration_orbit_size(const struct TnEnumeration *e, size_t index, size_t *out);

/**
 * Generator count of one submodule.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_enumeration_generator_count(const struct TnEnumeration *e,
                                             size_t index,
                                             size_t *out);

/**
 * Writes the canonical generator's coordinates into `buf` and the rank into
 * `len`. Call with `cap = 0` to query the rank alone.
 *
 * # Safety
 * `e` and `len` must be valid; `buf` must point to at least `cap` writable
 * entries unless `cap` is 0.
 */
enum TnStatus tn_enumeration_canonical_generator(const struct TnEnumeration *e,
                                                 size_t index,
                                                 uint16_t *buf,
                                                 size_t cap,
                                                 size_t *len);

/**
 * Radical signature of one submodule's generators. Fails with
 * `Inconsistent` when the generators disagree or no radical is available.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_enumeration_signature(const struct TnEnumeration *e, size_t index, size_t *out);

/**
 * Number of submodules with the given radical signature.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_enumeration_class_size(const struct TnEnumeration *e,
                                        size_t signature,
                                        size_t *out);

/**
 * Runs the pipeline for the requested report and returns its canonical JSON;
 * free the string with [`tn_string_free`].
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum TnStatus tn_report_json(const struct TnRing *ring,
                             enum TnReportKind kind,
                             size_t rank,
                             uint64_t budget,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TERNION_H */

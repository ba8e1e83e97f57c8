#ifndef SPIN_CHAINS_H
#define SPIN_CHAINS_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 0 to 4 match the `spin-chains` exit codes.
 */
typedef enum SpinStatus {
  SPIN_STATUS_OK = 0,
  SPIN_STATUS_VERIFICATION_FAILED = 1,
  SPIN_STATUS_PARSE_ERROR = 2,
  SPIN_STATUS_INVALID_CHAIN_SET = 3,
  SPIN_STATUS_BOUND_EXCEEDED = 4,
  SPIN_STATUS_NULL_POINTER = 10,
  SPIN_STATUS_BUFFER_TOO_SMALL = 11,
  SPIN_STATUS_INVALID_ARGUMENT = 12,
  SPIN_STATUS_PANIC = 13,
} SpinStatus;

/**
 * Opaque chain set handle.
 */
typedef struct SpinChainSet SpinChainSet;

/**
 * Opaque result of the spin-lowest K-type computation.
 */
typedef struct SpinComputation SpinComputation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *spin_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void spin_string_free(char *s);

/**
 * Parses `{"chains": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SpinStatus spin_chain_set_from_json(const char *json, struct SpinChainSet **out);

/**
 * # Safety
 * `cs` must come from [`spin_chain_set_from_json`] and not be freed twice.
 */
void spin_chain_set_free(struct SpinChainSet *cs);

/**
 * Serializes the chain set; free the result with [`spin_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum SpinStatus spin_chain_set_to_json(const struct SpinChainSet *cs, char **out);

/**
 * Rank n of the ambient SL(n), i.e. the number of entries.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SpinStatus spin_chain_set_rank(const struct SpinChainSet *cs, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SpinStatus spin_chain_set_is_interlaced(const struct SpinChainSet *cs, bool *out);

/**
 * One-line notation of s, 1-based. `*len` receives n even when `cap` is too small.
 *
 * # Safety
 * `buf` must hold `cap` elements.
 */
enum SpinStatus spin_chain_set_involution(const struct SpinChainSet *cs,
                                          size_t *buf,
                                          size_t cap,
                                          size_t *len);

/**
 * Runs the spin-lowest K-type algorithm.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SpinStatus spin_compute(const struct SpinChainSet *cs, struct SpinComputation **out);

/**
 * # Safety
 * `r` must come from [`spin_compute`] and not be freed twice.
 */
void spin_computation_free(struct SpinComputation *r);

/**
 * τ, doubled.
 *
 * # Safety
 * `buf` must hold `cap` elements.
 */
enum SpinStatus spin_computation_tau(const struct SpinComputation *r,
                                     int64_t *buf,
                                     size_t cap,
                                     size_t *len);

/**
 * {τ−ρ}, doubled.
 *
 * # Safety
 * `buf` must hold `cap` elements.
 */
enum SpinStatus spin_computation_gamma(const struct SpinComputation *r,
                                       int64_t *buf,
                                       size_t cap,
                                       size_t *len);

/**
 * Whether {τ−ρ} = 2λ−ρ.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SpinStatus spin_computation_identity_holds(const struct SpinComputation *r, bool *out);

/**
 * Number of scattered representations of SL(n).
 *
 * # Safety
 * `out` must be writable.
 */
enum SpinStatus spin_scattered_count(size_t n, size_t *out);

/**
 * Newline-separated JSON records for SL(n); free with [`spin_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum SpinStatus spin_scattered_enumerate_json(size_t n, bool with_multiplicity, char **out);

/**
 * c^{outer}_{inner, weight}. Partitions are weakly decreasing part arrays.
 *
 * # Safety
 * Each array must hold its stated length.
 */
enum SpinStatus spin_lr_coefficient(const size_t *outer,
                                    size_t outer_len,
                                    const size_t *inner,
                                    size_t inner_len,
                                    const size_t *weight,
                                    size_t weight_len,
                                    uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPIN_CHAINS_H */

#ifndef METAPLECTIC_GG_H
#define METAPLECTIC_GG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MggKind {
  MGG_KIND_KP = 0,
  MGG_KIND_SAVIN = 1,
  MGG_KIND_GENERIC = 2,
} MggKind;

typedef enum MggStatus {
  MGG_STATUS_OK = 0,
  MGG_STATUS_INVALID_ARGUMENT = 1,
  MGG_STATUS_NULL_POINTER = 2,
  MGG_STATUS_BOUND_EXCEEDED = 3,
  MGG_STATUS_UNSUPPORTED = 4,
  MGG_STATUS_INTERNAL = 5,
} MggStatus;

/**
 * A validated cover and type with an enumeration bound.
 */
typedef struct MggInstance MggInstance;

/**
 * `r0 = r/k`, `n0` and `d0`.
 */
typedef struct MggDerived {
  int64_t r0;
  int64_t n0;
  int64_t d0;
} MggDerived;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an instance; `f` is the exponent in `q0 = q^f`.
 *
 * # Safety
 * `out` must be null or valid for writing one pointer.
 */
enum MggStatus mgg_instance_new(enum MggKind kind,
                                int64_t n,
                                int64_t c,
                                int64_t d,
                                int64_t r,
                                int64_t k,
                                int64_t l0,
                                uint32_t f,
                                struct MggInstance **out);

/**
 * Releases an instance; null is ignored.
 *
 * # Safety
 * `inst` must be null or a pointer from [`mgg_instance_new`] not yet freed.
 */
void mgg_instance_free(struct MggInstance *inst);

/**
 * Sets the ceiling on `|X(lambda)|` for enumeration (default 1000000).
 *
 * # Safety
 * `inst` must be null or a live instance.
 */
enum MggStatus mgg_instance_set_bound(struct MggInstance *inst, uint64_t bound);

/**
 * # Safety
 * `inst` must be null or a live instance; `out` null or writable.
 */
enum MggStatus mgg_derive(const struct MggInstance *inst, struct MggDerived *out);

/**
 * `|X(lambda)|` from the Smith normal form.
 *
 * # Safety
 * `inst` must be null or a live instance; `out` null or writable.
 */
enum MggStatus mgg_x_order(const struct MggInstance *inst, uint64_t *out);

/**
 * Number of `S_k`-orbits on `X(lambda)` by exhaustive enumeration.
 *
 * # Safety
 * `inst` must be null or a live instance; `out` null or writable.
 */
enum MggStatus mgg_orbit_count(const struct MggInstance *inst, uint64_t *out);

/**
 * Closed-form Whittaker dimension; `Unsupported` for generic covers.
 *
 * # Safety
 * `inst` must be null or a live instance; `out` null or writable.
 */
enum MggStatus mgg_dim_closed(const struct MggInstance *inst, uint64_t *out);

/**
 * Whittaker dimension from the Hecke-module computation over Q(q).
 *
 * # Safety
 * `inst` must be null or a live instance; `out` null or writable.
 */
enum MggStatus mgg_dim_hecke(const struct MggInstance *inst, uint64_t *out);

/**
 * Tame `n`-th Hilbert symbol of `u = (u_val, u_unit)` and `v = (v_val, v_unit)` over a
 * residue field of size `q`. Writes the exponent of the fixed generator of `mu_n` and
 * the order of the result.
 *
 * # Safety
 * `exp` and `order` must be null or writable.
 */
enum MggStatus mgg_hilbert(uint64_t q,
                           uint64_t n,
                           int64_t u_val,
                           int64_t u_unit,
                           int64_t v_val,
                           int64_t v_unit,
                           uint64_t *exp,
                           uint64_t *order);

/**
 * Copies the calling thread's last error message, NUL-terminated and truncated to
 * `len` bytes, into `buf`. Returns the full message length without the terminator,
 * so a caller can size a buffer with a first call passing `len = 0`.
 *
 * # Safety
 * `buf` must be null or valid for writing `len` bytes.
 */
size_t mgg_last_error_message(char *buf, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* METAPLECTIC_GG_H */

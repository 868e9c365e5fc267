#ifndef ZKRANGE_H
#define ZKRANGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZkrStatus {
  ZKR_STATUS_OK = 0,
  ZKR_STATUS_REJECT = 1,
  ZKR_STATUS_WITNESS_OUT_OF_RANGE = 2,
  ZKR_STATUS_MALFORMED = 3,
  ZKR_STATUS_NULL_POINTER = 4,
  ZKR_STATUS_INVALID_PARAM = 5,
  ZKR_STATUS_INTERNAL = 6,
} ZkrStatus;

/**
 * Opaque parameter handle.
 */
typedef struct ZkrSystem ZkrSystem;

/**
 * Octets owned by the library.
 */
typedef struct ZkrBuffer {
  uint8_t *data;
  uintptr_t len;
} ZkrBuffer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds parameters for `scheme` ("boudot", "sigrange", "bulletproofs" or
 * "bulletproofs-opt") over the half-open `range` "a:b". The same seed gives
 * the same parameters. `modulus_bits` only affects boudot; pass 0 for the
 * default.
 *
 * # Safety
 * `scheme` and `range` must be valid NUL-terminated strings and `out` a
 * valid pointer. On success `*out` must later be passed to
 * `zkr_system_free`.
 */
enum ZkrStatus zkr_system_new(const char *scheme,
                              const char *range,
                              uint64_t seed,
                              uint64_t modulus_bits,
                              struct ZkrSystem **out);

/**
 * # Safety
 * `system` must be null or a handle from `zkr_system_new` not yet freed.
 */
void zkr_system_free(struct ZkrSystem *system);

/**
 * Commits to the decimal `witness` and writes the proof file into `*out`.
 *
 * # Safety
 * `system` must be a live handle, `witness` a NUL-terminated string and
 * `out` a valid pointer. On success `*out` must be released with
 * `zkr_buffer_free`.
 */
enum ZkrStatus zkr_prove(const struct ZkrSystem *system,
                         const char *witness,
                         struct ZkrBuffer *out);

/**
 * Returns `ZKR_STATUS_OK` when the proof verifies, `ZKR_STATUS_REJECT` when
 * it parses but fails, and `ZKR_STATUS_MALFORMED` when it does not parse.
 *
 * # Safety
 * `system` must be a live handle and `data` must point to `len` readable
 * octets.
 */
enum ZkrStatus zkr_verify(const struct ZkrSystem *system, const uint8_t *data, uintptr_t len);

/**
 * Releases a buffer filled by `zkr_prove` and resets it to empty.
 *
 * # Safety
 * `buf` must be null or point to a buffer filled by this library.
 */
void zkr_buffer_free(struct ZkrBuffer *buf);

/**
 * Static description of a status code.
 */
const char *zkr_status_message(enum ZkrStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZKRANGE_H */

#ifndef AKCORES_H
#define AKCORES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AkStatus {
  AK_STATUS_OK = 0,
  AK_STATUS_NULL_POINTER = 1,
  AK_STATUS_INVALID_UTF8 = 2,
  AK_STATUS_PARSE = 3,
  AK_STATUS_INVALID_MODULUS = 4,
  AK_STATUS_LEVEL_MISMATCH = 5,
  AK_STATUS_DOMAIN = 6,
  AK_STATUS_BUFFER_TOO_SMALL = 7,
  AK_STATUS_PANIC = 8,
} AkStatus;

typedef enum AkFormat {
  AK_FORMAT_JSON = 0,
  AK_FORMAT_CSV = 1,
  AK_FORMAT_MARKDOWN = 2,
} AkFormat;

/**
 * Opaque core descriptor.
 */
typedef struct AkCore AkCore;

/**
 * Opaque multipartition.
 */
typedef struct AkMultipartition AkMultipartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ak_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void ak_string_free(char *s);

/**
 * Parses a multipartition written as JSON nested arrays, e.g. `[[3,1],[]]`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum AkStatus ak_multipartition_from_json(const char *json, struct AkMultipartition **out);

/**
 * # Safety
 * `mp` must come from this library and not have been freed already.
 */
void ak_multipartition_free(struct AkMultipartition *mp);

/**
 * JSON form of a multipartition, or null if `mp` is null.
 *
 * # Safety
 * `mp` must be null or a live handle.
 */
char *ak_multipartition_to_json(const struct AkMultipartition *mp);

/**
 * Number of components, or 0 if `mp` is null.
 *
 * # Safety
 * `mp` must be null or a live handle.
 */
size_t ak_multipartition_level(const struct AkMultipartition *mp);

/**
 * Total number of nodes, or 0 if `mp` is null.
 *
 * # Safety
 * `mp` must be null or a live handle.
 */
uint64_t ak_multipartition_rank(const struct AkMultipartition *mp);

/**
 * Block weight of `mp` for the multicharge `charge[0..len]`.
 *
 * # Safety
 * `mp` must be a live handle, `charge` must point to `len` integers and
 * `out` must be valid.
 */
enum AkStatus ak_block_weight(const struct AkMultipartition *mp,
                              const int64_t *charge,
                              size_t len,
                              int64_t e,
                              uint64_t *out);

/**
 * Whether `mp` is a core for the given multicharge.
 *
 * # Safety
 * As for [`ak_block_weight`].
 */
enum AkStatus ak_is_core(const struct AkMultipartition *mp,
                         const int64_t *charge,
                         size_t len,
                         int64_t e,
                         bool *out);

/**
 * Computes the core of `mp`. Free the result with [`ak_core_free`].
 *
 * # Safety
 * As for [`ak_block_weight`].
 */
enum AkStatus ak_core(const struct AkMultipartition *mp,
                      const int64_t *charge,
                      size_t len,
                      int64_t e,
                      struct AkCore **out);

/**
 * # Safety
 * `core` must come from this library and not have been freed already.
 */
void ak_core_free(struct AkCore *core);

/**
 * Number of moves from the input to its core, or 0 if `core` is null.
 *
 * # Safety
 * `core` must be null or a live handle.
 */
uint64_t ak_core_weight(const struct AkCore *core);

/**
 * A new handle holding the core multipartition, or null if `core` is null.
 *
 * # Safety
 * `core` must be null or a live handle.
 */
struct AkMultipartition *ak_core_multipartition(const struct AkCore *core);

/**
 * Copies the core charge into `buf`, which must hold `level` entries.
 *
 * # Safety
 * `core` must be a live handle and `buf` must point to `cap` writable
 * integers.
 */
enum AkStatus ak_core_charge(const struct AkCore *core, int64_t *buf, size_t cap);

/**
 * Copies the 1-based normalizing permutation into `buf`.
 *
 * # Safety
 * As for [`ak_core_charge`].
 */
enum AkStatus ak_core_sigma(const struct AkCore *core, size_t *buf, size_t cap);

/**
 * Uglov image of `mp`: its partition as a JSON string (free with
 * [`ak_string_free`]) and its charge.
 *
 * # Safety
 * As for [`ak_block_weight`]; `partition_json` and `charge_out` must be
 * valid.
 */
enum AkStatus ak_tau(const struct AkMultipartition *mp,
                     const int64_t *charge,
                     size_t len,
                     int64_t e,
                     char **partition_json,
                     int64_t *charge_out);

/**
 * Preimage of a charged partition under the Uglov map. Writes a new
 * multipartition handle to `out` and the `l` charges to `charge_buf`.
 *
 * # Safety
 * `partition_json` must be a nul-terminated string, `out` valid and
 * `charge_buf` must point to `l` writable integers.
 */
enum AkStatus ak_tau_inverse(const char *partition_json,
                             int64_t charge_total,
                             size_t l,
                             int64_t e,
                             struct AkMultipartition **out,
                             int64_t *charge_buf);

/**
 * Block table of all `l`-multipartitions of `n`, rendered in `format`.
 *
 * # Safety
 * `charge` must point to `len` integers and `out` must be valid. The string
 * written to `out` must be released with [`ak_string_free`].
 */
enum AkStatus ak_blocks_table(uint32_t n,
                              size_t l,
                              int64_t e,
                              const int64_t *charge,
                              size_t len,
                              enum AkFormat format,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AKCORES_H */

#ifndef HYPERFIELD_H
#define HYPERFIELD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The nonzero codes from 2 to 5 match the CLI exit codes.
 */
typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_ARGUMENT = 1,
  HF_STATUS_PARSE = 2,
  HF_STATUS_INADMISSIBLE = 3,
  HF_STATUS_HYPOTHESIS = 4,
  HF_STATUS_RESOURCE_CAP = 5,
  HF_STATUS_OTHER = 6,
  HF_STATUS_PANIC = 7,
} HfStatus;

/**
 * Hyperelliptic curve handle.
 */
typedef struct HfCurve HfCurve;

/**
 * Integer polynomial handle.
 */
typedef struct HfPoly HfPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *hf_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void hf_string_free(char *s);

/**
 * Parses the comma-separated ascending coefficient format, e.g. `"1,1,0,1"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum HfStatus hf_poly_parse(const char *text, struct HfPoly **out);

/**
 * # Safety
 * `p` must come from `hf_poly_parse` or be null.
 */
void hf_poly_free(struct HfPoly *p);

/**
 * Degree, or -1 for the zero polynomial or a null handle.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
int64_t hf_poly_degree(const struct HfPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HfStatus hf_poly_to_string(const struct HfPoly *p, char **out);

/**
 * Discriminant as a decimal string.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HfStatus hf_discriminant(const struct HfPoly *p, char **out);

/**
 * Factorization over Q as JSON `{"content": ..., "factors": [...]}`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HfStatus hf_factor_json(const struct HfPoly *p, char **out);

/**
 * Newton polygon certificate as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HfStatus hf_newton_polygon_json(const struct HfPoly *p, uint64_t prime, char **out);

/**
 * Galois certificate from the first `prime_count` good primes, as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HfStatus hf_certify_json(const struct HfPoly *p, size_t prime_count, char **out);

/**
 * # Safety
 * `f` must be a live handle and `out` writable. The curve copies `f`.
 */
enum HfStatus hf_curve_new(const struct HfPoly *f, struct HfCurve **out);

/**
 * # Safety
 * `c` must come from `hf_curve_new` or be null.
 */
void hf_curve_free(struct HfCurve *c);

/**
 * Genus, or -1 for a null handle.
 *
 * # Safety
 * `c` must be a live handle or null.
 */
int64_t hf_curve_genus(const struct HfCurve *c);

/**
 * Witness report for one recipe as JSON; `prime == 0` searches for one.
 *
 * # Safety
 * `c` must be a live handle, `recipe` a NUL-terminated string and `out`
 * writable.
 */
enum HfStatus hf_witness_json(const struct HfCurve *c,
                              size_t n,
                              const char *recipe,
                              uint64_t prime,
                              uint64_t seed,
                              char **out);

/**
 * Exponent report as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum HfStatus hf_exponents_json(uint64_t g, uint64_t d, uint64_t n, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum HfStatus hf_ev_threshold(uint64_t g, uint64_t *out);

/**
 * Census summary for height `y` (e.g. `"8"` or `"5/2"`) as JSON.
 *
 * # Safety
 * `c` must be a live handle, `y` a NUL-terminated string and `out`
 * writable.
 */
enum HfStatus hf_census_summary_json(const struct HfCurve *c, size_t n, const char *y, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERFIELD_H */

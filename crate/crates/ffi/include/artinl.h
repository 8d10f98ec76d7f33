/* C ABI for the artinl exact L-function engine. */

#ifndef ARTINL_H
#define ARTINL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum ArtinlStatus {
  // Success.
  ARTINL_STATUS_OK = 0,
  // A required pointer argument was null.
  ARTINL_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  ARTINL_STATUS_INVALID_UTF8 = 2,
  // The job was rejected: schema violation, invalid table, bad index.
  ARTINL_STATUS_INVALID_JOB = 3,
  // The computation itself reported an inconsistency.
  ARTINL_STATUS_FAILED = 4,
  // An internal invariant was violated (a bug, not a user error).
  ARTINL_STATUS_INTERNAL = 5,
} ArtinlStatus;

// Opaque report handle.
typedef struct ArtinlReport ArtinlReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Rank table of odd K-groups for the signature `(r1, r2)`.
enum ArtinlStatus artinl_ranks(uint64_t r1, uint64_t r2, uint32_t n_max, struct ArtinlReport **out);

// The characters mod `modulus` in their deterministic index order.
enum ArtinlStatus artinl_characters(uint64_t modulus, struct ArtinlReport **out);

// Both order-of-vanishing routes for one character, n = 1..n_max.
enum ArtinlStatus artinl_gross(uint64_t modulus,
                               uint64_t char_index,
                               uint32_t n_max,
                               struct ArtinlReport **out);

// Rank table of the cyclotomic field of the given modulus, cross-checked
// against the trivial-coefficient orders.
enum ArtinlStatus artinl_zeta(uint64_t modulus, uint32_t n_max, struct ArtinlReport **out);

// Run a JSON-described job (group table, embedding data, coefficient
// representation); `include_euler` also computes the Euler factors listed
// in the job.
//
// # Safety
// `job_json` must be a valid NUL-terminated string and `out` a writable
// pointer; both stay valid for the duration of the call.
enum ArtinlStatus artinl_artin_json(const char *job_json,
                                    bool include_euler,
                                    struct ArtinlReport **out);

// Full verification sweep over moduli up to `n_upto` and orders up to
// `degree_upto`. Returns `Failed` (with no report) only on malformed
// bounds; failed checks are reported in-band, see
// `artinl_report_success`.
enum ArtinlStatus artinl_verify(uint64_t n_upto, uint32_t degree_upto, struct ArtinlReport **out);

// Run any job described as JSON (the same shape the CLI consumes), e.g.
// `{"mode":"gross","modulus":4,"char_index":1,"n_max":6}`. Jobs of mode
// `artin` read their input file from the path in the job.
//
// # Safety
// `job_json` must be a valid NUL-terminated string; `cache_dir` may be
// null or a valid NUL-terminated string; `out` must be writable.
enum ArtinlStatus artinl_run_job_json(const char *job_json,
                                      const char *cache_dir,
                                      struct ArtinlReport **out);

// Order of vanishing at `s = 1 - n` along the representation-theoretic
// route, for the given character index mod `modulus`.
//
// # Safety
// `out` must be a writable pointer.
enum ArtinlStatus artinl_gross_order(uint64_t modulus,
                                     uint64_t char_index,
                                     uint32_t n,
                                     uint64_t *out);

// Order of vanishing at `s = 1 - n` along the analytic route (the
// primitive part of the given character).
//
// # Safety
// `out` must be a writable pointer.
enum ArtinlStatus artinl_analytic_order(uint64_t modulus,
                                        uint64_t char_index,
                                        uint32_t n,
                                        uint64_t *out);

// True when the report contains no mismatch and no failed check.
//
// # Safety
// `report` must be null or a live handle from this library.
bool artinl_report_success(const struct ArtinlReport *report);

// Serialize a report as pretty-printed JSON. The string must be released
// with `artinl_string_free`.
//
// # Safety
// `report` must be a live handle from this library; `out` must be
// writable.
enum ArtinlStatus artinl_report_json(const struct ArtinlReport *report, char **out);

// Render a report as an aligned text table. The string must be released
// with `artinl_string_free`.
//
// # Safety
// `report` must be a live handle from this library; `out` must be
// writable.
enum ArtinlStatus artinl_report_table(const struct ArtinlReport *report, char **out);

// Release a report handle. Null is accepted and ignored.
//
// # Safety
// The handle must have come from this library and not been freed yet.
void artinl_report_free(struct ArtinlReport *report);

// Release a string returned by this library. Null is accepted and ignored.
//
// # Safety
// The pointer must have been produced by this library and not freed yet.
void artinl_string_free(char *s);

// Version string of the underlying engine; static storage, do not free.
const char *artinl_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ARTINL_H */

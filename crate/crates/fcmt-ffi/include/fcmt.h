#ifndef FCMT_H
#define FCMT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  FCMT_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  FCMT_STATUS_NULL_OR_INVALID_ARGUMENT = 1,
  FCMT_STATUS_INPUT_ERROR = 2,
  FCMT_STATUS_PARSE_ERROR = 3,
  FCMT_STATUS_PRECONDITION_VIOLATED = 4,
  FCMT_STATUS_UNSUPPORTED = 5,
  FCMT_STATUS_LIMIT_EXCEEDED = 6,
  /**
   * The computation finished but one of its checks failed.
   */
  FCMT_STATUS_VERIFICATION_FAILED = 7,
  FCMT_STATUS_PANIC = 8,
} FcmtStatus;

/**
 * A monoid `ker(A) ∩ ℕᵗ ⊕ ℕᵘ`.
 */
typedef struct FcmtPresentation FcmtPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The pointer
 * stays valid until the next `fcmt_` call on the same thread.
 */
const char *fcmt_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *fcmt_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been
 * freed yet.
 */
void fcmt_string_free(char *s);

/**
 * Builds a presentation from the text format `1 -1 0; 0 1 -1` with
 * `free_rank` extra free coordinates. `constrained` gives the column count
 * when `equations` is empty and is ignored otherwise.
 *
 * # Safety
 * `equations` must be a NUL-terminated string and `out` a valid pointer.
 */
FcmtStatus fcmt_presentation_parse(const char *equations,
                                   size_t constrained,
                                   size_t free_rank,
                                   FcmtPresentation **out);

/**
 * Builds a presentation from `{"equations": [[...]], "free_rank": u}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
FcmtStatus fcmt_presentation_from_json(const char *json, FcmtPresentation **out);

/**
 * The monoid of MCM modules of a catalog ring such as `D6` with `m`
 * identified primes. `glue_case` is 1 or 2 when three primes carry one
 * identification and 0 otherwise.
 *
 * # Safety
 * `ring` must be a NUL-terminated string and `out` a valid pointer.
 */
FcmtStatus fcmt_presentation_from_ring(const char *ring,
                                       size_t m,
                                       uint8_t glue_case,
                                       FcmtPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void fcmt_presentation_free(FcmtPresentation *p);

/**
 * Ambient dimension `t + u`, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t fcmt_presentation_dim(const FcmtPresentation *p);

/**
 * The atoms as a JSON array of arrays, in canonical order.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
FcmtStatus fcmt_hilbert_basis_json(const FcmtPresentation *p, char **out);

/**
 * The class group with its justification flags as JSON. When the
 * hypotheses behind the computation fail the JSON is still written and the
 * status is `VerificationFailed`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
FcmtStatus fcmt_class_group_json(const FcmtPresentation *p, char **out);

/**
 * Elasticity as a string `p/q` (or an integer).
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
FcmtStatus fcmt_elasticity(const FcmtPresentation *p, char **out);

/**
 * Writes whether the monoid is factorial and half-factorial.
 *
 * # Safety
 * `p` must be a live handle; the out pointers must be valid.
 */
FcmtStatus fcmt_factoriality(const FcmtPresentation *p, bool *factorial, bool *half_factorial);

/**
 * The set of lengths of `element` (of length `len`, which must equal the
 * ambient dimension) as a sorted JSON array.
 *
 * # Safety
 * `p` must be a live handle, `element` must point to `len` readable values
 * and `out` must be valid.
 */
FcmtStatus fcmt_length_set_json(const FcmtPresentation *p,
                                const uint64_t *element,
                                size_t len,
                                char **out);

/**
 * Runs one command-line invocation, for example
 * `{"ring", "D6", "--m", "2"}`, and writes its JSON report. `exit_code`
 * receives the command's exit code. A report with a failed check returns
 * `VerificationFailed`; invalid arguments return `InputError` with the
 * usage text as the last error.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `out` and `exit_code`
 * must be valid.
 */
FcmtStatus fcmt_run(const char *const *argv, size_t argc, char **out, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FCMT_H */

#ifndef BFSP_H
#define BFSP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define BFSP_SOLVER_DP 0

#define BFSP_SOLVER_FES 1

#define BFSP_SOLVER_FVS 2

#define BFSP_SOLVER_ORACLE 3

#define BFSP_KERNEL_ND 0

#define BFSP_KERNEL_PH_FREE 1

typedef enum BfspAnswer {
  BFSP_ANSWER_YES = 0,
  BFSP_ANSWER_NO = 1,
  BFSP_ANSWER_TIMEOUT = 2,
  // The oracle hit its enumeration cap.
  BFSP_ANSWER_CAPPED = 3,
} BfspAnswer;

typedef enum BfspError {
  BFSP_ERROR_OK = 0,
  BFSP_ERROR_NULL_POINTER = 1,
  BFSP_ERROR_INVALID_UTF8 = 2,
  BFSP_ERROR_PARSE = 3,
  BFSP_ERROR_INVALID_ARGUMENT = 4,
  BFSP_ERROR_IO = 5,
  BFSP_ERROR_PANIC = 6,
} BfspError;

// A colored graph with terminals.
typedef struct BfspInstance BfspInstance;

// The outcome of one solver run.
typedef struct BfspResult BfspResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or null. Valid until
// the next call into this library on the same thread.
const char *bfsp_last_error_message(void);

// Library version as a static string.
const char *bfsp_version(void);

// Parses an instance in the text format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum BfspError bfsp_instance_parse(const char *text, struct BfspInstance **out);

// Reads and parses an instance file.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a writable pointer.
enum BfspError bfsp_instance_read_file(const char *path, struct BfspInstance **out);

// Builds an instance from arrays. `colors` holds `n` entries below
// `num_colors`; `edges` holds `2 * m` endpoints.
//
// # Safety
// `colors` must point to `n` values, `edges` to `2 * m` values (either may
// be null when its length is 0), and `out` must be writable.
enum BfspError bfsp_instance_new(size_t n,
                                 size_t num_colors,
                                 const size_t *colors,
                                 size_t m,
                                 const size_t *edges,
                                 size_t s,
                                 size_t t,
                                 struct BfspInstance **out);

// # Safety
// `inst` must be null or a handle from this library not yet freed.
void bfsp_instance_free(struct BfspInstance *inst);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `inst` must be null or a live handle.
size_t bfsp_instance_num_vertices(const struct BfspInstance *inst);

// # Safety
// `inst` must be null or a live handle.
size_t bfsp_instance_num_edges(const struct BfspInstance *inst);

// # Safety
// `inst` must be null or a live handle.
size_t bfsp_instance_num_colors(const struct BfspInstance *inst);

// Renders the instance in the text format. Free the string with
// [`bfsp_string_free`].
//
// # Safety
// `inst` must be a live handle and `out` writable.
enum BfspError bfsp_instance_serialize(const struct BfspInstance *inst, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void bfsp_string_free(char *s);

// Applies a kernel. `h` and `seed` are used by [`BFSP_KERNEL_PH_FREE`]
// only.
//
// # Safety
// `inst` must be a live handle and `out` writable.
enum BfspError bfsp_kernelize(const struct BfspInstance *inst,
                              uint32_t kernel,
                              size_t h,
                              uint64_t seed,
                              struct BfspInstance **out);

// Runs one solver. `timeout_ms == 0` means no limit.
//
// # Safety
// `inst` must be a live handle and `out` writable.
enum BfspError bfsp_solve(const struct BfspInstance *inst,
                          uint32_t solver,
                          uint64_t timeout_ms,
                          struct BfspResult **out);

// # Safety
// `res` must be null or a handle from [`bfsp_solve`] not yet freed.
void bfsp_result_free(struct BfspResult *res);

// # Safety
// `res` must be a live handle and `out` writable.
enum BfspError bfsp_result_answer(const struct BfspResult *res, enum BfspAnswer *out);

// Number of witness vertices; 0 unless the answer is yes.
//
// # Safety
// `res` must be null or a live handle.
size_t bfsp_result_witness_len(const struct BfspResult *res);

// Copies up to `cap` witness vertices, 0-based and in path order, into
// `buf` and returns how many were written.
//
// # Safety
// `res` must be null or a live handle; `buf` must have room for `cap`
// values.
size_t bfsp_result_witness(const struct BfspResult *res, size_t *buf, size_t cap);

// Number of colors in the witness histogram; 0 unless the answer is yes.
//
// # Safety
// `res` must be null or a live handle.
size_t bfsp_result_histogram_len(const struct BfspResult *res);

// Copies up to `cap` per-color witness counts into `buf`.
//
// # Safety
// `res` must be null or a live handle; `buf` must have room for `cap`
// values.
size_t bfsp_result_histogram(const struct BfspResult *res, size_t *buf, size_t cap);

// Wall time of the run in milliseconds.
//
// # Safety
// `res` must be null or a live handle.
double bfsp_result_elapsed_ms(const struct BfspResult *res);

// The run as one JSON line, as printed by the command-line tool. Free the
// string with [`bfsp_string_free`].
//
// # Safety
// `res` must be a live handle and `out` writable.
enum BfspError bfsp_result_to_json(const struct BfspResult *res, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BFSP_H */

#ifndef BLOCKGALOIS_H
#define BLOCKGALOIS_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum BgStatus {
  BG_STATUS_OK = 0,
  BG_STATUS_INVALID_ARGUMENT = 1,
  BG_STATUS_PARSE = 2,
  BG_STATUS_COMPUTATION = 3,
  BG_STATUS_RESOURCE_CAP = 4,
  BG_STATUS_PANIC = 5,
} BgStatus;

/**
 * A permutation group.
 */
typedef struct BgGroup BgGroup;

/**
 * A character table together with its group.
 */
typedef struct BgTable BgTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *bg_last_error(void);

/**
 * Parses a group file (`degree n` followed by generators in cycle notation).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BgStatus bg_group_from_text(const char *text, struct BgGroup **out);

/**
 * Builds a group from a short spec such as `sym:5`, `psl2:7` or
 * `transitive:6:3`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BgStatus bg_group_from_spec(const char *spec, struct BgGroup **out);

/**
 * Group order; fails with `ResourceCap` above 2^64.
 *
 * # Safety
 * `group` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_group_order(const struct BgGroup *group, uint64_t *out);

/**
 * # Safety
 * `group` must come from this library (or be NULL) and not be used again.
 */
void bg_group_free(struct BgGroup *group);

/**
 * Computes the character table.
 *
 * # Safety
 * `group` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_table_new(const struct BgGroup *group, struct BgTable **out);

/**
 * # Safety
 * `table` must come from this library (or be NULL) and not be used again.
 */
void bg_table_free(struct BgTable *table);

/**
 * Number of irreducible characters (equal to the number of classes).
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_table_size(const struct BgTable *table, size_t *out);

/**
 * Value of character `row` at class `class`, as text like `-1*E(5)^2 + 3`.
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_table_value(const struct BgTable *table, size_t row, size_t class_, char **out);

/**
 * The whole table as JSON.
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_table_json(const struct BgTable *table, char **out);

/**
 * The p-blocks as JSON.
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_blocks_json(const struct BgTable *table, uint64_t p, char **out);

/**
 * Number of p'-degree characters of the principal p-block fixed by `sigma_e`.
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_fixed_count(const struct BgTable *table, uint64_t p, uint32_t e, size_t *out);

/**
 * Checks that the principal-block fixed count equals `p` exactly when a
 * Sylow p-subgroup is cyclic. Writes 1 (pass), 0 (fail) or -1 (not
 * applicable: `p` is not 2 or 3, or does not divide the order).
 *
 * # Safety
 * `table` must come from this library and `out` be a valid pointer.
 */
enum BgStatus bg_verify_theorem_a(const struct BgTable *table, uint64_t p, int32_t *out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library (or be NULL) and not be used again.
 */
void bg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BLOCKGALOIS_H */

#ifndef SEMCENSUS_H
#define SEMCENSUS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every exported function.
 */
typedef enum SemStatus {
  SEM_STATUS_OK = 0,
  SEM_STATUS_NULL_POINTER = 1,
  SEM_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text could not be parsed.
   */
  SEM_STATUS_PARSE = 3,
  /**
   * Parsed, but not a valid polyhedral map of the declared type.
   */
  SEM_STATUS_INVALID_MAP = 4,
  SEM_STATUS_BUDGET_EXHAUSTED = 5,
  SEM_STATUS_OUT_OF_RANGE = 6,
  /**
   * An internal panic was caught at the boundary.
   */
  SEM_STATUS_INTERNAL = 7,
} SemStatus;

/**
 * The maps found by one enumeration, one per isomorphism class.
 */
typedef struct SemCensus SemCensus;

/**
 * A validated polyhedral map.
 */
typedef struct SemMap SemMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next call into this library.
 */
const char *semcensus_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void semcensus_string_free(char *s);

/**
 * Parses and validates a JSON map file (`faces`, `vertices`, optional
 * `name` and `type`).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SemStatus semcensus_map_from_json(const char *json, struct SemMap **out);

/**
 * # Safety
 * `map` must come from this library and not be freed twice. NULL is ignored.
 */
void semcensus_map_free(struct SemMap *map);

/**
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_map_vertex_count(const struct SemMap *map, size_t *out);

/**
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_map_euler_characteristic(const struct SemMap *map, int64_t *out);

/**
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_map_is_orientable(const struct SemMap *map, bool *out);

/**
 * Order of the automorphism group.
 *
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_map_aut_order(const struct SemMap *map, uint64_t *out);

/**
 * Name of the automorphism group, e.g. `"Z2xZ2"` or `"D6(order 12)"`.
 *
 * # Safety
 * `map` must be a live handle and `out` writable. Free the result with
 * `semcensus_string_free`.
 */
enum SemStatus semcensus_map_group_name(const struct SemMap *map, char **out);

/**
 * The map as JSON in the file format.
 *
 * # Safety
 * `map` must be a live handle and `out` writable. Free the result with
 * `semcensus_string_free`.
 */
enum SemStatus semcensus_map_to_json(const struct SemMap *map, char **out);

/**
 * Sets `*out` to whether the maps are isomorphic. If they are and
 * `witness` is not NULL, `*witness` receives the vertex bijection in cycle
 * notation (free with `semcensus_string_free`); otherwise it is set to
 * NULL.
 *
 * # Safety
 * Both handles must be live; `out` writable; `witness` NULL or writable.
 */
enum SemStatus semcensus_maps_isomorphic(const struct SemMap *a,
                                         const struct SemMap *b,
                                         bool *out,
                                         char **witness);

/**
 * Enumerates all maps of `face_type` (e.g. `"3,4,4,4,4"`) on `vertices`
 * vertices. `budget` caps search nodes; 0 means unlimited. `jobs` is the
 * worker count; 0 means all cores.
 *
 * # Safety
 * `face_type` must be a NUL-terminated string and `out` writable.
 */
enum SemStatus semcensus_enumerate(const char *face_type,
                                   size_t vertices,
                                   uint64_t budget,
                                   size_t jobs,
                                   struct SemCensus **out);

/**
 * # Safety
 * `census` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_census_len(const struct SemCensus *census, size_t *out);

/**
 * A new map handle for class `index`; free it with `semcensus_map_free`.
 *
 * # Safety
 * `census` must be a live handle and `out` writable.
 */
enum SemStatus semcensus_census_map(const struct SemCensus *census,
                                    size_t index,
                                    struct SemMap **out);

/**
 * # Safety
 * `census` must come from this library and not be freed twice. NULL is
 * ignored.
 */
void semcensus_census_free(struct SemCensus *census);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEMCENSUS_H */

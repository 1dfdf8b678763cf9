#ifndef MGCOUNT_H
#define MGCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum {
  MG_STATUS_OK = 0,
  // A required pointer argument was null.
  MG_STATUS_NULL_ARGUMENT = 1,
  // Arguments outside the supported domain, or beyond a handle's capacity.
  MG_STATUS_DOMAIN = 2,
  // Tables too large to allocate.
  MG_STATUS_RESOURCE = 3,
  // Broken invariant inside the library.
  MG_STATUS_INTERNAL = 4,
  // A panic was caught at the boundary.
  MG_STATUS_PANIC = 5,
} MgStatus;

// Which of the child-size, extra-edge and root-edge bounds are equalities
// (`E`) rather than upper bounds (`L`).
typedef enum {
  MG_BOUND_MODE_LLL = 0,
  MG_BOUND_MODE_ELL = 1,
  MG_BOUND_MODE_EEL = 2,
  MG_BOUND_MODE_EEE = 3,
} MgBoundMode;

// Filled rooted totals for all `(n, delta)` up to its capacity; answers
// free and rooted counts.
typedef struct MgCounter MgCounter;

// The full four-family tables, for bounded rooted counts. Memory grows
// as `n^2 delta^2`, so keep capacities small.
typedef struct MgDpTables MgDpTables;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *mg_last_error_message(void);

// Library version as a static string.
const char *mg_version(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer obtained from this library and not yet freed.
void mg_string_free(char *s);

// Free count for a single `(n, delta)`, filling temporary tables.
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
MgStatus mg_free_count(size_t n, size_t delta, char **out);

// Fill tables covering every `n <= n_max`, `delta <= delta_max`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
MgStatus mg_counter_new(size_t n_max, size_t delta_max, MgCounter **out);

// # Safety
// `counter` must be null or a handle from `mg_counter_new` not yet freed.
void mg_counter_free(MgCounter *counter);

// Free (unrooted) count from a filled counter.
//
// # Safety
// `counter` must be a live handle and `out` valid for one pointer write.
MgStatus mg_counter_free_count(const MgCounter *counter, size_t n, size_t delta, char **out);

// Rooted count `m(n, delta)` from a filled counter.
//
// # Safety
// `counter` must be a live handle and `out` valid for one pointer write.
MgStatus mg_counter_rooted_count(const MgCounter *counter, size_t n, size_t delta, char **out);

// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
MgStatus mg_dp_tables_new(size_t n_cap, size_t delta_cap, MgDpTables **out);

// # Safety
// `tables` must be null or a handle from `mg_dp_tables_new` not yet freed.
void mg_dp_tables_free(MgDpTables *tables);

// Number of rooted multigraphs with `i` vertices and `j` multiple edges
// whose largest child subtree size, extra edges within the largest
// children, and root-edge multiplicity among those, are bounded by
// `w`, `u`, `v` as `mode` says.
//
// # Safety
// `tables` must be a live handle and `out` valid for one pointer write.
MgStatus mg_dp_tables_count(const MgDpTables *tables,
                            MgBoundMode mode,
                            size_t i,
                            size_t j,
                            size_t w,
                            size_t u,
                            size_t v,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MGCOUNT_H */

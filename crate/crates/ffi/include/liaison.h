#ifndef LIAISON_H
#define LIAISON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LiaisonStatus {
  LIAISON_STATUS_OK = 0,
  LIAISON_STATUS_NULL_ARGUMENT = 1,
  LIAISON_STATUS_INVALID_UTF8 = 2,
  LIAISON_STATUS_PARSE = 3,
  LIAISON_STATUS_CAP = 4,
  LIAISON_STATUS_ENGINE = 5,
  LIAISON_STATUS_BUFFER_TOO_SMALL = 6,
  LIAISON_STATUS_PANIC = 7,
} LiaisonStatus;

// A finitely presented graded module.
typedef struct LiaisonModule LiaisonModule;

// The report of a worksheet run.
typedef struct LiaisonReport LiaisonReport;

// A graded quotient of a polynomial ring.
typedef struct LiaisonRing LiaisonRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Engine version as a static NUL-terminated string.
const char *liaison_version(void);

// Message of the last failed call on this thread. Valid until the next
// failing call on the same thread.
const char *liaison_last_error(void);

// `k[vars]/(relations)` over `F_32003`; both lists comma separated.
//
// # Safety
// `vars` and `relations` are NUL-terminated strings, `out` is writable.
enum LiaisonStatus liaison_ring_new(const char *vars,
                                    const char *relations,
                                    struct LiaisonRing **out);

// # Safety
// `ring` is null or came from [`liaison_ring_new`] and was not freed.
void liaison_ring_free(struct LiaisonRing *ring);

// Number of variables of the ring, or 0 for a null handle.
//
// # Safety
// `ring` is null or a live handle.
size_t liaison_ring_nvars(const struct LiaisonRing *ring);

// Whether the ring is Gorenstein.
//
// # Safety
// `ring` is a live handle, `out` is writable.
enum LiaisonStatus liaison_ring_is_gorenstein(const struct LiaisonRing *ring, bool *out);

// The cyclic module `R/(gens)`; `gens` comma separated.
//
// # Safety
// `ring` is a live handle, `gens` a NUL-terminated string, `out` writable.
enum LiaisonStatus liaison_module_cyclic(const struct LiaisonRing *ring,
                                         const char *gens,
                                         struct LiaisonModule **out);

// # Safety
// `module` is null or a handle that was not freed.
void liaison_module_free(struct LiaisonModule *module);

// The horizontal link `λM`.
//
// # Safety
// `module` is a live handle, `out` writable.
enum LiaisonStatus liaison_module_lambda(const struct LiaisonModule *module,
                                         struct LiaisonModule **out);

// `dim_k M_d` for `d = lo..=hi`, written to `dims[0..=hi-lo]`.
//
// # Safety
// `module` is a live handle and `dims` has room for `len` values.
enum LiaisonStatus liaison_module_hilbert(const struct LiaisonModule *module,
                                          int32_t lo,
                                          int32_t hi,
                                          uint64_t *dims,
                                          size_t len);

// Whether `M` is horizontally linked, by the stable-and-Ext criterion.
//
// # Safety
// `module` is a live handle, `out` writable.
enum LiaisonStatus liaison_module_is_linked(const struct LiaisonModule *module, bool *out);

// Parses and runs a worksheet with the default window and one job.
//
// # Safety
// `worksheet` is a NUL-terminated string, `out` writable.
enum LiaisonStatus liaison_run(const char *worksheet,
                               uint64_t seed,
                               uint32_t max_degree,
                               struct LiaisonReport **out);

// 0 all pass, 1 some task failed, 2 engine error or cap; -1 for null.
//
// # Safety
// `report` is null or a live handle.
int32_t liaison_report_exit_code(const struct LiaisonReport *report);

// The machine-readable report as a string to release with
// [`liaison_string_free`].
//
// # Safety
// `report` is a live handle, `out` writable.
enum LiaisonStatus liaison_report_json(const struct LiaisonReport *report, char **out);

// # Safety
// `report` is null or a handle that was not freed.
void liaison_report_free(struct LiaisonReport *report);

// # Safety
// `s` is null or came from this library and was not freed.
void liaison_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIAISON_H */

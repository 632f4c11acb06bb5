#ifndef CAPELLI_H
#define CAPELLI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Determinantal or permanental Capelli bitableau.
typedef enum CapBitabKind {
  CAP_BITAB_KIND_DET = 0,
  CAP_BITAB_KIND_PER = 1,
} CapBitabKind;

typedef enum CapStatus {
  CAP_STATUS_OK = 0,
  CAP_STATUS_NULL_POINTER = 1,
  CAP_STATUS_INVALID_UTF8 = 2,
  CAP_STATUS_INVALID_ARGUMENT = 3,
  CAP_STATUS_PARSE_ERROR = 4,
  CAP_STATUS_INTERNAL_ERROR = 5,
  CAP_STATUS_PANIC = 6,
} CapStatus;

// An element of U(gl(n)).
typedef struct CapElement CapElement;

// A polynomial in x1, x2, ….
typedef struct CapSymPoly CapSymPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread. Valid until the next
// call into this library on the same thread; never null.
const char *cap_last_error(void);

// Constructs a catalog element of U(gl(n)).
//
// `key` is one of `Hk` (index k), `K`, `C` (index p), `Ht` (value p),
// `Cs` (coefficient h) or `P` (index r).
//
// # Safety
// `key` must be a valid C string and `out` a valid pointer.
enum CapStatus cap_compute(const char *key, uint32_t n, uint32_t index, struct CapElement **out);

// Capelli bitableau of two tableaux given as JSON arrays of rows.
//
// # Safety
// `s_json`, `t_json` must be valid C strings and `out` a valid pointer.
enum CapStatus cap_bitableau(enum CapBitabKind kind,
                             const char *s_json,
                             const char *t_json,
                             uint32_t n,
                             struct CapElement **out);

// Parses the canonical text form, e.g. `-e[2,1]e[1,2] + e[2,2]`.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum CapStatus cap_element_parse(const char *text, struct CapElement **out);

// Parses the JSON form produced by [`cap_element_to_json`].
//
// # Safety
// `json` must be a valid C string and `out` a valid pointer.
enum CapStatus cap_element_from_json(const char *json, struct CapElement **out);

// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum CapStatus cap_element_to_text(const struct CapElement *e, char **out);

// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum CapStatus cap_element_to_json(const struct CapElement *e, char **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum CapStatus cap_element_add(const struct CapElement *a,
                               const struct CapElement *b,
                               struct CapElement **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum CapStatus cap_element_mul(const struct CapElement *a,
                               const struct CapElement *b,
                               struct CapElement **out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum CapStatus cap_element_equal(const struct CapElement *a, const struct CapElement *b, bool *out);

// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum CapStatus cap_element_is_central(const struct CapElement *e, uint32_t n, bool *out);

// Harish-Chandra image of a central element of U(gl(n)).
//
// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum CapStatus cap_harish_chandra(const struct CapElement *e, uint32_t n, struct CapSymPoly **out);

// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum CapStatus cap_sympoly_to_text(const struct CapSymPoly *p, char **out);

// Runs a verification suite (or `all`) with default bounds and writes the
// JSON report, with elapsed times zeroed, to `report_json`.
//
// # Safety
// `name` must be a valid C string; `report_json` and `pass` valid pointers.
enum CapStatus cap_run_suite(const char *name,
                             uint32_t n,
                             uint64_t seed,
                             char **report_json,
                             bool *pass);

// # Safety
// `e` must be null or a handle not yet freed.
void cap_element_free(struct CapElement *e);

// # Safety
// `p` must be null or a handle not yet freed.
void cap_sympoly_free(struct CapSymPoly *p);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void cap_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAPELLI_H */

#ifndef CATALAN_POSET_H
#define CATALAN_POSET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CpCheck {
  CP_CHECK_COARSENING = 0,
  CP_CHECK_RANKS = 1,
  CP_CHECK_LEMMA = 2,
  CP_CHECK_SELF_DUAL = 3,
  CP_CHECK_SPERNER = 4,
} CpCheck;

typedef enum CpExportFormat {
  CP_EXPORT_FORMAT_JSON = 0,
  CP_EXPORT_FORMAT_DOT = 1,
} CpExportFormat;

typedef enum CpFamily {
  /*
   132-avoiding permutations ordered by descent sets.
   */
  CP_FAMILY_P = 0,
  /*
   Noncrossing partitions ordered by refinement.
   */
  CP_FAMILY_Q = 1,
} CpFamily;

typedef enum CpKind {
  CP_KIND_AV132 = 0,
  CP_KIND_NCP = 1,
} CpKind;

typedef enum CpStatus {
  CP_STATUS_OK = 0,
  CP_STATUS_NULL_POINTER = 1,
  CP_STATUS_VALIDATION = 2,
  CP_STATUS_DOMAIN = 3,
  CP_STATUS_CAPACITY = 4,
  CP_STATUS_OVERFLOW = 5,
  CP_STATUS_PARSE = 6,
  CP_STATUS_CONSISTENCY = 7,
  CP_STATUS_BUFFER_TOO_SMALL = 8,
  CP_STATUS_INVALID_ARGUMENT = 9,
} CpStatus;

/*
 Opaque handle to a descent-set census.
 */
typedef struct CpCensus CpCensus;

/*
 Opaque enumeration cursor.
 */
typedef struct CpEnumerator CpEnumerator;

/*
 Opaque handle to a built poset.
 */
typedef struct CpPoset CpPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copies the last error message of the calling thread into `buf`.

 # Safety
 `buf` must point to `cap` writable bytes; `written` may be NULL.
 */
enum CpStatus cp_last_error_message(char *buf, size_t cap, size_t *written);

/*
 Catalan number `C_n`; `CP_STATUS_OVERFLOW` when it exceeds 64 bits.

 # Safety
 `out` must be writable.
 */
enum CpStatus cp_catalan(uint32_t n, uint64_t *out);

/*
 Narayana number `N(n, k)`.

 # Safety
 `out` must be writable.
 */
enum CpStatus cp_narayana(uint32_t n, uint32_t k, uint64_t *out);

/*
 Partition text (`{1,4,6}/{2,3}/{5}/{7,8}`) to permutation text.

 # Safety
 `partition` must be a NUL-terminated string; see the module docs for `buf`/`written`.
 */
enum CpStatus cp_map_f(const char *partition, char *buf, size_t cap, size_t *written);

/*
 Permutation text (`64573812` or comma-separated) to partition text.

 # Safety
 `permutation` must be a NUL-terminated string; see the module docs for `buf`/`written`.
 */
enum CpStatus cp_map_finv(const char *permutation, char *buf, size_t cap, size_t *written);

/*
 Starts an enumeration of Av132(n) or NC(n) in canonical order.

 # Safety
 `out` must be writable. Release the cursor with [`cp_enumerator_free`].
 */
enum CpStatus cp_enumerator_new(enum CpKind kind, uint32_t n, struct CpEnumerator **out);

/*
 Writes the next object's text form into `buf` and sets `*has_item`. At the
 end `*has_item` is false and the buffer is untouched. If the buffer is too
 small the item is not consumed.

 # Safety
 `it` must come from [`cp_enumerator_new`]; `has_item` must be writable.
 */
enum CpStatus cp_enumerator_next(struct CpEnumerator *it,
                                 char *buf,
                                 size_t cap,
                                 size_t *written,
                                 bool *has_item);

/*
 # Safety
 `it` must be NULL or come from [`cp_enumerator_new`] and not be used afterwards.
 */
void cp_enumerator_free(struct CpEnumerator *it);

/*
 Builds P_n or Q_n with its full order matrix and Hasse diagram.

 # Safety
 `out` must be writable. Release the poset with [`cp_poset_free`].
 */
enum CpStatus cp_poset_build(enum CpFamily family, uint32_t n, struct CpPoset **out);

/*
 # Safety
 `poset` must be NULL or come from [`cp_poset_build`] and not be used afterwards.
 */
void cp_poset_free(struct CpPoset *poset);

/*
 # Safety
 `poset` must be NULL or a live handle.
 */
size_t cp_poset_len(const struct CpPoset *poset);

/*
 # Safety
 `poset` must be NULL or a live handle.
 */
size_t cp_poset_cover_count(const struct CpPoset *poset);

/*
 Copies the covers as `(lower, upper)` index pairs into `pairs`, which must
 hold `2 * cp_poset_cover_count(poset)` entries.

 # Safety
 `pairs` must point to `cap` writable `size_t`s.
 */
enum CpStatus cp_poset_covers(const struct CpPoset *poset, size_t *pairs, size_t cap);

/*
 # Safety
 `poset` must be a live handle and `out` writable.
 */
enum CpStatus cp_poset_rank(const struct CpPoset *poset, size_t index, size_t *out);

/*
 `*out = element i <= element j`.

 # Safety
 `poset` must be a live handle and `out` writable.
 */
enum CpStatus cp_poset_leq(const struct CpPoset *poset, size_t i, size_t j, bool *out);

/*
 Text form of element `index`.

 # Safety
 `poset` must be a live handle; see the module docs for `buf`/`written`.
 */
enum CpStatus cp_poset_element(const struct CpPoset *poset,
                               size_t index,
                               char *buf,
                               size_t cap,
                               size_t *written);

/*
 JSON or DOT export of the poset.

 # Safety
 `poset` must be a live handle; see the module docs for `buf`/`written`.
 */
enum CpStatus cp_poset_export(const struct CpPoset *poset,
                              enum CpExportFormat format,
                              char *buf,
                              size_t cap,
                              size_t *written);

/*
 Size of a largest antichain.

 # Safety
 `poset` must be a live handle and `out` writable.
 */
enum CpStatus cp_poset_width(const struct CpPoset *poset, size_t *out);

/*
 Largest union of `k` antichains.

 # Safety
 `poset` must be a live handle and `out` writable.
 */
enum CpStatus cp_poset_k_antichain_union(const struct CpPoset *poset, size_t k, size_t *out);

/*
 Writes the order-reversing bijection of P_n (`mapping[i]` is the image of
 element `i`). Q handles are rejected with `CP_STATUS_INVALID_ARGUMENT`.

 # Safety
 `mapping` must point to `cap` writable `size_t`s.
 */
enum CpStatus cp_poset_antiautomorphism(const struct CpPoset *poset, size_t *mapping, size_t cap);

/*
 `*out` = whether `mapping` (length `len`) is a bijection reversing the order.

 # Safety
 `mapping` must point to `len` readable `size_t`s and `out` be writable.
 */
enum CpStatus cp_poset_verify_antiautomorphism(const struct CpPoset *poset,
                                               const size_t *mapping,
                                               size_t len,
                                               bool *out);

/*
 Census of 132-avoiding permutations of `{1..n}` by descent set.

 # Safety
 `out` must be writable. Release with [`cp_census_free`].
 */
enum CpStatus cp_census_build(uint32_t n, struct CpCensus **out);

/*
 Count for the descent set with bit mask `mask` (bit `i-1` = position `i`).

 # Safety
 `census` must be a live handle and `out` writable.
 */
enum CpStatus cp_census_count(const struct CpCensus *census, uint64_t mask, uint64_t *out);

/*
 CSV rendering (`descent_set_text,size,count`).

 # Safety
 `census` must be a live handle; see the module docs for `buf`/`written`.
 */
enum CpStatus cp_census_csv(const struct CpCensus *census, char *buf, size_t cap, size_t *written);

/*
 # Safety
 `census` must be NULL or come from [`cp_census_build`] and not be used afterwards.
 */
void cp_census_free(struct CpCensus *census);

/*
 Count of 132-avoiding permutations with descent set `mask` via the
 recursive first-run reduction (no enumeration).

 # Safety
 `out` must be writable.
 */
enum CpStatus cp_count_by_descent_set(uint32_t n, uint64_t mask, uint64_t *out);

/*
 Runs one exhaustive check. `*violations == 0` means it passed.

 # Safety
 `examined` and `violations` must be writable.
 */
enum CpStatus cp_verify(enum CpCheck check, uint32_t n, uint64_t *examined, uint64_t *violations);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CATALAN_POSET_H */

#ifndef WORDSORT_H
#define WORDSORT_H

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

// Which extremal concatenation to build.
typedef enum WsObjective {
  WS_OBJECTIVE_SMALLEST = 0,
  WS_OBJECTIVE_LARGEST = 1,
} WsObjective;

// Status code returned by every fallible function.
typedef enum WsStatus {
  WS_STATUS_OK = 0,
  WS_STATUS_EMPTY_WORD = 1,
  WS_STATUS_EMPTY_INPUT = 2,
  WS_STATUS_NOT_PRIMITIVE = 3,
  WS_STATUS_NOT_DISTINCT = 4,
  WS_STATUS_TOO_LARGE = 5,
  WS_STATUS_BAD_PARAMETER = 6,
  WS_STATUS_NULL_POINTER = 7,
  WS_STATUS_PANIC = 8,
} WsStatus;

// An extremal concatenation and the permutation producing it.
typedef struct WsConcatPlan WsConcatPlan;

// Sorted order of a word list with its tie groups.
typedef struct WsSortResult WsSortResult;

// Growable list of words, copied in on push.
typedef struct WsWordList WsWordList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static, NUL-terminated description of a status code.
const char *ws_status_message(enum WsStatus status);

// Compares the infinite repetitions of `a` and `b`. Writes -1, 0 or 1.
//
// # Safety
// `a` and `b` must be readable for `a_len` and `b_len` bytes.
enum WsStatus ws_cmp_repeat(const uint8_t *a,
                            size_t a_len,
                            const uint8_t *b,
                            size_t b_len,
                            int32_t *result);

// Total order on finite words: repetition first, then length.
//
// # Safety
// As for [`ws_cmp_repeat`].
enum WsStatus ws_cmp_inf(const uint8_t *a,
                         size_t a_len,
                         const uint8_t *b,
                         size_t b_len,
                         int32_t *result);

// Primitive root of `a`: the root is the first `*root_len` bytes of `a`
// and `a` is that root repeated `*exponent` times.
//
// # Safety
// `a` must be readable for `len` bytes; the out pointers must be writable.
enum WsStatus ws_root(const uint8_t *a, size_t len, size_t *root_len, size_t *exponent);

// New empty word list. Returns NULL only on internal failure.
struct WsWordList *ws_word_list_new(void);

// Appends a copy of `word`. Empty words are rejected.
//
// # Safety
// `list` must come from [`ws_word_list_new`]; `word` must be readable for
// `len` bytes.
enum WsStatus ws_word_list_push(struct WsWordList *list, const uint8_t *word, size_t len);

// Number of words in the list; 0 for NULL.
//
// # Safety
// `list` must be NULL or come from [`ws_word_list_new`].
size_t ws_word_list_len(const struct WsWordList *list);

// Releases a word list. NULL is ignored.
//
// # Safety
// `list` must be NULL or come from [`ws_word_list_new`], and not be used
// afterwards.
void ws_word_list_free(struct WsWordList *list);

// Sorts the list by repetition order, then length, in linear time.
//
// # Safety
// `list` must come from [`ws_word_list_new`]; `result` must be writable.
// On success `*result` owns a handle to release with [`ws_sort_result_free`].
enum WsStatus ws_sort(const struct WsWordList *list, struct WsSortResult **result);

// Sorted input indices; `*len` receives their count. The pointer stays
// valid until the result is freed.
//
// # Safety
// `res` must come from [`ws_sort`]; `len` must be writable.
const size_t *ws_sort_result_order(const struct WsSortResult *res, size_t *len);

// Number of tie groups; 0 for NULL.
//
// # Safety
// `res` must be NULL or come from [`ws_sort`].
size_t ws_sort_result_group_count(const struct WsSortResult *res);

// Bounds of tie group `group` within the order array, as the half-open
// range `[*start, *end)`, and the length of its primitive root.
//
// # Safety
// `res` must come from [`ws_sort`]; the out pointers must be writable.
enum WsStatus ws_sort_result_group(const struct WsSortResult *res,
                                   size_t group,
                                   size_t *start,
                                   size_t *end,
                                   size_t *root_len);

// Releases a sort result. NULL is ignored.
//
// # Safety
// `res` must be NULL or come from [`ws_sort`], and not be used afterwards.
void ws_sort_result_free(struct WsSortResult *res);

// Builds the smallest or largest concatenation of the list.
//
// # Safety
// `list` must come from [`ws_word_list_new`]; `plan` must be writable.
// On success `*plan` owns a handle to release with [`ws_concat_plan_free`].
enum WsStatus ws_rearrange(const struct WsWordList *list,
                           enum WsObjective objective,
                           struct WsConcatPlan **plan);

// Concatenated bytes; `*len` receives their count. Not NUL-terminated.
//
// # Safety
// `plan` must come from [`ws_rearrange`]; `len` must be writable.
const uint8_t *ws_concat_plan_result(const struct WsConcatPlan *plan, size_t *len);

// Input indices in concatenation order; `*len` receives their count.
//
// # Safety
// `plan` must come from [`ws_rearrange`]; `len` must be writable.
const size_t *ws_concat_plan_permutation(const struct WsConcatPlan *plan, size_t *len);

// Whether no other permutation yields the same string; false for NULL.
//
// # Safety
// `plan` must be NULL or come from [`ws_rearrange`].
bool ws_concat_plan_unique(const struct WsConcatPlan *plan);

// Releases a plan. NULL is ignored.
//
// # Safety
// `plan` must be NULL or come from [`ws_rearrange`], and not be used
// afterwards.
void ws_concat_plan_free(struct WsConcatPlan *plan);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WORDSORT_H */

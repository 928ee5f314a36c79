//! C ABI for `wordsort`.
//!
//! Words are passed as `(pointer, length)` byte ranges. Results that own
//! memory live behind opaque handles and are released with the matching
//! `*_free` function. Every fallible call returns a [`WsStatus`]; panics are
//! caught at the boundary and reported as `WS_STATUS_PANIC`.
//!
//! The header is generated into `include/wordsort.h` at build time.

use std::cmp::Ordering;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use wordsort::{Error, Objective};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WsStatus {
    Ok = 0,
    EmptyWord = 1,
    EmptyInput = 2,
    NotPrimitive = 3,
    NotDistinct = 4,
    TooLarge = 5,
    BadParameter = 6,
    NullPointer = 7,
    Panic = 8,
}

impl From<Error> for WsStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyWord => WsStatus::EmptyWord,
            Error::EmptyInput => WsStatus::EmptyInput,
            Error::NotPrimitive { .. } => WsStatus::NotPrimitive,
            Error::NotDistinct { .. } => WsStatus::NotDistinct,
            Error::TooLarge { .. } => WsStatus::TooLarge,
            Error::BadParameter(_) => WsStatus::BadParameter,
        }
    }
}

/// Which extremal concatenation to build.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WsObjective {
    Smallest = 0,
    Largest = 1,
}

/// Growable list of words, copied in on push.
pub struct WsWordList {
    words: Vec<Vec<u8>>,
}

/// Sorted order of a word list with its tie groups.
pub struct WsSortResult {
    order: Vec<usize>,
    // group g is order[group_starts[g]..group_starts[g + 1]]
    group_starts: Vec<usize>,
    root_lengths: Vec<usize>,
}

/// An extremal concatenation and the permutation producing it.
pub struct WsConcatPlan {
    result: Vec<u8>,
    permutation: Vec<usize>,
    unique: bool,
}

fn guard(f: impl FnOnce() -> Result<(), WsStatus>) -> WsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WsStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => WsStatus::Panic,
    }
}

unsafe fn bytes<'a>(data: *const u8, len: usize) -> Result<&'a [u8], WsStatus> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(WsStatus::NullPointer)
    } else {
        Ok(slice::from_raw_parts(data, len))
    }
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, WsStatus> {
    p.as_mut().ok_or(WsStatus::NullPointer)
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, WsStatus> {
    p.as_ref().ok_or(WsStatus::NullPointer)
}

fn sign(o: Ordering) -> i32 {
    o as i32
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn ws_status_message(status: WsStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        WsStatus::Ok => b"ok\0",
        WsStatus::EmptyWord => b"empty word\0",
        WsStatus::EmptyInput => b"empty input\0",
        WsStatus::NotPrimitive => b"word is not primitive\0",
        WsStatus::NotDistinct => b"words are not distinct\0",
        WsStatus::TooLarge => b"input too large for exhaustive search\0",
        WsStatus::BadParameter => b"bad parameter\0",
        WsStatus::NullPointer => b"null pointer\0",
        WsStatus::Panic => b"internal error\0",
    };
    msg.as_ptr().cast()
}

/// Compares the infinite repetitions of `a` and `b`. Writes -1, 0 or 1.
///
/// # Safety
/// `a` and `b` must be readable for `a_len` and `b_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn ws_cmp_repeat(
    a: *const u8,
    a_len: usize,
    b: *const u8,
    b_len: usize,
    result: *mut i32,
) -> WsStatus {
    guard(|| {
        let o = wordsort::cmp_repeat(bytes(a, a_len)?, bytes(b, b_len)?)?;
        *out(result)? = sign(o);
        Ok(())
    })
}

/// Total order on finite words: repetition first, then length.
///
/// # Safety
/// As for [`ws_cmp_repeat`].
#[no_mangle]
pub unsafe extern "C" fn ws_cmp_inf(
    a: *const u8,
    a_len: usize,
    b: *const u8,
    b_len: usize,
    result: *mut i32,
) -> WsStatus {
    guard(|| {
        let o = wordsort::cmp_inf(bytes(a, a_len)?, bytes(b, b_len)?)?;
        *out(result)? = sign(o);
        Ok(())
    })
}

/// Primitive root of `a`: the root is the first `*root_len` bytes of `a`
/// and `a` is that root repeated `*exponent` times.
///
/// # Safety
/// `a` must be readable for `len` bytes; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_root(
    a: *const u8,
    len: usize,
    root_len: *mut usize,
    exponent: *mut usize,
) -> WsStatus {
    guard(|| {
        let r = wordsort::root(bytes(a, len)?)?;
        *out(root_len)? = r.root.len();
        *out(exponent)? = r.exponent;
        Ok(())
    })
}

/// New empty word list. Returns NULL only on internal failure.
#[no_mangle]
pub extern "C" fn ws_word_list_new() -> *mut WsWordList {
    catch_unwind(|| Box::into_raw(Box::new(WsWordList { words: Vec::new() })))
        .unwrap_or(ptr::null_mut())
}

/// Appends a copy of `word`. Empty words are rejected.
///
/// # Safety
/// `list` must come from [`ws_word_list_new`]; `word` must be readable for
/// `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn ws_word_list_push(
    list: *mut WsWordList,
    word: *const u8,
    len: usize,
) -> WsStatus {
    guard(|| {
        let list = out(list)?;
        let word = bytes(word, len)?;
        if word.is_empty() {
            return Err(WsStatus::EmptyWord);
        }
        list.words.push(word.to_vec());
        Ok(())
    })
}

/// Number of words in the list; 0 for NULL.
///
/// # Safety
/// `list` must be NULL or come from [`ws_word_list_new`].
#[no_mangle]
pub unsafe extern "C" fn ws_word_list_len(list: *const WsWordList) -> usize {
    list.as_ref().map_or(0, |l| l.words.len())
}

/// Releases a word list. NULL is ignored.
///
/// # Safety
/// `list` must be NULL or come from [`ws_word_list_new`], and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn ws_word_list_free(list: *mut WsWordList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Sorts the list by repetition order, then length, in linear time.
///
/// # Safety
/// `list` must come from [`ws_word_list_new`]; `result` must be writable.
/// On success `*result` owns a handle to release with [`ws_sort_result_free`].
#[no_mangle]
pub unsafe extern "C" fn ws_sort(
    list: *const WsWordList,
    result: *mut *mut WsSortResult,
) -> WsStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = ptr::null_mut();
        let list = get(list)?;
        let outcome = wordsort::sort_repeating(&list.words)?;
        let mut group_starts = Vec::with_capacity(outcome.tie_groups.len() + 1);
        let mut at = 0;
        group_starts.push(at);
        for g in &outcome.tie_groups {
            at += g.len();
            group_starts.push(at);
        }
        *slot = Box::into_raw(Box::new(WsSortResult {
            order: outcome.order,
            group_starts,
            root_lengths: outcome.root_lengths,
        }));
        Ok(())
    })
}

/// Sorted input indices; `*len` receives their count. The pointer stays
/// valid until the result is freed.
///
/// # Safety
/// `res` must come from [`ws_sort`]; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_sort_result_order(
    res: *const WsSortResult,
    len: *mut usize,
) -> *const usize {
    match (res.as_ref(), len.as_mut()) {
        (Some(r), Some(len)) => {
            *len = r.order.len();
            r.order.as_ptr()
        }
        _ => ptr::null(),
    }
}

/// Number of tie groups; 0 for NULL.
///
/// # Safety
/// `res` must be NULL or come from [`ws_sort`].
#[no_mangle]
pub unsafe extern "C" fn ws_sort_result_group_count(res: *const WsSortResult) -> usize {
    res.as_ref().map_or(0, |r| r.root_lengths.len())
}

/// Bounds of tie group `group` within the order array, as the half-open
/// range `[*start, *end)`, and the length of its primitive root.
///
/// # Safety
/// `res` must come from [`ws_sort`]; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_sort_result_group(
    res: *const WsSortResult,
    group: usize,
    start: *mut usize,
    end: *mut usize,
    root_len: *mut usize,
) -> WsStatus {
    guard(|| {
        let r = get(res)?;
        if group >= r.root_lengths.len() {
            return Err(WsStatus::BadParameter);
        }
        *out(start)? = r.group_starts[group];
        *out(end)? = r.group_starts[group + 1];
        *out(root_len)? = r.root_lengths[group];
        Ok(())
    })
}

/// Releases a sort result. NULL is ignored.
///
/// # Safety
/// `res` must be NULL or come from [`ws_sort`], and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ws_sort_result_free(res: *mut WsSortResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Builds the smallest or largest concatenation of the list.
///
/// # Safety
/// `list` must come from [`ws_word_list_new`]; `plan` must be writable.
/// On success `*plan` owns a handle to release with [`ws_concat_plan_free`].
#[no_mangle]
pub unsafe extern "C" fn ws_rearrange(
    list: *const WsWordList,
    objective: WsObjective,
    plan: *mut *mut WsConcatPlan,
) -> WsStatus {
    guard(|| {
        let slot = out(plan)?;
        *slot = ptr::null_mut();
        let list = get(list)?;
        let objective = match objective {
            WsObjective::Smallest => Objective::Minimal,
            WsObjective::Largest => Objective::Maximal,
        };
        let p = wordsort::rearrange::rearrange(&list.words, objective)?;
        *slot = Box::into_raw(Box::new(WsConcatPlan {
            result: p.result,
            permutation: p.permutation,
            unique: p.unique,
        }));
        Ok(())
    })
}

/// Concatenated bytes; `*len` receives their count. Not NUL-terminated.
///
/// # Safety
/// `plan` must come from [`ws_rearrange`]; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_concat_plan_result(
    plan: *const WsConcatPlan,
    len: *mut usize,
) -> *const u8 {
    match (plan.as_ref(), len.as_mut()) {
        (Some(p), Some(len)) => {
            *len = p.result.len();
            p.result.as_ptr()
        }
        _ => ptr::null(),
    }
}

/// Input indices in concatenation order; `*len` receives their count.
///
/// # Safety
/// `plan` must come from [`ws_rearrange`]; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_concat_plan_permutation(
    plan: *const WsConcatPlan,
    len: *mut usize,
) -> *const usize {
    match (plan.as_ref(), len.as_mut()) {
        (Some(p), Some(len)) => {
            *len = p.permutation.len();
            p.permutation.as_ptr()
        }
        _ => ptr::null(),
    }
}

/// Whether no other permutation yields the same string; false for NULL.
///
/// # Safety
/// `plan` must be NULL or come from [`ws_rearrange`].
#[no_mangle]
pub unsafe extern "C" fn ws_concat_plan_unique(plan: *const WsConcatPlan) -> bool {
    plan.as_ref().is_some_and(|p| p.unique)
}

/// Releases a plan. NULL is ignored.
///
/// # Safety
/// `plan` must be NULL or come from [`ws_rearrange`], and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn ws_concat_plan_free(plan: *mut WsConcatPlan) {
    if !plan.is_null() {
        drop(Box::from_raw(plan));
    }
}

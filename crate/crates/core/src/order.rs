//! Comparators on words.
//!
//! The central one is [`cmp_repeat`], which orders two words by their infinite
//! repetitions `R(a) = aaa…` and `R(b) = bbb…`. That comparison has the same
//! outcome as comparing the finite words `ab` and `ba`, so it costs
//! `O(|a| + |b|)`. [`cmp_repeat_oracle`] reaches the same answer independently
//! by materializing the first `|a| + |b|` symbols of both repetitions; two
//! periodic sequences that agree that far agree forever.
//!
//! [`cmp_inf`] extends the repetition order to a total order on all finite
//! non-empty words by breaking ties between powers of one root by length.

use std::cmp::Ordering;

use crate::error::Result;
use crate::word::non_empty;

/// Outcome of a word comparison.
pub type OrderResult = Ordering;

/// Compares `R(a)` with `R(b)` by comparing `a·b` with `b·a`.
pub fn cmp_repeat(a: &[u8], b: &[u8]) -> Result<OrderResult> {
    let a = non_empty(a)?;
    let b = non_empty(b)?;
    let ab = [a, b].concat();
    let ba = [b, a].concat();
    Ok(ab.cmp(&ba))
}

/// Allocation-free form of [`cmp_repeat`]: walks `a·b` and `b·a` by index.
pub(crate) fn cmp_repeat_in_place(a: &[u8], b: &[u8]) -> Ordering {
    a.iter().chain(b).cmp(b.iter().chain(a))
}

/// Compares `R(a)` with `R(b)` on their first `|a| + |b|` symbols.
pub fn cmp_repeat_oracle(a: &[u8], b: &[u8]) -> Result<OrderResult> {
    let a = non_empty(a)?;
    let b = non_empty(b)?;
    let depth = a.len() + b.len();
    let ra: Vec<u8> = a.iter().copied().cycle().take(depth).collect();
    let rb: Vec<u8> = b.iter().copied().cycle().take(depth).collect();
    Ok(ra.cmp(&rb))
}

/// Total order on finite non-empty words: by repetition first, then by
/// length among powers of the same root.
pub fn cmp_inf(a: &[u8], b: &[u8]) -> Result<OrderResult> {
    let a = non_empty(a)?;
    let b = non_empty(b)?;
    // R(a) = R(root(a)), so comparing a and b directly equals comparing roots.
    // Equal repetitions mean equal roots; equal lengths then mean equal words.
    Ok(cmp_repeat_in_place(a, b).then(a.len().cmp(&b.len())))
}

/// `a` is truly less than `b`: they differ at some position within both
/// words and `a` has the smaller symbol there. Being a prefix does not count.
pub fn truly_less(a: &[u8], b: &[u8]) -> Result<bool> {
    let a = non_empty(a)?;
    let b = non_empty(b)?;
    Ok(a.iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .is_some_and(|(x, y)| x < y))
}

/// Whether `a` is a Lyndon word: strictly smaller than each proper rotation.
pub fn is_lyndon(a: &[u8]) -> Result<bool> {
    let a = non_empty(a)?;
    // First phase of Duval's factorization. `a` is Lyndon exactly when the
    // scan consumes the whole word with a period equal to its length.
    let (mut k, mut j) = (0, 1);
    while j < a.len() {
        match a[k].cmp(&a[j]) {
            Ordering::Less => k = 0,
            Ordering::Equal => k += 1,
            Ordering::Greater => return Ok(false),
        }
        j += 1;
    }
    Ok(k == 0)
}

//! Lexicographically extremal concatenations of a word list.
//!
//! Concatenating in non-decreasing repetition order gives the smallest
//! string and non-increasing order the largest. Reordering words inside a
//! tie group never changes the bytes, so the optimal permutation is unique
//! exactly when all roots are distinct.

use crate::error::{Error, Result};
use crate::sorter::sort_repeating;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Minimal,
    Maximal,
}

/// A chosen arrangement and the string it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatPlan {
    pub permutation: Vec<usize>,
    pub result: Vec<u8>,
    pub objective: Objective,
    /// No other permutation yields the same extremal string.
    pub unique: bool,
}

pub fn smallest_concat<W: AsRef<[u8]>>(words: &[W]) -> Result<ConcatPlan> {
    rearrange(words, Objective::Minimal)
}

pub fn largest_concat<W: AsRef<[u8]>>(words: &[W]) -> Result<ConcatPlan> {
    rearrange(words, Objective::Maximal)
}

pub fn rearrange<W: AsRef<[u8]>>(words: &[W], objective: Objective) -> Result<ConcatPlan> {
    if words.is_empty() {
        return Err(Error::EmptyInput);
    }
    let outcome = sort_repeating(words)?;
    let unique = outcome.tie_groups.len() == words.len();
    let permutation = match objective {
        Objective::Minimal => outcome.order,
        Objective::Maximal => outcome.tie_groups.into_iter().rev().flatten().collect(),
    };
    Ok(ConcatPlan {
        result: concat_in_order(words, &permutation),
        permutation,
        objective,
        unique,
    })
}

pub(crate) fn concat_in_order<W: AsRef<[u8]>>(words: &[W], order: &[usize]) -> Vec<u8> {
    let total = order.iter().map(|&i| words[i].as_ref().len()).sum();
    let mut out = Vec::with_capacity(total);
    for &i in order {
        out.extend_from_slice(words[i].as_ref());
    }
    out
}

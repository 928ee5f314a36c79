//! Sorting words by their infinite repetitions, and optimal rearrangement.
//!
//! The repetition of a non-empty word `A` is the infinite string
//! `R(A) = AAA…`. Concatenating words in non-decreasing order of their
//! repetitions gives the lexicographically smallest concatenation, and
//! non-increasing order gives the largest. This crate sorts by that order in
//! time linear in the total input length for a fixed byte alphabet, using
//! two tries and no pairwise comparisons.
//!
//! ```
//! use wordsort::{smallest_concat, largest_concat};
//!
//! let words = ["123", "12", "121", "1212"];
//! assert_eq!(smallest_concat(&words).unwrap().result, b"121121212123");
//! assert_eq!(largest_concat(&words).unwrap().result, b"123121212121");
//! ```
//!
//! Modules:
//!
//! - [`words`]: powers, borders, primitive roots, degrees;
//! - [`order`]: the repetition comparator and its relatives;
//! - [`trie`]: the path-compressed trie used by the sorter;
//! - [`sorter`]: the linear-time sort;
//! - [`rearrange`]: smallest and largest concatenations;
//! - [`oracles`]: brute-force references;
//! - [`bench`]: scaling benchmark;
//! - [`cli`]: command implementations for the `wordsort` binary.

pub mod bench;
pub mod cli;
pub mod error;
pub mod oracles;
pub mod order;
pub mod rearrange;
pub mod sorter;
pub mod trie;
pub mod word;
pub mod words;

pub use error::{Error, Result};
pub use order::{cmp_inf, cmp_repeat, cmp_repeat_oracle, is_lyndon, truly_less, OrderResult};
pub use rearrange::{largest_concat, smallest_concat, ConcatPlan, Objective};
pub use sorter::{
    sort_by_inf_order, sort_primitive_distinct, sort_repeating, LinearStats, SortOutcome,
};
pub use trie::{build_trie, lex_rank_words, DegreeTable, Trie};
pub use word::Word;
pub use words::{border_length, deg_word, is_primitive, power, root, RootDecomposition};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;

//! Linear-time sorting of words by their infinite repetitions.
//!
//! For distinct primitive words `A_1..A_n` with total length `L`:
//!
//! 1. build the trie of the words and read each degree
//!    `d_i = max_j deg_{A_j}(A_i)` off it by a cyclic walk;
//! 2. form `M_i = A_i^(d_i + 2)`;
//! 3. sort the `M_i` lexicographically with a second trie.
//!
//! The `M_i` are [`Power`] views over `A_i`; the second trie reads them in
//! place, so step 2 allocates nothing proportional to `sum |M_i|`.
//!
//! Lexicographic order on the `M_i` coincides with the order of the
//! repetitions `R(A_i)`, and `sum |N_i| <= 2L` where `N_i = A_i^d_i`, so both
//! tries are built over `O(L)` symbols. Arbitrary words reduce to that case
//! through their primitive roots, since `R(A) = R(root(A))`.

use crate::error::{Error, Result};
use crate::trie::{build_trie, build_trie_of, DegreeTable, Power, Trie};
use crate::word::non_empty;
use crate::words::root_length_in;

/// Sorted order of a word list together with its tie structure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SortOutcome {
    /// Input indices in non-decreasing repetition order.
    pub order: Vec<usize>,
    /// Maximal runs of `order` whose words share one repetition.
    pub tie_groups: Vec<Vec<usize>>,
    /// Length of each tie group's primitive root. The root itself is that
    /// prefix of any group member; see [`SortOutcome::distinct_roots`].
    pub root_lengths: Vec<usize>,
}

impl SortOutcome {
    /// Primitive root of each tie group, in sorted order, borrowed from the
    /// words the outcome was computed for.
    pub fn distinct_roots<'a, W: AsRef<[u8]>>(&self, words: &'a [W]) -> Vec<&'a [u8]> {
        self.tie_groups
            .iter()
            .zip(&self.root_lengths)
            .map(|(group, &len)| &words[group[0]].as_ref()[..len])
            .collect()
    }
}

/// Size accounting of one run over distinct primitive words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LinearStats {
    /// `L`, the total input length.
    pub total_length: usize,
    /// `sum |N_i|`.
    pub n_total: usize,
    /// `sum |M_i|`.
    pub m_total: usize,
}

impl LinearStats {
    pub fn within_bounds(&self) -> bool {
        self.n_total <= 2 * self.total_length && self.m_total <= 4 * self.total_length
    }
}

/// Sorts distinct primitive words by repetition; returns input indices.
pub fn sort_primitive_distinct<W: AsRef<[u8]>>(words: &[W]) -> Result<Vec<usize>> {
    sort_primitive_distinct_with_stats(words).map(|(order, _)| order)
}

/// [`sort_primitive_distinct`] plus the size accounting of the run.
///
/// Panics if `sum |N_i| <= 2L` or the prefix-freeness of the `M_i` fails;
/// either would mean the reduction itself is broken.
pub fn sort_primitive_distinct_with_stats<W: AsRef<[u8]>>(
    words: &[W],
) -> Result<(Vec<usize>, LinearStats)> {
    let mut scratch = Vec::new();
    for (index, w) in words.iter().enumerate() {
        let w = non_empty(w.as_ref())?;
        if root_length_in(w, &mut scratch)? != w.len() {
            return Err(Error::NotPrimitive { index });
        }
    }
    let (trie, ids) = build_trie(words)?;
    if trie.distinct_len() != words.len() {
        let mut first_seen = vec![usize::MAX; trie.distinct_len()];
        for (second, &id) in ids.iter().enumerate() {
            if first_seen[id] != usize::MAX {
                return Err(Error::NotDistinct {
                    first: first_seen[id],
                    second,
                });
            }
            first_seen[id] = second;
        }
    }

    sort_with_trie(&trie, words)
}

// Core of the algorithm; `trie` must be the trie of `words`, which must be
// distinct and primitive.
fn sort_with_trie<W: AsRef<[u8]>>(
    trie: &Trie<'_>,
    words: &[W],
) -> Result<(Vec<usize>, LinearStats)> {
    let table = DegreeTable::compute(trie, words)?;
    let stats = LinearStats {
        total_length: words.iter().map(|w| w.as_ref().len()).sum(),
        n_total: table.n_total(),
        m_total: table.m_total(),
    };
    assert!(
        stats.within_bounds(),
        "size bound violated: sum|N_i| = {}, sum|M_i| = {}, L = {}",
        stats.n_total,
        stats.m_total,
        stats.total_length
    );

    let powers: Vec<Power<'_>> = words
        .iter()
        .zip(&table.degrees)
        .map(|(w, &d)| Power::new(w.as_ref(), d + 2))
        .collect();
    let (power_trie, _) = build_trie_of(powers.iter())?;
    assert!(
        power_trie.is_prefix_free() && power_trie.distinct_len() == words.len(),
        "repetition powers are not prefix-free"
    );
    Ok((power_trie.lex_order(), stats))
}

/// Sorts arbitrary non-empty words by repetition.
///
/// Words with equal repetitions form one tie group, ordered by length and
/// then input index.
pub fn sort_repeating<W: AsRef<[u8]>>(words: &[W]) -> Result<SortOutcome> {
    sort_repeating_with_stats(words).map(|(outcome, _)| outcome)
}

/// [`sort_repeating`] plus the size accounting of the inner distinct-root run.
pub fn sort_repeating_with_stats<W: AsRef<[u8]>>(
    words: &[W],
) -> Result<(SortOutcome, LinearStats)> {
    let mut scratch = Vec::new();
    let roots = words
        .iter()
        .map(|w| {
            let w = w.as_ref();
            root_length_in(w, &mut scratch).map(|len| &w[..len])
        })
        .collect::<Result<Vec<_>>>()?;
    drop(scratch);
    // The root trie doubles as the trie of the distinct primitive set.
    let (root_trie, root_ids) = build_trie(&roots)?;
    let distinct: Vec<&[u8]> = root_trie.distinct_words().to_vec();
    let (root_order, stats) = sort_with_trie(&root_trie, &distinct)?;
    drop(root_trie);

    // Bucket members per root in input order, then stable counting sort by
    // exponent inside each bucket.
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); distinct.len()];
    for (i, &id) in root_ids.iter().enumerate() {
        members[id].push(i);
    }
    let mut outcome = SortOutcome {
        order: Vec::with_capacity(words.len()),
        tie_groups: Vec::with_capacity(distinct.len()),
        root_lengths: Vec::with_capacity(distinct.len()),
    };
    for id in root_order {
        let root = distinct[id];
        let group = order_by_exponent(&members[id], |i| words[i].as_ref().len() / root.len());
        outcome.order.extend_from_slice(&group);
        outcome.tie_groups.push(group);
        outcome.root_lengths.push(root.len());
    }
    Ok((outcome, stats))
}

fn order_by_exponent(members: &[usize], exponent: impl Fn(usize) -> usize) -> Vec<usize> {
    if members.len() == 1 {
        return members.to_vec();
    }
    let max = members.iter().map(|&i| exponent(i)).max().unwrap_or(0);
    let mut buckets = vec![Vec::new(); max + 1];
    for &i in members {
        buckets[exponent(i)].push(i);
    }
    buckets.concat()
}

/// Permutation realizing the total order on finite words (repetition, then
/// length). Equal words keep input order.
pub fn sort_by_inf_order<W: AsRef<[u8]>>(words: &[W]) -> Result<Vec<usize>> {
    Ok(sort_repeating(words)?.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::cmp_repeat_oracle;
    use std::cmp::Ordering;

    fn pick<'a>(words: &[&'a str], order: &[usize]) -> Vec<&'a str> {
        order.iter().map(|&i| words[i]).collect()
    }

    #[test]
    fn primitive_distinct_examples() {
        let words = ["123", "12", "121"];
        let order = sort_primitive_distinct(&words).unwrap();
        assert_eq!(pick(&words, &order), ["121", "12", "123"]);
        assert_eq!(sort_primitive_distinct(&["a"]).unwrap(), vec![0]);

        let words = ["ab", "aab", "b"];
        assert_eq!(cmp_repeat_oracle(b"aab", b"ab").unwrap(), Ordering::Less);
        assert_eq!(cmp_repeat_oracle(b"ab", b"b").unwrap(), Ordering::Less);
        let order = sort_primitive_distinct(&words).unwrap();
        assert_eq!(pick(&words, &order), ["aab", "ab", "b"]);
    }

    #[test]
    fn primitive_distinct_rejects_bad_input() {
        assert_eq!(
            sort_primitive_distinct(&["ab", "abab"]),
            Err(Error::NotPrimitive { index: 1 })
        );
        assert_eq!(
            sort_primitive_distinct(&["ab", "b", "ab"]),
            Err(Error::NotDistinct {
                first: 0,
                second: 2
            })
        );
        assert_eq!(sort_primitive_distinct(&["ab", ""]), Err(Error::EmptyWord));
    }

    #[test]
    fn repeating_examples() {
        let words = ["123", "12", "121", "1212"];
        let outcome = sort_repeating(&words).unwrap();
        assert_eq!(outcome.tie_groups, vec![vec![2], vec![1, 3], vec![0]]);
        assert_eq!(outcome.order, vec![2, 1, 3, 0]);
        let roots = outcome.distinct_roots(&words);
        assert_eq!(roots, [&b"121"[..], b"12", b"123"]);

        let outcome = sort_repeating(&["aa", "a"]).unwrap();
        assert_eq!(outcome.tie_groups, vec![vec![1, 0]]);
        assert_eq!(outcome.order, vec![1, 0]);

        let outcome = sort_repeating(&["ba", "ab", "abab"]).unwrap();
        assert_eq!(outcome.tie_groups, vec![vec![1, 2], vec![0]]);

        assert_eq!(sort_repeating::<&str>(&[]).unwrap(), SortOutcome::default());
        assert_eq!(sort_repeating(&["a", ""]), Err(Error::EmptyWord));
    }

    #[test]
    fn inf_order_examples() {
        let words = ["122", "12", "121212", "121", "1212"];
        let order = sort_by_inf_order(&words).unwrap();
        assert_eq!(pick(&words, &order), ["121", "12", "1212", "121212", "122"]);
        assert_eq!(sort_by_inf_order(&["x"]).unwrap(), vec![0]);
        assert_eq!(sort_by_inf_order(&["ab", "ab"]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn stats_respect_bounds() {
        let words = ["a", "ab", "aab", "aaab"];
        let (_, stats) = sort_primitive_distinct_with_stats(&words).unwrap();
        assert_eq!(stats.total_length, 10);
        // degrees 3, 1, 1, 1
        assert_eq!(stats.n_total, 3 + 2 + 3 + 4);
        assert_eq!(stats.m_total, stats.n_total + 2 * stats.total_length);
        assert!(stats.within_bounds());
    }
}

//! Slow reference implementations.
//!
//! Each one takes the most direct route to its answer and shares no code
//! path with the fast module it checks.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::order::cmp_repeat_oracle;
use crate::rearrange::{ConcatPlan, Objective};
use crate::sorter::SortOutcome;
use crate::word::{non_empty, Word};
use crate::words::RootDecomposition;

/// Largest list [`brute_rearrange`] accepts (8! = 40320 permutations).
pub const MAX_BRUTE_WORDS: usize = 8;

/// Root by trying every divisor of `|a|` in ascending order.
pub fn brute_root(a: &[u8]) -> Result<RootDecomposition> {
    let a = non_empty(a)?;
    let n = a.len();
    let period = (1..=n)
        .filter(|p| n % p == 0)
        .find(|&p| a.chunks_exact(p).all(|c| c == &a[..p]))
        .unwrap_or(n);
    Ok(RootDecomposition {
        root: Word::new(&a[..period])?,
        exponent: n / period,
    })
}

/// Comparison sort under [`cmp_repeat_oracle`], tie-broken by length and then
/// input index.
pub fn naive_sort<W: AsRef<[u8]>>(words: &[W]) -> Result<SortOutcome> {
    for w in words {
        non_empty(w.as_ref())?;
    }
    let repeat = |i: usize, j: usize| {
        cmp_repeat_oracle(words[i].as_ref(), words[j].as_ref()).expect("words checked non-empty")
    };
    let mut order: Vec<usize> = (0..words.len()).collect();
    // Stable, so equal keys stay in index order.
    order.sort_by(|&i, &j| {
        repeat(i, j).then_with(|| words[i].as_ref().len().cmp(&words[j].as_ref().len()))
    });

    let mut tie_groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match tie_groups.last_mut() {
            Some(group) if repeat(group[0], i) == Ordering::Equal => group.push(i),
            _ => tie_groups.push(vec![i]),
        }
    }
    let root_lengths = tie_groups
        .iter()
        .map(|g| brute_root(words[g[0]].as_ref()).map(|d| d.root.len()))
        .collect::<Result<_>>()?;
    Ok(SortOutcome {
        order,
        tie_groups,
        root_lengths,
    })
}

/// Tries all `n!` arrangements. The returned permutation is the first optimal
/// one in lexicographic order of index sequences.
pub fn brute_rearrange<W: AsRef<[u8]>>(words: &[W], objective: Objective) -> Result<ConcatPlan> {
    if words.is_empty() {
        return Err(Error::EmptyInput);
    }
    if words.len() > MAX_BRUTE_WORDS {
        return Err(Error::TooLarge {
            n: words.len(),
            max: MAX_BRUTE_WORDS,
        });
    }
    for w in words {
        non_empty(w.as_ref())?;
    }

    let mut perm: Vec<usize> = (0..words.len()).collect();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut ties = 0usize;
    loop {
        let s: Vec<u8> = perm
            .iter()
            .flat_map(|&i| words[i].as_ref())
            .copied()
            .collect();
        let better = match &best {
            None => Ordering::Greater,
            Some((b, _)) => match objective {
                Objective::Minimal => b.cmp(&s),
                Objective::Maximal => s.cmp(b),
            },
        };
        match better {
            Ordering::Greater => {
                best = Some((s, perm.clone()));
                ties = 1;
            }
            Ordering::Equal => ties += 1,
            Ordering::Less => {}
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let (result, permutation) = best.expect("at least one permutation");
    Ok(ConcatPlan {
        permutation,
        result,
        objective,
        unique: ties == 1,
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

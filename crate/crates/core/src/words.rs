//! Word arithmetic: powers, borders, primitive roots and prefix-power degrees.

use crate::error::Result;
use crate::word::{non_empty, Word};

/// A word written as `root^exponent` with `root` primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
}

impl RootDecomposition {
    /// Rebuilds the decomposed word.
    pub fn expand(&self) -> Vec<u8> {
        power(&self.root, self.exponent)
    }
}

/// `a` concatenated `n` times. `n == 0` yields the empty sequence.
///
/// Panics with a capacity overflow if `n * a.len()` does not fit in memory.
pub fn power(a: &[u8], n: usize) -> Vec<u8> {
    a.repeat(n)
}

/// Failure function of `a`: entry `i` is the length of the longest proper
/// border of `a[..=i]`.
pub fn failure_function(a: &[u8]) -> Vec<usize> {
    let mut fail = Vec::new();
    fill_failure_function(a, &mut fail);
    fail
}

fn fill_failure_function(a: &[u8], fail: &mut Vec<usize>) {
    fail.clear();
    fail.resize(a.len(), 0);
    let mut matched = 0;
    for i in 1..a.len() {
        while matched > 0 && a[matched] != a[i] {
            matched = fail[matched - 1];
        }
        if a[matched] == a[i] {
            matched += 1;
        }
        fail[i] = matched;
    }
}

/// Length of the longest proper border of `a` (a prefix that is also a
/// suffix), in `O(|a|)` time.
pub fn border_length(a: &[u8]) -> Result<usize> {
    let a = non_empty(a)?;
    Ok(longest_border(a))
}

fn longest_border(a: &[u8]) -> usize {
    longest_border_in(a, &mut Vec::new())
}

// Runs the failure-function recurrence but falls back through Knuth's
// optimized table: `next[j]` skips every border candidate whose following
// symbol equals `a[j]`, since that candidate must fail too. The running
// match length still follows the classical failure function, so its final
// value is the longest border. Entries are stored shifted by one so that 0
// stands for "no candidate left".
fn longest_border_in(a: &[u8], next: &mut Vec<usize>) -> usize {
    let n = a.len();
    next.clear();
    next.resize(n, 0);
    let mut k = 0; // border length + 1 of the prefix read so far, before a[0]: "-1"
    for i in 0..n {
        while k > 0 && a[k - 1] != a[i] {
            k = next[k - 1];
        }
        k += 1;
        // Now k - 1 is the longest border of a[..=i].
        let j = i + 1;
        if j < n {
            next[j] = if a[k - 1] == a[j] { next[k - 1] } else { k };
        }
    }
    k - 1
}

/// Length of the primitive root of `a`.
///
/// With `j` the longest border and `k = |a| - j`, the root has length `k`
/// when `k` divides `|a|` and `|a|` otherwise.
pub fn root_length(a: &[u8]) -> Result<usize> {
    root_length_in(a, &mut Vec::new())
}

/// [`root_length`] reusing `scratch` for the failure table.
pub fn root_length_in(a: &[u8], scratch: &mut Vec<usize>) -> Result<usize> {
    let a = non_empty(a)?;
    let period = a.len() - longest_border_in(a, scratch);
    Ok(if a.len() % period == 0 {
        period
    } else {
        a.len()
    })
}

pub fn root(a: &[u8]) -> Result<RootDecomposition> {
    let len = root_length(a)?;
    Ok(RootDecomposition {
        root: Word::new(&a[..len])?,
        exponent: a.len() / len,
    })
}

pub fn is_primitive(a: &[u8]) -> Result<bool> {
    Ok(root_length(a)? == a.len())
}

/// Largest `d` such that `s^d` is a prefix of `a`.
pub fn deg_word(s: &[u8], a: &[u8]) -> Result<usize> {
    let s = non_empty(s)?;
    let a = non_empty(a)?;
    Ok(a.chunks_exact(s.len())
        .take_while(|chunk| *chunk == s)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn brute_border(a: &[u8]) -> usize {
        (0..a.len())
            .rev()
            .find(|&j| a[..j] == a[a.len() - j..])
            .unwrap()
    }

    fn brute_root_len(a: &[u8]) -> usize {
        (1..=a.len())
            .filter(|p| a.len().is_multiple_of(*p))
            .find(|&p| a[..p].repeat(a.len() / p) == a)
            .unwrap()
    }

    fn brute_deg(s: &[u8], a: &[u8]) -> usize {
        (0..=a.len() / s.len() + 1)
            .take_while(|&d| a.starts_with(&s.repeat(d)))
            .last()
            .unwrap()
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(b"ab", 3), b"ababab");
        assert_eq!(power(b"x", 0), b"");
        assert_eq!(power(b"12", 2), b"1212");
    }

    #[test]
    fn border_examples() {
        for (w, expected) in [("aabaa", 2), ("abc", 0), ("aaaa", 3)] {
            assert_eq!(brute_border(w.as_bytes()), expected, "{w}");
            assert_eq!(border_length(w.as_bytes()).unwrap(), expected, "{w}");
        }
        assert_eq!(border_length(b""), Err(Error::EmptyWord));
    }

    #[test]
    fn root_examples() {
        for (w, r, k) in [("aaa", "a", 3), ("aabaab", "aab", 2), ("aabaa", "aabaa", 1)] {
            assert_eq!(brute_root_len(w.as_bytes()), r.len(), "{w}");
            let dec = root(w.as_bytes()).unwrap();
            assert_eq!(dec.root.as_bytes(), r.as_bytes());
            assert_eq!(dec.exponent, k);
        }
        assert_eq!(root(b""), Err(Error::EmptyWord));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(b"121").unwrap());
        assert!(!is_primitive(b"1212").unwrap());
        assert!(is_primitive(b"a").unwrap());
        assert_eq!(is_primitive(b""), Err(Error::EmptyWord));
    }

    #[test]
    fn deg_examples() {
        for (s, a, d) in [("a", "aaab", 3), ("ab", "ba", 0), ("12", "1212", 2)] {
            assert_eq!(brute_deg(s.as_bytes(), a.as_bytes()), d);
            assert_eq!(deg_word(s.as_bytes(), a.as_bytes()).unwrap(), d);
        }
        assert_eq!(deg_word(b"", b"a"), Err(Error::EmptyWord));
        assert_eq!(deg_word(b"a", b""), Err(Error::EmptyWord));
    }

    fn small_word(alphabet: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0..alphabet, 1..=max_len)
    }

    fn forced_power() -> impl Strategy<Value = Vec<u8>> {
        (small_word(2, 5), 1usize..6).prop_map(|(u, k)| u.repeat(k))
    }

    proptest! {
        #[test]
        fn root_round_trip(a in prop_oneof![small_word(3, 24), forced_power()]) {
            let dec = root(&a).unwrap();
            prop_assert_eq!(dec.expand(), a.clone());
            prop_assert!(is_primitive(&dec.root).unwrap());
            prop_assert_eq!(dec.root.len(), brute_root_len(&a));
        }

        #[test]
        fn root_is_minimal(a in prop_oneof![small_word(2, 24), forced_power()]) {
            let len = root_length(&a).unwrap();
            for p in (1..len).filter(|p| a.len() % p == 0) {
                prop_assert_ne!(a[..p].repeat(a.len() / p), a.clone());
            }
        }

        #[test]
        fn border_matches_brute_force(a in prop_oneof![small_word(2, 30), forced_power()]) {
            prop_assert_eq!(border_length(&a).unwrap(), brute_border(&a));
        }

        #[test]
        fn deg_is_tight(s in small_word(2, 3), a in prop_oneof![small_word(2, 16), forced_power()]) {
            let d = deg_word(&s, &a).unwrap();
            prop_assert!(a.starts_with(&power(&s, d)));
            prop_assert!(!a.starts_with(&power(&s, d + 1)));
            prop_assert!(d <= a.len() / s.len());
        }
    }
}

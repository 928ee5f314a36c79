//! Prefix trees over byte words.
//!
//! The trie is path-compressed: each edge carries a label that points into
//! one of the inserted words instead of one node per symbol. Walks still go
//! symbol by symbol, so every query has the same cost and answer as on the
//! uncompressed trie, but memory grows with the number of words rather than
//! their total length.
//!
//! Inserted words are anything implementing [`Symbols`]: plain byte slices,
//! or a [`Power`] that reads `base^k` out of `base` without building it.

use crate::error::{Error, Result};
use crate::word::non_empty;

type NodeId = usize;

const ROOT: NodeId = 0;

/// A finite symbol sequence readable as contiguous runs of bytes.
pub trait Symbols {
    fn symbol_len(&self) -> usize;

    /// The longest contiguous run starting at `pos`; non-empty for
    /// `pos < symbol_len()` and never extending past the end.
    fn run(&self, pos: usize) -> &[u8];

    fn at(&self, pos: usize) -> u8 {
        self.run(pos)[0]
    }
}

impl Symbols for [u8] {
    fn symbol_len(&self) -> usize {
        self.len()
    }

    fn run(&self, pos: usize) -> &[u8] {
        &self[pos..]
    }
}

/// `base` repeated `exponent` times, read in place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Power<'a> {
    base: &'a [u8],
    exponent: usize,
}

impl<'a> Power<'a> {
    pub fn new(base: &'a [u8], exponent: usize) -> Self {
        Power { base, exponent }
    }

    /// The longest power of `base` whose length is addressable.
    fn unbounded(base: &'a [u8]) -> Self {
        Power::new(base, usize::MAX / base.len())
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.base.repeat(self.exponent)
    }
}

impl Symbols for Power<'_> {
    fn symbol_len(&self) -> usize {
        self.base.len() * self.exponent
    }

    fn run(&self, pos: usize) -> &[u8] {
        &self.base[pos % self.base.len()..]
    }
}

#[derive(Debug, Clone)]
struct Node {
    // Edge label from the parent: symbols `start..end` of `words[source]`.
    source: usize,
    start: usize,
    end: usize,
    // Sorted by symbol.
    children: Vec<(u8, NodeId)>,
    // Input indices of the words ending here, in insertion order.
    terminals: Vec<usize>,
    word_id: Option<usize>,
}

impl Node {
    fn leaf(source: usize, start: usize, end: usize) -> Self {
        Node {
            source,
            start,
            end,
            children: Vec::new(),
            terminals: Vec::new(),
            word_id: None,
        }
    }

    fn child(&self, symbol: u8) -> Option<NodeId> {
        self.children
            .binary_search_by_key(&symbol, |&(s, _)| s)
            .ok()
            .map(|pos| self.children[pos].1)
    }
}

/// Trie over a set of words with terminal markers carrying input indices.
#[derive(Debug, Clone)]
pub struct Trie<'w, S: ?Sized = [u8]> {
    nodes: Vec<Node>,
    words: Vec<&'w S>,
}

impl<S: ?Sized> Default for Trie<'_, S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: ?Sized> Trie<'_, S> {
    pub fn new() -> Self {
        Trie {
            nodes: vec![Node::leaf(0, 0, 0)],
            words: Vec::new(),
        }
    }
}

impl<'w, S: Symbols + ?Sized> Trie<'w, S> {
    /// Inserts `word` under input index `index` and returns its distinct-word
    /// identifier. Re-inserting an equal word returns the existing identifier.
    pub fn insert(&mut self, word: &'w S, index: usize) -> Result<usize> {
        let len = word.symbol_len();
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        let mut node = ROOT;
        let mut pos = 0;
        while pos < len {
            let symbol = word.at(pos);
            let Some(child) = self.nodes[node].child(symbol) else {
                let leaf = self.nodes.len();
                self.nodes.push(Node::leaf(self.words.len(), pos, len));
                let children = &mut self.nodes[node].children;
                let slot = children.partition_point(|&(s, _)| s < symbol);
                children.insert(slot, (symbol, leaf));
                node = leaf;
                break;
            };
            let Node {
                source, start, end, ..
            } = self.nodes[child];
            let span = (end - start).min(len - pos);
            let common = common_prefix_at(self.words[source], start, word, pos, span);
            if common < end - start {
                self.split(node, child, common);
                node = self.nodes.len() - 1;
            } else {
                node = child;
            }
            pos += common;
        }
        let target = &mut self.nodes[node];
        target.terminals.push(index);
        Ok(*target.word_id.get_or_insert_with(|| {
            self.words.push(word);
            self.words.len() - 1
        }))
    }

    // Splits the edge into `child` after `at` symbols; the new middle node is
    // pushed last.
    fn split(&mut self, parent: NodeId, child: NodeId, at: usize) {
        let mid = self.nodes.len();
        let (source, start) = (self.nodes[child].source, self.nodes[child].start);
        let mut middle = Node::leaf(source, start, start + at);
        middle
            .children
            .push((self.words[source].at(start + at), child));
        self.nodes[child].start += at;
        self.nodes.push(middle);
        let first = self.words[source].at(start);
        let children = &mut self.nodes[parent].children;
        let slot = children
            .binary_search_by_key(&first, |&(s, _)| s)
            .expect("split edge must exist");
        children[slot].1 = mid;
    }

    /// Number of distinct words stored.
    pub fn distinct_len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Distinct words in order of first insertion.
    pub fn distinct_words(&self) -> &[&'w S] {
        &self.words
    }

    /// Nodes actually allocated (branching and terminal points only).
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes the equivalent one-symbol-per-edge trie would have.
    pub fn symbol_node_count(&self) -> usize {
        1 + self.nodes[1..]
            .iter()
            .map(|n| n.end - n.start)
            .sum::<usize>()
    }

    /// True when no stored word is a proper prefix of another.
    pub fn is_prefix_free(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.word_id.is_none() || n.children.is_empty())
    }

    /// Walks from the root reading `a` cyclically for as long as the path
    /// exists, and returns how many whole copies of `a` were read. This is the
    /// largest `d` such that `a^d` is a prefix of some stored word.
    pub fn deg_set(&self, a: &[u8]) -> Result<usize> {
        let a = non_empty(a)?;
        if self.is_empty() {
            return Err(Error::EmptyInput);
        }
        let query = Power::unbounded(a);
        let mut node = ROOT;
        let mut matched = 0;
        while let Some(child) = self.nodes[node].child(query.at(matched)) {
            let Node {
                source, start, end, ..
            } = self.nodes[child];
            let read = common_prefix_at(self.words[source], start, &query, matched, end - start);
            matched += read;
            if read < end - start {
                break;
            }
            node = child;
        }
        Ok(matched / a.len())
    }

    /// Input indices in lexicographic order of their words. A word is emitted
    /// before its extensions; equal words keep insertion order.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.iter().map(|n| n.terminals.len()).sum());
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            out.extend_from_slice(&node.terminals);
            stack.extend(node.children.iter().rev().map(|&(_, c)| c));
        }
        out
    }
}

// Length of the common prefix of `x[xpos..]` and `y[ypos..]`, capped at
// `limit`; both sides must hold at least `limit` symbols.
fn common_prefix_at<X, Y>(x: &X, xpos: usize, y: &Y, ypos: usize, limit: usize) -> usize
where
    X: Symbols + ?Sized,
    Y: Symbols + ?Sized,
{
    let mut done = 0;
    while done < limit {
        let (rx, ry) = (x.run(xpos + done), y.run(ypos + done));
        let span = rx.len().min(ry.len()).min(limit - done);
        let same = common_prefix(&rx[..span], &ry[..span]);
        done += same;
        if same < span {
            break;
        }
    }
    done
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    const BLOCK: usize = 32;
    let len = a.len().min(b.len());
    let (a, b) = (&a[..len], &b[..len]);
    let whole = a
        .chunks_exact(BLOCK)
        .zip(b.chunks_exact(BLOCK))
        .take_while(|(x, y)| x == y)
        .count()
        * BLOCK;
    whole
        + a[whole..]
            .iter()
            .zip(&b[whole..])
            .take_while(|(x, y)| x == y)
            .count()
}

/// Builds the trie of `words`, returning it with the map from each input
/// index to its distinct-word identifier.
pub fn build_trie<W: AsRef<[u8]>>(words: &[W]) -> Result<(Trie<'_>, Vec<usize>)> {
    build_trie_of(words.iter().map(AsRef::as_ref))
}

/// [`build_trie`] for any symbol source.
pub fn build_trie_of<'w, S, I>(words: I) -> Result<(Trie<'w, S>, Vec<usize>)>
where
    S: Symbols + ?Sized + 'w,
    I: IntoIterator<Item = &'w S>,
{
    let mut trie = Trie::new();
    let ids = words
        .into_iter()
        .enumerate()
        .map(|(i, w)| trie.insert(w, i))
        .collect::<Result<Vec<_>>>()?;
    Ok((trie, ids))
}

/// Sorts `words` lexicographically through a trie; returns input indices.
pub fn lex_rank_words<W: AsRef<[u8]>>(words: &[W]) -> Result<Vec<usize>> {
    Ok(build_trie(words)?.0.lex_order())
}

/// Per-word degrees against a word set, with the lengths of the derived
/// powers `N_i = A_i^d_i` and `M_i = A_i^(d_i + 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub degrees: Vec<usize>,
    pub n_lengths: Vec<usize>,
    pub m_lengths: Vec<usize>,
}

impl DegreeTable {
    pub fn compute<S, W>(trie: &Trie<'_, S>, words: &[W]) -> Result<Self>
    where
        S: Symbols + ?Sized,
        W: AsRef<[u8]>,
    {
        let mut degrees = Vec::with_capacity(words.len());
        let mut n_lengths = Vec::with_capacity(words.len());
        let mut m_lengths = Vec::with_capacity(words.len());
        for w in words {
            let w = w.as_ref();
            let d = trie.deg_set(w)?;
            degrees.push(d);
            n_lengths.push(d * w.len());
            m_lengths.push((d + 2) * w.len());
        }
        Ok(DegreeTable {
            degrees,
            n_lengths,
            m_lengths,
        })
    }

    pub fn n_total(&self) -> usize {
        self.n_lengths.iter().sum()
    }

    pub fn m_total(&self) -> usize {
        self.m_lengths.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::deg_word;
    use proptest::prelude::*;

    #[test]
    fn build_deduplicates() {
        let words = ["ab", "ab", "b"];
        let (trie, ids) = build_trie(&words).unwrap();
        assert_eq!(ids, vec![0, 0, 1]);
        assert_eq!(trie.distinct_len(), 2);
        assert_eq!(trie.lex_order(), vec![0, 1, 2]);

        let (trie, ids) = build_trie(&["a"]).unwrap();
        assert_eq!(ids, vec![0]);
        assert_eq!(trie.symbol_node_count(), 2);

        // 1 -> 2 -> {1, 3}: root plus four symbol nodes.
        let (trie, _) = build_trie(&["12", "121", "123"]).unwrap();
        assert_eq!(trie.distinct_len(), 3);
        assert_eq!(trie.symbol_node_count(), 5);
        assert!(!trie.is_prefix_free());
    }

    #[test]
    fn build_rejects_empty_word() {
        assert_eq!(build_trie(&["a", ""]).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn deg_set_examples() {
        let (trie, _) = build_trie(&["a", "ab", "aab"]).unwrap();
        assert_eq!(trie.deg_set(b"a").unwrap(), 2);
        let (trie, _) = build_trie(&["12", "121", "123"]).unwrap();
        assert_eq!(trie.deg_set(b"121").unwrap(), 1);
        let (trie, _) = build_trie(&["ba"]).unwrap();
        assert_eq!(trie.deg_set(b"ab").unwrap(), 0);
        assert_eq!(trie.deg_set(b""), Err(Error::EmptyWord));
        assert_eq!(Trie::<[u8]>::new().deg_set(b"a"), Err(Error::EmptyInput));
    }

    #[test]
    fn lex_rank_examples() {
        let words = ["121212", "121121121", "123123123"];
        let mut expected: Vec<usize> = (0..3).collect();
        expected.sort_by_key(|&i| words[i]);
        assert_eq!(expected, vec![1, 0, 2]);
        assert_eq!(lex_rank_words(&words).unwrap(), expected);
        assert_eq!(lex_rank_words(&["b", "a"]).unwrap(), vec![1, 0]);
        assert_eq!(lex_rank_words(&["ab"]).unwrap(), vec![0]);
    }

    #[test]
    fn degree_table_lengths() {
        let words = ["a", "ab", "aab"];
        let (trie, _) = build_trie(&words).unwrap();
        let table = DegreeTable::compute(&trie, &words).unwrap();
        assert_eq!(table.degrees, vec![2, 1, 1]);
        assert_eq!(table.n_lengths, vec![2, 2, 3]);
        assert_eq!(table.m_lengths, vec![4, 6, 9]);
    }

    fn word_list(
        alphabet: u8,
        max_len: usize,
        max_n: usize,
    ) -> impl Strategy<Value = Vec<Vec<u8>>> {
        prop::collection::vec(prop::collection::vec(0..alphabet, 1..=max_len), 1..=max_n)
    }

    proptest! {
        #[test]
        fn lex_rank_matches_comparison_sort(words in word_list(3, 8, 30)) {
            let mut expected: Vec<usize> = (0..words.len()).collect();
            expected.sort_by(|&i, &j| words[i].cmp(&words[j]));
            prop_assert_eq!(lex_rank_words(&words).unwrap(), expected);
        }

        #[test]
        fn deg_set_is_max_of_deg_word(words in word_list(2, 10, 12), a in prop::collection::vec(0u8..2, 1..4)) {
            let (trie, _) = build_trie(&words).unwrap();
            let expected = words.iter().map(|w| deg_word(&a, w).unwrap()).max().unwrap();
            prop_assert_eq!(trie.deg_set(&a).unwrap(), expected);
        }

        #[test]
        fn common_prefix_matches_bytewise(
            shared in prop::collection::vec(0u8..2, 0..80),
            a in prop::collection::vec(0u8..2, 0..40),
            b in prop::collection::vec(0u8..2, 0..40),
        ) {
            let a = [&shared[..], &a].concat();
            let b = [&shared[..], &b].concat();
            let expected = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
            prop_assert_eq!(common_prefix(&a, &b), expected);
        }

        #[test]
        fn power_trie_matches_materialized(words in word_list(2, 5, 12), k in 1usize..4) {
            let powers: Vec<Power> = words.iter().map(|w| Power::new(w, k)).collect();
            let built: Vec<Vec<u8>> = powers.iter().map(Power::to_vec).collect();
            let (virtual_trie, virtual_ids) = build_trie_of(powers.iter()).unwrap();
            let (plain_trie, plain_ids) = build_trie(&built).unwrap();
            prop_assert_eq!(virtual_trie.lex_order(), plain_trie.lex_order());
            prop_assert_eq!(virtual_ids, plain_ids);
            prop_assert_eq!(virtual_trie.is_prefix_free(), plain_trie.is_prefix_free());
            prop_assert_eq!(virtual_trie.symbol_node_count(), plain_trie.symbol_node_count());
            let a = &words[0];
            prop_assert_eq!(virtual_trie.deg_set(a).unwrap(), plain_trie.deg_set(a).unwrap());
        }

        #[test]
        fn node_count_bound(words in word_list(2, 10, 20)) {
            let (trie, ids) = build_trie(&words).unwrap();
            let distinct_total: usize = trie.distinct_words().iter().map(|w| w.len()).sum();
            prop_assert!(trie.node_count() <= trie.symbol_node_count());
            prop_assert!(trie.symbol_node_count() <= 1 + distinct_total);
            for (i, w) in words.iter().enumerate() {
                prop_assert_eq!(trie.distinct_words()[ids[i]], &w[..]);
            }
        }
    }
}

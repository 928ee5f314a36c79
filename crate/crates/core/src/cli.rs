//! Command implementations behind the `wordsort` binary.
//!
//! Every command renders its report into a byte buffer so that output is
//! byte-exact and testable without spawning a process. Records end with the
//! input delimiter: LF by default, NUL with `--null`.

use std::io::{self, Read};
use std::path::Path;

use thiserror::Error;

use crate::error::Error;
use crate::oracles::{brute_rearrange, naive_sort, MAX_BRUTE_WORDS};
use crate::order::cmp_repeat;
use crate::rearrange::{rearrange, Objective};
use crate::sorter::sort_repeating;
use crate::word::Word;
use crate::words::root;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{kind} {number}: empty word")]
    BlankRecord { kind: &'static str, number: usize },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    /// 1 verification mismatch, 2 usage or input error, 3 I/O error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::BlankRecord { .. } | CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

/// Record terminator of the line format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delimiter {
    Newline,
    Nul,
}

impl Delimiter {
    pub fn byte(self) -> u8 {
        match self {
            Delimiter::Newline => b'\n',
            Delimiter::Nul => 0,
        }
    }

    fn record_kind(self) -> &'static str {
        match self {
            Delimiter::Newline => "line",
            Delimiter::Nul => "record",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortMode {
    Repeat,
    Inf,
}

/// Reads the whole input from `path`, or standard input for `None` or `-`.
pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match path {
        Some(p) if p != Path::new("-") => buf = std::fs::read(p)?,
        _ => {
            io::stdin().lock().read_to_end(&mut buf)?;
        }
    }
    Ok(buf)
}

/// Splits `input` into words. A final terminator does not start another
/// record; any other empty record is an error carrying its 1-based number.
pub fn parse_word_list(input: &[u8], delim: Delimiter) -> Result<Vec<Word>, CliError> {
    let body = input.strip_suffix(&[delim.byte()]).unwrap_or(input);
    if input.is_empty() {
        return Ok(Vec::new());
    }
    body.split(|&b| b == delim.byte())
        .enumerate()
        .map(|(i, rec)| {
            Word::new(rec).map_err(|_| CliError::BlankRecord {
                kind: delim.record_kind(),
                number: i + 1,
            })
        })
        .collect()
}

fn push_record(out: &mut Vec<u8>, fields: &[&[u8]], delim: Delimiter) {
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            out.push(b'\t');
        }
        out.extend_from_slice(f);
    }
    out.push(delim.byte());
}

/// One `word TAB root TAB exponent TAB primitive` record per word.
pub fn cmd_root(words: &[Word], delim: Delimiter) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    for w in words {
        let dec = root(w)?;
        let exponent = dec.exponent.to_string();
        let primitive = if dec.exponent == 1 { "true" } else { "false" };
        push_record(
            &mut out,
            &[w, &dec.root, exponent.as_bytes(), primitive.as_bytes()],
            delim,
        );
    }
    Ok(out)
}

/// `<`, `=` or `>` followed by the witnesses `a·b` and `b·a`.
pub fn cmd_compare(a: &[u8], b: &[u8]) -> Result<Vec<u8>, CliError> {
    let symbol: &[u8] = match cmp_repeat(a, b)? {
        std::cmp::Ordering::Less => b"<",
        std::cmp::Ordering::Equal => b"=",
        std::cmp::Ordering::Greater => b">",
    };
    let mut out = Vec::new();
    push_record(
        &mut out,
        &[symbol, &[a, b].concat(), &[b, a].concat()],
        Delimiter::Newline,
    );
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortOptions {
    pub mode: SortMode,
    /// Separate tie groups by an empty record (repeat mode only).
    pub groups: bool,
    /// Cross-check against the comparison-sort oracle.
    pub verify: bool,
}

pub fn cmd_sort(words: &[Word], opts: SortOptions, delim: Delimiter) -> Result<Vec<u8>, CliError> {
    if opts.groups && opts.mode == SortMode::Inf {
        return Err(CliError::Usage(
            "--groups is only meaningful with --mode=repeat".into(),
        ));
    }
    let outcome = sort_repeating(words)?;
    if opts.verify {
        let reference = naive_sort(words)?;
        if reference != outcome {
            return Err(CliError::Verify(format!(
                "linear order {:?} differs from reference order {:?}",
                outcome.order, reference.order
            )));
        }
    }
    let mut out = Vec::new();
    if opts.groups {
        for (g, group) in outcome.tie_groups.iter().enumerate() {
            if g > 0 {
                out.push(delim.byte());
            }
            for &i in group {
                push_record(&mut out, &[&words[i]], delim);
            }
        }
    } else {
        for &i in &outcome.order {
            push_record(&mut out, &[&words[i]], delim);
        }
    }
    Ok(out)
}

/// Extremal concatenation on the first record, the permutation (0-based
/// input indices, space-separated) on the second.
pub fn cmd_rearrange(
    words: &[Word],
    objective: Objective,
    verify: bool,
    delim: Delimiter,
) -> Result<Vec<u8>, CliError> {
    if verify && words.len() > MAX_BRUTE_WORDS {
        return Err(CliError::Usage(format!(
            "--verify supports at most {MAX_BRUTE_WORDS} words, got {}",
            words.len()
        )));
    }
    let plan = rearrange(words, objective)?;
    if verify {
        let reference = brute_rearrange(words, objective)?;
        if reference.result != plan.result || reference.unique != plan.unique {
            return Err(CliError::Verify(format!(
                "exhaustive search found \"{}\" (unique: {}), linear plan gave \"{}\" (unique: {})",
                reference.result.escape_ascii(),
                reference.unique,
                plan.result.escape_ascii(),
                plan.unique
            )));
        }
    }
    let permutation = plan
        .permutation
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let mut out = Vec::new();
    push_record(&mut out, &[&plan.result], delim);
    push_record(&mut out, &[permutation.as_bytes()], delim);
    Ok(out)
}

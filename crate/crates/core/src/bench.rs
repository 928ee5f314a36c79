//! Scaling benchmark of the linear sorter against the comparison-sort
//! baseline on inputs with long shared prefixes.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::oracles::naive_sort;
use crate::sorter::sort_repeating_with_stats;

/// Symbol repeated to form the shared prefix.
pub const PREFIX_SYMBOL: u8 = b'a';

/// Every byte except [`PREFIX_SYMBOL`], starting at `0x01` so small cases
/// read `\x01, \x02, ...`; `0x00` comes last.
const TAIL_BASE: usize = 255;

fn tail_symbol(digit: usize) -> u8 {
    debug_assert!(digit < TAIL_BASE);
    let b = digit + 1;
    match b {
        _ if b < PREFIX_SYMBOL as usize => b as u8,
        _ if b < 255 => (b + 1) as u8,
        _ => 0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub generator: &'static str,
    pub n: usize,
    pub m: usize,
    pub words: Vec<Vec<u8>>,
    pub total_length: usize,
}

/// `n` words made of `m` copies of [`PREFIX_SYMBOL`] followed by a distinct
/// fixed-width tail of non-prefix symbols. All words are primitive and
/// pairwise distinct.
pub fn gen_adversarial(n: usize, m: usize) -> Result<BenchCase> {
    if n == 0 || m == 0 {
        return Err(Error::BadParameter(format!(
            "word count and prefix length must be positive (n = {n}, m = {m})"
        )));
    }
    let mut width = 1;
    let mut capacity = TAIL_BASE;
    while capacity < n {
        width += 1;
        capacity = capacity.saturating_mul(TAIL_BASE);
    }
    let words: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut w = vec![PREFIX_SYMBOL; m + width];
            let mut rest = i;
            for slot in w[m..].iter_mut().rev() {
                *slot = tail_symbol(rest % TAIL_BASE);
                rest /= TAIL_BASE;
            }
            w
        })
        .collect();
    Ok(BenchCase {
        generator: "adversarial",
        n,
        m,
        total_length: n * (m + width),
        words,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub total_length: usize,
    pub linear: Duration,
    pub naive: Duration,
    /// Both sorters returned the same outcome on every repetition.
    pub agree: bool,
    /// `linear / previous row's linear`; `None` on the first row.
    pub linear_growth: Option<f64>,
    pub naive_growth: Option<f64>,
    pub length_growth: Option<f64>,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.naive.as_secs_f64() / self.linear.as_secs_f64().max(f64::MIN_POSITIVE)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn table(&self) -> String {
        let ratio = |r: Option<f64>| r.map_or_else(|| "-".to_string(), |x| format!("{x:.2}"));
        let mut out = String::new();
        writeln!(
            out,
            "{:>7} {:>7} {:>11} {:>14} {:>14} {:>8} {:>8} {:>8} {:>8}",
            "n", "m", "L", "linear_ns", "naive_ns", "L_x", "lin_x", "naive_x", "speedup"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>7} {:>7} {:>11} {:>14} {:>14} {:>8} {:>8} {:>8} {:>8.2}",
                r.n,
                r.m,
                r.total_length,
                r.linear.as_nanos(),
                r.naive.as_nanos(),
                ratio(r.length_growth),
                ratio(r.linear_growth),
                ratio(r.naive_growth),
                r.speedup()
            )
            .unwrap();
        }
        out
    }

    /// One `n,m,L,t_linear_ns,t_naive_ns` line per case.
    pub fn records(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    r.m,
                    r.total_length,
                    r.linear.as_nanos(),
                    r.naive.as_nanos()
                )
            })
            .collect()
    }
}

pub const MIN_REPS: usize = 3;

/// Shortest wall time a single sample may cover; faster runs are repeated
/// and averaged within the sample.
pub const MIN_SAMPLE: Duration = Duration::from_millis(100);

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

// Per-run time of `f`, averaged over as many back-to-back runs as fit in
// `MIN_SAMPLE`.
fn sample<T>(mut f: impl FnMut() -> Result<T>) -> Result<(Duration, T)> {
    let start = Instant::now();
    let mut runs = 1u32;
    let mut last = f()?;
    while start.elapsed() < MIN_SAMPLE {
        drop(last);
        last = f()?;
        runs += 1;
    }
    Ok((start.elapsed() / runs, last))
}

/// Runs both sorters on `gen_adversarial(n, m)` for each `(n, m)`, after one
/// warm-up round, and reports the median of `reps` timed samples. Samples are
/// taken in rounds over all sizes so that a slow stretch hits every size once.
pub fn run_scaling(sizes: &[(usize, usize)], reps: usize) -> Result<BenchReport> {
    if sizes.is_empty() {
        return Err(Error::BadParameter("no benchmark sizes given".into()));
    }
    if reps < MIN_REPS {
        return Err(Error::BadParameter(format!(
            "at least {MIN_REPS} repetitions are required, got {reps}"
        )));
    }
    let cases = sizes
        .iter()
        .map(|&(n, m)| gen_adversarial(n, m))
        .collect::<Result<Vec<_>>>()?;
    let mut linear = vec![Vec::with_capacity(reps); cases.len()];
    let mut naive = vec![Vec::with_capacity(reps); cases.len()];
    let mut fast = Vec::with_capacity(cases.len());
    let mut agree = vec![true; cases.len()];
    for round in 0..=reps {
        for (i, case) in cases.iter().enumerate() {
            let (t, (outcome, stats)) = sample(|| sort_repeating_with_stats(&case.words))?;
            debug_assert!(stats.within_bounds());
            if round == 0 {
                fast.push(outcome);
            } else {
                agree[i] &= fast[i] == outcome;
                linear[i].push(t);
            }
        }
        for (i, case) in cases.iter().enumerate() {
            let (t, slow) = sample(|| naive_sort(&case.words))?;
            agree[i] &= fast[i] == slow;
            if round > 0 {
                naive[i].push(t);
            }
        }
    }

    let mut report = BenchReport::default();
    for (i, case) in cases.iter().enumerate() {
        let prev = report.rows.last();
        let growth = |now: Duration, before: Option<Duration>| {
            before.map(|b| now.as_secs_f64() / b.as_secs_f64().max(f64::MIN_POSITIVE))
        };
        let (linear, naive) = (median(linear[i].clone()), median(naive[i].clone()));
        let row = BenchRow {
            n: case.n,
            m: case.m,
            total_length: case.total_length,
            linear,
            naive,
            agree: agree[i],
            linear_growth: growth(linear, prev.map(|p| p.linear)),
            naive_growth: growth(naive, prev.map(|p| p.naive)),
            length_growth: prev.map(|p| case.total_length as f64 / p.total_length as f64),
        };
        report.rows.push(row);
    }
    Ok(report)
}

/// Parses `"n:m,n:m,..."`.
pub fn parse_sizes(spec: &str) -> Result<Vec<(usize, usize)>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let bad = || Error::BadParameter(format!("size `{pair}` is not of the form n:m"));
            let (n, m) = pair.split_once(':').ok_or_else(bad)?;
            Ok((
                n.trim().parse().map_err(|_| bad())?,
                m.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::BadParameter("no benchmark sizes given".into()))
            } else {
                Ok(v)
            }
        })
}

//! Exhaustive searches for the largest switch count over all automata of a
//! given shape.
//!
//! Transition tables are enumerated in mixed radix: entry `i` of the
//! row-major table is digit `i` (least significant first) of the index in
//! base `n`. Work is split into shards of consecutive indices that run in
//! parallel and merge into one report.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::automaton::{Dfa, IsoConvention};
use crate::synchro::{is_synchronizing, SwitchSearch};

/// Spaces larger than this need an explicit override.
pub const DEFAULT_SPACE_LIMIT: u128 = 100_000_000;

/// Largest state count for cyclic searches.
pub const MAX_CYCLIC_STATES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space of {size} automata (n = {n}, k = {k}) exceeds {limit}; pass the long-run override")]
    SpaceTooLarge {
        n: usize,
        k: usize,
        size: u128,
        limit: u128,
    },
    #[error("cyclic search needs 1 <= n <= {MAX_CYCLIC_STATES} and k in {{2, 3}}, got n = {n}, k = {k}")]
    CyclicBounds { n: usize, k: usize },
    #[error("cannot merge reports for (n, k) = {left:?} and {right:?}")]
    Mismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("search needs n >= 1 and k >= 1")]
    Empty,
    #[error(transparent)]
    Dfa(#[from] crate::automaton::DfaError),
}

/// Which automata a search enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    /// Every table with `n` states and `k` symbols.
    All,
    /// Symbol 0 is the cycle `q -> q + 1 mod n`; the other columns vary.
    Cyclic,
}

/// A half-open range of enumeration indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub n: usize,
    pub k: usize,
    pub space: Space,
    pub start: u64,
    pub end: u64,
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Number of free table entries in a space.
fn free_entries(n: usize, k: usize, space: Space) -> usize {
    match space {
        Space::All => n * k,
        Space::Cyclic => n * (k - 1),
    }
}

/// Size of the space, `n^(free entries)`.
pub fn space_size(n: usize, k: usize, space: Space) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..free_entries(n, k, space) {
        size = size.saturating_mul(n as u128);
    }
    size
}

/// Table positions enumerated as digits, least significant first.
fn free_positions(n: usize, k: usize, space: Space) -> Vec<usize> {
    (0..n * k).filter(|i| space == Space::All || i % k != 0).collect()
}

/// The automaton at enumeration index `index`.
pub fn decode(n: usize, k: usize, space: Space, index: u64) -> Dfa {
    let mut table = vec![0u8; n * k];
    if space == Space::Cyclic {
        for q in 0..n {
            table[q * k] = ((q + 1) % n) as u8;
        }
    }
    let mut rest = index;
    for pos in free_positions(n, k, space) {
        table[pos] = (rest % n as u64) as u8;
        rest /= n as u64;
    }
    Dfa::from_raw(n, k, table)
}

/// Inverse of [`decode`]; `None` if the automaton is not in the space.
pub fn encode(dfa: &Dfa, space: Space) -> Option<u64> {
    let (n, k) = (dfa.n(), dfa.k());
    if space == Space::Cyclic && (0..n).any(|q| dfa.step(q, 0) != (q + 1) % n) {
        return None;
    }
    let mut index = 0u64;
    for &pos in free_positions(n, k, space).iter().rev() {
        index = index * n as u64 + dfa.table()[pos] as u64;
    }
    Some(index)
}

/// Splits `0..size` into `count` nearly equal shards.
pub fn shards(n: usize, k: usize, space: Space, count: usize) -> Vec<Shard> {
    let size = space_size(n, k, space) as u64;
    let count = (count.max(1) as u64).min(size.max(1));
    (0..count)
        .map(|i| Shard {
            n,
            k,
            space,
            start: size * i / count,
            end: size * (i + 1) / count,
        })
        .collect()
}

/// Maximum switch count over a set of automata, with the automata that
/// attain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    /// `None` when no synchronizing automaton was seen.
    pub max_sw: Option<usize>,
    /// Extremal automata in canonical form up to state renaming.
    pub forms: BTreeSet<Dfa>,
    pub scanned: u64,
    pub synchronizing: u64,
    pub elapsed: Duration,
}

impl ExtremalReport {
    pub fn empty(n: usize, k: usize) -> Self {
        ExtremalReport {
            n,
            k,
            max_sw: None,
            forms: BTreeSet::new(),
            scanned: 0,
            synchronizing: 0,
            elapsed: Duration::ZERO,
        }
    }

    /// Combines two reports over disjoint parts of the same space.
    pub fn merge(self, other: ExtremalReport) -> Result<ExtremalReport, SearchError> {
        if (self.n, self.k) != (other.n, other.k) {
            return Err(SearchError::Mismatch {
                left: (self.n, self.k),
                right: (other.n, other.k),
            });
        }
        let forms = match self.max_sw.cmp(&other.max_sw) {
            std::cmp::Ordering::Greater => self.forms,
            std::cmp::Ordering::Less => other.forms,
            std::cmp::Ordering::Equal => self.forms.into_iter().chain(other.forms).collect(),
        };
        Ok(ExtremalReport {
            n: self.n,
            k: self.k,
            max_sw: self.max_sw.max(other.max_sw),
            forms,
            scanned: self.scanned + other.scanned,
            synchronizing: self.synchronizing + other.synchronizing,
            elapsed: self.elapsed.max(other.elapsed),
        })
    }

    /// Extremal automata up to isomorphism under `conv`.
    pub fn extremal_forms(&self, conv: IsoConvention) -> BTreeSet<Dfa> {
        match conv {
            IsoConvention::StatesOnly => self.forms.clone(),
            IsoConvention::StatesAndSymbols => self.forms.iter().map(|d| d.canonical_form(conv)).collect(),
        }
    }

    /// Summary line and one DFA block per extremal form under `conv`.
    pub fn render(&self, conv: IsoConvention) -> String {
        let forms = self.extremal_forms(conv);
        let max = self.max_sw.map_or("none".to_string(), |m| m.to_string());
        let mut out = format!(
            "REPORT n={} k={} max={} scanned={} synchronizing={} forms[{}]={} forms[{}]={}\n",
            self.n,
            self.k,
            max,
            self.scanned,
            self.synchronizing,
            IsoConvention::StatesOnly,
            self.forms.len(),
            IsoConvention::StatesAndSymbols,
            self.extremal_forms(IsoConvention::StatesAndSymbols).len(),
        );
        for (i, form) in forms.iter().enumerate() {
            out.push_str(&format!("# form {} ({conv})\n{form}", i + 1));
        }
        out
    }
}

/// Scans one shard with private scratch space.
pub fn scan_shard(shard: &Shard) -> ExtremalReport {
    let started = Instant::now();
    let (n, k) = (shard.n, shard.k);
    let mut report = ExtremalReport::empty(n, k);
    if shard.start >= shard.end {
        return report;
    }
    let positions = free_positions(n, k, shard.space);
    let mut dfa = decode(n, k, shard.space, shard.start);
    let mut search = SwitchSearch::new();
    let mut raw: Vec<Dfa> = Vec::new();
    let mut best: Option<usize> = None;

    for index in shard.start..shard.end {
        if index > shard.start {
            // odometer increment
            let table = dfa.table_mut();
            for &pos in &positions {
                if (table[pos] as usize) + 1 < n {
                    table[pos] += 1;
                    break;
                }
                table[pos] = 0;
            }
        }
        report.scanned += 1;
        if n > 1 && (0..k).all(|s| dfa.is_injective(s)) {
            continue;
        }
        if !is_synchronizing(&dfa) {
            continue;
        }
        report.synchronizing += 1;
        let sw = search.min_switch_count(&dfa).expect("pair criterion passed");
        if best.is_none_or(|b| sw > b) {
            best = Some(sw);
            raw.clear();
        }
        if best == Some(sw) {
            raw.push(dfa.clone());
        }
    }
    report.max_sw = best;
    report.forms = raw
        .iter()
        .map(|d| d.canonical_form(IsoConvention::StatesOnly))
        .collect();
    report.elapsed = started.elapsed();
    report
}

/// Parameters shared by both searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Number of shards; 0 picks a default from the worker count.
    pub shards: usize,
    /// Worker threads; 0 uses the available parallelism.
    pub jobs: usize,
    /// Lift the space-size guard.
    pub allow_long: bool,
}

fn run(
    n: usize,
    k: usize,
    space: Space,
    opts: &SearchOptions,
    progress: &(dyn Fn(&Shard, &ExtremalReport) + Sync),
) -> Result<ExtremalReport, SearchError> {
    let size = space_size(n, k, space);
    if size > DEFAULT_SPACE_LIMIT && !opts.allow_long {
        return Err(SearchError::SpaceTooLarge {
            n,
            k,
            size,
            limit: DEFAULT_SPACE_LIMIT,
        });
    }
    if size > u64::MAX as u128 {
        return Err(SearchError::SpaceTooLarge {
            n,
            k,
            size,
            limit: u64::MAX as u128,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let count = if opts.shards > 0 {
        opts.shards
    } else {
        pool.current_num_threads() * 8
    };
    let started = Instant::now();
    let parts = shards(n, k, space, count);
    let merged = pool.install(|| {
        parts
            .par_iter()
            .map(|shard| {
                let r = scan_shard(shard);
                progress(shard, &r);
                r
            })
            .reduce(
                || ExtremalReport::empty(n, k),
                |a, b| a.merge(b).expect("same parameters"),
            )
    });
    Ok(ExtremalReport {
        elapsed: started.elapsed(),
        ..merged
    })
}

/// Largest switch count over all `k`-symbol automata on `n` states.
pub fn extremal_search(
    n: usize,
    k: usize,
    opts: &SearchOptions,
    progress: &(dyn Fn(&Shard, &ExtremalReport) + Sync),
) -> Result<ExtremalReport, SearchError> {
    if n == 0 || k == 0 {
        return Err(SearchError::Empty);
    }
    run(n, k, Space::All, opts, progress)
}

/// Largest switch count over `k`-symbol automata on `n` states whose first
/// symbol is a single `n`-cycle.
pub fn cyclic_extremal_search(
    n: usize,
    k: usize,
    opts: &SearchOptions,
    progress: &(dyn Fn(&Shard, &ExtremalReport) + Sync),
) -> Result<ExtremalReport, SearchError> {
    if !(1..=MAX_CYCLIC_STATES).contains(&n) || !(2..=3).contains(&k) {
        return Err(SearchError::CyclicBounds { n, k });
    }
    run(n, k, Space::Cyclic, opts, progress)
}

/// The `SHARD <range> DONE max=<v> forms=<count>` progress line.
pub fn shard_line(shard: &Shard, report: &ExtremalReport) -> String {
    let max = report.max_sw.map_or("none".to_string(), |m| m.to_string());
    format!("SHARD {shard} DONE max={max} forms={}", report.forms.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(_: &Shard, _: &ExtremalReport) {}

    #[test]
    fn decode_encode_round_trip() {
        for space in [Space::All, Space::Cyclic] {
            let size = space_size(3, 2, space) as u64;
            for i in 0..size {
                assert_eq!(encode(&decode(3, 2, space, i), space), Some(i));
            }
        }
        assert_eq!(space_size(3, 2, Space::All), 729);
        assert_eq!(space_size(3, 2, Space::Cyclic), 27);
    }

    #[test]
    fn shards_partition_the_space() {
        let parts = shards(3, 2, Space::All, 7);
        assert_eq!(parts.first().unwrap().start, 0);
        assert_eq!(parts.last().unwrap().end, 729);
        for w in parts.windows(2) {
            assert_eq!(w[0].end, w[1].start);
        }
        let scanned: u64 = parts.iter().map(|s| scan_shard(s).scanned).sum();
        assert_eq!(scanned, 729);
    }

    #[test]
    fn small_binary_maxima() {
        let r2 = extremal_search(2, 2, &SearchOptions::default(), &quiet).unwrap();
        assert_eq!(r2.max_sw, Some(1));
        let r3 = extremal_search(3, 2, &SearchOptions::default(), &quiet).unwrap();
        assert_eq!(r3.max_sw, Some(3));
        for form in &r3.forms {
            assert_eq!(crate::synchro::min_switch_count(form), Ok(3));
        }
    }

    #[test]
    fn merge_is_commutative_and_has_identity() {
        let halves = shards(3, 2, Space::All, 2);
        let (a, b) = (scan_shard(&halves[0]), scan_shard(&halves[1]));
        let ab = a.clone().merge(b.clone()).unwrap();
        let ba = b.merge(a.clone()).unwrap();
        assert_eq!(ab.forms, ba.forms);
        assert_eq!((ab.max_sw, ab.scanned), (ba.max_sw, ba.scanned));
        let with_empty = a.clone().merge(ExtremalReport::empty(3, 2)).unwrap();
        assert_eq!(with_empty.forms, a.forms);
        assert!(ExtremalReport::empty(3, 2).merge(ExtremalReport::empty(4, 2)).is_err());
    }

    #[test]
    fn guards() {
        assert!(matches!(
            extremal_search(6, 2, &SearchOptions::default(), &quiet),
            Err(SearchError::SpaceTooLarge { .. })
        ));
        assert!(cyclic_extremal_search(10, 2, &SearchOptions::default(), &quiet).is_err());
        assert!(cyclic_extremal_search(5, 4, &SearchOptions::default(), &quiet).is_err());
    }

    #[test]
    fn shard_line_format() {
        let s = shards(2, 2, Space::All, 1)[0];
        let r = scan_shard(&s);
        assert_eq!(
            shard_line(&s, &r),
            format!("SHARD 0..16 DONE max=1 forms={}", r.forms.len())
        );
    }
}

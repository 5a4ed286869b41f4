//! Complete deterministic automata, words over their alphabet and subsets of
//! their states.
//!
//! States are `0..n` and symbols `0..k`. The transition table is stored row
//! major, one row per state, so `delta[q * k + s]` is the successor of `q`
//! under `s`. Initial and final states play no role in synchronization and
//! are not modelled.

mod canon;
mod set;
mod text;
mod word;

use std::sync::OnceLock;

use thiserror::Error;

pub use canon::IsoConvention;
pub use set::StateSet;
pub use text::{parse_dfa, serialize_dfa, ParseError};
pub use word::{switch_count, symbol_name, Word, WordParseError};

/// Largest state count any [`StateSet`] can hold.
pub const HARD_MAX_STATES: usize = 64;

/// State cap applied when `SYNCSWITCH_MAX_STATES` is unset.
pub const DEFAULT_MAX_STATES: usize = 32;

/// Environment variable overriding [`DEFAULT_MAX_STATES`].
pub const MAX_STATES_ENV: &str = "SYNCSWITCH_MAX_STATES";

/// The state cap in effect for this process.
///
/// Read once from `SYNCSWITCH_MAX_STATES`; values are clamped to
/// `1..=HARD_MAX_STATES` and unparsable values fall back to the default.
pub fn max_states() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_STATES_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.clamp(1, HARD_MAX_STATES))
            .unwrap_or(DEFAULT_MAX_STATES)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfaError {
    #[error("an automaton needs at least one state")]
    NoStates,
    #[error("an automaton needs at least one symbol")]
    NoSymbols,
    #[error("{n} states exceeds the state cap of {cap}")]
    TooManyStates { n: usize, cap: usize },
    #[error("transition table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("transition from state {state} on symbol {symbol} goes to {target}, out of range for {n} states")]
    TargetOutOfRange {
        state: usize,
        symbol: usize,
        target: usize,
        n: usize,
    },
    #[error("malformed word: symbol {symbol} is out of range for an alphabet of {k} symbols")]
    MalformedWord { symbol: usize, k: usize },
    #[error("state {state} is out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },
}

/// A complete DFA over `n` states and `k` symbols.
///
/// The derived ordering compares `n`, then `k`, then the row-major table
/// lexicographically; canonical forms are minimal under it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Dfa {
    n: usize,
    k: usize,
    delta: Vec<u8>,
}

impl Dfa {
    /// Builds an automaton from a row-major table of `n * k` successors.
    pub fn new(n: usize, k: usize, delta: Vec<usize>) -> Result<Self, DfaError> {
        check_shape(n, k)?;
        if delta.len() != n * k {
            return Err(DfaError::TableSize {
                expected: n * k,
                found: delta.len(),
            });
        }
        for (i, &target) in delta.iter().enumerate() {
            if target >= n {
                return Err(DfaError::TargetOutOfRange {
                    state: i / k,
                    symbol: i % k,
                    target,
                    n,
                });
            }
        }
        Ok(Self {
            n,
            k,
            delta: delta.into_iter().map(|t| t as u8).collect(),
        })
    }

    /// Builds an automaton from a transition function.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self, DfaError> {
        check_shape(n, k)?;
        let mut delta = Vec::with_capacity(n * k);
        for q in 0..n {
            for s in 0..k {
                delta.push(f(q, s));
            }
        }
        Self::new(n, k, delta)
    }

    /// Builds an automaton from one successor column per symbol.
    pub fn from_columns(n: usize, columns: &[Vec<usize>]) -> Result<Self, DfaError> {
        let k = columns.len();
        check_shape(n, k)?;
        for col in columns {
            if col.len() != n {
                return Err(DfaError::TableSize {
                    expected: n * k,
                    found: columns.iter().map(Vec::len).sum(),
                });
            }
        }
        Self::from_fn(n, k, |q, s| columns[s][q])
    }

    /// Wraps a table already known to be valid. Used by the enumerators.
    pub(crate) fn from_raw(n: usize, k: usize, delta: Vec<u8>) -> Self {
        debug_assert_eq!(delta.len(), n * k);
        debug_assert!(delta.iter().all(|&t| (t as usize) < n));
        Self { n, k, delta }
    }

    /// Mutable table access for enumerators; entries must stay below `n`.
    pub(crate) fn table_mut(&mut self) -> &mut [u8] {
        &mut self.delta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Row-major transition table.
    pub fn table(&self) -> &[u8] {
        &self.delta
    }

    /// Successor of `q` under `s`. Panics when either index is out of range.
    #[inline]
    pub fn step(&self, q: usize, s: usize) -> usize {
        debug_assert!(q < self.n && s < self.k);
        self.delta[q * self.k + s] as usize
    }

    /// The function computed by symbol `s`, as a vector indexed by state.
    pub fn column(&self, s: usize) -> Vec<usize> {
        (0..self.n).map(|q| self.step(q, s)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.k).map(|s| self.column(s)).collect()
    }

    /// The set of all states.
    pub fn full_set(&self) -> StateSet {
        StateSet::full(self.n)
    }

    /// True when symbol `s` permutes the states.
    pub fn is_injective(&self, s: usize) -> bool {
        let mut seen = StateSet::empty();
        for q in 0..self.n {
            let t = self.step(q, s);
            if seen.contains(t) {
                return false;
            }
            seen.insert(t);
        }
        true
    }

    /// Image of `set` under a single symbol, without range checks.
    #[inline]
    pub fn image(&self, set: StateSet, s: usize) -> StateSet {
        let mut out = 0u64;
        let mut bits = set.bits();
        while bits != 0 {
            let q = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1u64 << self.delta[q * self.k + s];
        }
        StateSet::from_bits(out)
    }

    fn check_word(&self, w: &Word) -> Result<(), DfaError> {
        match w.symbols().iter().find(|&&s| s >= self.k) {
            Some(&symbol) => Err(DfaError::MalformedWord { symbol, k: self.k }),
            None => Ok(()),
        }
    }

    /// The state reached from `q` after reading `w`.
    pub fn apply_state(&self, q: usize, w: &Word) -> Result<usize, DfaError> {
        if q >= self.n {
            return Err(DfaError::StateOutOfRange { state: q, n: self.n });
        }
        self.check_word(w)?;
        Ok(w.symbols().iter().fold(q, |q, &s| self.step(q, s)))
    }

    /// `{ qw | q in set }`.
    pub fn apply_set(&self, set: StateSet, w: &Word) -> Result<StateSet, DfaError> {
        self.check_word(w)?;
        Ok(self.apply_set_unchecked(set, w.symbols()))
    }

    pub(crate) fn apply_set_unchecked(&self, set: StateSet, w: &[usize]) -> StateSet {
        w.iter().fold(set, |v, &s| self.image(v, s))
    }

    /// True when `w` maps the full state set to a singleton.
    pub fn synchronizes(&self, w: &Word) -> Result<bool, DfaError> {
        Ok(self.apply_set(self.full_set(), w)?.len() == 1)
    }

    /// `{ q | delta(q, s) in set }`.
    pub fn preimage(&self, set: StateSet, s: usize) -> Result<StateSet, DfaError> {
        if s >= self.k {
            return Err(DfaError::MalformedWord { symbol: s, k: self.k });
        }
        Ok((0..self.n).filter(|&q| set.contains(self.step(q, s))).collect())
    }

    /// Renames state `q` to `states[q]` and symbol `s` to `symbols[s]`.
    ///
    /// Both slices must be permutations of the matching index range.
    pub fn relabel(&self, states: &[usize], symbols: &[usize]) -> Dfa {
        assert_eq!(states.len(), self.n);
        assert_eq!(symbols.len(), self.k);
        let mut delta = vec![0u8; self.n * self.k];
        for q in 0..self.n {
            for s in 0..self.k {
                delta[states[q] * self.k + symbols[s]] = states[self.step(q, s)] as u8;
            }
        }
        Dfa::from_raw(self.n, self.k, delta)
    }

    /// Lexicographically minimal table over all relabelings allowed by `conv`.
    pub fn canonical_form(&self, conv: IsoConvention) -> Dfa {
        canon::canonical_form(self, conv)
    }

    pub fn is_isomorphic(&self, other: &Dfa, conv: IsoConvention) -> bool {
        self.n == other.n && self.k == other.k && self.canonical_form(conv) == other.canonical_form(conv)
    }
}

fn check_shape(n: usize, k: usize) -> Result<(), DfaError> {
    if n == 0 {
        return Err(DfaError::NoStates);
    }
    if k == 0 {
        return Err(DfaError::NoSymbols);
    }
    let cap = max_states();
    if n > cap {
        return Err(DfaError::TooManyStates { n, cap });
    }
    Ok(())
}

impl std::fmt::Display for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_dfa(self))
    }
}

//! Power closure and the two doubling transforms.
//!
//! The power closure adds every distinct functional power of each symbol as
//! a new symbol, so that a run `s^r` costs one letter. Its shortest
//! synchronizing length is the switch count of the original automaton.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{symbol_name, Dfa};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("transform needs a {expected}-symbol automaton, got {found} symbols")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Dfa(#[from] crate::automaton::DfaError),
}

/// Where each symbol of a power closure comes from: `(base, exponent)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureMap {
    pub base_symbols: usize,
    pub provenance: Vec<(usize, usize)>,
}

impl ClosureMap {
    /// Comment lines such as `# c = a^2` for every added symbol.
    pub fn comment_lines(&self) -> String {
        let mut out = String::new();
        for (s, &(base, exp)) in self.provenance.iter().enumerate().skip(self.base_symbols) {
            writeln!(out, "# {} = {}^{}", symbol_name(s), symbol_name(base), exp).unwrap();
        }
        out
    }

    /// Expands a word over the closure alphabet into the base alphabet.
    pub fn expand(&self, word: &[usize]) -> Vec<usize> {
        word.iter()
            .flat_map(|&s| {
                let (base, exp) = self.provenance[s];
                std::iter::repeat_n(base, exp)
            })
            .collect()
    }
}

fn compose(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&q| then[q]).collect()
}

/// Adds every non-identity power of every symbol, skipping duplicates.
///
/// Original symbols come first and are kept even when one is the identity
/// or duplicates another; new powers follow grouped by base symbol in
/// increasing exponent.
pub fn power_closure(dfa: &Dfa) -> (Dfa, ClosureMap) {
    let n = dfa.n();
    let identity: Vec<usize> = (0..n).collect();
    let mut columns = dfa.columns();
    let mut provenance: Vec<(usize, usize)> = (0..dfa.k()).map(|s| (s, 1)).collect();
    let mut seen: HashSet<Vec<usize>> = columns.iter().cloned().collect();

    for s in 0..dfa.k() {
        let base = dfa.column(s);
        let mut trail: HashSet<Vec<usize>> = HashSet::from([base.clone()]);
        let mut power = base.clone();
        let mut exp = 1;
        loop {
            power = compose(&power, &base);
            exp += 1;
            if !trail.insert(power.clone()) {
                break;
            }
            if power != identity && seen.insert(power.clone()) {
                columns.push(power.clone());
                provenance.push((s, exp));
            }
        }
    }
    let closed = Dfa::from_columns(n, &columns).expect("closure columns are valid");
    let map = ClosureMap {
        base_symbols: dfa.k(),
        provenance,
    };
    (closed, map)
}

/// True when every power of every symbol is the identity or a symbol.
pub fn is_power_closed(dfa: &Dfa) -> bool {
    let (closed, _) = power_closure(dfa);
    closed.k() == dfa.k()
}

/// The doubling transform with a fresh symbol `c` (index `k`).
///
/// States `0..n` keep their meaning, `n..2n` are their primed copies. Every
/// old symbol fixes unprimed states and moves a primed state `q'` to
/// `δ(q, s)`; `c` sends both `q` and `q'` to `q'`.
pub fn f_transform(dfa: &Dfa) -> Dfa {
    let (n, k) = (dfa.n(), dfa.k());
    Dfa::from_fn(2 * n, k + 1, |q, s| match (q < n, s == k) {
        (true, false) => q,
        (true, true) => q + n,
        (false, false) => dfa.step(q - n, s),
        (false, true) => q,
    })
    .expect("transform of a valid automaton")
}

/// The binary version of [`f_transform`], spelling `c` as `ab` through a
/// third copy of the states (`2n..3n`).
pub fn f2_transform(dfa: &Dfa) -> Result<Dfa, ClosureError> {
    if dfa.k() != 2 {
        return Err(ClosureError::AlphabetMismatch {
            expected: 2,
            found: dfa.k(),
        });
    }
    let n = dfa.n();
    Ok(Dfa::from_fn(3 * n, 2, |q, s| match (q / n, s) {
        (0, 0) => q + 2 * n,
        (0, _) => q,
        (1, s) => dfa.step(q - n, s),
        (_, 0) => q,
        (_, _) => q - n,
    })?)
}

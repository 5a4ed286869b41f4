//! Synchronization searches: the synchronization test, shortest reset
//! length, minimal switch count, and lexicographically optimal words with
//! their multiplicities.
//!
//! Ties between equally optimal words are broken towards the smallest word
//! in symbol-index order.

mod engine;
mod pairs;
mod store;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automaton::{Dfa, StateSet, Word};

pub use engine::SwitchSearch;
pub use pairs::is_synchronizing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SyncError {
    #[error("not synchronizing")]
    NotSynchronizing,
    #[error("optimal word count overflows the counter")]
    Overflow,
    #[error("infinitely many words attain the minimal switch count")]
    UnboundedCount,
}

/// What an optimal synchronizing word minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Word length.
    Length,
    /// Switch count.
    Switch,
    /// Switch count first, then length.
    SwitchThenLength,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Length => "length",
            Objective::Switch => "switch",
            Objective::SwitchThenLength => "switch-then-length",
        })
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "length" => Ok(Objective::Length),
            "switch" => Ok(Objective::Switch),
            "switch-then-length" => Ok(Objective::SwitchThenLength),
            other => Err(format!("unknown objective {other:?}")),
        }
    }
}

/// An optimal synchronizing word with its measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncResult {
    pub word: Word,
    pub length: usize,
    pub switch: usize,
    /// Number of distinct words attaining the optimum, when finite and
    /// representable.
    pub witness_count: Option<u128>,
}

/// A node of the switch-count search graph: a subset and the last symbol
/// read to reach it (`None` only at the source).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchNode {
    pub set: StateSet,
    pub last: Option<usize>,
}

impl SearchNode {
    pub fn source(dfa: &Dfa) -> Self {
        SearchNode {
            set: dfa.full_set(),
            last: None,
        }
    }
}

/// Length of a shortest synchronizing word; 0 for a single state.
pub fn shortest_sync_length(dfa: &Dfa) -> Result<usize, SyncError> {
    engine::shortest_length(dfa)
}

/// Minimal switch count over all synchronizing words.
pub fn min_switch_count(dfa: &Dfa) -> Result<usize, SyncError> {
    SwitchSearch::new().min_switch_count(dfa)
}

/// An optimal synchronizing word under `objective`.
///
/// `Switch` has no smallest optimal word in general (appending the last
/// symbol again never changes the switch count), so it returns the same
/// word as `SwitchThenLength`.
pub fn optimal_sync_word(dfa: &Dfa, objective: Objective) -> Result<SyncResult, SyncError> {
    let tagged = objective != Objective::Length;
    let opt = engine::lexicographic_optimum(dfa, tagged)?;
    let (switch, length) = if tagged {
        engine::unpack(opt.cost)
    } else {
        (opt.word.switch_count(), opt.word.len())
    };
    debug_assert_eq!(length, opt.word.len());
    debug_assert_eq!(switch, opt.word.switch_count());
    let witness_count = match objective {
        Objective::Switch if dfa.n() > 1 => None,
        _ => opt.count,
    };
    Ok(SyncResult {
        word: opt.word,
        length,
        switch,
        witness_count,
    })
}

/// Number of distinct words attaining the optimum of `objective`.
///
/// `Switch` alone admits infinitely many optimal words unless the automaton
/// has a single state.
pub fn count_optimal_words(dfa: &Dfa, objective: Objective) -> Result<u128, SyncError> {
    if objective == Objective::Switch {
        if !is_synchronizing(dfa) {
            return Err(SyncError::NotSynchronizing);
        }
        return if dfa.n() == 1 {
            Ok(1)
        } else {
            Err(SyncError::UnboundedCount)
        };
    }
    let opt = engine::lexicographic_optimum(dfa, objective == Objective::SwitchThenLength)?;
    opt.count.ok_or(SyncError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cerny(n: usize) -> Dfa {
        Dfa::from_fn(n, 2, |q, s| {
            if s == 0 {
                (q + 1) % n
            } else if q == 0 {
                1
            } else {
                q
            }
        })
        .unwrap()
    }

    fn single() -> Dfa {
        Dfa::new(1, 2, vec![0, 0]).unwrap()
    }

    #[test]
    fn cerny_four() {
        let a = cerny(4);
        assert!(is_synchronizing(&a));
        assert_eq!(shortest_sync_length(&a), Ok(9));
        assert_eq!(min_switch_count(&a), Ok(5));
        let r = optimal_sync_word(&a, Objective::Length).unwrap();
        assert_eq!(r.word.to_string(), "baaabaaab");
        assert_eq!((r.length, r.switch, r.witness_count), (9, 5, Some(1)));
    }

    #[test]
    fn single_state_is_trivially_synchronized() {
        let a = single();
        assert_eq!(shortest_sync_length(&a), Ok(0));
        assert_eq!(min_switch_count(&a), Ok(0));
        for obj in [Objective::Length, Objective::Switch, Objective::SwitchThenLength] {
            let r = optimal_sync_word(&a, obj).unwrap();
            assert!(r.word.is_empty());
            assert_eq!(count_optimal_words(&a, obj), Ok(1));
        }
    }

    #[test]
    fn not_synchronizing_is_an_error() {
        let id = Dfa::from_fn(2, 2, |q, _| q).unwrap();
        assert!(!is_synchronizing(&id));
        assert_eq!(shortest_sync_length(&id), Err(SyncError::NotSynchronizing));
        assert_eq!(min_switch_count(&id), Err(SyncError::NotSynchronizing));
        for obj in [Objective::Length, Objective::Switch, Objective::SwitchThenLength] {
            assert_eq!(optimal_sync_word(&id, obj), Err(SyncError::NotSynchronizing));
            assert_eq!(count_optimal_words(&id, obj), Err(SyncError::NotSynchronizing));
        }
    }

    #[test]
    fn switch_count_is_unbounded() {
        assert_eq!(
            count_optimal_words(&cerny(3), Objective::Switch),
            Err(SyncError::UnboundedCount)
        );
        let r = optimal_sync_word(&cerny(3), Objective::Switch).unwrap();
        assert_eq!(r.switch, 3);
        assert_eq!(r.witness_count, None);
    }

    #[test]
    fn sparse_store_matches_dense() {
        // 23 states with 3 tags exceeds the dense limit.
        let a = cerny(23);
        assert_eq!(min_switch_count(&a), Ok(2 * 23 - 3));
    }

    #[test]
    fn search_node_index_round_trip() {
        let node = SearchNode {
            set: StateSet::from_bits(0b1011),
            last: Some(2),
        };
        assert_eq!(SearchNode::from_index(node.index(3), 3), node);
        let src = SearchNode::source(&cerny(3));
        assert_eq!(SearchNode::from_index(src.index(2), 2), src);
    }

    #[test]
    fn objective_text() {
        for obj in [Objective::Length, Objective::Switch, Objective::SwitchThenLength] {
            assert_eq!(obj.to_string().parse::<Objective>(), Ok(obj));
        }
    }
}

//! Synchronizing words and switch counts of finite automata.

pub mod analysis;
pub mod automaton;
pub mod cli;
pub mod closure;
pub mod families;
pub mod search;
pub mod synchro;
pub mod verify;

pub use automaton::{Dfa, DfaError, IsoConvention, StateSet, Word};
pub use synchro::{Objective, SyncError, SyncResult};

//! Named automata: the classical Černý series, several constructions with
//! quadratic switch count, the signed double cover used by the lower-bound
//! analysis, a cyclic counterexample, and a catalog of small extremal
//! automata.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automaton::{Dfa, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got n = {n}")]
    BadSize {
        family: &'static str,
        requirement: &'static str,
        n: usize,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("{0} takes no size argument")]
    UnexpectedSize(String),
    #[error("{0} needs a size argument")]
    MissingSize(String),
    #[error(transparent)]
    Dfa(#[from] crate::automaton::DfaError),
}

/// Names accepted by [`generate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Cerny,
    P,
    PVariant,
    R,
    Q,
    A,
    B,
    CyclicCounterexample,
    Fixture(String),
}

impl FamilyId {
    /// Whether the generator takes a state count.
    pub fn is_sized(&self) -> bool {
        !matches!(self, FamilyId::CyclicCounterexample | FamilyId::Fixture(_))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Cerny => f.write_str("cerny"),
            FamilyId::P => f.write_str("p"),
            FamilyId::PVariant => f.write_str("p-variant"),
            FamilyId::R => f.write_str("r"),
            FamilyId::Q => f.write_str("q"),
            FamilyId::A => f.write_str("a"),
            FamilyId::B => f.write_str("b"),
            FamilyId::CyclicCounterexample => f.write_str("cyclic-counterexample"),
            FamilyId::Fixture(name) => f.write_str(name),
        }
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "cerny" | "c" => FamilyId::Cerny,
            "p" => FamilyId::P,
            "p-variant" | "pv" => FamilyId::PVariant,
            "r" => FamilyId::R,
            "q" => FamilyId::Q,
            "a" => FamilyId::A,
            "b" => FamilyId::B,
            "cyclic-counterexample" | "cyclic" => FamilyId::CyclicCounterexample,
            name if FIXTURES.iter().any(|f| f.name == name) => FamilyId::Fixture(name.to_string()),
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

/// Builds a family member; `n` is required exactly for sized families.
pub fn generate(id: &FamilyId, n: Option<usize>) -> Result<Dfa, FamilyError> {
    let size = || n.ok_or_else(|| FamilyError::MissingSize(id.to_string()));
    if !id.is_sized() && n.is_some() {
        return Err(FamilyError::UnexpectedSize(id.to_string()));
    }
    match id {
        FamilyId::Cerny => cerny(size()?),
        FamilyId::P => p_family(size()?),
        FamilyId::PVariant => p_variant(size()?),
        FamilyId::R => r_family(size()?),
        FamilyId::Q => q_family(size()?),
        FamilyId::A => a_family(size()?),
        FamilyId::B => b_family(size()?),
        FamilyId::CyclicCounterexample => Ok(cyclic_counterexample()),
        FamilyId::Fixture(name) => fixture(name),
    }
}

fn require(ok: bool, family: &'static str, requirement: &'static str, n: usize) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::BadSize { family, requirement, n })
    }
}

fn swap(q: usize, x: usize, y: usize) -> usize {
    if q == x {
        y
    } else if q == y {
        x
    } else {
        q
    }
}

/// `a` is the n-cycle, `b` sends state 0 to 1 and fixes the rest.
pub fn cerny(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 2, "cerny", "n >= 2", n)?;
    Ok(Dfa::from_fn(n, 2, |q, s| match s {
        0 => (q + 1) % n,
        _ if q == 0 => 1,
        _ => q,
    })?)
}

/// `n - 1` symbols: symbol 0 merges state 1 into 0, symbol `j >= 1` swaps
/// `j` and `j + 1`.
pub fn p_family(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 2, "p", "n >= 2", n)?;
    Ok(Dfa::from_fn(n, n - 1, |q, s| match s {
        0 if q == 1 => 0,
        0 => q,
        j => swap(q, j, j + 1),
    })?)
}

/// `n` symbols: symbol 0 sends 0 to 1, symbol 1 swaps 0 and 1, symbol
/// `j >= 2` swaps `j - 1` and `j`.
pub fn p_variant(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 2, "p-variant", "n >= 2", n)?;
    Ok(Dfa::from_fn(n, n, |q, s| match s {
        0 if q == 0 => 1,
        0 => q,
        1 => swap(q, 0, 1),
        j => swap(q, j - 1, j),
    })?)
}

/// `n - 2` symbols extending a 5-state, 3-symbol core by a chain of swaps.
pub fn r_family(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 5, "r", "n >= 5", n)?;
    Ok(Dfa::from_fn(n, n - 2, |q, s| match s {
        0 if q == 2 => 1,
        0 => swap(q, 1, 3),
        1 => swap(q, 2, 3),
        2 => swap(swap(q, 0, 1), 3, 4),
        3 => swap(q, 1, 5),
        j => swap(q, j + 1, j + 2),
    })?)
}

/// Binary, even `n`: `a` folds each pair `{2i, 2i+1}` onto `2i+1`, and `b`
/// shifts odd positions forward in pairs.
pub fn q_family(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 4 && n.is_multiple_of(2), "q", "even n >= 4", n)?;
    Ok(Dfa::from_fn(n, 2, |q, s| {
        // one-based state p = q + 1
        let p = q + 1;
        let target = match s {
            0 => p + p % 2,
            _ if p == 1 => 3,
            _ if p == n => 1,
            _ => p + 1 - p % 2,
        };
        target - 1
    })?)
}

/// One-based target of `p` in the binary chain underlying both
/// [`a_family`] and [`b_family`]. State `n` is handled by the caller.
fn chain_step(p: usize, s: usize) -> usize {
    match (p % 2, s) {
        (0, 0) => p + 1,
        (0, _) => p - 1,
        (_, 0) => p - 1,
        (_, _) => p + 1,
    }
}

/// Sink target of state `n` in the chain, one-based.
fn chain_exit(n: usize) -> usize {
    match n % 3 {
        0 => n / 3,
        1 => n.div_ceil(3),
        _ => (n + 4) / 3,
    }
}

/// Binary chain automaton with switch count `ceil(2n(n-2)/3 - 1)`.
pub fn a_family(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 3, "a", "n >= 3", n)?;
    Ok(Dfa::from_fn(n, 2, |q, s| {
        let p = q + 1;
        let target = if p == n {
            chain_exit(n)
        } else if p == 1 {
            if s == 0 {
                1
            } else {
                2
            }
        } else {
            chain_step(p, s)
        };
        target - 1
    })?)
}

/// A nonzero state label of the signed double cover, in `[-n, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedState(i32);

impl SignedState {
    pub fn new(value: i32, n: usize) -> Option<Self> {
        (value != 0 && value.unsigned_abs() as usize <= n).then_some(SignedState(value))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn negate(self) -> Self {
        SignedState(-self.0)
    }

    /// Index in [`b_family`]: `q - 1` for positive `q`, `n - q - 1` for
    /// negative `q`.
    pub fn index(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize - 1
        } else {
            n + (-self.0) as usize - 1
        }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        if index < n {
            SignedState(index as i32 + 1)
        } else {
            SignedState(-((index - n) as i32 + 1))
        }
    }
}

impl fmt::Display for SignedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index of the negation of state `index` in a `b_family(n)` automaton.
pub fn negate_index(index: usize, n: usize) -> usize {
    (index + n) % (2 * n)
}

/// Signed double cover of [`a_family`] on `2n` states, `n` divisible by 6.
///
/// State 1 leaves the chain to `-1` under `a`, state `n` falls to
/// `-n/3`, and negation commutes with both symbols.
pub fn b_family(n: usize) -> Result<Dfa, FamilyError> {
    require(n >= 6 && n.is_multiple_of(6), "b", "n divisible by 6", n)?;
    let positive = |p: usize, s: usize| -> i32 {
        if p == n {
            -((n / 3) as i32)
        } else if p == 1 {
            if s == 0 {
                -1
            } else {
                2
            }
        } else {
            chain_step(p, s) as i32
        }
    };
    Ok(Dfa::from_fn(2 * n, 2, |i, s| {
        let q = SignedState::from_index(i, n).value();
        let t = if q > 0 {
            positive(q as usize, s)
        } else {
            -positive((-q) as usize, s)
        };
        SignedState(t).index(n)
    })?)
}

/// Four states, three symbols: `a` is the 4-cycle, yet the switch count
/// exceeds the bound that holds for binary cyclic automata.
pub fn cyclic_counterexample() -> Dfa {
    Dfa::from_columns(4, &[vec![1, 2, 3, 0], vec![2, 1, 2, 3], vec![0, 1, 3, 2]]).expect("valid table")
}

/// Known facts about a catalog automaton, checked by the test suites.
#[derive(Debug, Clone, Copy)]
pub struct FixtureFacts {
    pub name: &'static str,
    pub sw: usize,
    pub ssl: usize,
    /// Number of shortest synchronizing words, when stated.
    pub shortest_count: Option<u128>,
    /// A shortest synchronizing word, in compressed notation.
    pub shortest_word: Option<&'static str>,
    /// Switch count of every shortest word, when stated.
    pub shortest_sw: Option<usize>,
    /// Length of the shortest word of minimal switch count, when it differs
    /// from `ssl`.
    pub min_sw_length: Option<usize>,
    /// A word of minimal switch count and, among those, minimal length.
    pub min_sw_word: Option<&'static str>,
}

const fn facts(name: &'static str, sw: usize, ssl: usize) -> FixtureFacts {
    FixtureFacts {
        name,
        sw,
        ssl,
        shortest_count: None,
        shortest_word: None,
        shortest_sw: None,
        min_sw_length: None,
        min_sw_word: None,
    }
}

const fn unique(name: &'static str, sw: usize, ssl: usize, word: &'static str) -> FixtureFacts {
    FixtureFacts {
        shortest_count: Some(1),
        shortest_word: Some(word),
        shortest_sw: Some(sw),
        ..facts(name, sw, ssl)
    }
}

pub const FIXTURES: &[FixtureFacts] = &[
    unique("t3", 3, 3, "aba"),
    unique("t4", 7, 8, "abab^2aba"),
    unique("t5", 11, 15, "ba^2baba^2bab^2a^2b"),
    unique("t6", 19, 23, "abab^2ababab^2ababa^2b^2aba"),
    FixtureFacts {
        shortest_count: Some(3),
        shortest_sw: Some(25),
        ..facts("t7", 25, 32)
    },
    FixtureFacts {
        shortest_count: Some(1),
        shortest_word: Some("ba^3(ba)^3a(ba)^4(ab)^2(ba)^3(ab)^2(ba)^2a(ab)^2"),
        shortest_sw: Some(33),
        min_sw_length: Some(43),
        min_sw_word: Some("ba^3(ba)^3a(ba)^4(ab)^2(ba)^2a^2ba^3ba^2ba^2(ab)^2"),
        ..facts("t8a", 31, 42)
    },
    facts("t8b", 31, 0),
    unique("t9a", 41, 49, "b^2(ab)^4b(ab)^5b(ab)^5b(ba)^3(ab)^2b^2(ab)^2"),
    facts("t9b", 41, 0),
    unique(
        "t10",
        53,
        63,
        "b^2(ab)^4b(ab)^5b(ab)^6(ba)^3(ab)^3b(ba)^3(ab)^2b^2(ab)^2",
    ),
    unique(
        "t11",
        65,
        77,
        "b^2(ab)^4b(ab)^5b(ab)^6(ba)^3(ab)^4(ba)^3(ab)^3b(ba)^3(ab)^2b^2(ab)^2",
    ),
];

/// The three shortest words of `t7`: a common prefix and suffix around
/// one of three middles.
pub fn t7_shortest_words() -> Vec<Word> {
    let part = |t: &str| Word::parse_compressed(t).expect("valid word");
    let (prefix, suffix) = (part("ab^2abab"), part("bab^2abab^2ab^2abab^2a"));
    ["ab^2abab", "ab^2a^2ba", "bab^2aba"]
        .iter()
        .map(|m| prefix.concat(&part(m)).concat(&suffix))
        .collect()
}

/// Facts for catalog entry `name`. For `t8b` and `t9b` only `sw` is known;
/// their `ssl` is recorded as 0.
pub fn fixture_facts(name: &str) -> Option<&'static FixtureFacts> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// One-based `(a, b)` successor pairs, row per state.
fn one_based(rows: &[(usize, usize)]) -> Dfa {
    Dfa::from_fn(rows.len(), 2, |q, s| if s == 0 { rows[q].0 - 1 } else { rows[q].1 - 1 }).expect("valid table")
}

/// A catalog automaton by name.
pub fn fixture(name: &str) -> Result<Dfa, FamilyError> {
    let rows: &[(usize, usize)] = match name {
        "t3" => &[(1, 1), (1, 3), (3, 2)],
        "t4" => &[(1, 3), (3, 2), (2, 4), (2, 1)],
        "t5" => &[(1, 2), (2, 3), (4, 1), (5, 4), (3, 1)],
        "t6" => &[(1, 2), (2, 4), (3, 5), (5, 1), (4, 6), (4, 3)],
        "t7" => &[(1, 3), (2, 5), (4, 6), (3, 2), (3, 4), (7, 1), (6, 7)],
        "t8a" => &[(1, 3), (2, 5), (4, 1), (3, 8), (6, 2), (7, 4), (8, 7), (5, 4)],
        "t8b" => return a_family(8),
        "t9a" => &[(1, 2), (3, 1), (2, 4), (8, 5), (6, 4), (5, 6), (8, 3), (7, 9), (9, 8)],
        "t9b" => return a_family(9),
        "t10" => &[
            (1, 2),
            (3, 1),
            (2, 4),
            (8, 5),
            (6, 4),
            (5, 6),
            (8, 3),
            (7, 9),
            (10, 8),
            (9, 10),
        ],
        "t11" => &[
            (1, 2),
            (3, 1),
            (2, 4),
            (8, 5),
            (6, 4),
            (5, 6),
            (8, 3),
            (7, 9),
            (10, 8),
            (9, 11),
            (11, 10),
        ],
        other => return Err(FamilyError::UnknownFixture(other.to_string())),
    };
    Ok(one_based(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::StateSet;
    use crate::synchro::{
        count_optimal_words, is_synchronizing, min_switch_count, optimal_sync_word, shortest_sync_length, Objective,
    };

    #[test]
    fn cerny_small_values() {
        let c4 = cerny(4).unwrap();
        assert_eq!(shortest_sync_length(&c4), Ok(9));
        assert_eq!(min_switch_count(&c4), Ok(5));
        assert_eq!(min_switch_count(&cerny(2).unwrap()), Ok(1));
        assert!(cerny(1).is_err());
    }

    #[test]
    fn p_family_values() {
        let p4 = p_family(4).unwrap();
        assert_eq!(min_switch_count(&p4), Ok(6));
        assert_eq!(shortest_sync_length(&p4), Ok(6));
        assert_eq!(min_switch_count(&p_family(2).unwrap()), Ok(1));
        let p5 = p_family(5).unwrap();
        let w = optimal_sync_word(&p5, Objective::Length).unwrap().word;
        assert_eq!(p5.apply_set(p5.full_set(), &w), Ok(StateSet::singleton(0)));
    }

    #[test]
    fn p_variant_values() {
        assert_eq!(min_switch_count(&p_variant(2).unwrap()), Ok(1));
        assert_eq!(min_switch_count(&p_variant(5).unwrap()), Ok(13));
        assert_eq!(min_switch_count(&p_variant(8).unwrap()), Ok(34));
    }

    #[test]
    fn r_family_values() {
        let r5 = r_family(5).unwrap();
        assert_eq!(r5.k(), 3);
        assert_eq!(shortest_sync_length(&r5), Ok(16));
        assert_eq!(min_switch_count(&r5), Ok(15));
        assert_eq!(min_switch_count(&r_family(8).unwrap()), Ok(36));
        assert!(r_family(4).is_err());
    }

    #[test]
    fn q_family_values() {
        assert_eq!(min_switch_count(&q_family(4).unwrap()), Ok(1));
        assert_eq!(min_switch_count(&q_family(6).unwrap()), Ok(5));
        assert_eq!(min_switch_count(&q_family(8).unwrap()), Ok(13));
        assert!(q_family(7).is_err());
    }

    #[test]
    fn a_family_values() {
        assert_eq!(min_switch_count(&a_family(3).unwrap()), Ok(1));
        assert_eq!(min_switch_count(&a_family(7).unwrap()), Ok(23));
    }

    #[test]
    fn b_family_shape() {
        let b = b_family(6).unwrap();
        assert_eq!((b.n(), b.k()), (12, 2));
        // state 6 goes to -2 (index 7) under both symbols
        assert_eq!(b.step(5, 0), 7);
        assert_eq!(b.step(5, 1), 7);
        for i in 0..12 {
            for s in 0..2 {
                assert_eq!(b.step(negate_index(i, 6), s), negate_index(b.step(i, s), 6));
            }
        }
        assert!(b_family(8).is_err());
    }

    #[test]
    fn signed_state_index_map() {
        let n = 6;
        assert_eq!(SignedState::new(-1, n).unwrap().index(n), 6);
        assert_eq!(SignedState::new(-6, n).unwrap().index(n), 11);
        assert!(SignedState::new(0, n).is_none());
        assert!(SignedState::new(7, n).is_none());
        for i in 0..2 * n {
            let s = SignedState::from_index(i, n);
            assert_eq!(s.index(n), i);
            assert_eq!(s.negate().index(n), negate_index(i, n));
        }
    }

    #[test]
    fn cyclic_counterexample_facts() {
        let c = cyclic_counterexample();
        assert!(is_synchronizing(&c));
        assert_eq!(c.synchronizes(&"babacb".parse::<Word>().unwrap()), Ok(true));
        assert_eq!(min_switch_count(&c), Ok(6));
        assert!(c.is_injective(0));
    }

    #[test]
    fn small_fixtures_match_their_facts() {
        for name in ["t3", "t4", "t5", "t6"] {
            let f = fixture_facts(name).unwrap();
            let a = fixture(name).unwrap();
            assert_eq!(min_switch_count(&a), Ok(f.sw), "{name}");
            let r = optimal_sync_word(&a, Objective::Length).unwrap();
            assert_eq!(r.length, f.ssl, "{name}");
            assert_eq!(
                r.word,
                Word::parse_compressed(f.shortest_word.unwrap()).unwrap(),
                "{name}"
            );
            assert_eq!(count_optimal_words(&a, Objective::Length), Ok(1), "{name}");
        }
    }

    #[test]
    fn generate_by_name() {
        assert_eq!(generate(&"cerny".parse().unwrap(), Some(4)).unwrap(), cerny(4).unwrap());
        assert_eq!(generate(&"t3".parse().unwrap(), None).unwrap(), fixture("t3").unwrap());
        assert!(generate(&FamilyId::Cerny, None).is_err());
        assert!(generate(&FamilyId::CyclicCounterexample, Some(3)).is_err());
        assert!("zzz".parse::<FamilyId>().is_err());
        assert!(fixture("t12").is_err());
    }
}

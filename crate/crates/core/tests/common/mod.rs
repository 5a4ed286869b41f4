//! Brute-force oracles shared by the integration tests. They enumerate
//! words directly and never touch the search engine.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syncswitch::Dfa;

/// Image of the full state set under `word`, as a sorted, deduplicated list.
pub fn image(dfa: &Dfa, word: &[usize]) -> Vec<usize> {
    let mut states: Vec<usize> = (0..dfa.n()).collect();
    for &s in word {
        for q in states.iter_mut() {
            *q = dfa.step(*q, s);
        }
        states.sort_unstable();
        states.dedup();
    }
    states
}

pub fn syncs(dfa: &Dfa, word: &[usize]) -> bool {
    image(dfa, word).len() == 1
}

pub fn runs(word: &[usize]) -> usize {
    if word.is_empty() {
        0
    } else {
        1 + word.windows(2).filter(|p| p[0] != p[1]).count()
    }
}

/// Every word of length `len` over `k` symbols, in lexicographic order.
pub fn words(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        w
    })
}

/// Shortest synchronizing length, searching lengths up to `limit`.
pub fn ssl(dfa: &Dfa, limit: usize) -> Option<usize> {
    (0..=limit).find(|&l| words(dfa.k(), l).any(|w| syncs(dfa, &w)))
}

/// Number of synchronizing words of exactly `len` letters.
pub fn count_sync(dfa: &Dfa, len: usize) -> u128 {
    words(dfa.k(), len).filter(|w| syncs(dfa, w)).count() as u128
}

/// Minimal number of runs of a synchronizing word, trying run sequences
/// whose exponents range over `1..=max_exp`.
pub fn sw(dfa: &Dfa, limit: usize, max_exp: usize) -> Option<usize> {
    fn go(dfa: &Dfa, set: Vec<usize>, last: Option<usize>, left: usize, max_exp: usize) -> bool {
        if set.len() == 1 {
            return true;
        }
        if left == 0 {
            return false;
        }
        for s in (0..dfa.k()).filter(|&s| Some(s) != last) {
            let mut cur = set.clone();
            let mut seen = Vec::new();
            for _ in 0..max_exp {
                for q in cur.iter_mut() {
                    *q = dfa.step(*q, s);
                }
                cur.sort_unstable();
                cur.dedup();
                if seen.contains(&cur) {
                    break;
                }
                seen.push(cur.clone());
                if go(dfa, cur.clone(), Some(s), left - 1, max_exp) {
                    return true;
                }
            }
        }
        false
    }
    let all: Vec<usize> = (0..dfa.n()).collect();
    (0..=limit).find(|&r| go(dfa, all.clone(), None, r, max_exp))
}

/// Minimal `(runs, length)` over synchronizing words of length `<= max_len`,
/// ordered by runs first.
pub fn switch_then_length(dfa: &Dfa, max_len: usize) -> Option<(usize, usize)> {
    (0..=max_len)
        .flat_map(|l| words(dfa.k(), l))
        .filter(|w| syncs(dfa, w))
        .map(|w| (runs(&w), w.len()))
        .min()
}

pub fn random_dfa(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Dfa {
    Dfa::from_fn(n, k, |_, _| rng.random_range(0..n)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every binary automaton on `n` states.
pub fn all_binary(n: usize) -> impl Iterator<Item = Dfa> {
    (0..n.pow(2 * n as u32)).map(move |mut code| {
        Dfa::from_fn(n, 2, |_, _| {
            let t = code % n;
            code /= n;
            t
        })
        .unwrap()
    })
}

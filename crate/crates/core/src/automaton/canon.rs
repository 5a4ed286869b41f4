use std::fmt;
use std::str::FromStr;

use super::Dfa;

/// Which relabelings count as isomorphisms.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoConvention {
    /// Only states may be renamed.
    StatesOnly,
    /// States and symbols may both be renamed.
    StatesAndSymbols,
}

impl fmt::Display for IsoConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoConvention::StatesOnly => "states",
            IsoConvention::StatesAndSymbols => "states-and-symbols",
        })
    }
}

impl FromStr for IsoConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "states" | "states-only" => Ok(IsoConvention::StatesOnly),
            "states-and-symbols" | "both" => Ok(IsoConvention::StatesAndSymbols),
            other => Err(format!("unknown isomorphism convention {other:?}")),
        }
    }
}

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

// Explicit minimization over n! (times k!) relabelings; meant for the small
// extremal sets, not for hot loops.
pub(super) fn canonical_form(dfa: &Dfa, conv: IsoConvention) -> Dfa {
    let (n, k) = (dfa.n(), dfa.k());
    let symbol_perms: Vec<Vec<usize>> = match conv {
        IsoConvention::StatesOnly => vec![(0..k).collect()],
        IsoConvention::StatesAndSymbols => {
            let mut all = Vec::new();
            for_each_permutation(k, |p| all.push(p.to_vec()));
            all
        }
    };

    let mut best: Vec<u8> = dfa.table().to_vec();
    let mut cand = vec![0u8; n * k];
    let mut forward = vec![0u8; n];
    for sym_inv in &symbol_perms {
        // sym_inv[t] = old symbol that becomes new symbol t
        for_each_permutation(n, |inv| {
            // inv[r] = old state that becomes new state r
            for (r, &old) in inv.iter().enumerate() {
                forward[old] = r as u8;
            }
            let mut smaller = false;
            for r in 0..n {
                for t in 0..k {
                    let i = r * k + t;
                    let v = forward[dfa.step(inv[r], sym_inv[t])];
                    cand[i] = v;
                    if !smaller {
                        if v > best[i] {
                            return;
                        }
                        if v < best[i] {
                            smaller = true;
                        }
                    }
                }
            }
            if smaller {
                best.copy_from_slice(&cand);
            }
        });
    }
    Dfa::from_raw(n, k, best)
}

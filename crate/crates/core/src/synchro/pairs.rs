//! The pair criterion: an automaton is synchronizing iff every pair of
//! states can be merged by some word. Mergeable pairs are found by
//! backward reachability from the diagonal.

use crate::automaton::Dfa;

/// Predecessor lists in compressed form: `sources[start[s*n+t]..start[s*n+t+1]]`
/// are the states mapped to `t` by `s`.
struct Predecessors {
    start: Vec<usize>,
    sources: Vec<u8>,
}

impl Predecessors {
    fn new(dfa: &Dfa) -> Self {
        let (n, k) = (dfa.n(), dfa.k());
        let mut start = vec![0usize; n * k + 1];
        for q in 0..n {
            for s in 0..k {
                start[s * n + dfa.step(q, s) + 1] += 1;
            }
        }
        for i in 1..start.len() {
            start[i] += start[i - 1];
        }
        let mut fill = start.clone();
        let mut sources = vec![0u8; n * k];
        for s in 0..k {
            for q in 0..n {
                let slot = &mut fill[s * n + dfa.step(q, s)];
                sources[*slot] = q as u8;
                *slot += 1;
            }
        }
        Predecessors { start, sources }
    }

    #[inline]
    fn of(&self, n: usize, s: usize, t: usize) -> &[u8] {
        &self.sources[self.start[s * n + t]..self.start[s * n + t + 1]]
    }
}

/// True iff some word maps all states to one state.
pub fn is_synchronizing(dfa: &Dfa) -> bool {
    let (n, k) = (dfa.n(), dfa.k());
    if n == 1 {
        return true;
    }
    if (0..k).all(|s| dfa.is_injective(s)) {
        return false;
    }
    let pred = Predecessors::new(dfa);
    let mut merged = vec![false; n * n];
    let mut queue: Vec<(u8, u8)> = Vec::with_capacity(n * n / 2);
    let mut count = 0usize;

    let mark = |p: u8, q: u8, merged: &mut Vec<bool>, queue: &mut Vec<(u8, u8)>| {
        let (p, q) = (p.min(q), p.max(q));
        let i = p as usize * n + q as usize;
        if p != q && !merged[i] {
            merged[i] = true;
            queue.push((p, q));
            return true;
        }
        false
    };

    for s in 0..k {
        for t in 0..n {
            let srcs = pred.of(n, s, t);
            for (i, &p) in srcs.iter().enumerate() {
                for &q in &srcs[i + 1..] {
                    count += mark(p, q, &mut merged, &mut queue) as usize;
                }
            }
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        for s in 0..k {
            let px = pred.of(n, s, x as usize);
            let py = pred.of(n, s, y as usize);
            for &p in px {
                for &q in py {
                    count += mark(p, q, &mut merged, &mut queue) as usize;
                }
            }
        }
    }
    count == n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_automaton_is_not_synchronizing() {
        let id = Dfa::from_fn(2, 2, |q, _| q).unwrap();
        assert!(!is_synchronizing(&id));
    }

    #[test]
    fn single_state_is_synchronizing() {
        assert!(is_synchronizing(&Dfa::new(1, 1, vec![0]).unwrap()));
    }

    #[test]
    fn two_sinks_never_merge() {
        // 0 and 1 are both fixed by every symbol; 2 falls into 0.
        let a = Dfa::new(3, 2, vec![0, 0, 1, 1, 0, 1]).unwrap();
        assert!(!is_synchronizing(&a));
    }

    #[test]
    fn cerny_four_is_synchronizing() {
        let a = Dfa::from_fn(4, 2, |q, s| {
            if s == 0 {
                (q + 1) % 4
            } else if q == 0 {
                1
            } else {
                q
            }
        })
        .unwrap();
        assert!(is_synchronizing(&a));
    }
}

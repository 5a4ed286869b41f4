//! Distance and measure on the signed double cover of the chain automaton,
//! for state counts divisible by 6.
//!
//! Positions follow [`crate::families::SignedState`]. The target set `S`
//! holds the positive even and negative odd labels; the cycle `C` is the
//! part of `S` from `-n/3 + 1` up to `n`, on which `ab` acts as a rotation.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::automaton::{Dfa, StateSet, Word};
use crate::families::{a_family, b_family, negate_index, SignedState};
use crate::synchro::{optimal_sync_word, Objective};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("state count must be a positive multiple of 6, got {0}")]
    NotMultipleOfSix(usize),
    #[error("states are not all in S or all in -S")]
    MixedSignClass,
    #[error("measure of the empty set")]
    EmptySet,
    #[error("k = {k} outside {lo}..={hi}")]
    KOutOfRange { k: usize, lo: usize, hi: usize },
    #[error("label {0} is not a state")]
    BadState(i32),
    #[error(transparent)]
    Family(#[from] crate::families::FamilyError),
}

/// Which half of the double cover a set of states lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    Plus,
    Minus,
}

/// Precomputed structure of the double cover for one `n`.
#[derive(Debug, Clone)]
pub struct DistanceContext {
    n: usize,
    dfa: Dfa,
    s_set: StateSet,
    cycle: StateSet,
    /// Image of each state under `(ab)^(n/3)`.
    proj: Vec<usize>,
    /// `dist[p * 2n + q]` for `p, q` in the same class, else 0.
    dist: Vec<u16>,
}

impl DistanceContext {
    pub fn new(n: usize) -> Result<Self, AnalysisError> {
        if n == 0 || !n.is_multiple_of(6) {
            return Err(AnalysisError::NotMultipleOfSix(n));
        }
        let dfa = b_family(n)?;
        let m = 2 * n;
        let label = |v: i32| SignedState::new(v, n).expect("label in range").index(n);

        let mut s_set = StateSet::empty();
        for k in 1..=n / 2 {
            s_set.insert(label(2 * k as i32));
            s_set.insert(label(-(2 * k as i32) + 1));
        }
        let low = -((n / 3) as i32) + 1;
        let cycle: StateSet = s_set
            .iter()
            .filter(|&i| SignedState::from_index(i, n).value() >= low)
            .collect();

        let ab = |q: usize| dfa.step(dfa.step(q, 0), 1);
        let proj: Vec<usize> = (0..m).map(|q| (0..n / 3).fold(q, |x, _| ab(x))).collect();

        let mut dist = vec![0u16; m * m];
        for p in s_set.iter() {
            for q in s_set.iter() {
                let mut x = proj[p];
                let mut d = 0;
                for k in 1..=2 * m {
                    x = ab(x);
                    if x == proj[q] {
                        d = k;
                        break;
                    }
                }
                assert!(d > 0, "ab does not rotate the cycle");
                dist[p * m + q] = d as u16;
                dist[negate_index(q, n) * m + negate_index(p, n)] = d as u16;
            }
        }
        Ok(DistanceContext {
            n,
            dfa,
            s_set,
            cycle,
            proj,
            dist,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The double cover on `2n` states.
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn s_set(&self) -> StateSet {
        self.s_set
    }

    pub fn cycle(&self) -> StateSet {
        self.cycle
    }

    /// `2n/3`, the length of the cycle and the largest distance.
    pub fn period(&self) -> usize {
        2 * self.n / 3
    }

    pub fn negate_set(&self, set: StateSet) -> StateSet {
        set.iter().map(|i| negate_index(i, self.n)).collect()
    }

    pub fn class_of(&self, set: StateSet) -> Option<SignClass> {
        if set.is_subset(self.s_set) {
            Some(SignClass::Plus)
        } else if set.is_subset(self.negate_set(self.s_set)) {
            Some(SignClass::Minus)
        } else {
            None
        }
    }

    /// Index of state `n` or `-n` in the half given by `class`.
    pub fn top(&self, class: SignClass) -> usize {
        match class {
            SignClass::Plus => self.n - 1,
            SignClass::Minus => 2 * self.n - 1,
        }
    }

    /// Distance between two state indices of the same class.
    pub fn distance_index(&self, p: usize, q: usize) -> Result<usize, AnalysisError> {
        let pair = StateSet::singleton(p).union(StateSet::singleton(q));
        self.class_of(pair).ok_or(AnalysisError::MixedSignClass)?;
        Ok(self.dist[p * 2 * self.n + q] as usize)
    }

    /// Distance between two signed labels of the same class.
    pub fn distance(&self, p: SignedState, q: SignedState) -> Result<usize, AnalysisError> {
        self.distance_index(p.index(self.n), q.index(self.n))
    }

    /// Whether `p` and `q` land on the same cycle position.
    pub fn equivalent(&self, p: usize, q: usize) -> bool {
        let (pp, qq) = if self.s_set.contains(p) {
            (p, q)
        } else {
            (negate_index(p, self.n), negate_index(q, self.n))
        };
        self.proj[pp] == self.proj[qq]
    }

    #[inline]
    fn d(&self, p: usize, q: usize) -> usize {
        self.dist[p * 2 * self.n + q] as usize
    }

    /// Largest over `p` of the distance from `p` to its nearest member.
    pub fn measure(&self, set: StateSet) -> Result<usize, AnalysisError> {
        if set.is_empty() {
            return Err(AnalysisError::EmptySet);
        }
        self.class_of(set).ok_or(AnalysisError::MixedSignClass)?;
        Ok(self.measure_unchecked(set))
    }

    fn measure_unchecked(&self, set: StateSet) -> usize {
        set.iter()
            .map(|p| set.iter().map(|q| self.d(p, q)).min().unwrap())
            .max()
            .unwrap()
    }

    /// The set of signed labels as a state set.
    pub fn set_of(&self, labels: &[i32]) -> Result<StateSet, AnalysisError> {
        labels
            .iter()
            .map(|&v| {
                SignedState::new(v, self.n)
                    .map(|s| s.index(self.n))
                    .ok_or(AnalysisError::BadState(v))
            })
            .collect()
    }
}

/// Fewest switches of a word that takes some pair in `C` at distance at
/// most `k - 1` to a pair at distance `k + 1`. At `k = 2n/3 - 1` the start
/// pair must be at distance exactly `k - 1`.
pub fn min_sc_pair_increase(ctx: &DistanceContext, k: usize) -> Result<usize, AnalysisError> {
    let hi = ctx.period() - 1;
    if !(2..=hi).contains(&k) {
        return Err(AnalysisError::KOutOfRange { k, lo: 2, hi });
    }
    let m = 2 * ctx.n;
    let node = |x: usize, y: usize, tag: usize| (x * m + y) * 3 + tag;
    let mut dist = vec![u32::MAX; m * m * 3];
    let mut deque = VecDeque::new();
    for p in ctx.cycle.iter() {
        for q in ctx.cycle.iter() {
            let d = ctx.d(p, q);
            let ok = if k == hi { d == k - 1 } else { d < k };
            if p != q && ok {
                dist[node(p, q, 0)] = 0;
                deque.push_back((p, q, 0usize, 0u32));
            }
        }
    }
    while let Some((x, y, tag, c)) = deque.pop_front() {
        if c > dist[node(x, y, tag)] {
            continue;
        }
        if ctx.d(x, y) == k + 1 {
            return Ok(c as usize);
        }
        for s in 0..2 {
            let (nx, ny) = (ctx.dfa.step(x, s), ctx.dfa.step(y, s));
            let same = tag == s + 1;
            let nc = c + u32::from(!same);
            let v = node(nx, ny, s + 1);
            if nc < dist[v] {
                dist[v] = nc;
                if same {
                    deque.push_front((nx, ny, s + 1, nc));
                } else {
                    deque.push_back((nx, ny, s + 1, nc));
                }
            }
        }
    }
    unreachable!("every admissible k has a witness pair")
}

/// Closed-form value of [`min_sc_pair_increase`].
pub fn pair_increase_bound(n: usize, k: usize) -> usize {
    if k <= n / 3 {
        2 * n / 3 + 2 * k - 1
    } else {
        2 * n - 2 * k + 1
    }
}

/// The minimal-switch synchronizing word of `a_family(n)` for `n`
/// divisible by 6, assembled block by block.
pub fn canonical_word(n: usize) -> Result<Word, AnalysisError> {
    if n == 0 || !n.is_multiple_of(6) {
        return Err(AnalysisError::NotMultipleOfSix(n));
    }
    let b = Word::new(vec![1]);
    let ab = Word::new(vec![0, 1]);
    let ba = Word::new(vec![1, 0]);
    let third = n / 3;

    let mut w = b.concat(&ab.pow(third - 1));
    for k in 2..third {
        w = w.concat(&b).concat(&ba.pow(k)).concat(&ab.pow(third));
    }
    w = w.concat(&b).concat(&ba.pow(2 * third - 1)).concat(&b);
    for k in third + 1..2 * third {
        w = w.concat(&ba.pow(n - k)).concat(&b);
    }
    Ok(w.concat(&b))
}

/// Outcome of one lemma check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub id: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
}

impl fmt::Display for LemmaCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "LEMMA {} {} checked={} {}",
            self.id, verdict, self.checked, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Default number of sampled (set, word) pairs for [`verify_lemmas`].
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Seed for the sampled checks.
pub const SAMPLE_SEED: u64 = 0x5eed_5717;

fn check(id: &'static str, checked: u64, failure: Option<String>, ok_detail: String) -> LemmaCheck {
    LemmaCheck {
        id,
        passed: failure.is_none(),
        checked,
        detail: failure.unwrap_or(ok_detail),
    }
}

/// All sets reachable from any of `starts`.
fn reachable_sets(dfa: &Dfa, starts: impl IntoIterator<Item = StateSet>) -> HashSet<StateSet> {
    let mut seen: HashSet<StateSet> = HashSet::new();
    let mut queue: Vec<StateSet> = Vec::new();
    for s in starts {
        if seen.insert(s) {
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        for s in 0..dfa.k() {
            let y = dfa.image(x, s);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen
}

fn nonempty_subsets(set: StateSet) -> impl Iterator<Item = StateSet> {
    let members: Vec<usize> = set.iter().collect();
    (1u64..1 << members.len()).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &q)| q)
            .collect()
    })
}

fn lemma_subset_cycle(ctx: &DistanceContext) -> LemmaCheck {
    let cycle = ctx.cycle;
    let neg = ctx.negate_set(cycle);
    let seen = reachable_sets(&ctx.dfa, nonempty_subsets(cycle));
    let bad = seen.iter().find(|&&x| {
        (x.contains(ctx.top(SignClass::Plus)) && !x.is_subset(cycle))
            || (x.contains(ctx.top(SignClass::Minus)) && !x.is_subset(neg))
    });
    check(
        "L1",
        seen.len() as u64,
        bad.map(|x| format!("set {x:?} holds the top state outside the cycle")),
        "reachable sets from subsets of C".into(),
    )
}

fn lemma_distance(ctx: &DistanceContext) -> LemmaCheck {
    let p3 = ctx.period();
    let mut checked = 0u64;
    let mut failure = None;
    for class in [ctx.s_set, ctx.negate_set(ctx.s_set)] {
        for q in class.iter() {
            checked += 1;
            if ctx.d(q, q) != p3 {
                failure.get_or_insert(format!("d({q},{q}) = {}", ctx.d(q, q)));
            }
        }
        for p in class.iter() {
            for q in class.iter() {
                if ctx.equivalent(p, q) {
                    continue;
                }
                checked += 1;
                let d = ctx.d(p, q);
                if d == 0 || d >= p3 || d + ctx.d(q, p) != p3 {
                    failure.get_or_insert(format!("pair ({p},{q}) has d = {d}"));
                }
                for r in class.iter() {
                    if d < ctx.d(p, r) {
                        checked += 1;
                        if d + ctx.d(q, r) != ctx.d(p, r) {
                            failure.get_or_insert(format!("triangle ({p},{q},{r}) fails"));
                        }
                    }
                }
            }
        }
    }
    check("L2", checked, failure, "all distance identities, both classes".into())
}

fn lemma_cycle_pairs(ctx: &DistanceContext) -> LemmaCheck {
    let m = 2 * ctx.n;
    let mut seen = vec![false; m * m];
    let mut stack = Vec::new();
    for p in ctx.cycle.iter() {
        for q in ctx.cycle.iter() {
            seen[p * m + q] = true;
            stack.push((p, q));
        }
    }
    let mut checked = 0u64;
    let mut failure = None;
    while let Some((x, y)) = stack.pop() {
        checked += 1;
        if ctx.d(x, y) == ctx.period() && x != y {
            failure.get_or_insert(format!("pair ({x},{y}) at full distance but distinct"));
        }
        for s in 0..2 {
            let (nx, ny) = (ctx.dfa.step(x, s), ctx.dfa.step(y, s));
            if !seen[nx * m + ny] {
                seen[nx * m + ny] = true;
                stack.push((nx, ny));
            }
        }
    }
    check("L3", checked, failure, "reachable pairs from C x C".into())
}

fn lemma_measure_steps(ctx: &DistanceContext) -> LemmaCheck {
    let top = ctx.top(SignClass::Plus);
    let subsets: Vec<StateSet> = nonempty_subsets(ctx.s_set).collect();
    let failure = subsets.par_iter().find_map_any(|&x| {
        let mu = ctx.measure_unchecked(x);
        let mu_a = ctx.measure_unchecked(ctx.dfa.image(x, 0));
        let mu_b = ctx.measure_unchecked(ctx.dfa.image(x, 1));
        let ok = mu_a == mu && mu_b <= mu + 1 && (x.contains(top) || mu_b == mu);
        (!ok).then(|| format!("set {x:?}: mu={mu} after a {mu_a} after b {mu_b}"))
    });
    check("L6", subsets.len() as u64, failure, "all nonempty subsets of S".into())
}

fn lemma_increase_inside_cycle(ctx: &DistanceContext) -> LemmaCheck {
    let a = a_family(ctx.n).expect("n is valid");
    let word = match optimal_sync_word(&a, Objective::SwitchThenLength) {
        Ok(r) => r.word,
        Err(e) => return check("L7", 0, Some(e.to_string()), String::new()),
    };
    let cycle = ctx.cycle;
    let neg = ctx.negate_set(cycle);
    let mut x = ctx.s_set;
    let mut mu = ctx.measure_unchecked(x);
    let mut failure = None;
    let mut increases = 0;
    for (i, &s) in word.symbols().iter().enumerate() {
        let y = ctx.dfa.image(x, s);
        let mu_y = ctx.measure_unchecked(y);
        if mu_y > mu {
            increases += 1;
            if s != 1 || !(x.is_subset(cycle) || x.is_subset(neg)) || mu_y != mu + 1 {
                failure.get_or_insert(format!("step {i} raises measure from {x:?}"));
            }
        }
        x = y;
        mu = mu_y;
    }
    if !x.is_singleton() {
        failure.get_or_insert("optimal word does not collapse S".into());
    }
    check(
        "L7",
        word.len() as u64,
        failure,
        format!("{increases} measure increases along {}", word.compressed()),
    )
}

/// Whether some members `p, q` of `orig` with `d(p, q) <= mu(orig)` have
/// images at distance `mu(img)`. `img[i]` is the image of `orig[i]`.
fn setpair_holds(ctx: &DistanceContext, orig: &[usize], img: &[usize]) -> bool {
    let mu_a = ctx.measure_unchecked(orig.iter().copied().collect());
    let mu_b = ctx.measure_unchecked(img.iter().copied().collect());
    (0..orig.len()).any(|i| (0..orig.len()).any(|j| ctx.d(orig[i], orig[j]) <= mu_a && ctx.d(img[i], img[j]) == mu_b))
}

/// Checks the set-pair property on every tuple of images reachable from
/// `start`, returning the number of tuples and the first failure.
fn setpair_orbit(ctx: &DistanceContext, start: &[usize]) -> (u64, Option<String>) {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.to_vec()]);
    let mut stack = vec![start.to_vec()];
    let mut count = 0;
    while let Some(t) = stack.pop() {
        count += 1;
        if !setpair_holds(ctx, start, &t) {
            return (count, Some(format!("from {start:?} to {t:?}")));
        }
        for s in 0..2 {
            let u: Vec<usize> = t.iter().map(|&q| ctx.dfa.step(q, s)).collect();
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    (count, None)
}

fn distinct_positions(ctx: &DistanceContext, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &p)| set[i + 1..].iter().all(|&q| !ctx.equivalent(p, q)))
}

/// Follows a random word from `orig`, checking the property at each prefix.
fn setpair_walk(ctx: &DistanceContext, orig: &[usize], rng: &mut ChaCha8Rng, failure: &mut Option<String>) -> u64 {
    let mut img = orig.to_vec();
    let len = rng.random_range(1..=4 * ctx.n);
    for _ in 0..len {
        let s = rng.random_range(0..2);
        img.iter_mut().for_each(|q| *q = ctx.dfa.step(*q, s));
        if !setpair_holds(ctx, orig, &img) && failure.is_none() {
            *failure = Some(format!("sampled start {orig:?} reaches {img:?}"));
        }
    }
    len as u64
}

/// The set-pair property is checked for sets whose members sit at distinct
/// cycle positions and for sets reachable from `S`. Sets holding two
/// distinct states with the same position can violate it; those are
/// counted and reported but not treated as failures.
fn lemma_setpair(ctx: &DistanceContext, samples: usize) -> LemmaCheck {
    let members: Vec<usize> = ctx.s_set.iter().collect();
    let mut starts: Vec<Vec<usize>> = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            starts.push(vec![members[i], members[j]]);
            for l in j + 1..members.len() {
                starts.push(vec![members[i], members[j], members[l]]);
            }
        }
    }
    let (good, loose): (Vec<_>, Vec<_>) = starts.into_iter().partition(|t| distinct_positions(ctx, t));
    let (mut checked, mut failure) = good
        .par_iter()
        .map(|t| setpair_orbit(ctx, t))
        .reduce(|| (0, None), |(c1, f1), (c2, f2)| (c1 + c2, f1.or(f2)));
    let violations = loose.par_iter().filter(|t| setpair_orbit(ctx, t).1.is_some()).count();

    let reachable = reachable_sets(&ctx.dfa, [ctx.s_set]);
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let exhaustive_reachable = ctx.n <= 6;
    if exhaustive_reachable {
        let sets: Vec<Vec<usize>> = reachable.iter().map(|x| x.iter().collect()).collect();
        let (c, f) = sets
            .par_iter()
            .map(|t| setpair_orbit(ctx, t))
            .reduce(|| (0, None), |(c1, f1), (c2, f2)| (c1 + c2, f1.or(f2)));
        checked += c;
        failure = failure.or(f);
    } else {
        let mut sets: Vec<StateSet> = reachable.iter().copied().collect();
        sets.sort();
        for _ in 0..samples {
            let orig: Vec<usize> = sets[rng.random_range(0..sets.len())].iter().collect();
            checked += setpair_walk(ctx, &orig, &mut rng, &mut failure);
        }
    }

    for _ in 0..samples {
        let orig: Vec<usize> = members.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        let mut kept: Vec<usize> = Vec::new();
        for q in orig {
            if kept.iter().all(|&p| !ctx.equivalent(p, q)) {
                kept.push(q);
            }
        }
        if kept.len() >= 4 {
            checked += setpair_walk(ctx, &kept, &mut rng, &mut failure);
        }
    }
    let reach_mode = if exhaustive_reachable { "all" } else { "sampled" };
    check(
        "L-setpair",
        checked,
        failure,
        format!(
            "pair and triple orbits, {reach_mode} sets reachable from S, {samples} samples, seed {SAMPLE_SEED:#x}; \
             {violations} triples with coinciding positions violate the unrestricted form"
        ),
    )
}

fn lemma_pair_increase(ctx: &DistanceContext) -> LemmaCheck {
    let mut failure = None;
    let mut values = Vec::new();
    for k in 2..ctx.period() {
        let got = min_sc_pair_increase(ctx, k).expect("k in range");
        let want = pair_increase_bound(ctx.n, k);
        values.push(got.to_string());
        if got != want {
            failure.get_or_insert(format!("k={k} expected={want} got={got}"));
        }
    }
    check(
        "L4",
        values.len() as u64,
        failure,
        format!("pair increase costs {}", values.join(",")),
    )
}

/// Runs every lemma check at `n`, using `samples` random (set, word) pairs
/// where exhaustive coverage is out of reach.
pub fn verify_lemmas(n: usize, samples: usize) -> Result<LemmaReport, AnalysisError> {
    let ctx = DistanceContext::new(n)?;
    let checks = vec![
        lemma_subset_cycle(&ctx),
        lemma_distance(&ctx),
        lemma_cycle_pairs(&ctx),
        lemma_pair_increase(&ctx),
        lemma_measure_steps(&ctx),
        lemma_increase_inside_cycle(&ctx),
        lemma_setpair(&ctx, samples),
    ];
    Ok(LemmaReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx6() -> DistanceContext {
        DistanceContext::new(6).unwrap()
    }

    fn st(v: i32) -> SignedState {
        SignedState::new(v, 6).unwrap()
    }

    #[test]
    fn sets_have_expected_sizes() {
        for n in [6, 12] {
            let ctx = DistanceContext::new(n).unwrap();
            assert_eq!(ctx.s_set().len(), n);
            assert_eq!(ctx.cycle().len(), 2 * n / 3);
            assert!(ctx.cycle().is_subset(ctx.s_set()));
        }
        assert_eq!(ctx6().cycle(), ctx6().set_of(&[-1, 2, 4, 6]).unwrap());
        assert!(DistanceContext::new(9).is_err());
    }

    #[test]
    fn distances() {
        let ctx = ctx6();
        for v in [2, 4, 6, -1, -3, -5] {
            assert_eq!(ctx.distance(st(v), st(v)), Ok(4));
        }
        assert_eq!(ctx.distance(st(6), st(-1)), Ok(1));
        assert_eq!(ctx.distance(st(-1), st(6)), Ok(3));
        assert_eq!(ctx.distance(st(2), st(-2)), Err(AnalysisError::MixedSignClass));
        assert_eq!(ctx.distance(st(1), st(-2)), ctx.distance(st(2), st(-1)));
    }

    #[test]
    fn measures() {
        let ctx = ctx6();
        assert_eq!(ctx.measure(ctx.s_set()), Ok(1));
        assert_eq!(ctx.measure(ctx.negate_set(ctx.s_set())), Ok(1));
        assert_eq!(ctx.measure(ctx.set_of(&[4]).unwrap()), Ok(4));
        assert_eq!(ctx.measure(ctx.set_of(&[-1, 6]).unwrap()), Ok(3));
        assert_eq!(ctx.measure(StateSet::empty()), Err(AnalysisError::EmptySet));
        assert!(ctx.measure(ctx.set_of(&[2, 1]).unwrap()).is_err());
    }

    #[test]
    fn pair_increase_small() {
        let ctx = ctx6();
        assert_eq!(min_sc_pair_increase(&ctx, 2), Ok(7));
        assert_eq!(min_sc_pair_increase(&ctx, 3), Ok(7));
        assert!(min_sc_pair_increase(&ctx, 1).is_err());
        assert!(min_sc_pair_increase(&ctx, 4).is_err());
    }

    #[test]
    fn canonical_word_six() {
        let w = canonical_word(6).unwrap();
        assert!(w.to_string().starts_with("bab"));
        assert_eq!(w.switch_count(), 15);
        let a = a_family(6).unwrap();
        assert_eq!(a.synchronizes(&w), Ok(true));
        assert!(canonical_word(8).is_err());
    }

    #[test]
    fn lemmas_hold_at_six() {
        let report = verify_lemmas(6, 500).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 7);
        assert!(report.to_string().lines().all(|l| l.starts_with("LEMMA ")));
    }
}

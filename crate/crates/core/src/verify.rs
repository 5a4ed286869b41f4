//! The reproduction battery behind `syncswitch verify-paper`.
//!
//! Every check prints as `CHECK <id> PASS|FAIL expected=<e> got=<g>`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{canonical_word, min_sc_pair_increase, pair_increase_bound, verify_lemmas, DistanceContext};
use crate::automaton::{Dfa, IsoConvention, Word};
use crate::closure::{f2_transform, f_transform, power_closure};
use crate::families::{self, fixture, t7_shortest_words};
use crate::search::{cyclic_extremal_search, extremal_search, ExtremalReport, SearchOptions, Shard};
use crate::synchro::{
    count_optimal_words, is_synchronizing, min_switch_count, optimal_sync_word, shortest_sync_length, Objective,
};

/// Seed for the random automata in the closure and oracle checks.
pub const BATTERY_SEED: u64 = 20_160_901;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub got: String,
}

impl Check {
    pub fn new(id: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Check {
            id: id.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "CHECK {} {} expected={} got={}",
            self.id, verdict, self.expected, self.got
        )
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BatteryOptions {
    /// Include the six-state exhaustive search.
    pub long: bool,
    /// Worker threads for the searches; 0 means all available.
    pub jobs: usize,
}

fn show<T: fmt::Display, E: fmt::Display>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error({e})"),
    }
}

fn sw_of(a: &Dfa) -> String {
    show(min_switch_count(a))
}

fn ssl_of(a: &Dfa) -> String {
    show(shortest_sync_length(a))
}

/// A uniformly random binary table on `n` states.
pub fn random_binary(rng: &mut ChaCha8Rng, n: usize) -> Dfa {
    Dfa::from_fn(n, 2, |_, _| rng.random_range(0..n)).expect("valid table")
}

/// Shortest synchronizing length by plain enumeration of words in length
/// order. Returns `None` if nothing of length `<= limit` synchronizes.
pub fn brute_ssl(a: &Dfa, limit: usize) -> Option<usize> {
    let k = a.k();
    for len in 0..=limit {
        let total = k.checked_pow(len as u32)?;
        for code in 0..total {
            let mut set = a.full_set();
            let mut c = code;
            for _ in 0..len {
                set = a.image(set, c % k);
                c /= k;
            }
            if set.is_singleton() {
                return Some(len);
            }
        }
    }
    None
}

/// Minimal switch count by enumerating run sequences: `s` alternating runs,
/// each a distinct power of its symbol.
pub fn brute_sw(a: &Dfa, limit: usize) -> Option<usize> {
    let n = a.n();
    // all distinct nonzero powers of every symbol, as state maps
    let powers: Vec<Vec<Vec<usize>>> = (0..a.k())
        .map(|s| {
            let mut seen: Vec<Vec<usize>> = Vec::new();
            let mut cur: Vec<usize> = (0..n).map(|q| a.step(q, s)).collect();
            while !seen.contains(&cur) {
                seen.push(cur.clone());
                cur = cur.iter().map(|&q| a.step(q, s)).collect();
            }
            seen
        })
        .collect();
    fn go(powers: &[Vec<Vec<usize>>], set: Vec<bool>, last: Option<usize>, runs_left: usize) -> bool {
        if set.iter().filter(|&&b| b).count() == 1 {
            return true;
        }
        if runs_left == 0 {
            return false;
        }
        for (s, maps) in powers.iter().enumerate() {
            if Some(s) == last {
                continue;
            }
            for m in maps {
                let mut next = vec![false; set.len()];
                for (q, &inside) in set.iter().enumerate() {
                    if inside {
                        next[m[q]] = true;
                    }
                }
                if go(powers, next, Some(s), runs_left - 1) {
                    return true;
                }
            }
        }
        false
    }
    (0..=limit).find(|&s| go(&powers, vec![true; n], None, s))
}

fn cerny_checks(emit: &mut dyn FnMut(Check)) {
    for n in 2..=16 {
        let c = families::cerny(n).unwrap();
        emit(Check::new(format!("cerny-ssl-{n}"), (n - 1) * (n - 1), ssl_of(&c)));
        emit(Check::new(format!("cerny-sw-{n}"), 2 * n - 3, sw_of(&c)));
    }
}

fn p_checks(emit: &mut dyn FnMut(Check)) {
    for n in 2..=12 {
        let p = families::p_family(n).unwrap();
        let want = n * (n - 1) / 2;
        emit(Check::new(
            format!("p-{n}"),
            format!("{want}/{want}"),
            format!("{}/{}", sw_of(&p), ssl_of(&p)),
        ));
    }
}

fn p_variant_checks(emit: &mut dyn FnMut(Check)) {
    for n in 2..=12 {
        let p = families::p_variant(n).unwrap();
        emit(Check::new(format!("p-variant-{n}"), (n * n + n - 4) / 2, sw_of(&p)));
    }
}

fn r_checks(emit: &mut dyn FnMut(Check)) {
    let r5 = families::r_family(5).unwrap();
    emit(Check::new("r-5-ssl", 16, ssl_of(&r5)));
    for n in 5..=12 {
        let r = families::r_family(n).unwrap();
        emit(Check::new(format!("r-{n}"), n * (n + 1) / 2, sw_of(&r)));
    }
}

fn q_checks(emit: &mut dyn FnMut(Check)) {
    for n in (4..=16).step_by(2) {
        let q = families::q_family(n).unwrap();
        emit(Check::new(format!("q-{n}"), (n * n + 10 - 6 * n) / 2, sw_of(&q)));
    }
}

fn a_checks(emit: &mut dyn FnMut(Check)) {
    for n in 3..=18 {
        let a = families::a_family(n).unwrap();
        // ceil(2n(n-2)/3 - 1) in integers
        let want = (2 * n * (n - 2)).div_ceil(3) - 1;
        emit(Check::new(format!("a-{n}"), want, sw_of(&a)));
    }
}

fn transform_checks(emit: &mut dyn FnMut(Check)) {
    let f4 = f_transform(&families::cerny(4).unwrap());
    emit(Check::new("f-cerny-4", 18, sw_of(&f4)));
    let mut bases: Vec<(String, Dfa)> = (2..=7)
        .map(|n| (format!("cerny-{n}"), families::cerny(n).unwrap()))
        .collect();
    bases.extend(["t3", "t4", "t5"].map(|t| (t.to_string(), fixture(t).unwrap())));
    for (name, a) in &bases {
        let twice = shortest_sync_length(a).map(|l| 2 * l);
        emit(Check::new(format!("f-{name}"), show(twice), sw_of(&f_transform(a))));
        let small_cerny = name
            .strip_prefix("cerny-")
            .is_none_or(|n| n.parse::<usize>().unwrap() <= 6);
        if small_cerny {
            let f2 = f2_transform(a).expect("binary");
            emit(Check::new(format!("f2-{name}"), show(twice), sw_of(&f2)));
        }
    }
}

/// Every generated automaton with at most `max_n` states.
pub fn family_members(max_n: usize) -> Vec<(String, Dfa)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.push((format!("cerny-{n}"), families::cerny(n).unwrap()));
        out.push((format!("p-{n}"), families::p_family(n).unwrap()));
        out.push((format!("p-variant-{n}"), families::p_variant(n).unwrap()));
        if n >= 5 {
            out.push((format!("r-{n}"), families::r_family(n).unwrap()));
        }
        if n >= 4 && n % 2 == 0 {
            out.push((format!("q-{n}"), families::q_family(n).unwrap()));
        }
        if n >= 3 {
            out.push((format!("a-{n}"), families::a_family(n).unwrap()));
        }
        if n % 6 == 0 && 2 * n <= max_n {
            out.push((format!("b-{n}"), families::b_family(n).unwrap()));
        }
    }
    out.push(("cyclic-counterexample".into(), families::cyclic_counterexample()));
    for f in families::FIXTURES {
        let a = fixture(f.name).unwrap();
        if a.n() <= max_n {
            out.push((f.name.to_string(), a));
        }
    }
    out
}

fn closure_checks(emit: &mut dyn FnMut(Check)) {
    let members = family_members(10);
    let agree = |a: &Dfa| {
        let sw = min_switch_count(a);
        let closed = shortest_sync_length(&power_closure(a).0);
        sw.is_ok() && sw == closed
    };
    let good = members.iter().filter(|(_, a)| agree(a)).count();
    emit(Check::new(
        "closure-families",
        format!("{}/{}", members.len(), members.len()),
        format!("{good}/{}", members.len()),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(BATTERY_SEED);
    let mut tried = 0;
    let mut good = 0;
    while tried < 500 {
        let n = rng.random_range(2..=8);
        let a = random_binary(&mut rng, n);
        if !is_synchronizing(&a) {
            continue;
        }
        tried += 1;
        good += agree(&a) as usize;
    }
    emit(Check::new("closure-random", "500/500", format!("{good}/500")));
}

fn search_checks(opts: &BatteryOptions, emit: &mut dyn FnMut(Check), cyclic: bool) {
    let quiet = |_: &Shard, _: &ExtremalReport| {};
    let sopts = SearchOptions {
        jobs: opts.jobs,
        allow_long: opts.long,
        ..SearchOptions::default()
    };
    if cyclic {
        return cyclic_checks(&sopts, emit);
    }
    let mut table = vec![(2, 1, None), (3, 3, Some(6)), (4, 7, Some(2)), (5, 11, Some(6))];
    if opts.long {
        table.push((6, 19, Some(2)));
    }
    for (n, max, forms) in table {
        let got = extremal_search(n, 2, &sopts, &quiet).map(|r| {
            let count = r.extremal_forms(IsoConvention::StatesAndSymbols).len();
            match forms {
                Some(_) => format!("{}/{count}", r.max_sw.unwrap_or(0)),
                None => r.max_sw.unwrap_or(0).to_string(),
            }
        });
        let want = match forms {
            Some(c) => format!("{max}/{c}"),
            None => max.to_string(),
        };
        emit(Check::new(format!("search-{n}-states-and-symbols"), want, show(got)));
    }
}

fn cyclic_checks(sopts: &SearchOptions, emit: &mut dyn FnMut(Check)) {
    let quiet = |_: &Shard, _: &ExtremalReport| {};
    for (n, k) in [(5, 2), (7, 2), (3, 3)] {
        let got = cyclic_extremal_search(n, k, sopts, &quiet).map(|r| r.max_sw.unwrap_or(0));
        emit(Check::new(format!("cyclic-{n}-{k}"), 2 * n - 3, show(got)));
    }
    let c = families::cyclic_counterexample();
    let word: Word = "babacb".parse().unwrap();
    emit(Check::new(
        "cyclic-counterexample",
        "6/true",
        format!("{}/{}", sw_of(&c), show(c.synchronizes(&word))),
    ));
}

fn fixture_checks(emit: &mut dyn FnMut(Check)) {
    for f in families::FIXTURES {
        if f.ssl == 0 {
            continue;
        }
        let a = fixture(f.name).unwrap();
        let shortest = optimal_sync_word(&a, Objective::Length);
        let count = count_optimal_words(&a, Objective::Length);
        let mut want = format!("sw={} ssl={}", f.sw, f.ssl);
        let mut got = format!(
            "sw={} ssl={}",
            sw_of(&a),
            show(shortest.as_ref().map(|r| r.length).map_err(|e| *e))
        );
        if let Some(c) = f.shortest_count {
            want += &format!(" count={c}");
            got += &format!(" count={}", show(count));
        }
        if let Some(s) = f.shortest_sw {
            want += &format!(" shortest-sw={s}");
            got += &format!(
                " shortest-sw={}",
                show(shortest.as_ref().map(|r| r.switch).map_err(|e| *e))
            );
        }
        if let Some(w) = f.shortest_word {
            want += " word=ok";
            let ok = shortest
                .as_ref()
                .is_ok_and(|r| r.word == Word::parse_compressed(w).unwrap());
            got += if ok { " word=ok" } else { " word=differs" };
        }
        if let Some(len) = f.min_sw_length {
            let r = optimal_sync_word(&a, Objective::SwitchThenLength);
            want += &format!(" min-sw-word={}/{len}", f.sw);
            got += &format!(" min-sw-word={}", show(r.map(|r| format!("{}/{}", r.switch, r.length))));
        }
        if f.name == "t7" {
            let all = t7_shortest_words()
                .iter()
                .all(|w| a.synchronizes(w) == Ok(true) && w.len() == 32);
            want += " listed=ok";
            got += if all { " listed=ok" } else { " listed=bad" };
        }
        emit(Check::new(format!("fixture-{}", f.name), want, got));
    }
}

fn analysis_checks(emit: &mut dyn FnMut(Check)) {
    for n in [6, 12] {
        let report = verify_lemmas(n, crate::analysis::DEFAULT_SAMPLES);
        let got = show(report.map(|r| {
            let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).map(|c| c.id).collect();
            if failed.is_empty() {
                "all-pass".to_string()
            } else {
                format!("failed:{}", failed.join(","))
            }
        }));
        emit(Check::new(format!("lemmas-{n}"), "all-pass", got));

        let ctx = DistanceContext::new(n).unwrap();
        let ks = 2..ctx.period();
        let want: Vec<String> = ks.clone().map(|k| pair_increase_bound(n, k).to_string()).collect();
        let got: Vec<String> = ks.map(|k| show(min_sc_pair_increase(&ctx, k))).collect();
        emit(Check::new(format!("pair-increase-{n}"), want.join(","), got.join(",")));

        let a = families::a_family(n).unwrap();
        let w = canonical_word(n).unwrap();
        emit(Check::new(
            format!("canonical-word-{n}"),
            format!("sync=true sw={}", 2 * n * (n - 2) / 3 - 1),
            format!("sync={} sw={}", show(a.synchronizes(&w)), w.switch_count()),
        ));
        let opt = optimal_sync_word(&a, Objective::SwitchThenLength);
        emit(Check::new(
            format!("unique-optimum-{n}"),
            "count=1 canonical=true",
            format!(
                "count={} canonical={}",
                show(count_optimal_words(&a, Objective::SwitchThenLength)),
                opt.is_ok_and(|r| r.word == w)
            ),
        ));
    }
}

fn oracle_checks(emit: &mut dyn FnMut(Check)) {
    let mut total = 0;
    let mut good = 0;
    let mut compare = |a: &Dfa| {
        let sync = is_synchronizing(a);
        let ssl = shortest_sync_length(a).ok();
        let sw = min_switch_count(a).ok();
        let ok = if sync {
            let l = ssl.unwrap_or(0);
            let s = sw.unwrap_or(0);
            brute_ssl(a, l) == Some(l) && brute_sw(a, s) == Some(s)
        } else {
            ssl.is_none() && sw.is_none() && brute_ssl(a, 2).is_none()
        };
        total += 1;
        good += ok as usize;
    };
    for n in 1..=3usize {
        let size = n.pow((2 * n) as u32);
        for code in 0..size {
            let mut c = code;
            let a = Dfa::from_fn(n, 2, |_, _| {
                let t = c % n;
                c /= n;
                t
            })
            .unwrap();
            compare(&a);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(BATTERY_SEED + 1);
    for _ in 0..200 {
        compare(&random_binary(&mut rng, 4));
    }
    emit(Check::new(
        "oracle",
        format!("{total}/{total}"),
        format!("{good}/{total}"),
    ));
}

/// One acceptance item: its id and the sub-checks behind it.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub check: Check,
    pub details: Vec<Check>,
}

type Section = fn(&BatteryOptions, &mut dyn FnMut(Check));

const SECTIONS: &[(&str, Section)] = &[
    ("1-cerny", |_, e| cerny_checks(e)),
    ("2-p-family", |_, e| p_checks(e)),
    ("3-p-variant", |_, e| p_variant_checks(e)),
    ("4-r-family", |_, e| r_checks(e)),
    ("5-q-family", |_, e| q_checks(e)),
    ("6-a-family", |_, e| a_checks(e)),
    ("7-transforms", |_, e| transform_checks(e)),
    ("8-power-closure", |_, e| closure_checks(e)),
    ("9-exhaustive", |o, e| search_checks(o, e, false)),
    ("10-fixtures", |_, e| fixture_checks(e)),
    ("11-cyclic", |o, e| search_checks(o, e, true)),
    ("12-lemmas", |_, e| analysis_checks(e)),
    ("13-oracle", |_, e| oracle_checks(e)),
];

/// Ids of the acceptance items, in order.
pub fn criterion_ids() -> Vec<&'static str> {
    SECTIONS.iter().map(|(id, _)| *id).collect()
}

/// Runs one acceptance item by id.
pub fn run_criterion(id: &str, opts: &BatteryOptions) -> Option<Criterion> {
    let (id, section) = SECTIONS.iter().find(|(name, _)| *name == id)?;
    let mut details = Vec::new();
    section(opts, &mut |c| details.push(c));
    let total = details.len();
    let passed = details.iter().filter(|c| c.passed()).count();
    let mut got = format!("{passed}/{total}");
    if let Some(bad) = details.iter().find(|c| !c.passed()) {
        got += &format!(";first-failure={}:{}", bad.id, bad.got.replace(' ', ","));
    }
    Some(Criterion {
        check: Check::new(*id, format!("{total}/{total}"), got),
        details,
    })
}

/// Runs every acceptance item, passing each to `emit` as soon as it is
/// known. Returns the number of failed items.
pub fn run_battery(opts: &BatteryOptions, emit: &mut dyn FnMut(&Criterion)) -> usize {
    let mut failures = 0;
    for id in criterion_ids() {
        let c = run_criterion(id, opts).expect("known id");
        failures += usize::from(!c.check.passed());
        emit(&c);
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_line_format() {
        let c = Check::new("x-1", 5, 5);
        assert_eq!(c.to_string(), "CHECK x-1 PASS expected=5 got=5");
        assert_eq!(Check::new("y", 1, 2).to_string(), "CHECK y FAIL expected=1 got=2");
    }

    #[test]
    fn brute_force_agrees_on_cerny() {
        let c = families::cerny(4).unwrap();
        assert_eq!(brute_ssl(&c, 9), Some(9));
        assert_eq!(brute_ssl(&c, 8), None);
        assert_eq!(brute_sw(&c, 5), Some(5));
        assert_eq!(brute_sw(&c, 4), None);
    }
}

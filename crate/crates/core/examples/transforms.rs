//! The doubling transforms turn a shortest synchronizing length into a
//! switch count.
//!
//! ```bash
//! cargo run --release --example transforms
//! ```

use syncswitch::closure::{f2_transform, f_transform};
use syncswitch::families::{cerny, fixture};
use syncswitch::synchro::{min_switch_count, shortest_sync_length};

fn main() {
    let mut cases: Vec<(String, _)> = (2..=6).map(|n| (format!("cerny {n}"), cerny(n).unwrap())).collect();
    cases.extend(["t3", "t4", "t5"].map(|t| (t.to_string(), fixture(t).unwrap())));
    println!("{:<9} {:>4} {:>6} {:>7}", "automaton", "ssl", "sw(F)", "sw(F2)");
    for (name, dfa) in cases {
        let ssl = shortest_sync_length(&dfa).unwrap();
        let f = min_switch_count(&f_transform(&dfa)).unwrap();
        let f2 = min_switch_count(&f2_transform(&dfa).unwrap()).unwrap();
        println!("{name:<9} {ssl:>4} {f:>6} {f2:>7}");
    }
}

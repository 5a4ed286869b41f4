//! The switch count of an automaton is the shortest synchronizing length of
//! its power closure.
//!
//! ```bash
//! cargo run --release --example power_closure
//! ```

use syncswitch::automaton::serialize_dfa;
use syncswitch::closure::power_closure;
use syncswitch::families::cerny;
use syncswitch::synchro::{min_switch_count, optimal_sync_word, shortest_sync_length, Objective};
use syncswitch::Word;

fn main() {
    let dfa = cerny(5).unwrap();
    let (closed, map) = power_closure(&dfa);
    print!("{}{}", map.comment_lines(), serialize_dfa(&closed));

    let short = optimal_sync_word(&closed, Objective::Length).unwrap();
    let expanded = Word::new(map.expand(short.word.symbols()));
    println!("closure word {} expands to {}", short.word, expanded.compressed());
    println!(
        "ssl(closure) = {}, sw = {}, expanded word synchronizes: {}",
        shortest_sync_length(&closed).unwrap(),
        min_switch_count(&dfa).unwrap(),
        dfa.synchronizes(&expanded).unwrap()
    );
}

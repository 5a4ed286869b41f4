//! Optimal words under each objective, and how many there are.
//!
//! ```bash
//! cargo run --release --example optimal_words
//! ```

use syncswitch::families::fixture;
use syncswitch::synchro::{count_optimal_words, optimal_sync_word, Objective};

fn main() {
    for name in ["t4", "t7", "t8a"] {
        let dfa = fixture(name).unwrap();
        println!("{name} ({} states)", dfa.n());
        for objective in [Objective::Length, Objective::SwitchThenLength] {
            let r = optimal_sync_word(&dfa, objective).unwrap();
            let count = count_optimal_words(&dfa, objective).unwrap();
            println!(
                "  {objective:<18} len={:<3} sw={:<3} count={count:<3} {}",
                r.length,
                r.switch,
                r.word.compressed()
            );
        }
    }
}

//! Shortest synchronizing length against minimal switch count.
//!
//! ```bash
//! cargo run --release --example switch_count
//! ```

use syncswitch::families::cerny;
use syncswitch::synchro::{min_switch_count, shortest_sync_length};

fn main() {
    println!("{:>3} {:>5} {:>4}", "n", "ssl", "sw");
    for n in 2..=12 {
        let dfa = cerny(n).expect("n >= 2");
        let ssl = shortest_sync_length(&dfa).unwrap();
        let sw = min_switch_count(&dfa).unwrap();
        println!("{n:>3} {ssl:>5} {sw:>4}");
    }
}

//! Exhaustive search for binary automata with the largest switch count.
//!
//! ```bash
//! cargo run --release --example extremal_search -- 4
//! ```

use syncswitch::search::{extremal_search, shard_line, SearchOptions};
use syncswitch::IsoConvention;

fn main() {
    let n: usize = std::env::args().nth(1).map_or(4, |s| s.parse().expect("n"));
    let progress = |shard: &_, report: &_| eprintln!("{}", shard_line(shard, report));
    let report = extremal_search(n, 2, &SearchOptions::default(), &progress).unwrap();
    print!("{}", report.render(IsoConvention::StatesAndSymbols));
    eprintln!("elapsed {:.2?}", report.elapsed);
}

//! Largest switch count when the first symbol is a full cycle.
//!
//! ```bash
//! cargo run --release --example cyclic_search
//! ```

use syncswitch::search::{cyclic_extremal_search, SearchOptions};

fn main() {
    let quiet = |_: &_, _: &_| {};
    for (n, k) in [(3, 2), (4, 2), (5, 2), (6, 2), (3, 3), (4, 3)] {
        let r = cyclic_extremal_search(n, k, &SearchOptions::default(), &quiet).unwrap();
        println!(
            "n={n} k={k} max={} bound 2n-3={} scanned={}",
            r.max_sw.unwrap_or(0),
            2 * n - 3,
            r.scanned
        );
    }
}

//! Structural checks on the distance measure behind the A family.
//!
//! ```bash
//! cargo run --release --example lemma_suite -- 12
//! ```

use syncswitch::analysis::{canonical_word, verify_lemmas, DEFAULT_SAMPLES};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("n"));
    let report = verify_lemmas(n, DEFAULT_SAMPLES).expect("n divisible by 6");
    print!("{report}");
    let w = canonical_word(n).unwrap();
    println!("canonical word: {} (sw {})", w.compressed(), w.switch_count());
}

//! Switch counts of the generated families.
//!
//! ```bash
//! cargo run --release --example families
//! ```

use syncswitch::families::{generate, FamilyId};
use syncswitch::synchro::min_switch_count;

fn main() {
    let rows: [(&str, &[usize]); 6] = [
        ("cerny", &[4, 8, 12]),
        ("p", &[4, 8, 12]),
        ("p-variant", &[4, 8, 12]),
        ("r", &[5, 8, 12]),
        ("q", &[4, 8, 12]),
        ("a", &[6, 12, 18]),
    ];
    for (family, sizes) in rows {
        let id: FamilyId = family.parse().unwrap();
        let counts: Vec<String> = sizes
            .iter()
            .map(|&n| {
                let dfa = generate(&id, Some(n)).unwrap();
                format!("n={n}: {}", min_switch_count(&dfa).unwrap())
            })
            .collect();
        println!("{family:<10} {}", counts.join("  "));
    }
    let c = generate(&FamilyId::CyclicCounterexample, None).unwrap();
    println!("cyclic counterexample: {}", min_switch_count(&c).unwrap());
}

//! Runs the whole reproduction battery and prints one line per item.
//!
//! ```bash
//! cargo run --release --example reproduce
//! ```

use syncswitch::verify::{run_battery, BatteryOptions};

fn main() {
    let failures = run_battery(&BatteryOptions::default(), &mut |c| println!("{}", c.check));
    println!("{failures} failing item(s)");
}

//! Reading, writing and canonicalizing automata.
//!
//! ```bash
//! cargo run --example text_format
//! ```

use syncswitch::automaton::{parse_dfa, serialize_dfa};
use syncswitch::IsoConvention;

const INPUT: &str = "\
# three states, two symbols
3 2
1 0
2 1
0 1
";

fn main() {
    let dfa = parse_dfa(INPUT).unwrap();
    print!("{}", serialize_dfa(&dfa));
    for conv in [IsoConvention::StatesOnly, IsoConvention::StatesAndSymbols] {
        println!("# canonical ({conv})");
        print!("{}", serialize_dfa(&dfa.canonical_form(conv)));
    }
    let word = "ab^2a".parse::<syncswitch::Word>().unwrap_err();
    println!("plain parse rejects powers: {word}");
    let word = syncswitch::Word::parse_compressed("ab^2a").unwrap();
    println!("{} -> {:?}", word, dfa.apply_set(dfa.full_set(), &word).unwrap());
}

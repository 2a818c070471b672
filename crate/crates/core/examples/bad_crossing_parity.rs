// The single B-free term A^k of a resolution output, and k = p - n.
//
//     cargo run --example bad_crossing_parity ["3: 1 -2 1 -2"]

use braidskein::analysis::{bad_counts, bfree_term, parity_consistency};
use braidskein::{label_only, parse_word, resolve};

fn main() {
    let words: Vec<String> = match std::env::args().nth(1) {
        Some(w) => vec![w],
        None => ["2: 1 1 1", "2: -1", "3: 1 -2 1 -2", "3: 1 1 2 -1 -1 2 2", "4: 1 -2 3 -1 2 -3"]
            .map(String::from)
            .to_vec(),
    };
    for text in &words {
        let w = parse_word(text).expect("valid word");
        let counts = bad_counts(&w);
        let term = bfree_term(&resolve(&w)).expect("resolution output");
        let report = parity_consistency(&w).expect("resolution output");
        println!("{w}");
        println!("  labels   {}", label_only(&w));
        println!("  p={} n={}  B-free term {} A^{} at {}", counts.positive_bad, counts.negative_bad, term.coefficient, term.a_exponent, term.partition);
        println!("  consistent: {}", report.consistent);
        assert!(report.consistent);
    }
}

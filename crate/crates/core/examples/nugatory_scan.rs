// Every single crossing change of a braid-index-3 closed 3-braid changes
// the output, so none of its crossings is nugatory.
//
//     cargo run --example nugatory_scan ["3: 1 -2 1 -2"]

use braidskein::analysis::nugatory_scan;
use braidskein::homfly::{certify_braid_index_3, Certificate};
use braidskein::parse_word;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3: 1 -2 1 -2".into());
    let w = parse_word(&text).expect("valid word");
    let certificate = certify_braid_index_3(&w).expect("a 3-braid");
    println!("{w}: braid index 3 {certificate}");

    let report = nugatory_scan(&w);
    for e in &report.entries {
        println!("  change {}: {} -> {} (k {:+})", e.crossing, e.changed_word, e.verdict, e.exponent_delta);
    }
    if certificate == Certificate::Certified {
        assert!(report.all_different());
        println!("no nugatory crossings");
    }

    // a kink: nugatory, yet the diagram output still changes
    let kink = nugatory_scan(&parse_word("2: 1").expect("valid word"));
    println!("2: 1 -> 2: -1 is {} although the crossing is nugatory", kink.entries[0].verdict);
}

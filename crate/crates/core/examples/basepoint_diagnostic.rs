// Starting the first traversal somewhere other than the innermost strand.
// Only the canonical choice yields basis coordinates; the others are shown
// for comparison.
//
//     cargo run --example basepoint_diagnostic ["2: 1 1 1"]

use braidskein::parse_word;
use braidskein::resolve::compare_basepoints;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "2: 1 1 1".into());
    let w = parse_word(&text).expect("valid word");
    let report = compare_basepoints(&w);
    for (s, v) in &report.outputs {
        println!("start at {s}: {v}");
    }
    println!("all choices agree: {}", report.consistent);
}

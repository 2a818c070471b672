// On four strands exchange moves no longer preserve the output: lists
// isotopic pairs with different resolutions.
//
//     cargo run --release --example exchange_divergence [max_block_len]

use braidskein::mtws::search_exchange_divergence;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let report = search_exchange_divergence(4, max).expect("n = 4");
    println!(
        "{} of {} exchange pairs diverge (|u|,|v| <= {max}); knots among them: {}",
        report.divergences.len(),
        report.instances,
        report.any_knot()
    );
    for d in report.divergences.iter().filter(|d| d.is_knot).take(3) {
        println!("{}\n  {}\n{}\n  {}\n", d.left, d.left_output, d.right, d.right_output);
        assert!(d.same_link);
    }
    let three = search_exchange_divergence(3, max).expect("n = 3");
    println!("three strands: {} divergences", three.divergences.len());
}

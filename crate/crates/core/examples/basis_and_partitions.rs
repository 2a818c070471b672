// The basis braids v_λ: each resolves to its own basis vector.
//
//     cargo run --example basis_and_partitions [n]

use braidskein::braid::{basis_braid, partitions_of};
use braidskein::resolve;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let lambdas = partitions_of(n).expect("n >= 1");
    println!("{} partitions of {n}", lambdas.len());
    for lambda in &lambdas {
        let w = basis_braid(lambda, n).expect("partition of n");
        let v = resolve(&w);
        println!("{:<14} {:<22} -> {v}", lambda.to_string(), w.to_string());
        assert_eq!(v.to_string(), format!("{lambda}: 1"));
    }
}

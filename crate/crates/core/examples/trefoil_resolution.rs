// Resolves the trefoil as the closure of σ1³ and prints the resolution tree.
//
//     cargo run --example trefoil_resolution

use braidskein::{label_only, parse_word, resolution_tree, resolve};

fn main() {
    let trefoil = parse_word("2: 1 1 1").expect("valid word");

    println!("labels: {}", label_only(&trefoil));
    println!("{}", resolution_tree(&trefoil).render());

    // T^3 = (A + B^2) T + AB in the Hecke algebra
    let v = resolve(&trefoil);
    println!("output: {v}");
    assert_eq!(v.to_string(), "(2): A + B^2 ; (1,1): A*B");
}

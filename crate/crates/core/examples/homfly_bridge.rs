// HOMFLY and Jones polynomials from the resolution output, checked against
// the direct skein recursion, and the braid index bound they give.
//
//     cargo run --example homfly_bridge

use braidskein::homfly::{certify_braid_index_3, homfly_oracle, jones, mfw_lower_bound, to_homfly};
use braidskein::{parse_word, resolve};

fn main() {
    for (name, text) in [
        ("unknot", "1:"),
        ("trefoil", "2: 1 1 1"),
        ("Hopf link", "2: 1 1"),
        ("figure-eight", "3: 1 -2 1 -2"),
        ("5_2", "3: 1 1 1 2 -1 2"),
    ] {
        let w = parse_word(text).expect("valid word");
        let h = to_homfly(&resolve(&w));
        assert_eq!(h, homfly_oracle(&w));
        println!("{name:<13} {w}");
        println!("  HOMFLY  {h}");
        println!("  Jones   {}", jones(&h).expect("a link polynomial"));
        println!("  MFW bound {}", mfw_lower_bound(&h).expect("nonzero"));
        if w.strands() == 3 {
            println!("  braid index 3: {}", certify_braid_index_3(&w).expect("a 3-braid"));
        }
    }
}

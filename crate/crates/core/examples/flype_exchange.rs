// Both sides of flype and exchange moves on 3-braids give the same output.
//
//     cargo run --example flype_exchange

use braidskein::braid::Sign;
use braidskein::homfly::homfly_oracle;
use braidskein::mtws::{exchange_pair, flype_pair, signed_words, ExchangeInstance, FlypeInstance};
use braidskein::resolve;

fn main() {
    let f = FlypeInstance { a: 2, b: 3, c: 2, epsilon: Sign::Positive };
    let (l, r) = flype_pair(&f);
    println!("flype    {l}  <->  {r}");
    println!("  {}", resolve(&l));
    assert_eq!(resolve(&l), resolve(&r));
    assert_eq!(homfly_oracle(&l), homfly_oracle(&r));

    let e = ExchangeInstance { u: vec![1, 1], v: vec![1, 1, 1] };
    let (l, r) = exchange_pair(&e, 3).expect("blocks on strands 1..2");
    println!("exchange {l}  <->  {r}");
    println!("  {}", resolve(&l));
    assert_eq!(resolve(&l), resolve(&r));

    let blocks = signed_words(1, 4);
    let mut checked = 0;
    for u in &blocks {
        for v in &blocks {
            let (l, r) = exchange_pair(&ExchangeInstance { u: u.clone(), v: v.clone() }, 3).expect("generator 1");
            assert_eq!(resolve(&l), resolve(&r), "{l} / {r}");
            checked += 1;
        }
    }
    println!("{checked} 3-strand exchange pairs agree");
}

//! Invariance of the resolution under braid isotopy and conjugation.

use braidskein::braid::BraidWord;
use braidskein::resolve;
use proptest::prelude::*;

fn all_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|g| [g, -g]).collect();
    let mut layer = vec![Vec::<i32>::new()];
    let mut out = vec![BraidWord::identity(strands)];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |&a| [w.as_slice(), &[a]].concat()))
            .collect();
        out.extend(layer.iter().map(|w| BraidWord::from_signed(strands, w).unwrap()));
    }
    out
}

#[test]
fn rotations_relations_and_reduction_preserve_output() {
    for strands in [2, 3, 4] {
        let max_len = if strands == 4 { 4 } else { 6 };
        for w in all_words(strands, max_len) {
            let base = resolve(&w);
            assert_eq!(resolve(&w.free_reduce()), base, "free reduction of {w}");
            for k in 0..=w.len() {
                assert_eq!(resolve(&w.cyclic_rotate(k).unwrap()), base, "rotation {k} of {w}");
            }
            for pos in w.braid_relation_sites() {
                let moved = w.apply_braid_relation_at(pos).unwrap();
                assert_eq!(resolve(&moved), base, "relation at {pos} of {w} gives {moved}");
            }
        }
    }
}

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        let signed: Vec<i32> = ls.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
        BraidWord::from_signed(strands, &signed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_preserves_output(w in word(3, 8), a in word(3, 3)) {
        prop_assert_eq!(resolve(&w.conjugate_by(&a).unwrap()), resolve(&w));
    }

    #[test]
    fn conjugation_preserves_output_on_four_strands(w in word(4, 7), a in word(4, 2)) {
        prop_assert_eq!(resolve(&w.conjugate_by(&a).unwrap()), resolve(&w));
    }

    /// resolve(u σ_i σ_i v) = B resolve(u σ_i v) + A resolve(u v)
    #[test]
    fn quadratic_relation_is_linear(u in word(3, 4), v in word(3, 4), g in 1usize..=2) {
        let s = BraidWord::from_signed(3, &[g as i32]).unwrap();
        let uv = u.concat(&v).unwrap();
        let usv = u.concat(&s).unwrap().concat(&v).unwrap();
        let ussv = u.concat(&s).unwrap().concat(&s).unwrap().concat(&v).unwrap();
        let rhs = resolve(&usv)
            .scale(&"B".parse().unwrap())
            .checked_add(&resolve(&uv).scale(&"A".parse().unwrap()))
            .unwrap();
        prop_assert_eq!(resolve(&ussv), rhs);
    }
}

//! Parity, crossing-change and bridge properties on random words.

use braidskein::analysis::{bad_counts, bfree_term, exponent_parity, odd_change_check, parity_consistency};
use braidskein::braid::{BraidWord, CrossingId};
use braidskein::homfly::{homfly_oracle, to_homfly};
use braidskein::mtws::{exchange_pair, ExchangeInstance};
use braidskein::{label_only, resolve, Label};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn word(strands: usize, min_len: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, prop::bool::ANY), min_len..=max_len).prop_map(move |ls| {
        let signed: Vec<i32> = ls.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
        BraidWord::from_signed(strands, &signed).unwrap()
    })
}

fn any_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(move |n| word(n, 0, max_len))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bfree_exponent_counts_bad_crossings(w in (2usize..=3).prop_flat_map(|n| word(n, 0, 10))) {
        let r = parity_consistency(&w).unwrap();
        prop_assert!(r.consistent, "{}: {:?}", w, r);
        let t = bfree_term(&resolve(&w)).unwrap();
        prop_assert_eq!(t.coefficient, 1.into());
    }

    #[test]
    fn single_change_flips_one_label_and_moves_k_by_one(w in any_word(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(!w.is_empty());
        let ids: Vec<CrossingId> = w.crossing_ids().collect();
        let id = ids[pick.index(ids.len())];
        let changed = w.change_crossing(id).unwrap();
        let (before, after) = (label_only(&w), label_only(&changed));
        for c in &ids {
            let (x, y) = (before.get(*c).unwrap(), after.get(*c).unwrap());
            if *c == id {
                prop_assert!(x != y && x != Label::Unlabeled && y != Label::Unlabeled);
            } else {
                prop_assert_eq!(x, y);
            }
        }
        let diff = bad_counts(&changed).total as i64 - bad_counts(&w).total as i64;
        prop_assert_eq!(diff.abs(), 1);
        prop_assert_ne!(resolve(&changed), resolve(&w));
    }

    #[test]
    fn crossing_sets_move_k_by_their_parity(
        (w, ids) in (2usize..=4).prop_flat_map(|n| word(n, 1, 9)).prop_flat_map(|w| {
            let ids: Vec<CrossingId> = w.crossing_ids().collect();
            let len = ids.len();
            (Just(w), subsequence(ids, 1..=len))
        })
    ) {
        let r = odd_change_check(&w, &ids).unwrap();
        prop_assert_eq!(r.exponent_delta.rem_euclid(2) as usize, ids.len() % 2);
        if ids.len() % 2 == 1 {
            prop_assert_ne!(&r.changed, &r.original);
        } else {
            prop_assert_eq!(exponent_parity(&r.changed), exponent_parity(&r.original));
        }
    }

    #[test]
    fn bridge_agrees_with_oracle(w in any_word(8)) {
        prop_assert_eq!(to_homfly(&resolve(&w)), homfly_oracle(&w));
    }

    #[test]
    fn exchange_pairs_are_isotopic(u in word(4, 0, 3), v in word(4, 0, 3)) {
        let sub = |w: &BraidWord| w.signed().into_iter().filter(|x| x.abs() <= 2).collect::<Vec<_>>();
        let e = ExchangeInstance { u: sub(&u), v: sub(&v) };
        let (l, r) = exchange_pair(&e, 4).unwrap();
        prop_assert_eq!(homfly_oracle(&l), homfly_oracle(&r));
    }
}

#[test]
fn three_braid_exchanges_keep_bad_count_parity() {
    let e = ExchangeInstance { u: vec![1, 1, -1], v: vec![1, 1, 1] };
    let (l, r) = exchange_pair(&e, 3).unwrap();
    assert_eq!(resolve(&l), resolve(&r));
    assert_eq!((bad_counts(&l).total + bad_counts(&r).total) % 2, 0);
}

mod common;

use common::word;
use cyclext::element::ExtElement;
use cyclext::exec::Exec;
use cyclext::normal_form::are_conjugate;
use cyclext::oracle::{brute_force_conjugacy, brute_force_conjugacy_with, reduced_words};
use cyclext::presets::{artin, involution};
use proptest::prelude::*;

#[test]
fn enumeration_counts() {
    // 1 + 2r * sum (2r-1)^i
    assert_eq!(reduced_words(1..=3, 3).len(), 1 + 6 + 30 + 150);
    assert_eq!(reduced_words(-1..=1, 2).len(), 1 + 6 + 30);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn witnesses_replay(v in word(2, 5), t in -2i64..=2, u in word(2, 3), s in -2i64..=2) {
        let ctx = artin(4).unwrap();
        let v = ExtElement::new(t, v);
        let w = ctx.conjugate(&v, &ExtElement::new(s, u));
        let c = brute_force_conjugacy(&ctx, &v, &w, 3, 2).expect("the constructed conjugator is in range");
        prop_assert!(c.verify(&ctx, &v, &w));
        prop_assert!(c.conjugator.word.len() <= 3);
    }

    #[test]
    fn found_pairs_are_decided(v in word(3, 4), w in word(3, 4), t in 0i64..2) {
        let ctx = involution(3).unwrap();
        let (v, w) = (ExtElement::new(t, v), ExtElement::new(t, w));
        if brute_force_conjugacy(&ctx, &v, &w, 3, 1).is_some() {
            prop_assert!(are_conjugate(&ctx, &v, &w).conjugate);
        }
    }

    #[test]
    fn modes_agree(v in word(2, 4), w in word(2, 4)) {
        let ctx = artin(4).unwrap();
        let (v, w) = (ExtElement::new(1, v), ExtElement::new(1, w));
        prop_assert_eq!(
            brute_force_conjugacy_with(Exec::Sequential, &ctx, &v, &w, 2, 2),
            brute_force_conjugacy_with(Exec::Parallel, &ctx, &v, &w, 2, 2)
        );
    }
}

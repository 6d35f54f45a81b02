mod common;

use std::collections::BTreeSet;

use common::word;
use cyclext::context::VIContext;
use cyclext::element::ExtElement;
use cyclext::exec::Exec;
use cyclext::normal_form::{
    are_conjugate, build_d, build_dbar, normal_form, normal_form_with, SearchOptions,
};
use cyclext::oracle::reduced_words;
use cyclext::presets::{artin, involution};
use cyclext::word::Word;
use proptest::prelude::*;

fn ctx(which: usize) -> VIContext {
    match which {
        0 => artin(3).unwrap(),
        1 => artin(4).unwrap(),
        2 => artin(5).unwrap(),
        3 => artin(6).unwrap(),
        _ => involution(3).unwrap(),
    }
}

fn pair(which: usize) -> impl Strategy<Value = (usize, ExtElement, ExtElement)> {
    let c = ctx(which);
    let (rank, m) = (c.rank(), c.m() as i64);
    (-3i64..=3, word(rank, 6), -2 * m..=2 * m, word(rank, 5))
        .prop_map(move |(t, v, s, u)| (which, ExtElement::new(t, v), ExtElement::new(s, u)))
}

fn any_pair() -> impl Strategy<Value = (usize, ExtElement, ExtElement)> {
    prop_oneof![pair(0), pair(1), pair(2), pair(3), pair(4)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn certificate_replays((which, v, _c) in any_pair()) {
        let ctx = ctx(which);
        let nf = normal_form(&ctx, &v);
        prop_assert!(nf.certificate.verify(&ctx, &v, &nf.element));
        prop_assert_eq!(nf.element.t_exp, ctx.canonical(&v).t_exp);
        prop_assert!(nf.dbar_size >= 1);
    }

    #[test]
    fn invariant_and_idempotent((which, v, c) in any_pair()) {
        let ctx = ctx(which);
        let w = ctx.conjugate(&v, &c);
        let nv = normal_form(&ctx, &v);
        prop_assert_eq!(&nv.element, &normal_form(&ctx, &w).element);
        prop_assert_eq!(&nv.element, &normal_form(&ctx, &nv.element).element);
        let d = are_conjugate(&ctx, &v, &w);
        prop_assert!(d.conjugate);
        prop_assert!(d.certificate.unwrap().verify(&ctx, &v, &w));
    }

    #[test]
    fn dbar_is_the_union_of_d_over_t_conjugates((which, v, _c) in any_pair()) {
        let ctx = ctx(which);
        let dbar: BTreeSet<Word> = build_dbar(&ctx, &v).into_iter().map(|m| m.element.word).collect();
        let mut union: BTreeSet<Word> = BTreeSet::new();
        for r in 0..ctx.m() as i64 {
            let vr = ctx.conjugate(&v, &ExtElement::t_power(r));
            union.extend(build_d(&ctx, &vr).into_iter().map(|m| m.element.word));
        }
        let best = union.iter().map(Word::len).min().unwrap();
        union.retain(|w| w.len() == best);
        prop_assert_eq!(dbar, union);
    }

    #[test]
    fn exec_modes_agree((which, v, _c) in any_pair()) {
        let ctx = ctx(which);
        let a = normal_form_with(SearchOptions::with_exec(Exec::Sequential), &ctx, &v);
        let b = normal_form_with(SearchOptions::with_exec(Exec::Parallel), &ctx, &v);
        prop_assert_eq!(a, b);
    }
}

/// No conjugate reachable with a short conjugator is shorter than the
/// normal form.
#[test]
fn normal_form_is_minimal_against_search() {
    for which in [0, 1, 4] {
        let ctx = ctx(which);
        let m = ctx.m() as i64;
        let conjugators = reduced_words(1..=ctx.rank() as i32, 3);
        let samples = reduced_words(1..=ctx.rank() as i32, 3);
        for t in [1i64, 2, -1] {
            for v in samples.iter().step_by(3) {
                let v = ExtElement::new(t, v.clone());
                let nf = normal_form(&ctx, &v).element;
                for s in 0..m {
                    for u in &conjugators {
                        let w = ctx.conjugate(&v, &ExtElement::new(s, u.clone()));
                        assert!(nf.word.len() <= w.word.len(), "{v}: {nf} vs {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn documented_examples() {
    let a4 = artin(4).unwrap();
    let e = |t: i64, p: &[(i32, i32)]| ExtElement::new(t, Word::from_pairs(p));
    let u = e(1, &[(2, 1)]);
    let v = e(1, &[(1, 1), (2, 1), (1, -1)]);
    assert!(are_conjugate(&a4, &u, &v).conjugate);
    assert!(!are_conjugate(&a4, &e(2, &[(1, 1)]), &e(1, &[(1, 1)])).conjugate);
    let a = e(2, &[(1, 1), (2, 1), (1, 1), (2, 1)]);
    let b = e(2, &[(1, 1), (1, 1), (2, 1), (2, 1)]);
    assert_eq!(normal_form(&a4, &a).element, normal_form(&a4, &b).element);
}

//! Bounded exhaustive conjugator search, independent of the normal forms.
//!
//! Candidates `t^a U` are tried with `a` in the order `0, 1, -1, 2, -2, ..`
//! and, for each `a`, `U` in shortlex order. The parallel search reports the
//! same witness as the sequential one.

use std::ops::RangeInclusive;

use crate::context::{TOrder, VIContext};
use crate::element::{ConjugacyCertificate, ExtElement};
use crate::exec::{self, Exec};
use crate::finite_m::{FiniteActionContext, MElement};
use crate::shift::ShiftElement;
use crate::word::{Letter, Word};

/// Every reduced word of length at most `max_len` in the generators with the
/// given indices, in shortlex order.
pub fn reduced_words(indices: RangeInclusive<i32>, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = indices
        .flat_map(|i| [Letter::gen(i), Letter::gen_inv(i)])
        .collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &x in &letters {
                if w.last().is_some_and(|l| l.cancels(x)) {
                    continue;
                }
                let mut ls = w.letters().to_vec();
                ls.push(x);
                next.push(Word::from_letters(ls));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `0, 1, -1, .., bound, -bound`, reduced and deduplicated modulo a finite
/// order.
pub fn t_offsets(order: TOrder, bound: i64) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for a in 0..=bound.max(0) {
        for s in [a, -a] {
            let s = order.canonical(s);
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

/// First `u = t^a U` with `|U| <= len_bound`, `|a| <= t_bound` and
/// `u^-1 v u = w`.
pub fn brute_force_conjugacy(
    ctx: &VIContext,
    v: &ExtElement,
    w: &ExtElement,
    len_bound: usize,
    t_bound: i64,
) -> Option<ConjugacyCertificate> {
    brute_force_conjugacy_with(Exec::default(), ctx, v, w, len_bound, t_bound)
}

pub fn brute_force_conjugacy_with(
    exec: Exec,
    ctx: &VIContext,
    v: &ExtElement,
    w: &ExtElement,
    len_bound: usize,
    t_bound: i64,
) -> Option<ConjugacyCertificate> {
    let v = ctx.canonical(v);
    let w = ctx.canonical(w);
    if v.t_exp != w.t_exp {
        return None;
    }
    let offsets = t_offsets(ctx.t_order(), t_bound);
    let words = reduced_words(1..=ctx.rank() as i32, len_bound);
    // t^-a v t^a does not depend on U; compute it once per offset
    let shifted: Vec<ExtElement> = offsets
        .iter()
        .map(|&a| ctx.conjugate(&v, &ExtElement::t_power(a)))
        .collect();
    let n = words.len();
    let hit = exec::find_first_index(exec, offsets.len() * n, |i| {
        let (a, u) = (i / n, &words[i % n]);
        ctx.conjugate(&shifted[a], &ExtElement::from_word(u.clone())) == w
    })?;
    Some(ConjugacyCertificate {
        conjugator: ExtElement::new(offsets[hit / n], words[hit % n].clone()),
    })
}

/// First `u = beta U` with `|U| <= len_bound` and `u^-1 v u = w`, `beta` in
/// table order.
pub fn brute_force_conjugacy_m(
    mctx: &FiniteActionContext,
    v: &MElement,
    w: &MElement,
    len_bound: usize,
) -> Option<ConjugacyCertificate<MElement>> {
    let words = reduced_words(1..=mctx.rank() as i32, len_bound);
    let n = words.len();
    let hit = exec::find_first_index(Exec::default(), mctx.len() * n, |i| {
        let u = MElement::new(i / n, words[i % n].clone());
        mctx.conjugate(v, &u) == *w
    })?;
    Some(ConjugacyCertificate {
        conjugator: MElement::new(hit / n, words[hit % n].clone()),
    })
}

/// First `u = t^a U` with `U` over the letters `indices`, `|U| <= len_bound`,
/// `|a| <= t_bound` and `u^-1 v u = w` in `F_inf(t)`.
pub fn brute_force_shift_conjugacy(
    v: &ShiftElement,
    w: &ShiftElement,
    indices: RangeInclusive<i32>,
    len_bound: usize,
    t_bound: i64,
) -> Option<ConjugacyCertificate<ShiftElement>> {
    if v.t_exp != w.t_exp {
        return None;
    }
    let offsets = t_offsets(TOrder::Infinite, t_bound);
    let words = reduced_words(indices, len_bound);
    let n = words.len();
    let hit = exec::find_first_index(Exec::default(), offsets.len() * n, |i| {
        let u = ShiftElement::new(offsets[i / n], words[i % n].clone());
        v.conjugate(&u) == *w
    })?;
    Some(ConjugacyCertificate {
        conjugator: ShiftElement::new(offsets[hit / n], words[hit % n].clone()),
    })
}

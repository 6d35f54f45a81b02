//! Conjugacy normal forms in `F_n(t)`.
//!
//! For `v = t^l V` every conjugate by an element of `F_n` has the form
//! `t^l psi(f)^-1 V f` with `psi = phi^l` (the twisted class of `V`).
//! The moves used to walk a twisted class are twisted conjugations by
//!
//! * a final part `V''` of `V = V'V''`: `V -> psi(V'') V'`,
//! * an initial part `V'`: `V -> V'' psi^-1(V')`,
//! * a single letter `x`: `V -> psi(x)^-1 V x`,
//! * a power of the witness `delta` (valid because `psi(delta) = delta`),
//!   also applied right after each of the other moves.
//!
//! Conjugation by `t^k` replaces `V` by `phi^k(V)`.
//!
//! `D0` collects the least-length words reachable from a start word. The
//! search explores a band of `slack` letters above the least length found
//! and restarts from any strictly shorter word. When `psi` is conjugation by
//! `delta^q` the least words are listed directly instead. `D` and `Dbar` are
//! unions of `D0` over `phi^k(V)`.
//!
//! Start words are chosen from the class alone whenever possible (see
//! [`twisted_class_seed`]), so `Dbar` and the normal form, its shortlex-least
//! member, do not depend on the representative they were computed from.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::context::{Twist, VIContext};
use crate::delta;
use crate::element::{ConjugacyCertificate, ExtElement};
use crate::error::Error;
use crate::exec::{self, Exec};
use crate::word::{cyclically_reduce, least_rotation, Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Initial,
    Final,
}

/// Twisted-conjugation moves for a fixed `psi` and witness `delta`.
pub(crate) struct Moves<'a> {
    ctx: &'a VIContext,
    twist: Twist,
    delta: &'a Word,
    /// Words up to this much longer than the current minimum are explored.
    slack: usize,
}

/// Conjugator in `F_n` from the word a search started at:
/// `conj^-1 (t^l V0) conj = t^l word`.
type Reached = BTreeMap<Word, ExtElement>;

/// Default width of the band explored above the least length.
pub const DEFAULT_SLACK: usize = 2;

impl<'a> Moves<'a> {
    pub(crate) fn new(ctx: &'a VIContext, l: i64, slack: usize) -> Self {
        Self {
            ctx,
            twist: ctx.twist(l),
            delta: ctx.delta(),
            slack,
        }
    }

    /// `psi(V'') V'` with conjugator `V''^-1`, `V' = v[..split]`.
    fn shift_final(&self, v: &Word, split: usize) -> (Word, Word) {
        let tail = v.suffix_from(split);
        let moved = self.twist.apply(&tail).mul_word(&v.prefix(split));
        (moved, tail.inverse())
    }

    /// `V'' psi^-1(V')` with conjugator `psi^-1(V')`, `V' = v[..split]`.
    fn shift_initial(&self, v: &Word, split: usize) -> (Word, Word) {
        let head = self.twist.apply_inverse(&v.prefix(split));
        let moved = v.suffix_from(split).mul_word(&head);
        (moved, head)
    }

    fn shifts(&self, v: &Word, whole: bool) -> Vec<(Word, Word)> {
        let n = v.len();
        let mut out = Vec::with_capacity(2 * n + 2);
        if n == 0 {
            return out;
        }
        let proper = 1..n;
        for s in proper.clone() {
            out.push(self.shift_final(v, s));
        }
        for s in proper {
            out.push(self.shift_initial(v, s));
        }
        if whole || n == 1 {
            out.push(self.shift_final(v, 0));
            out.push(self.shift_initial(v, n));
        }
        out
    }

    fn neighbors(&self, v: &Word) -> Vec<(Word, ExtElement)> {
        let mut out: Vec<(Word, ExtElement)> = self
            .shifts(v, true)
            .into_iter()
            .map(|(w, f)| (w, ExtElement::from_word(f)))
            .collect();
        // psi(x)^-1 V x for every letter x
        for i in 1..=self.ctx.rank() as i32 {
            for x in [Letter::gen(i), Letter::gen_inv(i)] {
                let f = Word::letter(x);
                let w = Word::product([&self.twist.apply(&f).inverse(), v, &f]);
                out.push((w, ExtElement::from_word(f)));
            }
        }
        if self.delta.is_empty() {
            return out;
        }
        // each move followed by delta-reduction
        let mut reduced = Vec::new();
        for (w, f) in &out {
            for (k, c) in self.delta_moves(w) {
                let g = f.word.mul_word(&self.delta.pow(k));
                reduced.push((c, ExtElement::from_word(g)));
            }
        }
        out.extend(reduced);
        for (k, c) in self.delta_moves(v) {
            out.push((c, ExtElement::from_word(self.delta.pow(k))));
        }
        out
    }

    /// The shortest conjugates `delta^-k v delta^k`, `k != 0`.
    fn delta_moves(&self, v: &Word) -> Vec<(i64, Word)> {
        if v.is_cyclically_reduced() {
            return Vec::new();
        }
        delta::minimal_conjugates(self.delta, v)
            .into_iter()
            .filter(|(k, _)| *k != 0)
            .collect()
    }

    /// Moves to the shortest neighbour while that strictly shortens.
    fn descend(&self, mut v: Word, mut conj: ExtElement) -> (Word, ExtElement) {
        loop {
            match self.neighbors(&v).into_iter().min_by(|a, b| a.0.cmp(&b.0)) {
                Some((w, f)) if w.len() < v.len() => {
                    conj = self.ctx.mul(&conj, &f);
                    v = w;
                }
                _ => return (v, conj),
            }
        }
    }

    /// Shift moves only, while one strictly shortens. Conjugator in `F_n`.
    fn shift_descent(&self, mut v: Word) -> (Word, Word) {
        let mut conj = Word::empty();
        loop {
            match self
                .shifts(&v, false)
                .into_iter()
                .min_by(|a, b| a.0.cmp(&b.0))
            {
                Some((w, f)) if w.len() < v.len() => {
                    conj = conj.mul_word(&f);
                    v = w;
                }
                _ => return (v, conj),
            }
        }
    }

    /// All words of least length reachable from `v`, with conjugators.
    ///
    /// The search runs through every word at most `slack` letters longer
    /// than the least length seen so far; a strictly shorter word restarts
    /// it from there. Frontiers are expanded with `exec`; the merge is
    /// sequential, so the result does not depend on the mode.
    fn closure(&self, exec: Exec, v: Word, conj: ExtElement) -> Reached {
        let mut start = self.descend(v, conj);
        'restart: loop {
            let len = start.0.len();
            let band = len + self.slack;
            let mut seen = Reached::new();
            seen.insert(start.0.clone(), start.1.clone());
            let mut frontier = vec![start.0.clone()];
            while !frontier.is_empty() {
                let expanded = exec::map(exec, &frontier, |w| self.neighbors(w));
                let mut next = Vec::new();
                for (cur, nbs) in frontier.iter().zip(expanded) {
                    let conj = seen[cur].clone();
                    for (w, f) in nbs {
                        if w.len() > band || seen.contains_key(&w) {
                            continue;
                        }
                        let total = self.ctx.mul(&conj, &f);
                        if w.len() < len {
                            start = self.descend(w, total);
                            continue 'restart;
                        }
                        seen.insert(w.clone(), total);
                        next.push(w);
                    }
                }
                frontier = next;
            }
            seen.retain(|w, _| w.len() == len);
            return seen;
        }
    }
}

/// `X = delta^(l/d) psi^(p-1)(V) .. psi(V) V` with `d = gcd(m, l)` and
/// `p = m / d`, so that `(t^l V)^p` is `X` times a central power of `t`.
/// Twisted conjugation of `V` by `f` conjugates `X` by `f`.
pub fn orbit_product(ctx: &VIContext, l: i64, v: &Word) -> Word {
    let m = ctx.m() as i64;
    let d = m.gcd(&l);
    let twist = ctx.twist(l);
    let mut product = v.clone();
    let mut cur = v.clone();
    for _ in 1..m / d {
        cur = twist.apply(&cur);
        product = cur.mul_word(&product);
    }
    ctx.delta().pow(l / d).mul_word(&product)
}

/// A word of the twisted class of `v` that depends only on the class, with
/// the conjugator from `v`; `None` when the orbit product is trivial.
///
/// The conjugator `f` carries the orbit product to the least cyclic
/// permutation of its cyclic core. Two such conjugators differ by an element
/// centralising the orbit product, and those leave `psi(f)^-1 V f`
/// unchanged, so the word reached is a class invariant.
pub fn twisted_class_seed(ctx: &VIContext, l: i64, v: &Word) -> Option<(Word, Word)> {
    let x = orbit_product(ctx, l, v);
    if x.is_empty() {
        return None;
    }
    let (core, s) = cyclically_reduce(&x);
    let f = s.mul_word(&core.prefix(least_rotation(core.letters())));
    let w = Word::product([&ctx.twist(l).apply(&f).inverse(), v, &f]);
    Some((w, f))
}

/// Least-length words of the twisted class of `v` when `psi = phi^l` is
/// conjugation by `delta^q` (`l = mq`).
///
/// Then `psi(f)^-1 V f = A * f^-1 Y f` with `A = delta^-q` and
/// `Y = delta^q V`. Writing the conjugate of `Y` as `h^-1 R h` without
/// cancellation, `R` a cyclic permutation of the cyclic core of `Y`, any
/// part of `h^-1` not absorbed by `A` adds twice its length, so every least
/// word has `h` a terminal segment of `A`.
fn inner_minimal(ctx: &VIContext, q: i64, v: &Word) -> Reached {
    let dq = ctx.delta().pow(q);
    let a = dq.inverse();
    let y = dq.mul_word(v);
    let (core, s) = cyclically_reduce(&y);
    let rotations = core.len().max(1);
    let mut out = Reached::new();
    let mut best = usize::MAX;
    for i in 0..rotations {
        let rot_prefix = core.prefix(i);
        let r = core.rotate_left(i);
        for j in 0..=a.len() {
            let h = a.suffix_from(j);
            let w = Word::product([&a, &h.inverse(), &r, &h]);
            if w.len() > best {
                continue;
            }
            if w.len() < best {
                best = w.len();
                out.clear();
            }
            let f = Word::product([&s, &rot_prefix, &h]);
            out.entry(w).or_insert_with(|| ExtElement::from_word(f));
        }
    }
    out
}

/// Cyclic `phi^l`-shift of the part of `v` selected by `split_pos`.
///
/// `split_pos` is the length of the initial part `V'` in `v = V'V''`. The
/// final side returns `psi(V'') V'`, the initial side `V'' psi^-1(V')`.
/// Both parts must be non-empty, except that a one-letter word may move as a
/// whole (`split_pos` 0 for the final side, 1 for the initial side).
pub fn cyclic_psi_shift(
    ctx: &VIContext,
    l: i64,
    v: &Word,
    split_pos: usize,
    side: Side,
) -> Result<Word, Error> {
    let n = v.len();
    let ok = (1..n).contains(&split_pos)
        || (n == 1 && matches!((side, split_pos), (Side::Final, 0) | (Side::Initial, 1)));
    if !ok {
        return Err(Error::InvalidSplit {
            pos: split_pos,
            len: n,
        });
    }
    let moves = Moves::new(ctx, l, 0);
    Ok(match side {
        Side::Final => moves.shift_final(v, split_pos).0,
        Side::Initial => moves.shift_initial(v, split_pos).0,
    })
}

/// Applies length-decreasing cyclic `phi^l`-shifts until none is left.
/// The certificate conjugates `t^l v` to `t^l result`.
pub fn cyclically_psi_reduce(ctx: &VIContext, l: i64, v: &Word) -> (Word, ConjugacyCertificate) {
    let (w, f) = Moves::new(ctx, l, 0).shift_descent(v.clone());
    (
        w,
        ConjugacyCertificate {
            conjugator: ExtElement::from_word(f),
        },
    )
}

/// A member of one of the `D` sets with its conjugator from the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Member {
    pub element: ExtElement,
    pub certificate: ConjugacyCertificate,
}

/// Tuning for the closure searches.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchOptions {
    pub exec: Exec,
    pub slack: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            exec: Exec::default(),
            slack: DEFAULT_SLACK,
        }
    }
}

impl SearchOptions {
    pub fn with_exec(exec: Exec) -> Self {
        Self {
            exec,
            ..Self::default()
        }
    }
}

/// `Some(q)` when `phi^l` is conjugation by `delta^q`.
fn inner_exponent(ctx: &VIContext, l: i64) -> Option<i64> {
    let m = ctx.m() as i64;
    (l.rem_euclid(m) == 0).then(|| l.div_euclid(m))
}

fn members(l: i64, reached: Reached, lead: &ExtElement, ctx: &VIContext) -> Vec<Member> {
    reached
        .into_iter()
        .map(|(w, f)| Member {
            element: ExtElement::new(l, w),
            certificate: ConjugacyCertificate {
                conjugator: ctx.mul(lead, &f),
            },
        })
        .collect()
}

/// Where the `D0` search for `v` starts: the class seed when there is one.
fn d0_start(ctx: &VIContext, l: i64, v: &Word) -> (Word, ExtElement) {
    match twisted_class_seed(ctx, l, v) {
        Some((w, f)) => (w, ExtElement::from_word(f)),
        None => (v.clone(), ExtElement::identity()),
    }
}

fn d0_reached(ctx: &VIContext, opts: SearchOptions, l: i64, v: &Word) -> Reached {
    match inner_exponent(ctx, l) {
        Some(q) => inner_minimal(ctx, q, v),
        None => {
            let (w, f) = d0_start(ctx, l, v);
            Moves::new(ctx, l, opts.slack).closure(opts.exec, w, f)
        }
    }
}

/// `D0(v)`: least-length words of the twisted class of `v`, i.e. of the
/// elements `t^l W` conjugate to `v` by elements of `F_n`.
pub fn build_d0(ctx: &VIContext, v: &ExtElement) -> Vec<Member> {
    let v = ctx.canonical(v);
    let reached = d0_reached(ctx, SearchOptions::default(), v.t_exp, &v.word);
    members(v.t_exp, reached, &ExtElement::identity(), ctx)
}

fn merge(into: &mut BTreeMap<Word, Member>, items: Vec<Member>) {
    for m in items {
        into.entry(m.element.word.clone()).or_insert(m);
    }
}

/// Keeps the members of least length.
fn shortest(all: BTreeMap<Word, Member>) -> Vec<Member> {
    let best = all.keys().map(Word::len).min().unwrap_or(0);
    all.into_values()
        .filter(|m| m.element.word.len() == best)
        .collect()
}

/// Union of `D0(t^l phi^k(V))` over the given `k`.
///
/// Each twisted class is entered through its class seed and through the
/// `phi^j`-images of that seed, `0 <= j < m`; the set of these start words
/// depends only on the conjugacy class of `v`.
fn union_of_d0(opts: SearchOptions, ctx: &VIContext, v: &ExtElement, ks: &[i64]) -> Vec<Member> {
    let l = v.t_exp;
    let inner = inner_exponent(ctx, l);
    let m = ctx.m() as i64;
    let mut starts: BTreeMap<Word, ExtElement> = BTreeMap::new();
    for &k in ks {
        let u = ctx.power_apply(k, &v.word);
        let lead = ExtElement::t_power(k);
        match (inner, twisted_class_seed(ctx, l, &u)) {
            (None, Some((w, f))) => {
                let base = ctx.mul(&lead, &ExtElement::from_word(f));
                for j in 0..m {
                    let conj = ctx.mul(&base, &ExtElement::t_power(j));
                    starts.entry(ctx.power_apply(j, &w)).or_insert(conj);
                }
            }
            _ => {
                starts.entry(u).or_insert(lead);
            }
        }
    }
    let work: Vec<(Word, ExtElement)> = starts.into_iter().collect();
    let moves = Moves::new(ctx, l, opts.slack);
    let parts = exec::map(opts.exec, &work, |(w, lead)| {
        let reached = match inner {
            Some(q) => inner_minimal(ctx, q, w),
            None => moves.closure(Exec::Sequential, w.clone(), ExtElement::identity()),
        };
        members(l, reached, lead, ctx)
    });
    let mut out = BTreeMap::new();
    for p in parts {
        merge(&mut out, p);
    }
    shortest(out)
}

/// `D(v)`: union of `D0(t^l phi^k(V))` over `k = 0, d, .., m - d` with
/// `d = gcd(m, l)`.
pub fn build_d(ctx: &VIContext, v: &ExtElement) -> Vec<Member> {
    let v = ctx.canonical(v);
    let m = ctx.m() as i64;
    let ks: Vec<i64> = (0..m).step_by(m.gcd(&v.t_exp) as usize).collect();
    union_of_d0(SearchOptions::default(), ctx, &v, &ks)
}

/// `Dbar(v)`: union of `D(t^-r v t^r)` over `0 <= r < m`, which is the union
/// of `D0(t^l phi^k(V))` over all `0 <= k < m`. Sorted shortlex.
pub fn build_dbar(ctx: &VIContext, v: &ExtElement) -> Vec<Member> {
    build_dbar_with(SearchOptions::default(), ctx, v)
}

pub fn build_dbar_with(opts: SearchOptions, ctx: &VIContext, v: &ExtElement) -> Vec<Member> {
    let v = ctx.canonical(v);
    let ks: Vec<i64> = (0..ctx.m() as i64).collect();
    union_of_d0(opts, ctx, &v, &ks)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    pub element: ExtElement,
    /// Conjugates the input to `element`.
    pub certificate: ConjugacyCertificate,
    pub dbar_size: usize,
}

/// The shortlex-least element of `Dbar(v)`.
pub fn normal_form(ctx: &VIContext, v: &ExtElement) -> NormalForm {
    normal_form_with(SearchOptions::default(), ctx, v)
}

pub fn normal_form_with(opts: SearchOptions, ctx: &VIContext, v: &ExtElement) -> NormalForm {
    let dbar = build_dbar_with(opts, ctx, v);
    let dbar_size = dbar.len();
    let best = dbar
        .into_iter()
        .next()
        .expect("Dbar contains at least one element");
    NormalForm {
        element: best.element,
        certificate: best.certificate,
        dbar_size,
    }
}

/// Normal forms of a batch of elements.
pub fn normal_forms(opts: SearchOptions, ctx: &VIContext, vs: &[ExtElement]) -> Vec<NormalForm> {
    let inner = SearchOptions {
        exec: Exec::Sequential,
        ..opts
    };
    exec::map(opts.exec, vs, |v| normal_form_with(inner, ctx, v))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decision {
    pub conjugate: bool,
    /// `c` with `c^-1 u c = v` when conjugate.
    pub certificate: Option<ConjugacyCertificate>,
}

impl Decision {
    pub fn no() -> Self {
        Self {
            conjugate: false,
            certificate: None,
        }
    }
}

/// Decides whether `u` and `v` are conjugate.
pub fn are_conjugate(ctx: &VIContext, u: &ExtElement, v: &ExtElement) -> Decision {
    are_conjugate_with(SearchOptions::default(), ctx, u, v)
}

pub fn are_conjugate_with(
    opts: SearchOptions,
    ctx: &VIContext,
    u: &ExtElement,
    v: &ExtElement,
) -> Decision {
    let u = ctx.canonical(u);
    let v = ctx.canonical(v);
    if u.t_exp != v.t_exp {
        return Decision::no();
    }
    let nu = normal_form_with(opts, ctx, &u);
    let nv = normal_form_with(opts, ctx, &v);
    if nu.element != nv.element {
        return Decision::no();
    }
    let c = ctx.mul(
        &nu.certificate.conjugator,
        &ctx.inv(&nv.certificate.conjugator),
    );
    Decision {
        conjugate: true,
        certificate: Some(ConjugacyCertificate { conjugator: c }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::Automorphism;
    use crate::context::{ContextOptions, TOrder};
    use crate::presets::artin;

    fn w(p: &[(i32, i32)]) -> Word {
        Word::from_pairs(p)
    }

    fn e(t: i64, p: &[(i32, i32)]) -> ExtElement {
        ExtElement::new(t, w(p))
    }

    /// psi = id: phi = id, m = 1, delta empty.
    fn trivial() -> VIContext {
        VIContext::new(
            TOrder::Infinite,
            Automorphism::identity(2),
            1,
            Word::empty(),
            ContextOptions::default(),
        )
        .unwrap()
    }

    fn words(ms: &[Member]) -> Vec<Word> {
        ms.iter().map(|m| m.element.word.clone()).collect()
    }

    #[test]
    fn psi_shift_examples() {
        let a4 = artin(4).unwrap();
        let v = w(&[(1, 1), (2, 1), (1, -1)]);
        assert_eq!(
            cyclic_psi_shift(&a4, 1, &v, 2, Side::Final).unwrap(),
            w(&[(1, 1)])
        );
        let v = w(&[(2, 1), (1, 1)]);
        assert_eq!(
            cyclic_psi_shift(&a4, 1, &v, 1, Side::Final).unwrap(),
            w(&[(1, 1), (2, 1), (1, -1), (2, 1)])
        );
        let v = w(&[(1, 1), (2, 1)]);
        assert_eq!(
            cyclic_psi_shift(&trivial(), 0, &v, 1, Side::Final).unwrap(),
            w(&[(2, 1), (1, 1)])
        );
    }

    #[test]
    fn psi_shift_split_errors() {
        let a4 = artin(4).unwrap();
        let v = w(&[(1, 1), (2, 1)]);
        assert!(cyclic_psi_shift(&a4, 1, &v, 0, Side::Final).is_err());
        assert!(cyclic_psi_shift(&a4, 1, &v, 2, Side::Initial).is_err());
        assert!(cyclic_psi_shift(&a4, 1, &Word::empty(), 0, Side::Final).is_err());
        let y0 = w(&[(1, 1)]);
        assert_eq!(
            cyclic_psi_shift(&a4, 1, &y0, 1, Side::Initial).unwrap(),
            w(&[(2, 1)])
        );
    }

    #[test]
    fn psi_reduce_examples() {
        let a4 = artin(4).unwrap();
        let (r, c) = cyclically_psi_reduce(&a4, 1, &w(&[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(r, w(&[(1, 1)]));
        assert!(c.verify(&a4, &e(1, &[(1, 1), (2, 1), (1, -1)]), &e(1, &[(1, 1)])));
        let (r, _) = cyclically_psi_reduce(&trivial(), 0, &w(&[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(r, w(&[(2, 1)]));
        let (r, _) = cyclically_psi_reduce(&a4, 1, &w(&[(2, 1), (1, 1)]));
        assert_eq!(r, w(&[(2, 1), (1, 1)]));
    }

    #[test]
    fn d0_examples() {
        let a4 = artin(4).unwrap();
        assert_eq!(
            words(&build_d0(&a4, &e(1, &[(1, 1)]))),
            vec![w(&[(1, 1)]), w(&[(2, 1)])]
        );
        assert_eq!(
            words(&build_d0(&trivial(), &e(0, &[(2, 1)]))),
            vec![w(&[(2, 1)])]
        );
        assert_eq!(words(&build_d0(&a4, &e(1, &[]))), vec![Word::empty()]);
    }

    #[test]
    fn dbar_examples() {
        let a4 = artin(4).unwrap();
        assert_eq!(
            words(&build_dbar(&a4, &e(1, &[(1, 1)]))),
            vec![w(&[(1, 1)]), w(&[(2, 1)])]
        );
        assert_eq!(
            words(&build_dbar(&trivial(), &e(0, &[(1, 1), (2, 1)]))),
            vec![w(&[(1, 1), (2, 1)]), w(&[(2, 1), (1, 1)])]
        );
        assert_eq!(words(&build_dbar(&a4, &e(1, &[]))), vec![Word::empty()]);
    }

    #[test]
    fn dbar_members_are_certified() {
        let a4 = artin(4).unwrap();
        let v = e(1, &[(2, 1), (1, 1), (1, 1), (2, -1)]);
        for m in build_dbar(&a4, &v) {
            assert!(m.certificate.verify(&a4, &v, &m.element));
        }
    }

    #[test]
    fn normal_form_examples() {
        let a4 = artin(4).unwrap();
        let nf = normal_form(&a4, &e(1, &[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(nf.element, e(1, &[(1, 1)]));
        assert!(nf
            .certificate
            .verify(&a4, &e(1, &[(1, 1), (2, 1), (1, -1)]), &nf.element));
        assert_eq!(
            normal_form(&trivial(), &e(0, &[(2, 1), (1, 1)])).element,
            e(0, &[(1, 1), (2, 1)])
        );
        assert_eq!(normal_form(&a4, &e(1, &[])).element, e(1, &[]));
    }

    #[test]
    fn conjugacy_examples() {
        let a4 = artin(4).unwrap();
        let u = e(1, &[(2, 1)]);
        let v = e(1, &[(1, 1), (2, 1), (1, -1)]);
        let d = are_conjugate(&a4, &u, &v);
        assert!(d.conjugate);
        assert!(d.certificate.unwrap().verify(&a4, &u, &v));
        assert!(!are_conjugate(&a4, &e(1, &[(1, 1)]), &e(1, &[(1, -1)])).conjugate);
        assert!(!are_conjugate(&a4, &e(2, &[(1, 1)]), &e(1, &[(1, 1)])).conjugate);
    }

    #[test]
    fn exec_modes_agree() {
        let a4 = artin(4).unwrap();
        let v = e(-1, &[(2, 1), (1, 1), (2, 1), (1, -1), (2, -1)]);
        assert_eq!(
            normal_form_with(SearchOptions::with_exec(Exec::Sequential), &a4, &v),
            normal_form_with(SearchOptions::with_exec(Exec::Parallel), &a4, &v)
        );
    }
}

//! Extensions `F_n ⋊ M` by a finite group `M` of automorphisms.
//!
//! An element is written `alpha V` with `alpha^-1 f alpha = alpha(f)`, so
//! `(alpha V)(beta W) = (alpha beta) beta(V) W` and the product
//! `alpha beta` acts as `beta ∘ alpha`. Conjugating `alpha V` by `f` in
//! `F_n` gives `alpha alpha(f)^-1 V f`: a twisted conjugation for the
//! automorphism `alpha`, which has finite order. The normal form first moves
//! `alpha` to the least member `c` of its conjugacy class in `M` and then
//! takes the least twisted-class word over the images of `V` under the
//! centraliser of `c`.

use std::collections::HashMap;
use std::fmt;

use crate::automorphism::Automorphism;
use crate::context::{TOrder, VIContext};
use crate::element::{ConjugacyCertificate, ExtElement};
use crate::error::Error;
use crate::normal_form::build_dbar;
use crate::word::Word;

/// `alpha word`, `alpha` given by its position in the context.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MElement {
    pub alpha: usize,
    pub word: Word,
}

impl MElement {
    pub fn new(alpha: usize, word: Word) -> Self {
        Self { alpha, word }
    }
}

impl fmt::Display for MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "a{}", self.alpha)
        } else {
            write!(f, "a{} {}", self.alpha, self.word)
        }
    }
}

/// A finite group of automorphisms with its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteActionContext {
    rank: u32,
    elements: Vec<Automorphism>,
    /// `table[i][j]` is the position of `alpha_i alpha_j`.
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl FiniteActionContext {
    /// Checks that `elements` starts with the identity, is closed under
    /// composition and contains inverses.
    pub fn new(rank: u32, elements: Vec<Automorphism>) -> Result<Self, Error> {
        let bad = |msg: String| Err(Error::InvalidContext(msg));
        if elements.is_empty() || !elements[0].is_identity() {
            return bad("the first element must be the identity".into());
        }
        if let Some(i) = elements.iter().position(|a| a.rank() != rank) {
            return bad(format!("element {i} does not have rank {rank}"));
        }
        let index: HashMap<&[Word], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, a)| (a.images(), i))
            .collect();
        if index.len() != elements.len() {
            return bad("elements are not distinct".into());
        }
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let prod = b.compose(a);
                match index.get(prod.images()) {
                    Some(&k) => table[i][j] = k,
                    None => return bad(format!("not closed: product of {i} and {j} is missing")),
                }
            }
        }
        let mut inverses = Vec::with_capacity(elements.len());
        for (i, row) in table.iter().enumerate() {
            match row.iter().position(|&k| k == 0) {
                Some(j) => inverses.push(j),
                None => return bad(format!("element {i} has no inverse")),
            }
        }
        Ok(Self {
            rank,
            elements,
            table,
            inverses,
        })
    }

    /// `F_2 ⋊ C_2` with the swap `x1 <-> x2`.
    pub fn swap() -> Self {
        let sigma =
            Automorphism::new(vec![Word::generator(2), Word::generator(1)]).expect("valid images");
        Self::new(2, vec![Automorphism::identity(2), sigma]).expect("valid group")
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn automorphism(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn order(&self, i: usize) -> u32 {
        let (mut k, mut p) = (1, i);
        while p != 0 {
            p = self.table[p][i];
            k += 1;
        }
        k
    }

    fn power(&self, i: usize, e: i64) -> usize {
        let e = e.rem_euclid(self.order(i) as i64);
        (0..e).fold(0, |p, _| self.table[p][i])
    }

    pub fn apply(&self, i: usize, v: &Word) -> Word {
        self.elements[i].apply_unchecked(v)
    }

    pub fn mul(&self, a: &MElement, b: &MElement) -> MElement {
        MElement::new(
            self.table[a.alpha][b.alpha],
            self.apply(b.alpha, &a.word).mul_word(&b.word),
        )
    }

    /// `(alpha V)^-1 = alpha^-1 alpha^-1(V^-1)`.
    pub fn inv(&self, a: &MElement) -> MElement {
        let ai = self.inverses[a.alpha];
        MElement::new(ai, self.apply(ai, &a.word.inverse()))
    }

    /// `u^-1 v u`.
    pub fn conjugate(&self, v: &MElement, u: &MElement) -> MElement {
        self.mul(&self.mul(&self.inv(u), v), u)
    }

    /// `alpha` as the twisting automorphism of an extension with `t` of
    /// its order and trivial witness.
    fn twisted_context(&self, alpha: usize) -> VIContext {
        let ord = self.order(alpha);
        VIContext::unchecked(
            TOrder::Finite(ord),
            self.elements[alpha].clone(),
            ord,
            Word::empty(),
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MNormalForm {
    pub element: MElement,
    /// Conjugates the input to `element`.
    pub certificate: ConjugacyCertificate<MElement>,
}

impl ConjugacyCertificate<MElement> {
    pub fn verify(&self, mctx: &FiniteActionContext, v: &MElement, w: &MElement) -> bool {
        mctx.conjugate(v, &self.conjugator) == *w
    }
}

/// The conjugacy normal form of `v` in `F_n ⋊ M`.
pub fn normal_form_finite_m(mctx: &FiniteActionContext, v: &MElement) -> MNormalForm {
    let n = mctx.len();
    // least conjugate c = beta^-1 alpha beta, with the first beta reaching it
    let (c, beta0) = (0..n)
        .map(|b| {
            (
                mctx.product(mctx.product(mctx.inverse_of(b), v.alpha), b),
                b,
            )
        })
        .min()
        .expect("M is nonempty");
    let lead = MElement::new(beta0, Word::empty());
    let v1 = mctx.conjugate(v, &lead);
    let ctx = mctx.twisted_context(c);
    let to_m = |e: &ExtElement| MElement::new(mctx.power(c, e.t_exp), e.word.clone());
    let mut best: Option<(Word, MElement)> = None;
    for b in (0..n).filter(|&b| mctx.product(c, b) == mctx.product(b, c)) {
        let beta = MElement::new(b, Word::empty());
        let v2 = mctx.conjugate(&v1, &beta);
        let first = build_dbar(&ctx, &ExtElement::new(1, v2.word))
            .into_iter()
            .next()
            .expect("Dbar is nonempty");
        if best.as_ref().is_none_or(|(w, _)| first.element.word < *w) {
            let conj = mctx.mul(
                &mctx.mul(&lead, &beta),
                &to_m(&first.certificate.conjugator),
            );
            best = Some((first.element.word, conj));
        }
    }
    let (word, conjugator) = best.expect("the identity centralises c");
    MNormalForm {
        element: MElement::new(c, word),
        certificate: ConjugacyCertificate { conjugator },
    }
}

/// `u` and `v` are conjugate iff their normal forms coincide.
pub fn finite_m_are_conjugate(
    mctx: &FiniteActionContext,
    u: &MElement,
    v: &MElement,
) -> Option<ConjugacyCertificate<MElement>> {
    let nu = normal_form_finite_m(mctx, u);
    let nv = normal_form_finite_m(mctx, v);
    (nu.element == nv.element).then(|| ConjugacyCertificate {
        conjugator: mctx.mul(
            &nu.certificate.conjugator,
            &mctx.inv(&nv.certificate.conjugator),
        ),
    })
}

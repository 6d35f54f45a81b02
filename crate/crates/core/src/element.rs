//! Elements `t^l V` of `F_n(t)` and conjugacy certificates.

use std::fmt;

use crate::context::VIContext;
use crate::text::format_element;
use crate::word::Word;

/// `t^t_exp * word`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExtElement {
    pub t_exp: i64,
    pub word: Word,
}

impl ExtElement {
    pub fn new(t_exp: i64, word: Word) -> Self {
        Self { t_exp, word }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn t_power(t_exp: i64) -> Self {
        Self::new(t_exp, Word::empty())
    }

    pub fn from_word(word: Word) -> Self {
        Self::new(0, word)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self.t_exp, &self.word))
    }
}

/// A conjugator `u` with `u^-1 v u = w` for the pair it was issued for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugacyCertificate<E = ExtElement> {
    pub conjugator: E,
}

impl ConjugacyCertificate {
    /// Replays `u^-1 v u` and compares with `w`.
    pub fn verify(&self, ctx: &VIContext, v: &ExtElement, w: &ExtElement) -> bool {
        ctx.conjugate(v, &self.conjugator) == ctx.canonical(w)
    }
}

impl VIContext {
    /// Reduces the t-exponent into `[0, omega)` for finite `t`.
    pub fn canonical(&self, v: &ExtElement) -> ExtElement {
        ExtElement::new(self.canonical_t(v.t_exp), v.word.clone())
    }

    /// `(t^a A)(t^b B) = t^(a+b) phi^b(A) B`.
    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let moved = self.power_apply(b.t_exp, &a.word);
        ExtElement::new(self.canonical_t(a.t_exp + b.t_exp), moved.mul_word(&b.word))
    }

    /// `(t^a A)^-1 = t^-a phi^-a(A^-1)`.
    pub fn inv(&self, a: &ExtElement) -> ExtElement {
        ExtElement::new(
            self.canonical_t(-a.t_exp),
            self.power_apply(-a.t_exp, &a.word.inverse()),
        )
    }

    /// `u^-1 v u`.
    pub fn conjugate(&self, v: &ExtElement, u: &ExtElement) -> ExtElement {
        self.mul(&self.mul(&self.inv(u), v), u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::artin;

    #[test]
    fn group_laws() {
        let ctx = artin(4).unwrap();
        let a = ExtElement::new(1, Word::from_pairs(&[(1, 1), (2, -1)]));
        let b = ExtElement::new(-2, Word::from_pairs(&[(2, 1)]));
        let c = ExtElement::new(3, Word::from_pairs(&[(1, -1)]));
        assert_eq!(ctx.mul(&a, &ctx.inv(&a)), ExtElement::identity());
        assert_eq!(ctx.mul(&ctx.inv(&b), &b), ExtElement::identity());
        assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
        // t^-1 x t = phi(x)
        let x = ExtElement::from_word(Word::generator(2));
        assert_eq!(
            ctx.conjugate(&x, &ExtElement::t_power(1)),
            ExtElement::from_word(Word::generator(1))
        );
    }

    #[test]
    fn display() {
        let e = ExtElement::new(1, Word::from_pairs(&[(1, 1), (2, -1)]));
        assert_eq!(e.to_string(), "t^1 x1 x2^-1");
        assert_eq!(ExtElement::identity().to_string(), "1");
    }
}

//! The shift extension `F_inf(t)`: `t^-1 x_i t = x_{i-1}` on the free group
//! with basis `x_i`, `i` an integer.
//!
//! For `v = t^m V` with `V` cyclically shift-reduced of length `n`, the
//! conjugates `t^m W` with `|W| = n` are the shifts of the words `W_i`,
//! where `W_0 = V` and `W_{i+1} = tau_m(W_i)`. Since `W_{i+n}` is
//! `shift(m, W_i)`, the data `(n k_i + i m, shift(k_i, W_i))` with `k_i` the
//! first index of `W_i` is periodic in `i` and moves uniformly under
//! conjugation by `t`. The normal form is `t^m shift(k_i, W_i)` for the `i`
//! minimising it.

use std::fmt;

use crate::element::ConjugacyCertificate;
use crate::error::Error;
use crate::text::format_element;
use crate::word::{Letter, Word};

/// `t^t_exp * word` in `F_inf(t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ShiftElement {
    pub t_exp: i64,
    pub word: Word,
}

impl ShiftElement {
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

    /// `(t^a A)(t^b B) = t^(a+b) shift(b, A) B`.
    pub fn mul(&self, rhs: &ShiftElement) -> ShiftElement {
        ShiftElement::new(
            self.t_exp + rhs.t_exp,
            shift(rhs.t_exp, &self.word).mul_word(&rhs.word),
        )
    }

    pub fn inverse(&self) -> ShiftElement {
        ShiftElement::new(-self.t_exp, shift(-self.t_exp, &self.word.inverse()))
    }

    /// `u^-1 self u`.
    pub fn conjugate(&self, u: &ShiftElement) -> ShiftElement {
        u.inverse().mul(self).mul(u)
    }
}

impl fmt::Display for ShiftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self.t_exp, &self.word))
    }
}

impl ConjugacyCertificate<ShiftElement> {
    /// Replays `u^-1 v u` and compares with `w`.
    pub fn verify(&self, v: &ShiftElement, w: &ShiftElement) -> bool {
        v.conjugate(&self.conjugator) == *w
    }
}

/// `phi^m(V)`: every index decreased by `m`.
pub fn shift(m: i64, v: &Word) -> Word {
    v.map_indices(|i| (i as i64 - m) as i32)
}

fn shift_letter(m: i64, l: Letter) -> Letter {
    Letter::new((l.index() as i64 - m) as i32, l.is_inverse())
}

/// `tau_m(U x) = shift(m, x) U`: the conjugate of `t^m V` by the inverse of
/// the final letter.
pub fn tau(m: i64, v: &Word) -> Result<Word, Error> {
    let last = v.last().ok_or(Error::EmptyWord)?;
    let head = v.prefix(v.len() - 1);
    Ok(Word::letter(shift_letter(m, last)).mul_word(&head))
}

/// Peels `V = shift(m, x) V' x^-1` while possible. Returns `(core, U)` with
/// `V = shift(m, U) core U^-1`; conjugation by `U` carries `t^m V` to
/// `t^m core`.
pub fn cyclically_shift_reduce(m: i64, v: &Word) -> (Word, Word) {
    let l = v.letters();
    let (mut i, mut j) = (0, l.len());
    while j >= i + 2 && l[i] == shift_letter(m, l[j - 1].inverse()) {
        i += 1;
        j -= 1;
    }
    let u = Word::from_letters(l[j..].iter().rev().map(|x| x.inverse()));
    (Word::from_letters(l[i..j].iter().copied()), u)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftNormalForm {
    pub element: ShiftElement,
    /// Conjugates the input to `element`.
    pub certificate: ConjugacyCertificate<ShiftElement>,
}

/// The conjugacy normal form of `v`; nonempty words start with an index-0
/// letter.
pub fn shift_normal_form(v: &ShiftElement) -> ShiftNormalForm {
    let m = v.t_exp;
    let (core, u) = cyclically_shift_reduce(m, &v.word);
    let n = core.len();
    let mut conj = u;
    let mut best: Option<((i64, Word), Word, i64)> = None;
    let mut w = core;
    for i in 0..n.max(1) {
        if i > 0 {
            let last = w.last().expect("orbit words are nonempty");
            conj = conj.mul_word(&Word::letter(last.inverse()));
            w = tau(m, &w).expect("orbit words are nonempty");
        }
        let k = w.first().map_or(0, |l| l.index() as i64);
        let key = (n as i64 * k + i as i64 * m, shift(k, &w));
        if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
            best = Some((key, conj.clone(), k));
        }
    }
    let ((_, word), conj, k) = best.expect("at least one candidate");
    let conjugator = ShiftElement::from_word(conj).mul(&ShiftElement::t_power(k));
    ShiftNormalForm {
        element: ShiftElement::new(m, word),
        certificate: ConjugacyCertificate { conjugator },
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftDecision {
    pub conjugate: bool,
    /// `c` with `c^-1 u c = v` when conjugate.
    pub certificate: Option<ConjugacyCertificate<ShiftElement>>,
}

/// Decides conjugacy in `F_inf(t)` by comparing normal forms.
pub fn shift_are_conjugate(u: &ShiftElement, v: &ShiftElement) -> ShiftDecision {
    let no = ShiftDecision {
        conjugate: false,
        certificate: None,
    };
    if u.t_exp != v.t_exp {
        return no;
    }
    let nu = shift_normal_form(u);
    let nv = shift_normal_form(v);
    if nu.element != nv.element {
        return no;
    }
    let c = nu
        .certificate
        .conjugator
        .mul(&nv.certificate.conjugator.inverse());
    ShiftDecision {
        conjugate: true,
        certificate: Some(ConjugacyCertificate { conjugator: c }),
    }
}

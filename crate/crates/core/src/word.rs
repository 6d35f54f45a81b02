//! Letters, freely reduced words, cyclic reduction and the shortlex order.
//!
//! A [`Word`] is always stored freely reduced. Every constructor reduces its
//! input, so equality of `Word` values is equality of group elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::Error;

/// A signed generator `x_i` or `x_i^-1`.
///
/// The derived order is `(index, inverse)` with `false < true`, i.e.
/// `x_1 < x_1^-1 < x_2 < x_2^-1 < ...`, which is the letter order used by
/// the shortlex comparison in both the finite-rank and the integer-indexed
/// alphabets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    index: i32,
    inverse: bool,
}

impl Letter {
    pub const fn new(index: i32, inverse: bool) -> Self {
        Self { index, inverse }
    }

    /// The positive letter `x_index`.
    pub const fn gen(index: i32) -> Self {
        Self::new(index, false)
    }

    /// The negative letter `x_index^-1`.
    pub const fn gen_inv(index: i32) -> Self {
        Self::new(index, true)
    }

    pub const fn index(self) -> i32 {
        self.index
    }

    pub const fn is_inverse(self) -> bool {
        self.inverse
    }

    /// `+1` or `-1`.
    pub const fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub const fn inverse(self) -> Self {
        Self::new(self.index, !self.inverse)
    }

    /// Index decreased by `by`, sign kept.
    pub const fn shifted(self, by: i32) -> Self {
        Self::new(self.index - by, self.inverse)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// Which generators a word may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    /// `x_1 .. x_n`.
    Rank(u32),
    /// `x_i` for every integer `i`.
    Integers,
}

impl Alphabet {
    pub fn contains(self, letter: Letter) -> bool {
        match self {
            Alphabet::Rank(n) => letter.index() >= 1 && letter.index() as i64 <= n as i64,
            Alphabet::Integers => true,
        }
    }

    pub fn check(self, word: &Word) -> Result<(), Error> {
        match word.letters().iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::IndexOutOfRange {
                index: l.index() as i64,
                alphabet: self,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Rank(n) => write!(f, "rank {n}"),
            Alphabet::Integers => write!(f, "integer-indexed"),
        }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn generator(index: i32) -> Self {
        Word::letter(Letter::gen(index))
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut out = Vec::new();
        for l in raw {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    /// Builds a word from `(index, sign)` pairs, e.g. `[(1, 1), (2, -1)]`.
    pub fn from_pairs(pairs: &[(i32, i32)]) -> Self {
        Word::from_letters(pairs.iter().map(|&(i, s)| Letter::new(i, s < 0)))
    }

    /// Wraps letters that are already known to be freely reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_freely_reduced(&letters));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// Everything from position `n` on.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    /// Reduced product `self * rhs`.
    pub fn mul_word(&self, rhs: &Word) -> Word {
        let a = &self.0;
        let b = &rhs.0;
        let mut c = 0;
        while c < a.len() && c < b.len() && a[a.len() - 1 - c].cancels(b[c]) {
            c += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * c);
        out.extend_from_slice(&a[..a.len() - c]);
        out.extend_from_slice(&b[c..]);
        Word(out)
    }

    /// Reduced product of several words.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        let mut out = Vec::new();
        for w in words {
            for &l in &w.0 {
                push_reduced(&mut out, l);
            }
        }
        Word(out)
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul_word(&base);
        }
        out
    }

    /// `c^-1 * self * c`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        Word::product([&c.inverse(), self, c])
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) if self.len() >= 2 => !a.cancels(b),
            _ => true,
        }
    }

    /// Applies an index map letter by letter. The map must send distinct
    /// generators to distinct generators so the result stays reduced.
    pub fn map_indices(&self, f: impl Fn(i32) -> i32) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(f(l.index()), l.is_inverse()))
                .collect(),
        )
    }

    /// Sum of signs of the letters with the given index.
    pub fn exponent_sum_of(&self, index: i32) -> i64 {
        self.0
            .iter()
            .filter(|l| l.index() == index)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Sum of all signs.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign() as i64).sum()
    }

    /// Left rotation by `k` letters. Only meaningful on cyclically reduced words.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.mul_word(rhs)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

/// Shortlex: shorter words first, equal lengths compared lexicographically
/// by the letter order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last().is_some_and(|top| top.cancels(l)) {
        out.pop();
    } else {
        out.push(l);
    }
}

fn is_freely_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| !w[0].cancels(w[1]))
}

/// Free reduction of a raw letter sequence.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    Word::from_letters(raw)
}

/// Splits `v` as `s * core * s^-1` with `core` cyclically reduced.
///
/// The decomposition is graphical: `v` is literally the concatenation of
/// `s`, `core` and `s^-1`.
pub fn cyclically_reduce(v: &Word) -> (Word, Word) {
    let l = v.letters();
    let mut i = 0;
    let mut j = l.len();
    while j >= i + 2 && l[i].cancels(l[j - 1]) {
        i += 1;
        j -= 1;
    }
    (Word(l[i..j].to_vec()), Word(l[..i].to_vec()))
}

/// Smallest `k` such that rotating `s` left by `k` gives its
/// lexicographically least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i = (i + k + 1).max(j + 1);
                k = 0;
            }
            Ordering::Less => {
                j = (j + k + 1).max(i + 1);
                k = 0;
            }
        }
    }
    i.min(j).min(n.saturating_sub(1))
}

/// Shortlex comparison of two words that must both lie in `alphabet`.
pub fn shortlex_compare(alphabet: Alphabet, u: &Word, v: &Word) -> Result<Ordering, Error> {
    alphabet.check(u)?;
    alphabet.check(v)?;
    Ok(u.cmp(v))
}

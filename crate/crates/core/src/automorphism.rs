//! Endomorphisms of a free group of finite rank given by generator images.

use crate::error::Error;
use crate::word::{cyclically_reduce, push_reduced, Alphabet, Letter, Word};

/// A map `x_i -> images[i-1]` on the free group of rank `images.len()`.
///
/// Automorphism status is certified only when an inverse table is supplied
/// through [`Automorphism::with_inverse`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    images: Vec<Word>,
    image_inverses: Vec<Word>,
    inverse_images: Option<Vec<Word>>,
}

impl Automorphism {
    pub fn new(images: Vec<Word>) -> Result<Self, Error> {
        let rank = images.len() as u32;
        let alphabet = Alphabet::Rank(rank);
        for img in &images {
            alphabet.check(img)?;
        }
        Ok(Self::from_images_unchecked(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<Word>) -> Self {
        let image_inverses = images.iter().map(Word::inverse).collect();
        Self {
            images,
            image_inverses,
            inverse_images: None,
        }
    }

    /// Builds the map together with its inverse and checks both compositions
    /// fix every generator.
    pub fn with_inverse(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self, Error> {
        if images.len() != inverse_images.len() {
            return Err(Error::RankMismatch {
                rank: images.len() as u32,
                got: inverse_images.len(),
            });
        }
        let fwd = Self::new(images)?;
        let bwd = Self::new(inverse_images)?;
        for i in 1..=fwd.rank() as i32 {
            let x = Word::generator(i);
            if fwd.apply_unchecked(&bwd.apply_unchecked(&x)) != x
                || bwd.apply_unchecked(&fwd.apply_unchecked(&x)) != x
            {
                return Err(Error::NotInverse { generator: i });
            }
        }
        Ok(Self {
            inverse_images: Some(bwd.images),
            ..fwd
        })
    }

    pub fn identity(rank: u32) -> Self {
        Self::from_images_unchecked((1..=rank as i32).map(Word::generator).collect())
    }

    /// `x -> w^-1 x w`.
    pub fn conjugation(rank: u32, w: &Word) -> Self {
        let inv = w.inverse();
        let images = (1..=rank as i32)
            .map(|i| Word::product([&inv, &Word::generator(i), w]))
            .collect();
        let inverse_images = (1..=rank as i32)
            .map(|i| Word::product([w, &Word::generator(i), &inv]))
            .collect();
        Self {
            inverse_images: Some(inverse_images),
            ..Self::from_images_unchecked(images)
        }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse_images.as_deref()
    }

    /// The inverse map, when an inverse table is known.
    pub fn inverse(&self) -> Option<Automorphism> {
        self.inverse_images.as_ref().map(|inv| Automorphism {
            inverse_images: Some(self.images.clone()),
            ..Self::from_images_unchecked(inv.clone())
        })
    }

    /// Image of generator `x_i`, `1 <= i <= rank`.
    pub fn image(&self, i: i32) -> &Word {
        &self.images[(i - 1) as usize]
    }

    pub fn apply(&self, v: &Word) -> Result<Word, Error> {
        Alphabet::Rank(self.rank()).check(v)?;
        Ok(self.apply_unchecked(v))
    }

    /// Substitution without the alphabet check; indices must be in range.
    pub fn apply_unchecked(&self, v: &Word) -> Word {
        let mut out = Vec::with_capacity(v.len() * 2);
        for &l in v.letters() {
            self.push_letter_image(&mut out, l);
        }
        Word::from_reduced_unchecked(out)
    }

    fn push_letter_image(&self, out: &mut Vec<Letter>, l: Letter) {
        let idx = (l.index() - 1) as usize;
        let img = if l.is_inverse() {
            &self.image_inverses[idx]
        } else {
            &self.images[idx]
        };
        for &m in img.letters() {
            push_reduced(out, m);
        }
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let images = other
            .images
            .iter()
            .map(|w| self.apply_unchecked(w))
            .collect();
        let inverse_images = match (&self.inverse_images, &other.inverse_images) {
            (Some(a), Some(b)) => {
                let a = Self::from_images_unchecked(a.clone());
                let b = Self::from_images_unchecked(b.clone());
                Some(a.images.iter().map(|w| b.apply_unchecked(w)).collect())
            }
            _ => None,
        };
        Automorphism {
            inverse_images,
            ..Self::from_images_unchecked(images)
        }
    }

    /// `self^k` for `k >= 0` by repeated composition.
    pub fn pow(&self, k: u32) -> Automorphism {
        let mut out = Automorphism::identity(self.rank());
        if self.inverse_images.is_some() {
            out.inverse_images = Some(out.images.clone());
        }
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::generator(i as i32 + 1))
    }

    /// The word `w` with `self(x_i) = w^-1 x_i w` for every generator, if
    /// the map is inner. For rank at least two the witness is unique.
    pub fn find_inner_witness(&self) -> Option<Word> {
        let rank = self.rank();
        if rank == 0 {
            return Some(Word::empty());
        }
        let x1 = Word::generator(1);
        // self(x1) = s x1 s^-1 graphically, so w1 = s^-1 solves the first
        // constraint and every solution is x1^a w1.
        let (core, s) = cyclically_reduce(self.image(1));
        if core != x1 {
            return None;
        }
        let w1 = s.inverse();
        if rank == 1 {
            return Some(Word::empty());
        }
        // x1^-a x2 x1^a = w1 self(x2) w1^-1 has length 2|a| + 1.
        let rhs = Word::product([&w1, self.image(2), &s]);
        let bound = (rhs.len() as i64) / 2 + 1;
        let mut candidates: Vec<i64> = (-bound..=bound).collect();
        candidates.sort_by_key(|a| (a.abs(), *a < 0));
        candidates.into_iter().find_map(|a| {
            let w = x1.pow(a).mul_word(&w1);
            let ok =
                (1..=rank as i32).all(|i| Word::generator(i).conjugate_by(&w) == *self.image(i));
            ok.then_some(w)
        })
    }
}

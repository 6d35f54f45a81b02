#![allow(dead_code)]

use cyclext::element::ExtElement;
use cyclext::word::{Letter, Word};
use proptest::prelude::*;
use rand::Rng;

/// Words over `x_lo .. x_hi` of at most `max_len` letters before reduction.
pub fn word_in(lo: i32, hi: i32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((lo..=hi, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(i, inv)| Letter::new(i, inv))))
}

pub fn word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    word_in(1, rank as i32, max_len)
}

pub fn element(rank: u32, t: i64, max_len: usize) -> impl Strategy<Value = ExtElement> {
    (-t..=t, word(rank, max_len)).prop_map(|(t, w)| ExtElement::new(t, w))
}

pub fn random_word<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::from_letters((0..n).map(|_| Letter::new(rng.gen_range(1..=rank as i32), rng.gen())))
}

/// A word of exactly `len` letters, reduced as generated.
pub fn random_reduced_word<R: Rng>(rng: &mut R, rank: u32, len: usize) -> Word {
    let mut ls: Vec<Letter> = Vec::with_capacity(len);
    while ls.len() < len {
        let l = Letter::new(rng.gen_range(1..=rank as i32), rng.gen());
        if ls.last().is_none_or(|p| !p.cancels(l)) {
            ls.push(l);
        }
    }
    Word::from_letters(ls)
}

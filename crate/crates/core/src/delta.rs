//! Reduction of a word by conjugation with powers of a fixed witness `delta`.
//!
//! The scan is done in the frame of the cyclic reduction of `delta`: with
//! `delta = s * dc * s^-1` (graphically) and `dc` cyclically reduced,
//! `delta^-k v delta^k = s * dc^-k (s^-1 v s) dc^k * s^-1`. Once
//! `k * |dc|` exceeds `|s^-1 v s| + |dc|` the cancellations on both sides of
//! `dc^-k (..) dc^k` and against the collar `s` no longer change, so the
//! length is affine in `k` from there on. Scanning `|k| <= window` therefore
//! sees every attainable length.

use crate::word::{cyclically_reduce, Word};

/// `delta^-k v delta^k`, reduced.
pub fn conjugate_by_power(delta: &Word, v: &Word, k: i64) -> Word {
    let dk = delta.pow(k);
    Word::product([&dk.inverse(), v, &dk])
}

/// The exponent window that is sufficient for `v`.
pub fn scan_window(delta: &Word, v: &Word) -> i64 {
    if delta.is_empty() {
        return 0;
    }
    let (core, s) = cyclically_reduce(delta);
    let framed = (v.len() + 2 * s.len()) as i64;
    framed / core.len() as i64 + 3
}

/// Lengths `||delta^-k v delta^k||` for `k` in `-window..=window`, together
/// with the words.
pub fn conjugates_in_window(delta: &Word, v: &Word, window: i64) -> Vec<(i64, Word)> {
    if delta.is_empty() {
        return vec![(0, v.clone())];
    }
    let (core, s) = cyclically_reduce(delta);
    let s_inv = s.inverse();
    let core_inv = core.inverse();
    let framed = Word::product([&s_inv, v, &s]);
    let mut out = Vec::with_capacity(2 * window as usize + 1);
    out.push((0, v.clone()));
    for (step_l, step_r, sign) in [(&core_inv, &core, 1i64), (&core, &core_inv, -1i64)] {
        let mut x = framed.clone();
        for k in 1..=window {
            x = Word::product([step_l, &x, step_r]);
            out.push((sign * k, Word::product([&s, &x, &s_inv])));
        }
    }
    out.sort_by_key(|(k, _)| *k);
    out
}

/// `(k, ||delta^-k v delta^k||)` for `k` in `range`.
pub fn length_profile(
    delta: &Word,
    v: &Word,
    range: std::ops::RangeInclusive<i64>,
) -> Vec<(i64, usize)> {
    range
        .map(|k| (k, conjugate_by_power(delta, v, k).len()))
        .collect()
}

/// `true` iff `|v| <= ||delta^-k v delta^k||` for every `|k| <= window`.
/// Cyclically reduced words are accepted without scanning.
pub fn is_delta_reduced(delta: &Word, v: &Word, window: Option<i64>) -> bool {
    if v.is_cyclically_reduced() || delta.is_empty() {
        return true;
    }
    let window = window.unwrap_or_else(|| scan_window(delta, v));
    conjugates_in_window(delta, v, window)
        .iter()
        .all(|(_, c)| c.len() >= v.len())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaReduction {
    /// `delta^-exponent v delta^exponent`.
    pub word: Word,
    pub exponent: i64,
}

/// Shortest conjugate of `v` by a power of `delta`. Among the shortest, the
/// exponent smallest in absolute value wins, positive before negative.
pub fn delta_reduce(delta: &Word, v: &Word) -> DeltaReduction {
    let window = scan_window(delta, v);
    conjugates_in_window(delta, v, window)
        .into_iter()
        .min_by_key(|(k, w)| (w.len(), k.abs(), *k < 0))
        .map(|(exponent, word)| DeltaReduction { word, exponent })
        .expect("window contains k = 0")
}

/// Every conjugate `delta^-k v delta^k` of minimal length, with its `k`.
pub fn minimal_conjugates(delta: &Word, v: &Word) -> Vec<(i64, Word)> {
    let window = scan_window(delta, v);
    let all = conjugates_in_window(delta, v, window);
    let best = all.iter().map(|(_, w)| w.len()).min().unwrap_or(0);
    all.into_iter().filter(|(_, w)| w.len() == best).collect()
}

/// Greedy descent by `delta^{±1}` only: conjugate while a unit step shortens.
/// Exact when `delta` is cyclically reduced; can stall on a plateau otherwise.
pub fn unit_step_descent(delta: &Word, v: &Word) -> DeltaReduction {
    let mut cur = v.clone();
    let mut exponent = 0;
    if delta.is_empty() {
        return DeltaReduction {
            word: cur,
            exponent,
        };
    }
    loop {
        let up = conjugate_by_power(delta, &cur, 1);
        let down = conjugate_by_power(delta, &cur, -1);
        let (step, next) = if up.len() <= down.len() {
            (1, up)
        } else {
            (-1, down)
        };
        if next.len() >= cur.len() {
            return DeltaReduction {
                word: cur,
                exponent,
            };
        }
        cur = next;
        exponent += step;
    }
}

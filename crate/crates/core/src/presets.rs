//! Two-generator Artin groups `A(k)` as extensions `F_n(t)`.
//!
//! With `t = x`, `A(2n)` is generated by `t` and `y_i = t^i y t^-i`
//! (`0 <= i < n`), and `A(2n+1)` by `t` and `z_i = t^i (y t^-1) t^-i`
//! (`0 <= i < 2n`). Generator `y_i` / `z_i` is stored as `x_{i+1}`.
//!
//! The witness kept in the context follows `phi^m(f) = delta^-1 f delta`,
//! so it is the inverse of the word `y_0 .. y_{n-1}` (resp. `Σ`) for which
//! `phi^m(f) = Σ f Σ^-1`.

use crate::automorphism::Automorphism;
use crate::context::{ContextOptions, TOrder, VIContext};
use crate::error::Error;
use crate::word::{Letter, Word};

fn y(i: i32) -> Letter {
    Letter::gen(i + 1)
}

/// `y_0 y_1 .. y_{n-1}`, fixed by `phi` in `A(2n)`.
pub fn artin_even_delta(n: u32) -> Word {
    Word::from_letters((0..n as i32).map(y))
}

/// `Σ = z_0 z_2 .. z_{2n-2} (z_0 z_1 .. z_{2n-1})^-1 z_1 z_3 .. z_{2n-1}`,
/// fixed by `psi` in `A(2n+1)`.
pub fn artin_odd_sigma(n: u32) -> Word {
    let n = n as i32;
    let evens = Word::from_letters((0..n).map(|i| y(2 * i)));
    let all = Word::from_letters((0..2 * n).map(y));
    let odds = Word::from_letters((0..n).map(|i| y(2 * i + 1)));
    Word::product([&evens, &all.inverse(), &odds])
}

/// `A(2n)`, `n >= 2`: rank `n`, `m = n`.
pub fn artin_even(n: u32) -> Result<VIContext, Error> {
    if n < 2 {
        return Err(Error::InvalidContext(format!(
            "A(2n) needs n >= 2, got {n}"
        )));
    }
    let k = n as i32;
    // phi(y0) = y0 .. y_{n-2} y_{n-1} y_{n-2}^-1 .. y0^-1, phi(y_i) = y_{i-1}
    let head: Vec<Letter> = (0..k - 1).map(y).collect();
    let mut y0_image = head.clone();
    y0_image.push(y(k - 1));
    y0_image.extend(head.iter().rev().map(|l| l.inverse()));
    let mut images = vec![Word::from_letters(y0_image)];
    images.extend((1..k).map(|i| Word::letter(y(i - 1))));
    let phi = Automorphism::new(images)?;
    let delta = artin_even_delta(n).inverse();
    Ok(
        VIContext::new(TOrder::Infinite, phi, n, delta, ContextOptions::default())?
            .with_alias(Some('y')),
    )
}

/// `A(2n+1)`, `n >= 1`: rank `2n`, `m = 2(2n+1)`.
pub fn artin_odd(n: u32) -> Result<VIContext, Error> {
    if n < 1 {
        return Err(Error::InvalidContext(format!(
            "A(2n+1) needs n >= 1, got {n}"
        )));
    }
    let k = n as i32;
    // psi(z0) = z0 z2 .. z_{2n-2} z_{2n-1}^-1 .. z3^-1 z1^-1, psi(z_i) = z_{i-1}
    let mut z0_image: Vec<Letter> = (0..k).map(|i| y(2 * i)).collect();
    z0_image.extend((0..k).rev().map(|i| y(2 * i + 1).inverse()));
    let mut images = vec![Word::from_letters(z0_image)];
    images.extend((1..2 * k).map(|i| Word::letter(y(i - 1))));
    let phi = Automorphism::new(images)?;
    let delta = artin_odd_sigma(n).inverse();
    Ok(VIContext::new(
        TOrder::Infinite,
        phi,
        2 * (2 * n + 1),
        delta,
        ContextOptions::default(),
    )?
    .with_alias(Some('z')))
}

/// `A(k)` for `k >= 3`.
pub fn artin(k: u32) -> Result<VIContext, Error> {
    match k {
        0..=2 => Err(Error::InvalidContext(format!("A(k) needs k >= 3, got {k}"))),
        k if k % 2 == 0 => artin_even(k / 2),
        k => artin_odd((k - 1) / 2),
    }
}

/// `F_rank ⋊ C_2` with `t` of order 2 acting by `x1 <-> x2` and
/// `x_i -> x_i^-1` for `i >= 3`.
pub fn involution(rank: u32) -> Result<VIContext, Error> {
    if rank < 2 {
        return Err(Error::InvalidContext(format!(
            "involution needs rank >= 2, got {rank}"
        )));
    }
    let mut images = vec![Word::generator(2), Word::generator(1)];
    images.extend((3..=rank as i32).map(|i| Word::letter(Letter::gen_inv(i))));
    let phi = Automorphism::new(images)?;
    VIContext::new(
        TOrder::Finite(2),
        phi,
        2,
        Word::empty(),
        ContextOptions::default(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[(i32, i32)]) -> Word {
        Word::from_pairs(p)
    }

    #[test]
    fn a4_tables() {
        let ctx = artin(4).unwrap();
        assert_eq!(ctx.rank(), 2);
        assert_eq!(ctx.m(), 2);
        assert_eq!(ctx.phi().image(1), &w(&[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(ctx.phi().image(2), &w(&[(1, 1)]));
        assert_eq!(*ctx.delta(), w(&[(2, -1), (1, -1)]));
    }

    #[test]
    fn a6_delta() {
        let ctx = artin(6).unwrap();
        assert_eq!(ctx.m(), 3);
        assert_eq!(artin_even_delta(3), w(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(
            ctx.phi().apply(&artin_even_delta(3)).unwrap(),
            artin_even_delta(3)
        );
    }

    #[test]
    fn trefoil_tables() {
        let ctx = artin(3).unwrap();
        assert_eq!(ctx.rank(), 2);
        assert_eq!(ctx.m(), 6);
        assert_eq!(ctx.phi().image(1), &w(&[(1, 1), (2, -1)]));
        assert_eq!(ctx.phi().image(2), &w(&[(1, 1)]));
        assert_eq!(artin_odd_sigma(1), w(&[(1, 1), (2, -1), (1, -1), (2, 1)]));
    }

    #[test]
    fn a5_tables() {
        let ctx = artin(5).unwrap();
        assert_eq!(ctx.rank(), 4);
        assert_eq!(ctx.m(), 10);
        let sigma = artin_odd_sigma(2);
        assert_eq!(ctx.phi().apply(&sigma).unwrap(), sigma);
    }

    #[test]
    fn bad_parameters() {
        assert!(artin_even(1).is_err());
        assert!(artin_odd(0).is_err());
        assert!(artin(2).is_err());
        assert!(involution(1).is_err());
    }

    #[test]
    fn involution_context() {
        let ctx = involution(3).unwrap();
        assert_eq!(ctx.t_order(), TOrder::Finite(2));
        assert_eq!(ctx.m(), 2);
    }
}

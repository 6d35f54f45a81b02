//! Groups `F_n(t) = F_n ⋊ <t>` where `t^-1 f t = phi(f)` and `phi^m` is
//! conjugation by a witness word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::automorphism::Automorphism;
use crate::error::Error;
use crate::text::{parse_word, Syntax};
use crate::word::{Alphabet, Word};

/// Order of the stable letter `t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TOrder {
    Infinite,
    Finite(u32),
}

impl TOrder {
    /// Canonical representative of `t^exp`.
    pub fn canonical(self, exp: i64) -> i64 {
        match self {
            TOrder::Infinite => exp,
            TOrder::Finite(w) => exp.rem_euclid(w as i64),
        }
    }
}

impl fmt::Display for TOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TOrder::Infinite => f.write_str("inf"),
            TOrder::Finite(w) => write!(f, "{w}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ContextOptions {
    /// Check that no `phi^j`, `0 < j < m`, is inner.
    pub check_minimality: bool,
}

impl Default for ContextOptions {
    fn default() -> Self {
        Self {
            check_minimality: true,
        }
    }
}

/// One failed context invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationFailure {
    RankTooSmall {
        rank: u32,
    },
    ZeroPower,
    DeltaOutOfRange,
    /// `phi^m(x_i) != delta^-1 x_i delta`.
    InnerPower {
        generator: i32,
        expected: Word,
        got: Word,
    },
    /// `phi(delta) != delta`.
    DeltaNotFixed {
        image: Word,
    },
    /// `phi^omega(x_i) != x_i` for a finite order `omega`.
    FiniteOrder {
        generator: i32,
        image: Word,
    },
    /// A smaller power `phi^power` is already inner.
    NotMinimal {
        power: u32,
        witness: Word,
    },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RankTooSmall { rank } => write!(f, "rank {rank} < 2"),
            Self::ZeroPower => f.write_str("inner power m must be positive"),
            Self::DeltaOutOfRange => f.write_str("witness uses letters outside the alphabet"),
            Self::InnerPower {
                generator,
                expected,
                got,
            } => write!(
                f,
                "phi^m(x{generator}) = {got}, expected delta^-1 x{generator} delta = {expected}"
            ),
            Self::DeltaNotFixed { image } => write!(f, "phi(delta) = {image} differs from delta"),
            Self::FiniteOrder { generator, image } => {
                write!(
                    f,
                    "phi^omega(x{generator}) = {image}, expected x{generator}"
                )
            }
            Self::NotMinimal { power, witness } => {
                write!(f, "phi^{power} is already inner (witness {witness})")
            }
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A group `F_n(t)` with `phi^m(f) = delta^-1 f delta`.
#[derive(Clone, Debug)]
pub struct VIContext {
    t_order: TOrder,
    phi: Automorphism,
    m: u32,
    delta: Word,
    minimality_checked: bool,
    alias: Option<char>,
}

impl VIContext {
    /// Assembles a context without any checks; see [`verify_vi`].
    pub fn unchecked(t_order: TOrder, phi: Automorphism, m: u32, delta: Word) -> Self {
        Self {
            t_order,
            phi,
            m,
            delta,
            minimality_checked: false,
            alias: None,
        }
    }

    /// Assembles and validates a context.
    pub fn new(
        t_order: TOrder,
        phi: Automorphism,
        m: u32,
        delta: Word,
        opts: ContextOptions,
    ) -> Result<Self, Error> {
        let mut ctx = Self::unchecked(t_order, phi, m, delta);
        ctx.minimality_checked = opts.check_minimality;
        let report = verify_vi(&ctx);
        if !report.is_valid() {
            let msgs: Vec<String> = report.failures.iter().map(|f| f.to_string()).collect();
            return Err(Error::InvalidContext(msgs.join("; ")));
        }
        Ok(ctx)
    }

    pub fn with_alias(mut self, alias: Option<char>) -> Self {
        self.alias = alias;
        self
    }

    pub fn rank(&self) -> u32 {
        self.phi.rank()
    }

    pub fn t_order(&self) -> TOrder {
        self.t_order
    }

    pub fn phi(&self) -> &Automorphism {
        &self.phi
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn delta(&self) -> &Word {
        &self.delta
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::Rank(self.rank())
    }

    pub fn syntax(&self) -> Syntax {
        Syntax::new(self.alphabet()).with_alias(self.alias)
    }

    pub fn minimality_checked(&self) -> bool {
        self.minimality_checked
    }

    /// Caveats attached to results computed in this context.
    pub fn warnings(&self) -> Vec<String> {
        if self.minimality_checked {
            Vec::new()
        } else {
            vec![format!(
                "non-minimal m: minimality of m = {} was not verified",
                self.m
            )]
        }
    }

    pub fn canonical_t(&self, exp: i64) -> i64 {
        self.t_order.canonical(exp)
    }

    /// `phi^k(v)` for any integer `k`, via `k = mq + r` and
    /// `phi^k(v) = phi^r(delta^-q v delta^q)`; `phi` is applied `r < m` times.
    pub fn power_apply(&self, k: i64, v: &Word) -> Word {
        let k = self.canonical_t(k);
        let m = self.m as i64;
        let q = k.div_euclid(m);
        let r = k.rem_euclid(m);
        let mut out = if q == 0 || self.delta.is_empty() {
            v.clone()
        } else {
            let dq = self.delta.pow(q);
            Word::product([&dq.inverse(), v, &dq])
        };
        for _ in 0..r {
            out = self.phi.apply_unchecked(&out);
        }
        out
    }

    /// Explicit generator tables for `phi^k` and `phi^-k`.
    pub fn twist(&self, k: i64) -> Twist {
        let rank = self.rank() as i32;
        let fwd = (1..=rank)
            .map(|i| self.power_apply(k, &Word::generator(i)))
            .collect();
        let bwd = (1..=rank)
            .map(|i| self.power_apply(-k, &Word::generator(i)))
            .collect();
        Twist {
            fwd: Automorphism::from_images_unchecked(fwd),
            bwd: Automorphism::from_images_unchecked(bwd),
        }
    }
}

/// An automorphism `psi` together with `psi^-1`, both as substitution tables.
#[derive(Clone, Debug)]
pub struct Twist {
    pub fwd: Automorphism,
    pub bwd: Automorphism,
}

impl Twist {
    pub fn apply(&self, v: &Word) -> Word {
        self.fwd.apply_unchecked(v)
    }

    pub fn apply_inverse(&self, v: &Word) -> Word {
        self.bwd.apply_unchecked(v)
    }
}

/// Checks every context invariant on generators and reports all failures.
pub fn verify_vi(ctx: &VIContext) -> ValidationReport {
    let mut failures = Vec::new();
    let rank = ctx.rank();
    if rank < 2 {
        failures.push(ValidationFailure::RankTooSmall { rank });
    }
    if ctx.m == 0 {
        failures.push(ValidationFailure::ZeroPower);
        return ValidationReport { failures };
    }
    if ctx.alphabet().check(&ctx.delta).is_err() {
        failures.push(ValidationFailure::DeltaOutOfRange);
        return ValidationReport { failures };
    }
    // Direct iteration, independent of power_apply.
    for i in 1..=rank as i32 {
        let x = Word::generator(i);
        let mut got = x.clone();
        for _ in 0..ctx.m {
            got = ctx.phi.apply_unchecked(&got);
        }
        let expected = x.conjugate_by(&ctx.delta);
        if got != expected {
            failures.push(ValidationFailure::InnerPower {
                generator: i,
                expected,
                got,
            });
        }
    }
    let image = ctx.phi.apply_unchecked(&ctx.delta);
    if image != ctx.delta {
        failures.push(ValidationFailure::DeltaNotFixed { image });
    }
    if let TOrder::Finite(omega) = ctx.t_order {
        for i in 1..=rank as i32 {
            let x = Word::generator(i);
            let mut img = x.clone();
            for _ in 0..omega {
                img = ctx.phi.apply_unchecked(&img);
            }
            if img != x {
                failures.push(ValidationFailure::FiniteOrder {
                    generator: i,
                    image: img,
                });
            }
        }
    }
    if ctx.minimality_checked && rank >= 2 {
        let mut power = Automorphism::identity(rank);
        for j in 1..ctx.m {
            power = ctx.phi.compose(&power);
            if let Some(witness) = power.find_inner_witness() {
                failures.push(ValidationFailure::NotMinimal { power: j, witness });
                break;
            }
        }
    }
    ValidationReport { failures }
}

/// Smallest `j <= bound` with `phi^j` inner, and its witness.
pub fn find_inner_power(phi: &Automorphism, bound: u32) -> Option<(u32, Word)> {
    let mut power = Automorphism::identity(phi.rank());
    for j in 1..=bound {
        power = phi.compose(&power);
        if let Some(w) = power.find_inner_witness() {
            return Some((j, w));
        }
    }
    None
}

/// `t_order` in a context file: `"inf"` or a positive integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TOrderSpec {
    Finite(u32),
    Named(InfTag),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

/// On-disk JSON form of a context.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ContextFile {
    pub rank: u32,
    pub t_order: TOrderSpec,
    pub images: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check_minimality: Option<bool>,
}

/// Default bound on `j` when a context file omits `m` and `delta`.
pub const DEFAULT_INNER_SEARCH_BOUND: u32 = 64;

impl ContextFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::ContextFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("context file serializes")
    }

    /// Builds and validates the context, searching `phi^1 .. phi^bound` for
    /// an inner power when `m`/`delta` are missing.
    pub fn into_context(self, search_bound: u32) -> Result<VIContext, Error> {
        let (ctx, report) = self.inspect(search_bound)?;
        if !report.is_valid() {
            let msgs: Vec<String> = report.failures.iter().map(|f| f.to_string()).collect();
            return Err(Error::InvalidContext(msgs.join("; ")));
        }
        Ok(ctx)
    }

    /// Like [`ContextFile::into_context`], but returns the unvalidated
    /// context together with the full list of failed invariants.
    pub fn inspect(self, search_bound: u32) -> Result<(VIContext, ValidationReport), Error> {
        if self.images.len() != self.rank as usize {
            return Err(Error::RankMismatch {
                rank: self.rank,
                got: self.images.len(),
            });
        }
        let syntax = Syntax::new(Alphabet::Rank(self.rank));
        let images = self
            .images
            .iter()
            .map(|s| parse_word(s, syntax))
            .collect::<Result<Vec<_>, _>>()?;
        let phi = Automorphism::new(images)?;
        let t_order = match self.t_order {
            TOrderSpec::Finite(0) => {
                return Err(Error::ContextFile("t_order must be positive".into()))
            }
            TOrderSpec::Finite(w) => TOrder::Finite(w),
            TOrderSpec::Named(InfTag::Inf) => TOrder::Infinite,
        };
        let (m, delta) = match (self.m, self.delta) {
            (Some(m), Some(d)) => (m, parse_word(&d, syntax)?),
            (m, None) => {
                let (j, w) = find_inner_power(&phi, m.unwrap_or(search_bound)).ok_or(
                    Error::NoInnerPower {
                        bound: m.unwrap_or(search_bound),
                    },
                )?;
                if m.is_some_and(|m| m != j) {
                    return Err(Error::ContextFile(format!(
                        "phi^{j} is already inner, smaller than the given m"
                    )));
                }
                (j, w)
            }
            (None, Some(_)) => {
                return Err(Error::ContextFile("delta given without m".into()));
            }
        };
        let mut ctx = VIContext::unchecked(t_order, phi, m, delta);
        ctx.minimality_checked = self.check_minimality.unwrap_or(true);
        let report = verify_vi(&ctx);
        Ok((ctx, report))
    }
}

/// Parses a JSON context file.
pub fn load_context(json: &str, search_bound: u32) -> Result<VIContext, Error> {
    ContextFile::from_json(json)?.into_context(search_bound)
}

//! Set-theoretic solutions of the Yang-Baxter equation.
//!
//! A solution on `X = {0, …, n−1}` is a map `r: X × X → X × X`, stored as
//! the table `r[x·n + y] = (σ_x(y), τ_y(x))`. Every brace `B` gives the
//! involutive non-degenerate solution
//! `r(a, b) = (λ_a(b), λ⁻¹_{λ_a(b)}(a))`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brace::FiniteBrace;
use crate::error::{Error, StructuralError};
use crate::limits::Limits;

/// A map `r: X × X → X × X` on `X = {0, …, size−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeSolution {
    size: usize,
    r: Vec<(u16, u16)>,
}

/// A witness against one of the solution properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YbeViolation {
    /// `r₁₂r₂₃r₁₂ ≠ r₂₃r₁₂r₂₃` at `(x, y, z)`.
    Braid { x: usize, y: usize, z: usize },
    /// `r(r(x, y)) ≠ (x, y)`.
    NotInvolutive { x: usize, y: usize },
    /// `σ_x` is not a bijection.
    LeftDegenerate { x: usize },
    /// `τ_y` is not a bijection.
    RightDegenerate { y: usize },
}

impl core::fmt::Display for YbeViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            YbeViolation::Braid { x, y, z } => write!(f, "braid relation fails at ({x}, {y}, {z})"),
            YbeViolation::NotInvolutive { x, y } => write!(f, "r(r({x}, {y})) != ({x}, {y})"),
            YbeViolation::LeftDegenerate { x } => write!(f, "sigma_{x} is not a bijection"),
            YbeViolation::RightDegenerate { y } => write!(f, "tau_{y} is not a bijection"),
        }
    }
}

impl YbeSolution {
    /// `r` lists `r(x, y)` for `x·size + y`; every value must be `< size`.
    pub fn new(size: usize, r: Vec<(u16, u16)>) -> Result<Self, Error> {
        if size == 0 {
            return Err(StructuralError::Empty.into());
        }
        if size > u16::MAX as usize + 1 {
            return Err(StructuralError::TooLarge(size).into());
        }
        if r.len() != size * size {
            return Err(StructuralError::Length { table: "r", len: r.len(), expected: size * size }.into());
        }
        if let Some(index) = r.iter().position(|&(u, v)| u as usize >= size || v as usize >= size) {
            let (u, v) = r[index];
            return Err(StructuralError::OutOfRange { table: "r", index, value: u.max(v) as usize, order: size }.into());
        }
        Ok(YbeSolution { size, r })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[(u16, u16)] {
        &self.r
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let (u, v) = self.r[x * self.size + y];
        (u as usize, v as usize)
    }
}

/// `r(a, b) = (λ_a(b), λ⁻¹_{λ_a(b)}(a))`.
pub fn solution_from_brace(b: &FiniteBrace) -> YbeSolution {
    let n = b.order();
    let mut r = Vec::with_capacity(n * n);
    for a in 0..n {
        for c in 0..n {
            let u = b.lambda(a, c);
            r.push((u as u16, b.lambda_inv(u, a) as u16));
        }
    }
    YbeSolution { size: n, r }
}

fn braid_holds(s: &YbeSolution, x: usize, y: usize, z: usize) -> bool {
    // r₁₂ r₂₃ r₁₂
    let (a1, b1) = s.apply(x, y);
    let (b2, c2) = s.apply(b1, z);
    let (a3, b3) = s.apply(a1, b2);
    let left = (a3, b3, c2);
    // r₂₃ r₁₂ r₂₃
    let (y1, z1) = s.apply(y, z);
    let (x2, y2) = s.apply(x, y1);
    let (y3, z3) = s.apply(y2, z1);
    left == (x2, y3, z3)
}

/// Checks the braid relation on every triple up to
/// [`Limits::full_check_threshold`] (or with [`Limits::force_full`]), and on
/// [`Limits::sample_triples`] seeded random triples above.
pub fn verify_braid(s: &YbeSolution, limits: &Limits) -> Result<(), YbeViolation> {
    let n = s.size;
    if limits.exhaustive(n) {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !braid_holds(s, x, y, z) {
                        return Err(YbeViolation::Braid { x, y, z });
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        for _ in 0..limits.sample_triples {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !braid_holds(s, x, y, z) {
                return Err(YbeViolation::Braid { x, y, z });
            }
        }
    }
    Ok(())
}

/// `r² = id`.
pub fn verify_involutive(s: &YbeSolution) -> Result<(), YbeViolation> {
    for x in 0..s.size {
        for y in 0..s.size {
            let (u, v) = s.apply(x, y);
            if s.apply(u, v) != (x, y) {
                return Err(YbeViolation::NotInvolutive { x, y });
            }
        }
    }
    Ok(())
}

/// Every `σ_x = r(x, ·)₁` and every `τ_y = r(·, y)₂` is a bijection.
pub fn verify_nondegenerate(s: &YbeSolution) -> Result<(), YbeViolation> {
    let n = s.size;
    let mut seen = vec![false; n];
    for x in 0..n {
        seen.iter_mut().for_each(|v| *v = false);
        for y in 0..n {
            seen[s.apply(x, y).0] = true;
        }
        if seen.iter().any(|v| !v) {
            return Err(YbeViolation::LeftDegenerate { x });
        }
    }
    for y in 0..n {
        seen.iter_mut().for_each(|v| *v = false);
        for x in 0..n {
            seen[s.apply(x, y).1] = true;
        }
        if seen.iter().any(|v| !v) {
            return Err(YbeViolation::RightDegenerate { y });
        }
    }
    Ok(())
}

/// Runs all three checks, returning the first violation as an error message.
pub fn verify_all(s: &YbeSolution, limits: &Limits) -> Result<(), alloc::string::String> {
    verify_braid(s, limits)
        .and_then(|_| verify_involutive(s))
        .and_then(|_| verify_nondegenerate(s))
        .map_err(|v| format!("{v}"))
}

//! Integer and matrix arithmetic modulo small integers.
//!
//! Matrices act on column vectors: `M·x`. Ranks and determinants are taken
//! modulo a prime.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

pub fn is_unit(a: u64, m: u64) -> bool {
    gcd(a % m, m) == 1
}

/// Multiplicative order of `a` modulo `m`, `None` if `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if !is_unit(a, m) {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

/// Inverse of `a` modulo `m`.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// A matrix over `ℤ/(modulus)`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, modulus: u64, data: Vec<i64>) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::precondition(alloc::format!("modulus {modulus} must be at least 2")));
        }
        if data.len() != rows * cols {
            return Err(Error::precondition(alloc::format!(
                "matrix data has {} entries, expected {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        let data = data.into_iter().map(|v| v.rem_euclid(modulus as i64) as u64).collect();
        Ok(Matrix { rows, cols, modulus, data })
    }

    /// Square matrix from row-major entries.
    pub fn square(n: usize, modulus: u64, data: Vec<i64>) -> Result<Self, Error> {
        Self::new(n, n, modulus, data)
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % modulus;
        }
        Matrix { rows: n, cols: n, modulus, data }
    }

    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        Matrix { rows, cols, modulus, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v.rem_euclid(self.modulus as i64) as u64;
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let mut out = Matrix::zero(self.rows, other.cols, m);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % m;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let m = self.modulus;
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % m).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let m = self.modulus;
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| (a + m - b) % m).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, k: i64) -> Matrix {
        let m = self.modulus;
        let k = k.rem_euclid(m as i64) as u64;
        Matrix { data: self.data.iter().map(|a| a * k % m).collect(), ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.modulus);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows, self.modulus)
    }

    /// `M·x`.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        let m = self.modulus;
        (0..self.rows).map(|i| (0..self.cols).fold(0, |acc, j| (acc + self.get(i, j) * x[j]) % m)).collect()
    }

    /// `xᵀ·M·y`.
    pub fn bilinear(&self, x: &[u64], y: &[u64]) -> u64 {
        let my = self.apply(y);
        x.iter().zip(&my).fold(0, |acc, (a, b)| (acc + a * b) % self.modulus)
    }

    /// Smallest `k ≥ 1` with `Mᵏ = I`, searched up to `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Row echelon form modulo a prime `p` (entries reduced mod `p`),
    /// returning the rank and the determinant sign-adjusted product of the
    /// pivots (meaningful for square input only).
    fn eliminate_mod_prime(&self, p: u64) -> (usize, u64) {
        let mut a: Vec<u64> = self.data.iter().map(|v| v % p).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut det = 1u64;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                det = 0;
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    a.swap(pivot * cols + j, rank * cols + j);
                }
                det = (p - det) % p;
            }
            let pv = a[rank * cols + col];
            det = det * pv % p;
            let inv = inverse_mod(pv, p).expect("nonzero element of a prime field");
            for r in rank + 1..rows {
                let factor = a[r * cols + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = factor * a[rank * cols + j] % p;
                    a[r * cols + j] = (a[r * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    /// Rank over `𝔽_p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        self.eliminate_mod_prime(p).0
    }

    /// Determinant modulo a prime `p`.
    pub fn det_mod(&self, p: u64) -> u64 {
        assert!(self.is_square());
        let (rank, det) = self.eliminate_mod_prime(p);
        if rank < self.rows {
            0
        } else {
            det
        }
    }

    /// Invertible over `ℤ/(pʳ)` iff invertible modulo `p`.
    pub fn is_invertible_mod_prime(&self, p: u64) -> bool {
        self.is_square() && self.det_mod(p) != 0
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut out = Matrix::zero(self.rows, cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * cols + j] = self.get(i, j);
            }
            for j in 0..other.cols {
                out.data[i * cols + self.cols + j] = other.get(i, j);
            }
        }
        out
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut out = Matrix::zero(r, c, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * c + j] = self.get(i, j);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.data[(self.rows + i) * c + self.cols + j] = other.get(i, j);
            }
        }
        out
    }

    /// True if the column vector `v` lies in the column space (mod prime `p`).
    pub fn column_space_contains(&self, v: &[u64], p: u64) -> bool {
        let col = Matrix { rows: self.rows, cols: 1, modulus: self.modulus, data: v.to_vec() };
        self.rank_mod(p) == self.hconcat(&col).rank_mod(p)
    }
}

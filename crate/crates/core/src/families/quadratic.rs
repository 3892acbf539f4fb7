//! Braces from quadratic forms over `ℤ/(pʳ)`: `H(pʳ, n, Q, f)`, its
//! presentation `H'` as an asymmetric product, matched products
//! `H₁ ⋈ … ⋈ H_s`, and the isomorphisms `φ` and `φ'`.
//!
//! Encodings: `H` and the matched product live on `(ℤ/(pᵢ^{rᵢ}))` vectors
//! `(x⃗₁, μ₁, …, x⃗_s, μ_s)` with the first coordinate least significant.
//! The asymmetric products `T ⋊∘ S` use the index `t·|S| + s` with `t` and
//! `s` mixed radix, first coordinate least significant.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::AbelianGroupSpec;
use crate::brace::{brace_from_lambda, trivial_brace, FiniteBrace, Meta};
use crate::error::Error;
use crate::limits::Limits;
use crate::modular::{is_prime, Matrix};
use crate::morphism::{verify_morphism, BraceMap};
use crate::products::{asymmetric_product, BraceAction, SymmetricCocycle};

use super::{decode_into, encode_digits, with_family};

/// `Q(x⃗) = Σ_{i≤j} c_{ij} x_i x_j` over `(ℤ/(pʳ))ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFormSpec {
    p: u64,
    r: u32,
    coeffs: Matrix,
}

impl QuadraticFormSpec {
    /// `coeffs` is the row-major `n × n` upper-triangular coefficient matrix.
    pub fn new(p: u64, r: u32, n: usize, coeffs: Vec<i64>) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::hypothesis("p prime", format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::hypothesis("r >= 1", "the exponent must be positive"));
        }
        if n == 0 {
            return Err(Error::hypothesis("n >= 1", "the rank must be positive"));
        }
        let m = p.checked_pow(r).filter(|&m| m <= u16::MAX as u64).ok_or_else(|| {
            Error::hypothesis("p^r small", format!("{p}^{r} is too large"))
        })?;
        let coeffs = Matrix::square(n, m, coeffs)?;
        if (0..n).any(|i| (0..i).any(|j| coeffs.get(i, j) != 0)) {
            return Err(Error::hypothesis("coefficients upper triangular", "an entry below the diagonal is nonzero"));
        }
        Ok(QuadraticFormSpec { p, r, coeffs })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.coeffs.rows()
    }

    /// `pʳ`.
    pub fn modulus(&self) -> u64 {
        self.coeffs.modulus()
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        self.coeffs.bilinear(x, x)
    }

    /// `b(x⃗, y⃗) = Q(x⃗ + y⃗) − Q(x⃗) − Q(y⃗)`.
    pub fn polar(&self, x: &[u64], y: &[u64]) -> u64 {
        self.polar_matrix().bilinear(x, y)
    }

    /// The Gram matrix `C + Cᵀ` of the polar form.
    pub fn polar_matrix(&self) -> Matrix {
        self.coeffs.add(&self.coeffs.transpose())
    }

    /// The polar form is non-degenerate (its Gram matrix is invertible).
    pub fn is_nondegenerate(&self) -> bool {
        self.polar_matrix().is_invertible_mod_prime(self.p)
    }

    /// All vectors of `(ℤ/(pʳ))ⁿ` in index order.
    fn vectors(&self) -> Vec<Vec<u64>> {
        all_vectors(self.modulus() as usize, self.n())
    }

    /// Whether `Q∘g = Q`, checked on every vector.
    pub fn is_preserved_by(&self, g: &Matrix) -> bool {
        self.vectors().iter().all(|x| self.eval(&g.apply(x)) == self.eval(x))
    }
}

fn all_vectors(m: usize, n: usize) -> Vec<Vec<u64>> {
    let radices = vec![m; n];
    let mut digits = vec![0; n];
    (0..m.pow(n as u32))
        .map(|i| {
            decode_into(i, &radices, &mut digits);
            digits.iter().map(|&d| d as u64).collect()
        })
        .collect()
}

fn check_matrix(name: &'static str, g: &Matrix, q: &QuadraticFormSpec) -> Result<(), Error> {
    if g.rows() != q.n() || g.cols() != q.n() || g.modulus() != q.modulus() {
        return Err(Error::hypothesis(name, "matrix has the wrong shape or modulus"));
    }
    Ok(())
}

/// `f` orthogonal for `Q` with `f^{pʳ} = id`.
fn check_f(q: &QuadraticFormSpec, f: &Matrix, condition: &'static str) -> Result<(), Error> {
    check_matrix(condition, f, q)?;
    if !q.is_preserved_by(f) {
        return Err(Error::hypothesis(condition, "f does not preserve Q"));
    }
    if !f.pow(q.modulus()).is_identity() {
        return Err(Error::hypothesis(condition, "the order of f does not divide p^r"));
    }
    Ok(())
}

fn q_meta(q: &QuadraticFormSpec, f: &Matrix) -> Vec<(&'static str, alloc::string::String)> {
    vec![
        ("p", format!("{}", q.p)),
        ("r", format!("{}", q.r)),
        ("n", format!("{}", q.n())),
        ("Q", format!("{:?}", q.coeffs.entries())),
        ("f", format!("{:?}", f.entries())),
    ]
}

/// `H(pʳ, n, Q, f)` on `(ℤ/(pʳ))^{n+1}` with
/// `λ_{(x⃗,μ)}(y⃗,μ') = (f^q(y⃗), μ' + b(x⃗, f^q(y⃗)))`, `q = μ − Q(x⃗)`.
pub fn build_h(q: &QuadraticFormSpec, f: &Matrix, limits: &Limits) -> Result<FiniteBrace, Error> {
    check_f(q, f, "f orthogonal for Q of order dividing p^r")?;
    let m = q.modulus() as usize;
    let n = q.n();
    let spec = AbelianGroupSpec::power(m, n + 1)?;
    spec.check(limits)?;
    let vectors = all_vectors(m, n);
    let f_pows: Vec<Matrix> = (0..m as u64).map(|k| f.pow(k)).collect();
    let polar = q.polar_matrix();
    let nx = vectors.len();
    let lam = |a: usize, b: usize| {
        let (x, mu) = (&vectors[a % nx], a / nx);
        let (y, mu2) = (&vectors[b % nx], b / nx);
        let exp = (mu + m - q.eval(x) as usize) % m;
        let fy = f_pows[exp].apply(y);
        let mu_out = (mu2 + polar.bilinear(x, &fy) as usize) % m;
        let fy: Vec<usize> = fy.into_iter().map(|v| v as usize).collect();
        encode_digits(&fy, &vec![m; n]) + mu_out * nx
    };
    let b = brace_from_lambda(&spec, lam, Meta::new(), limits)?;
    Ok(with_family(b, "h_brace", &q_meta(q, f)))
}

/// `H' = T ⋊∘ S` with `T = (ℤ/(pʳ))ⁿ`, `S = ℤ/(pʳ)` trivial, cocycle `−b`
/// and `α_μ = f^μ`, together with `φ(x⃗, μ) = (x⃗, μ − Q(x⃗))`, verified to be
/// an isomorphism `H → H'`.
pub fn build_h_prime_and_phi(q: &QuadraticFormSpec, f: &Matrix, limits: &Limits) -> Result<(FiniteBrace, BraceMap), Error> {
    let h = build_h(q, f, limits)?;
    let m = q.modulus() as usize;
    let n = q.n();
    let vectors = all_vectors(m, n);
    let nx = vectors.len();
    let radices = vec![m; n];
    let t = trivial_brace(&AbelianGroupSpec::power(m, n)?, limits)?;
    let s = trivial_brace(&AbelianGroupSpec::new(vec![m])?, limits)?;
    let f_pows: Vec<Matrix> = (0..m as u64).map(|k| f.pow(k)).collect();
    let to_index = |v: Vec<u64>| encode_digits(&v.into_iter().map(|d| d as usize).collect::<Vec<_>>(), &radices);
    let alpha = BraceAction::from_fn(m, nx, |mu, x| to_index(f_pows[mu].apply(&vectors[x])))?;
    let polar = q.polar_matrix();
    let b = SymmetricCocycle::from_fn(nx, m, true, |x, y| (m - polar.bilinear(&vectors[x], &vectors[y]) as usize) % m)?;
    let h_prime = asymmetric_product(&t, &s, &b, &alpha, limits)?;
    let h_prime = with_family(h_prime, "h_prime", &q_meta(q, f));
    let phi = BraceMap::from_fn(h.order(), h_prime.order(), |a| {
        let (x, mu) = (a % nx, a / nx);
        x * m + (mu + m - q.eval(&vectors[x]) as usize) % m
    })?;
    let report = verify_morphism(&h, &h_prime, &phi)?;
    if !report.is_isomorphism() {
        return Err(Error::precondition(format!("phi is not an isomorphism: {report:?}")));
    }
    Ok((h_prime, phi))
}

/// One factor `Hᵢ = H(pᵢ^{rᵢ}, nᵢ, Qᵢ, fᵢ)` of a matched product with its `cᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedFactor {
    pub q: QuadraticFormSpec,
    pub f: Matrix,
    pub c: Matrix,
}

/// Input of [`build_matched_and_phi_prime`]: the factors and the vector
/// `v_s` of the last factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedData {
    pub factors: Vec<MatchedFactor>,
    pub v: Vec<u64>,
}

/// Output of [`build_matched_and_phi_prime`].
#[derive(Debug, Clone)]
pub struct MatchedBraces {
    /// `H₁ ⋈ … ⋈ H_s` built from its lambda map.
    pub matched: FiniteBrace,
    /// `T' ⋊∘ S'`.
    pub product: FiniteBrace,
    /// `φ'`, verified to be an isomorphism.
    pub phi_prime: BraceMap,
    /// Every `cᵢ − id` is invertible.
    pub predicted_simple: bool,
}

impl MatchedData {
    /// Checks every hypothesis, failing on the first violated one.
    pub fn validate(&self) -> Result<(), Error> {
        let s = self.factors.len();
        if s == 0 {
            return Err(Error::hypothesis("s >= 1", "no factors given"));
        }
        for (i, fi) in self.factors.iter().enumerate() {
            if self.factors[..i].iter().any(|fj| fj.q.p == fi.q.p) {
                return Err(Error::hypothesis("p_i distinct", format!("p = {} repeats", fi.q.p)));
            }
        }
        for (i, fi) in self.factors.iter().enumerate() {
            let q = &fi.q;
            if !q.is_nondegenerate() {
                return Err(Error::hypothesis("Q_i non-degenerate", format!("factor {}", i + 1)));
            }
            check_f(q, &fi.f, "f_i orthogonal for Q_i of order dividing p_i^r_i")?;
            check_matrix("c_i shape", &fi.c, q)?;
            let next = self.factors[(i + 1) % s].q.modulus();
            if i + 1 < s {
                if !q.is_preserved_by(&fi.c) {
                    return Err(Error::hypothesis("c_i orthogonal for Q_i", format!("factor {}", i + 1)));
                }
                if !fi.c.pow(next).is_identity() {
                    return Err(Error::hypothesis(
                        "c_i of order dividing p_(i+1)^r_(i+1)",
                        format!("factor {}", i + 1),
                    ));
                }
            } else {
                if !fi.c.is_invertible_mod_prime(q.p) || !fi.c.pow(next).is_identity() {
                    return Err(Error::hypothesis("c_s of order dividing p_1^r_1", format!("factor {}", i + 1)));
                }
                if self.v.len() != q.n() {
                    return Err(Error::hypothesis("(Qj+1)", "v_s has the wrong length"));
                }
                let m = q.modulus();
                let v: Vec<u64> = self.v.iter().map(|x| x % m).collect();
                if let Some(x) = q.vectors().into_iter().find(|x| {
                    let vx = x.iter().zip(&v).fold(0, |acc, (a, b)| (acc + a * b) % m);
                    q.eval(&fi.c.apply(x)) != (q.eval(x) + vx) % m
                }) {
                    return Err(Error::hypothesis("(Qj+1)", format!("Q_s(c_s(x)) != Q_s(x) + v_s x^t at x = {x:?}")));
                }
            }
            if fi.f.mul(&fi.c) != fi.c.mul(&fi.f) {
                return Err(Error::hypothesis("f_i c_i = c_i f_i", format!("factor {}", i + 1)));
            }
        }
        Ok(())
    }

    /// `Π pᵢ^{rᵢ(nᵢ+1)}`.
    pub fn order(&self) -> u128 {
        self.factors.iter().fold(1u128, |acc, f| {
            (f.q.modulus() as u128)
                .checked_pow(f.q.n() as u32 + 1)
                .and_then(|x| acc.checked_mul(x))
                .unwrap_or(u128::MAX)
        })
    }

    pub fn predicted_simple(&self) -> bool {
        self.factors.iter().all(|fi| {
            let id = Matrix::identity(fi.q.n(), fi.q.modulus());
            fi.c.sub(&id).is_invertible_mod_prime(fi.q.p)
        })
    }
}

/// Builds `H₁ ⋈ … ⋈ H_s` from its lambda map, `B = T' ⋊∘ S'` with
/// `α'_μ = (f₁^{μ₁}c₁^{μ₂}, …, f_s^{μ_s}c_s^{μ₁})` and `b' = (−b₁, …, −b_s)`,
/// and `φ'(x⃗₁, μ₁, …) = (x⃗₁, …, x⃗_s, μ₁ − Q₁(x⃗₁), …)`, verified to be an
/// isomorphism.
pub fn build_matched_and_phi_prime(data: &MatchedData, limits: &Limits) -> Result<MatchedBraces, Error> {
    data.validate()?;
    limits.check_order(data.order())?;
    let fs = &data.factors;
    let s = fs.len();
    let mods: Vec<usize> = fs.iter().map(|f| f.q.modulus() as usize).collect();
    let ranks: Vec<usize> = fs.iter().map(|f| f.q.n()).collect();
    let vecs: Vec<Vec<Vec<u64>>> = (0..s).map(|i| all_vectors(mods[i], ranks[i])).collect();
    let sizes: Vec<usize> = vecs.iter().map(Vec::len).collect();
    let polars: Vec<Matrix> = fs.iter().map(|f| f.q.polar_matrix()).collect();
    let qvals: Vec<Vec<usize>> = (0..s).map(|i| vecs[i].iter().map(|x| fs[i].q.eval(x) as usize).collect()).collect();
    let f_pows: Vec<Vec<Matrix>> = (0..s).map(|i| (0..mods[i] as u64).map(|k| fs[i].f.pow(k)).collect()).collect();
    // cᵢ is raised to exponents modulo the next modulus.
    let c_pows: Vec<Vec<Matrix>> =
        (0..s).map(|i| (0..mods[(i + 1) % s] as u64).map(|k| fs[i].c.pow(k)).collect()).collect();
    // Σ_{k<e} c_sᵏ for e < p₁^{r₁}.
    let last = s - 1;
    let mut c_sums = vec![Matrix::zero(ranks[last], ranks[last], mods[last] as u64)];
    for e in 1..mods[0] {
        let next = c_sums[e - 1].add(&c_pows[last][e - 1]);
        c_sums.push(next);
    }
    let m_last = mods[last] as u64;
    let v: Vec<u64> = data.v.iter().map(|x| x % m_last).collect();
    let to_index = |i: usize, x: &[u64]| {
        encode_digits(&x.iter().map(|&d| d as usize).collect::<Vec<_>>(), &vec![mods[i]; ranks[i]])
    };

    // Matched product: factor i occupies the digits (x⃗ᵢ, μᵢ); factor
    // blocks are mixed radix with factor 1 least significant.
    let block_orders: Vec<usize> = (0..s).map(|i| sizes[i] * mods[i]).collect();
    let split = |mut a: usize| {
        let mut out = Vec::with_capacity(s);
        for &bo in &block_orders {
            out.push(a % bo);
            a /= bo;
        }
        out
    };
    let mut radices = Vec::new();
    for i in 0..s {
        radices.extend(core::iter::repeat_n(mods[i], ranks[i]));
        radices.push(mods[i]);
    }
    let spec = AbelianGroupSpec::new(radices)?;
    let lam = |a: usize, b: usize| {
        let (xa, ya) = (split(a), split(b));
        let exps: Vec<usize> = (0..s)
            .map(|i| {
                let (x, mu) = (xa[i] % sizes[i], xa[i] / sizes[i]);
                (mu + mods[i] - qvals[i][x]) % mods[i]
            })
            .collect();
        let mut out = 0;
        for i in (0..s).rev() {
            let x = &vecs[i][xa[i] % sizes[i]];
            let (y, mu2) = (&vecs[i][ya[i] % sizes[i]], ya[i] / sizes[i]);
            let g = f_pows[i][exps[i]].mul(&c_pows[i][exps[(i + 1) % s]]);
            let gy = g.apply(y);
            let mut mu_out = (mu2 + polars[i].bilinear(x, &gy) as usize) % mods[i];
            if i == last {
                let summed = c_sums[exps[0]].apply(y);
                let vy = summed.iter().zip(&v).fold(0, |acc, (a, b)| (acc + a * b) % m_last);
                mu_out = (mu_out + vy as usize) % mods[i];
            }
            out = out * block_orders[i] + to_index(i, &gy) + mu_out * sizes[i];
        }
        out
    };
    let matched = brace_from_lambda(&spec, lam, Meta::new(), limits)?;

    // T' ⋊∘ S'.
    let t_orders: Vec<usize> = (0..s).flat_map(|i| core::iter::repeat_n(mods[i], ranks[i])).collect();
    let t_spec = AbelianGroupSpec::new(t_orders)?;
    let s_spec = AbelianGroupSpec::new(mods.clone())?;
    let (nt, ns) = (t_spec.order(), s_spec.order());
    let split_t = |mut t: usize| {
        let mut out = Vec::with_capacity(s);
        for &sz in &sizes {
            out.push(t % sz);
            t /= sz;
        }
        out
    };
    let join_t = |parts: &[usize]| parts.iter().zip(&sizes).rev().fold(0, |acc, (&p, &sz)| acc * sz + p);
    let t_brace = trivial_brace(&t_spec, limits)?;
    let s_brace = trivial_brace(&s_spec, limits)?;
    let alpha = BraceAction::from_fn(ns, nt, |mu, t| {
        let mut mus = vec![0; s];
        decode_into(mu, &mods, &mut mus);
        let parts = split_t(t);
        let images: Vec<usize> = (0..s)
            .map(|i| {
                let g = f_pows[i][mus[i]].mul(&c_pows[i][mus[(i + 1) % s]]);
                to_index(i, &g.apply(&vecs[i][parts[i]]))
            })
            .collect();
        join_t(&images)
    })?;
    let b = SymmetricCocycle::from_fn(nt, ns, true, |x, y| {
        let (px, py) = (split_t(x), split_t(y));
        let values: Vec<usize> = (0..s)
            .map(|i| (mods[i] - polars[i].bilinear(&vecs[i][px[i]], &vecs[i][py[i]]) as usize) % mods[i])
            .collect();
        encode_digits(&values, &mods)
    })?;
    let product = asymmetric_product(&t_brace, &s_brace, &b, &alpha, limits)?;

    let phi_prime = BraceMap::from_fn(matched.order(), product.order(), |a| {
        let parts = split(a);
        let xs: Vec<usize> = (0..s).map(|i| parts[i] % sizes[i]).collect();
        let mus: Vec<usize> = (0..s)
            .map(|i| (parts[i] / sizes[i] + mods[i] - qvals[i][xs[i]]) % mods[i])
            .collect();
        join_t(&xs) * ns + encode_digits(&mus, &mods)
    })?;
    let report = verify_morphism(&matched, &product, &phi_prime)?;
    if !report.is_isomorphism() {
        return Err(Error::precondition(format!("phi' is not an isomorphism: {report:?}")));
    }

    let params = vec![
        ("p", format!("{:?}", fs.iter().map(|f| f.q.p).collect::<Vec<_>>())),
        ("r", format!("{:?}", fs.iter().map(|f| f.q.r).collect::<Vec<_>>())),
        ("n", format!("{ranks:?}")),
        ("Q", format!("{:?}", fs.iter().map(|f| f.q.coeffs.entries().to_vec()).collect::<Vec<_>>())),
        ("f", format!("{:?}", fs.iter().map(|f| f.f.entries().to_vec()).collect::<Vec<_>>())),
        ("c", format!("{:?}", fs.iter().map(|f| f.c.entries().to_vec()).collect::<Vec<_>>())),
        ("v", format!("{v:?}")),
    ];
    let matched = with_family(matched, "matched", &params);
    let product = with_family(product, "matched_asymmetric", &params);
    Ok(MatchedBraces { matched, product, phi_prime, predicted_simple: data.predicted_simple() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_simple;

    fn xy_form() -> QuadraticFormSpec {
        QuadraticFormSpec::new(2, 1, 2, vec![0, 1, 0, 0]).unwrap()
    }

    pub(crate) fn example_matched() -> MatchedData {
        let q1 = QuadraticFormSpec::new(3, 1, 1, vec![1]).unwrap();
        let f1 = Matrix::identity(1, 3);
        let c1 = Matrix::square(1, 3, vec![-1]).unwrap();
        let q2 = xy_form();
        let f2 = Matrix::identity(2, 2);
        let c2 = Matrix::square(2, 2, vec![0, 1, 1, 1]).unwrap();
        MatchedData {
            factors: vec![MatchedFactor { q: q1, f: f1, c: c1 }, MatchedFactor { q: q2, f: f2, c: c2 }],
            v: vec![0, 1],
        }
    }

    #[test]
    fn h_brace_order_8_and_phi() {
        let limits = Limits::default();
        let q = xy_form();
        let f = Matrix::identity(2, 2);
        let h = build_h(&q, &f, &limits).unwrap();
        assert_eq!(h.order(), 8);
        // λ_{a·b} = λ_a ∘ λ_b.
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    assert_eq!(h.lambda(h.mul(a, b), c), h.lambda(a, h.lambda(b, c)));
                }
            }
        }
        let (h_prime, phi) = build_h_prime_and_phi(&q, &f, &limits).unwrap();
        assert_eq!(h_prime.order(), 8);
        let mut broken = phi.clone();
        broken.swap_images(1, 2);
        assert!(!verify_morphism(&h, &h_prime, &broken).unwrap().is_isomorphism());
    }

    #[test]
    fn zero_form_gives_trivial_brace_and_identity_phi() {
        let limits = Limits::default();
        let q = QuadraticFormSpec::new(3, 1, 1, vec![0]).unwrap();
        let f = Matrix::identity(1, 3);
        let h = build_h(&q, &f, &limits).unwrap();
        assert!(h.is_trivial());
        let (_, phi) = build_h_prime_and_phi(&q, &f, &limits).unwrap();
        // φ(x, μ) = (x, μ): index x + 3μ ↦ 3x + μ.
        assert!((0..9).all(|a| phi.apply(a) == (a % 3) * 3 + a / 3));
    }

    #[test]
    fn non_orthogonal_f_is_rejected() {
        let q = xy_form();
        let reflection = Matrix::square(2, 2, vec![1, 1, 0, 1]).unwrap();
        assert!(matches!(build_h(&q, &reflection, &Limits::default()), Err(Error::Hypothesis { .. })));
    }

    #[test]
    fn matched_product_of_order_72() {
        let limits = Limits::default();
        let out = build_matched_and_phi_prime(&example_matched(), &limits).unwrap();
        assert_eq!(out.matched.order(), 72);
        assert_eq!(out.product.order(), 72);
        assert!(out.predicted_simple);
        assert!(is_simple(&out.matched));
        assert!(is_simple(&out.product));
    }

    #[test]
    fn wrong_v_violates_qj1() {
        let mut data = example_matched();
        data.v = vec![1, 0];
        assert!(matches!(data.validate(), Err(Error::Hypothesis { condition: "(Qj+1)", .. })));
    }

    #[test]
    fn single_factor_reduces_to_h() {
        let limits = Limits::default();
        let q = xy_form();
        let f = Matrix::identity(2, 2);
        let data = MatchedData {
            factors: vec![MatchedFactor { q: q.clone(), f: f.clone(), c: Matrix::identity(2, 2) }],
            v: vec![0, 0],
        };
        let out = build_matched_and_phi_prime(&data, &limits).unwrap();
        let h = build_h(&q, &f, &limits).unwrap();
        assert_eq!(out.matched.add_table(), h.add_table());
        assert_eq!(out.matched.mul_table(), h.mul_table());
        let (h_prime, _) = build_h_prime_and_phi(&q, &f, &limits).unwrap();
        assert_eq!(out.product.mul_table(), h_prime.mul_table());
    }
}

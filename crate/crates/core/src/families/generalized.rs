//! The braces `B = T ⋊∘ ℤ/(p)` with `T = (ℤ/p)ⁿ ⋊ A`,
//! `A = ℤ/(l₁) × … × ℤ/(l_s)`, built from explicit block data, and the
//! cyclotomic recipe that produces such data.
//!
//! Encodings: `u = (u₁, …, u_s) ∈ (ℤ/p)ⁿ` and `a ∈ A` are mixed radix with
//! the first coordinate least significant; `t = (u, a)` has index
//! `u·|A| + a`, and `(t, μ) ∈ B` has index `t·p + μ`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::AbelianGroupSpec;
use crate::analysis::is_ideal;
use crate::brace::{trivial_brace, FiniteBrace};
use crate::error::Error;
use crate::limits::Limits;
use crate::modular::{gcd, is_prime, multiplicative_order, prime_factors, Matrix};
use crate::products::{asymmetric_product, semidirect_product, BraceAction, SymmetricCocycle};
use crate::subset::Subset;

use super::{decode_into, encode_digits, with_family};

/// One block `(lᵢ, bᵢ, cᵢ, fᵢ, γᵢ)`; the matrices are `nᵢ × nᵢ` over
/// `ℤ/(p)` and act on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedBlock {
    pub l: u64,
    pub b: Matrix,
    pub c: Matrix,
    pub f: Matrix,
    pub gamma: u64,
}

impl GeneralizedBlock {
    pub fn rank(&self) -> usize {
        self.b.rows()
    }
}

/// Input of [`build_generalized`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedData {
    pub p: u64,
    pub blocks: Vec<GeneralizedBlock>,
}

/// Output of [`build_generalized`].
#[derive(Debug, Clone)]
pub struct GeneralizedBrace {
    pub brace: FiniteBrace,
    /// `im(cᵢ − id) + im(fᵢ − id) = (ℤ/p)^{nᵢ}` for every block.
    pub predicted_simple: bool,
    /// `I' = {(w, a, μ) | wᵢ ∈ im(cᵢ − id) + im(fᵢ − id)}`, verified to be an ideal.
    pub ideal: Subset,
}

fn is_orthogonal(m: &Matrix, b: &Matrix) -> bool {
    m.transpose().mul(b).mul(m) == *b
}

impl GeneralizedData {
    /// Checks every hypothesis, failing on the first violated one.
    pub fn validate(&self) -> Result<(), Error> {
        let p = self.p;
        if !is_prime(p) {
            return Err(Error::hypothesis("p prime", format!("{p} is not prime")));
        }
        if self.blocks.is_empty() {
            return Err(Error::hypothesis("s >= 1", "no blocks given"));
        }
        for (i, blk) in self.blocks.iter().enumerate() {
            if blk.l < 2 {
                return Err(Error::hypothesis("l_i > 1", format!("l_{} = {}", i + 1, blk.l)));
            }
            for q in prime_factors(blk.l) {
                if q == p || (q - 1) % p != 0 {
                    return Err(Error::hypothesis(
                        "p | q - 1 for every prime q dividing |A|",
                        format!("q = {q} divides l_{} = {}", i + 1, blk.l),
                    ));
                }
            }
            let n = blk.rank();
            for (name, m) in [("b_i", &blk.b), ("c_i", &blk.c), ("f_i", &blk.f)] {
                if m.rows() != n || m.cols() != n || m.modulus() != p {
                    return Err(Error::hypothesis(
                        "matrices n_i x n_i over Z/(p)",
                        format!("{name} of block {} has the wrong shape or modulus", i + 1),
                    ));
                }
            }
            if n == 0 {
                return Err(Error::hypothesis("n_i >= 1", format!("block {} is empty", i + 1)));
            }
            if blk.b.transpose() != blk.b || blk.b.det_mod(p) == 0 {
                return Err(Error::hypothesis("b_i non-degenerate symmetric", format!("block {}", i + 1)));
            }
            if !is_orthogonal(&blk.c, &blk.b) || blk.c.order(blk.l) != Some(blk.l) {
                return Err(Error::hypothesis("c_i orthogonal of order l_i", format!("block {}", i + 1)));
            }
            if !is_orthogonal(&blk.f, &blk.b) || blk.f.order(p) != Some(p) {
                return Err(Error::hypothesis("f_i orthogonal of order p", format!("block {}", i + 1)));
            }
            if gcd(blk.gamma, blk.l) != 1 || multiplicative_order(blk.gamma % blk.l, blk.l) != Some(p) {
                return Err(Error::hypothesis(
                    "gamma_i unit of order p",
                    format!("gamma_{} = {} modulo {}", i + 1, blk.gamma, blk.l),
                ));
            }
            if gcd((blk.gamma + blk.l - 1) % blk.l, blk.l) != 1 {
                return Err(Error::hypothesis(
                    "gamma_i - 1 invertible",
                    format!("gamma_{} - 1 = {} is not a unit modulo {}", i + 1, blk.gamma - 1, blk.l),
                ));
            }
            if blk.f.mul(&blk.c) != blk.c.pow(blk.gamma).mul(&blk.f) {
                return Err(Error::hypothesis("f_i c_i = c_i^gamma_i f_i", format!("block {}", i + 1)));
            }
        }
        Ok(())
    }

    /// `p^{Σnᵢ}·Πlᵢ·p`.
    pub fn order(&self) -> u128 {
        let n: usize = self.blocks.iter().map(GeneralizedBlock::rank).sum();
        let a: u128 = self.blocks.iter().map(|b| b.l as u128).product();
        (self.p as u128).checked_pow(n as u32 + 1).and_then(|x| x.checked_mul(a)).unwrap_or(u128::MAX)
    }

    /// The simplicity criterion: `[cᵢ − id | fᵢ − id]` has full rank for every block.
    pub fn predicted_simple(&self) -> bool {
        self.blocks.iter().all(|blk| {
            let id = Matrix::identity(blk.rank(), self.p);
            blk.c.sub(&id).hconcat(&blk.f.sub(&id)).rank_mod(self.p) == blk.rank()
        })
    }
}

/// `T ⋊∘ ℤ/(p)` from validated data; also returns the predicted simplicity
/// and the ideal `I'`.
pub fn build_generalized(data: &GeneralizedData, limits: &Limits) -> Result<GeneralizedBrace, Error> {
    data.validate()?;
    limits.check_order(data.order())?;
    let p = data.p as usize;
    let blocks = &data.blocks;
    let ranks: Vec<usize> = blocks.iter().map(GeneralizedBlock::rank).collect();
    let n: usize = ranks.iter().sum();
    let offsets: Vec<usize> = ranks.iter().scan(0, |acc, &r| Some(core::mem::replace(acc, *acc + r))).collect();
    let ls: Vec<usize> = blocks.iter().map(|b| b.l as usize).collect();

    let u_spec = AbelianGroupSpec::power(p, n)?;
    let a_spec = AbelianGroupSpec::new(ls.clone())?;
    let (nu, na) = (u_spec.order(), a_spec.order());
    let u_radices = vec![p; n];

    // Powers cᵢᵏ (k < lᵢ) and fᵢ^μ (μ < p).
    let c_pows: Vec<Vec<Matrix>> = blocks.iter().map(|b| (0..b.l).map(|k| b.c.pow(k)).collect()).collect();
    let f_pows: Vec<Vec<Matrix>> = blocks.iter().map(|b| (0..data.p).map(|k| b.f.pow(k)).collect()).collect();
    let u_vec = |u: usize| {
        let mut d = vec![0; n];
        decode_into(u, &u_radices, &mut d);
        d.into_iter().map(|x| x as u64).collect::<Vec<u64>>()
    };
    let a_vec = |a: usize| {
        let mut d = vec![0; ls.len()];
        decode_into(a, &ls, &mut d);
        d
    };
    // Apply blockwise matrices to u.
    let apply_blocks = |u: usize, pick: &dyn Fn(usize, &[u64]) -> Vec<u64>| {
        let v = u_vec(u);
        let mut out = vec![0usize; n];
        for (i, &off) in offsets.iter().enumerate() {
            let image = pick(i, &v[off..off + ranks[i]]);
            for (j, x) in image.into_iter().enumerate() {
                out[off + j] = x as usize;
            }
        }
        encode_digits(&out, &u_radices)
    };

    let u_brace = trivial_brace(&u_spec, limits)?;
    let a_brace = trivial_brace(&a_spec, limits)?;
    let beta = BraceAction::from_fn(na, nu, |a, u| {
        let av = a_vec(a);
        apply_blocks(u, &|i, v| c_pows[i][av[i]].apply(v))
    })?;
    let t = semidirect_product(&u_brace, &a_brace, &beta, limits)?;

    let alpha = BraceAction::from_fn(p, nu * na, |mu, x| {
        let (u, a) = (x / na, x % na);
        let u2 = apply_blocks(u, &|i, v| f_pows[i][mu].apply(v));
        let av = a_vec(a);
        let a2: Vec<usize> = av
            .iter()
            .zip(blocks)
            .map(|(&ai, b)| {
                let g = (0..mu).fold(1u64, |acc, _| acc * b.gamma % b.l);
                (ai as u64 * g % b.l) as usize
            })
            .collect();
        u2 * na + encode_digits(&a2, &ls)
    })?;

    let u_vectors: Vec<Vec<u64>> = (0..nu).map(u_vec).collect();
    let form = |x: usize, y: usize| {
        let (ux, uy) = (&u_vectors[x / na], &u_vectors[y / na]);
        offsets
            .iter()
            .enumerate()
            .map(|(i, &off)| blocks[i].b.bilinear(&ux[off..off + ranks[i]], &uy[off..off + ranks[i]]) as usize)
            .sum::<usize>()
            % p
    };
    let b = SymmetricCocycle::from_fn(nu * na, p, true, form)?;
    let s = trivial_brace(&AbelianGroupSpec::new(vec![p])?, limits)?;
    let brace = asymmetric_product(&t, &s, &b, &alpha, limits)?;

    // I' and the prediction.
    let spans: Vec<Matrix> = blocks
        .iter()
        .map(|blk| {
            let id = Matrix::identity(blk.rank(), data.p);
            blk.c.sub(&id).hconcat(&blk.f.sub(&id))
        })
        .collect();
    let u_in_span: Vec<bool> = u_vectors
        .iter()
        .map(|v| {
            offsets
                .iter()
                .enumerate()
                .all(|(i, &off)| spans[i].column_space_contains(&v[off..off + ranks[i]], data.p))
        })
        .collect();
    let ideal = Subset::from_elements(brace.order(), (0..brace.order()).filter(|&x| u_in_span[x / p / na]));
    if !is_ideal(&brace, &ideal) {
        return Err(Error::hypothesis("I' ideal", "the subset I' is not an ideal"));
    }
    let predicted_simple = data.predicted_simple();
    debug_assert_eq!(predicted_simple, ideal.is_full());

    let gammas: Vec<u64> = blocks.iter().map(|b| b.gamma).collect();
    let brace = with_family(
        brace,
        "generalized",
        &[
            ("p", format!("{}", data.p)),
            ("l", format!("{ls:?}")),
            ("n", format!("{ranks:?}")),
            ("gamma", format!("{gammas:?}")),
            ("predicted_simple", format!("{predicted_simple}")),
        ],
    );
    Ok(GeneralizedBrace { brace, predicted_simple, ideal })
}

/// Smallest unit `γ` of `ℤ/(l)` of multiplicative order `p` with `γ − 1` a unit.
fn cyclotomic_gamma(p: u64, l: u64) -> Option<u64> {
    (2..l).find(|&g| gcd(g, l) == 1 && gcd(g - 1, l) == 1 && multiplicative_order(g, l) == Some(p))
}

/// Data of the cyclotomic recipe: `Rᵢ = 𝔽_p[x]/(x^{lᵢ−1} + … + 1)` with basis
/// `1, ξ, …, ξ^{lᵢ−2}`, `cᵢ` = multiplication by `ξ`, `fᵢ: ξᵏ ↦ ξ^{kγᵢ}`,
/// and `bᵢ(ξʲ, ξᵏ) = 1 − δⱼₖ`.
pub fn concrete_data(p: u64, l: &[u64]) -> Result<GeneralizedData, Error> {
    if !is_prime(p) {
        return Err(Error::hypothesis("p prime", format!("{p} is not prime")));
    }
    if l.is_empty() {
        return Err(Error::hypothesis("s >= 1", "no moduli given"));
    }
    let mut blocks = Vec::with_capacity(l.len());
    for &li in l {
        if li < 2 {
            return Err(Error::hypothesis("l_i > 1", format!("l_i = {li}")));
        }
        if let Some(q) = prime_factors(li).into_iter().find(|&q| q == p || (q - 1) % p != 0) {
            return Err(Error::hypothesis("p | q - 1 for every prime q dividing l_i", format!("q = {q}, l_i = {li}")));
        }
        let gamma = cyclotomic_gamma(p, li)
            .ok_or_else(|| Error::hypothesis("gamma_i unit of order p", format!("none modulo {li}")))?;
        let n = (li - 1) as usize;
        let neg = |k: usize| -> Vec<i64> {
            // Coordinates of ξᵏ for 0 ≤ k < l: ξ^{l−1} = −(1 + ξ + … + ξ^{l−2}).
            if k == n {
                vec![-1; n]
            } else {
                let mut v = vec![0; n];
                v[k] = 1;
                v
            }
        };
        let from_columns = |columns: Vec<Vec<i64>>| {
            let mut data = vec![0i64; n * n];
            for (j, col) in columns.iter().enumerate() {
                for (i, &x) in col.iter().enumerate() {
                    data[i * n + j] = x;
                }
            }
            Matrix::square(n, p, data)
        };
        let c = from_columns((0..n).map(|k| neg(k + 1)).collect())?;
        let f = from_columns((0..n).map(|k| neg((k as u64 * gamma % li) as usize)).collect())?;
        let b = Matrix::square(n, p, (0..n * n).map(|x| i64::from(x / n != x % n)).collect())?;
        let id = Matrix::identity(n, p);
        if !c.sub(&id).is_invertible_mod_prime(p) {
            return Err(Error::hypothesis("c_i - id invertible", format!("l_i = {li}")));
        }
        blocks.push(GeneralizedBlock { l: li, b, c, f, gamma });
    }
    let data = GeneralizedData { p, blocks };
    data.validate()?;
    Ok(data)
}

/// The cyclotomic instance of [`build_generalized`]; always simple.
pub fn build_concrete(p: u64, l: &[u64], limits: &Limits) -> Result<FiniteBrace, Error> {
    let data = concrete_data(p, l)?;
    limits.check_order(data.order())?;
    let built = build_generalized(&data, limits)?;
    let mut meta = built.brace.meta().clone();
    meta.insert("family".into(), String::from("concrete"));
    Ok(built.brace.with_meta(meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{ideal_closure, is_simple};

    #[test]
    fn concrete_p2_l3() {
        let data = concrete_data(2, &[3]).unwrap();
        assert_eq!(data.blocks[0].gamma, 2);
        let g = build_generalized(&data, &Limits::default()).unwrap();
        assert_eq!(g.brace.order(), 24);
        assert!(g.predicted_simple);
        assert!(is_simple(&g.brace));
        assert!(g.ideal.is_full());
    }

    #[test]
    fn block_diagonal_is_not_simple() {
        let p = 2;
        let base = concrete_data(2, &[3]).unwrap().blocks.remove(0);
        let id2 = Matrix::identity(2, p);
        let hyperbolic = Matrix::square(2, p, vec![0, 1, 1, 0]).unwrap();
        let blk = GeneralizedBlock {
            l: 3,
            b: base.b.direct_sum(&hyperbolic),
            c: base.c.direct_sum(&id2),
            f: base.f.direct_sum(&id2),
            gamma: 2,
        };
        let data = GeneralizedData { p, blocks: vec![blk] };
        let g = build_generalized(&data, &Limits::default()).unwrap();
        assert_eq!(g.brace.order(), 96);
        assert!(!g.predicted_simple);
        assert!(!is_simple(&g.brace));
        assert!(!g.ideal.is_full() && !g.ideal.is_zero());
        // The closure of any element of I' stays inside I'.
        let x = g.ideal.iter().find(|&x| x != 0).unwrap();
        assert!(ideal_closure(&g.brace, &Subset::from_elements(96, [x])).is_subset(&g.ideal));
    }

    #[test]
    fn hypotheses_are_named() {
        let mut data = concrete_data(2, &[3]).unwrap();
        data.blocks[0].gamma = 1;
        assert!(matches!(data.validate(), Err(Error::Hypothesis { condition: "gamma_i unit of order p", .. })));
        assert!(matches!(concrete_data(3, &[5]), Err(Error::Hypothesis { .. })));
        assert!(matches!(build_concrete(3, &[7], &Limits::default()), Err(Error::SizeGuard { requested: 15309, .. })));
    }

    #[test]
    fn gamma_minus_one_must_be_a_unit() {
        // Modulo 15 the element 4 has order 2 but 4 − 1 = 3 is not a unit.
        let mut data = concrete_data(2, &[15]).unwrap();
        assert_eq!(data.blocks[0].gamma, 14);
        data.blocks[0].gamma = 4;
        assert!(matches!(data.validate(), Err(Error::Hypothesis { condition: "gamma_i - 1 invertible", .. })));
    }
}

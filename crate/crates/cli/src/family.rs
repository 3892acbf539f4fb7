//! Family parameter records, `{"family": "<name>", …}`, and their builders.
//!
//! Matrices are row-major integer lists whose length is a perfect square;
//! entries are reduced modulo the relevant modulus.

use brace_core::brace::trivial_brace;
use brace_core::families::{
    build_b3, build_concrete, build_generalized, build_h, build_h_prime_and_phi, build_matched_and_phi_prime,
    build_perfect_not_simple, build_wreath_simple, GeneralizedBlock, GeneralizedData, MatchedData, MatchedFactor,
    QuadraticFormSpec,
};
use brace_core::modular::Matrix;
use brace_core::products::wreath_product;
use brace_core::{AbelianGroupSpec, FiniteBrace, Limits};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockParams {
    pub l: u64,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    pub f: Vec<i64>,
    pub gamma: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormParams {
    pub p: u64,
    #[serde(default = "one")]
    pub r: u32,
    /// Upper-triangular coefficients of `Q`.
    pub q: Vec<i64>,
    /// Defaults to the identity.
    #[serde(default)]
    pub f: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorParams {
    #[serde(flatten)]
    pub form: FormParams,
    pub c: Vec<i64>,
}

fn one() -> u32 {
    1
}

/// Which brace of an isomorphic pair to output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Presentation {
    /// The brace built from its lambda map (`H`, or the matched product).
    #[default]
    Lambda,
    /// The asymmetric product (`H'`, or `T' ⋊∘ S'`).
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    Trivial { orders: Vec<usize> },
    B3,
    PerfectNotSimple { p1: u64, p2: u64 },
    Wreath { base: Vec<usize>, top: Vec<usize> },
    WreathSimple { p1: u64, p2: u64 },
    Generalized { p: u64, blocks: Vec<BlockParams> },
    Concrete { p: u64, l: Vec<u64> },
    HBrace {
        #[serde(flatten)]
        form: FormParams,
        #[serde(default)]
        presentation: Presentation,
    },
    Matched {
        factors: Vec<FactorParams>,
        v: Vec<i64>,
        #[serde(default)]
        presentation: Presentation,
    },
}

fn side(len: usize, what: &str) -> CliResult<usize> {
    let n = (len as f64).sqrt().round() as usize;
    if n == 0 || n * n != len {
        return Err(CliError::Usage(format!("{what}: {len} entries is not a nonzero square")));
    }
    Ok(n)
}

fn matrix(data: &[i64], modulus: u64, what: &str) -> CliResult<Matrix> {
    Ok(Matrix::square(side(data.len(), what)?, modulus, data.to_vec())?)
}

fn form(params: &FormParams) -> CliResult<(QuadraticFormSpec, Matrix)> {
    let n = side(params.q.len(), "q")?;
    let q = QuadraticFormSpec::new(params.p, params.r, n, params.q.clone())?;
    let f = match &params.f {
        Some(f) => matrix(f, q.modulus(), "f")?,
        None => Matrix::identity(n, q.modulus()),
    };
    Ok((q, f))
}

fn trivial(orders: &[usize], limits: &Limits) -> CliResult<FiniteBrace> {
    Ok(trivial_brace(&AbelianGroupSpec::new(orders.to_vec())?, limits)?)
}

impl FamilyParams {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyParams::Trivial { .. } => "trivial",
            FamilyParams::B3 => "b3",
            FamilyParams::PerfectNotSimple { .. } => "perfect_not_simple",
            FamilyParams::Wreath { .. } => "wreath",
            FamilyParams::WreathSimple { .. } => "wreath_simple",
            FamilyParams::Generalized { .. } => "generalized",
            FamilyParams::Concrete { .. } => "concrete",
            FamilyParams::HBrace { .. } => "h_brace",
            FamilyParams::Matched { .. } => "matched",
        }
    }

    pub fn build(&self, limits: &Limits) -> CliResult<FiniteBrace> {
        Ok(match self {
            FamilyParams::Trivial { orders } => {
                let mut b = trivial(orders, limits)?;
                b.set_meta("family", "trivial");
                b.set_meta("orders", format!("{orders:?}"));
                b
            }
            FamilyParams::B3 => build_b3(limits)?,
            FamilyParams::PerfectNotSimple { p1, p2 } => {
                build_perfect_not_simple(&build_wreath_simple(*p1, *p2, limits)?, limits)?
            }
            FamilyParams::Wreath { base, top } => {
                let mut b = wreath_product(&trivial(base, limits)?, &trivial(top, limits)?, limits)?;
                b.set_meta("base", format!("{base:?}"));
                b.set_meta("top", format!("{top:?}"));
                b
            }
            FamilyParams::WreathSimple { p1, p2 } => build_wreath_simple(*p1, *p2, limits)?,
            FamilyParams::Generalized { p, blocks } => {
                let blocks = blocks
                    .iter()
                    .map(|blk| {
                        Ok(GeneralizedBlock {
                            l: blk.l,
                            b: matrix(&blk.b, *p, "b")?,
                            c: matrix(&blk.c, *p, "c")?,
                            f: matrix(&blk.f, *p, "f")?,
                            gamma: blk.gamma,
                        })
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                build_generalized(&GeneralizedData { p: *p, blocks }, limits)?.brace
            }
            FamilyParams::Concrete { p, l } => build_concrete(*p, l, limits)?,
            FamilyParams::HBrace { form: params, presentation } => {
                let (q, f) = form(params)?;
                match presentation {
                    Presentation::Lambda => build_h(&q, &f, limits)?,
                    Presentation::Product => build_h_prime_and_phi(&q, &f, limits)?.0,
                }
            }
            FamilyParams::Matched { factors, v, presentation } => {
                let factors = factors
                    .iter()
                    .map(|fp| {
                        let (q, f) = form(&fp.form)?;
                        let c = matrix(&fp.c, q.modulus(), "c")?;
                        Ok(MatchedFactor { q, f, c })
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                let modulus = factors.last().map_or(1, |f| f.q.modulus()) as i64;
                let v = v.iter().map(|x| x.rem_euclid(modulus) as u64).collect();
                let out = build_matched_and_phi_prime(&MatchedData { factors, v }, limits)?;
                match presentation {
                    Presentation::Lambda => out.matched,
                    Presentation::Product => out.product,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        let cases = [
            r#"{"family":"trivial","orders":[2,2]}"#,
            r#"{"family":"b3"}"#,
            r#"{"family":"perfect_not_simple","p1":3,"p2":2}"#,
            r#"{"family":"wreath","base":[2],"top":[3]}"#,
            r#"{"family":"wreath_simple","p1":3,"p2":2}"#,
            r#"{"family":"generalized","p":2,"blocks":[{"l":3,"b":[0,1,1,0],"c":[0,1,1,1],"f":[0,1,1,0],"gamma":2}]}"#,
            r#"{"family":"concrete","p":2,"l":[3]}"#,
            r#"{"family":"h_brace","p":2,"q":[0,1,0,0]}"#,
            r#"{"family":"h_brace","p":2,"q":[0,1,0,0],"presentation":"product"}"#,
            r#"{"family":"matched","factors":[{"p":3,"q":[1],"c":[-1]},{"p":2,"q":[0,1,0,0],"c":[0,1,1,1]}],"v":[0,1]}"#,
        ];
        let orders = [4, 12, 72, 24, 24, 24, 24, 8, 8, 72];
        for (text, order) in cases.iter().zip(orders) {
            let params: FamilyParams = serde_json::from_str(text).unwrap();
            assert_eq!(params.build(&Limits::default()).unwrap().order(), order, "{text}");
        }
    }

    #[test]
    fn rejects_non_square_matrices() {
        let params: FamilyParams = serde_json::from_str(r#"{"family":"h_brace","p":2,"q":[0,1,0]}"#).unwrap();
        assert!(matches!(params.build(&Limits::default()), Err(CliError::Usage(_))));
    }
}

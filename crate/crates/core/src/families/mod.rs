//! Builders for the named brace families.
//!
//! * [`build_b3`] and [`build_perfect_not_simple`]: the order-12 brace
//!   `K ⋊ ℤ/3` and the perfect non-simple `ℤ/3 ⋊ B`.
//! * [`build_wreath_simple`]: the simple brace `Ḡ₂ ⋊∘ A` from the iterated
//!   wreath construction, materialized for two primes.
//! * [`build_generalized`] and [`build_concrete`]: `T ⋊∘ ℤ/(p)` with
//!   `T = (ℤ/p)ⁿ ⋊ A`, from explicit data or from the cyclotomic recipe.
//! * [`build_h`], [`build_h_prime_and_phi`] and
//!   [`build_matched_and_phi_prime`]: braces from quadratic forms, their
//!   asymmetric-product presentations and the isomorphisms between them.
//!
//! Every hypothesis failure is reported as [`Error::Hypothesis`](crate::Error::Hypothesis)
//! naming the violated condition.

mod b3;
mod generalized;
mod quadratic;
mod wreath;

pub use b3::{b3_action, build_b3, build_perfect_not_simple};
pub use generalized::{build_concrete, build_generalized, concrete_data, GeneralizedBlock, GeneralizedBrace, GeneralizedData};
pub use quadratic::{
    build_h, build_h_prime_and_phi, build_matched_and_phi_prime, MatchedBraces, MatchedData, MatchedFactor,
    QuadraticFormSpec,
};
pub use wreath::{build_wreath_simple, constants_ideal, wreath_gamma};

use alloc::string::String;

use crate::brace::{FiniteBrace, Meta};

/// Replaces the provenance record of a built brace.
pub(crate) fn with_family(b: FiniteBrace, family: &str, params: &[(&str, String)]) -> FiniteBrace {
    let mut meta = Meta::new();
    meta.insert("family".into(), family.into());
    for (k, v) in params {
        meta.insert((*k).into(), v.clone());
    }
    b.with_meta(meta)
}

/// Mixed-radix decoding of `index` into `digits.len()` coordinates, the
/// first coordinate least significant.
pub(crate) fn decode_into(mut index: usize, radices: &[usize], digits: &mut [usize]) {
    for (d, &m) in digits.iter_mut().zip(radices) {
        *d = index % m;
        index /= m;
    }
}

/// Inverse of [`decode_into`].
pub(crate) fn encode_digits(digits: &[usize], radices: &[usize]) -> usize {
    digits.iter().zip(radices).rev().fold(0, |acc, (&d, &m)| acc * m + d)
}

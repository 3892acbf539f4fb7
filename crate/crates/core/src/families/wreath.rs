//! The simple brace `Ḡ₂ ⋊∘ A` of the iterated wreath construction for two
//! primes `p₁, p₂` with `p₂ | p₁ − 1`.
//!
//! * `G₁ = 𝔽_{p₁}`, `G₂ = 𝔽_{p₂} ≀ G₁ = H₂ ⋊ G₁` with `H₂ = {h: G₁ → 𝔽_{p₂}}`.
//! * `N₂ = {(h, 0) | h constant}` is central and contained in the socle;
//!   `Ḡ₂ = G₂/N₂`.
//! * `γ ∈ 𝔽_{p₁}^*` is the smallest unit of order `p₂`; `α₁(i)(z) = γⁱz`
//!   induces `α₂(i)` on `G₂` and `α'₂(i)` on `Ḡ₂`.
//! * `b₂(h, h') = ε(h)ε(h') − ε(h•h')` with `ε` the sum of values; it
//!   vanishes on constants and induces the non-degenerate `b'₂` on `H₂/I₂`.
//! * The result is `Ḡ₂ ⋊∘ A` with `A = 𝔽_{p₂}` trivial, via `b` and `α'₂`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::AbelianGroupSpec;
use crate::analysis::{is_ideal, quotient};
use crate::brace::{trivial_brace, FiniteBrace};
use crate::error::Error;
use crate::limits::Limits;
use crate::modular::{is_prime, multiplicative_order};
use crate::morphism::BraceMap;
use crate::products::{
    asymmetric_product, decode_function, encode_function, induced_wreath_map, wreath_product, BraceAction,
    SymmetricCocycle,
};
use crate::subset::Subset;

use super::with_family;

/// Smallest `γ ∈ 𝔽_{p₁}^*` of multiplicative order `p₂`.
pub fn wreath_gamma(p1: u64, p2: u64) -> Option<u64> {
    (2..p1).find(|&g| multiplicative_order(g, p1) == Some(p2))
}

/// `N = {(h, 0) | h constant}` inside `G₂ ≀ G₁`, in the encoding of
/// [`wreath_product`].
pub fn constants_ideal(g2_order: usize, g1_order: usize) -> Subset {
    Subset::from_elements(
        g2_order.pow(g1_order as u32) * g1_order,
        (0..g2_order).map(|c| encode_function(&vec![c; g1_order], g2_order) * g1_order),
    )
}

/// `Ḡ₂ ⋊∘ 𝔽_{p₂}` for primes with `p₂ | p₁ − 1`; order `p₁·p₂^{p₁}`.
///
/// The element `(ḡ, a)` has index `ḡ·p₂ + a`, where `ḡ` numbers the
/// classes of `G₂/N₂` by their smallest member.
pub fn build_wreath_simple(p1: u64, p2: u64, limits: &Limits) -> Result<FiniteBrace, Error> {
    if !is_prime(p1) || !is_prime(p2) || p1 == p2 {
        return Err(Error::hypothesis("p1, p2 distinct primes", format!("got p1 = {p1}, p2 = {p2}")));
    }
    if !(p1 - 1).is_multiple_of(p2) {
        return Err(Error::hypothesis("p2 | p1 - 1", format!("{p2} does not divide {}", p1 - 1)));
    }
    let total = (p2 as u128).checked_pow(p1 as u32).map(|h| h * p1 as u128).unwrap_or(u128::MAX);
    limits.check_order(total)?;
    let (n1, n2) = (p1 as usize, p2 as usize);

    let g1 = trivial_brace(&AbelianGroupSpec::new(vec![n1])?, limits)?;
    let f = trivial_brace(&AbelianGroupSpec::new(vec![n2])?, limits)?;
    let g2 = wreath_product(&f, &g1, limits)?;

    // N₂ is central in (G₂, ·) and an ideal.
    let n = constants_ideal(n2, n1);
    if !n.iter().all(|x| (0..g2.order()).all(|y| g2.mul(x, y) == g2.mul(y, x))) {
        return Err(Error::hypothesis("N_2 central", "a constant function is not central"));
    }
    if !is_ideal(&g2, &n) {
        return Err(Error::hypothesis("N_2 ideal", "the constants do not form an ideal"));
    }
    let gbar = quotient(&g2, &n, limits)?;

    let gamma = wreath_gamma(p1, p2)
        .ok_or_else(|| Error::hypothesis("gamma of order p2", format!("no unit of order {p2} modulo {p1}")))?;

    // α'₂(i) on Ḡ₂, pushed down from the induced automorphism α₂(i) of G₂.
    let mut alpha_rows = Vec::with_capacity(n2);
    for i in 0..n2 {
        let factor = (0..i).fold(1u64, |acc, _| acc * gamma % p1) as usize;
        let alpha1 = BraceMap::from_fn(n1, n1, |z| z * factor % n1)?;
        let alpha2 = induced_wreath_map(n2, n1, &alpha1);
        let row: Vec<u16> = gbar
            .representatives
            .iter()
            .map(|&x| gbar.projection.apply(alpha2.apply(x)) as u16)
            .collect();
        alpha_rows.push(row);
    }
    let alpha = BraceAction::new(n2, gbar.brace.order(), alpha_rows)?;

    // b₂ on H₂, checked to vanish on the constants and to induce a
    // non-degenerate form on H₂/I₂.
    let h_count = n2.pow(n1 as u32);
    let values: Vec<Vec<usize>> = (0..h_count).map(|h| decode_function(h, n2, n1)).collect();
    let eps = |h: &[usize]| h.iter().sum::<usize>() % n2;
    let b2 = |h: &[usize], k: &[usize]| {
        let pointwise: usize = h.iter().zip(k).map(|(a, c)| a * c).sum::<usize>() % n2;
        (eps(h) * eps(k) + n2 - pointwise) % n2
    };
    let one = vec![1usize; n1];
    if let Some(h) = values.iter().position(|h| b2(&one, h) != 0) {
        return Err(Error::hypothesis("b_2(1, .) = 0", format!("b_2(1, h) != 0 for function {h}")));
    }
    let is_constant = |h: &[usize]| h.iter().all(|&v| v == h[0]);
    if let Some(h) = values.iter().position(|h| !is_constant(h) && values.iter().all(|k| b2(h, k) == 0)) {
        return Err(Error::hypothesis("b'_2 non-degenerate", format!("function {h} is orthogonal to everything")));
    }
    let reps = &gbar.representatives;
    let function_of = |class: usize| &values[reps[class] / n1];
    let m = gbar.brace.order();
    let b = SymmetricCocycle::from_fn(m, n2, true, |x, y| b2(function_of(x), function_of(y)))?;

    let a = trivial_brace(&AbelianGroupSpec::new(vec![n2])?, limits)?;
    let product = asymmetric_product(&gbar.brace, &a, &b, &alpha, limits)?;
    Ok(with_family(
        product,
        "wreath_simple",
        &[
            ("p1", format!("{p1}")),
            ("p2", format!("{p2}")),
            ("n", alloc::string::String::from("2")),
            ("gamma", format!("{gamma}")),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{derived_length_mult, is_perfect, is_simple, socle};

    #[test]
    fn order_24_instance() {
        let b = build_wreath_simple(3, 2, &Limits::default()).unwrap();
        assert_eq!(b.order(), 24);
        assert!(is_simple(&b));
        assert!(is_perfect(&b));
        assert_eq!(socle(&b).len(), 1);
        assert_eq!(derived_length_mult(&b), Some(3));
        assert_eq!(b.meta()["gamma"], "2");
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            build_wreath_simple(2, 3, &Limits::default()),
            Err(Error::Hypothesis { condition: "p2 | p1 - 1", .. })
        ));
        assert!(matches!(build_wreath_simple(4, 3, &Limits::default()), Err(Error::Hypothesis { .. })));
        assert!(matches!(build_wreath_simple(13, 3, &Limits::default()), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn quotient_by_constants_has_order_12() {
        let limits = Limits::default();
        let f2 = trivial_brace(&AbelianGroupSpec::new(vec![2]).unwrap(), &limits).unwrap();
        let z3 = trivial_brace(&AbelianGroupSpec::new(vec![3]).unwrap(), &limits).unwrap();
        let g2 = wreath_product(&f2, &z3, &limits).unwrap();
        let q = quotient(&g2, &constants_ideal(2, 3), &limits).unwrap();
        assert_eq!(q.brace.order(), 12);
    }
}

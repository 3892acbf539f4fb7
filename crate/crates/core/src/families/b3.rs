//! The order-12 brace `B₃ = K ⋊ ℤ/3` and the perfect brace `ℤ/3 ⋊ B`.

use alloc::format;
use alloc::vec;

use crate::abelian::AbelianGroupSpec;
use crate::analysis::group::GroupTable;
use crate::analysis::is_simple;
use crate::brace::{trivial_brace, FiniteBrace};
use crate::error::Error;
use crate::limits::Limits;
use crate::products::{semidirect_product, BraceAction};

use super::with_family;

/// The action of `ℤ/3` on `K = ℤ/2 × ℤ/2` by powers of `α₁(y, z) = (z, y + z)`.
///
/// `(y, z)` has index `y + 2z`.
pub fn b3_action() -> BraceAction {
    let step = |v: usize| {
        let (y, z) = (v & 1, v >> 1);
        z | ((y ^ z) << 1)
    };
    BraceAction::from_fn(3, 4, |x, v| (0..x).fold(v, |acc, _| step(acc))).expect("well-formed action")
}

/// `B₃ = K ⋊ ℤ/3`; the element `((y, z), x)` has index `(y + 2z)·3 + x`.
pub fn build_b3(limits: &Limits) -> Result<FiniteBrace, Error> {
    let k = trivial_brace(&AbelianGroupSpec::new(vec![2, 2])?, limits)?;
    let z3 = trivial_brace(&AbelianGroupSpec::new(vec![3])?, limits)?;
    let b = semidirect_product(&k, &z3, &b3_action(), limits)?;
    Ok(with_family(b, "b3", &[]))
}

/// `ℤ/3 ⋊ B` for a simple brace `B` whose multiplicative group has
/// abelianization of order 2; `B` acts on `ℤ/3` by the sign character
/// `x ↦ ±1` (`+1` exactly on the commutator subgroup).
///
/// The element `(t, x)` has index `t·|B| + x`.
pub fn build_perfect_not_simple(b: &FiniteBrace, limits: &Limits) -> Result<FiniteBrace, Error> {
    if b.is_trivial() || !is_simple(b) {
        return Err(Error::hypothesis("B simple non-trivial", "the input brace is trivial or not simple"));
    }
    let derived = GroupTable::from_brace(b).commutator_subgroup(&crate::subset::Subset::full(b.order()));
    if derived.len() * 2 != b.order() {
        return Err(Error::hypothesis(
            "abelianization of order 2",
            format!("(B, ·) has abelianization of order {}", b.order() / derived.len()),
        ));
    }
    let z3 = trivial_brace(&AbelianGroupSpec::new(vec![3])?, limits)?;
    let sign = BraceAction::from_fn(b.order(), 3, |x, t| if derived.contains(x) { t } else { (3 - t) % 3 })?;
    let product = semidirect_product(&z3, b, &sign, limits)?;
    Ok(with_family(product, "perfect_not_simple", &[("base_order", format!("{}", b.order()))]))
}

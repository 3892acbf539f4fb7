//! Randomised properties over semidirect products `ℤ/n ⋊ ℤ/m` and direct
//! products with trivial braces.

mod common;

use brace_core::analysis::{is_ideal, quotient, socle, square, GroupTable};
use brace_core::brace::direct_product;
use brace_core::families::build_b3;
use brace_core::modular::multiplicative_order;
use brace_core::products::{semidirect_product, BraceAction};
use brace_core::ybe::{solution_from_brace, verify_braid, verify_involutive, verify_nondegenerate};
use brace_core::{FiniteBrace, Subset};
use proptest::prelude::*;

use common::{limits, trivial};

/// `ℤ/n ⋊ ℤ/m` with `1 ∈ ℤ/m` acting by multiplication by a unit `u` whose
/// order divides `m`.
fn cyclic_semidirect() -> impl Strategy<Value = FiniteBrace> {
    (2usize..12, 1usize..7, 0usize..12).prop_filter_map("needs a unit of order dividing m", |(n, m, pick)| {
        let units: Vec<usize> = (1..n)
            .filter(|&u| multiplicative_order(u as u64, n as u64).is_some_and(|o| (m as u64).is_multiple_of(o)))
            .collect();
        let u = units[pick % units.len()];
        let alpha = BraceAction::from_fn(m, n, |s, t| (0..s).fold(t, |acc, _| acc * u % n)).ok()?;
        semidirect_product(&trivial(&[n]), &trivial(&[m]), &alpha, &limits()).ok()
    })
}

fn small_brace() -> impl Strategy<Value = FiniteBrace> {
    prop_oneof![
        cyclic_semidirect(),
        (1usize..4).prop_map(|k| direct_product(&build_b3(&limits()).unwrap(), &trivial(&[k]), &limits()).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn axioms_hold(b in small_brace()) {
        prop_assert!(b.verify_brace_axioms(&limits()).is_valid());
    }

    #[test]
    fn lambda_is_a_homomorphism(b in small_brace()) {
        let n = b.order();
        for x in 0..n {
            for y in 0..n {
                let xy = b.mul(x, y);
                for z in 0..n {
                    prop_assert_eq!(b.lambda(xy, z), b.lambda(x, b.lambda(y, z)));
                }
            }
        }
    }

    #[test]
    fn ybe_solution_is_involutive_nondegenerate(b in small_brace()) {
        let s = solution_from_brace(&b);
        prop_assert_eq!(verify_braid(&s, &limits()), Ok(()));
        prop_assert_eq!(verify_involutive(&s), Ok(()));
        prop_assert_eq!(verify_nondegenerate(&s), Ok(()));
    }

    #[test]
    fn square_and_socle_are_ideals(b in small_brace()) {
        let b2 = square(&b);
        prop_assert!(is_ideal(&b, &b2));
        prop_assert!(is_ideal(&b, &socle(&b)));
        prop_assert!(quotient(&b, &b2, &limits()).unwrap().brace.is_trivial());
        let derived = GroupTable::from_brace(&b).commutator_subgroup(&Subset::full(b.order()));
        prop_assert!(derived.is_subset(&b2));
    }
}

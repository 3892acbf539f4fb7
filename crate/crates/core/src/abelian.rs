//! Finite abelian groups given as products of cyclic groups.

use alloc::vec::Vec;

use crate::error::Error;
use crate::limits::Limits;

/// `ℤ/(m₁) × … × ℤ/(mₖ)`.
///
/// Elements are encoded mixed-radix with the first factor least
/// significant: `(c₁, …, cₖ) ↦ c₁ + m₁·(c₂ + m₂·(…))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    cyclic_orders: Vec<usize>,
}

impl AbelianGroupSpec {
    pub fn new(cyclic_orders: Vec<usize>) -> Result<Self, Error> {
        if cyclic_orders.is_empty() {
            return Err(Error::precondition("an abelian group spec needs at least one cyclic factor"));
        }
        if let Some(&m) = cyclic_orders.iter().find(|&&m| m == 0) {
            return Err(Error::precondition(alloc::format!("cyclic factor of order {m}")));
        }
        Ok(AbelianGroupSpec { cyclic_orders })
    }

    /// `(ℤ/(m))ⁿ`.
    pub fn power(m: usize, n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Self::new(alloc::vec![1]);
        }
        Self::new(alloc::vec![m; n])
    }

    pub fn cyclic_orders(&self) -> &[usize] {
        &self.cyclic_orders
    }

    /// Group order, saturating instead of overflowing.
    pub fn order_u128(&self) -> u128 {
        self.cyclic_orders.iter().fold(1u128, |acc, &m| acc.saturating_mul(m as u128))
    }

    /// Group order. Only meaningful once a size guard has passed.
    pub fn order(&self) -> usize {
        self.cyclic_orders.iter().product()
    }

    pub fn check(&self, limits: &Limits) -> Result<(), Error> {
        limits.check_order(self.order_u128())
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.cyclic_orders.len());
        let mut index = 0;
        for (&c, &m) in coords.iter().zip(&self.cyclic_orders).rev() {
            index = index * m + c % m;
        }
        index
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        self.cyclic_orders
            .iter()
            .map(|&m| {
                let c = index % m;
                index /= m;
                c
            })
            .collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        let mut scale = 1;
        let (mut a, mut b) = (a, b);
        for &m in &self.cyclic_orders {
            out += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        out
    }

    /// Dense row-major addition table.
    pub fn add_table(&self) -> Vec<u16> {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.add(a, b) as u16);
            }
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_is_least_significant_first() {
        let spec = AbelianGroupSpec::new(alloc::vec![2, 3]).unwrap();
        assert_eq!(spec.order(), 6);
        assert_eq!(spec.encode(&[1, 0]), 1);
        assert_eq!(spec.encode(&[0, 1]), 2);
        assert_eq!(spec.decode(5), alloc::vec![1, 2]);
        // (1,2) + (1,2) = (0,1)
        assert_eq!(spec.add(5, 5), spec.encode(&[0, 1]));
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(AbelianGroupSpec::new(alloc::vec![]).is_err());
        assert!(AbelianGroupSpec::new(alloc::vec![3, 0]).is_err());
    }

    #[test]
    fn power_of_rank_zero_is_the_trivial_group() {
        assert_eq!(AbelianGroupSpec::power(5, 0).unwrap().order(), 1);
        assert_eq!(AbelianGroupSpec::power(2, 3).unwrap().order(), 8);
    }
}

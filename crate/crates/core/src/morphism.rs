//! Total maps between braces and the check that they are morphisms.

use alloc::vec;
use alloc::vec::Vec;

use crate::brace::FiniteBrace;
use crate::error::Error;

/// A total map `source → target` given by its image table.
///
/// The braces themselves are not stored; they are passed to
/// [`verify_morphism`] and friends alongside the map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraceMap {
    source_order: usize,
    target_order: usize,
    image: Vec<u16>,
}

impl BraceMap {
    pub fn new(source_order: usize, target_order: usize, image: Vec<u16>) -> Result<Self, Error> {
        if image.len() != source_order {
            return Err(Error::precondition(alloc::format!(
                "map image has {} entries, source has {source_order} elements",
                image.len()
            )));
        }
        if let Some(&v) = image.iter().find(|&&v| v as usize >= target_order) {
            return Err(Error::precondition(alloc::format!("image entry {v} out of range for target order {target_order}")));
        }
        Ok(BraceMap { source_order, target_order, image })
    }

    pub fn from_fn(source_order: usize, target_order: usize, f: impl Fn(usize) -> usize) -> Result<Self, Error> {
        Self::new(source_order, target_order, (0..source_order).map(|a| f(a) as u16).collect())
    }

    pub fn identity(order: usize) -> Self {
        BraceMap { source_order: order, target_order: order, image: (0..order as u16).collect() }
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.image[a] as usize
    }

    pub fn image(&self) -> &[u16] {
        &self.image
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &BraceMap) -> Result<BraceMap, Error> {
        if other.target_order != self.source_order {
            return Err(Error::precondition("composed maps do not match"));
        }
        Ok(BraceMap {
            source_order: other.source_order,
            target_order: self.target_order,
            image: other.image.iter().map(|&a| self.image[a as usize]).collect(),
        })
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<BraceMap> {
        if self.source_order != self.target_order {
            return None;
        }
        let mut inv = vec![u16::MAX; self.target_order];
        for (a, &b) in self.image.iter().enumerate() {
            if inv[b as usize] != u16::MAX {
                return None;
            }
            inv[b as usize] = a as u16;
        }
        Some(BraceMap { source_order: self.target_order, target_order: self.source_order, image: inv })
    }

    /// Swaps the images of `a` and `b`.
    pub fn swap_images(&mut self, a: usize, b: usize) {
        self.image.swap(a, b);
    }
}

/// Outcome of [`verify_morphism`]; each failed property carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    /// `None` if `m(a+b) = m(a)+m(b)` everywhere, else a failing `(a, b)`.
    pub additive_failure: Option<(usize, usize)>,
    /// `None` if `m(a·b) = m(a)·m(b)` everywhere, else a failing `(a, b)`.
    pub multiplicative_failure: Option<(usize, usize)>,
    /// Two elements with the same image, if any.
    pub injectivity_failure: Option<(usize, usize)>,
    /// A target element outside the image, if any.
    pub surjectivity_failure: Option<usize>,
}

impl MorphismReport {
    pub fn is_additive(&self) -> bool {
        self.additive_failure.is_none()
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative_failure.is_none()
    }

    pub fn is_homomorphism(&self) -> bool {
        self.is_additive() && self.is_multiplicative()
    }

    pub fn is_bijective(&self) -> bool {
        self.injectivity_failure.is_none() && self.surjectivity_failure.is_none()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism() && self.is_bijective()
    }
}

/// Exhaustively checks whether `m` is a brace homomorphism, and whether it
/// is bijective.
pub fn verify_morphism(source: &FiniteBrace, target: &FiniteBrace, m: &BraceMap) -> Result<MorphismReport, Error> {
    if m.source_order != source.order() || m.target_order != target.order() {
        return Err(Error::precondition("map orders do not match the braces"));
    }
    let n = source.order();
    let mut additive_failure = None;
    let mut multiplicative_failure = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if additive_failure.is_none() && m.apply(source.add(a, b)) != target.add(m.apply(a), m.apply(b)) {
                additive_failure = Some((a, b));
            }
            if multiplicative_failure.is_none() && m.apply(source.mul(a, b)) != target.mul(m.apply(a), m.apply(b)) {
                multiplicative_failure = Some((a, b));
            }
            if additive_failure.is_some() && multiplicative_failure.is_some() {
                break 'outer;
            }
        }
    }
    let mut first = vec![usize::MAX; target.order()];
    let mut injectivity_failure = None;
    for a in 0..n {
        let b = m.apply(a);
        if first[b] != usize::MAX {
            injectivity_failure.get_or_insert((first[b], a));
        } else {
            first[b] = a;
        }
    }
    let surjectivity_failure = first.iter().position(|&a| a == usize::MAX);
    Ok(MorphismReport { additive_failure, multiplicative_failure, injectivity_failure, surjectivity_failure })
}

/// True if `m` is an automorphism of `b`.
pub fn is_automorphism(b: &FiniteBrace, m: &BraceMap) -> bool {
    verify_morphism(b, b, m).map(|r| r.is_isomorphism()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbelianGroupSpec;
    use crate::brace::trivial_brace;
    use crate::limits::Limits;

    #[test]
    fn identity_is_an_isomorphism() {
        let b = trivial_brace(&AbelianGroupSpec::new(vec![2, 3]).unwrap(), &Limits::default()).unwrap();
        let report = verify_morphism(&b, &b, &BraceMap::identity(6)).unwrap();
        assert!(report.is_isomorphism());
    }

    #[test]
    fn negation_on_z5_is_an_automorphism_and_doubling_is_not_multiplicative_on_z4() {
        let z5 = trivial_brace(&AbelianGroupSpec::new(vec![5]).unwrap(), &Limits::default()).unwrap();
        let neg = BraceMap::from_fn(5, 5, |a| z5.neg(a)).unwrap();
        assert!(is_automorphism(&z5, &neg));
        assert_eq!(neg.compose(&neg).unwrap(), BraceMap::identity(5));

        let z4 = trivial_brace(&AbelianGroupSpec::new(vec![4]).unwrap(), &Limits::default()).unwrap();
        let double = BraceMap::from_fn(4, 4, |a| (2 * a) % 4).unwrap();
        let report = verify_morphism(&z4, &z4, &double).unwrap();
        assert!(report.is_homomorphism());
        assert!(!report.is_bijective());
        assert_eq!(report.injectivity_failure, Some((0, 2)));
        assert_eq!(report.surjectivity_failure, Some(1));
    }

    #[test]
    fn inverse_of_a_permutation() {
        let m = BraceMap::new(3, 3, vec![1, 2, 0]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), BraceMap::identity(3));
        assert!(BraceMap::new(2, 2, vec![1, 1]).unwrap().inverse().is_none());
        assert!(BraceMap::new(2, 2, vec![0, 2]).is_err());
    }
}

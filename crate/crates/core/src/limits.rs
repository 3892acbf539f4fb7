use crate::error::Error;

/// Largest order any table may have: element indices are stored as `u16`
/// and the memory budget stops here.
pub const HARD_MAX_ORDER: usize = 16384;

/// Resource guards and verification modes shared by every constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Constructors refuse to produce braces above this order.
    pub max_order: usize,
    /// Up to this order the O(n³) checks are exhaustive; above it they are
    /// sampled.
    pub full_check_threshold: usize,
    /// Largest order accepted by lattice enumeration (`all_ideals`).
    pub analysis_cap: usize,
    /// Largest order accepted by the group isomorphism search.
    pub iso_cap: usize,
    /// Random triples checked above `full_check_threshold`.
    pub sample_triples: usize,
    /// Always run exhaustive checks, whatever the order.
    pub force_full: bool,
    /// Seed of the sampler, fixed so reports are reproducible.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 4096,
            full_check_threshold: 1024,
            analysis_cap: 512,
            iso_cap: 256,
            sample_triples: 1_000_000,
            force_full: false,
            seed: 0x5eed_b8ac_e000_0001,
        }
    }
}

impl Limits {
    /// Default limits with another size guard. Fails above [`HARD_MAX_ORDER`].
    pub fn with_max_order(max_order: usize) -> Result<Self, Error> {
        if max_order == 0 || max_order > HARD_MAX_ORDER {
            return Err(Error::precondition(alloc::format!(
                "max_order must lie in 1..={HARD_MAX_ORDER}, got {max_order}"
            )));
        }
        Ok(Limits { max_order, ..Limits::default() })
    }

    pub fn check_order(&self, requested: u128) -> Result<(), Error> {
        let limit = self.max_order.min(HARD_MAX_ORDER);
        if requested > limit as u128 {
            return Err(Error::SizeGuard { requested, limit });
        }
        Ok(())
    }

    pub(crate) fn exhaustive(&self, n: usize) -> bool {
        self.force_full || n <= self.full_check_threshold
    }
}

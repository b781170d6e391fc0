use fixedbitset::FixedBitSet;

use super::{Elem, FiniteRing};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// The connection set `S = (R^×)^p`.
#[derive(Debug, Clone)]
pub struct DifferenceSet {
    p: u64,
    members: Vec<Elem>,
    mask: FixedBitSet,
    symmetric: bool,
}

impl DifferenceSet {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Sorted members.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.mask.contains(a.index())
    }

    /// Whether `-1 ∈ S`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

impl FiniteRing {
    /// `{ x^p : x ∈ R^× }`.
    pub fn units_pth_powers(&self, p: u64) -> Result<DifferenceSet> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut mask = FixedBitSet::with_capacity(self.len());
        for x in self.units() {
            mask.insert(self.pow(x, p).index());
        }
        let members: Vec<Elem> = mask.ones().map(|i| Elem(i as u32)).collect();
        let symmetric = mask.contains(self.neg(self.one()).index());
        Ok(DifferenceSet { p, members, mask, symmetric })
    }

    pub fn is_minus_one_pth_power(&self, p: u64) -> Result<bool> {
        Ok(self.units_pth_powers(p)?.is_symmetric())
    }
}

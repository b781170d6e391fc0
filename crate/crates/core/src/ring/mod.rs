//! Finite commutative rings presented as products of local rings.
//!
//! Every element is addressed by an [`Elem`] index. Indices enumerate the
//! ring in lexicographic coordinate order across factors (first factor most
//! significant), so `Elem(0)` is always zero and the order is stable.

mod ideal;
mod local;
mod parse;
mod powers;
mod residue;

use std::fmt;

pub use ideal::Ideal;
pub use local::{is_irreducible_mod, least_irreducible, LocalKind, LocalRing};
pub use parse::{parse_ring_spec, parse_ring_spec_with_limit, DEFAULT_MAX_RING_SIZE};
pub use powers::DifferenceSet;
pub use residue::ResidueMap;

use crate::error::{Error, Result};

/// Index of a ring element (and of the matching Cayley-graph vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    factors: Vec<LocalRing>,
    strides: Vec<u64>,
    size: u64,
}

impl FiniteRing {
    pub fn new(factors: Vec<LocalRing>, limit: u64) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Precondition("a ring needs at least one factor".into()));
        }
        let limit = limit.min(u32::MAX as u64);
        let mut size = 1u64;
        for f in &factors {
            size = size
                .checked_mul(f.size())
                .filter(|&s| s <= limit)
                .ok_or(Error::RingTooLarge { size: size.saturating_mul(f.size()), limit })?;
        }
        let mut strides = vec![1u64; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].size();
        }
        Ok(FiniteRing { factors, strides, size })
    }

    pub fn local(factor: LocalRing) -> Self {
        let size = factor.size();
        FiniteRing { factors: vec![factor], strides: vec![1], size }
    }

    pub fn factors(&self) -> &[LocalRing] {
        &self.factors
    }

    /// Number of local factors `d`.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_local(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_field(&self) -> bool {
        self.is_local() && self.factors[0].is_field()
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.size as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `i`-th local factor as a ring in its own right.
    pub fn factor_ring(&self, i: usize) -> FiniteRing {
        FiniteRing::local(self.factors[i].clone())
    }

    pub fn spec_string(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| f.spec_string()).collect();
        parts.join(" x ")
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size as u32).map(Elem)
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&a| self.is_unit(a))
    }

    /// Per-factor local indices.
    pub fn split(&self, a: Elem) -> Vec<u64> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(f, &s)| (a.0 as u64 / s) % f.size())
            .collect()
    }

    pub fn join(&self, parts: &[u64]) -> Elem {
        let idx: u64 = parts.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum();
        Elem(idx as u32)
    }

    /// The local coordinate of `a` in factor `i`.
    pub fn component(&self, a: Elem, i: usize) -> u64 {
        (a.0 as u64 / self.strides[i]) % self.factors[i].size()
    }

    fn lift2(&self, a: Elem, b: Elem, op: impl Fn(&LocalRing, u64, u64) -> u64) -> Elem {
        let mut idx = 0u64;
        for (f, &s) in self.factors.iter().zip(&self.strides) {
            let x = (a.0 as u64 / s) % f.size();
            let y = (b.0 as u64 / s) % f.size();
            idx += op(f, x, y) * s;
        }
        Elem(idx as u32)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    /// The element `c · 1`.
    pub fn from_int(&self, c: i64) -> Elem {
        let parts: Vec<u64> = self.factors.iter().map(|f| f.from_int(c)).collect();
        self.join(&parts)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.is_local() {
            return Elem(self.factors[0].add(a.0 as u64, b.0 as u64) as u32);
        }
        self.lift2(a, b, LocalRing::add)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.is_local() {
            return Elem(self.factors[0].sub(a.0 as u64, b.0 as u64) as u32);
        }
        self.lift2(a, b, LocalRing::sub)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.sub(self.zero(), a)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.is_local() {
            return Elem(self.factors[0].mul(a.0 as u64, b.0 as u64) as u32);
        }
        self.lift2(a, b, LocalRing::mul)
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        let parts: Vec<u64> = self
            .factors
            .iter()
            .zip(self.split(a))
            .map(|(f, x)| f.pow(x, e))
            .collect();
        self.join(&parts)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.factors.iter().zip(self.split(a)).all(|(f, x)| f.is_unit(x))
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        let parts: Option<Vec<u64>> = self
            .factors
            .iter()
            .zip(self.split(a))
            .map(|(f, x)| f.inverse(x))
            .collect();
        parts.map(|p| self.join(&p))
    }

    pub fn unit_count(&self) -> u64 {
        self.factors.iter().map(|f| f.unit_count()).product()
    }

    /// Coefficient vectors, one per factor.
    pub fn coords(&self, a: Elem) -> Vec<Vec<u64>> {
        self.factors.iter().zip(self.split(a)).map(|(f, x)| f.coeffs(x)).collect()
    }

    pub fn label(&self, a: Elem) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(self.split(a))
            .map(|(f, x)| f.label(x))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

use num_rational::Ratio;
use serde::Serialize;

use crate::arith::{factorize, is_prime, prime_power};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, LocalRing};

/// Value of an order-`p` character: `Root(j)` stands for `ζ_p^j`, `Zero` for
/// the argument `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CharValue {
    Zero,
    Root(u32),
}

impl CharValue {
    pub fn is_one(self) -> bool {
        self == CharValue::Root(0)
    }
}

/// `χ(x) = ζ_p^(log_g x mod p)` on `F_q`, for the least generator `g`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    field: FiniteRing,
    p: u64,
    generator: Elem,
    /// `dlog[x]` for units; `u32::MAX` at zero.
    dlog: Vec<u32>,
}

impl CharacterTable {
    pub fn new(field: &FiniteRing, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !field.is_field() {
            return Err(Error::NotAField(field.spec_string()));
        }
        let q = field.size();
        if !(q - 1).is_multiple_of(p) {
            return Err(Error::Precondition(format!(
                "{p} does not divide {}: no character of order {p} on {field}",
                q - 1
            )));
        }
        let order = q - 1;
        let cofactors: Vec<u64> = factorize(order).into_iter().map(|(r, _)| order / r).collect();
        let generator = field
            .units()
            .find(|&g| cofactors.iter().all(|&c| field.pow(g, c) != field.one()))
            .expect("multiplicative group of a field is cyclic");
        let mut dlog = vec![u32::MAX; field.len()];
        let mut x = field.one();
        for e in 0..order {
            dlog[x.index()] = e as u32;
            x = field.mul(x, generator);
        }
        Ok(CharacterTable { field: field.clone(), p, generator, dlog })
    }

    /// Table for `F_q` given only `q`.
    pub fn for_order(q: u64, p: u64) -> Result<Self> {
        let (l, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let field = FiniteRing::local(LocalRing::field(l, m, q)?);
        Self::new(&field, p)
    }

    pub fn field(&self) -> &FiniteRing {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn dlog(&self, x: Elem) -> Option<u32> {
        let d = self.dlog[x.index()];
        (d != u32::MAX).then_some(d)
    }

    pub fn chi(&self, x: Elem) -> CharValue {
        match self.dlog(x) {
            None => CharValue::Zero,
            Some(d) => CharValue::Root(d % self.p as u32),
        }
    }

    /// `χ^k(x)`, with `χ^k(0) = 0` for every `k` including `k = 0`.
    pub fn chi_pow(&self, x: Elem, k: u32) -> CharValue {
        match self.chi(x) {
            CharValue::Zero => CharValue::Zero,
            CharValue::Root(j) => CharValue::Root(((j as u64 * k as u64) % self.p) as u32),
        }
    }

    /// `{x : χ(x) = 1}`, ascending.
    pub fn kernel(&self) -> Vec<Elem> {
        self.field.elements().filter(|&x| self.chi(x).is_one()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    P0,
    P1,
}

/// `P_1(z) = (1 + z + ... + z^(p-1)) / p` and `P_0 = 1 - P_1`, evaluated
/// exactly: `P_1` is 1 at `ζ^0`, 0 at other roots, and `1/p` at `0`.
pub fn selector(value: CharValue, which: Selector, p: u64) -> Ratio<i64> {
    let p1 = match value {
        CharValue::Root(0) => Ratio::from_integer(1),
        CharValue::Root(_) => Ratio::from_integer(0),
        CharValue::Zero => Ratio::new(1, p as i64),
    };
    match which {
        Selector::P1 => p1,
        Selector::P0 => Ratio::from_integer(1) - p1,
    }
}

/// `Σ_a χ^k(1 - a^p)` as exact counts per root of unity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharSum {
    pub q: u64,
    pub p: u64,
    pub k: u32,
    /// `counts[j]` summands equal to `ζ_p^j`.
    pub counts: Vec<u64>,
    pub zero_count: u64,
    pub magnitude: f64,
}

impl CharSum {
    /// The integer value of the sum if it is one.
    pub fn integer_value(&self) -> Option<i64> {
        let counts: Vec<i64> = self.counts.iter().map(|&c| c as i64).collect();
        integer_value(&counts)
    }
}

/// `Σ_j c_j ζ_p^j` is an integer `N` exactly when `c_1 = ... = c_{p-1}`, and
/// then `N = c_0 - c_1`.
pub fn integer_value(counts: &[i64]) -> Option<i64> {
    let rest = counts.get(1..).unwrap_or(&[]);
    match rest.first() {
        None => counts.first().copied(),
        Some(&c) => rest.iter().all(|&x| x == c).then(|| counts[0] - c),
    }
}

pub(crate) fn magnitude(counts: &[u64]) -> f64 {
    let p = counts.len() as f64;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (j, &c) in counts.iter().enumerate() {
        let t = std::f64::consts::TAU * j as f64 / p;
        re += c as f64 * t.cos();
        im += c as f64 * t.sin();
    }
    re.hypot(im)
}

/// Distribution of `χ(1 - a^p)` over `a ∈ F_q`: per-root counts and zeros.
pub(crate) fn shifted_power_distribution(t: &CharacterTable) -> (Vec<u64>, u64) {
    let f = t.field();
    let mut dist = vec![0u64; t.p as usize];
    let mut zeros = 0;
    for a in f.elements() {
        match t.chi(f.sub(f.one(), f.pow(a, t.p))) {
            CharValue::Zero => zeros += 1,
            CharValue::Root(j) => dist[j as usize] += 1,
        }
    }
    (dist, zeros)
}

pub fn character_sum(t: &CharacterTable, k: u32) -> Result<CharSum> {
    if k as u64 >= t.p {
        return Err(Error::Precondition(format!("k = {k} must be below p = {}", t.p)));
    }
    let (dist, zero_count) = shifted_power_distribution(t);
    let mut counts = vec![0u64; t.p as usize];
    for (j, &c) in dist.iter().enumerate() {
        counts[(j as u64 * k as u64 % t.p) as usize] += c;
    }
    let magnitude = magnitude(&counts);
    Ok(CharSum { q: t.q(), p: t.p, k, counts, zero_count, magnitude })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeilRow {
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub magnitude: f64,
    pub bound: f64,
    pub margin: f64,
}

/// `|Σ_a χ^k(1 - a^p)|` against `(p-1)√q` for every field `F_q`, `q < q_max`,
/// every listed `p` dividing `q - 1`, and `1 <= k < p`.
pub fn weil_sweep(q_max: u64, primes: &[u64]) -> Result<Vec<WeilRow>> {
    use rayon::prelude::*;
    let mut jobs = Vec::new();
    for q in 2..q_max {
        if prime_power(q).is_none() {
            continue;
        }
        for &p in primes {
            if (q - 1) % p == 0 {
                jobs.push((q, p));
            }
        }
    }
    let rows: Vec<Vec<WeilRow>> = jobs
        .par_iter()
        .map(|&(q, p)| {
            let t = CharacterTable::for_order(q, p)?;
            let bound = (p - 1) as f64 * (q as f64).sqrt();
            (1..p as u32)
                .map(|k| {
                    let s = character_sum(&t, k)?;
                    Ok(WeilRow { q, p, k, magnitude: s.magnitude, bound, margin: bound - s.magnitude })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring_spec;

    fn table(spec: &str, p: u64) -> CharacterTable {
        CharacterTable::new(&parse_ring_spec(spec).unwrap(), p).unwrap()
    }

    #[test]
    fn kernels() {
        let t = table("F(13,1)", 3);
        assert_eq!(t.generator(), Elem(2));
        assert_eq!(t.kernel(), vec![Elem(1), Elem(5), Elem(8), Elem(12)]);
        assert_eq!(table("F(2,4)", 5).kernel().len(), 3);
        assert!(CharacterTable::new(&parse_ring_spec("F(5,1)").unwrap(), 3).is_err());
        assert!(CharacterTable::new(&parse_ring_spec("Z/25").unwrap(), 3).is_err());
    }

    #[test]
    fn selectors() {
        assert_eq!(selector(CharValue::Root(0), Selector::P1, 3), Ratio::from_integer(1));
        assert_eq!(selector(CharValue::Root(2), Selector::P1, 3), Ratio::from_integer(0));
        assert_eq!(selector(CharValue::Root(0), Selector::P0, 3), Ratio::from_integer(0));
        assert_eq!(selector(CharValue::Zero, Selector::P1, 5), Ratio::new(1, 5));
        assert_eq!(selector(CharValue::Zero, Selector::P0, 5), Ratio::new(4, 5));
    }

    #[test]
    fn sums() {
        let t = table("F(13,1)", 3);
        let s0 = character_sum(&t, 0).unwrap();
        assert_eq!(s0.integer_value(), Some(10));
        assert_eq!(s0.zero_count, 3);
        let s1 = character_sum(&t, 1).unwrap();
        assert!(s1.magnitude <= 2.0 * 13f64.sqrt());
        let s = character_sum(&table("F(2,4)", 5), 1).unwrap();
        assert!(s.magnitude <= 16.0);
        assert!(character_sum(&t, 3).is_err());
        assert_eq!(integer_value(&[5, 2, 2]), Some(3));
        assert_eq!(integer_value(&[5, 2, 1]), None);
    }
}

use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};

/// How a local factor was written in the ring spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LocalKind {
    /// `Z/ℓ^k`
    Integers,
    /// `F(ℓ, m)`
    Field,
    /// `GR(ℓ^k, r)`
    Galois,
}

/// A finite local ring `(Z/ℓ^k)[x] / (f)` with `f` monic of degree `r` and
/// irreducible modulo `ℓ`. Integers mod a prime power are the `r = 1`,
/// `f = x` case; finite fields are the `k = 1` case.
///
/// Elements are indexed by their coefficient vector `(c_0, .., c_{r-1})`,
/// `c_i ∈ [0, ℓ^k)`, read as the integer `Σ c_i (ℓ^k)^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalRing {
    kind: LocalKind,
    residue_char: u64,
    exponent: u32,
    degree: u32,
    modulus: u64,
    poly: Vec<u64>,
    size: u64,
}

const MAX_DEGREE: usize = 64;

impl LocalRing {
    /// `Z/n` for a prime power `n`.
    pub fn integers(n: u64) -> Result<Self> {
        let (l, k) = prime_power(n).ok_or(Error::NotPrimePower(n))?;
        Ok(Self::from_parts(LocalKind::Integers, l, k, vec![0, 1]))
    }

    /// The field with `ℓ^m` elements, defined by the least monic irreducible
    /// polynomial of degree `m` over `F_ℓ`.
    pub fn field(l: u64, m: u32, limit: u64) -> Result<Self> {
        if !is_prime(l) {
            return Err(Error::NotPrime(l));
        }
        Self::galois_parts(LocalKind::Field, l, 1, m, limit)
    }

    /// The Galois ring `GR(q, r)` for a prime power `q = ℓ^k`.
    pub fn galois(q: u64, r: u32, limit: u64) -> Result<Self> {
        let (l, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::galois_parts(LocalKind::Galois, l, k, r, limit)
    }

    fn galois_parts(kind: LocalKind, l: u64, k: u32, r: u32, limit: u64) -> Result<Self> {
        if r < 1 {
            return Err(Error::Precondition("degree must be at least 1".into()));
        }
        let modulus = l.pow(k);
        let size = checked_size(modulus, r)
            .filter(|&s| s <= limit)
            .ok_or(Error::RingTooLarge {
                size: checked_size(modulus, r).unwrap_or(u64::MAX),
                limit,
            })?;
        debug_assert!(size >= 2);
        let poly = least_irreducible(l, r);
        Ok(Self::from_parts(kind, l, k, poly))
    }

    /// Builds the ring from an explicit monic defining polynomial (low degree
    /// first) that the caller guarantees is irreducible mod `l`.
    pub(crate) fn from_parts(kind: LocalKind, l: u64, k: u32, poly: Vec<u64>) -> Self {
        let degree = (poly.len() - 1) as u32;
        let modulus = l.pow(k);
        LocalRing {
            kind,
            residue_char: l,
            exponent: k,
            degree,
            modulus,
            size: modulus.pow(degree),
            poly,
        }
    }

    pub fn kind(&self) -> LocalKind {
        self.kind
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// The prime `ℓ` with `R/M` of characteristic `ℓ`.
    pub fn residue_char(&self) -> u64 {
        self.residue_char
    }

    /// The `k` in `char R = ℓ^k`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The `r` in `|R/M| = ℓ^r`.
    pub fn residue_degree(&self) -> u32 {
        self.degree
    }

    pub fn residue_field_size(&self) -> u64 {
        self.residue_char.pow(self.degree)
    }

    /// Size of the maximal ideal `M = ℓR`.
    pub fn maximal_ideal_size(&self) -> u64 {
        self.size / self.residue_field_size()
    }

    /// The characteristic `ℓ^k`.
    pub fn characteristic(&self) -> u64 {
        self.modulus
    }

    pub fn defining_poly(&self) -> &[u64] {
        &self.poly
    }

    pub fn is_field(&self) -> bool {
        self.exponent == 1
    }

    pub fn spec_string(&self) -> String {
        match self.kind {
            LocalKind::Integers => format!("Z/{}", self.modulus),
            LocalKind::Field => format!("F({},{})", self.residue_char, self.degree),
            LocalKind::Galois => format!("GR({},{})", self.modulus, self.degree),
        }
    }

    /// The quotient `R / ℓ^j R`, sharing the defining polynomial.
    pub fn truncated(&self, j: u32) -> LocalRing {
        let k = self.exponent.min(j.max(1));
        let kind = match self.kind {
            LocalKind::Integers => LocalKind::Integers,
            _ if k == 1 => LocalKind::Field,
            other => other,
        };
        Self::from_parts(kind, self.residue_char, k, self.poly.clone())
    }

    pub fn decode(&self, idx: u64, out: &mut [u64]) {
        let mut rest = idx;
        for c in out.iter_mut().take(self.degree as usize) {
            *c = rest % self.modulus;
            rest /= self.modulus;
        }
    }

    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .take(self.degree as usize)
            .rev()
            .fold(0, |acc, &c| acc * self.modulus + c % self.modulus)
    }

    pub fn coeffs(&self, idx: u64) -> Vec<u64> {
        let mut out = vec![0; self.degree as usize];
        self.decode(idx, &mut out);
        out
    }

    /// Index of the constant `c · 1`.
    pub fn from_int(&self, c: i64) -> u64 {
        c.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return (a + b) % self.modulus;
        }
        self.zip_coeffs(a, b, |x, y| (x + y) % self.modulus)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return (a + self.modulus - b) % self.modulus;
        }
        self.zip_coeffs(a, b, |x, y| (x + self.modulus - y) % self.modulus)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    fn zip_coeffs(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut ra, mut rb) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.degree {
            out += f(ra % self.modulus, rb % self.modulus) * scale;
            ra /= self.modulus;
            rb /= self.modulus;
            scale *= self.modulus;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let m = self.modulus as u128;
        if self.degree == 1 {
            return ((a as u128 * b as u128) % m) as u64;
        }
        let r = self.degree as usize;
        let mut ca = [0u64; MAX_DEGREE];
        let mut cb = [0u64; MAX_DEGREE];
        self.decode(a, &mut ca[..r]);
        self.decode(b, &mut cb[..r]);
        let mut prod = [0u128; 2 * MAX_DEGREE];
        for i in 0..r {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..r {
                prod[i + j] = (prod[i + j] + ca[i] as u128 * cb[j] as u128) % m;
            }
        }
        // x^r = -(f_0 + f_1 x + ... + f_{r-1} x^{r-1})
        for d in (r..2 * r - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for j in 0..r {
                let sub = c * self.poly[j] as u128 % m;
                prod[d - r + j] = (prod[d - r + j] + m - sub) % m;
            }
            prod[d] = 0;
        }
        let mut out = 0u64;
        for i in (0..r).rev() {
            out = out * self.modulus + prod[i] as u64;
        }
        out
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Units are exactly the elements with a coefficient prime to `ℓ`.
    pub fn is_unit(&self, a: u64) -> bool {
        let mut rest = a;
        for _ in 0..self.degree {
            if !(rest % self.modulus).is_multiple_of(self.residue_char) {
                return true;
            }
            rest /= self.modulus;
        }
        false
    }

    pub fn unit_count(&self) -> u64 {
        self.size - self.maximal_ideal_size()
    }

    pub fn inverse(&self, a: u64) -> Option<u64> {
        self.is_unit(a).then(|| self.pow(a, self.unit_count() - 1))
    }

    /// Label used in exports: the integer for `r = 1`, else `[c0 c1 ..]`.
    pub fn label(&self, a: u64) -> String {
        if self.degree == 1 {
            a.to_string()
        } else {
            let parts: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(" "))
        }
    }
}

impl fmt::Display for LocalRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

fn checked_size(modulus: u64, r: u32) -> Option<u64> {
    modulus.checked_pow(r)
}

/// Least monic irreducible polynomial of degree `r` over `F_l`, ordering
/// candidates by `Σ c_i l^i` over the non-leading coefficients.
pub fn least_irreducible(l: u64, r: u32) -> Vec<u64> {
    let r = r as usize;
    let count = l.pow(r as u32);
    for code in 0..count {
        let mut poly = vec![0u64; r + 1];
        let mut rest = code;
        for c in poly.iter_mut().take(r) {
            *c = rest % l;
            rest /= l;
        }
        poly[r] = 1;
        if is_irreducible_mod(&poly, l) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
pub fn is_irreducible_mod(poly: &[u64], l: u64) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = l.pow(d as u32);
        for code in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut rest = code;
            for c in div.iter_mut().take(d) {
                *c = rest % l;
                rest /= l;
            }
            div[d] = 1;
            if rem_monic_mod(poly, &div, l).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn rem_monic_mod(num: &[u64], div: &[u64], l: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    let d = div.len() - 1;
    for top in (d..rem.len()).rev() {
        let c = rem[top] % l;
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            let idx = top - d + j;
            rem[idx] = (rem[idx] + l - c * div[j] % l) % l;
        }
    }
    rem.truncate(d);
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles() {
        assert_eq!(least_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(least_irreducible(5, 1), vec![0, 1]);
        assert!(!is_irreducible_mod(&[1, 0, 1], 2));
        assert!(!is_irreducible_mod(&[1, 0, 0, 0, 1], 3));
    }

    #[test]
    fn local_ring_shapes() {
        let z25 = LocalRing::integers(25).unwrap();
        assert_eq!((z25.residue_char(), z25.exponent(), z25.residue_degree()), (5, 2, 1));
        assert_eq!(z25.maximal_ideal_size(), 5);
        let gr = LocalRing::galois(9, 2, 1 << 20).unwrap();
        assert_eq!(gr.size(), 81);
        assert_eq!(gr.maximal_ideal_size(), 9);
        assert_eq!(gr.residue_field_size(), 9);
        let f16 = LocalRing::field(2, 4, 1 << 20).unwrap();
        assert!(f16.is_field());
        assert_eq!(f16.unit_count(), 15);
    }

    #[test]
    fn field_multiplication_has_inverses() {
        let f16 = LocalRing::field(2, 4, 1 << 20).unwrap();
        for a in 1..16 {
            let inv = f16.inverse(a).unwrap();
            assert_eq!(f16.mul(a, inv), 1);
        }
        // x * x^3 = x^4 = x + 1
        assert_eq!(f16.mul(2, 8), 3);
    }

    #[test]
    fn oversize_is_rejected() {
        assert!(matches!(
            LocalRing::field(2, 30, 1 << 20),
            Err(Error::RingTooLarge { .. })
        ));
    }
}

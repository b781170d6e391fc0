use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::modp;
use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients; index =
/// degree. Never carries trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Coefficients reduced into `0..m`.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mb = BigInt::from(m);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&mb).to_u64().expect("residue fits"))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        modp::eval(&self.reduce_mod(m), x, m)
    }

    /// Division by a monic polynomial: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem_monic(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !d.is_monic() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division by a monic polynomial; a non-zero remainder is an error.
    pub fn div_exact_monic(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_monic(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Falsified(format!("({d}) does not divide; remainder {r}")))
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::Falsified(format!("{c} does not divide coefficient {a}")));
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_exact_scalar(&c).expect("content divides")
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-remainder by zero");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.clone();
        }
        let steps = rem.len() - dd;
        let mut multiplier_debt = steps;
        for i in (0..steps).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            for r in rem[..i + dd].iter_mut() {
                *r *= &lc;
            }
            multiplier_debt -= 1;
            if !c.is_zero() {
                for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
        }
        debug_assert_eq!(multiplier_debt, 0);
        rem.truncate(dd);
        Self::new(rem)
    }

    /// Gcd over `Q`, returned as a primitive integer polynomial with positive
    /// leading coefficient, via the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

/// Sparse text, highest degree first: `x^6 + 3*x^5 - 2*x + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match (d, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{mag}*x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as the coefficient array (index = degree), each coefficient
/// as a decimal string.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Modular certificate: if some prime `q` keeps both leading coefficients
/// non-zero and `gcd(f mod q, f' mod q)` is constant, so is the gcd over `Q`.
fn separable_mod_certificate(f: &IntPoly, fp: &IntPoly) -> bool {
    let deg = f.degree().unwrap_or(0);
    let mut tried = 0;
    let mut q = 1_000_003u64;
    while tried < 8 {
        q += 2;
        if !is_prime(q) {
            continue;
        }
        tried += 1;
        let (a, b) = (f.reduce_mod(q), fp.reduce_mod(q));
        if a.len() != deg + 1 || b.len() != deg {
            continue;
        }
        if modp::gcd_mod(&a, &b, q).len() == 1 {
            return true;
        }
    }
    false
}

/// `gcd(f, f')` is constant. Tries a few modular certificates first and falls
/// back to the exact pseudo-remainder sequence.
pub fn is_separable_over_q(f: &IntPoly) -> Result<bool> {
    let Some(deg) = f.degree() else {
        return Err(Error::Precondition("zero polynomial".into()));
    };
    if deg == 0 {
        return Ok(true);
    }
    let fp = f.derivative();
    if separable_mod_certificate(f, &fp) {
        return Ok(true);
    }
    Ok(f.gcd(&fp).degree() == Some(0))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for d in &ds {
            let mut m = *d;
            for _ in 0..=e {
                next.push(m);
                m *= p;
            }
        }
        ds = next;
    }
    ds.sort_unstable();
    ds
}

/// All rational roots, ascending, by the rational root theorem. Requires the
/// trailing non-zero coefficient and the leading coefficient to fit in `u64`.
pub fn rational_roots(f: &IntPoly) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    let low = f.coeffs.iter().position(|c| !c.is_zero()).expect("non-zero");
    let trimmed = IntPoly::new(f.coeffs[low..].to_vec());
    let too_big = || Error::Precondition("coefficients too large for the rational root search".into());
    let a0 = trimmed.coeffs[0].abs().to_u64().ok_or_else(too_big)?;
    let an = trimmed.leading().abs().to_u64().ok_or_else(too_big)?;
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(BigRational::zero());
    }
    if trimmed.degree() > Some(0) {
        for num in divisors(a0) {
            for den in divisors(an) {
                if num.gcd(&den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                    if trimmed.eval_rational(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!((&a * &a).to_string(), "x^2 + 2*x + 1");
        assert_eq!(p(&[-1, 0, -3]).to_string(), "-3*x^2 - 1");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&p(&[1, -2])).unwrap(), r#"["1","-2"]"#);
        assert_eq!(&(&a - &a) + &IntPoly::zero(), IntPoly::zero());
        assert_eq!(p(&[0, 0, 3, 1]).derivative(), p(&[0, 6, 3]));
    }

    #[test]
    fn division() {
        let f = &p(&[1, 1, 1]) * &p(&[3, 0, 2, 7]);
        let (q, r) = f.div_rem_monic(&p(&[1, 1, 1])).unwrap();
        assert_eq!(q, p(&[3, 0, 2, 7]));
        assert!(r.is_zero());
        let (q, r) = p(&[5, 0, 0, 1]).div_rem_monic(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1, 1]), p(&[6])));
        assert!(p(&[1, 0, 1]).div_exact_monic(&p(&[1, 1])).is_err());
        assert!(p(&[1, 1]).div_rem_monic(&p(&[1, 2])).is_err());
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, -1, 4, 1, 5]);
        let b = p(&[2, 0, 3]);
        let r = a.pseudo_rem(&b);
        // lc(b)^3 * a - r must be divisible by b over Z[x]/... check via evaluation at many points
        let lhs = &a.scale(&BigInt::from(27)) - &r;
        for x in -5..=5 {
            let x = BigInt::from(x);
            let bx = b.eval(&x);
            assert!((lhs.eval(&x) % bx).is_zero());
        }
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_examples() {
        let f = &p(&[1, 1]).pow(2) * &p(&[-2, 0, 1]);
        let g = &p(&[1, 1]) * &p(&[5, 0, 0, 1]);
        assert_eq!(f.gcd(&g), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 2]).gcd(&p(&[0, 4])), p(&[0, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn separability() {
        assert!(!is_separable_over_q(&p(&[0, 0, 1])).unwrap());
        assert!(is_separable_over_q(&p(&[1, 3, 7, 9, 7, 3, 1])).unwrap());
        assert!(is_separable_over_q(&IntPoly::zero()).is_err());
    }

    #[test]
    fn rational_root_search() {
        let f = &p(&[-1, 2]) * &p(&[3, 1]); // (2x-1)(x+3)
        let roots = rational_roots(&f.shift(1)).unwrap();
        let want: Vec<BigRational> = vec![
            BigRational::from_integer((-3).into()),
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
        ];
        assert_eq!(roots, want);
        assert!(rational_roots(&p(&[1, 1, 1])).unwrap().is_empty());
    }
}

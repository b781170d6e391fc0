//! Dense polynomials over `Z/q` as little-endian `Vec<u64>` with no trailing
//! zeros.

use super::IntPoly;
use crate::arith::pow_mod;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn eval(a: &[u64], x: u64, q: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0u128, |acc, &c| (acc * x as u128 + c as u128) % q as u128) as u64
}

pub(crate) fn derivative(a: &[u64], q: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u128 * c as u128) % q as u128) as u64)
            .collect(),
    )
}

/// Remainder of `a` by `b` over the prime field `Z/q`.
fn rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = pow_mod(b[db], q - 2, q) as u128;
    while r.len() > db {
        let top = r.len() - 1;
        let c = (r[top] as u128 * inv % q as u128) as u64;
        if c != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let s = top - db + j;
                r[s] = ((r[s] as u128 + (q - bc) as u128 * c as u128) % q as u128) as u64;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Divide by the monic `x - a` once, returning the quotient if exact.
pub(crate) fn divide_linear(f: &[u64], a: u64, q: u64) -> Option<Vec<u64>> {
    if f.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![0u64; f.len() - 1];
    let mut carry = 0u128;
    for i in (0..f.len()).rev() {
        let v = (f[i] as u128 + carry) % q as u128;
        if i == 0 {
            return (v == 0).then_some(out);
        }
        out[i - 1] = v as u64;
        carry = v * a as u128 % q as u128;
    }
    unreachable!()
}

/// Monic gcd over the prime field `Z/q`; empty for `gcd(0, 0)`.
pub fn gcd_mod(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, q);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = pow_mod(lc, q - 2, q) as u128;
        for c in a.iter_mut() {
            *c = (*c as u128 * inv % q as u128) as u64;
        }
    }
    a
}

/// Every residue `a` in `0..q` with `f(a) ≡ 0 (mod q)`, ascending.
pub fn roots_mod_p(f: &IntPoly, q: u64) -> Vec<u64> {
    let red = f.reduce_mod(q);
    (0..q).filter(|&a| eval(&red, a, q) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(roots_mod_p(&IntPoly::from_i64s(&[1, 1, 1]), 7), vec![2, 4]);
        assert_eq!(gcd_mod(&[6, 5, 1], &[2, 1], 7), vec![2, 1]);
        assert_eq!(gcd_mod(&[1, 0, 1], &[1, 1], 3), vec![1]);
        assert_eq!(divide_linear(&[6, 5, 1], 5, 7), Some(vec![3, 1]));
        assert_eq!(divide_linear(&[1, 0, 1], 1, 7), None);
        assert_eq!(derivative(&[1, 1, 1, 1], 3), vec![1, 2]);
    }
}

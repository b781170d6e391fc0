use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::modp;
use super::poly::IntPoly;
use crate::arith::{is_prime, primes_below};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Primes `p < 500` for which `g_p` has a root mod `p`.
pub const ROOT_PRIMES_BELOW_500: [u64; 11] = [59, 79, 83, 179, 193, 227, 337, 419, 421, 443, 457];

/// `x^2 + x + 1`.
pub fn phi3() -> IntPoly {
    IntPoly::from_i64s(&[1, 1, 1])
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `f_p(x) = (1+x)^p - x^p - 1`, built from binomial coefficients.
pub fn build_f_p(p: u64) -> Result<IntPoly> {
    require_prime(p)?;
    let n = p as usize;
    let mut coeffs = vec![BigInt::default(); n];
    let mut c = BigInt::one();
    for i in 1..n {
        c = c * BigInt::from(n - i + 1) / BigInt::from(i);
        coeffs[i] = c.clone();
    }
    Ok(IntPoly::new(coeffs))
}

/// `h_p = f_p / p`.
pub fn build_h_p(p: u64) -> Result<IntPoly> {
    build_f_p(p)?.div_exact_scalar(&BigInt::from(p))
}

fn require_large_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p <= 3 {
        return Err(Error::Precondition(format!("p must exceed 3, got {p}")));
    }
    Ok(())
}

/// Strip every factor `x^2 + x + 1` from `f`, returning the count and cofactor.
fn strip_phi3(mut f: IntPoly) -> (u32, IntPoly) {
    let phi = phi3();
    let mut m = 0;
    loop {
        let (q, r) = f.div_rem_monic(&phi).expect("monic");
        if !r.is_zero() {
            return (m, f);
        }
        f = q;
        m += 1;
    }
}

/// Multiplicity of `x^2 + x + 1` in `f_p`, by repeated exact division; it
/// must be 1 for `p ≡ 2 (mod 3)` and 2 for `p ≡ 1 (mod 3)`.
pub fn phi3_multiplicity(p: u64) -> Result<u32> {
    require_large_prime(p)?;
    let (m, _) = strip_phi3(build_h_p(p)?);
    let expected = if p % 3 == 2 { 1 } else { 2 };
    if m != expected {
        return Err(Error::Falsified(format!(
            "multiplicity of x^2+x+1 in f_{p} is {m}, expected {expected}"
        )));
    }
    Ok(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizationRecord {
    pub p: u64,
    /// Multiplicity of `x^2 + x + 1`.
    pub m: u32,
    /// The cofactor in `f_p = p x (x+1) (x^2+x+1)^m g_p`.
    pub g: IntPoly,
    /// The factors multiply back to `f_p` exactly.
    pub verified: bool,
}

/// Divide out `p x (x+1) (x^2+x+1)^m` from `f_p`; any remainder is an error.
pub fn extract_g_p(p: u64) -> Result<FactorizationRecord> {
    require_large_prime(p)?;
    let f = build_f_p(p)?;
    let h = f.div_exact_scalar(&BigInt::from(p))?;
    let h = h.div_exact_monic(&IntPoly::x())?;
    let h = h.div_exact_monic(&IntPoly::from_i64s(&[1, 1]))?;
    let m = phi3_multiplicity(p)?;
    let g = h.div_exact_monic(&phi3().pow(m))?;
    if g.div_rem_monic(&phi3())?.1.is_zero() {
        return Err(Error::Falsified(format!("x^2+x+1 still divides g_{p}")));
    }
    let rebuilt = &(&IntPoly::from_i64s(&[0, 1, 1]).scale(&BigInt::from(p)) * &phi3().pow(m)) * &g;
    Ok(FactorizationRecord { p, m, g, verified: rebuilt == f })
}

/// Primes `3 < p < limit` for which `g_p` has a root mod `p`, ascending.
pub fn find_root_primes(limit: u64) -> Result<Vec<u64>> {
    let candidates: Vec<u64> = primes_below(limit).into_iter().filter(|&p| p > 3).collect();
    let hits: Vec<Option<u64>> = candidates
        .par_iter()
        .map(|&p| {
            let g = extract_g_p(p)?.g;
            Ok((!modp::roots_mod_p(&g, p).is_empty()).then_some(p))
        })
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Roots of `h_p` over `F_p` other than `0` and `-1`, each with its
/// multiplicity. Every such root must be a double root and `0`, `-1` must be
/// simple; anything else is a hard error.
pub fn repeated_roots_mod_p(p: u64) -> Result<Vec<(u64, u32)>> {
    require_large_prime(p)?;
    let h = build_h_p(p)?.reduce_mod(p);
    let h1 = modp::derivative(&h, p);
    let h2 = modp::derivative(&h1, p);
    let mut out = Vec::new();
    for a in 0..p {
        if modp::eval(&h, a, p) != 0 {
            continue;
        }
        let by_derivatives = if modp::eval(&h1, a, p) != 0 {
            1
        } else if modp::eval(&h2, a, p) != 0 {
            2
        } else {
            3
        };
        let mut by_division = 0;
        let mut cur = h.clone();
        while let Some(q) = modp::divide_linear(&cur, a, p) {
            by_division += 1;
            cur = q;
            if by_division > 2 {
                break;
            }
        }
        if by_division != by_derivatives.min(3) {
            return Err(Error::Falsified(format!(
                "h_{p} at {a}: derivative test gives {by_derivatives}, division gives {by_division}"
            )));
        }
        let endpoint = a == 0 || a == p - 1;
        let expected = if endpoint { 1 } else { 2 };
        if by_division != expected {
            return Err(Error::Falsified(format!(
                "h_{p} has a root {a} of multiplicity {by_division} (expected {expected})"
            )));
        }
        if !endpoint {
            out.push((a, by_division));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K3Witness {
    pub a: u32,
    pub label: String,
    /// `[0, 1, -a^p]`, pairwise adjacent in `G_R(p)`.
    pub triangle: [u32; 3],
}

/// Search `a` with `a` and `a+1` units and `f_p(a) = 0` in a local ring of
/// residue characteristic `p` with `M = pR`; a hit yields the triangle
/// `{0, 1, -a^p}`, which is checked edge by edge.
pub fn check_k3_criterion(ring: &FiniteRing, p: u64) -> Result<Option<K3Witness>> {
    require_prime(p)?;
    if !ring.is_local() {
        return Err(Error::NotLocal(ring.spec_string()));
    }
    if p == 2 || ring.factors()[0].residue_char() != p {
        return Err(Error::Precondition(format!("need odd p equal to the residue characteristic of {ring}")));
    }
    if ring.scalar_ideal(p as i64).len() as u64 != ring.factors()[0].maximal_ideal_size() {
        return Err(Error::Precondition(format!("M ≠ pR in {ring}")));
    }
    let s = ring.units_pth_powers(p)?;
    let one = ring.one();
    for a in ring.units() {
        let a1 = ring.add(a, one);
        if !ring.is_unit(a1) {
            continue;
        }
        let ap = ring.pow(a, p);
        let fa = ring.sub(ring.sub(ring.pow(a1, p), ap), one);
        if fa != ring.zero() {
            continue;
        }
        let c = ring.neg(ap);
        let tri = [Elem(0), one, c];
        let adjacent = |x: Elem, y: Elem| s.contains(ring.sub(x, y));
        if !(adjacent(tri[0], tri[1]) && adjacent(tri[0], tri[2]) && adjacent(tri[1], tri[2])) {
            return Err(Error::Falsified(format!("{{0, 1, -a^p}} is not a triangle for a = {}", ring.label(a))));
        }
        return Ok(Some(K3Witness { a: a.0, label: ring.label(a), triangle: [0, 1, c.0] }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring_spec;

    #[test]
    fn displayed_factorizations() {
        assert_eq!(build_f_p(2).unwrap(), IntPoly::from_i64s(&[0, 2]));
        assert_eq!(build_f_p(3).unwrap(), IntPoly::from_i64s(&[0, 3, 3]));
        assert_eq!(build_f_p(5).unwrap(), IntPoly::from_i64s(&[0, 5, 10, 10, 5]));
        assert!(build_f_p(4).is_err());
        assert_eq!(phi3_multiplicity(5).unwrap(), 1);
        assert_eq!(phi3_multiplicity(7).unwrap(), 2);
        assert_eq!(phi3_multiplicity(11).unwrap(), 1);
        assert!(phi3_multiplicity(3).is_err());
        assert_eq!(extract_g_p(5).unwrap().g, IntPoly::one());
        assert_eq!(extract_g_p(7).unwrap().g, IntPoly::one());
        let r = extract_g_p(11).unwrap();
        assert!(r.verified);
        assert_eq!(r.g, IntPoly::from_i64s(&[1, 3, 7, 9, 7, 3, 1]));
    }

    #[test]
    fn roots() {
        let g59 = extract_g_p(59).unwrap().g;
        assert!(modp::roots_mod_p(&g59, 59).contains(&4));
        assert_eq!(g59.eval_mod(4, 59), 0);
        assert!(modp::roots_mod_p(&extract_g_p(61).unwrap().g, 61).is_empty());
        assert!(find_root_primes(59).unwrap().is_empty());
        assert_eq!(find_root_primes(100).unwrap(), vec![59, 79, 83]);
    }

    #[test]
    fn repeated_roots() {
        assert_eq!(repeated_roots_mod_p(7).unwrap(), vec![(2, 2), (4, 2)]);
        assert!(repeated_roots_mod_p(5).unwrap().is_empty());
        assert!(repeated_roots_mod_p(59).unwrap().contains(&(4, 2)));
    }

    #[test]
    fn k3_criterion() {
        let w = check_k3_criterion(&parse_ring_spec("GR(49,2)").unwrap(), 7).unwrap();
        assert!(w.is_some());
        assert_eq!(check_k3_criterion(&parse_ring_spec("Z/25").unwrap(), 5).unwrap(), None);
        assert_eq!(check_k3_criterion(&parse_ring_spec("Z/9").unwrap(), 3).unwrap(), None);
        assert!(check_k3_criterion(&parse_ring_spec("Z/4").unwrap(), 2).is_err());
        assert!(check_k3_criterion(&parse_ring_spec("Z/49").unwrap(), 3).is_err());
    }
}

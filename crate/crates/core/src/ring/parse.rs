//! Ring-spec grammar:
//!
//! ```text
//! ring := atom ("x" atom)*
//! atom := "Z/" int | "F(" prime "," int ")" | "GR(" primepower "," int ")"
//! ```
//!
//! Whitespace is ignored. `Z/n` is split into its prime-power factors in
//! ascending prime order; otherwise factors keep the order they are written in.
//! A prime power may be written either as a plain integer or as `p^k`.

use super::{FiniteRing, LocalRing};
use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_RING_SIZE: u64 = 1 << 20;

pub fn parse_ring_spec(spec: &str) -> Result<FiniteRing> {
    parse_ring_spec_with_limit(spec, DEFAULT_MAX_RING_SIZE)
}

pub fn parse_ring_spec_with_limit(spec: &str, limit: u64) -> Result<FiniteRing> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |reason: &str| Error::MalformedSpec { spec: spec.to_string(), reason: reason.into() };
    if compact.is_empty() {
        return Err(bad("empty spec"));
    }
    let mut factors = Vec::new();
    for atom in compact.split('x') {
        if atom.is_empty() {
            return Err(bad("empty factor"));
        }
        if let Some(n) = atom.strip_prefix("Z/") {
            let n = parse_int(n).ok_or_else(|| bad("expected an integer after `Z/`"))?;
            if n < 2 {
                return Err(bad("modulus must be at least 2"));
            }
            for (l, k) in factorize(n) {
                factors.push(LocalRing::integers(l.pow(k))?);
            }
        } else if let Some(args) = atom.strip_prefix("F(").and_then(|s| s.strip_suffix(')')) {
            let (l, m) = two_args(args).ok_or_else(|| bad("expected `F(prime,int)`"))?;
            let l = parse_int(l).ok_or_else(|| bad("bad characteristic"))?;
            let m = parse_int(m).ok_or_else(|| bad("bad degree"))?;
            if !is_prime(l) {
                return Err(Error::NotPrime(l));
            }
            factors.push(LocalRing::field(l, degree(m).ok_or_else(|| bad("degree must be >= 1"))?, limit)?);
        } else if let Some(args) = atom.strip_prefix("GR(").and_then(|s| s.strip_suffix(')')) {
            let (q, r) = two_args(args).ok_or_else(|| bad("expected `GR(primepower,int)`"))?;
            let q = parse_prime_power(q).ok_or_else(|| bad("bad prime power"))?;
            let r = parse_int(r).ok_or_else(|| bad("bad degree"))?;
            factors.push(LocalRing::galois(q, degree(r).ok_or_else(|| bad("degree must be >= 1"))?, limit)?);
        } else {
            return Err(bad(&format!("unrecognized factor `{atom}`")));
        }
    }
    FiniteRing::new(factors, limit)
}

fn two_args(s: &str) -> Option<(&str, &str)> {
    let (a, b) = s.split_once(',')?;
    (!b.contains(',')).then_some((a, b))
}

fn parse_int(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn degree(v: u64) -> Option<u32> {
    (1..=64).contains(&v).then_some(v as u32)
}

fn parse_prime_power(s: &str) -> Option<u64> {
    match s.split_once('^') {
        Some((base, exp)) => {
            let base = parse_int(base)?;
            let exp = u32::try_from(parse_int(exp)?).ok()?;
            if !is_prime(base) || exp == 0 {
                return None;
            }
            base.checked_pow(exp)
        }
        None => parse_int(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LocalKind;

    #[test]
    fn parses_atoms() {
        let r = parse_ring_spec("Z/25").unwrap();
        assert!(r.is_local());
        assert_eq!(r.size(), 25);
        assert_eq!(r.factors()[0].maximal_ideal_size(), 5);

        let r = parse_ring_spec("Z/12").unwrap();
        assert_eq!(r.factor_count(), 2);
        assert_eq!(r.spec_string(), "Z/4 x Z/3");

        let r = parse_ring_spec("F(2,4)").unwrap();
        assert_eq!(r.size(), 16);
        assert!(r.is_field());

        let r = parse_ring_spec(" GR( 3^2 , 2 ) x F(7,1)").unwrap();
        assert_eq!(r.spec_string(), "GR(9,2) x F(7,1)");
        assert_eq!(r.factors()[0].kind(), LocalKind::Galois);
    }

    #[test]
    fn spec_string_round_trips() {
        for spec in ["Z/360", "F(3,3) x Z/49", "GR(8,2)", "Z/2 x Z/2 x F(5,2)"] {
            let r = parse_ring_spec(spec).unwrap();
            let again = parse_ring_spec(&r.spec_string()).unwrap();
            assert_eq!(r, again);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in ["", "Z/1", "Z/0", "Z/", "F(4,2)", "F(3,0)", "GR(12,2)", "GR(9,0)", "Q/5", "Z/5 x", "F(3,2,1)"] {
            assert!(parse_ring_spec(spec).is_err(), "{spec} should fail");
        }
        assert!(matches!(parse_ring_spec("F(2,4)x F(2,4) x F(2,4) x F(2,4) x F(2,4) x F(2,4)"), Err(Error::RingTooLarge { .. })));
        assert!(parse_ring_spec_with_limit("Z/64", 32).is_err());
    }
}

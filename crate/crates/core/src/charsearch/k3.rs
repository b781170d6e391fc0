use serde::Serialize;

use super::character::{integer_value, shifted_power_distribution, CharacterTable};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K3Hit {
    /// Third vertex of the triangle `{0, 1, a}`.
    pub a: u32,
    /// Least `x` with `x^p = a`; absent for complete graphs.
    pub x: Option<u32>,
    /// `G_{F_q}(p)` is complete (`p ∤ q - 1`), so any `a ∉ {0, 1}` works.
    pub complete: bool,
}

fn symmetric_field(field: &FiniteRing, p: u64) -> Result<()> {
    if !field.is_field() {
        return Err(Error::NotAField(field.spec_string()));
    }
    if !field.is_minus_one_pth_power(p)? {
        return Err(Error::Symmetry { spec: field.spec_string(), p });
    }
    Ok(())
}

/// Least `a = x^p ∉ {0, 1}` with `χ(1 - a) = 1`, so that `{0, 1, a}` is a
/// triangle; the triangle is re-checked against the connection set.
pub fn find_k3(field: &FiniteRing, p: u64) -> Result<Option<K3Hit>> {
    symmetric_field(field, p)?;
    let q = field.size();
    if !(q - 1).is_multiple_of(p) {
        if q < 3 {
            return Ok(None);
        }
        return Ok(Some(K3Hit { a: 2, x: None, complete: true }));
    }
    let t = CharacterTable::new(field, p)?;
    let s = field.units_pth_powers(p)?;
    let one = field.one();
    for &a in s.members() {
        if a == one || !t.chi(field.sub(one, a)).is_one() {
            continue;
        }
        let edges = [(Elem(0), one), (Elem(0), a), (one, a)];
        if !edges.iter().all(|&(u, v)| s.contains(field.sub(v, u))) {
            return Err(Error::Falsified(format!("{{0, 1, {}}} is not a triangle", field.label(a))));
        }
        let x = field.units().find(|&x| field.pow(x, p) == a).expect("a is a p-th power");
        return Ok(Some(K3Hit { a: a.0, x: Some(x.0), complete: false }));
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct K3Count {
    pub q: u64,
    pub p: u64,
    /// `#{x ∈ F_q^× : χ(1 - x^p) = 1}`.
    pub count: u64,
    /// `(q - (p-1)^2 √q - 2p) / p`.
    pub lower_bound: f64,
    /// `p · count` equals the summed character sums minus `p`, checked
    /// exactly on root-of-unity counts.
    pub identity_holds: bool,
}

/// Exact count of triangle parameters next to the analytic lower bound.
pub fn count_k3_witnesses(field: &FiniteRing, p: u64) -> Result<K3Count> {
    let t = CharacterTable::new(field, p)?;
    let q = field.size();
    let one = field.one();
    let count = field
        .units()
        .filter(|&x| t.chi(field.sub(one, field.pow(x, p))).is_one())
        .count() as u64;

    // Σ_{k<p} Σ_a χ^k(1 - a^p), as root-of-unity counts.
    let (dist, _) = shifted_power_distribution(&t);
    let mut total = vec![0i64; p as usize];
    for k in 0..p {
        for (j, &c) in dist.iter().enumerate() {
            total[(j as u64 * k % p) as usize] += c as i64;
        }
    }
    let identity_holds = integer_value(&total) == Some((p * count) as i64 + p as i64);

    let (qf, pf) = (q as f64, p as f64);
    let lower_bound = (qf - (pf - 1.0).powi(2) * qf.sqrt() - 2.0 * pf) / pf;
    Ok(K3Count { q, p, count, lower_bound, identity_holds })
}

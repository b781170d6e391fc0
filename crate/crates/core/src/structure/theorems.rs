//! Connectivity, anticonnectivity and primality of `G_R(p)` decided from the
//! ring structure alone. Graphs are only built for per-factor bipartiteness
//! (needed when combining factors) and to double-check certificates.

use std::collections::VecDeque;

use super::{is_homogeneous_set, is_nontrivial, Method, PrimalityVerdict};
use crate::arith::pow_mod;
use crate::cayley::build_graph;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, Ideal, LocalRing};

/// `n` is a primitive divisor of `ℓ^m - 1`: `n | ℓ^m - 1` and `n ∤ ℓ^a - 1`
/// for `1 <= a < m`.
pub fn is_primitive_divisor(n: u64, l: u64, m: u32) -> bool {
    let divides = |a: u32| pow_mod(l, a as u64, n) == 1 % n;
    divides(m) && (1..m).all(|a| !divides(a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub value: bool,
    pub clauses: Vec<String>,
}

fn require_symmetric(ring: &FiniteRing, p: u64) -> Result<()> {
    if ring.is_minus_one_pth_power(p)? {
        Ok(())
    } else {
        Err(Error::Symmetry { spec: ring.spec_string(), p })
    }
}

/// Connectivity of `G_{R_i}(p)` for one local factor.
fn local_connected(f: &LocalRing, p: u64) -> (bool, String) {
    let l = f.residue_char();
    let q = f.residue_field_size();
    if l != p {
        if !(q - 1).is_multiple_of(p) {
            return (true, format!("{f}: p ∤ {}, residue graph complete", q - 1));
        }
        let k = (q - 1) / p;
        let ok = is_primitive_divisor(k, l, f.residue_degree());
        let verdict = if ok { "is" } else { "is not" };
        (ok, format!("{f}: {k} {verdict} a primitive divisor of {l}^{} - 1", f.residue_degree()))
    } else {
        let ok = maximal_ideal_is_pr(f, p);
        let verdict = if ok { "M = pR" } else { "M ≠ pR" };
        (ok, format!("{f}: {verdict}"))
    }
}

fn maximal_ideal_is_pr(f: &LocalRing, p: u64) -> bool {
    let r = FiniteRing::local(f.clone());
    // pR ⊆ M always, so equal sizes mean equal sets.
    r.scalar_ideal(p as i64).len() as u64 == f.maximal_ideal_size()
}

fn p_squared_vanishes(f: &LocalRing, p: u64) -> bool {
    FiniteRing::local(f.clone()).scalar_ideal((p * p) as i64).is_zero()
}

/// Connectivity via the residue-field criterion (residue characteristic
/// `≠ p`), `M = pR` (residue characteristic `p`), and Weichsel's theorem
/// for products: all factors connected and at most one of them bipartite.
pub fn predict_connected(ring: &FiniteRing, p: u64) -> Result<Prediction> {
    require_symmetric(ring, p)?;
    let mut clauses = Vec::new();
    let mut all = true;
    for f in ring.factors() {
        let (ok, clause) = local_connected(f, p);
        all &= ok;
        clauses.push(clause);
    }
    if ring.factor_count() == 1 || !all {
        return Ok(Prediction { value: all, clauses });
    }
    let mut bipartite = 0;
    for i in 0..ring.factor_count() {
        if build_graph(&ring.factor_ring(i), p)?.graph().is_bipartite() {
            bipartite += 1;
        }
    }
    clauses.push(format!("Weichsel: {bipartite} bipartite factor(s)"));
    Ok(Prediction { value: bipartite <= 1, clauses })
}

/// Anticonnectivity: always for `d >= 2`; for a local ring with residue field
/// `F_q` of characteristic `≠ p`, exactly when `p | q - 1`; for residue
/// characteristic `p`, exactly when `R` is not a field (or the graph is
/// disconnected, whose complement is then connected).
pub fn predict_anticonnected(ring: &FiniteRing, p: u64) -> Result<Prediction> {
    require_symmetric(ring, p)?;
    if ring.factor_count() >= 2 {
        return Ok(Prediction {
            value: true,
            clauses: vec!["d >= 2: tensor products are anticonnected".into()],
        });
    }
    let f = &ring.factors()[0];
    let q = f.residue_field_size();
    if f.residue_char() != p {
        let value = (q - 1).is_multiple_of(p);
        let clause = if value {
            format!("p | {}: residue graph not complete", q - 1)
        } else {
            format!("p ∤ {}: complement splits into cosets of M", q - 1)
        };
        Ok(Prediction { value, clauses: vec![clause] })
    } else {
        let (connected, _) = local_connected(f, p);
        let value = !connected || !f.is_field();
        let clause = match (connected, f.is_field()) {
            (false, _) => "disconnected, so the complement is connected".to_string(),
            (true, true) => "field of characteristic p: complete graph".to_string(),
            (true, false) => "connected and not a field".to_string(),
        };
        Ok(Prediction { value, clauses: vec![clause] })
    }
}

/// The ideal `∏ J_i` with `J_i = M_i` (residue characteristic `≠ p`) or
/// `p²R_i` (residue characteristic `p`). It is always homogeneous.
fn radical_candidate(ring: &FiniteRing, p: u64) -> Ideal {
    let parts: Vec<Vec<u64>> = ring
        .factors()
        .iter()
        .map(|f| {
            let r = FiniteRing::local(f.clone());
            let ideal = if f.residue_char() == p {
                r.scalar_ideal((p * p) as i64)
            } else {
                r.maximal_ideal().expect("local")
            };
            ideal.members().iter().map(|e| e.0 as u64).collect()
        })
        .collect();
    ring.product_ideal("J", &parts)
}

/// The component of 0: the additive subgroup generated by `S`.
fn zero_component(ring: &FiniteRing, p: u64) -> Result<Vec<u32>> {
    let s = ring.units_pth_powers(p)?;
    let mut seen = vec![false; ring.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([Elem(0)]);
    while let Some(a) = queue.pop_front() {
        for &g in s.members() {
            let b = ring.add(a, g);
            if !seen[b.index()] {
                seen[b.index()] = true;
                queue.push_back(b);
            }
        }
    }
    Ok((0..ring.len() as u32).filter(|&i| seen[i as usize]).collect())
}

enum Cert {
    Radical,
    Component,
    Pair,
}

/// Primality of `G_R(p)` from the ring structure.
///
/// * `|R| = 2`: prime (no subset can be non-trivial).
/// * local, residue characteristic `ℓ ≠ p`: prime iff `R = F_q`, `p | q - 1`
///   and `(q-1)/p` is a primitive divisor of `q - 1`.
/// * local, residue characteristic `p`: prime iff `R` is not a field,
///   `M = pR` and `p²R = 0`.
/// * `d >= 2`: every factor graph connected, `G_R(p)` connected, factors of
///   residue characteristic `≠ p` are fields, and the others satisfy
///   `M_i = pR_i`, `p²R_i = 0` (for `p = 2`: at most one `F_2` factor and
///   every factor a field).
pub fn predict_prime(ring: &FiniteRing, p: u64) -> Result<PrimalityVerdict> {
    require_symmetric(ring, p)?;
    let n = ring.len();
    if n == 2 {
        let mut v = PrimalityVerdict::prime(Method::Theorem, "|V| = 2");
        v.clauses.push("|V| = 2: no non-trivial vertex subsets".into());
        return Ok(v);
    }
    let mut clauses = Vec::new();
    let mut failures: Vec<Cert> = Vec::new();
    let citation;

    if ring.is_local() {
        let f = &ring.factors()[0];
        let q = f.residue_field_size();
        if f.residue_char() != p {
            citation = "local ring, residue characteristic ≠ p";
            check(&mut clauses, &mut failures, f.is_field(), "R is a field", Cert::Radical);
            check(&mut clauses, &mut failures, (q - 1).is_multiple_of(p), &format!("p | {}", q - 1), Cert::Pair);
            if (q - 1).is_multiple_of(p) {
                let k = (q - 1) / p;
                let primitive = is_primitive_divisor(k, f.residue_char(), f.residue_degree());
                check(&mut clauses, &mut failures, primitive, &format!("{k} † {}", q - 1), Cert::Component);
            }
        } else {
            citation = "local ring, residue characteristic p";
            check(&mut clauses, &mut failures, !f.is_field(), "R is not a field", Cert::Pair);
            check(&mut clauses, &mut failures, maximal_ideal_is_pr(f, p), "M = pR", Cert::Component);
            check(&mut clauses, &mut failures, p_squared_vanishes(f, p), "p²R = 0", Cert::Radical);
        }
    } else if p == 2 {
        citation = "product ring, p = 2";
        let f2 = ring.factors().iter().filter(|f| f.size() == 2).count();
        check(&mut clauses, &mut failures, f2 <= 1, "at most one factor is F_2", Cert::Component);
        for f in ring.factors() {
            check(&mut clauses, &mut failures, f.is_field(), &format!("{f} is a field"), Cert::Radical);
        }
    } else {
        citation = "product ring";
        let mut factors_connected = true;
        for f in ring.factors() {
            factors_connected &= local_connected(f, p).0;
        }
        check(&mut clauses, &mut failures, factors_connected, "every G_{R_i}(p) connected", Cert::Component);
        let whole = predict_connected(ring, p)?.value;
        check(&mut clauses, &mut failures, whole, "G_R(p) connected", Cert::Component);
        for f in ring.factors() {
            if f.residue_char() != p {
                check(&mut clauses, &mut failures, f.is_field(), &format!("{f} is a field"), Cert::Radical);
            } else {
                let ok = maximal_ideal_is_pr(f, p) && p_squared_vanishes(f, p);
                check(&mut clauses, &mut failures, ok, &format!("{f}: M = pR and p²R = 0"), Cert::Radical);
            }
        }
    }

    if failures.is_empty() {
        let mut v = PrimalityVerdict::prime(Method::Theorem, citation);
        v.clauses = clauses;
        return Ok(v);
    }
    let mut certificate = None;
    for kind in failures {
        let set = match kind {
            Cert::Radical => radical_candidate(ring, p).vertices(),
            Cert::Component => zero_component(ring, p)?,
            Cert::Pair => vec![0, 1],
        };
        if is_nontrivial(set.len(), n) {
            certificate = Some(set);
            break;
        }
    }
    if certificate.is_none() {
        return Err(Error::Falsified(format!(
            "no non-trivial certificate for failed clauses on {ring}, p = {p}"
        )));
    }
    Ok(PrimalityVerdict {
        is_prime: false,
        certificate,
        method: Method::Theorem,
        citation: citation.into(),
        clauses,
    })
}

fn check(clauses: &mut Vec<String>, failures: &mut Vec<Cert>, ok: bool, what: &str, cert: Cert) {
    clauses.push(format!("{what}: {}", if ok { "yes" } else { "no" }));
    if !ok {
        failures.push(cert);
    }
}

/// The largest proper ideal that is a homogeneous set: `M_i` on factors of
/// residue characteristic `≠ p`, `p²R_i` on the others, combined factor-wise.
/// The result is re-checked against the graph.
pub fn homogeneous_ideal_search(ring: &FiniteRing, p: u64) -> Result<Ideal> {
    let ideal = radical_candidate(ring, p);
    let g = build_graph(ring, p)?;
    let report = is_homogeneous_set(g.graph(), &ideal.vertices())?;
    if !report.is_homogeneous {
        return Err(Error::Falsified(format!(
            "ideal J of {ring} is not homogeneous in G_R({p}); witness {:?}",
            report.witness
        )));
    }
    Ok(ideal)
}

//! Theorem-vs-oracle sweeps over ring corpora.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    is_homogeneous_set, is_nontrivial, is_prime_graph_oracle_transitive, predict_anticonnected,
    predict_connected, predict_prime,
};
use crate::arith::{prime_power, primes_below};
use crate::cayley::build_graph;
use crate::error::{Error, Result};
use crate::ring::{parse_ring_spec, FiniteRing};

/// Local rings of the default corpus: `Z/p^k <= 729` for `p` in {2,3,5,7},
/// every field of order `<= 256`, and `GR(p^2, r) <= 625`. Duplicates are
/// dropped and the order is stable.
pub fn default_local_corpus() -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: String| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    for p in [2u64, 3, 5, 7] {
        let mut q = p;
        while q <= 729 {
            push(format!("Z/{q}"));
            q *= p;
        }
    }
    for q in 2..=256u64 {
        if let Some((l, m)) = prime_power(q) {
            push(if m == 1 { format!("Z/{l}") } else { format!("F({l},{m})") });
        }
    }
    for l in primes_below(26) {
        let q = l * l;
        push(format!("Z/{q}"));
        let mut r = 2;
        while q.pow(r) <= 625 {
            push(format!("GR({q},{r})"));
            r += 1;
        }
    }
    out
}

/// The local corpus plus every product `A x B` (A before or equal to B in
/// corpus order) with `|A||B| <= 1024`.
pub fn default_corpus() -> Vec<String> {
    let locals = default_local_corpus();
    let sizes: Vec<u64> = locals
        .iter()
        .map(|s| parse_ring_spec(s).expect("corpus ring").size())
        .collect();
    let mut out = locals.clone();
    for i in 0..locals.len() {
        for j in i..locals.len() {
            if sizes[i] * sizes[j] <= 1024 {
                out.push(format!("{} x {}", locals[i], locals[j]));
            }
        }
    }
    out
}

/// Resolve a named corpus: `default`, `local`, `fields`, `integers`,
/// `galois`, or a comma-separated list of ring specs.
pub fn named_corpus(name: &str) -> Result<Vec<String>> {
    let locals = default_local_corpus;
    Ok(match name {
        "default" => default_corpus(),
        "local" => locals(),
        "fields" => locals()
            .into_iter()
            .filter(|s| parse_ring_spec(s).map(|r| r.is_field()).unwrap_or(false))
            .collect(),
        "integers" => locals().into_iter().filter(|s| s.starts_with("Z/")).collect(),
        "galois" => locals().into_iter().filter(|s| s.starts_with("GR(")).collect(),
        other => split_spec_list(other),
    })
}

/// Split a comma-separated list of ring specs, keeping commas inside
/// parentheses (as in `F(13,1)`).
pub fn split_spec_list(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in list.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out.retain(|s| !s.is_empty());
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub spec: String,
    pub p: u64,
    pub vertices: usize,
    pub degree: usize,
    pub components: usize,
    pub connected: bool,
    pub anticonnected: bool,
    pub bipartite: bool,
    pub predicted_connected: bool,
    pub predicted_anticonnected: bool,
    pub prime_theorem: bool,
    pub prime_oracle: bool,
    pub certificate: Option<Vec<u32>>,
    pub oracle_certificate: Option<Vec<u32>>,
    pub clauses_fired: Vec<String>,
    pub mismatches: Vec<String>,
}

pub const CSV_HEADER: [&str; 11] = [
    "spec",
    "p",
    "|V|",
    "degree",
    "components",
    "anticonnected",
    "bipartite",
    "prime_theorem",
    "prime_oracle",
    "certificate",
    "clauses_fired",
];

fn join_u32(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

impl Analysis {
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.spec.clone(),
            self.p.to_string(),
            self.vertices.to_string(),
            self.degree.to_string(),
            self.components.to_string(),
            self.anticonnected.to_string(),
            self.bipartite.to_string(),
            self.prime_theorem.to_string(),
            self.prime_oracle.to_string(),
            self.certificate.as_deref().map(join_u32).unwrap_or_default(),
            self.clauses_fired.join("; "),
        ]
    }
}

/// Build `G_R(p)`, measure it, and compare every prediction with the graph.
pub fn analyze(ring: &FiniteRing, p: u64) -> Result<Analysis> {
    let cg = build_graph(ring, p)?;
    let g = cg.graph();
    let n = g.vertex_count();
    let components = g.components().len();
    let anticonnected = g.is_anticonnected();
    let conn = predict_connected(ring, p)?;
    let anti = predict_anticonnected(ring, p)?;
    let theorem = predict_prime(ring, p)?;
    let oracle = is_prime_graph_oracle_transitive(g);

    let mut mismatches = Vec::new();
    if conn.value != (components == 1) {
        mismatches.push(format!("connected: predicted {}, found {components} component(s)", conn.value));
    }
    if anti.value != anticonnected {
        mismatches.push(format!("anticonnected: predicted {}, found {anticonnected}", anti.value));
    }
    if theorem.is_prime != oracle.is_prime {
        mismatches.push(format!("prime: theorem {}, oracle {}", theorem.is_prime, oracle.is_prime));
    }
    for (who, cert) in [("theorem", &theorem.certificate), ("oracle", &oracle.certificate)] {
        if let Some(c) = cert {
            let ok = is_nontrivial(c.len(), n) && is_homogeneous_set(g, c)?.is_homogeneous;
            if !ok {
                mismatches.push(format!("{who} certificate fails"));
            }
        }
    }
    if theorem.is_prime && n > 2 && !(conn.value && anticonnected) {
        mismatches.push("prime but not connected and anticonnected".into());
    }

    let mut clauses = conn.clauses;
    clauses.extend(anti.clauses);
    clauses.extend(theorem.clauses);
    Ok(Analysis {
        spec: ring.spec_string(),
        p,
        vertices: n,
        degree: cg.degree(),
        components,
        connected: components == 1,
        anticonnected,
        bipartite: g.is_bipartite(),
        predicted_connected: conn.value,
        predicted_anticonnected: anti.value,
        prime_theorem: theorem.is_prime,
        prime_oracle: oracle.is_prime,
        certificate: theorem.certificate,
        oracle_certificate: oracle.certificate,
        clauses_fired: clauses,
        mismatches,
    })
}

/// Every admissible `(spec, p)` pair (those with `-1` a `p`-th power), in
/// corpus order then prime order.
pub fn admissible_pairs(specs: &[String], primes: &[u64], limit: u64) -> Result<Vec<(FiniteRing, u64)>> {
    let mut out = Vec::new();
    for s in specs {
        let ring = crate::ring::parse_ring_spec_with_limit(s, limit)?;
        for &p in primes {
            if ring.is_minus_one_pth_power(p)? {
                out.push((ring.clone(), p));
            }
        }
    }
    Ok(out)
}

/// Analyze every admissible pair in parallel; rows come back in input order.
pub fn cross_validate(specs: &[String], primes: &[u64]) -> Result<Vec<Analysis>> {
    let pairs = admissible_pairs(specs, primes, crate::ring::DEFAULT_MAX_RING_SIZE)?;
    pairs.par_iter().map(|(r, p)| analyze(r, *p)).collect()
}

/// Exhaustive homogeneity checks on a local ring:
/// `M` homogeneous when the residue characteristic is not `p`; `p²R`
/// homogeneous when it is; and, if also `M = pR`, `(a + S) ∩ S = ∅` for
/// every `a ∈ M \ M²`.
#[derive(Debug, Clone, Serialize)]
pub struct HomogeneityCheck {
    pub spec: String,
    pub p: u64,
    pub ideal: String,
    pub ideal_size: usize,
    pub homogeneous: bool,
    /// Number of `a ∈ M \ M²` tested for disjoint translates (0 if skipped).
    pub translates_checked: usize,
    pub translate_violations: Vec<u32>,
}

impl HomogeneityCheck {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.translate_violations.is_empty()
    }
}

pub fn homogeneity_check(ring: &FiniteRing, p: u64) -> Result<HomogeneityCheck> {
    if !ring.is_local() {
        return Err(Error::NotLocal(ring.spec_string()));
    }
    let f = &ring.factors()[0];
    let cg = build_graph(ring, p)?;
    let (name, ideal) = if f.residue_char() == p {
        ("p²R", ring.scalar_ideal((p * p) as i64))
    } else {
        ("M", ring.maximal_ideal()?)
    };
    let homogeneous = is_homogeneous_set(cg.graph(), &ideal.vertices())?.is_homogeneous;

    let mut translates_checked = 0;
    let mut translate_violations = Vec::new();
    let m = ring.maximal_ideal()?;
    if f.residue_char() == p && ring.scalar_ideal(p as i64).len() == m.len() {
        let m2 = ring.scalar_ideal((p * p) as i64);
        let s = cg.connection_set();
        for &a in m.members() {
            if m2.contains(a) {
                continue;
            }
            translates_checked += 1;
            if s.members().iter().any(|&x| s.contains(ring.add(a, x))) {
                translate_violations.push(a.0);
            }
        }
    }
    Ok(HomogeneityCheck {
        spec: ring.spec_string(),
        p,
        ideal: name.into(),
        ideal_size: ideal.len(),
        homogeneous,
        translates_checked,
        translate_violations,
    })
}

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::character::{CharValue, CharacterTable};
use crate::arith::{is_prime, pow_mod, primes_below};
use crate::cayley::build_graph;
use crate::error::{Error, Result};
use crate::graph::PlainGraph;
use crate::ring::{Elem, FiniteRing, LocalRing};

/// Targets up to this size are matched under every vertex ordering; larger
/// ones only in their given order.
pub const MAX_REORDERED_TARGET: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingWitness {
    pub ell: u64,
    pub p: u64,
    /// `a_i = 2^(i-1)`.
    pub exponents: Vec<u64>,
    /// `order[i]` is the target vertex sent to `y^(a_i)`.
    pub order: Vec<u32>,
    pub y: u64,
    pub images: Vec<u64>,
    pub verified: bool,
    /// Number of non-adjacent target pairs.
    pub non_edges: usize,
    /// Number of target pairs.
    pub pairs: usize,
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pattern(target: &PlainGraph, order: &[u32]) -> u64 {
    let n = order.len();
    let mut mask = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if target.has_edge(order[i], order[j]) {
                mask |= 1 << pair_index(i, j, n);
            }
        }
    }
    mask
}

/// Adjacency pattern of every vertex ordering, mapped to the
/// lexicographically least ordering that produces it.
fn orderings(target: &PlainGraph) -> HashMap<u64, Vec<u32>> {
    let n = target.vertex_count();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut out = HashMap::new();
    if n > MAX_REORDERED_TARGET {
        out.insert(pattern(target, &perm), perm);
        return out;
    }
    loop {
        out.entry(pattern(target, &perm)).or_insert_with(|| perm.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// Search `y ∈ F_ℓ^×` with `χ(y) = 1` such that `y^(a_i)` (`a_i = 2^(i-1)`)
/// induce a copy of `target` in `G_{F_ℓ}(p)`: `χ(y^(a_j - a_i) - 1) = 1`
/// exactly on target edges. Values of `y` with some `y^(a_j - a_i) = 1` are
/// skipped. Every ordering of the target vertices is tried for each `y`
/// (least `y` first); the hit is re-checked against the connection set.
pub fn embed_induced_subgraph(target: &PlainGraph, ell: u64, p: u64) -> Result<Option<EmbeddingWitness>> {
    let n = target.vertex_count();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > 64 || n * (n - 1) / 2 > 64 {
        return Err(Error::Precondition(format!("target with {n} vertices is too large")));
    }
    if !is_prime(ell) || ell == p || !(ell - 1).is_multiple_of(p) {
        return Err(Error::Precondition(format!("need a prime ℓ ≠ {p} with {p} | ℓ - 1, got {ell}")));
    }
    let field = FiniteRing::local(LocalRing::field(ell, 1, ell)?);
    let table = CharacterTable::new(&field, p)?;
    let exponents: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let patterns = orderings(target);

    let hit = (1..ell).into_par_iter().find_map_first(|y| {
        if !table.chi(Elem(y as u32)).is_one() {
            return None;
        }
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let d = pow_mod(y, exponents[j] - exponents[i], ell);
                if d == 1 {
                    return None;
                }
                if table.chi(Elem((d - 1) as u32)) == CharValue::Root(0) {
                    mask |= 1 << pair_index(i, j, n);
                }
            }
        }
        patterns.get(&mask).map(|order| (y, order.clone()))
    });
    let Some((y, order)) = hit else {
        return Ok(None);
    };
    let images: Vec<u64> = exponents.iter().map(|&a| pow_mod(y, a, ell)).collect();
    let verified = verify(&field, p, target, &order, &images)?;
    if !verified {
        return Err(Error::Falsified(format!("embedding at ℓ = {ell}, y = {y} fails re-check")));
    }
    let pairs = n * (n - 1) / 2;
    Ok(Some(EmbeddingWitness {
        ell,
        p,
        exponents,
        order,
        y,
        images,
        verified,
        non_edges: pairs - target.edge_count(),
        pairs,
    }))
}

fn verify(field: &FiniteRing, p: u64, target: &PlainGraph, order: &[u32], images: &[u64]) -> Result<bool> {
    let s = field.units_pth_powers(p)?;
    let n = images.len();
    for i in 0..n {
        for j in i + 1..n {
            if images[i] == images[j] {
                return Ok(false);
            }
            let diff = field.sub(Elem(images[j] as u32), Elem(images[i] as u32));
            if s.contains(diff) != target.has_edge(order[i], order[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First prime `ℓ <= ell_max` (ascending, `ℓ ≡ 1 mod p`, `G_{F_ℓ}(p)`
/// undirected) admitting an embedding of `target`.
pub fn embed_sweep(target: &PlainGraph, p: u64, ell_max: u64) -> Result<Option<EmbeddingWitness>> {
    for ell in primes_below(ell_max + 1) {
        if ell == p || (ell - 1) % p != 0 || (p == 2 && ell % 4 != 1) {
            continue;
        }
        if let Some(w) = embed_induced_subgraph(target, ell, p)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteRow {
    pub m: u32,
    pub q: u64,
    pub connected: bool,
    pub bipartite: bool,
}

impl BipartiteRow {
    /// Connected and bipartite; disconnected bipartite cases (such as the
    /// perfect matching when `S = {1}`) do not count.
    pub fn is_hit(&self) -> bool {
        self.connected && self.bipartite
    }
}

/// Connectivity and bipartiteness of `G_{F_{2^m}}(p)` for `2 <= m <= m_max`.
pub fn bipartite_char2_sweep(p: u64, m_max: u32, limit: u64) -> Result<Vec<BipartiteRow>> {
    if p == 2 {
        return Err(Error::Precondition("p must be odd in characteristic 2".into()));
    }
    (2..=m_max)
        .map(|m| {
            let field = FiniteRing::local(LocalRing::field(2, m, limit)?);
            let g = build_graph(&field, p)?;
            Ok(BipartiteRow {
                m,
                q: field.size(),
                connected: g.graph().is_connected(),
                bipartite: g.graph().is_bipartite(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orderings_are_deduplicated() {
        let pats = orderings(&PlainGraph::cycle(5));
        assert_eq!(pats.len(), 12);
        assert_eq!(pats.get(&pattern(&PlainGraph::cycle(5), &[0, 1, 2, 3, 4])), Some(&vec![0, 1, 2, 3, 4]));
        assert_eq!(orderings(&PlainGraph::complete(4)).len(), 1);
    }

    #[test]
    fn small_embeddings() {
        let w = embed_induced_subgraph(&PlainGraph::empty(1), 13, 3).unwrap().unwrap();
        assert_eq!((w.y, w.images.clone()), (1, vec![1]));
        // {y, y^2} with y a cube is an edge only if y - 1 is a cube too, which
        // would put a triangle {0, 1, y} in the triangle-free G_{F_13}(3).
        assert!(embed_induced_subgraph(&PlainGraph::complete(2), 13, 3).unwrap().is_none());
        let w = embed_sweep(&PlainGraph::complete(2), 3, 100).unwrap().unwrap();
        assert!(w.verified && w.ell > 13);
        let w = embed_induced_subgraph(&PlainGraph::empty(2), 13, 3).unwrap().unwrap();
        assert_eq!(w.images, vec![w.y, w.y * w.y % 13]);
        assert!(embed_induced_subgraph(&PlainGraph::complete(2), 11, 3).is_err());
    }

    #[test]
    fn five_cycle() {
        let w = embed_sweep(&PlainGraph::cycle(5), 3, 200).unwrap().unwrap();
        assert_eq!((w.ell, w.y), (151, 65));
        assert_eq!(w.order, vec![0, 1, 3, 2, 4]);
        assert_eq!((w.non_edges, w.pairs), (5, 10));
    }

    #[test]
    fn characteristic_two() {
        let rows = bipartite_char2_sweep(3, 8, 1 << 20).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(rows[0].bipartite && !rows[0].connected);
        assert!(rows[1..].iter().all(|r| !r.bipartite));
        assert!(!rows.iter().any(BipartiteRow::is_hit));
    }
}

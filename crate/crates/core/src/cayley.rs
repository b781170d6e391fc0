//! The p-unitary Cayley graph `G_R(p)`: vertices are ring elements, and
//! `a ~ b` exactly when `a - b` is a `p`-th power of a unit.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PlainGraph;
use crate::ring::{DifferenceSet, Elem, FiniteRing, LocalRing};

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    ring: FiniteRing,
    connection: DifferenceSet,
    graph: PlainGraph,
}

/// Builds `G_R(p)`. Fails with [`Error::Symmetry`] when `-1 ∉ (R^×)^p`.
pub fn build_graph(ring: &FiniteRing, p: u64) -> Result<CayleyGraph> {
    let connection = ring.units_pth_powers(p)?;
    if !connection.is_symmetric() {
        return Err(Error::Symmetry { spec: ring.spec_string(), p });
    }
    let adj = ring
        .elements()
        .map(|a| {
            let mut row: Vec<u32> =
                connection.members().iter().map(|&s| ring.add(a, s).0).collect();
            row.sort_unstable();
            row
        })
        .collect();
    let labels = ring.elements().map(|a| ring.label(a)).collect();
    let graph = PlainGraph::from_sorted_adjacency(adj).with_labels(labels);
    Ok(CayleyGraph { ring: ring.clone(), connection, graph })
}

#[derive(Serialize)]
struct JsonExport<'a> {
    spec: String,
    p: u64,
    n: usize,
    degree: usize,
    labels: &'a [String],
    adjacency: Vec<&'a [u32]>,
}

impl CayleyGraph {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn p(&self) -> u64 {
        self.connection.p()
    }

    pub fn connection_set(&self) -> &DifferenceSet {
        &self.connection
    }

    pub fn graph(&self) -> &PlainGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// `|S|`; the graph is regular of this degree.
    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn adjacent(&self, a: Elem, b: Elem) -> bool {
        self.connection.contains(self.ring.sub(a, b))
    }

    pub fn title(&self) -> String {
        format!("G_{{{}}}({})", self.ring.spec_string(), self.p())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.title());
        let labels = self.graph.labels().unwrap_or_default();
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", labels[v]);
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let export = JsonExport {
            spec: self.ring.spec_string(),
            p: self.p(),
            n: self.vertex_count(),
            degree: self.degree(),
            labels: self.graph.labels().unwrap_or_default(),
            adjacency: (0..self.vertex_count() as u32).map(|v| self.graph.neighbors(v)).collect(),
        };
        let mut s = serde_json::to_string(&export).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_edge_list(&self) -> String {
        self.graph.to_edge_list()
    }
}

/// The canonical map behind `G_R(p) ≅ G_{R/p²R}(p) · E_n`, `n = |p²R|`, for a
/// local ring of residue characteristic `p`: each element goes to its
/// reduction mod `p²` and the index of its `p²R`-coset among elements with
/// that reduction.
#[derive(Debug, Clone)]
pub struct WreathDecomposition {
    pub quotient: FiniteRing,
    pub blocks: usize,
    /// `image[a] = (a mod p²R, block index)`.
    pub image: Vec<(Elem, u32)>,
}

pub fn wreath_decomposition(ring: &FiniteRing, p: u64) -> Result<WreathDecomposition> {
    if !ring.is_local() {
        return Err(Error::NotLocal(ring.spec_string()));
    }
    let local: &LocalRing = &ring.factors()[0];
    if local.residue_char() != p {
        return Err(Error::Precondition(format!(
            "residue characteristic of {ring} is not {p}"
        )));
    }
    let quotient_local = local.truncated(2);
    let quotient = FiniteRing::local(quotient_local.clone());
    let small = quotient_local.characteristic();
    let high = local.characteristic() / small;
    let blocks = (high.pow(local.residue_degree())) as usize;
    let image = ring
        .elements()
        .map(|a| {
            let coeffs = local.coeffs(a.0 as u64);
            let low: Vec<u64> = coeffs.iter().map(|c| c % small).collect();
            let block = coeffs.iter().rev().fold(0u64, |acc, c| acc * high + c / small);
            (Elem(quotient_local.encode(&low) as u32), block as u32)
        })
        .collect();
    Ok(WreathDecomposition { quotient, blocks, image })
}

impl WreathDecomposition {
    /// Vertex numbering used by [`PlainGraph::wreath_product`].
    pub fn vertex_map(&self) -> Vec<u32> {
        self.image
            .iter()
            .map(|&(q, b)| q.0 * self.blocks as u32 + b)
            .collect()
    }
}

/// Checks `G_R(p) ≅ G_{R/p²R}(p) · E_n` by exact edge-set equality under the
/// canonical map.
pub fn verify_wreath_decomposition(ring: &FiniteRing, p: u64) -> Result<bool> {
    let decomposition = wreath_decomposition(ring, p)?;
    let big = build_graph(ring, p)?;
    let small = build_graph(&decomposition.quotient, p)?;
    let expected = small.graph().wreath_product(&PlainGraph::empty(decomposition.blocks));
    Ok(big.graph().relabeled(&decomposition.vertex_map())? == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring_spec;

    fn graph(spec: &str, p: u64) -> CayleyGraph {
        build_graph(&parse_ring_spec(spec).unwrap(), p).unwrap()
    }

    #[test]
    fn regular_of_connection_set_degree() {
        for (spec, p, deg) in [("F(13,1)", 3, 4), ("Z/25", 5, 4), ("F(2,4)", 5, 3), ("Z/9", 3, 2)] {
            let g = graph(spec, p);
            assert_eq!(g.graph().regular_degree(), Some(deg), "{spec}");
            assert_eq!(g.degree(), deg);
            for v in 0..g.vertex_count() as u32 {
                assert!(!g.graph().has_edge(v, v));
                for &w in g.graph().neighbors(v) {
                    assert!(g.graph().has_edge(w, v));
                    assert!(g.adjacent(Elem(v), Elem(w)));
                }
            }
        }
    }

    #[test]
    fn rejects_directed_case() {
        let r = parse_ring_spec("Z/8").unwrap();
        assert!(matches!(build_graph(&r, 2), Err(Error::Symmetry { .. })));
    }

    #[test]
    fn components_and_bipartiteness() {
        assert_eq!(graph("F(2,4)", 5).graph().components().len(), 4);
        assert!(graph("F(13,1)", 3).graph().is_connected());
        assert!(graph("Z/27", 3).graph().is_connected());
        assert!(graph("F(2,1)", 2).graph().is_bipartite());
        assert!(!graph("F(13,1)", 3).graph().is_bipartite());
        assert!(!graph("Z/9", 3).graph().is_bipartite());
        assert!(graph("Z/9", 3).graph().is_anticonnected());
        assert!(!graph("F(5,1)", 3).graph().is_anticonnected());
        assert!(graph("Z/12", 5).graph().is_anticonnected());
    }

    #[test]
    fn induced_path_in_f13() {
        let g = graph("F(13,1)", 3);
        let sub = g.graph().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub, PlainGraph::path(3));
    }

    #[test]
    fn exports() {
        let g = graph("F(13,1)", 3);
        let dot = g.to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 26);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 13);
        assert_eq!(graph("Z/25", 5).to_edge_list().lines().count(), 50);
        let json: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(json["degree"], 4);
        assert_eq!(json["adjacency"][0], serde_json::json!([1, 5, 8, 12]));
    }

    #[test]
    fn translations_are_automorphisms() {
        for (spec, p) in [("Z/4 x F(2,2)", 3), ("GR(9,2)", 3), ("Z/49", 7)] {
            let g = graph(spec, p);
            let r = g.ring();
            for t in r.elements().step_by(5) {
                let perm: Vec<u32> = r.elements().map(|a| r.add(a, t).0).collect();
                assert_eq!(g.graph().relabeled(&perm).unwrap(), *g.graph());
            }
        }
    }

    #[test]
    fn wreath_decompositions() {
        for (spec, p) in [("Z/125", 5), ("Z/27", 3), ("GR(27,2)", 3), ("Z/25", 5), ("Z/343", 7)] {
            assert!(verify_wreath_decomposition(&parse_ring_spec(spec).unwrap(), p).unwrap(), "{spec}");
        }
        let d = wreath_decomposition(&parse_ring_spec("Z/125").unwrap(), 5).unwrap();
        assert_eq!(d.blocks, 5);
        assert_eq!(d.image[77], (Elem(2), 3));
    }
}

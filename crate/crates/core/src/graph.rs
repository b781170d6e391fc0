//! Simple undirected graphs on vertices `0..n` with sorted adjacency lists,
//! plus the products and traversals the rest of the crate needs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Eq)]
pub struct PlainGraph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

/// Equality is on the labelled edge set; vertex labels are decoration.
impl PartialEq for PlainGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl PlainGraph {
    pub fn empty(n: usize) -> Self {
        PlainGraph { adj: vec![Vec::new(); n], labels: None }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n as u32)
            .map(|v| (0..n as u32).filter(|&u| u != v).collect())
            .collect();
        PlainGraph { adj, labels: None }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n as u32).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_edges(n, (0..n as u32).map(|v| (v, (v + 1) % n as u32))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a as u32).flat_map(|u| (a as u32..(a + b) as u32).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).unwrap()
    }

    /// Builds a simple graph; duplicate edges collapse, self-loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::GraphParse(format!("self-loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(PlainGraph { adj, labels: None })
    }

    /// Takes adjacency lists that are already sorted and symmetric.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Self {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        PlainGraph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.adj.len());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u as u32).map(move |&v| (u as u32, v)))
    }

    pub fn adjacency_rows(&self) -> Vec<FixedBitSet> {
        let n = self.vertex_count();
        self.adj
            .iter()
            .map(|l| {
                let mut row = FixedBitSet::with_capacity(n);
                for &v in l {
                    row.insert(v as usize);
                }
                row
            })
            .collect()
    }

    pub(crate) fn check_vertices(&self, vs: &[u32]) -> Result<()> {
        let n = self.vertex_count();
        match vs.iter().find(|&&v| v as usize >= n) {
            Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }),
            None => Ok(()),
        }
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start as u32];
            let mut queue = VecDeque::from([start as u32]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring by BFS.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start as u32]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v as usize].unwrap();
                for &w in self.neighbors(v) {
                    match colour[w as usize] {
                        None => {
                            colour[w as usize] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Connectivity of the complement, by BFS over non-neighbours.
    pub fn is_anticonnected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut unvisited: Vec<u32> = (1..n as u32).collect();
        let mut queue = VecDeque::from([0u32]);
        let mut mark = vec![false; n];
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                mark[w as usize] = true;
            }
            let (keep, reach): (Vec<u32>, Vec<u32>) =
                unvisited.iter().partition(|&&w| mark[w as usize]);
            for &w in self.neighbors(v) {
                mark[w as usize] = false;
            }
            unvisited = keep;
            queue.extend(reach);
            if unvisited.is_empty() {
                return true;
            }
        }
        false
    }

    pub fn complement(&self) -> PlainGraph {
        let n = self.vertex_count() as u32;
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        PlainGraph { adj, labels: self.labels.clone() }
    }

    /// The subgraph induced on `vertices`, renumbered in ascending order of
    /// the original indices; labels record the original index (or label).
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Result<PlainGraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_vertices(vertices)?;
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let pos = |v: u32| vs.binary_search(&v).ok().map(|i| i as u32);
        let adj = vs
            .iter()
            .map(|&v| self.neighbors(v).iter().filter_map(|&w| pos(w)).collect())
            .collect();
        let labels = vs
            .iter()
            .map(|&v| match &self.labels {
                Some(l) => l[v as usize].clone(),
                None => v.to_string(),
            })
            .collect();
        Ok(PlainGraph { adj, labels: Some(labels) })
    }

    /// Tensor (direct) product; vertex `(g, h)` is numbered `g·|H| + h`.
    pub fn tensor_product(&self, other: &PlainGraph) -> PlainGraph {
        let m = other.vertex_count() as u32;
        let adj = (0..self.vertex_count() as u32)
            .flat_map(|g| (0..m).map(move |h| (g, h)))
            .map(|(g, h)| {
                let mut row: Vec<u32> = self
                    .neighbors(g)
                    .iter()
                    .flat_map(|&g2| other.neighbors(h).iter().map(move |&h2| g2 * m + h2))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        PlainGraph { adj, labels: None }
    }

    /// Wreath (lexicographic) product `Γ·Δ`: `(x,y) ~ (x',y')` iff `x ~ x'`,
    /// or `x = x'` and `y ~ y'`. Vertex `(x, y)` is numbered `x·|Δ| + y`.
    pub fn wreath_product(&self, other: &PlainGraph) -> PlainGraph {
        let m = other.vertex_count() as u32;
        let adj = (0..self.vertex_count() as u32)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .map(|(x, y)| {
                let mut row: Vec<u32> = self
                    .neighbors(x)
                    .iter()
                    .flat_map(|&x2| (0..m).map(move |y2| x2 * m + y2))
                    .chain(other.neighbors(y).iter().map(|&y2| x * m + y2))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        PlainGraph { adj, labels: None }
    }

    /// The image of this graph under the vertex bijection `v ↦ perm[v]`.
    pub fn relabeled(&self, perm: &[u32]) -> Result<PlainGraph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &t in perm {
            if t as usize >= n || std::mem::replace(&mut seen[t as usize], true) {
                return Err(Error::Precondition("relabeling is not a bijection".into()));
            }
        }
        if perm.len() != n {
            return Err(Error::Precondition("relabeling has the wrong length".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut row: Vec<u32> = list.iter().map(|&w| perm[w as usize]).collect();
            row.sort_unstable();
            adj[perm[v] as usize] = row;
        }
        Ok(PlainGraph { adj, labels: None })
    }

    /// One `u v` line per edge (`u < v`), LF-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses `u v` lines. Blank lines and `#` comments are skipped, except
    /// that a `# vertices: N` comment fixes the vertex count (otherwise it is
    /// one more than the largest index seen).
    pub fn parse_edge_list(text: &str) -> Result<PlainGraph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(n) = comment.trim().strip_prefix("vertices:") {
                    declared = Some(n.trim().parse::<usize>().map_err(|_| {
                        Error::GraphParse(format!("line {}: bad vertex count", lineno + 1))
                    })?);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parsed: Option<Vec<u32>> = nums.iter().map(|s| s.parse().ok()).collect();
            match parsed.as_deref() {
                Some(&[u, v]) => edges.push((u, v)),
                _ => return Err(Error::GraphParse(format!("line {}: expected `u v`", lineno + 1))),
            }
        }
        let max_seen = edges.iter().map(|&(u, v)| u.max(v) as usize + 1).max().unwrap_or(0);
        let n = declared.unwrap_or(max_seen);
        if n == 0 {
            return Err(Error::GraphParse("graph has no vertices".into()));
        }
        Self::from_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let k2 = PlainGraph::complete(2);
        let t = k2.tensor_product(&k2);
        assert_eq!((t.vertex_count(), t.edge_count()), (4, 2));
        assert_eq!(t.components().len(), 2);

        let w = k2.wreath_product(&PlainGraph::empty(2));
        assert_eq!(w, PlainGraph::complete_bipartite(2, 2));

        let c5 = PlainGraph::cycle(5);
        assert_eq!(c5.wreath_product(&PlainGraph::empty(1)), c5);
        let e1 = PlainGraph::empty(1).tensor_product(&c5);
        assert_eq!(e1, PlainGraph::empty(5));
    }

    #[test]
    fn complement_and_induced() {
        assert_eq!(PlainGraph::complete(6).complement(), PlainGraph::empty(6));
        let p4 = PlainGraph::path(4);
        assert_eq!(p4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), p4);
        assert_eq!(p4.induced_subgraph(&[0, 2]).unwrap().edge_count(), 0);
        assert!(p4.induced_subgraph(&[]).is_err());
        assert!(p4.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn traversals() {
        assert!(PlainGraph::complete(2).is_bipartite());
        assert!(!PlainGraph::cycle(9).is_bipartite());
        assert!(PlainGraph::cycle(8).is_bipartite());
        assert!(!PlainGraph::complete(5).is_anticonnected());
        assert!(PlainGraph::path(4).is_anticonnected());
        assert!(PlainGraph::cycle(9).is_anticonnected());
        assert!(PlainGraph::empty(3).is_anticonnected());
        assert_eq!(PlainGraph::empty(3).components().len(), 3);
    }

    #[test]
    fn anticonnectivity_matches_explicit_complement() {
        for g in [
            PlainGraph::complete_bipartite(2, 3),
            PlainGraph::cycle(4),
            PlainGraph::cycle(5),
            PlainGraph::complete(4).tensor_product(&PlainGraph::complete(2)),
            PlainGraph::cycle(3).wreath_product(&PlainGraph::empty(3)),
        ] {
            assert_eq!(g.is_anticonnected(), g.complement().is_connected());
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = PlainGraph::cycle(5);
        assert_eq!(PlainGraph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        let h = PlainGraph::parse_edge_list("# vertices: 4\n0 1\n").unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert!(PlainGraph::parse_edge_list("0 x\n").is_err());
        assert!(PlainGraph::parse_edge_list("1 1\n").is_err());
    }
}

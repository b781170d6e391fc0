use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PlainGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneousSetReport {
    pub subset: Vec<u32>,
    pub is_homogeneous: bool,
    /// Least outside vertex adjacent to some but not all of the subset.
    pub witness: Option<u32>,
}

/// `2 <= size < n`.
pub fn is_nontrivial(size: usize, n: usize) -> bool {
    size >= 2 && size < n
}

pub fn is_homogeneous_set(g: &PlainGraph, subset: &[u32]) -> Result<HomogeneousSetReport> {
    if subset.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g.check_vertices(subset)?;
    let mut xs = subset.to_vec();
    xs.sort_unstable();
    xs.dedup();

    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &x in &xs {
        inside[x as usize] = true;
    }
    let mut hits = vec![0usize; n];
    for &x in &xs {
        for &z in g.neighbors(x) {
            hits[z as usize] += 1;
        }
    }
    let witness = (0..n)
        .find(|&z| !inside[z] && hits[z] != 0 && hits[z] != xs.len())
        .map(|z| z as u32);
    Ok(HomogeneousSetReport { subset: xs, is_homogeneous: witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_cases() {
        let p4 = PlainGraph::path(4);
        assert!(is_homogeneous_set(&p4, &[2]).unwrap().is_homogeneous);
        let r = is_homogeneous_set(&p4, &[0, 1]).unwrap();
        assert!(!r.is_homogeneous);
        assert_eq!(r.witness, Some(2));
        assert!(is_homogeneous_set(&PlainGraph::complete(4), &[1, 3]).unwrap().is_homogeneous);
        assert!(is_homogeneous_set(&p4, &[]).is_err());
        assert!(is_homogeneous_set(&p4, &[4]).is_err());
    }
}

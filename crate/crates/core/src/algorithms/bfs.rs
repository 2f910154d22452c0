use crate::algebra::{or_and_bool, Scalar};
use crate::error::Result;
use crate::graphrep::AdjacencyMatrix;
use crate::kernels::{apply, spmv};
use crate::matrix::{transpose, SparseVector};

/// Level of every vertex reachable from the source; the source is level 0.
#[derive(Debug, Clone, PartialEq)]
pub struct BfsResult {
    pub source: usize,
    pub levels: SparseVector<usize>,
}

impl BfsResult {
    pub fn level(&self, vertex: usize) -> Option<usize> {
        self.levels.get(vertex).copied()
    }
}

/// Breadth-first search by repeated `frontier ← Aᵀ · frontier` over
/// `or_and_bool`, dropping already-visited vertices after each product.
pub fn bfs<T: Scalar>(a: &AdjacencyMatrix<T>, source: &str) -> Result<BfsResult> {
    let src = a.vertex(source)?;
    let n = a.vertex_count();
    let s = or_and_bool();
    let expand = transpose(&apply(&a.mat, |_| Some(true)));

    let mut level_of: Vec<Option<usize>> = vec![None; n];
    level_of[src] = Some(0);
    let mut frontier = SparseVector::unit(n, src, true)?;
    let mut depth = 0;
    while frontier.nnz() > 0 {
        depth += 1;
        frontier = spmv(&expand, &frontier, &s)?;
        frontier.retain(|v, _| level_of[v].is_none());
        for &v in frontier.indices() {
            level_of[v] = Some(depth);
        }
    }

    let (indices, values): (Vec<usize>, Vec<usize>) = level_of
        .iter()
        .enumerate()
        .filter_map(|(v, l)| l.map(|l| (v, l)))
        .unzip();
    Ok(BfsResult {
        source: src,
        levels: SparseVector::new(n, indices, values)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::plus_times_i64;
    use crate::graphrep::Edge;

    #[test]
    fn alice_levels() {
        let a = AdjacencyMatrix::from_edges(&[Edge::new("alice", "bob", 1), Edge::new("alice", "carl", 1)], &plus_times_i64()).unwrap();
        let r = bfs(&a, "alice").unwrap();
        assert_eq!(r.levels.iter().map(|(v, &l)| (a.label(v), l)).collect::<Vec<_>>(), vec![("alice", 0), ("bob", 1), ("carl", 1)]);
        // Direction matters: nothing is reachable from bob.
        assert_eq!(bfs(&a, "bob").unwrap().levels.nnz(), 1);
        assert!(bfs(&a, "dave").is_err());
    }

    #[test]
    fn isolated_vertex() {
        let a = AdjacencyMatrix::<i64>::from_vertices_and_edges(["v"], &[], &plus_times_i64()).unwrap();
        let r = bfs(&a, "v").unwrap();
        assert_eq!(r.level(0), Some(0));
        assert_eq!(r.levels.nnz(), 1);
    }
}

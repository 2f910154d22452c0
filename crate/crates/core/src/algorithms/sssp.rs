use crate::algebra::{min_plus_i64, POS_INF};
use crate::error::{Error, Result};
use crate::graphrep::AdjacencyMatrix;
use crate::kernels::{ewise_add, spgemm};
use crate::matrix::{find, matrix_equal, sparse_build, transpose, SparseMatrix, Triples};

/// `N × S` shortest-path weights: `dist(v, s)` is the weight of the lightest
/// path from source `s` to `v`. Absent entries are unreachable.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    pub sources: Vec<usize>,
    pub dist: SparseMatrix<i64>,
    /// Products taken before the fixpoint was reached.
    pub iterations: usize,
}

impl DistanceMatrix {
    pub fn distance(&self, vertex: usize, source_column: usize) -> Option<i64> {
        self.dist.get(vertex, source_column).copied()
    }
}

/// Multi-source weighted BFS: `F ← F ⊕ (Aᵀ ⊕.⊗ F)` over `min_plus_i64`
/// until no distance decreases. Each step is one sparse matrix-matrix
/// product.
pub fn multi_source_bfs(a: &AdjacencyMatrix<i64>, sources: &[&str]) -> Result<DistanceMatrix> {
    if sources.is_empty() {
        return Err(Error::InvalidArgument("multi_source_bfs needs at least one source".into()));
    }
    let src = sources.iter().map(|l| a.vertex(l)).collect::<Result<Vec<_>>>()?;
    multi_source_bfs_indices(a, &src)
}

/// [`multi_source_bfs`] with sources given as vertex indices.
pub fn multi_source_bfs_indices(a: &AdjacencyMatrix<i64>, sources: &[usize]) -> Result<DistanceMatrix> {
    if sources.is_empty() {
        return Err(Error::InvalidArgument("multi_source_bfs needs at least one source".into()));
    }
    let edges = find(&a.mat);
    if let Some((i, j, &w)) = edges.iter().find(|(_, _, &w)| w < 0) {
        return Err(Error::NegativeWeight {
            src: a.label(i).to_string(),
            dst: a.label(j).to_string(),
            weight: w,
        });
    }
    let s = min_plus_i64();
    let n = a.vertex_count();
    let mut start = Triples::new(n, sources.len());
    for (col, &v) in sources.iter().enumerate() {
        start.push(v, col, 0);
    }
    let mut dist = sparse_build(&start, |x, y| s.add(x, y))?;
    let expand = transpose(&a.mat);
    let mut iterations = 0;
    loop {
        iterations += 1;
        let next = ewise_add(&dist, &spgemm(&expand, &dist, &s)?, &s)?;
        if matrix_equal(&next, &dist, POS_INF) {
            break;
        }
        dist = next;
    }
    Ok(DistanceMatrix {
        sources: sources.to_vec(),
        dist,
        iterations,
    })
}

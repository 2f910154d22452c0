use crate::algebra::{min_plus_i64, or_and_bool, Scalar};
use crate::error::Result;
use crate::graphrep::AdjacencyMatrix;
use crate::kernels::{apply, ewise_add, ewise_add_vec, spmv};
use crate::matrix::{transpose, SparseVector};

/// Weakly connected components by min-label propagation. Each vertex ends
/// with the smallest vertex index in its component.
///
/// Edges are symmetrized and given weight 0 in `min_plus_i64`, so one
/// product pulls the minimum neighbor label into every vertex.
pub fn connected_components<T: Scalar>(a: &AdjacencyMatrix<T>) -> Result<Vec<usize>> {
    let n = a.vertex_count();
    let pattern = apply(&a.mat, |_| Some(true));
    let undirected = ewise_add(&pattern, &transpose(&pattern), &or_and_bool())?;
    let links = apply(&undirected, |_| Some(0i64));
    let s = min_plus_i64();

    let mut labels = SparseVector::from_dense((0..n as i64).collect());
    loop {
        let pulled = spmv(&links, &labels, &s)?;
        let next = ewise_add_vec(&labels, &pulled, &s)?;
        if next == labels {
            break;
        }
        labels = next;
    }
    Ok(labels.values().iter().map(|&l| l as usize).collect())
}

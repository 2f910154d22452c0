use crate::algebra::{plus_times_i64, Scalar};
use crate::error::{Error, Result};
use crate::graphrep::AdjacencyMatrix;
use crate::kernels::{apply, ewise_add, ewise_mult, reduce_all, spgemm};
use crate::matrix::{identity_matrix, transpose};

/// Number of triangles in the undirected simple graph underlying `a`.
///
/// Direction, weights, parallel edges and self-loops are discarded first.
/// The count is `Σ (S ⊗ S·S) / 6` for the cleaned symmetric pattern `S`.
pub fn triangle_count<T: Scalar>(a: &AdjacencyMatrix<T>) -> Result<u64> {
    if !a.is_square() {
        return Err(Error::InvalidArgument("triangle counting needs a square adjacency matrix".into()));
    }
    let s = plus_times_i64();
    let ones = apply(&a.mat, |_| Some(1i64));
    let symmetric = apply(&ewise_add(&ones, &transpose(&ones), &s)?, |_| Some(1i64));
    // Cancel the diagonal: add -1 on it, then drop the zeros.
    let diagonal = ewise_mult(&symmetric, &identity_matrix(a.vertex_count(), &s), &s)?;
    let cancelled = ewise_add(&symmetric, &apply(&diagonal, |x| Some(-x)), &s)?;
    let simple = apply(&cancelled, |x| (x != 0).then_some(x));

    let wedges = spgemm(&simple, &simple, &s)?;
    let closed = ewise_mult(&simple, &wedges, &s)?;
    Ok((reduce_all(&closed, &s) / 6) as u64)
}

//! Seeded random sparse matrices for law checks, examples and benchmarks.

use rand::Rng;

use crate::matrix::{sparse_build, SparseMatrix, Triples};

/// An `nrows × ncols` matrix in which each position is stored with
/// probability `density`, with values drawn from `value`.
pub fn random_matrix<T: Copy, R: Rng + ?Sized>(
    rng: &mut R,
    nrows: usize,
    ncols: usize,
    density: f64,
    mut value: impl FnMut(&mut R) -> T,
) -> SparseMatrix<T> {
    let density = density.clamp(0.0, 1.0);
    let mut t = Triples::new(nrows, ncols);
    for i in 0..nrows {
        for j in 0..ncols {
            if rng.random_bool(density) {
                t.push(i, j, value(rng));
            }
        }
    }
    sparse_build(&t, |a, _| a).expect("generated indices are in range")
}

/// Random triples with possible duplicates, in arbitrary order.
pub fn random_triples<T, R: Rng + ?Sized>(
    rng: &mut R,
    nrows: usize,
    ncols: usize,
    count: usize,
    mut value: impl FnMut(&mut R) -> T,
) -> Triples<T> {
    let mut t = Triples::new(nrows, ncols);
    if nrows == 0 || ncols == 0 {
        return t;
    }
    for _ in 0..count {
        let (i, j) = (rng.random_range(0..nrows), rng.random_range(0..ncols));
        t.push(i, j, value(rng));
    }
    t
}

use crate::algebra::{plus_times_f64, Scalar};
use crate::error::{Error, Result};
use crate::graphrep::AdjacencyMatrix;
use crate::kernels::{apply, reduce_rows, spgemm, spmv};
use crate::matrix::{sparse_build, transpose, SparseVector, Triples};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankConfig {
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        PageRankConfig {
            damping: 0.85,
            tol: 1e-9,
            max_iter: 100,
        }
    }
}

/// PageRank by power iteration on the damped, column-stochastic transition
/// matrix. Edge weights are ignored; parallel edges count once. Dangling
/// vertices spread their rank uniformly.
///
/// Stops once the L1 change between iterates drops below `tol`, or after
/// `max_iter` iterations.
pub fn pagerank<T: Scalar>(a: &AdjacencyMatrix<T>, cfg: &PageRankConfig) -> Result<Vec<f64>> {
    if !(cfg.damping > 0.0 && cfg.damping < 1.0) {
        return Err(Error::InvalidArgument(format!("damping must be in (0, 1), got {}", cfg.damping)));
    }
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {}", cfg.tol)));
    }
    let n = a.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let s = plus_times_f64();
    let pattern = apply(&a.mat, |_| Some(1.0));
    let out_degree = reduce_rows(&pattern, &s);

    // Row-normalize: D⁻¹ · pattern, with D the out-degree diagonal.
    let mut inv = Triples::new(n, n);
    for (v, &d) in out_degree.iter() {
        inv.push(v, v, 1.0 / d);
    }
    let stochastic = spgemm(&sparse_build(&inv, |x, _| x)?, &pattern, &s)?;
    let pull = transpose(&stochastic);

    let d = cfg.damping;
    let nf = n as f64;
    let mut rank = vec![1.0 / nf; n];
    for _ in 0..cfg.max_iter {
        let dangling: f64 = rank
            .iter()
            .enumerate()
            .filter(|(v, _)| out_degree.get(*v).is_none())
            .map(|(_, r)| r)
            .sum();
        let spread = spmv(&pull, &SparseVector::from_dense(rank.clone()), &s)?.to_dense(0.0);
        let base = (1.0 - d) / nf + d * dangling / nf;
        let next: Vec<f64> = spread.iter().map(|&x| base + d * x).collect();
        let change: f64 = next.iter().zip(&rank).map(|(x, y)| (x - y).abs()).sum();
        rank = next;
        if change < cfg.tol {
            break;
        }
    }
    Ok(rank)
}

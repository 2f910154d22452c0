//! Scaling harness: multi-source weighted BFS on a Kronecker graph, timed at
//! several worker counts.
//!
//! The result matrix is hashed after every run and all hashes must agree,
//! whatever the thread count. A mismatch is a hard error.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::algebra::{min_plus_i64, BuiltinSemiring, Scalar};
use crate::algorithms::multi_source_bfs_indices;
use crate::error::{Error, Result};
use crate::generate::{kronecker_generate, DEFAULT_EDGE_FACTOR};
use crate::graphrep::{AdjacencyMatrix, LabelDict};
use crate::matrix::{sparse_build, SparseMatrix};

pub const CSV_HEADER: &str = "scale,edge_factor,P,trial,seconds,speedup,efficiency,checksum";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// The graph has `2^scale` vertices.
    pub scale: u32,
    pub edge_factor: usize,
    /// Worker counts; the first entry is the speedup baseline.
    pub threads: Vec<usize>,
    pub seed: u64,
    pub semiring: BuiltinSemiring,
    pub trials: usize,
    pub sources: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            scale: 14,
            edge_factor: DEFAULT_EDGE_FACTOR,
            threads: vec![1, 2, 4],
            seed: 1,
            semiring: BuiltinSemiring::MinPlusI64,
            trials: 1,
            sources: 64,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.to_string()));
        if self.scale < 1 {
            return bad("scale must be at least 1");
        }
        if self.edge_factor < 1 {
            return bad("edge factor must be at least 1");
        }
        if self.threads.is_empty() || self.threads.contains(&0) {
            return bad("threads must be a nonempty list of positive counts");
        }
        if self.trials < 1 || self.sources < 1 {
            return bad("trials and sources must be at least 1");
        }
        if self.semiring != BuiltinSemiring::MinPlusI64 {
            return Err(Error::InvalidArgument(format!(
                "the benchmark workload runs over min_plus_i64, not {}",
                self.semiring
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub threads: usize,
    pub trial: usize,
    pub seconds: f64,
    /// Edge visits per second: stored edges × sources × products / time.
    pub edges_per_second: f64,
    pub speedup: f64,
    pub efficiency: f64,
    pub checksum: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub scale: u32,
    pub edge_factor: usize,
    pub vertices: usize,
    /// Stored edges after duplicates are combined.
    pub edges: usize,
    pub iterations: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{:.6},{:.6},{:.6},{}",
                self.scale, self.edge_factor, r.threads, r.trial, r.seconds, r.speedup, r.efficiency, r.checksum
            );
        }
        out
    }

    pub fn checksum(&self) -> Option<&str> {
        self.rows.first().map(|r| r.checksum.as_str())
    }
}

/// SHA-256 (first 16 hex digits) over the shape, pattern and value bits.
pub fn matrix_checksum<T: Scalar>(a: &SparseMatrix<T>) -> String {
    let mut h = Sha256::new();
    h.update((a.nrows() as u64).to_le_bytes());
    h.update((a.ncols() as u64).to_le_bytes());
    for &o in a.row_offsets() {
        h.update((o as u64).to_le_bytes());
    }
    for &c in a.col_indices() {
        h.update((c as u64).to_le_bytes());
    }
    for v in a.values() {
        h.update(v.to_bits().to_le_bytes());
    }
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Builds the benchmark graph: Kronecker triples with parallel edges
/// combined by `min`.
pub fn bench_graph(scale: u32, edge_factor: usize, seed: u64) -> Result<AdjacencyMatrix<i64>> {
    let t = kronecker_generate(scale, edge_factor, seed)?;
    let s = min_plus_i64();
    let mat = sparse_build(&t, |a, b| s.add(a, b))?;
    let labels = LabelDict::from_labels((0..t.nrows).map(|i| i.to_string()))?;
    AdjacencyMatrix::from_matrix(mat, labels)
}

fn pick_sources(n: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5043_e5ed);
    let mut picked = rand::seq::index::sample(&mut rng, n, count.min(n)).into_vec();
    picked.sort_unstable();
    picked
}

pub fn bench_spgemm(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let graph = bench_graph(cfg.scale, cfg.edge_factor, cfg.seed)?;
    let sources = pick_sources(graph.vertex_count(), cfg.sources, cfg.seed);
    let pools = cfg
        .threads
        .iter()
        .map(|&p| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(p)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot build a {p}-thread pool: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    let mut iterations = 0;
    for trial in 0..cfg.trials {
        let mut baseline = None;
        for (&p, pool) in cfg.threads.iter().zip(&pools) {
            let start = Instant::now();
            let dist = pool.install(|| multi_source_bfs_indices(&graph, &sources))?;
            let seconds = start.elapsed().as_secs_f64();
            iterations = dist.iterations;
            let base = *baseline.get_or_insert(seconds);
            let speedup = if p == cfg.threads[0] { 1.0 } else { base / seconds };
            let visits = (graph.mat.nnz() * sources.len() * dist.iterations) as f64;
            rows.push(BenchRow {
                threads: p,
                trial,
                seconds,
                edges_per_second: visits / seconds,
                speedup,
                efficiency: speedup * cfg.threads[0] as f64 / p as f64,
                checksum: matrix_checksum(&dist.dist),
            });
        }
    }
    if let Some(first) = rows.first() {
        if let Some(bad) = rows.iter().find(|r| r.checksum != first.checksum) {
            return Err(Error::ChecksumMismatch(format!(
                "P={} trial {} gave {}, P={} trial {} gave {}",
                first.threads, first.trial, first.checksum, bad.threads, bad.trial, bad.checksum
            )));
        }
    }
    Ok(BenchReport {
        scale: cfg.scale,
        edge_factor: cfg.edge_factor,
        vertices: graph.vertex_count(),
        edges: graph.mat.nnz(),
        iterations,
        rows,
    })
}

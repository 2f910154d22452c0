//! Kronecker graph generation and the thread-scaling benchmark.
//!
//! Usage: `cargo run --release --example kronecker_bench [scale]`

use graphblas::bench::{bench_spgemm, BenchConfig};
use graphblas::generate::kronecker_generate;

fn main() -> graphblas::Result<()> {
    let scale = std::env::args().nth(1).map_or(Ok(12), |s| s.parse()).expect("scale must be an integer");

    let t = kronecker_generate(scale, 16, 1)?;
    let mut degree = vec![0usize; t.nrows];
    for (i, _, _) in t.iter() {
        degree[i] += 1;
    }
    degree.sort_unstable_by(|a, b| b.cmp(a));
    println!("scale {scale}: {} vertices, {} edge triples", t.nrows, t.len());
    println!("top out-degrees {:?}, mean {}", &degree[..5], t.len() / t.nrows);

    let cfg = BenchConfig { scale, threads: vec![1, 2, 4], ..BenchConfig::default() };
    let report = bench_spgemm(&cfg)?;
    println!("\n{} stored edges, {} iterations", report.edges, report.iterations);
    print!("{}", report.to_csv());
    Ok(())
}

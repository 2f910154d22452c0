//! PageRank by power iteration with sparse matrix-vector products.

use graphblas::algebra::plus_times_f64;
use graphblas::algorithms::{pagerank, PageRankConfig};
use graphblas::graphrep::{AdjacencyMatrix, Edge};

fn main() -> graphblas::Result<()> {
    let links = [
        ("home", "about"),
        ("home", "blog"),
        ("blog", "post-1"),
        ("blog", "post-2"),
        ("post-1", "home"),
        ("post-2", "home"),
        ("post-2", "post-1"),
        ("about", "home"),
        ("home", "archive"),
    ];
    let edges: Vec<Edge<f64>> = links.iter().map(|&(a, b)| Edge::new(a, b, 1.0)).collect();
    let g = AdjacencyMatrix::from_edges(&edges, &plus_times_f64())?;

    // "archive" has no out-links; its rank is spread over every page.
    let ranks = pagerank(&g, &PageRankConfig::default())?;
    let mut order: Vec<usize> = (0..ranks.len()).collect();
    order.sort_by(|&a, &b| ranks[b].total_cmp(&ranks[a]));
    for v in order {
        println!("{:<8} {:.6}", g.label(v), ranks[v]);
    }
    println!("sum      {:.12}", ranks.iter().sum::<f64>());
    Ok(())
}

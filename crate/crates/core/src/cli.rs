//! Command-line surface. Results go to the given writer as TSV.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{builtin_semiring, min_plus_i64, plus_times_f64, BuiltinSemiring};
use crate::algorithms::{bfs, connected_components, multi_source_bfs, pagerank, triangle_count, PageRankConfig};
use crate::bench::{bench_spgemm, BenchConfig};
use crate::error::{Error, Result};
use crate::generate::{kronecker_generate, DEFAULT_EDGE_FACTOR};
use crate::graphrep::{incidence_to_adjacency, AdjacencyMatrix, Edge, IncidenceMatrix};
use crate::io::{read_matrix_market, read_tsv_edges, read_tsv_incidence, write_labels, write_matrix_market};
use crate::kernels::laws::{check_laws_any, LawConfig};
use crate::matrix::find;

#[derive(Debug, Parser)]
#[command(name = "graphblas", version, about = "Semiring sparse-matrix graph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Matrix Market coordinate file; vertices are labeled 1..=N.
    Mm,
    /// `src<TAB>dst[<TAB>weight]` lines.
    Tsv,
}

#[derive(Debug, clap::Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Defaults to `mm` for `.mtx`/`.mm` files and `tsv` otherwise.
    #[arg(long, value_enum)]
    pub format: Option<GraphFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Breadth-first search levels from one vertex.
    Bfs {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        source: String,
    },
    /// Shortest-path weights from several sources (integer weights).
    Sssp {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
    },
    Pagerank {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value_t = 0.85)]
        damping: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        max_iter: usize,
    },
    /// Weakly connected components.
    Cc {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Triangle count of the underlying undirected simple graph.
    Tricount {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Projects an incidence list onto an adjacency matrix.
    Convert {
        /// `edge<TAB>tail<TAB>head[<TAB>head...]` lines.
        #[arg(long)]
        incidence: PathBuf,
        /// Matrix Market output; labels go to `<out>.labels.tsv`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes a Kronecker power-law graph as Matrix Market.
    Generate {
        #[arg(long)]
        scale: u32,
        #[arg(long, default_value_t = DEFAULT_EDGE_FACTOR)]
        edge_factor: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Times multi-source weighted BFS at several thread counts.
    Bench {
        #[arg(long, default_value_t = 14)]
        scale: u32,
        #[arg(long, default_value_t = DEFAULT_EDGE_FACTOR)]
        edge_factor: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
        threads: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 64)]
        sources: usize,
        #[arg(long, default_value = "min_plus_i64")]
        semiring: String,
        /// CSV report path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Checks the matrix laws on random instances.
    Laws {
        #[arg(long)]
        semiring: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Vertices (in index order) and edges read from a graph file.
#[derive(Debug, Clone)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge<f64>>,
}

impl GraphInput {
    pub fn load(args: &GraphArgs) -> Result<Self> {
        let format = args.format.unwrap_or_else(|| guess_format(&args.graph));
        match format {
            GraphFormat::Tsv => Ok(GraphInput {
                vertices: Vec::new(),
                edges: read_tsv_edges(&args.graph)?,
            }),
            GraphFormat::Mm => {
                let t = read_matrix_market(&args.graph)?;
                if t.nrows != t.ncols {
                    return Err(Error::InvalidArgument(format!(
                        "{}: a graph needs a square matrix, found {}x{}",
                        args.graph.display(),
                        t.nrows,
                        t.ncols
                    )));
                }
                let edges = t.iter().map(|(i, j, &w)| Edge::new((i + 1).to_string(), (j + 1).to_string(), w)).collect();
                Ok(GraphInput {
                    vertices: (1..=t.nrows).map(|v| v.to_string()).collect(),
                    edges,
                })
            }
        }
    }

    /// Real-weighted adjacency; parallel edges add.
    pub fn real(&self) -> Result<AdjacencyMatrix<f64>> {
        AdjacencyMatrix::from_vertices_and_edges(self.vertices.iter().map(String::as_str), &self.edges, &plus_times_f64())
    }

    /// Integer-weighted adjacency for shortest paths; parallel edges keep
    /// the lightest weight.
    pub fn integral(&self) -> Result<AdjacencyMatrix<i64>> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let w = e.weight;
                if w.fract() != 0.0 || !w.is_finite() || w.abs() >= 2f64.powi(53) {
                    return Err(Error::InvalidArgument(format!(
                        "edge {} -> {} has non-integer weight {w}; shortest paths use integer weights",
                        e.src, e.dst
                    )));
                }
                Ok(Edge::new(e.src.clone(), e.dst.clone(), w as i64))
            })
            .collect::<Result<Vec<_>>>()?;
        AdjacencyMatrix::from_vertices_and_edges(self.vertices.iter().map(String::as_str), &edges, &min_plus_i64())
    }
}

fn guess_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("mtx" | "mm") => GraphFormat::Mm,
        _ => GraphFormat::Tsv,
    }
}

fn labels_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".labels.tsv");
    PathBuf::from(name)
}

fn w(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    match cli.command {
        Command::Bfs { input, source } => {
            let g = GraphInput::load(&input)?.real()?;
            let r = bfs(&g, &source)?;
            writeln!(out, "vertex\tlevel").map_err(w)?;
            for (v, level) in r.levels.iter() {
                writeln!(out, "{}\t{level}", g.label(v)).map_err(w)?;
            }
        }
        Command::Sssp { input, sources } => {
            let g = GraphInput::load(&input)?.integral()?;
            let names: Vec<&str> = sources.iter().map(String::as_str).collect();
            let d = multi_source_bfs(&g, &names)?;
            let by_source = crate::matrix::transpose(&d.dist);
            writeln!(out, "source\tvertex\tdistance").map_err(w)?;
            for (col, v, dist) in by_source.iter() {
                writeln!(out, "{}\t{}\t{dist}", names[col], g.label(v)).map_err(w)?;
            }
        }
        Command::Pagerank {
            input,
            damping,
            tol,
            max_iter,
        } => {
            let g = GraphInput::load(&input)?.real()?;
            let ranks = pagerank(&g, &PageRankConfig { damping, tol, max_iter })?;
            writeln!(out, "vertex\trank").map_err(w)?;
            for (v, r) in ranks.iter().enumerate() {
                writeln!(out, "{}\t{r:.12}", g.label(v)).map_err(w)?;
            }
        }
        Command::Cc { input } => {
            let g = GraphInput::load(&input)?.real()?;
            let comp = connected_components(&g)?;
            writeln!(out, "vertex\tcomponent").map_err(w)?;
            for (v, c) in comp.iter().enumerate() {
                writeln!(out, "{}\t{}", g.label(v), g.label(*c)).map_err(w)?;
            }
        }
        Command::Tricount { input } => {
            let g = GraphInput::load(&input)?.real()?;
            writeln!(out, "triangles\t{}", triangle_count(&g)?).map_err(w)?;
        }
        Command::Convert { incidence, out: path } => {
            let e = IncidenceMatrix::from_edges(&read_tsv_incidence(&incidence)?)?;
            let a = incidence_to_adjacency(&e)?;
            write_matrix_market(&path, &find(&a.mat))?;
            write_labels(labels_path(&path), &a.out_labels)?;
            writeln!(out, "src\tdst\tcount").map_err(w)?;
            for (i, j, c) in a.mat.iter() {
                writeln!(out, "{}\t{}\t{c}", a.label(i), a.label(j)).map_err(w)?;
            }
        }
        Command::Generate {
            scale,
            edge_factor,
            seed,
            out: path,
        } => {
            let t = kronecker_generate(scale, edge_factor, seed)?;
            write_matrix_market(&path, &t)?;
            writeln!(out, "vertices\t{}\nedges\t{}", t.nrows, t.len()).map_err(w)?;
        }
        Command::Bench {
            scale,
            edge_factor,
            threads,
            seed,
            trials,
            sources,
            semiring,
            out: path,
        } => {
            let cfg = BenchConfig {
                scale,
                edge_factor,
                threads,
                seed,
                semiring: semiring.parse::<BuiltinSemiring>()?,
                trials,
                sources,
            };
            let report = bench_spgemm(&cfg)?;
            std::fs::write(&path, report.to_csv()).map_err(|source| Error::Io { path: path.clone(), source })?;
            writeln!(out, "P\ttrial\tseconds\tedges_per_second\tspeedup\tefficiency\tchecksum").map_err(w)?;
            for r in &report.rows {
                writeln!(
                    out,
                    "{}\t{}\t{:.6}\t{:.0}\t{:.3}\t{:.3}\t{}",
                    r.threads, r.trial, r.seconds, r.edges_per_second, r.speedup, r.efficiency, r.checksum
                )
                .map_err(w)?;
            }
        }
        Command::Laws { semiring, trials, seed } => {
            let s = builtin_semiring(&semiring)?;
            let mut cfg = LawConfig {
                trials,
                ..LawConfig::default()
            };
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            let report = check_laws_any(&s, &cfg)?;
            writeln!(out, "law\tsemiring\ttrials\tfailures\tresult").map_err(w)?;
            for o in &report.outcomes {
                let verdict = if o.passed() { "pass" } else { "FAIL" };
                writeln!(out, "{}\t{}\t{}\t{}\t{verdict}", o.law, report.semiring, o.trials, o.failures).map_err(w)?;
            }
            if let Some(o) = report.outcomes.iter().find(|o| !o.passed()) {
                return Err(Error::SemiringLaw {
                    semiring: report.semiring.clone(),
                    law: o.law.name().to_string(),
                    detail: o.first_failure.clone().unwrap_or_default(),
                });
            }
        }
    }
    Ok(())
}

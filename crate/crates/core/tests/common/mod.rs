//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here touches the kernels: matrices are expanded to dense
//! `Option` grids and graphs to plain edge lists.
#![allow(dead_code)]

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;

use graphblas::algebra::{Scalar, Semiring};
use graphblas::graphrep::{AdjacencyMatrix, Edge};
use graphblas::kernels::{apply, ewise_add, ewise_mult, reduce_all, reduce_rows, sp_asgn, sp_ref, spgemm, spmv};
use graphblas::matrix::{sparse_build, SparseMatrix, SparseVector, Triples};
use graphblas::random::random_matrix;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Dense<T> = Vec<Vec<Option<T>>>;

pub fn to_dense<T: Copy>(a: &SparseMatrix<T>) -> Dense<T> {
    let mut d = vec![vec![None; a.ncols()]; a.nrows()];
    for (i, j, &v) in a.iter() {
        d[i][j] = Some(v);
    }
    d
}

pub fn from_dense<T: Copy>(d: &Dense<T>, ncols: usize) -> SparseMatrix<T> {
    let mut t = Triples::new(d.len(), ncols);
    for (i, row) in d.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if let Some(v) = v {
                t.push(i, j, *v);
            }
        }
    }
    sparse_build(&t, |a, _| a).unwrap()
}

/// Same shape, same stored pattern, values equal under [`Scalar::approx_eq`].
pub fn same<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>) -> bool {
    a.shape() == b.shape()
        && a.nnz() == b.nnz()
        && a.iter().zip(b.iter()).all(|((i, j, x), (k, l, y))| i == k && j == l && x.approx_eq(*y))
}

pub fn same_vec<T: Scalar>(x: &SparseVector<T>, y: &[Option<T>]) -> bool {
    x.len() == y.len()
        && (0..y.len()).all(|i| match (x.get(i), y[i]) {
            (None, None) => true,
            (Some(a), Some(b)) => a.approx_eq(b),
            _ => false,
        })
}

fn fold<T: Copy>(items: impl IntoIterator<Item = T>, add: impl Fn(T, T) -> T) -> Option<T> {
    items.into_iter().reduce(add)
}

pub fn dense_spgemm<T: Scalar>(a: &Dense<T>, b: &Dense<T>, bcols: usize, s: &Semiring<T>) -> Dense<T> {
    a.iter()
        .map(|row| {
            (0..bcols)
                .map(|j| {
                    let products = row
                        .iter()
                        .enumerate()
                        .filter_map(|(k, x)| Some(s.mult((*x)?, b[k][j]?)));
                    fold(products, |x, y| s.add(x, y)).filter(|v| !s.is_add_identity(*v))
                })
                .collect()
        })
        .collect()
}

pub fn dense_ewise<T: Copy>(a: &Dense<T>, b: &Dense<T>, f: impl Fn(T, T) -> T, union: bool) -> Dense<T> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| match (*x, *y) {
                    (Some(x), Some(y)) => Some(f(x, y)),
                    (Some(v), None) | (None, Some(v)) if union => Some(v),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

pub fn dense_gather<T: Copy>(a: &Dense<T>, rows: &[usize], cols: &[usize]) -> Dense<T> {
    rows.iter().map(|&r| cols.iter().map(|&c| a[r][c]).collect()).collect()
}

pub fn dense_scatter<T: Copy>(a: &Dense<T>, rows: &[usize], cols: &[usize], b: &Dense<T>) -> Dense<T> {
    let mut out = a.clone();
    for (p, &r) in rows.iter().enumerate() {
        for (q, &c) in cols.iter().enumerate() {
            out[r][c] = b[p][q];
        }
    }
    out
}

pub fn dense_map<T: Copy, U>(a: &Dense<T>, f: impl Fn(T) -> Option<U>) -> Dense<U> {
    a.iter().map(|row| row.iter().map(|x| x.and_then(&f)).collect()).collect()
}

pub fn dense_fold_rows<T: Copy>(a: &Dense<T>, add: impl Fn(T, T) -> T) -> Vec<Option<T>> {
    a.iter().map(|row| fold(row.iter().flatten().copied(), &add)).collect()
}

// ---------------------------------------------------------------------------
// Kernel checks: one random instance each, compared with the dense version.

pub fn random_operand<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>, nrows: usize, ncols: usize) -> SparseMatrix<T> {
    let density = rng.random_range(0.0..=0.5);
    random_matrix(rng, nrows, ncols, density, |r| s.sample(r))
}

fn dim(rng: &mut ChaCha8Rng) -> usize {
    rng.random_range(0..=12)
}

fn mismatch<T: std::fmt::Debug>(what: &str, got: T, want: T) -> String {
    format!("{what}: got {got:?}, want {want:?}")
}

pub fn check_spgemm<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, k, n) = (dim(rng), dim(rng), dim(rng));
    let a = random_operand(rng, s, m, k);
    let b = random_operand(rng, s, k, n);
    let got = spgemm(&a, &b, s).map_err(|e| e.to_string())?;
    let want = from_dense(&dense_spgemm(&to_dense(&a), &to_dense(&b), n, s), n);
    if same(&got, &want) { Ok(()) } else { Err(mismatch("spgemm", to_dense(&got), to_dense(&want))) }
}

pub fn check_spmv<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let x = random_operand(rng, s, n, 1);
    let xv = SparseVector::new(n, x.iter().map(|(i, _, _)| i).collect(), x.values().to_vec()).unwrap();
    let got = spmv(&a, &xv, s).map_err(|e| e.to_string())?;
    let want: Vec<Option<T>> = dense_spgemm(&to_dense(&a), &to_dense(&x), 1, s).into_iter().map(|r| r[0]).collect();
    if same_vec(&got, &want) { Ok(()) } else { Err(mismatch("spmv", got.to_dense(s.add_identity()), want.iter().map(|v| v.unwrap_or(s.add_identity())).collect())) }
}

pub fn check_ewise_add<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let b = random_operand(rng, s, m, n);
    let got = ewise_add(&a, &b, s).map_err(|e| e.to_string())?;
    let want = from_dense(&dense_ewise(&to_dense(&a), &to_dense(&b), |x, y| s.add(x, y), true), n);
    if same(&got, &want) { Ok(()) } else { Err(mismatch("ewise_add", to_dense(&got), to_dense(&want))) }
}

pub fn check_ewise_mult<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let b = random_operand(rng, s, m, n);
    let got = ewise_mult(&a, &b, s).map_err(|e| e.to_string())?;
    let want = from_dense(&dense_ewise(&to_dense(&a), &to_dense(&b), |x, y| s.mult(x, y), false), n);
    if same(&got, &want) { Ok(()) } else { Err(mismatch("ewise_mult", to_dense(&got), to_dense(&want))) }
}

pub fn check_sp_ref<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let pick = |rng: &mut ChaCha8Rng, bound: usize| -> Vec<usize> {
        if bound == 0 {
            return Vec::new();
        }
        let len = rng.random_range(0..=2 * bound);
        (0..len).map(|_| rng.random_range(0..bound)).collect()
    };
    let rows = pick(rng, m);
    let cols = pick(rng, n);
    let got = sp_ref(&a, &rows, &cols).map_err(|e| e.to_string())?;
    let want = from_dense(&dense_gather(&to_dense(&a), &rows, &cols), cols.len());
    if same(&got, &want) { Ok(()) } else { Err(mismatch("sp_ref", to_dense(&got), to_dense(&want))) }
}

pub fn check_sp_asgn<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let pick = |rng: &mut ChaCha8Rng, bound: usize| -> Vec<usize> {
        let mut all: Vec<usize> = (0..bound).collect();
        all.shuffle(rng);
        let len = rng.random_range(0..=bound);
        all.truncate(len);
        all
    };
    let rows = pick(rng, m);
    let cols = pick(rng, n);
    let b = random_operand(rng, s, rows.len(), cols.len());
    let got = sp_asgn(&a, &rows, &cols, &b).map_err(|e| e.to_string())?;
    let want = from_dense(&dense_scatter(&to_dense(&a), &rows, &cols, &to_dense(&b)), n);
    if same(&got, &want) { Ok(()) } else { Err(mismatch("sp_asgn", to_dense(&got), to_dense(&want))) }
}

pub fn check_apply<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let one = s.mult_identity();
    let f = |x: T| if x == one { None } else { Some(s.add(x, x)) };
    let got = apply(&a, f);
    let want = from_dense(&dense_map(&to_dense(&a), f), n);
    if same(&got, &want) { Ok(()) } else { Err(mismatch("apply", to_dense(&got), to_dense(&want))) }
}

pub fn check_reduce<T: Scalar>(rng: &mut ChaCha8Rng, s: &Semiring<T>) -> Result<(), String> {
    let (m, n) = (dim(rng), dim(rng));
    let a = random_operand(rng, s, m, n);
    let d = to_dense(&a);
    let rows = reduce_rows(&a, s);
    let want_rows = dense_fold_rows(&d, |x, y| s.add(x, y));
    if !same_vec(&rows, &want_rows) {
        return Err(mismatch("reduce_rows", rows.to_dense(s.add_identity()), want_rows.iter().map(|v| v.unwrap_or(s.add_identity())).collect()));
    }
    let all = reduce_all(&a, s);
    let want_all = fold(d.iter().flatten().flatten().copied(), |x, y| s.add(x, y)).unwrap_or(s.add_identity());
    if all.approx_eq(want_all) { Ok(()) } else { Err(mismatch("reduce_all", all, want_all)) }
}

/// The seven kernels with a dense oracle, by name.
pub fn kernel_checks<T: Scalar>() -> Vec<(&'static str, fn(&mut ChaCha8Rng, &Semiring<T>) -> Result<(), String>)> {
    vec![
        ("spgemm", check_spgemm::<T>),
        ("ewise_add", check_ewise_add::<T>),
        ("ewise_mult", check_ewise_mult::<T>),
        ("sp_ref", check_sp_ref::<T>),
        ("sp_asgn", check_sp_asgn::<T>),
        ("apply", check_apply::<T>),
        ("reduce", check_reduce::<T>),
    ]
}

// ---------------------------------------------------------------------------
// Graphs as edge lists over vertices 0..n, labeled by their decimal index.

#[derive(Debug, Clone)]
pub struct Digraph {
    pub n: usize,
    pub edges: Vec<(usize, usize, i64)>,
}

impl Digraph {
    /// `m` random edges; self-loops and parallel edges are allowed.
    pub fn random(rng: &mut ChaCha8Rng, n: usize, m: usize, weights: std::ops::RangeInclusive<i64>) -> Self {
        let edges = (0..m)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(weights.clone())))
            .collect();
        Digraph { n, edges }
    }

    /// `m` distinct non-loop edges (fewer if the graph is too small).
    pub fn random_simple(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
        pairs.shuffle(rng);
        pairs.truncate(m);
        Digraph {
            n,
            edges: pairs.into_iter().map(|(u, v)| (u, v, 1)).collect(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|v| v.to_string()).collect()
    }

    pub fn adjacency<T: Scalar>(&self, s: &Semiring<T>, weight: impl Fn(i64) -> T) -> AdjacencyMatrix<T> {
        let labels = self.labels();
        let edges: Vec<Edge<T>> = self.edges.iter().map(|&(u, v, w)| Edge::new(u.to_string(), v.to_string(), weight(w))).collect();
        AdjacencyMatrix::from_vertices_and_edges(labels.iter().map(String::as_str), &edges, s).unwrap()
    }

    fn out_lists(&self) -> Vec<Vec<(usize, i64)>> {
        let mut out = vec![Vec::new(); self.n];
        for &(u, v, w) in &self.edges {
            out[u].push((v, w));
        }
        out
    }
}

pub fn queue_bfs(g: &Digraph, src: usize) -> Vec<Option<usize>> {
    let out = g.out_lists();
    let mut level = vec![None; g.n];
    level[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let next = level[u].unwrap() + 1;
        for &(v, _) in &out[u] {
            if level[v].is_none() {
                level[v] = Some(next);
                queue.push_back(v);
            }
        }
    }
    level
}

pub fn dijkstra(g: &Digraph, src: usize) -> Vec<Option<i64>> {
    let out = g.out_lists();
    let mut dist: Vec<Option<i64>> = vec![None; g.n];
    let mut heap = BinaryHeap::from([Reverse((0i64, src))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].is_some() {
            continue;
        }
        dist[u] = Some(d);
        for &(v, w) in &out[u] {
            if dist[v].is_none() {
                heap.push(Reverse((d + w, v)));
            }
        }
    }
    dist
}

/// Power iteration on a dense transition matrix, run far past the library's
/// stopping tolerance. Edges count once; dangling rank spreads uniformly.
pub fn dense_pagerank(g: &Digraph, damping: f64) -> Vec<f64> {
    let n = g.n;
    let mut link = vec![vec![false; n]; n];
    for &(u, v, _) in &g.edges {
        link[u][v] = true;
    }
    let deg: Vec<usize> = link.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut m = vec![vec![0.0; n]; n];
    for u in 0..n {
        for v in 0..n {
            m[v][u] = if deg[u] == 0 {
                1.0 / n as f64
            } else if link[u][v] {
                1.0 / deg[u] as f64
            } else {
                0.0
            };
        }
    }
    let mut r = vec![1.0 / n as f64; n];
    for _ in 0..10_000 {
        let next: Vec<f64> = (0..n)
            .map(|v| (1.0 - damping) / n as f64 + damping * (0..n).map(|u| m[v][u] * r[u]).sum::<f64>())
            .collect();
        let change: f64 = next.iter().zip(&r).map(|(a, b)| (a - b).abs()).sum();
        r = next;
        if change < 1e-15 {
            break;
        }
    }
    r
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Keep the smaller index as the root so it labels the component.
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// Smallest vertex index in each vertex's weak component.
pub fn union_find_components(g: &Digraph) -> Vec<usize> {
    let mut uf = UnionFind { parent: (0..g.n).collect() };
    for &(u, v, _) in &g.edges {
        uf.union(u, v);
    }
    (0..g.n).map(|v| uf.find(v)).collect()
}

/// Triangles of the underlying undirected simple graph, by enumerating
/// `i < j < k`.
pub fn enumerate_triangles(g: &Digraph) -> u64 {
    let n = g.n;
    let mut adj = vec![vec![false; n]; n];
    for &(u, v, _) in &g.edges {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] {
                continue;
            }
            for k in j + 1..n {
                if adj[i][k] && adj[j][k] {
                    count += 1;
                }
            }
        }
    }
    count
}

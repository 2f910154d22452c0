//! Adjacency and incidence interpretations of sparse matrices.
//!
//! Rows of an adjacency matrix are out-vertices and columns are in-vertices:
//! a stored `A(v1, v2)` is an edge from `v1` to `v2`. An incidence matrix has
//! one row per edge, with `-1` at the edge's tail and `+1` at each head.
//!
//! Vertex indices are assigned in first-appearance order and kept in a
//! [`LabelDict`], so the same input always produces the same matrix.

use std::io::Write;

use indexmap::IndexSet;

use crate::algebra::{or_and_bool, plus_times_i64, Scalar, Semiring};
use crate::error::{Error, Result};
use crate::kernels::{apply, spgemm};
use crate::matrix::{sparse_build, transpose, SparseMatrix, Triples};

/// Bijection between labels and dense indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelDict {
    labels: IndexSet<String>,
}

impl LabelDict {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a dictionary from distinct labels, in order.
    pub fn from_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut dict = LabelDict::new();
        for l in labels {
            let l = l.into();
            if dict.labels.contains(&l) {
                return Err(Error::DuplicateLabel(l));
            }
            dict.labels.insert(l);
        }
        Ok(dict)
    }

    /// Index of `label`, assigning the next free index if unseen.
    pub fn intern(&mut self, label: &str) -> usize {
        match self.labels.get_index_of(label) {
            Some(i) => i,
            None => self.labels.insert_full(label.to_string()).0,
        }
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .get_index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get_index(index).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> + '_ {
        self.labels.iter().enumerate().map(|(i, l)| (i, l.as_str()))
    }

    /// Two-column `label<TAB>index` listing.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (i, l) in self.iter() {
            writeln!(out, "{l}\t{i}")?;
        }
        Ok(())
    }
}

/// A weighted, directed edge between two labeled vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    pub src: String,
    pub dst: String,
    pub weight: T,
}

impl<T> Edge<T> {
    pub fn new(src: impl Into<String>, dst: impl Into<String>, weight: T) -> Self {
        Edge {
            src: src.into(),
            dst: dst.into(),
            weight,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AdjacencyMatrix<T> {
    pub mat: SparseMatrix<T>,
    pub out_labels: LabelDict,
    pub in_labels: LabelDict,
}

impl<T: Scalar> AdjacencyMatrix<T> {
    /// Square adjacency matrix over the vertices named by `edges`.
    ///
    /// Parallel edges are combined with the semiring's `⊕`. A weight equal to
    /// the semiring's additive identity would be indistinguishable from "no
    /// edge" and is rejected.
    pub fn from_edges(edges: &[Edge<T>], s: &Semiring<T>) -> Result<Self> {
        Self::from_vertices_and_edges(std::iter::empty::<&str>(), edges, s)
    }

    /// Like [`AdjacencyMatrix::from_edges`], with `vertices` indexed first so
    /// isolated vertices are kept.
    pub fn from_vertices_and_edges<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        edges: &[Edge<T>],
        s: &Semiring<T>,
    ) -> Result<Self> {
        let mut labels = LabelDict::new();
        for v in vertices {
            labels.intern(v);
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for e in edges {
            if s.is_add_identity(e.weight) {
                return Err(Error::ZeroWeight {
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                });
            }
            let src = labels.intern(&e.src);
            let dst = labels.intern(&e.dst);
            pairs.push((src, dst, e.weight));
        }
        let n = labels.len();
        let mut t = Triples::new(n, n);
        for (i, j, w) in pairs {
            t.push(i, j, w);
        }
        let mat = sparse_build(&t, |a, b| s.add(a, b))?;
        Ok(AdjacencyMatrix {
            mat,
            in_labels: labels.clone(),
            out_labels: labels,
        })
    }

    /// Rectangular adjacency matrix of a bipartite graph: sources index the
    /// rows and destinations index the columns.
    pub fn bipartite_from_edges(edges: &[Edge<T>], s: &Semiring<T>) -> Result<Self> {
        let mut rows = LabelDict::new();
        let mut cols = LabelDict::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for e in edges {
            if s.is_add_identity(e.weight) {
                return Err(Error::ZeroWeight {
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                });
            }
            pairs.push((rows.intern(&e.src), cols.intern(&e.dst), e.weight));
        }
        let mut t = Triples::new(rows.len(), cols.len());
        for (i, j, w) in pairs {
            t.push(i, j, w);
        }
        Ok(AdjacencyMatrix {
            mat: sparse_build(&t, |a, b| s.add(a, b))?,
            out_labels: rows,
            in_labels: cols,
        })
    }
}

impl<T> AdjacencyMatrix<T> {
    /// Wraps a square matrix, labeling vertex `i` with `labels[i]`.
    pub fn from_matrix(mat: SparseMatrix<T>, labels: LabelDict) -> Result<Self> {
        if mat.nrows() != mat.ncols() || mat.nrows() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "a {}x{} matrix cannot be labeled with {} vertices",
                mat.nrows(),
                mat.ncols(),
                labels.len()
            )));
        }
        Ok(AdjacencyMatrix {
            mat,
            in_labels: labels.clone(),
            out_labels: labels,
        })
    }

    pub fn is_square(&self) -> bool {
        self.mat.nrows() == self.mat.ncols()
    }

    pub fn vertex_count(&self) -> usize {
        self.mat.nrows()
    }

    /// Index of `label` among the out-vertices (rows).
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.out_labels.index_of(label)
    }

    pub fn label(&self, index: usize) -> &str {
        self.out_labels.label(index).unwrap_or("?")
    }
}

/// One incidence-matrix edge: a tail and one or more heads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperEdge {
    pub label: String,
    pub tail: String,
    pub heads: Vec<String>,
}

impl HyperEdge {
    pub fn new(label: impl Into<String>, tail: impl Into<String>, heads: &[&str]) -> Self {
        HyperEdge {
            label: label.into(),
            tail: tail.into(),
            heads: heads.iter().map(|h| h.to_string()).collect(),
        }
    }
}

/// Edge × vertex matrix with `-1` at tails and `+1` at heads.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    pub mat: SparseMatrix<i64>,
    pub edge_labels: LabelDict,
    pub vertex_labels: LabelDict,
}

impl IncidenceMatrix {
    pub fn from_edges(edges: &[HyperEdge]) -> Result<Self> {
        Self::from_vertices_and_edges(std::iter::empty::<&str>(), edges)
    }

    pub fn from_vertices_and_edges<'a>(vertices: impl IntoIterator<Item = &'a str>, edges: &[HyperEdge]) -> Result<Self> {
        let mut vertex_labels = LabelDict::new();
        for v in vertices {
            vertex_labels.intern(v);
        }
        let edge_labels = LabelDict::from_labels(edges.iter().map(|e| e.label.as_str()))?;
        let mut entries = Vec::new();
        for (row, e) in edges.iter().enumerate() {
            let invalid = |reason: &str| Error::InvalidEdge {
                edge: e.label.clone(),
                reason: reason.to_string(),
            };
            if e.heads.is_empty() {
                return Err(invalid("an edge needs at least one head"));
            }
            if e.heads.contains(&e.tail) {
                return Err(invalid("self-loops cannot be encoded with the -1/+1 convention"));
            }
            let mut seen = IndexSet::new();
            if let Some(dup) = e.heads.iter().find(|h| !seen.insert(h.as_str())) {
                return Err(invalid(&format!("head {dup:?} listed twice")));
            }
            entries.push((row, vertex_labels.intern(&e.tail), -1));
            for h in &e.heads {
                entries.push((row, vertex_labels.intern(h), 1));
            }
        }
        let mut t = Triples::new(edges.len(), vertex_labels.len());
        for (i, j, v) in entries {
            t.push(i, j, v);
        }
        Ok(IncidenceMatrix {
            mat: sparse_build(&t, |a, _| a)?,
            edge_labels,
            vertex_labels,
        })
    }
}

/// Projects an incidence matrix onto an adjacency matrix,
/// `A = |Eᵀ < 0| · |E > 0|` over `plus_times_i64`.
///
/// `A(v1, v2)` counts the edges with tail `v1` and a head at `v2`, so
/// parallel edges add up.
pub fn incidence_to_adjacency(e: &IncidenceMatrix) -> Result<AdjacencyMatrix<i64>> {
    let tails = apply(&transpose(&e.mat), |x: i64| (x < 0).then_some(1i64));
    let heads = apply(&e.mat, |x: i64| (x > 0).then_some(1i64));
    let mat = spgemm(&tails, &heads, &plus_times_i64())?;
    AdjacencyMatrix::from_matrix(mat, e.vertex_labels.clone())
}

/// Boolean projection: `A(v1, v2)` is true when at least one edge connects
/// `v1` to `v2`.
pub fn incidence_to_adjacency_bool(e: &IncidenceMatrix) -> Result<AdjacencyMatrix<bool>> {
    let tails = apply(&transpose(&e.mat), |x: i64| (x < 0).then_some(true));
    let heads = apply(&e.mat, |x: i64| (x > 0).then_some(true));
    let mat = spgemm(&tails, &heads, &or_and_bool())?;
    AdjacencyMatrix::from_matrix(mat, e.vertex_labels.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::plus_times_i64;
    use crate::matrix::matrix_equal;

    fn alice_edges() -> Vec<Edge<i64>> {
        vec![Edge::new("alice", "bob", 1), Edge::new("alice", "carl", 1)]
    }

    #[test]
    fn alice_adjacency() {
        let a = AdjacencyMatrix::from_edges(&alice_edges(), &plus_times_i64()).unwrap();
        assert_eq!(a.vertex("alice").unwrap(), 0);
        assert_eq!(a.vertex("bob").unwrap(), 1);
        assert_eq!(a.vertex("carl").unwrap(), 2);
        assert_eq!(a.mat.iter().map(|(i, j, &v)| (i, j, v)).collect::<Vec<_>>(), vec![(0, 1, 1), (0, 2, 1)]);
    }

    #[test]
    fn declared_vertices_without_edges() {
        let a = AdjacencyMatrix::<i64>::from_vertices_and_edges(["x", "y", "z"], &[], &plus_times_i64()).unwrap();
        assert_eq!(a.mat.shape(), (3, 3));
        assert_eq!(a.mat.nnz(), 0);
    }

    #[test]
    fn directed_and_weighted() {
        let s = plus_times_i64();
        let a = AdjacencyMatrix::from_edges(&[Edge::new("a", "b", 3), Edge::new("a", "b", 4)], &s).unwrap();
        assert_eq!(a.mat.get(0, 1), Some(&7));
        assert_eq!(a.mat.get(1, 0), None);
        assert!(matches!(
            AdjacencyMatrix::from_edges(&[Edge::new("a", "b", 0)], &s),
            Err(Error::ZeroWeight { .. })
        ));
    }

    #[test]
    fn bipartite_is_rectangular() {
        let s = plus_times_i64();
        let a = AdjacencyMatrix::bipartite_from_edges(&[Edge::new("u1", "p1", 1), Edge::new("u2", "p1", 1), Edge::new("u2", "p2", 1)], &s).unwrap();
        assert_eq!(a.mat.shape(), (2, 2));
        assert_eq!(a.in_labels.index_of("p2").unwrap(), 1);
        let a = AdjacencyMatrix::bipartite_from_edges(&[Edge::new("u1", "p1", 1), Edge::new("u1", "p2", 1)], &s).unwrap();
        assert_eq!(a.mat.shape(), (1, 2));
    }

    #[test]
    fn incidence_conventions() {
        let e = IncidenceMatrix::from_edges(&[HyperEdge::new("e0", "v0", &["v1"])]).unwrap();
        assert_eq!(e.mat.get(0, 0), Some(&-1));
        assert_eq!(e.mat.get(0, 1), Some(&1));

        let e = IncidenceMatrix::from_edges(&[HyperEdge::new("i", "v1", &["v2"]), HyperEdge::new("j", "v1", &["v2"])]).unwrap();
        assert_eq!(e.mat.shape(), (2, 2));

        let e = IncidenceMatrix::from_edges(&[HyperEdge::new("h", "v1", &["v2", "v3"])]).unwrap();
        assert_eq!(e.mat.iter().map(|(_, _, &v)| v).collect::<Vec<_>>(), vec![-1, 1, 1]);
    }

    #[test]
    fn incidence_errors() {
        assert!(IncidenceMatrix::from_edges(&[HyperEdge::new("e", "v", &["v"])]).is_err());
        assert!(IncidenceMatrix::from_edges(&[HyperEdge::new("e", "v", &[])]).is_err());
        assert!(IncidenceMatrix::from_edges(&[HyperEdge::new("e", "a", &["b"]), HyperEdge::new("e", "a", &["c"])]).is_err());
    }

    // Dense evaluation of |Eᵀ<0||E>0| for tiny incidence matrices.
    fn dense_projection(e: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = e.first().map_or(0, Vec::len);
        let mut a = vec![vec![0; n]; n];
        for row in e {
            for v1 in 0..n {
                for v2 in 0..n {
                    a[v1][v2] += i64::from(row[v1] < 0) * i64::from(row[v2] > 0);
                }
            }
        }
        a
    }

    #[test]
    fn projection_matches_dense_evaluation() {
        let cases: Vec<(Vec<HyperEdge>, Vec<Vec<i64>>)> = vec![
            (vec![HyperEdge::new("e0", "v0", &["v1"])], vec![vec![-1, 1]]),
            (
                vec![HyperEdge::new("e0", "v0", &["v1"]), HyperEdge::new("e1", "v0", &["v1"])],
                vec![vec![-1, 1], vec![-1, 1]],
            ),
            (vec![HyperEdge::new("e", "v1", &["v2", "v3"])], vec![vec![-1, 1, 1]]),
        ];
        for (edges, dense_e) in cases {
            let expected = dense_projection(&dense_e);
            let a = incidence_to_adjacency(&IncidenceMatrix::from_edges(&edges).unwrap()).unwrap();
            for (v1, row) in expected.iter().enumerate() {
                for (v2, &want) in row.iter().enumerate() {
                    assert_eq!(a.mat.get(v1, v2).copied().unwrap_or(0), want, "{edges:?} at ({v1},{v2})");
                }
            }
        }
    }

    #[test]
    fn projection_loses_edge_identity() {
        let e1 = IncidenceMatrix::from_edges(&[HyperEdge::new("x", "a", &["b"]), HyperEdge::new("y", "a", &["b"])]).unwrap();
        let e2 = IncidenceMatrix::from_edges(&[HyperEdge::new("p", "a", &["b"]), HyperEdge::new("q", "a", &["b"])]).unwrap();
        assert_ne!(e1.edge_labels, e2.edge_labels);
        let (a1, a2) = (incidence_to_adjacency(&e1).unwrap(), incidence_to_adjacency(&e2).unwrap());
        assert!(matrix_equal(&a1.mat, &a2.mat, 0));
        let b = incidence_to_adjacency_bool(&e1).unwrap();
        assert_eq!(b.mat.get(0, 1), Some(&true));
    }

    #[test]
    fn label_tsv() {
        let mut out = Vec::new();
        LabelDict::from_labels(["alice", "bob"]).unwrap().write_tsv(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "alice\t0\nbob\t1\n");
        assert!(LabelDict::from_labels(["a", "a"]).is_err());
    }
}

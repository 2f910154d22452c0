//! Triples, compressed-sparse-row matrices and sparse vectors.
//!
//! Matrices do not carry a semiring: every operation that needs `⊕`/`⊗`
//! receives one as a parameter, and no constructor drops entries by value.
//! Use [`prune`] or [`matrix_equal`] to treat identity-valued entries as
//! absent.

use std::fmt;

use crate::algebra::{Scalar, Semiring};
use crate::error::{Error, Result};

/// Coordinate (COO) form: parallel row, column and value sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct Triples<T> {
    pub nrows: usize,
    pub ncols: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub v: Vec<T>,
}

impl<T> Triples<T> {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        Triples {
            nrows,
            ncols,
            i: Vec::new(),
            j: Vec::new(),
            v: Vec::new(),
        }
    }

    pub fn from_vecs(nrows: usize, ncols: usize, i: Vec<usize>, j: Vec<usize>, v: Vec<T>) -> Result<Self> {
        if i.len() != j.len() || i.len() != v.len() {
            return Err(Error::RaggedTriples {
                i: i.len(),
                j: j.len(),
                v: v.len(),
            });
        }
        Ok(Triples { nrows, ncols, i, j, v })
    }

    pub fn push(&mut self, row: usize, col: usize, value: T) {
        self.i.push(row);
        self.j.push(col);
        self.v.push(value);
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.i.iter().zip(&self.j).zip(&self.v).map(|((&r, &c), v)| (r, c, v))
    }
}

/// Compressed sparse row matrix.
///
/// Invariants (checked by [`SparseMatrix::validate`]): `row_offsets` has
/// length `nrows + 1`, starts at 0, is nondecreasing and ends at `nnz`;
/// column indices are strictly increasing within each row and below `ncols`.
#[derive(Clone, PartialEq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={}) {{", self.nrows, self.ncols, self.values.len())?;
        for r in 0..self.nrows {
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                write!(f, " ({r},{})={:?}", self.col_indices[k], self.values[k])?;
            }
        }
        write!(f, " }}")
    }
}

impl<T> SparseMatrix<T> {
    /// An `nrows × ncols` matrix with no stored entries.
    pub fn empty(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            row_offsets: vec![0; nrows + 1],
            col_indices: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Assembles a matrix from raw CSR arrays, validating every invariant.
    pub fn from_csr_parts(
        nrows: usize,
        ncols: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<T>,
    ) -> Result<Self> {
        let m = SparseMatrix {
            nrows,
            ncols,
            row_offsets,
            col_indices,
            values,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_csr_unchecked(
        nrows: usize,
        ncols: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<T>,
    ) -> Self {
        let m = SparseMatrix {
            nrows,
            ncols,
            row_offsets,
            col_indices,
            values,
        };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    /// Number of stored entries (the edge count of a graph).
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Column indices and values of row `r`.
    #[inline]
    pub fn row(&self, r: usize) -> (&[usize], &[T]) {
        let (s, e) = (self.row_offsets[r], self.row_offsets[r + 1]);
        (&self.col_indices[s..e], &self.values[s..e])
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        if r >= self.nrows {
            return None;
        }
        let (cols, vals) = self.row(r);
        cols.binary_search(&c).ok().map(|k| &vals[k])
    }

    /// Stored entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        (0..self.nrows).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals).map(move |(&c, v)| (r, c, v))
        })
    }

    /// Checks every CSR invariant.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(format!("invalid CSR matrix: {msg}")));
        if self.row_offsets.len() != self.nrows + 1 {
            return bad(format!("row_offsets has length {}, expected {}", self.row_offsets.len(), self.nrows + 1));
        }
        if self.row_offsets[0] != 0 {
            return bad("row_offsets[0] != 0".into());
        }
        if self.col_indices.len() != self.values.len() {
            return bad("column and value arrays differ in length".into());
        }
        if self.row_offsets[self.nrows] != self.values.len() {
            return bad("row_offsets does not end at nnz".into());
        }
        for r in 0..self.nrows {
            let (s, e) = (self.row_offsets[r], self.row_offsets[r + 1]);
            if s > e {
                return bad(format!("row_offsets decreases at row {r}"));
            }
            let cols = &self.col_indices[s..e];
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {r} columns not strictly increasing"));
            }
            if let Some(&c) = cols.last() {
                if c >= self.ncols {
                    return bad(format!("row {r} column {c} >= ncols {}", self.ncols));
                }
            }
        }
        Ok(())
    }
}

/// Builds a CSR matrix from triples.
///
/// Entries are sorted row-major. Duplicate coordinates are combined
/// left-to-right in input order with `dup`. No entry is dropped by value.
pub fn sparse_build<T: Copy>(t: &Triples<T>, dup: impl Fn(T, T) -> T) -> Result<SparseMatrix<T>> {
    if t.i.len() != t.j.len() || t.i.len() != t.v.len() {
        return Err(Error::RaggedTriples {
            i: t.i.len(),
            j: t.j.len(),
            v: t.v.len(),
        });
    }
    let (m, n) = (t.nrows, t.ncols);
    let mut counts = vec![0usize; m + 1];
    for (position, (r, c, _)) in t.iter().enumerate() {
        if r >= m || c >= n {
            return Err(Error::IndexOutOfBounds {
                position,
                row: r,
                col: c,
                nrows: m,
                ncols: n,
            });
        }
        counts[r + 1] += 1;
    }
    for r in 0..m {
        counts[r + 1] += counts[r];
    }

    // Stable bucket by row, then stable sort by column inside each row.
    let mut order = vec![0usize; t.len()];
    let mut next = counts.clone();
    for (k, &r) in t.i.iter().enumerate() {
        order[next[r]] = k;
        next[r] += 1;
    }

    let mut row_offsets = Vec::with_capacity(m + 1);
    let mut col_indices = Vec::with_capacity(t.len());
    let mut values = Vec::with_capacity(t.len());
    row_offsets.push(0);
    for r in 0..m {
        let bucket = &mut order[counts[r]..counts[r + 1]];
        bucket.sort_by_key(|&k| t.j[k]);
        for &k in bucket.iter() {
            let (c, v) = (t.j[k], t.v[k]);
            if col_indices.len() > row_offsets[r] && *col_indices.last().unwrap() == c {
                let last = values.last_mut().unwrap();
                *last = dup(*last, v);
            } else {
                col_indices.push(c);
                values.push(v);
            }
        }
        row_offsets.push(col_indices.len());
    }
    Ok(SparseMatrix::from_csr_unchecked(m, n, row_offsets, col_indices, values))
}

/// Extracts the stored entries as row-major triples.
pub fn find<T: Copy>(a: &SparseMatrix<T>) -> Triples<T> {
    let mut i = Vec::with_capacity(a.nnz());
    for r in 0..a.nrows {
        i.extend(std::iter::repeat_n(r, a.row_offsets[r + 1] - a.row_offsets[r]));
    }
    Triples {
        nrows: a.nrows,
        ncols: a.ncols,
        i,
        j: a.col_indices.clone(),
        v: a.values.clone(),
    }
}

pub fn transpose<T: Copy>(a: &SparseMatrix<T>) -> SparseMatrix<T> {
    let mut offsets = vec![0usize; a.ncols + 1];
    for &c in &a.col_indices {
        offsets[c + 1] += 1;
    }
    for c in 0..a.ncols {
        offsets[c + 1] += offsets[c];
    }
    let mut next = offsets.clone();
    let mut cols = vec![0usize; a.nnz()];
    let mut vals = a.values.clone();
    // Rows are visited in ascending order, so each output row comes out sorted.
    for r in 0..a.nrows {
        for k in a.row_offsets[r]..a.row_offsets[r + 1] {
            let c = a.col_indices[k];
            cols[next[c]] = r;
            vals[next[c]] = a.values[k];
            next[c] += 1;
        }
    }
    SparseMatrix::from_csr_unchecked(a.ncols, a.nrows, offsets, cols, vals)
}

/// Structural equality that ignores entries approximately equal to `zero`.
///
/// Integer and boolean values compare exactly; floats compare with the
/// relative tolerance of [`Scalar::approx_eq`].
pub fn matrix_equal<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>, zero: T) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let keep = |v: &T| !v.approx_eq(zero);
    for r in 0..a.nrows {
        let (ac, av) = a.row(r);
        let (bc, bv) = b.row(r);
        let mut lhs = ac.iter().zip(av).filter(|(_, v)| keep(v));
        let mut rhs = bc.iter().zip(bv).filter(|(_, v)| keep(v));
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => break,
                (Some((ca, va)), Some((cb, vb))) if ca == cb && va.approx_eq(*vb) => {}
                _ => return false,
            }
        }
    }
    true
}

/// Removes stored entries equal to `zero`.
pub fn prune<T: Scalar>(a: &SparseMatrix<T>, zero: T) -> SparseMatrix<T> {
    let mut row_offsets = Vec::with_capacity(a.nrows + 1);
    let mut col_indices = Vec::with_capacity(a.nnz());
    let mut values = Vec::with_capacity(a.nnz());
    row_offsets.push(0);
    for r in 0..a.nrows {
        let (cols, vals) = a.row(r);
        for (&c, &v) in cols.iter().zip(vals) {
            if v != zero {
                col_indices.push(c);
                values.push(v);
            }
        }
        row_offsets.push(col_indices.len());
    }
    SparseMatrix::from_csr_unchecked(a.nrows, a.ncols, row_offsets, col_indices, values)
}

/// `n × n` matrix with `mult_identity` on the diagonal.
pub fn identity_matrix<T: Scalar>(n: usize, s: &Semiring<T>) -> SparseMatrix<T> {
    SparseMatrix::from_csr_unchecked(n, n, (0..=n).collect(), (0..n).collect(), vec![s.mult_identity(); n])
}

/// Sparse vector with strictly increasing indices.
#[derive(Clone, PartialEq)]
pub struct SparseVector<T> {
    len: usize,
    indices: Vec<usize>,
    values: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for SparseVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseVector(len={}) {{", self.len)?;
        for (i, v) in self.indices.iter().zip(&self.values) {
            write!(f, " {i}={v:?}")?;
        }
        write!(f, " }}")
    }
}

impl<T> SparseVector<T> {
    pub fn empty(len: usize) -> Self {
        SparseVector {
            len,
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn new(len: usize, indices: Vec<usize>, values: Vec<T>) -> Result<Self> {
        if indices.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "sparse vector has {} indices but {} values",
                indices.len(),
                values.len()
            )));
        }
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "sparse vector indices not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        if let Some(&i) = indices.last() {
            if i >= len {
                return Err(Error::SelectionOutOfBounds {
                    what: "sparse vector",
                    index: i,
                    bound: len,
                });
            }
        }
        Ok(SparseVector { len, indices, values })
    }

    pub(crate) fn from_parts_unchecked(len: usize, indices: Vec<usize>, values: Vec<T>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indices.last().is_none_or(|&i| i < len));
        SparseVector { len, indices, values }
    }

    /// A vector with a single stored entry.
    pub fn unit(len: usize, index: usize, value: T) -> Result<Self> {
        Self::new(len, vec![index], vec![value])
    }

    /// Every position stored, taken from a dense slice.
    pub fn from_dense(values: Vec<T>) -> Self {
        let len = values.len();
        SparseVector {
            len,
            indices: (0..len).collect(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Option<&T> {
        self.indices.binary_search(&i).ok().map(|k| &self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.indices.iter().copied().zip(&self.values)
    }

    /// Keeps the entries for which `keep` returns true.
    pub fn retain(&mut self, mut keep: impl FnMut(usize, &T) -> bool) {
        let mut w = 0;
        for r in 0..self.indices.len() {
            if keep(self.indices[r], &self.values[r]) {
                self.indices.swap(w, r);
                self.values.swap(w, r);
                w += 1;
            }
        }
        self.indices.truncate(w);
        self.values.truncate(w);
    }
}

impl<T: Copy> SparseVector<T> {
    /// Dense copy with `fill` at absent positions.
    pub fn to_dense(&self, fill: T) -> Vec<T> {
        let mut out = vec![fill; self.len];
        for (i, &v) in self.iter() {
            out[i] = v;
        }
        out
    }

    /// The vector as an `len × 1` matrix.
    pub fn to_column(&self) -> SparseMatrix<T> {
        let mut offsets = vec![0usize; self.len + 1];
        for &i in &self.indices {
            offsets[i + 1] = 1;
        }
        for r in 0..self.len {
            offsets[r + 1] += offsets[r];
        }
        SparseMatrix::from_csr_unchecked(self.len, 1, offsets, vec![0; self.nnz()], self.values.clone())
    }
}

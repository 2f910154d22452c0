//! The operation set over sparse matrices: semiring products, element-wise
//! combination, sub-matrix reference and assignment, apply and reduce.
//!
//! Every kernel is a pure function of its inputs. Absent entries stand for
//! the semiring's additive identity. [`spgemm`] is the only kernel that
//! removes identity-valued results; the others never drop entries by value.

pub mod laws;

use rayon::prelude::*;

use crate::algebra::{Scalar, Semiring};
use crate::error::{Error, Result};
use crate::matrix::{SparseMatrix, SparseVector};

/// Names of the exported operations. Algorithms are written against this
/// set alone.
pub const OPERATIONS: &[&str] = &[
    "sparse_build",
    "find",
    "transpose",
    "spgemm",
    "spmv",
    "sp_ref",
    "sp_asgn",
    "ewise_add",
    "ewise_add_vec",
    "ewise_mult",
    "apply",
    "reduce_rows",
    "reduce_all",
    "identity_matrix",
    "matrix_equal",
];

fn check_same_shape<A, B>(op: &'static str, a: &SparseMatrix<A>, b: &SparseMatrix<B>) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op,
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(())
}

// Output of one contiguous block of rows.
struct RowBlock<T> {
    row_lengths: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<T>,
}

fn spgemm_rows<T: Scalar>(
    a: &SparseMatrix<T>,
    b: &SparseMatrix<T>,
    s: &Semiring<T>,
    rows: std::ops::Range<usize>,
) -> RowBlock<T> {
    let n = b.ncols();
    let mut acc: Vec<T> = vec![s.add_identity(); n];
    // marker[j] == row + 1 when column j was touched in the current row.
    let mut marker = vec![0usize; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut out = RowBlock {
        row_lengths: Vec::with_capacity(rows.len()),
        cols: Vec::new(),
        vals: Vec::new(),
    };
    for i in rows {
        let tag = i + 1;
        touched.clear();
        let (a_cols, a_vals) = a.row(i);
        // Ascending k, so every output value is accumulated in a fixed order.
        for (&k, &a_ik) in a_cols.iter().zip(a_vals) {
            let (b_cols, b_vals) = b.row(k);
            for (&j, &b_kj) in b_cols.iter().zip(b_vals) {
                let p = s.mult(a_ik, b_kj);
                if marker[j] == tag {
                    acc[j] = s.add(acc[j], p);
                } else {
                    marker[j] = tag;
                    acc[j] = p;
                    touched.push(j);
                }
            }
        }
        touched.sort_unstable();
        let before = out.cols.len();
        for &j in &touched {
            let v = acc[j];
            if !s.is_add_identity(v) {
                out.cols.push(j);
                out.vals.push(v);
            }
        }
        out.row_lengths.push(out.cols.len() - before);
    }
    out
}

/// Semiring matrix product `C(i,j) = ⊕ₖ A(i,k) ⊗ B(k,j)`.
///
/// Row-wise (Gustavson) with a dense accumulator. Runs data-parallel over
/// contiguous blocks of output rows on the current rayon pool; the result is
/// bitwise identical for every pool size. Entries equal to `add_identity`
/// are removed from the output.
pub fn spgemm<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>, s: &Semiring<T>) -> Result<SparseMatrix<T>> {
    if a.ncols() != b.nrows() {
        return Err(Error::DimensionMismatch {
            op: "spgemm",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let m = a.nrows();
    let threads = rayon::current_num_threads();
    let blocks: Vec<RowBlock<T>> = if threads <= 1 || m < 2 {
        vec![spgemm_rows(a, b, s, 0..m)]
    } else {
        let block = m.div_ceil(threads * 4).max(1);
        (0..m.div_ceil(block))
            .into_par_iter()
            .map(|blk| spgemm_rows(a, b, s, blk * block..((blk + 1) * block).min(m)))
            .collect()
    };

    let nnz: usize = blocks.iter().map(|b| b.cols.len()).sum();
    let mut row_offsets = Vec::with_capacity(m + 1);
    let mut cols = Vec::with_capacity(nnz);
    let mut vals = Vec::with_capacity(nnz);
    row_offsets.push(0);
    for blk in blocks {
        for len in blk.row_lengths {
            let last = *row_offsets.last().unwrap();
            row_offsets.push(last + len);
        }
        cols.extend(blk.cols);
        vals.extend(blk.vals);
    }
    Ok(SparseMatrix::from_csr_unchecked(m, b.ncols(), row_offsets, cols, vals))
}

/// Matrix-vector product `y(i) = ⊕ⱼ A(i,j) ⊗ x(j)`; same semantics as
/// [`spgemm`] with `x` as a single column.
pub fn spmv<T: Scalar>(a: &SparseMatrix<T>, x: &SparseVector<T>, s: &Semiring<T>) -> Result<SparseVector<T>> {
    if a.ncols() != x.len() {
        return Err(Error::DimensionMismatch {
            op: "spmv",
            left: a.shape(),
            right: (x.len(), 1),
        });
    }
    let mut slot = vec![usize::MAX; x.len()];
    for (k, &i) in x.indices().iter().enumerate() {
        slot[i] = k;
    }
    let xv = x.values();
    let mut indices = Vec::new();
    let mut values = Vec::new();
    if x.nnz() == 0 {
        return Ok(SparseVector::empty(a.nrows()));
    }
    for i in 0..a.nrows() {
        let (cols, vals) = a.row(i);
        let mut acc: Option<T> = None;
        for (&j, &a_ij) in cols.iter().zip(vals) {
            let k = slot[j];
            if k == usize::MAX {
                continue;
            }
            let p = s.mult(a_ij, xv[k]);
            acc = Some(match acc {
                Some(v) => s.add(v, p),
                None => p,
            });
        }
        if let Some(v) = acc {
            if !s.is_add_identity(v) {
                indices.push(i);
                values.push(v);
            }
        }
    }
    Ok(SparseVector::from_parts_unchecked(a.nrows(), indices, values))
}

/// Merges two sorted rows. `both` combines overlapping entries; `only`
/// decides what happens to entries present in one operand.
fn merge_rows<T: Copy>(
    a: (&[usize], &[T]),
    b: (&[usize], &[T]),
    union: bool,
    both: impl Fn(T, T) -> T,
    cols: &mut Vec<usize>,
    vals: &mut Vec<T>,
) {
    let (ac, av) = a;
    let (bc, bv) = b;
    let (mut p, mut q) = (0, 0);
    while p < ac.len() && q < bc.len() {
        match ac[p].cmp(&bc[q]) {
            std::cmp::Ordering::Less => {
                if union {
                    cols.push(ac[p]);
                    vals.push(av[p]);
                }
                p += 1;
            }
            std::cmp::Ordering::Greater => {
                if union {
                    cols.push(bc[q]);
                    vals.push(bv[q]);
                }
                q += 1;
            }
            std::cmp::Ordering::Equal => {
                cols.push(ac[p]);
                vals.push(both(av[p], bv[q]));
                p += 1;
                q += 1;
            }
        }
    }
    if union {
        cols.extend_from_slice(&ac[p..]);
        vals.extend_from_slice(&av[p..]);
        cols.extend_from_slice(&bc[q..]);
        vals.extend_from_slice(&bv[q..]);
    }
}

fn ewise<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>, union: bool, f: impl Fn(T, T) -> T) -> SparseMatrix<T> {
    let m = a.nrows();
    let mut row_offsets = Vec::with_capacity(m + 1);
    let mut cols = Vec::with_capacity(if union { a.nnz() + b.nnz() } else { a.nnz().min(b.nnz()) });
    let mut vals = Vec::with_capacity(cols.capacity());
    row_offsets.push(0);
    for r in 0..m {
        merge_rows(a.row(r), b.row(r), union, &f, &mut cols, &mut vals);
        row_offsets.push(cols.len());
    }
    SparseMatrix::from_csr_unchecked(m, a.ncols(), row_offsets, cols, vals)
}

/// Element-wise `C(i,j) = A(i,j) ⊕ B(i,j)` over the union of both patterns.
pub fn ewise_add<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>, s: &Semiring<T>) -> Result<SparseMatrix<T>> {
    check_same_shape("ewise_add", a, b)?;
    Ok(ewise(a, b, true, |x, y| s.add(x, y)))
}

/// Element-wise (Hadamard) `C(i,j) = A(i,j) ⊗ B(i,j)` over the intersection
/// of both patterns. Requires `add_identity` to annihilate `⊗`.
pub fn ewise_mult<T: Scalar>(a: &SparseMatrix<T>, b: &SparseMatrix<T>, s: &Semiring<T>) -> Result<SparseMatrix<T>> {
    check_same_shape("ewise_mult", a, b)?;
    if !s.flags().add_identity_annihilates_mult {
        return Err(Error::MissingAnnihilator {
            op: "ewise_mult",
            semiring: s.name().to_string(),
        });
    }
    Ok(ewise(a, b, false, |x, y| s.mult(x, y)))
}

/// Union-pattern `⊕` of two sparse vectors.
pub fn ewise_add_vec<T: Scalar>(x: &SparseVector<T>, y: &SparseVector<T>, s: &Semiring<T>) -> Result<SparseVector<T>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            op: "ewise_add_vec",
            left: (x.len(), 1),
            right: (y.len(), 1),
        });
    }
    let mut indices = Vec::with_capacity(x.nnz() + y.nnz());
    let mut values = Vec::with_capacity(x.nnz() + y.nnz());
    merge_rows(
        (x.indices(), x.values()),
        (y.indices(), y.values()),
        true,
        |a, b| s.add(a, b),
        &mut indices,
        &mut values,
    );
    Ok(SparseVector::from_parts_unchecked(x.len(), indices, values))
}

/// Sub-matrix reference: `C(p,q) = A(rows[p], cols[q])`. Repeated indices
/// select the same row or column more than once.
pub fn sp_ref<T: Scalar>(a: &SparseMatrix<T>, rows: &[usize], cols: &[usize]) -> Result<SparseMatrix<T>> {
    for &r in rows {
        if r >= a.nrows() {
            return Err(Error::SelectionOutOfBounds {
                what: "sp_ref rows",
                index: r,
                bound: a.nrows(),
            });
        }
    }
    // targets[j] lists every output column q with cols[q] == j, ascending.
    let mut target_offsets = vec![0usize; a.ncols() + 1];
    for &c in cols {
        if c >= a.ncols() {
            return Err(Error::SelectionOutOfBounds {
                what: "sp_ref cols",
                index: c,
                bound: a.ncols(),
            });
        }
        target_offsets[c + 1] += 1;
    }
    for c in 0..a.ncols() {
        target_offsets[c + 1] += target_offsets[c];
    }
    let mut next = target_offsets.clone();
    let mut targets = vec![0usize; cols.len()];
    for (q, &c) in cols.iter().enumerate() {
        targets[next[c]] = q;
        next[c] += 1;
    }

    let mut row_offsets = Vec::with_capacity(rows.len() + 1);
    let mut out_cols = Vec::new();
    let mut out_vals = Vec::new();
    let mut scratch: Vec<(usize, T)> = Vec::new();
    row_offsets.push(0);
    for &r in rows {
        scratch.clear();
        let (rc, rv) = a.row(r);
        for (&j, &v) in rc.iter().zip(rv) {
            for &q in &targets[target_offsets[j]..target_offsets[j + 1]] {
                scratch.push((q, v));
            }
        }
        scratch.sort_unstable_by_key(|&(q, _)| q);
        for &(q, v) in &scratch {
            out_cols.push(q);
            out_vals.push(v);
        }
        row_offsets.push(out_cols.len());
    }
    Ok(SparseMatrix::from_csr_unchecked(rows.len(), cols.len(), row_offsets, out_cols, out_vals))
}

fn position_map(what: &'static str, indices: &[usize], bound: usize) -> Result<Vec<Option<usize>>> {
    let mut map = vec![None; bound];
    for (p, &i) in indices.iter().enumerate() {
        if i >= bound {
            return Err(Error::SelectionOutOfBounds { what, index: i, bound });
        }
        if map[i].replace(p).is_some() {
            return Err(Error::DuplicateIndex { what, index: i });
        }
    }
    Ok(map)
}

/// Sub-matrix assignment: returns `A` with the region `rows × cols` replaced
/// by `B`. The pattern of `B` overwrites the region, so entries absent from
/// `B` are deleted.
pub fn sp_asgn<T: Scalar>(a: &SparseMatrix<T>, rows: &[usize], cols: &[usize], b: &SparseMatrix<T>) -> Result<SparseMatrix<T>> {
    if b.shape() != (rows.len(), cols.len()) {
        return Err(Error::DimensionMismatch {
            op: "sp_asgn",
            left: (rows.len(), cols.len()),
            right: b.shape(),
        });
    }
    let row_pos = position_map("sp_asgn rows", rows, a.nrows())?;
    let col_pos = position_map("sp_asgn cols", cols, a.ncols())?;

    let mut row_offsets = Vec::with_capacity(a.nrows() + 1);
    let mut out_cols = Vec::with_capacity(a.nnz() + b.nnz());
    let mut out_vals = Vec::with_capacity(a.nnz() + b.nnz());
    let mut scratch: Vec<(usize, T)> = Vec::new();
    row_offsets.push(0);
    for (r, pos) in row_pos.iter().enumerate() {
        let (ac, av) = a.row(r);
        match *pos {
            None => {
                out_cols.extend_from_slice(ac);
                out_vals.extend_from_slice(av);
            }
            Some(p) => {
                scratch.clear();
                scratch.extend(
                    ac.iter()
                        .zip(av)
                        .filter(|(&j, _)| col_pos[j].is_none())
                        .map(|(&j, &v)| (j, v)),
                );
                let (bc, bv) = b.row(p);
                scratch.extend(bc.iter().zip(bv).map(|(&q, &v)| (cols[q], v)));
                scratch.sort_unstable_by_key(|&(j, _)| j);
                for &(j, v) in &scratch {
                    out_cols.push(j);
                    out_vals.push(v);
                }
            }
        }
        row_offsets.push(out_cols.len());
    }
    Ok(SparseMatrix::from_csr_unchecked(a.nrows(), a.ncols(), row_offsets, out_cols, out_vals))
}

/// Applies `f` to every stored entry. Returning `None` drops the entry, so
/// the pattern can shrink but never grow.
pub fn apply<T: Copy, U>(a: &SparseMatrix<T>, f: impl Fn(T) -> Option<U>) -> SparseMatrix<U> {
    let mut row_offsets = Vec::with_capacity(a.nrows() + 1);
    let mut cols = Vec::with_capacity(a.nnz());
    let mut vals = Vec::with_capacity(a.nnz());
    row_offsets.push(0);
    for r in 0..a.nrows() {
        let (rc, rv) = a.row(r);
        for (&c, &v) in rc.iter().zip(rv) {
            if let Some(u) = f(v) {
                cols.push(c);
                vals.push(u);
            }
        }
        row_offsets.push(cols.len());
    }
    SparseMatrix::from_csr_unchecked(a.nrows(), a.ncols(), row_offsets, cols, vals)
}

/// `⊕` over the stored entries of each row, in ascending column order.
/// Rows without stored entries produce no entry.
pub fn reduce_rows<T: Scalar>(a: &SparseMatrix<T>, s: &Semiring<T>) -> SparseVector<T> {
    let mut indices = Vec::new();
    let mut values = Vec::new();
    for r in 0..a.nrows() {
        let (_, rv) = a.row(r);
        if let Some((&first, rest)) = rv.split_first() {
            indices.push(r);
            values.push(rest.iter().fold(first, |acc, &v| s.add(acc, v)));
        }
    }
    SparseVector::from_parts_unchecked(a.nrows(), indices, values)
}

/// `⊕` over every stored entry in row-major order; `add_identity` when empty.
pub fn reduce_all<T: Scalar>(a: &SparseMatrix<T>, s: &Semiring<T>) -> T {
    a.values().iter().fold(s.add_identity(), |acc, &v| s.add(acc, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{min_plus_i64, or_and_bool, plus_times_f64, plus_times_i64, SemiringFlags};
    use crate::matrix::{identity_matrix, matrix_equal, sparse_build, transpose, Triples};

    fn build(m: usize, n: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix<i64> {
        let mut t = Triples::new(m, n);
        for &(i, j, v) in entries {
            t.push(i, j, v);
        }
        sparse_build(&t, |a, b| a + b).unwrap()
    }

    fn two_edges() -> SparseMatrix<i64> {
        build(3, 3, &[(0, 1, 1), (0, 2, 1)])
    }

    #[test]
    fn identity_times_a() {
        let s = plus_times_i64();
        let a = build(3, 4, &[(0, 1, 4), (2, 3, -2), (1, 0, 9)]);
        let c = spgemm(&identity_matrix(3, &s), &a, &s).unwrap();
        assert!(matrix_equal(&c, &a, 0));
    }

    #[test]
    fn alice_traversal_by_product() {
        let s = plus_times_i64();
        let alice = build(3, 1, &[(0, 0, 1)]);
        let next = spgemm(&transpose(&two_edges()), &alice, &s).unwrap();
        assert_eq!(next.iter().map(|(r, _, _)| r).collect::<Vec<_>>(), vec![1, 2]);

        let x = SparseVector::unit(3, 0, 1).unwrap();
        let y = spmv(&transpose(&two_edges()), &x, &s).unwrap();
        assert_eq!(y.indices(), &[1, 2]);
    }

    #[test]
    fn spgemm_shape_error() {
        let a = build(2, 3, &[]);
        match spgemm(&a, &a, &plus_times_i64()) {
            Err(Error::DimensionMismatch { left, right, .. }) => assert_eq!((left, right), ((2, 3), (2, 3))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spgemm_prunes_cancellation() {
        let s = plus_times_i64();
        let a = build(1, 2, &[(0, 0, 1), (0, 1, 1)]);
        let b = build(2, 1, &[(0, 0, 5), (1, 0, -5)]);
        assert_eq!(spgemm(&a, &b, &s).unwrap().nnz(), 0);
    }

    #[test]
    fn spmv_empty_vector() {
        let y = spmv(&two_edges(), &SparseVector::empty(3), &plus_times_i64()).unwrap();
        assert_eq!(y.nnz(), 0);
        assert_eq!(y.len(), 3);
        assert!(spmv(&two_edges(), &SparseVector::empty(2), &plus_times_i64()).is_err());
    }

    #[test]
    fn ewise_add_min_plus_overlap() {
        let s = min_plus_i64();
        let a = build(2, 2, &[(0, 0, 3)]);
        let b = build(2, 2, &[(0, 0, 5), (1, 1, 2)]);
        let c = ewise_add(&a, &b, &s).unwrap();
        assert_eq!(c, build(2, 2, &[(0, 0, 3), (1, 1, 2)]));
        assert_eq!(ewise_add(&a, &build(2, 2, &[]), &s).unwrap(), a);
        assert!(ewise_add(&a, &build(2, 3, &[]), &s).is_err());
    }

    #[test]
    fn ewise_mult_intersection() {
        let s = plus_times_i64();
        let a = build(1, 2, &[(0, 0, 2), (0, 1, 4)]);
        let b = build(1, 2, &[(0, 0, 3)]);
        assert_eq!(ewise_mult(&a, &b, &s).unwrap(), build(1, 2, &[(0, 0, 6)]));
        assert_eq!(ewise_mult(&a, &build(1, 2, &[]), &s).unwrap().nnz(), 0);
    }

    #[test]
    fn ewise_mult_needs_annihilator() {
        let s = Semiring::new_unchecked("no_annihilator", |a: i64, b| a + b, 0, |a, b| a + b, 0, SemiringFlags {
            add_identity_annihilates_mult: false,
            ..SemiringFlags::ALL
        });
        let a = build(1, 1, &[(0, 0, 1)]);
        assert!(matches!(ewise_mult(&a, &a, &s), Err(Error::MissingAnnihilator { .. })));
    }

    #[test]
    fn sp_ref_alice() {
        let c = sp_ref(&two_edges(), &[0], &[1, 2]).unwrap();
        assert_eq!(c, build(1, 2, &[(0, 0, 1), (0, 1, 1)]));
        let all = sp_ref(&two_edges(), &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(all, two_edges());
        let rep = sp_ref(&two_edges(), &[0, 0], &[2, 2, 1]).unwrap();
        assert_eq!(rep.nnz(), 6);
        assert!(sp_ref(&two_edges(), &[3], &[0]).is_err());
    }

    #[test]
    fn sp_asgn_deletes() {
        let c = sp_asgn(&two_edges(), &[0], &[1], &build(1, 1, &[])).unwrap();
        assert_eq!(c, build(3, 3, &[(0, 2, 1)]));
        let b = build(3, 3, &[(1, 1, 7)]);
        assert_eq!(sp_asgn(&two_edges(), &[0, 1, 2], &[0, 1, 2], &b).unwrap(), b);
        assert!(matches!(
            sp_asgn(&two_edges(), &[0, 0], &[1], &build(2, 1, &[])),
            Err(Error::DuplicateIndex { .. })
        ));
        assert!(sp_asgn(&two_edges(), &[0], &[1], &build(2, 1, &[])).is_err());
    }

    #[test]
    fn apply_positive_indicator() {
        let e = build(2, 3, &[(0, 0, -1), (0, 1, 1), (1, 0, -1), (1, 2, 1)]);
        let pos = apply(&e, |x| (x > 0).then_some(1i64));
        assert_eq!(pos, build(2, 3, &[(0, 1, 1), (1, 2, 1)]));
        assert_eq!(apply(&e, Some), e);
    }

    #[test]
    fn reductions() {
        let s = plus_times_i64();
        let deg = reduce_rows(&two_edges(), &s);
        assert_eq!(deg.indices(), &[0]);
        assert_eq!(deg.values(), &[2]);
        assert_eq!(reduce_all(&build(3, 3, &[]), &s), 0);
        assert_eq!(reduce_all(&build(2, 2, &[]), &min_plus_i64()), crate::algebra::POS_INF);
        assert!(!reduce_all(&SparseMatrix::empty(1, 1), &or_and_bool()));
    }

    #[test]
    fn vector_union() {
        let s = plus_times_f64();
        let x = SparseVector::new(4, vec![0, 2], vec![1.0, 2.0]).unwrap();
        let y = SparseVector::new(4, vec![2, 3], vec![0.5, 4.0]).unwrap();
        let z = ewise_add_vec(&x, &y, &s).unwrap();
        assert_eq!(z.to_dense(0.0), vec![1.0, 0.0, 2.5, 4.0]);
    }
}

//! Sparse Gaussian elimination over a [`Field`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::field::Field;

/// A sparse vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a - c * b`.
fn sub_scaled<F: Field>(f: &F, a: &[(usize, F::Elem)], c: &F::Elem, b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.neg(&f.mul(c, &b[j].1))));
            j += 1;
        } else {
            let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-echelon basis of a subspace, keyed by leading index; every stored
/// vector has leading coefficient 1.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    pivots: BTreeMap<usize, SparseVec<F::Elem>>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F) -> Self {
        Echelon {
            field,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates leading entries of `v` against the stored pivots while
    /// the leading index is below `limit`.
    fn reduce_below(&self, mut v: SparseVec<F::Elem>, limit: usize) -> SparseVec<F::Elem> {
        while let Some((lead, c)) = v.first().cloned() {
            if lead >= limit {
                break;
            }
            match self.pivots.get(&lead) {
                Some(row) => v = sub_scaled(self.field, &v, &c, row),
                None => break,
            }
        }
        v
    }

    fn store(&mut self, v: SparseVec<F::Elem>) {
        let (lead, c) = v[0].clone();
        let inv = self.field.inv(&c);
        let row = v
            .into_iter()
            .map(|(i, x)| (i, self.field.mul(&inv, &x)))
            .collect();
        self.pivots.insert(lead, row);
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let v = self.reduce_below(v, usize::MAX);
        if v.is_empty() {
            return false;
        }
        self.store(v);
        true
    }

    pub fn contains(&self, v: SparseVec<F::Elem>) -> bool {
        self.reduce_below(v, usize::MAX).is_empty()
    }
}

/// Rank of the matrix with the given sparse columns.
pub fn rank<F: Field>(field: &F, columns: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut ech = Echelon::new(field);
    for c in columns {
        ech.insert(c);
    }
    ech.rank()
}

/// Rank and a kernel basis of the `nrows × columns.len()` matrix.
///
/// Each column `j` is tagged with the unit vector at `nrows + j`; a column
/// whose matrix part eliminates to zero leaves behind a kernel vector in
/// the tag coordinates. Kernel vectors come out in column order, each with
/// its largest nonzero coordinate at the column that produced it.
pub fn kernel<F: Field>(field: &F, nrows: usize, columns: &[SparseVec<F::Elem>]) -> (usize, Vec<SparseVec<F::Elem>>) {
    let mut ech = Echelon::new(field);
    let mut out = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        let mut v = c.clone();
        v.push((nrows + j, field.one()));
        let v = ech.reduce_below(v, nrows);
        if v[0].0 >= nrows {
            out.push(v.into_iter().map(|(i, x)| (i - nrows, x)).collect());
        } else {
            ech.store(v);
        }
    }
    (ech.rank(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn dense_to_sparse<F: Field>(f: &F, col: &[i64]) -> SparseVec<F::Elem> {
        col.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i, f.from_i64(v)))
            .collect()
    }

    #[test]
    fn small_ranks() {
        let q = Rationals;
        let cols = [[1, 1, 0], [0, 1, 1], [1, 2, 1]];
        let sparse: Vec<_> = cols.iter().map(|c| dense_to_sparse(&q, c)).collect();
        assert_eq!(rank(&q, sparse.clone()), 2);
        let (r, ker) = kernel(&q, 3, &sparse);
        assert_eq!(r, 2);
        assert_eq!(ker.len(), 1);
        // c0 + c1 - c2 = 0
        assert_eq!(ker[0], vec![(0, q.from_i64(-1)), (1, q.from_i64(-1)), (2, q.one())]);
    }

    #[test]
    fn characteristic_matters_for_two() {
        let cols = [[1, 1], [1, -1]];
        let q = Rationals;
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(&q, cols.iter().map(|c| dense_to_sparse(&q, c))), 2);
        assert_eq!(rank(&f2, cols.iter().map(|c| dense_to_sparse(&f2, c))), 1);
    }

    /// Dense fraction-free rank over the integers modulo a large prime,
    /// used as an independent reference.
    fn dense_rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r][c].rem_euclid(p) != 0) else { continue };
            m.swap(rank, piv);
            let inv = {
                let a = m[rank][c].rem_euclid(p);
                let mut acc = 1i64;
                let (mut base, mut e) = (a, p - 2);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                acc
            };
            for r in 0..rows {
                if r != rank {
                    let factor = m[r][c].rem_euclid(p) * inv % p;
                    for k in 0..cols {
                        m[r][k] = (m[r][k] - factor * m[rank][k]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_nullity_and_kernel_vectors(m in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..7)) {
            let q = Rationals;
            let sparse: Vec<_> = m.iter().map(|c| dense_to_sparse(&q, c)).collect();
            let (r, ker) = kernel(&q, 5, &sparse);
            prop_assert_eq!(r + ker.len(), m.len());
            for v in &ker {
                for row in 0..5 {
                    let mut acc = q.zero();
                    for (j, c) in v {
                        acc = q.add(&acc, &q.mul(c, &q.from_i64(m[*j][row])));
                    }
                    prop_assert!(q.is_zero(&acc));
                }
            }
            // transpose to rows for the dense reference
            let dense: Vec<Vec<i64>> = (0..5).map(|row| m.iter().map(|c| c[row]).collect()).collect();
            if !m.is_empty() {
                prop_assert_eq!(r, dense_rank_mod(dense, 1_000_000_007));
            }
        }
    }
}

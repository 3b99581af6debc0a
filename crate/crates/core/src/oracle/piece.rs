//! Finite-dimensional slices of maps between graded free `S`-modules.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::monomial::{Bidegree, Monomial, MonomialIdeal};
use crate::resolution::{Differential, GradedFreeModule};

use super::field::{Field, FieldConfig, PrimeField, Rationals};
use super::linalg::{self, SparseVec};
use super::OracleError;

/// The degree-`degree` part of a differential over the standard-monomial
/// bases of source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieceMatrix {
    pub degree: u32,
    /// `(target generator, monomial)` pairs indexing the rows.
    pub rows: Vec<(usize, Monomial)>,
    /// `(source generator, monomial)` pairs indexing the columns.
    pub cols: Vec<(usize, Monomial)>,
    /// Sparse columns; all coefficients are `±1`.
    pub columns: Vec<Vec<(usize, i64)>>,
    pub field: FieldConfig,
}

impl GradedPieceMatrix {
    pub fn rank(&self) -> usize {
        rank_i64(self.field, &self.columns)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols.len() - self.rank()
    }
}

pub(crate) fn rank_i64(field: FieldConfig, columns: &[Vec<(usize, i64)>]) -> usize {
    fn go<F: Field>(f: &F, columns: &[Vec<(usize, i64)>]) -> usize {
        linalg::rank(
            f,
            columns.iter().map(|c| -> SparseVec<F::Elem> {
                c.iter().map(|&(i, v)| (i, f.from_i64(v))).collect()
            }),
        )
    }
    match field {
        FieldConfig::ExactRationals => go(&Rationals, columns),
        FieldConfig::PrimeField(p) => go(&PrimeField::new(p).expect("validated prime"), columns),
    }
}

/// The basis `(g, m)` of the degree-`degree` part of a free module.
fn total_degree_basis(ring: &MonomialIdeal, module: &GradedFreeModule, degree: u32) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for g in 0..module.rank() {
        if let Some(rest) = degree.checked_sub(module.twist(g)) {
            for m in ring.standard_monomials(rest) {
                out.push((g, m));
            }
        }
    }
    out
}

/// The matrix of `d` in total degree `degree`.
pub fn graded_piece(d: &Differential, degree: u32, field: FieldConfig) -> Result<GradedPieceMatrix, OracleError> {
    d.check_homogeneous()
        .map_err(|e| OracleError::NotHomogeneous(format!("{e}")))?;
    let ring = d.ring();
    let rows = total_degree_basis(ring, d.target(), degree);
    let cols = total_degree_basis(ring, d.source(), degree);
    let mut columns = Vec::with_capacity(cols.len());
    for &(g, m) in &cols {
        let mut col = Vec::new();
        for e in d.column(g) {
            let image = m * e.term.monomial;
            if ring.contains(image) {
                continue;
            }
            let key = (e.row, Reverse(image.xdeg));
            let row = rows
                .binary_search_by_key(&key, |&(h, mm)| (h, Reverse(mm.xdeg)))
                .expect("homogeneous image lies in the row basis");
            col.push((row, e.term.sign.as_i64()));
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(GradedPieceMatrix {
        degree,
        rows,
        cols,
        columns,
        field,
    })
}

/// Generators of a module grouped by bidegree, for fast slicing.
pub(crate) struct ModuleIndex {
    groups: Vec<(Bidegree, Vec<usize>)>,
}

impl ModuleIndex {
    pub(crate) fn new(bidegrees: impl Iterator<Item = Bidegree>) -> Self {
        let mut groups: Vec<(Bidegree, Vec<usize>)> = Vec::new();
        let mut all: Vec<(Bidegree, usize)> = bidegrees.enumerate().map(|(i, b)| (b, i)).collect();
        all.sort();
        for (b, i) in all {
            match groups.last_mut() {
                Some((last, v)) if *last == b => v.push(i),
                _ => groups.push((b, vec![i])),
            }
        }
        ModuleIndex { groups }
    }

    /// Generators `g` (ascending) whose slice at `alpha` is nonzero, i.e.
    /// `bideg(g) <= alpha` with `alpha - bideg(g)` standard.
    pub(crate) fn slice(&self, ring: &MonomialIdeal, alpha: Bidegree) -> Vec<usize> {
        let mut out = Vec::new();
        for (b, gens) in &self.groups {
            if let Some(m) = alpha.monomial_from(*b) {
                if ring.is_standard(m) {
                    out.extend_from_slice(gens);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Sparse `±1` matrix of a homogeneous differential at bidegree `alpha`,
/// with rows and columns indexed by the slices of target and source.
pub(crate) fn bidegree_piece(
    d: &Differential,
    alpha: Bidegree,
    rows: &[usize],
    cols: &[usize],
) -> Vec<Vec<(usize, i64)>> {
    let ring = d.ring();
    let mut out = Vec::with_capacity(cols.len());
    for &g in cols {
        let m = alpha
            .monomial_from(d.source().bidegree(g))
            .expect("column lies in the slice");
        let mut col = Vec::new();
        for e in d.column(g) {
            let image = m * e.term.monomial;
            if ring.contains(image) {
                continue;
            }
            if let Ok(row) = rows.binary_search(&e.row) {
                col.push((row, e.term.sign.as_i64()));
            }
        }
        out.push(col);
    }
    out
}

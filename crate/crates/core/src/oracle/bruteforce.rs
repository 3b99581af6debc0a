//! Minimal resolutions of `k` computed from scratch, one bidegree at a time.
//!
//! Generators of `F_i` are minimal generators of `ker(F_{i-1} -> F_{i-2})`.
//! Everything is bihomogeneous, so at a bidegree `α` each generator `g` of
//! `F_i` contributes at most one basis vector `(α - bideg g)·g`, present iff
//! that monomial is standard. A vector in the `α`-slice is therefore a
//! linear combination of generators and all monomials are implied.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::betti::BettiTable;
use crate::monomial::{Bidegree, MonomialIdeal};

use super::field::{Field, FieldConfig, PrimeField, Rationals};
use super::linalg::{kernel, Echelon, SparseVec};
use super::OracleError;

/// Bidegrees of total degree `<= max_degree`, by total degree and then by
/// decreasing `x`-degree.
fn window(max_degree: u32) -> impl Iterator<Item = Bidegree> {
    (0..=max_degree).flat_map(|d| (0..=d).rev().map(move |p| Bidegree::new(p, d - p)))
}

fn in_slice(ring: &MonomialIdeal, b: Bidegree, alpha: Bidegree) -> bool {
    alpha.monomial_from(b).is_some_and(|m| ring.is_standard(m))
}

/// Generators of a module (ascending) whose slice at `alpha` is nonzero.
fn slice(ring: &MonomialIdeal, bidegrees: &[Bidegree], alpha: Bidegree) -> Vec<usize> {
    (0..bidegrees.len())
        .filter(|&g| in_slice(ring, bidegrees[g], alpha))
        .collect()
}

/// Multiplication by a variable, from the slice below `alpha` into `alpha`.
fn lift<E: Clone>(ring: &MonomialIdeal, bidegrees: &[Bidegree], v: &SparseVec<E>, alpha: Bidegree) -> SparseVec<E> {
    v.iter()
        .filter(|(g, _)| in_slice(ring, bidegrees[*g], alpha))
        .cloned()
        .collect()
}

struct Computed<E> {
    /// `bidegrees[i]`: generator bidegrees of `F_i`.
    bidegrees: Vec<Vec<Bidegree>>,
    /// `maps[i]`: columns of `F_i -> F_{i-1}` for `i >= 1`, indexed by
    /// generators of `F_{i-1}`.
    maps: Vec<Vec<SparseVec<E>>>,
}

impl<E: Clone> Computed<E> {
    /// `ker(F_{i-1} -> F_{i-2})` at `alpha`, as vectors over generators of
    /// `F_{i-1}`, for `i >= 2`.
    fn kernel_at<F: Field<Elem = E>>(&self, f: &F, ring: &MonomialIdeal, i: usize, alpha: Bidegree) -> Vec<SparseVec<E>> {
        let src = &self.bidegrees[i - 1];
        let tgt = &self.bidegrees[i - 2];
        let cols = slice(ring, src, alpha);
        if cols.is_empty() {
            return Vec::new();
        }
        let matrix: Vec<SparseVec<E>> = cols
            .iter()
            .map(|&g| lift(ring, tgt, &self.maps[i - 1][g], alpha))
            .collect();
        let (_, ker) = kernel(f, tgt.len(), &matrix);
        ker.into_iter()
            .map(|v| v.into_iter().map(|(j, c)| (cols[j], c)).collect())
            .collect()
    }
}

fn run<F: Field>(f: &F, ring: &MonomialIdeal, max_stage: usize, max_degree: u32) -> BettiTable {
    let mut table = BettiTable::new(max_stage, Some(max_degree));
    let mut state: Computed<F::Elem> = Computed {
        bidegrees: Vec::from([Vec::from([Bidegree::ZERO])]),
        maps: Vec::from([Vec::new()]),
    };
    table.add(0, 0, 1);
    for i in 1..=max_stage {
        let mut kernels: BTreeMap<Bidegree, Vec<SparseVec<F::Elem>>> = BTreeMap::new();
        let mut gens = Vec::new();
        let mut columns = Vec::new();
        for alpha in window(max_degree) {
            let ker = if i == 1 {
                // the augmentation S -> k kills everything of positive degree
                if alpha != Bidegree::ZERO && ring.is_standard(alpha.monomial_from(Bidegree::ZERO).expect("nonnegative")) {
                    Vec::from([Vec::from([(0, f.one())])])
                } else {
                    Vec::new()
                }
            } else {
                state.kernel_at(f, ring, i, alpha)
            };
            if ker.is_empty() {
                continue;
            }
            let prev = &state.bidegrees[i - 1];
            let mut span = Echelon::new(f);
            let below = [
                alpha.x.checked_sub(1).map(|x| Bidegree::new(x, alpha.y)),
                alpha.y.checked_sub(1).map(|y| Bidegree::new(alpha.x, y)),
            ];
            for beta in below.into_iter().flatten() {
                for v in kernels.get(&beta).into_iter().flatten() {
                    span.insert(lift(ring, prev, v, alpha));
                }
            }
            for v in &ker {
                if span.insert(v.clone()) {
                    gens.push(alpha);
                    columns.push(v.clone());
                    table.add(i, alpha.total(), 1);
                }
            }
            kernels.insert(alpha, ker);
        }
        state.bidegrees.push(gens);
        state.maps.push(columns);
    }
    table
}

/// Graded Betti numbers `β_{i,d}` of the minimal resolution of `k` over
/// `k[x,y]/M` for `i <= max_stage`, `d <= max_degree`, by linear algebra on
/// graded pieces alone.
///
/// Generators of `F_i` have degree at least `i`, so a window with
/// `max_degree < max_stage` cannot see the later stages at all and is
/// rejected.
pub fn minimal_resolution_bruteforce(
    ring: &MonomialIdeal,
    max_stage: usize,
    max_degree: u32,
    field: FieldConfig,
) -> Result<BettiTable, OracleError> {
    if (max_degree as usize) < max_stage {
        return Err(OracleError::TruncationTooSmall {
            max_degree,
            needed: max_stage as u32,
        });
    }
    Ok(match field {
        FieldConfig::ExactRationals => run(&Rationals, ring, max_stage, max_degree),
        FieldConfig::PrimeField(p) => run(&PrimeField::new(p)?, ring, max_stage, max_degree),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(pairs: &[(u32, u32)], n: usize, d: u32) -> BettiTable {
        let m = MonomialIdeal::from_exponents(pairs).unwrap();
        minimal_resolution_bruteforce(&m, n, d, FieldConfig::ExactRationals).unwrap()
    }

    #[test]
    fn residue_field_of_k() {
        let t = table(&[(1, 0), (0, 1)], 4, 8);
        assert_eq!(t.entries().collect::<Vec<_>>(), [((0, 0), 1)]);
    }

    #[test]
    fn polynomial_ring_in_one_variable() {
        // k[x, y]/(y) = k[x]: k has the resolution 0 -> S(-1) -> S
        let t = table(&[(0, 1)], 4, 8);
        assert_eq!(t.entries().collect::<Vec<_>>(), [((0, 0), 1), ((1, 1), 1)]);
    }

    #[test]
    fn left_example_column_four() {
        let t = table(&[(1, 2), (0, 4)], 6, 12);
        assert_eq!((t.get(4, 6), t.get(4, 7), t.get(4, 8)), (4, 2, 1));
        assert_eq!((t.get(4, 4), t.get(4, 5)), (0, 1));
    }

    #[test]
    fn right_example_row_one() {
        let t = table(&[(2, 1), (1, 2)], 6, 10);
        assert_eq!(t.get(3, 4), 5);
        assert_eq!(t.totals(), [1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn hypersurface_is_periodic() {
        // k[x,y]/(x^2 y^2): ranks 1, 2, 2, 2, ...
        let t = table(&[(2, 2)], 6, 20);
        assert_eq!(t.totals(), [1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn prime_field_agrees() {
        let m = MonomialIdeal::from_exponents(&[(3, 0), (1, 1), (0, 2)]).unwrap();
        let q = minimal_resolution_bruteforce(&m, 5, 12, FieldConfig::ExactRationals).unwrap();
        let p = minimal_resolution_bruteforce(&m, 5, 12, FieldConfig::PrimeField(101)).unwrap();
        assert_eq!(q, p);
        assert!(matches!(
            minimal_resolution_bruteforce(&m, 5, 4, FieldConfig::ExactRationals),
            Err(OracleError::TruncationTooSmall { .. })
        ));
    }
}

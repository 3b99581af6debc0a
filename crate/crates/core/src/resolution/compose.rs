use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;

use crate::error::ResolutionError;
use crate::monomial::Monomial;

use super::module::Differential;

/// An element of `S` with integer coefficients over standard monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResiduePolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl ResiduePolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    fn add(&mut self, m: Monomial, c: i64) {
        let slot = self.terms.entry(m).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }
}

impl fmt::Display for ResiduePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if n > 0 || sign == "-" {
                f.write_str(sign)?;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
                if !m.is_one() {
                    write!(f, "{m}")?;
                }
            } else {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// The product of two differentials with entries reduced in `S`; only
/// nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), ResiduePolynomial>,
}

impl ProductMatrix {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> ResiduePolynomial {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), &ResiduePolynomial)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }
}

/// `outer ∘ inner`, e.g. `compose_check(∂_1, ∂_2)`.
///
/// The two maps compose when the source of `outer` and the target of
/// `inner` have the same generator bidegrees.
pub fn compose_check(outer: &Differential, inner: &Differential) -> Result<ProductMatrix, ResolutionError> {
    if !outer.source().same_shape(inner.target()) {
        return Err(ResolutionError::ShapeMismatch(format!(
            "cannot compose a map out of a rank {} module with a map into a rank {} module",
            outer.source().rank(),
            inner.target().rank()
        )));
    }
    if outer.ring() != inner.ring() {
        return Err(ResolutionError::ShapeMismatch(format!(
            "maps are over different rings {} and {}",
            outer.ring(),
            inner.ring()
        )));
    }
    let ring = outer.ring();
    let mut entries: BTreeMap<(usize, usize), ResiduePolynomial> = BTreeMap::new();
    for (j, col) in inner.columns().iter().enumerate() {
        let mut acc: BTreeMap<usize, ResiduePolynomial> = BTreeMap::new();
        for mid in col {
            for top in outer.column(mid.row) {
                let t = top.term * mid.term;
                if ring.contains(t.monomial) {
                    continue;
                }
                acc.entry(top.row).or_default().add(t.monomial, t.sign.as_i64());
            }
        }
        for (i, p) in acc {
            if !p.is_zero() {
                entries.insert((i, j), p);
            }
        }
    }
    Ok(ProductMatrix {
        rows: outer.rows(),
        cols: inner.cols(),
        entries,
    })
}

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::ResolutionError;
use crate::monomial::{Bidegree, Monomial, MonomialIdeal};

use super::label::GeneratorLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A signed monomial `±x^a y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub sign: Sign,
    pub monomial: Monomial,
}

impl Term {
    pub const fn plus(monomial: Monomial) -> Self {
        Term {
            sign: Sign::Plus,
            monomial,
        }
    }

    pub const fn minus(monomial: Monomial) -> Self {
        Term {
            sign: Sign::Minus,
            monomial,
        }
    }

    pub fn swapped(self) -> Term {
        Term {
            sign: self.sign,
            monomial: self.monomial.swapped(),
        }
    }
}

impl Neg for Term {
    type Output = Term;

    fn neg(self) -> Term {
        Term {
            sign: -self.sign,
            monomial: self.monomial,
        }
    }
}

impl Mul for Term {
    type Output = Term;

    fn mul(self, rhs: Term) -> Term {
        Term {
            sign: self.sign * rhs.sign,
            monomial: self.monomial * rhs.monomial,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        write!(f, "{}", self.monomial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub bidegree: Bidegree,
}

/// A free `S`-module `⊕ S(-β_j)` with named basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedFreeModule {
    generators: Vec<Generator>,
}

impl GradedFreeModule {
    pub fn new(generators: Vec<Generator>) -> Self {
        GradedFreeModule { generators }
    }

    pub fn zero() -> Self {
        GradedFreeModule::default()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn bidegree(&self, i: usize) -> Bidegree {
        self.generators[i].bidegree
    }

    pub fn label(&self, i: usize) -> &GeneratorLabel {
        &self.generators[i].label
    }

    /// Total-degree twist of generator `i`.
    pub fn twist(&self, i: usize) -> u32 {
        self.generators[i].bidegree.total()
    }

    pub fn position(&self, label: &GeneratorLabel) -> Option<usize> {
        self.generators.iter().position(|g| &g.label == label)
    }

    pub(crate) fn swapped(&self) -> Self {
        GradedFreeModule {
            generators: self
                .generators
                .iter()
                .map(|g| Generator {
                    label: g.label.clone(),
                    bidegree: g.bidegree.swapped(),
                })
                .collect(),
        }
    }

    /// Whether the two modules have the same rank and generator bidegrees.
    pub fn same_shape(&self, other: &GradedFreeModule) -> bool {
        self.rank() == other.rank()
            && self
                .generators
                .iter()
                .zip(&other.generators)
                .all(|(a, b)| a.bidegree == b.bidegree)
    }
}

/// A nonzero matrix entry: row index into the target basis and its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry {
    pub row: usize,
    pub term: Term,
}

impl Entry {
    pub const fn new(row: usize, term: Term) -> Self {
        Entry { row, term }
    }
}

/// A map of graded free modules `source -> target`, stored by columns.
///
/// Column `j` lists the image of the `j`-th source generator as signed
/// monomial multiples of target generators, sorted by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Differential {
    ring: MonomialIdeal,
    source: Arc<GradedFreeModule>,
    target: Arc<GradedFreeModule>,
    columns: Vec<Vec<Entry>>,
}

impl Differential {
    /// Assembles a map without checking homogeneity; see [`Differential::check_homogeneous`].
    pub fn new(
        ring: MonomialIdeal,
        source: Arc<GradedFreeModule>,
        target: Arc<GradedFreeModule>,
        mut columns: Vec<Vec<Entry>>,
    ) -> Result<Self, ResolutionError> {
        if columns.len() != source.rank() {
            return Err(ResolutionError::ShapeMismatch(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for col in &mut columns {
            col.sort_by_key(|e| e.row);
            if let Some(e) = col.iter().find(|e| e.row >= target.rank()) {
                return Err(ResolutionError::ShapeMismatch(format!(
                    "row {} out of range for a target of rank {}",
                    e.row,
                    target.rank()
                )));
            }
            if col.windows(2).any(|w| w[0].row == w[1].row) {
                return Err(ResolutionError::ShapeMismatch("repeated row in a column".into()));
            }
        }
        Ok(Differential {
            ring,
            source,
            target,
            columns,
        })
    }

    pub fn ring(&self) -> &MonomialIdeal {
        &self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub(crate) fn source_arc(&self) -> &Arc<GradedFreeModule> {
        &self.source
    }

    pub(crate) fn target_arc(&self) -> &Arc<GradedFreeModule> {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn column(&self, j: usize) -> &[Entry] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Entry>] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Term> {
        self.columns[col].iter().find(|e| e.row == row).map(|e| e.term)
    }

    /// All nonzero entries as `(row, col, term)`, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Term)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |e| (e.row, j, e.term)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// The first entry whose bidegrees do not balance, if any.
    pub fn check_homogeneous(&self) -> Result<(), ResolutionError> {
        for (row, col, term) in self.entries() {
            let lhs = self.source.bidegree(col);
            let rhs = self.target.bidegree(row) + term.monomial;
            if lhs != rhs {
                return Err(ResolutionError::ShapeMismatch(format!(
                    "entry ({row},{col}) = {term}: source degree {lhs} but target degree + entry = {rhs}"
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn swapped(
        &self,
        source: Arc<GradedFreeModule>,
        target: Arc<GradedFreeModule>,
    ) -> Differential {
        Differential {
            ring: self.ring.swapped(),
            source,
            target,
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|e| Entry::new(e.row, e.term.swapped()))
                        .collect()
                })
                .collect(),
        }
    }

    /// Replaces the column list; used by mutation tests.
    pub fn with_columns(&self, columns: Vec<Vec<Entry>>) -> Result<Differential, ResolutionError> {
        Differential::new(
            self.ring.clone(),
            self.source.clone(),
            self.target.clone(),
            columns,
        )
    }

    /// Replaces the source module and column list together.
    pub fn with_source(
        &self,
        source: Arc<GradedFreeModule>,
        columns: Vec<Vec<Entry>>,
    ) -> Result<Differential, ResolutionError> {
        Differential::new(self.ring.clone(), source, self.target.clone(), columns)
    }

    /// Replaces the target module; rows are reinterpreted as given.
    pub fn with_target(
        &self,
        target: Arc<GradedFreeModule>,
        columns: Vec<Vec<Entry>>,
    ) -> Result<Differential, ResolutionError> {
        Differential::new(self.ring.clone(), self.source.clone(), target, columns)
    }
}

/// Builds a differential column by column, inferring each source
/// generator's bidegree from the first entry of its column.
pub(crate) struct ColumnBuilder {
    target: Arc<GradedFreeModule>,
    generators: Vec<Generator>,
    columns: Vec<Vec<Entry>>,
}

impl ColumnBuilder {
    pub(crate) fn new(target: Arc<GradedFreeModule>) -> Self {
        ColumnBuilder {
            target,
            generators: Vec::new(),
            columns: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, label: GeneratorLabel, column: Vec<Entry>) {
        let first = column.first().expect("engine columns are never empty");
        let bidegree = self.target.bidegree(first.row) + first.term.monomial;
        debug_assert!(column
            .iter()
            .all(|e| self.target.bidegree(e.row) + e.term.monomial == bidegree));
        self.generators.push(Generator { label, bidegree });
        self.columns.push(column);
    }

    pub(crate) fn finish(self, ring: &MonomialIdeal) -> Differential {
        let source = Arc::new(GradedFreeModule::new(self.generators));
        Differential::new(ring.clone(), source, self.target, self.columns)
            .expect("builder columns fit the target")
    }
}

//! Explicit graded free resolutions of `k` over `S = k[x,y]/M`.

mod compose;
mod degenerate;
mod label;
mod main_case;
mod module;

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use compose::{compose_check, ProductMatrix, ResiduePolynomial};
pub use degenerate::{build_degenerate, type_v_coefficients, InductiveCoeffs};
pub use label::{GeneratorLabel, Instance, LabelKind, LabelParseError};
pub use main_case::{build_d1, build_d2, build_d3, build_d4, extend_resolution, syzygy_generators_mx};
pub use module::{Differential, Entry, Generator, GradedFreeModule, Sign, Term};

use crate::classification::{classify, IdealClass};
use crate::error::ResolutionError;
use crate::monomial::{Bidegree, MonomialIdeal};

/// Block multiplicities `F_i = F_1^u ⊕ F_2^v ⊕ F_3^w` of a main-case stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StageDecomposition {
    pub stage: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl StageDecomposition {
    /// `2u + (r+1)v + (3r-1)w`.
    pub fn rank(&self, r: usize) -> usize {
        2 * self.u + (r + 1) * self.v + (3 * r - 1) * self.w
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    F1,
    F2,
    F3,
}

/// A copy of `F_1`, `F_2` or `F_3` inside a stage, occupying consecutive
/// generators from `start`, with all bidegrees raised by `shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: BlockKind,
    pub shift: Bidegree,
    pub start: usize,
}

/// `F_0 <- F_1 <- ... <- F_n` together with its maps.
///
/// `differentials()[i]` maps `F_{i+1}` to `F_i`; [`Resolution::differential`]
/// uses the 1-based numbering `∂_i : F_i -> F_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub(crate) ring: MonomialIdeal,
    pub(crate) class: IdealClass,
    pub(crate) modules: Vec<Arc<GradedFreeModule>>,
    pub(crate) differentials: Vec<Differential>,
    pub(crate) decomposition: Vec<StageDecomposition>,
    /// Block lists per stage; empty outside the main case.
    pub(crate) blocks: Vec<Vec<Block>>,
}

impl Resolution {
    /// Reassembles a resolution from stored parts, checking shapes and
    /// homogeneity but not exactness.
    pub fn from_parts(
        ring: MonomialIdeal,
        modules: Vec<GradedFreeModule>,
        columns: Vec<Vec<Vec<Entry>>>,
        decomposition: Vec<StageDecomposition>,
    ) -> Result<Resolution, ResolutionError> {
        if modules.is_empty() {
            return Err(ResolutionError::ShapeMismatch("no modules".into()));
        }
        if columns.len() + 1 != modules.len() {
            return Err(ResolutionError::ShapeMismatch(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                columns.len()
            )));
        }
        let modules: Vec<Arc<GradedFreeModule>> = modules.into_iter().map(Arc::new).collect();
        let mut differentials = Vec::with_capacity(columns.len());
        for (i, cols) in columns.into_iter().enumerate() {
            let d = Differential::new(ring.clone(), modules[i + 1].clone(), modules[i].clone(), cols)?;
            d.check_homogeneous()?;
            differentials.push(d);
        }
        Ok(Resolution {
            class: classify(&ring),
            ring,
            modules,
            differentials,
            decomposition,
            blocks: Vec::new(),
        })
    }

    pub fn ring(&self) -> &MonomialIdeal {
        &self.ring
    }

    pub fn class(&self) -> IdealClass {
        self.class
    }

    /// The last stage `n` built.
    pub fn stages(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> Option<&GradedFreeModule> {
        self.modules.get(i).map(|m| m.as_ref())
    }

    pub fn modules(&self) -> impl Iterator<Item = &GradedFreeModule> + '_ {
        self.modules.iter().map(|m| m.as_ref())
    }

    /// `∂_i : F_i -> F_{i-1}` for `1 <= i <= n`.
    pub fn differential(&self, i: usize) -> Option<&Differential> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn differentials(&self) -> &[Differential] {
        &self.differentials
    }

    pub fn decomposition(&self) -> &[StageDecomposition] {
        &self.decomposition
    }

    pub fn blocks(&self, stage: usize) -> &[Block] {
        self.blocks.get(stage).map_or(&[], |b| b.as_slice())
    }

    /// `rank F_i` for `i = 0..=n`.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    pub(crate) fn truncate(&mut self, n: usize) {
        self.modules.truncate(n + 1);
        self.differentials.truncate(n);
        self.decomposition.retain(|d| d.stage <= n);
        self.blocks.truncate(n + 1);
    }

    /// A copy with `∂_stage` replaced; used to build deliberately broken
    /// complexes for verification tests.
    pub fn with_differential(&self, stage: usize, d: Differential) -> Result<Resolution, ResolutionError> {
        if stage == 0 || stage > self.stages() {
            return Err(ResolutionError::ShapeMismatch(format!("no differential at stage {stage}")));
        }
        let mut out = self.clone();
        out.modules[stage] = d.source_arc().clone();
        out.modules[stage - 1] = d.target_arc().clone();
        out.differentials[stage - 1] = d;
        out.blocks.clear();
        Ok(out)
    }
}

/// The resolution of `k` over `S = k[x,y]/M` through stage `n`, choosing
/// the construction from the class of `M`.
pub fn build_resolution(ideal: &MonomialIdeal, n: usize) -> Resolution {
    if classify(ideal).is_main() {
        main_case::build(ideal, n).expect("main-case construction accepts main-case ideals")
    } else {
        build_degenerate(ideal, n).expect("degenerate construction accepts degenerate ideals")
    }
}

//! Explicit minimal free resolutions of the residue field `k` over
//! `S = k[x, y]/M` for monomial ideals `M` in two variables.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! - [`monomial`]: monomials, normalized monomial ideals, colon ideals and
//!   standard-monomial bases of the graded pieces of `S`.
//! - [`classification`]: which of the seven construction regimes applies.
//! - [`resolution`]: the resolution engine (the closed-form differentials of
//!   the first four stages, the block recursion beyond, and the degenerate
//!   constructions).
//! - [`betti`] and [`series`]: Betti tables, total Betti sequences and
//!   Poincaré–Betti series.
//! - [`oracle`]: exact linear algebra on graded pieces, used to verify the
//!   engine and to compute minimal resolutions from scratch.
//!
//! IO, file formats and the command-line front end live in the companion
//! `stairstep` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod classification;
mod error;
pub mod monomial;
pub mod oracle;
pub mod resolution;
pub mod series;
pub mod text;

pub use crate::betti::BettiTable;
pub use crate::classification::{classify, IdealClass};
pub use crate::error::{IdealError, ParseError, ResolutionError};
pub use crate::monomial::{Bidegree, Monomial, MonomialIdeal, ResidueElement};
pub use crate::resolution::{build_resolution, Differential, GradedFreeModule, Resolution};
pub use crate::series::PoincareSeries;

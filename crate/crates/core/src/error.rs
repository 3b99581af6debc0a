use alloc::string::String;

use thiserror::Error;

use crate::classification::IdealClass;

/// A syntax error in monomial or ideal text, located by byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the zero ideal has no generators")]
    EmptyIdeal,
    #[error("the unit ideal is not allowed (1 is among the generators)")]
    UnitIdeal,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("operation requires a {expected} ideal, got {found}")]
    WrongClass {
        expected: &'static str,
        found: IdealClass,
    },
    #[error("stage {0} is too small, at least stage 4 is required")]
    StageTooSmall(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("resolution carries no block structure to extend")]
    MissingBlocks,
}

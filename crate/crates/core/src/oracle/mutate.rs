//! Deliberate corruptions of a resolution, for testing the checks.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::ResolutionError;
use crate::monomial::Monomial;
use crate::resolution::{GradedFreeModule, Resolution};

fn entry_error(stage: usize, col: usize, k: usize) -> ResolutionError {
    ResolutionError::ShapeMismatch(alloc::format!("∂{stage} has no entry {k} in column {col}"))
}

/// Negates the `k`-th stored entry of column `col` of `∂_stage`.
pub fn flip_sign(res: &Resolution, stage: usize, col: usize, k: usize) -> Result<Resolution, ResolutionError> {
    let d = res
        .differential(stage)
        .ok_or_else(|| entry_error(stage, col, k))?;
    let mut columns = d.columns().to_vec();
    let e = columns
        .get_mut(col)
        .and_then(|c| c.get_mut(k))
        .ok_or_else(|| entry_error(stage, col, k))?;
    e.term = -e.term;
    res.with_differential(stage, d.with_columns(columns)?)
}

/// Multiplies the `k`-th stored entry of column `col` of `∂_stage` by `by`.
pub fn shift_degree(
    res: &Resolution,
    stage: usize,
    col: usize,
    k: usize,
    by: Monomial,
) -> Result<Resolution, ResolutionError> {
    let d = res
        .differential(stage)
        .ok_or_else(|| entry_error(stage, col, k))?;
    let mut columns = d.columns().to_vec();
    let e = columns
        .get_mut(col)
        .and_then(|c| c.get_mut(k))
        .ok_or_else(|| entry_error(stage, col, k))?;
    e.term.monomial = e.term.monomial * by;
    res.with_differential(stage, d.with_columns(columns)?)
}

/// Removes generator `col` of `F_stage`: its column from `∂_stage` and its
/// row from `∂_{stage+1}`.
pub fn drop_column(res: &Resolution, stage: usize, col: usize) -> Result<Resolution, ResolutionError> {
    let d = res
        .differential(stage)
        .ok_or_else(|| entry_error(stage, col, 0))?;
    if col >= d.cols() {
        return Err(entry_error(stage, col, 0));
    }
    let mut gens = d.source().generators().to_vec();
    gens.remove(col);
    let source = Arc::new(GradedFreeModule::new(gens));
    let mut columns = d.columns().to_vec();
    columns.remove(col);
    let mut out = res.with_differential(stage, d.with_source(source.clone(), columns)?)?;
    if let Some(next) = res.differential(stage + 1) {
        let columns: Vec<_> = next
            .columns()
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|e| e.row != col)
                    .map(|e| {
                        let mut e = *e;
                        if e.row > col {
                            e.row -= 1;
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        out = out.with_differential(stage + 1, next.with_target(source, columns)?)?;
    }
    Ok(out)
}

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::Bidegree;
use crate::resolution::{compose_check, Resolution};

use super::field::FieldConfig;
use super::piece::{bidegree_piece, rank_i64, ModuleIndex};
use super::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Complex,
    Minimality,
    Exactness,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Complex => "complex",
            CheckKind::Minimality => "minimality",
            CheckKind::Exactness => "exactness",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub kind: CheckKind,
    pub stage: usize,
    pub degree: Option<u32>,
    pub pass: bool,
    pub dim_ker: Option<usize>,
    pub dim_im: Option<usize>,
    pub detail: String,
}

/// Outcome of one or more verification passes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> + '_ {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn of_kind(&self, kind: CheckKind) -> impl Iterator<Item = &CheckRecord> + '_ {
        self.checks.iter().filter(move |c| c.kind == kind)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

/// `∂_i ∘ ∂_{i+1} = 0` for every consecutive pair, symbolically.
pub fn check_complex(res: &Resolution) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (k, w) in res.differentials().windows(2).enumerate() {
        let stage = k + 1;
        let (pass, detail) = match compose_check(&w[0], &w[1]) {
            Ok(p) if p.is_zero() => (true, format!("∂{}∘∂{} = 0", stage, stage + 1)),
            Ok(p) => {
                let ((i, j), v) = p.nonzero().next().expect("nonzero product has an entry");
                (
                    false,
                    format!(
                        "∂{}∘∂{} has {} nonzero entries, first ({i},{j}) = {v}",
                        stage,
                        stage + 1,
                        p.nonzero().count()
                    ),
                )
            }
            Err(e) => (false, format!("{e}")),
        };
        report.checks.push(CheckRecord {
            kind: CheckKind::Complex,
            stage,
            degree: None,
            pass,
            dim_ker: None,
            dim_im: None,
            detail,
        });
    }
    report
}

/// Every entry lies in the maximal ideal and is nonzero in `S`, and no
/// column is zero.
pub fn check_minimality(res: &Resolution) -> VerificationReport {
    let ring = res.ring();
    let mut report = VerificationReport::default();
    for (k, d) in res.differentials().iter().enumerate() {
        let stage = k + 1;
        let mut problems: Vec<String> = Vec::new();
        for (j, col) in d.columns().iter().enumerate() {
            if col.is_empty() {
                problems.push(format!("column {j} is zero"));
            }
            for e in col {
                let m = e.term.monomial;
                if m.is_one() {
                    problems.push(format!("unit entry at ({},{j})", e.row));
                } else if ring.contains(m) {
                    problems.push(format!("entry {} at ({},{j}) is zero in S", e.term, e.row));
                }
            }
        }
        let pass = problems.is_empty();
        let detail = if pass {
            format!("∂{stage}: all {} entries have positive degree and survive in S", d.nnz())
        } else {
            format!("∂{stage}: {} problems, first: {}", problems.len(), problems[0])
        };
        report.checks.push(CheckRecord {
            kind: CheckKind::Minimality,
            stage,
            degree: None,
            pass,
            dim_ker: None,
            dim_im: None,
            detail,
        });
    }
    report
}

/// Ranks of `∂_i` at each bidegree of total degree `<= max_degree`.
fn stage_ranks(res: &Resolution, stage: usize, max_degree: u32, field: FieldConfig) -> BTreeMap<Bidegree, usize> {
    let d = res.differential(stage).expect("stage is in range");
    let ring = res.ring();
    let src = ModuleIndex::new(d.source().generators().iter().map(|g| g.bidegree));
    let tgt = ModuleIndex::new(d.target().generators().iter().map(|g| g.bidegree));
    let mut out = BTreeMap::new();
    for total in 0..=max_degree {
        for p in (0..=total).rev() {
            let alpha = Bidegree::new(p, total - p);
            let cols = src.slice(ring, alpha);
            if cols.is_empty() {
                continue;
            }
            let rows = tgt.slice(ring, alpha);
            let piece = bidegree_piece(d, alpha, &rows, &cols);
            out.insert(alpha, rank_i64(field, &piece));
        }
    }
    out
}

fn slice_dims(res: &Resolution, stage: usize, max_degree: u32) -> BTreeMap<Bidegree, usize> {
    let ring = res.ring();
    let m = res.module(stage).expect("stage is in range");
    let idx = ModuleIndex::new(m.generators().iter().map(|g| g.bidegree));
    let mut out = BTreeMap::new();
    for total in 0..=max_degree {
        for p in 0..=total {
            let alpha = Bidegree::new(p, total - p);
            let n = idx.slice(ring, alpha).len();
            if n > 0 {
                out.insert(alpha, n);
            }
        }
    }
    out
}

/// `dim ker (∂_i)_d = dim im (∂_{i+1})_d` for `0 <= i <= max_stage` and
/// `d <= max_degree`, where `∂_0 : S -> k` is the augmentation.
///
/// The maps are bihomogeneous, so each total-degree piece is the direct sum
/// of its bidegree pieces and ranks are computed bidegree by bidegree.
/// Generators of twist above `max_degree` are not covered; the detail
/// strings say how many there are.
pub fn check_exactness(
    res: &Resolution,
    max_stage: usize,
    max_degree: u32,
    field: FieldConfig,
) -> Result<VerificationReport, OracleError> {
    if let FieldConfig::PrimeField(p) = field {
        FieldConfig::prime(p)?;
    }
    if (max_degree as usize) < max_stage {
        return Err(OracleError::TruncationTooSmall {
            max_degree,
            needed: max_stage as u32,
        });
    }
    if res.stages() < max_stage + 1 {
        return Err(OracleError::NotEnoughStages {
            needed: max_stage + 1,
            built: res.stages(),
        });
    }
    let mut report = VerificationReport::default();
    let mut homogeneous = Vec::with_capacity(max_stage + 2);
    homogeneous.push(true);
    for i in 1..=max_stage + 1 {
        homogeneous.push(res.differential(i).expect("checked above").check_homogeneous().is_ok());
    }

    let mut ranks: Vec<BTreeMap<Bidegree, usize>> = Vec::with_capacity(max_stage + 2);
    // ∂_0 has rank 1 at bidegree 0 and 0 elsewhere.
    ranks.push(BTreeMap::from([(Bidegree::ZERO, 1)]));
    for i in 1..=max_stage + 1 {
        if homogeneous[i] {
            ranks.push(stage_ranks(res, i, max_degree, field));
        } else {
            ranks.push(BTreeMap::new());
        }
    }

    for i in 0..=max_stage {
        if !homogeneous[i] || !homogeneous[i + 1] {
            let bad = if homogeneous[i] { i + 1 } else { i };
            let err = res
                .differential(bad)
                .expect("in range")
                .check_homogeneous()
                .expect_err("flagged as inhomogeneous");
            report.checks.push(CheckRecord {
                kind: CheckKind::Exactness,
                stage: i,
                degree: None,
                pass: false,
                dim_ker: None,
                dim_im: None,
                detail: format!("∂{bad} is not homogeneous: {err}"),
            });
            continue;
        }
        let dims = slice_dims(res, i, max_degree);
        let uncovered = res
            .module(i + 1)
            .expect("in range")
            .generators()
            .iter()
            .filter(|g| g.bidegree.total() > max_degree)
            .count();
        for d in 0..=max_degree {
            let mut ker = 0;
            let mut im = 0;
            for p in 0..=d {
                let alpha = Bidegree::new(p, d - p);
                let n = dims.get(&alpha).copied().unwrap_or(0);
                ker += n - ranks[i].get(&alpha).copied().unwrap_or(0);
                im += ranks[i + 1].get(&alpha).copied().unwrap_or(0);
            }
            let pass = ker == im;
            let mut detail = format!("dim ker ∂{i} = {ker}, dim im ∂{} = {im}", i + 1);
            if d == max_degree && uncovered > 0 {
                detail.push_str(&format!(
                    "; {uncovered} generators of F{} lie above degree {max_degree}",
                    i + 1
                ));
            }
            report.checks.push(CheckRecord {
                kind: CheckKind::Exactness,
                stage: i,
                degree: Some(d),
                pass,
                dim_ker: Some(ker),
                dim_im: Some(im),
                detail,
            });
        }
    }
    Ok(report)
}

/// All three checks: complex and minimality on every built stage,
/// exactness on the given window.
pub fn verify(
    res: &Resolution,
    max_stage: usize,
    max_degree: u32,
    field: FieldConfig,
) -> Result<VerificationReport, OracleError> {
    let mut report = check_complex(res);
    report.merge(check_minimality(res));
    report.merge(check_exactness(res, max_stage, max_degree, field)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialIdeal;
    use crate::resolution::build_resolution;

    fn res(pairs: &[(u32, u32)], n: usize) -> Resolution {
        build_resolution(&MonomialIdeal::from_exponents(pairs).unwrap(), n)
    }

    #[test]
    fn engine_examples_pass_everything() {
        for pairs in [&[(2, 1), (1, 2)][..], &[(1, 2), (0, 4)], &[(3, 0), (0, 7)]] {
            let r = res(pairs, 9);
            let report = verify(&r, 8, 20, FieldConfig::ExactRationals).unwrap();
            assert!(report.passed(), "{:?}", report.failures().next());
            assert_eq!(report.of_kind(CheckKind::Exactness).count(), 9 * 21);
        }
    }

    #[test]
    fn stage_zero_uses_the_augmentation() {
        let r = res(&[(1, 0), (0, 1)], 2);
        let report = check_exactness(&r, 1, 4, FieldConfig::ExactRationals).unwrap();
        assert!(report.passed());
        let r = res(&[(2, 1), (1, 2)], 3);
        let report = check_exactness(&r, 0, 5, FieldConfig::ExactRationals).unwrap();
        let rec: Vec<_> = report.checks.iter().map(|c| (c.dim_ker.unwrap(), c.dim_im.unwrap())).collect();
        assert_eq!(rec[0], (0, 0));
        assert_eq!(rec[1], (2, 2));
        assert_eq!(rec[3], (2, 2));
    }

    #[test]
    fn windows_are_validated() {
        let r = res(&[(2, 1), (1, 2)], 4);
        assert!(matches!(
            check_exactness(&r, 4, 10, FieldConfig::ExactRationals),
            Err(OracleError::NotEnoughStages { .. })
        ));
        assert!(matches!(
            check_exactness(&r, 3, 2, FieldConfig::ExactRationals),
            Err(OracleError::TruncationTooSmall { .. })
        ));
        assert!(matches!(
            check_exactness(&r, 2, 10, FieldConfig::PrimeField(4)),
            Err(OracleError::InvalidPrime(4))
        ));
    }
}

//! JSON and CSV documents for resolutions, Betti tables and reports.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use stairstep_core::oracle::VerificationReport;
use stairstep_core::resolution::{Entry, Generator, GeneratorLabel, LabelParseError, Sign, StageDecomposition, Term};
use stairstep_core::{BettiTable, IdealError, IdealClass, Monomial, MonomialIdeal, Resolution, ResolutionError};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Label(#[from] LabelParseError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub label: String,
    pub bidegree: [u32; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub rank: usize,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: [u32; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDoc {
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub stage: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// A resolution as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub ideal: Vec<[u32; 2]>,
    pub class: String,
    pub modules: Vec<ModuleDoc>,
    pub differentials: Vec<DifferentialDoc>,
    pub decomposition: Vec<DecompositionDoc>,
}

impl ResolutionDoc {
    pub fn from_resolution(res: &Resolution) -> Self {
        ResolutionDoc {
            ideal: res.ring().generators().iter().map(|g| [g.xdeg, g.ydeg]).collect(),
            class: res.class().name().to_string(),
            modules: res
                .modules()
                .map(|m| ModuleDoc {
                    rank: m.rank(),
                    generators: m
                        .generators()
                        .iter()
                        .map(|g| GeneratorDoc {
                            label: g.label.to_string(),
                            bidegree: [g.bidegree.x, g.bidegree.y],
                        })
                        .collect(),
                })
                .collect(),
            differentials: res
                .differentials()
                .iter()
                .map(|d| DifferentialDoc {
                    entries: d
                        .entries()
                        .map(|(row, col, t)| EntryDoc {
                            row,
                            col,
                            sign: t.sign.as_i64() as i8,
                            monomial: [t.monomial.xdeg, t.monomial.ydeg],
                        })
                        .collect(),
                })
                .collect(),
            decomposition: res
                .decomposition()
                .iter()
                .map(|d| DecompositionDoc {
                    stage: d.stage,
                    u: d.u,
                    v: d.v,
                    w: d.w,
                })
                .collect(),
        }
    }

    /// Rebuilds the resolution, checking shapes, homogeneity and that the
    /// stored class matches the ideal.
    pub fn to_resolution(&self) -> Result<Resolution, DocumentError> {
        let pairs: Vec<(u32, u32)> = self.ideal.iter().map(|&[a, b]| (a, b)).collect();
        let ring = MonomialIdeal::from_exponents(&pairs)?;
        let class: IdealClass = self
            .class
            .parse()
            .map_err(|_| DocumentError::Invalid(format!("unknown class {:?}", self.class)))?;
        let mut modules = Vec::with_capacity(self.modules.len());
        for (i, m) in self.modules.iter().enumerate() {
            if m.rank != m.generators.len() {
                return Err(DocumentError::Invalid(format!(
                    "module {i} declares rank {} but lists {} generators",
                    m.rank,
                    m.generators.len()
                )));
            }
            let mut gens = Vec::with_capacity(m.rank);
            for g in &m.generators {
                let label: GeneratorLabel = g.label.parse()?;
                gens.push(Generator {
                    label,
                    bidegree: stairstep_core::Bidegree::new(g.bidegree[0], g.bidegree[1]),
                });
            }
            modules.push(stairstep_core::GradedFreeModule::new(gens));
        }
        let mut columns = Vec::with_capacity(self.differentials.len());
        for (k, d) in self.differentials.iter().enumerate() {
            let ncols = modules.get(k + 1).map_or(0, |m| m.rank());
            let mut cols: Vec<Vec<Entry>> = vec![Vec::new(); ncols];
            for e in &d.entries {
                let sign = Sign::from_i64(e.sign.into())
                    .ok_or_else(|| DocumentError::Invalid(format!("sign {} is not 1 or -1", e.sign)))?;
                let slot = cols.get_mut(e.col).ok_or_else(|| {
                    DocumentError::Invalid(format!("differential {} has column {} out of range", k + 1, e.col))
                })?;
                slot.push(Entry::new(
                    e.row,
                    Term {
                        sign,
                        monomial: Monomial::new(e.monomial[0], e.monomial[1]),
                    },
                ));
            }
            columns.push(cols);
        }
        let decomposition = self
            .decomposition
            .iter()
            .map(|d| StageDecomposition {
                stage: d.stage,
                u: d.u,
                v: d.v,
                w: d.w,
            })
            .collect();
        let res = Resolution::from_parts(ring, modules, columns, decomposition)?;
        if res.class() != class {
            return Err(DocumentError::Invalid(format!(
                "stored class {} but the ideal is {}",
                class,
                res.class()
            )));
        }
        Ok(res)
    }
}

pub fn resolution_to_json(res: &Resolution) -> String {
    serde_json::to_string_pretty(&ResolutionDoc::from_resolution(res)).expect("documents always serialize")
}

pub fn resolution_from_json(text: &str) -> Result<Resolution, DocumentError> {
    let doc: ResolutionDoc = serde_json::from_str(text)?;
    doc.to_resolution()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntryDoc {
    pub i: usize,
    pub d: u32,
    pub beta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDoc {
    pub entries: Vec<BettiEntryDoc>,
}

pub fn betti_to_json(table: &BettiTable) -> String {
    let doc = BettiDoc {
        entries: table
            .entries()
            .map(|((i, d), beta)| BettiEntryDoc { i, d, beta })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("documents always serialize")
}

pub fn betti_to_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,d,beta\n");
    for ((i, d), beta) in table.entries() {
        out.push_str(&format!("{i},{d},{beta}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub kind: String,
    pub stage: usize,
    pub degree: Option<u32>,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub ideal: String,
    pub checks: Vec<CheckDoc>,
    pub verdict: String,
}

impl ReportDoc {
    pub fn new(ideal: &MonomialIdeal, report: &VerificationReport) -> Self {
        ReportDoc {
            ideal: ideal.to_string(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckDoc {
                    kind: c.kind.as_str().to_string(),
                    stage: c.stage,
                    degree: c.degree,
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect(),
            verdict: if report.passed() { "pass" } else { "fail" }.to_string(),
        }
    }
}

pub fn report_to_json(ideal: &MonomialIdeal, report: &VerificationReport) -> String {
    serde_json::to_string_pretty(&ReportDoc::new(ideal, report)).expect("documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use stairstep_core::betti::graded_betti;
    use stairstep_core::build_resolution;

    #[test]
    fn betti_csv_layout() {
        let res = build_resolution(&MonomialIdeal::from_exponents(&[(2, 1), (1, 2)]).unwrap(), 2);
        let csv = betti_to_csv(&graded_betti(&res));
        assert_eq!(csv, "i,d,beta\n0,0,1\n1,1,2\n2,2,1\n2,3,2\n");
    }

    #[test]
    fn tampered_documents_are_rejected() {
        let res = build_resolution(&MonomialIdeal::from_exponents(&[(2, 1), (1, 2)]).unwrap(), 3);
        let mut doc = ResolutionDoc::from_resolution(&res);
        doc.class = "type-5".into();
        assert!(matches!(doc.to_resolution(), Err(DocumentError::Invalid(_))));

        let mut doc = ResolutionDoc::from_resolution(&res);
        doc.differentials[1].entries[0].monomial[0] += 1;
        assert!(matches!(doc.to_resolution(), Err(DocumentError::Resolution(_))));

        let mut doc = ResolutionDoc::from_resolution(&res);
        doc.differentials[0].entries[0].sign = 0;
        assert!(doc.to_resolution().is_err());
    }
}

use alloc::vec::Vec;
use core::fmt;

use crate::betti::BettiTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiMismatch {
    pub stage: usize,
    pub degree: u32,
    pub left: u64,
    pub right: u64,
}

/// Entries where two Betti tables disagree on their common window.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiDiff {
    pub max_stage: usize,
    pub max_degree: Option<u32>,
    pub mismatches: Vec<BettiMismatch>,
}

impl BettiDiff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for BettiDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("tables agree");
        }
        for (n, m) in self.mismatches.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "beta[{},{}]: {} vs {}", m.stage, m.degree, m.left, m.right)?;
        }
        Ok(())
    }
}

pub fn compare_betti(a: &BettiTable, b: &BettiTable) -> BettiDiff {
    let max_stage = a.max_stage().min(b.max_stage());
    let max_degree = match (a.max_degree(), b.max_degree()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let a = a.restrict(max_stage, max_degree);
    let b = b.restrict(max_stage, max_degree);
    let mut keys: Vec<(usize, u32)> = a.entries().chain(b.entries()).map(|(k, _)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    let mismatches = keys
        .into_iter()
        .filter_map(|(i, d)| {
            let (left, right) = (a.get(i, d), b.get(i, d));
            (left != right).then_some(BettiMismatch {
                stage: i,
                degree: d,
                left,
                right,
            })
        })
        .collect();
    BettiDiff {
        max_stage,
        max_degree,
        mismatches,
    }
}

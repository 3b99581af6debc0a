//! Graded Betti tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::resolution::Resolution;

/// Graded Betti numbers `β_{i,d}` on the window `i <= max_stage` and, when
/// `max_degree` is set, `d <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    max_stage: usize,
    max_degree: Option<u32>,
}

impl BettiTable {
    pub fn new(max_stage: usize, max_degree: Option<u32>) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            max_stage,
            max_degree,
        }
    }

    /// Adds `count` to `β_{i,d}`; entries outside the window are ignored.
    pub fn add(&mut self, i: usize, d: u32, count: u64) {
        if i > self.max_stage || self.max_degree.is_some_and(|m| d > m) || count == 0 {
            return;
        }
        *self.entries.entry((i, d)).or_insert(0) += count;
    }

    pub fn get(&self, i: usize, d: u32) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn max_stage(&self) -> usize {
        self.max_stage
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.max_degree
    }

    /// Nonzero entries `((i, d), β_{i,d})` ordered by `i`, then `d`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `β_i = Σ_d β_{i,d}` (within the degree window).
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..=self.max_stage).map(|i| self.total(i)).collect()
    }

    /// The same table cut down to a smaller window.
    pub fn restrict(&self, max_stage: usize, max_degree: Option<u32>) -> BettiTable {
        let max_degree = match (self.max_degree, max_degree) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = BettiTable::new(max_stage.min(self.max_stage), max_degree);
        for ((i, d), v) in self.entries() {
            out.add(i, d, v);
        }
        out
    }

    /// The text layout: a header of stage indices, a `total:` row, then one
    /// row per `j` holding `β_{i,i+j}` in column `i`, with `.` for zero.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("      ");
        let cols: Vec<String> = (0..=self.max_stage).map(|i| alloc::format!("{i}")).collect();
        out.push_str(&cols.join(" "));
        out.push('\n');
        out.push_str("total:");
        for i in 0..=self.max_stage {
            let _ = write!(out, " {}", self.total(i));
        }
        out.push('\n');
        let rows = self
            .entries
            .keys()
            .map(|&(i, d)| d as i64 - i as i64)
            .max()
            .unwrap_or(0);
        for j in 0..=rows.max(0) {
            let _ = write!(out, "{j}:");
            for i in 0..=self.max_stage {
                let d = i as i64 + j;
                match u32::try_from(d).map(|d| self.get(i, d)) {
                    Ok(v) if v > 0 => {
                        let _ = write!(out, " {v}");
                    }
                    _ => out.push_str(" ."),
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// `β_{i,d}` of an engine resolution: the number of generators of `F_i`
/// of total degree `d`.
pub fn graded_betti(res: &Resolution) -> BettiTable {
    let mut table = BettiTable::new(res.stages(), None);
    for (i, m) in res.modules().enumerate() {
        for g in m.generators() {
            table.add(i, g.bidegree.total(), 1);
        }
    }
    table
}

//! The main case: `∂_1` through `∂_4` and the block recursion beyond.
//!
//! Every stage of the resolution is a direct sum of copies of three
//! templates: `F_1 -> F_0` (the `[x y]` block), `F_2 -> F_1` and
//! `F_3 -> F_2`. Resolving a copy of `F_1` yields a copy of `F_2`, resolving
//! `F_2` yields `F_3`, and resolving `F_3` yields `F_1^{r-1} ⊕ F_2^r`, so
//! stage `i + 1` is computed from the block list of stage `i` alone.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::classification::{classify, IdealClass};
use crate::error::ResolutionError;
use crate::monomial::{Bidegree, Monomial, MonomialIdeal};

use super::label::{GeneratorLabel, LabelKind};
use super::module::{ColumnBuilder, Differential, Entry, Generator, GradedFreeModule, Term};
use super::{Block, BlockKind, Resolution, StageDecomposition};

/// One of the three block shapes, with columns indexed by template rows.
#[derive(Debug, Clone)]
struct Template {
    labels: Vec<GeneratorLabel>,
    columns: Vec<Vec<(usize, Term)>>,
}

#[derive(Debug, Clone)]
pub(crate) struct Templates {
    r: usize,
    a: Vec<u32>,
    b: Vec<u32>,
    t1: Template,
    t2: Template,
    t3: Template,
}

fn xy(p: u32, q: u32) -> Monomial {
    Monomial::new(p, q)
}

impl Templates {
    pub(crate) fn new(ideal: &MonomialIdeal) -> Self {
        let r = ideal.len();
        let a: Vec<u32> = (0..r).map(|i| ideal.a(i)).collect();
        let b: Vec<u32> = (0..r).map(|i| ideal.b(i)).collect();
        let case2 = a[r - 1] == 0;
        let idx = |i: usize| (i + 1) as u32;

        let t1 = Template {
            labels: vec![
                GeneratorLabel::plain(LabelKind::Ex),
                GeneratorLabel::plain(LabelKind::Ey),
            ],
            columns: vec![vec![(0, Term::plus(Monomial::X))], vec![(0, Term::plus(Monomial::Y))]],
        };

        // Rows: e_x = 0, e_y = 1.
        let mut labels = Vec::with_capacity(r + 1);
        let mut columns = Vec::with_capacity(r + 1);
        for i in 0..r {
            labels.push(GeneratorLabel::new(LabelKind::F, &[idx(i)]));
            if case2 && i == r - 1 {
                columns.push(vec![(1, Term::plus(Monomial::y_pow(b[i] - 1)))]);
            } else {
                columns.push(vec![(0, Term::plus(xy(a[i] - 1, b[i])))]);
            }
        }
        labels.push(GeneratorLabel::new(LabelKind::F, &[idx(r)]));
        columns.push(vec![(0, Term::minus(Monomial::Y)), (1, Term::plus(Monomial::X))]);
        let t2 = Template { labels, columns };

        // Rows: f_1..f_r = 0..r-1, f_{r+1} = r.
        let koszul = r;
        let mut labels = Vec::with_capacity(3 * r - 1);
        let mut columns = Vec::with_capacity(3 * r - 1);
        for i in 0..r {
            labels.push(GeneratorLabel::new(LabelKind::Cx, &[idx(i)]));
            if case2 && i == r - 1 {
                columns.push(vec![
                    (i, Term::plus(Monomial::X)),
                    (koszul, Term::minus(Monomial::y_pow(b[i] - 1))),
                ]);
            } else {
                columns.push(vec![(i, Term::plus(Monomial::X))]);
            }
        }
        for i in 0..r {
            labels.push(GeneratorLabel::new(LabelKind::Cy, &[idx(i)]));
            if case2 && i == r - 1 {
                columns.push(vec![(i, Term::plus(Monomial::Y))]);
            } else {
                columns.push(vec![
                    (i, Term::plus(Monomial::Y)),
                    (koszul, Term::plus(xy(a[i] - 1, b[i]))),
                ]);
            }
        }
        for i in 0..r - 1 {
            labels.push(GeneratorLabel::new(LabelKind::D, &[idx(i)]));
            columns.push(vec![(koszul, Term::plus(xy(a[i] - 1, b[i + 1] - 1)))]);
        }
        let t3 = Template { labels, columns };

        Templates { r, a, b, t1, t2, t3 }
    }

    fn template(&self, kind: BlockKind) -> &Template {
        match kind {
            BlockKind::F1 => &self.t1,
            BlockKind::F2 => &self.t2,
            BlockKind::F3 => &self.t3,
        }
    }

    /// Bidegree of generator `d_j` inside an `F_3` block with zero shift.
    fn d_offset(&self, j: usize) -> Bidegree {
        Bidegree::new(self.a[j], self.b[j + 1])
    }

    fn f_offset(&self, j: usize) -> Bidegree {
        Bidegree::new(self.a[j], self.b[j])
    }
}

/// A block of the next stage, before its position is known.
struct Pending {
    kind: BlockKind,
    shift: Bidegree,
    /// The generators of the previous stage that the template rows map to.
    targets: Vec<usize>,
}

fn stage_four_label(t: &Templates, kind: BlockKind, ordinal: usize, local: usize) -> GeneratorLabel {
    let j = (ordinal + 1) as u32;
    match kind {
        BlockKind::F1 if local == 0 => GeneratorLabel::new(LabelKind::Hx, &[j]),
        BlockKind::F1 => GeneratorLabel::new(LabelKind::Hy, &[j]),
        BlockKind::F2 => GeneratorLabel::new(LabelKind::K, &[(local + 1) as u32, j]),
        BlockKind::F3 => t.t3.labels[local].clone(),
    }
}

/// Resolves every block of `blocks` (the block list of stage `stage - 1`)
/// and assembles `∂_stage`.
fn next_stage(
    ideal: &MonomialIdeal,
    t: &Templates,
    target: &Arc<GradedFreeModule>,
    blocks: &[Block],
    stage: usize,
) -> (Differential, Vec<Block>) {
    let r = t.r;
    let mut by_kind: [Vec<Pending>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for blk in blocks {
        let s = blk.start;
        match blk.kind {
            BlockKind::F1 => by_kind[1].push(Pending {
                kind: BlockKind::F2,
                shift: blk.shift,
                targets: vec![s, s + 1],
            }),
            BlockKind::F2 => by_kind[2].push(Pending {
                kind: BlockKind::F3,
                shift: blk.shift,
                targets: (s..s + r + 1).collect(),
            }),
            BlockKind::F3 => {
                for j in 0..r - 1 {
                    by_kind[0].push(Pending {
                        kind: BlockKind::F1,
                        shift: blk.shift + t.d_offset(j),
                        targets: vec![s + 2 * r + j],
                    });
                }
                for j in 0..r {
                    by_kind[1].push(Pending {
                        kind: BlockKind::F2,
                        shift: blk.shift + t.f_offset(j),
                        targets: vec![s + j, s + r + j],
                    });
                }
            }
        }
    }

    let mut builder = ColumnBuilder::new(target.clone());
    let mut new_blocks = Vec::new();
    let mut start = 0;
    for pending in by_kind.iter() {
        for (ordinal, p) in pending.iter().enumerate() {
            let block_index = new_blocks.len();
            let tpl = t.template(p.kind);
            for (local, column) in tpl.columns.iter().enumerate() {
                let label = if stage <= 4 {
                    if stage == 4 {
                        stage_four_label(t, p.kind, ordinal, local)
                    } else {
                        tpl.labels[local].clone()
                    }
                } else {
                    tpl.labels[local].instantiated(stage as u32, block_index as u32)
                };
                let entries = column
                    .iter()
                    .map(|&(row, term)| Entry::new(p.targets[row], term))
                    .collect();
                builder.push(label, entries);
            }
            new_blocks.push(Block {
                kind: p.kind,
                shift: p.shift,
                start,
            });
            start += tpl.labels.len();
        }
    }
    (builder.finish(ideal), new_blocks)
}

fn check_main(ideal: &MonomialIdeal) -> Result<IdealClass, ResolutionError> {
    let class = classify(ideal);
    if class.is_main() {
        Ok(class)
    } else {
        Err(ResolutionError::WrongClass {
            expected: "main-case",
            found: class,
        })
    }
}

fn decomposition_of(stage: usize, blocks: &[Block]) -> StageDecomposition {
    let count = |k: BlockKind| blocks.iter().filter(|b| b.kind == k).count();
    StageDecomposition {
        stage,
        u: count(BlockKind::F1),
        v: count(BlockKind::F2),
        w: count(BlockKind::F3),
    }
}

pub(crate) fn f0() -> Arc<GradedFreeModule> {
    Arc::new(GradedFreeModule::new(vec![Generator {
        label: GeneratorLabel::plain(LabelKind::E1),
        bidegree: Bidegree::ZERO,
    }]))
}

/// Builds the main-case resolution through stage `n`.
pub(crate) fn build(ideal: &MonomialIdeal, n: usize) -> Result<Resolution, ResolutionError> {
    let class = check_main(ideal)?;
    let t = Templates::new(ideal);
    let mut res = Resolution {
        ring: ideal.clone(),
        class,
        modules: vec![f0()],
        differentials: Vec::new(),
        decomposition: Vec::new(),
        blocks: vec![Vec::new()],
    };
    if n >= 1 {
        let mut builder = ColumnBuilder::new(res.modules[0].clone());
        for (local, column) in t.t1.columns.iter().enumerate() {
            let entries = column.iter().map(|&(_, term)| Entry::new(0, term)).collect();
            builder.push(t.t1.labels[local].clone(), entries);
        }
        let d1 = builder.finish(ideal);
        res.modules.push(d1.source_arc().clone());
        res.differentials.push(d1);
        res.blocks.push(vec![Block {
            kind: BlockKind::F1,
            shift: Bidegree::ZERO,
            start: 0,
        }]);
    }
    grow(&mut res, &t, n);
    Ok(res)
}

fn grow(res: &mut Resolution, t: &Templates, n: usize) {
    while res.modules.len() <= n {
        let stage = res.modules.len();
        let target = res.modules[stage - 1].clone();
        let (d, blocks) = next_stage(&res.ring, t, &target, &res.blocks[stage - 1], stage);
        if stage >= 4 {
            res.decomposition.push(decomposition_of(stage, &blocks));
        }
        res.modules.push(d.source_arc().clone());
        res.differentials.push(d);
        res.blocks.push(blocks);
    }
}

/// Continues a main-case resolution through stage `n` using its block data.
pub fn extend_resolution(res: &Resolution, n: usize) -> Result<Resolution, ResolutionError> {
    check_main(&res.ring)?;
    if n < 4 {
        return Err(ResolutionError::StageTooSmall(n));
    }
    let mut out = res.clone();
    if out.stages() >= n {
        out.truncate(n);
        return Ok(out);
    }
    if out.blocks.len() != out.modules.len() || out.blocks.last().is_none_or(|b| b.is_empty()) {
        return Err(ResolutionError::MissingBlocks);
    }
    let t = Templates::new(&res.ring);
    grow(&mut out, &t, n);
    Ok(out)
}

fn stage_map(ideal: &MonomialIdeal, stage: usize) -> Result<Differential, ResolutionError> {
    let res = build(ideal, stage)?;
    Ok(res.differentials[stage - 1].clone())
}

/// `∂_1 : F_1 -> F_0`, the row `[x y]`.
pub fn build_d1(ideal: &MonomialIdeal) -> Result<Differential, ResolutionError> {
    stage_map(ideal, 1)
}

/// `∂_2 : F_2 -> F_1` with basis `f_1, ..., f_{r+1}`.
pub fn build_d2(ideal: &MonomialIdeal) -> Result<Differential, ResolutionError> {
    stage_map(ideal, 2)
}

/// `∂_3 : F_3 -> F_2` with basis `c^x_i, c^y_i, d_i`.
pub fn build_d3(ideal: &MonomialIdeal) -> Result<Differential, ResolutionError> {
    stage_map(ideal, 3)
}

/// `∂_4 : F_4 -> F_3` together with the decomposition of `F_4`.
pub fn build_d4(ideal: &MonomialIdeal) -> Result<(Differential, StageDecomposition), ResolutionError> {
    let res = build(ideal, 4)?;
    Ok((res.differentials[3].clone(), res.decomposition[0]))
}

/// Generators of the first syzygy module of `0 : (x)` over `S`, as columns
/// over the basis `e_{f_1}, ..., e_{f_r}`: first the `x · e_{f_i}`, then the
/// `y^{b_{i+1} - b_i} · e_{f_i}`.
pub fn syzygy_generators_mx(ideal: &MonomialIdeal) -> Result<Vec<Vec<Entry>>, ResolutionError> {
    check_main(ideal)?;
    let r = ideal.len();
    let xs = if ideal.a(r - 1) > 0 { r } else { r - 1 };
    let mut out: Vec<Vec<Entry>> = (0..xs)
        .map(|i| vec![Entry::new(i, Term::plus(Monomial::X))])
        .collect();
    for i in 0..r - 1 {
        let gap = ideal.b(i + 1) - ideal.b(i);
        out.push(vec![Entry::new(i, Term::plus(Monomial::y_pow(gap)))]);
    }
    Ok(out)
}

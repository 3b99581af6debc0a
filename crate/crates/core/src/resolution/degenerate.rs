//! Resolutions for the five degenerate shapes of `M`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::classification::{classify, IdealClass};
use crate::error::ResolutionError;
use crate::monomial::{Monomial, MonomialIdeal};

use super::label::{GeneratorLabel, LabelKind};
use super::main_case::f0;
use super::module::{ColumnBuilder, Entry, Term};
use super::Resolution;

/// Builds the degenerate-case resolution of `k` through stage `n`.
///
/// Finite resolutions (types I and III) are padded with zero modules up to
/// stage `n`.
pub fn build_degenerate(ideal: &MonomialIdeal, n: usize) -> Result<Resolution, ResolutionError> {
    let class = classify(ideal);
    let columns = match class {
        IdealClass::TypeI => {
            if ideal.generators()[0] == Monomial::X {
                return Ok(build_degenerate(&ideal.swapped(), n)?.swapped());
            }
            type_i()
        }
        IdealClass::TypeII => {
            let g = ideal.generators()[0];
            if g.xdeg == 0 {
                return Ok(build_degenerate(&ideal.swapped(), n)?.swapped());
            }
            type_ii(g, n)
        }
        IdealClass::TypeIII => Vec::new(),
        IdealClass::TypeIV => {
            if ideal.a(0) == 1 {
                return Ok(build_degenerate(&ideal.swapped(), n)?.swapped());
            }
            type_iv(ideal.a(0), n)
        }
        IdealClass::TypeV => type_v(ideal.a(0), ideal.b(1), n),
        IdealClass::MainCase1 | IdealClass::MainCase2 => {
            return Err(ResolutionError::WrongClass {
                expected: "degenerate",
                found: class,
            })
        }
    };
    Ok(assemble(ideal, class, columns, n))
}

type StageColumns = Vec<Vec<Entry>>;

fn assemble(ideal: &MonomialIdeal, class: IdealClass, stages: Vec<StageColumns>, n: usize) -> Resolution {
    let mut res = Resolution {
        ring: ideal.clone(),
        class,
        modules: vec![f0()],
        differentials: Vec::new(),
        decomposition: Vec::new(),
        blocks: Vec::new(),
    };
    let mut stages = stages.into_iter();
    for _ in 1..=n {
        let target = res.modules.last().expect("F_0 is present").clone();
        let mut builder = ColumnBuilder::new(target);
        for (j, col) in stages.next().unwrap_or_default().into_iter().enumerate() {
            builder.push(GeneratorLabel::new(LabelKind::E, &[(j + 1) as u32]), col);
        }
        let d = builder.finish(ideal);
        res.modules.push(d.source_arc().clone());
        res.differentials.push(d);
    }
    res
}

fn plus(row: usize, m: Monomial) -> Entry {
    Entry::new(row, Term::plus(m))
}

fn minus(row: usize, m: Monomial) -> Entry {
    Entry::new(row, Term::minus(m))
}

/// `M = (y)`: `S = k[x]` and `k <- S <-(x)- S(-1) <- 0`.
fn type_i() -> Vec<StageColumns> {
    vec![vec![vec![plus(0, Monomial::X)]]]
}

/// `M = (x^a y^b)` with `a >= 1`.
///
/// The `(2,2)` entry of the stage-4 matrix is `-x^{a-1}y^b`: with `+` the
/// composite with the stage-5 matrix (equal to the stage-3 one) has the
/// nonzero entry `2 x^{a-1}y^{b+1}`.
fn type_ii(g: Monomial, n: usize) -> Vec<StageColumns> {
    let u = Monomial::new(g.xdeg - 1, g.ydeg);
    let (x, y) = (Monomial::X, Monomial::Y);
    let d1 = vec![vec![plus(0, x)], vec![plus(0, y)]];
    let d2 = vec![vec![minus(0, y), plus(1, x)], vec![plus(0, u)]];
    let d3 = vec![vec![plus(0, u), plus(1, y)], vec![plus(1, x)]];
    let d4 = vec![vec![minus(0, x), plus(1, y)], vec![minus(1, u)]];
    let mut out = vec![d1, d2];
    for i in 3..=n.max(2) {
        out.push(if i % 2 == 1 { d3.clone() } else { d4.clone() });
    }
    out
}

/// `M = (x^a, y)` with `a >= 2`: alternating `(x)` and `(x^{a-1})`.
fn type_iv(a: u32, n: usize) -> Vec<StageColumns> {
    (1..=n)
        .map(|i| {
            let m = if i % 2 == 1 { Monomial::X } else { Monomial::x_pow(a - 1) };
            vec![vec![plus(0, m)]]
        })
        .collect()
}

/// The coefficients `f_j^{(i)}` (`j = 1..=i+1`) and `g_j^{(i)}`
/// (`j = 3..=i+1`) of stage `i` in the resolution over `k[x,y]/(x^a, y^b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveCoeffs {
    pub stage: usize,
    /// `f[j - 1]` is `f_j`.
    pub f: Vec<Term>,
    /// `g[j - 3]` is `g_j`.
    pub g: Vec<Term>,
}

impl InductiveCoeffs {
    fn base(a: u32, b: u32) -> Self {
        InductiveCoeffs {
            stage: 2,
            f: vec![
                Term::plus(Monomial::x_pow(a - 1)),
                Term::plus(Monomial::y_pow(b - 1)),
                Term::plus(Monomial::X),
            ],
            g: vec![Term::minus(Monomial::Y)],
        }
    }

    fn next(&self, a: u32, b: u32) -> Self {
        let i = self.stage + 1;
        let prev_f = |j: usize| self.f[j - 1];
        let mut f = Vec::with_capacity(i + 1);
        let mut g = Vec::with_capacity(i - 1);
        let quotient = |top: Monomial, t: Term| Term {
            sign: t.sign,
            monomial: top.checked_div(t.monomial).expect("coefficient divides the pure power"),
        };
        f.push(quotient(Monomial::x_pow(a), prev_f(1)));
        f.push(quotient(Monomial::y_pow(b), prev_f(2)));
        for j in 3..=i {
            g.push(self.g[j - 3]);
            f.push(-prev_f(j - 2));
        }
        g.push(prev_f(i));
        f.push(-prev_f(i - 1));
        InductiveCoeffs { stage: i, f, g }
    }

    /// Column `j` (1-based) of `∂_i` over the basis of `F_{i-1}`.
    fn column(&self, j: usize) -> Vec<Entry> {
        let i = self.stage;
        let f = self.f[j - 1];
        if j <= 2 {
            vec![Entry::new(j - 1, f)]
        } else if j <= i {
            vec![Entry::new(j - 3, self.g[j - 3]), Entry::new(j - 1, f)]
        } else {
            vec![Entry::new(i - 2, self.g[j - 3]), Entry::new(i - 1, f)]
        }
    }
}

/// Coefficients for stages `2..=n` over `k[x,y]/(x^a, y^b)`.
pub fn type_v_coefficients(a: u32, b: u32, n: usize) -> Vec<InductiveCoeffs> {
    let mut out: Vec<InductiveCoeffs> = Vec::new();
    if n < 2 {
        return out;
    }
    out.push(InductiveCoeffs::base(a, b));
    while out.len() + 1 < n {
        let next = out.last().expect("base is present").next(a, b);
        out.push(next);
    }
    out
}

fn type_v(a: u32, b: u32, n: usize) -> Vec<StageColumns> {
    let mut out = vec![vec![vec![plus(0, Monomial::X)], vec![plus(0, Monomial::Y)]]];
    for c in type_v_coefficients(a, b, n) {
        out.push((1..=c.stage + 1).map(|j| c.column(j)).collect());
    }
    out
}

impl Resolution {
    pub(crate) fn swapped(&self) -> Resolution {
        let modules: Vec<_> = self.modules.iter().map(|m| Arc::new(m.swapped())).collect();
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(i, d)| d.swapped(modules[i + 1].clone(), modules[i].clone()))
            .collect();
        Resolution {
            ring: self.ring.swapped(),
            class: self.class,
            modules,
            differentials,
            decomposition: self.decomposition.clone(),
            blocks: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::{compose_check, Differential};
    use alloc::format;

    fn ideal(pairs: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(pairs).unwrap()
    }

    fn show(d: &Differential) -> Vec<Vec<alloc::string::String>> {
        (0..d.rows())
            .map(|i| {
                (0..d.cols())
                    .map(|j| d.get(i, j).map_or_else(|| "0".into(), |t| format!("{t}")))
                    .collect()
            })
            .collect()
    }

    fn is_complex(res: &Resolution) -> bool {
        res.differentials()
            .windows(2)
            .all(|w| compose_check(&w[0], &w[1]).unwrap().is_zero())
    }

    #[test]
    fn type_iii_is_just_s() {
        let res = build_degenerate(&ideal(&[(1, 0), (0, 1)]), 4).unwrap();
        assert_eq!(res.ranks(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn type_i_terminates_after_one_step() {
        let res = build_degenerate(&ideal(&[(0, 1)]), 3).unwrap();
        assert_eq!(res.ranks(), vec![1, 1, 0, 0]);
        assert_eq!(show(res.differential(1).unwrap()), [["x"]]);
        let res = build_degenerate(&ideal(&[(1, 0)]), 3).unwrap();
        assert_eq!(show(res.differential(1).unwrap()), [["y"]]);
        assert_eq!(res.module(1).unwrap().bidegree(0), crate::Bidegree::new(0, 1));
    }

    #[test]
    fn type_ii_matrices() {
        let res = build_degenerate(&ideal(&[(2, 3)]), 7).unwrap();
        assert_eq!(show(res.differential(1).unwrap()), [["x", "y"]]);
        assert_eq!(show(res.differential(2).unwrap()), [["-y", "xy^3"], ["x", "0"]]);
        assert_eq!(show(res.differential(3).unwrap()), [["xy^3", "0"], ["y", "x"]]);
        assert_eq!(show(res.differential(4).unwrap()), [["-x", "0"], ["y", "-xy^3"]]);
        for i in 5..=7 {
            assert_eq!(
                show(res.differential(i).unwrap()),
                show(res.differential(i - 2).unwrap())
            );
        }
        assert!(is_complex(&res));
    }

    #[test]
    fn type_ii_pure_y_power_swaps() {
        let res = build_degenerate(&ideal(&[(0, 3)]), 4).unwrap();
        assert_eq!(show(res.differential(1).unwrap()), [["y", "x"]]);
        assert_eq!(show(res.differential(2).unwrap()), [["-x", "y^2"], ["y", "0"]]);
        assert!(is_complex(&res));
        for d in res.differentials() {
            d.check_homogeneous().unwrap();
        }
    }

    #[test]
    fn type_iv_alternates() {
        let res = build_degenerate(&ideal(&[(4, 0), (0, 1)]), 5).unwrap();
        let maps: Vec<_> = (1..=5).map(|i| show(res.differential(i).unwrap())[0][0].clone()).collect();
        assert_eq!(maps, ["x", "x^3", "x", "x^3", "x"]);
        let res = build_degenerate(&ideal(&[(1, 0), (0, 3)]), 3).unwrap();
        let maps: Vec<_> = (1..=3).map(|i| show(res.differential(i).unwrap())[0][0].clone()).collect();
        assert_eq!(maps, ["y", "y^2", "y"]);
        let res = build_degenerate(&ideal(&[(2, 0), (0, 1)]), 4).unwrap();
        let maps: Vec<_> = (1..=4).map(|i| show(res.differential(i).unwrap())[0][0].clone()).collect();
        assert_eq!(maps, ["x", "x", "x", "x"]);
    }

    #[test]
    fn type_v_worked_example() {
        let res = build_degenerate(&ideal(&[(3, 0), (0, 7)]), 8).unwrap();
        assert_eq!(show(res.differential(2).unwrap()), [["x^2", "0", "-y"], ["0", "y^6", "x"]]);
        assert_eq!(
            show(res.differential(3).unwrap()),
            [["x", "0", "-y", "0"], ["0", "y", "0", "x"], ["0", "0", "-x^2", "-y^6"]]
        );
        assert_eq!(res.ranks(), (1..=9).collect::<Vec<_>>());
        assert!(is_complex(&res));
        for d in res.differentials() {
            d.check_homogeneous().unwrap();
        }
    }

    #[test]
    fn type_v_coefficient_identity() {
        for (a, b) in [(2, 2), (3, 7), (5, 2), (4, 4)] {
            let coeffs = type_v_coefficients(a, b, 12);
            assert_eq!(coeffs.len(), 11);
            for w in coeffs.windows(2) {
                assert_eq!(w[1].f[0].monomial * w[0].f[0].monomial, Monomial::x_pow(a));
                assert_eq!(w[1].f[1].monomial * w[0].f[1].monomial, Monomial::y_pow(b));
                assert_eq!(w[1].f.len(), w[1].stage + 1);
                assert_eq!(w[1].g.len(), w[1].stage - 1);
            }
        }
    }

    #[test]
    fn main_case_is_rejected() {
        assert!(matches!(
            build_degenerate(&ideal(&[(2, 1), (1, 2)]), 3),
            Err(ResolutionError::WrongClass { .. })
        ));
    }
}

//! Monomials in `x, y`, monomial ideals and the quotient ring `S = k[x, y]/M`.
//!
//! A monomial ideal in two variables is determined by its staircase: the
//! minimal generators `x^{a_1}y^{b_1}, ..., x^{a_r}y^{b_r}` ordered with
//! `a_1 > ... > a_r >= 0` and `0 <= b_1 < ... < b_r`. Everything here is
//! divisibility arithmetic on exponent pairs; no Gröbner machinery is needed.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use crate::error::IdealError;

/// The monomial `x^xdeg * y^ydeg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub xdeg: u32,
    pub ydeg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { xdeg: 0, ydeg: 0 };
    pub const X: Monomial = Monomial { xdeg: 1, ydeg: 0 };
    pub const Y: Monomial = Monomial { xdeg: 0, ydeg: 1 };

    pub const fn new(xdeg: u32, ydeg: u32) -> Self {
        Monomial { xdeg, ydeg }
    }

    pub const fn x_pow(n: u32) -> Self {
        Monomial { xdeg: n, ydeg: 0 }
    }

    pub const fn y_pow(n: u32) -> Self {
        Monomial { xdeg: 0, ydeg: n }
    }

    /// Total degree `xdeg + ydeg`.
    pub const fn degree(self) -> u32 {
        self.xdeg + self.ydeg
    }

    pub const fn is_one(self) -> bool {
        self.xdeg == 0 && self.ydeg == 0
    }

    pub const fn divides(self, other: Monomial) -> bool {
        self.xdeg <= other.xdeg && self.ydeg <= other.ydeg
    }

    /// `self / divisor`, if the division is exact.
    pub fn checked_div(self, divisor: Monomial) -> Option<Monomial> {
        Some(Monomial {
            xdeg: self.xdeg.checked_sub(divisor.xdeg)?,
            ydeg: self.ydeg.checked_sub(divisor.ydeg)?,
        })
    }

    /// The image under the ring automorphism exchanging `x` and `y`.
    pub const fn swapped(self) -> Monomial {
        Monomial {
            xdeg: self.ydeg,
            ydeg: self.xdeg,
        }
    }

    pub const fn bidegree(self) -> Bidegree {
        Bidegree {
            x: self.xdeg,
            y: self.ydeg,
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            xdeg: self.xdeg + rhs.xdeg,
            ydeg: self.ydeg + rhs.ydeg,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (var, exp) in [('x', self.xdeg), ('y', self.ydeg)] {
            match exp {
                0 => {}
                1 => write!(f, "{var}")?,
                e => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A bidegree `(x, y)` in the fine grading of `k[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub x: u32,
    pub y: u32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Bidegree { x, y }
    }

    pub const fn total(self) -> u32 {
        self.x + self.y
    }

    /// The monomial carrying `lower` to `self`, if `lower <= self` componentwise.
    pub fn monomial_from(self, lower: Bidegree) -> Option<Monomial> {
        Some(Monomial::new(
            self.x.checked_sub(lower.x)?,
            self.y.checked_sub(lower.y)?,
        ))
    }

    pub const fn swapped(self) -> Bidegree {
        Bidegree {
            x: self.y,
            y: self.x,
        }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl Add<Monomial> for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Monomial) -> Bidegree {
        Bidegree {
            x: self.x + rhs.xdeg,
            y: self.y + rhs.ydeg,
        }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The image of a monomial in `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueElement {
    Zero,
    /// A standard monomial, i.e. one not lying in `M`.
    Monomial(Monomial),
}

impl ResidueElement {
    pub fn is_zero(self) -> bool {
        matches!(self, ResidueElement::Zero)
    }
}

/// A proper, nonzero monomial ideal given by its minimal generators.
///
/// Generators are kept in staircase order: strictly decreasing x-degree and
/// strictly increasing y-degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces `raw` to its minimal generating set in staircase order.
    pub fn normalize(raw: &[Monomial]) -> Result<Self, IdealError> {
        if raw.is_empty() {
            return Err(IdealError::EmptyIdeal);
        }
        if raw.iter().any(|m| m.is_one()) {
            return Err(IdealError::UnitIdeal);
        }
        let mut generators: Vec<Monomial> = Vec::with_capacity(raw.len());
        for &m in raw {
            if raw.iter().any(|&g| g != m && g.divides(m)) || generators.contains(&m) {
                continue;
            }
            generators.push(m);
        }
        generators.sort_by_key(|g| core::cmp::Reverse(g.xdeg));
        Ok(MonomialIdeal { generators })
    }

    /// Convenience constructor from exponent pairs `(a, b)` for `x^a y^b`.
    pub fn from_exponents(pairs: &[(u32, u32)]) -> Result<Self, IdealError> {
        let raw: Vec<Monomial> = pairs.iter().map(|&(a, b)| Monomial::new(a, b)).collect();
        Self::normalize(&raw)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// The number `r` of minimal generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// x-exponent `a_i` of the `i`-th generator (0-based).
    pub fn a(&self, i: usize) -> u32 {
        self.generators[i].xdeg
    }

    /// y-exponent `b_i` of the `i`-th generator (0-based).
    pub fn b(&self, i: usize) -> u32 {
        self.generators[i].ydeg
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn normal_form(&self, m: Monomial) -> ResidueElement {
        if self.contains(m) {
            ResidueElement::Zero
        } else {
            ResidueElement::Monomial(m)
        }
    }

    pub fn is_standard(&self, m: Monomial) -> bool {
        !self.contains(m)
    }

    /// Largest total degree among the generators.
    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// The ideal with `x` and `y` exchanged.
    pub fn swapped(&self) -> MonomialIdeal {
        let mut generators: Vec<Monomial> = self.generators.iter().map(|g| g.swapped()).collect();
        generators.reverse();
        MonomialIdeal { generators }
    }

    /// Minimal generators of `0 : (x)` in `S`.
    pub fn colon_x(&self) -> ColonIdeal {
        ColonIdeal::from_candidates(
            self.generators
                .iter()
                .filter(|g| g.xdeg > 0)
                .map(|g| Monomial::new(g.xdeg - 1, g.ydeg)),
        )
    }

    /// Minimal generators of `0 : (y)` in `S`.
    pub fn colon_y(&self) -> ColonIdeal {
        ColonIdeal::from_candidates(
            self.generators
                .iter()
                .filter(|g| g.ydeg > 0)
                .map(|g| Monomial::new(g.xdeg, g.ydeg - 1)),
        )
    }

    /// The k-basis of `S_d`: degree-`d` monomials outside `M`, in lex order
    /// with `x > y` (so `x^d` comes first).
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        (0..=d)
            .rev()
            .map(|p| Monomial::new(p, d - p))
            .filter(|&m| self.is_standard(m))
            .collect()
    }

    /// `dim_k S_d`.
    pub fn hilbert_function(&self, d: u32) -> usize {
        (0..=d)
            .filter(|&p| self.is_standard(Monomial::new(p, d - p)))
            .count()
    }

    pub fn staircase_outline(&self) -> Staircase {
        let corners: Vec<(u32, u32)> = self.generators.iter().map(|g| (g.xdeg, g.ydeg)).collect();
        let mut outline = Vec::with_capacity(2 * corners.len());
        // Walk from the top-left generator down to the bottom-right one,
        // passing through the outer corners x^{a_i} y^{b_{i+1}}.
        for i in (0..corners.len()).rev() {
            outline.push(corners[i]);
            if i > 0 {
                outline.push((corners[i - 1].0, corners[i].1));
            }
        }
        Staircase { corners, outline }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// An ideal of `S` given by minimal monomial generators; may be the zero
/// ideal (no generators) or the unit ideal (generated by `1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonIdeal {
    generators: Vec<Monomial>,
}

impl ColonIdeal {
    fn from_candidates(candidates: impl Iterator<Item = Monomial>) -> Self {
        let mut generators: Vec<Monomial> = candidates.collect();
        if generators.iter().any(|m| m.is_one()) {
            generators = alloc::vec![Monomial::ONE];
        }
        generators.sort_by_key(|g| core::cmp::Reverse(g.xdeg));
        ColonIdeal { generators }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators == [Monomial::ONE]
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Lattice data for drawing a staircase diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    /// Generator exponent pairs, in staircase order.
    pub corners: Vec<(u32, u32)>,
    /// Boundary polyline from the top-left generator to the bottom-right one.
    /// The boundary continues vertically upward from the first point and
    /// horizontally rightward from the last.
    pub outline: Vec<(u32, u32)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn ideal(pairs: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(pairs).unwrap()
    }

    #[test]
    fn normalize_drops_non_minimal_generators() {
        let m = ideal(&[(2, 1), (1, 2), (3, 2)]);
        assert_eq!(m.generators(), &[Monomial::new(2, 1), Monomial::new(1, 2)]);
    }

    #[test]
    fn normalize_orders_like_a_staircase() {
        let m = ideal(&[(0, 4), (1, 2)]);
        assert_eq!(m.generators(), &[Monomial::new(1, 2), Monomial::new(0, 4)]);
        assert_eq!((m.a(0), m.a(1), m.b(0), m.b(1)), (1, 0, 2, 4));
        assert_eq!(ideal(&[(1, 0)]).len(), 1);
    }

    #[test]
    fn normalize_rejects_zero_and_unit() {
        assert_eq!(MonomialIdeal::normalize(&[]), Err(IdealError::EmptyIdeal));
        assert_eq!(
            MonomialIdeal::from_exponents(&[(1, 0), (0, 0)]),
            Err(IdealError::UnitIdeal)
        );
    }

    #[test]
    fn duplicates_collapse() {
        let m = ideal(&[(1, 1), (1, 1), (2, 0)]);
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn membership_and_normal_form() {
        let m1 = ideal(&[(1, 2), (0, 4)]);
        assert!(m1.contains(Monomial::new(3, 5)));
        assert!(!m1.contains(Monomial::x_pow(5)));
        assert!(m1.contains(Monomial::y_pow(4)));

        let m2 = ideal(&[(2, 1), (1, 2)]);
        assert_eq!(m2.normal_form(Monomial::new(2, 1)), ResidueElement::Zero);
        assert_eq!(
            m2.normal_form(Monomial::new(1, 1)),
            ResidueElement::Monomial(Monomial::new(1, 1))
        );
        let ci = ideal(&[(3, 0), (0, 7)]);
        assert_eq!(ci.normal_form(Monomial::y_pow(7)), ResidueElement::Zero);
    }

    #[test]
    fn colon_ideals_match_halo_pictures() {
        let m1 = ideal(&[(1, 2), (0, 4)]);
        assert_eq!(m1.colon_x().generators(), &[Monomial::y_pow(2)]);
        assert_eq!(
            m1.colon_y().generators(),
            &[Monomial::new(1, 1), Monomial::y_pow(3)]
        );
        let m2 = ideal(&[(2, 1), (1, 2)]);
        assert_eq!(
            m2.colon_x().generators(),
            &[Monomial::new(1, 1), Monomial::y_pow(2)]
        );
        assert_eq!(
            m2.colon_y().generators(),
            &[Monomial::x_pow(2), Monomial::new(1, 1)]
        );
    }

    #[test]
    fn colon_of_a_variable_is_everything() {
        assert!(ideal(&[(1, 0)]).colon_x().is_unit());
        assert!(ideal(&[(0, 1)]).colon_y().is_unit());
        // x is a nonzerodivisor on k[x,y]/(y)
        assert!(ideal(&[(0, 1)]).colon_x().is_zero());
    }

    #[test]
    fn standard_monomial_bases() {
        let mxy = ideal(&[(1, 0), (0, 1)]);
        assert_eq!(mxy.standard_monomials(0), vec![Monomial::ONE]);
        assert!(mxy.standard_monomials(1).is_empty());

        let m2 = ideal(&[(2, 1), (1, 2)]);
        assert_eq!(
            m2.standard_monomials(3),
            vec![Monomial::x_pow(3), Monomial::y_pow(3)]
        );
        let ci = ideal(&[(3, 0), (0, 7)]);
        assert_eq!(
            ci.standard_monomials(2),
            vec![Monomial::x_pow(2), Monomial::new(1, 1), Monomial::y_pow(2)]
        );
    }

    #[test]
    fn staircase_corners() {
        let m1 = ideal(&[(1, 2), (0, 4)]);
        let s = m1.staircase_outline();
        assert_eq!(s.corners, vec![(1, 2), (0, 4)]);
        assert_eq!(s.outline, vec![(0, 4), (1, 4), (1, 2)]);
        assert_eq!(ideal(&[(2, 1), (1, 2)]).staircase_outline().corners, vec![(2, 1), (1, 2)]);
        assert_eq!(ideal(&[(1, 0)]).staircase_outline().corners, vec![(1, 0)]);
    }

    #[test]
    fn display() {
        let m = ideal(&[(2, 1), (1, 2)]);
        assert_eq!(alloc::format!("{m}"), "(x^2y, xy^2)");
        assert_eq!(alloc::format!("{}", Monomial::ONE), "1");
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec((0u32..8, 0u32..8), 1..6).prop_filter_map("unit ideal", |pairs| {
            MonomialIdeal::from_exponents(&pairs).ok()
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(m in arb_ideal()) {
            let again = MonomialIdeal::normalize(m.generators()).unwrap();
            prop_assert_eq!(again, m);
        }

        #[test]
        fn generators_form_a_strict_staircase(m in arb_ideal()) {
            for w in m.generators().windows(2) {
                prop_assert!(w[0].xdeg > w[1].xdeg);
                prop_assert!(w[0].ydeg < w[1].ydeg);
            }
        }

        #[test]
        fn ideal_absorbs_variables(m in arb_ideal(), p in 0u32..10, q in 0u32..10) {
            let mono = Monomial::new(p, q);
            if m.contains(mono) {
                prop_assert!(m.contains(mono * Monomial::X));
                prop_assert!(m.contains(mono * Monomial::Y));
            }
        }

        #[test]
        fn colon_x_generators_are_exactly_the_annihilated_corners(m in arb_ideal()) {
            let colon = m.colon_x();
            for &g in colon.generators() {
                prop_assert!(m.contains(g * Monomial::X));
                prop_assert!(!m.contains(g));
            }
            for d in 0..14 {
                for s in m.standard_monomials(d) {
                    if m.contains(s * Monomial::X) {
                        prop_assert!(colon.contains(s));
                    }
                }
            }
        }

        #[test]
        fn colon_y_generators_are_exactly_the_annihilated_corners(m in arb_ideal()) {
            let colon = m.colon_y();
            for &g in colon.generators() {
                prop_assert!(m.contains(g * Monomial::Y));
                prop_assert!(!m.contains(g));
            }
            for d in 0..14 {
                for s in m.standard_monomials(d) {
                    if m.contains(s * Monomial::Y) {
                        prop_assert!(colon.contains(s));
                    }
                }
            }
        }

        #[test]
        fn hilbert_function_counts_lattice_points_under_the_staircase(m in arb_ideal(), d in 0u32..20) {
            // Count points (p, d - p) not dominated by any corner.
            let corners = m.staircase_outline().corners;
            let under = (0..=d)
                .filter(|&p| !corners.iter().any(|&(a, b)| a <= p && b <= d - p))
                .count();
            prop_assert_eq!(m.standard_monomials(d).len(), under);
            prop_assert_eq!(m.hilbert_function(d), under);
        }

        #[test]
        fn hilbert_function_is_eventually_constant(m in arb_ideal()) {
            // Past the corner x^{a_1} y^{b_r} only the strips x^p (p < a_r)
            // and y^q (q < b_1) remain standard.
            let top = m.a(0) + m.b(m.len() - 1);
            let expected = (m.a(m.len() - 1) + m.b(0)) as usize;
            prop_assert_eq!(m.hilbert_function(top), expected);
            prop_assert_eq!(m.hilbert_function(top), m.hilbert_function(top + 1));
        }
    }
}

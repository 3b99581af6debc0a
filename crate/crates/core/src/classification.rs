//! Which construction applies to a given ideal.

use core::fmt;
use core::str::FromStr;

use crate::monomial::MonomialIdeal;

/// The seven construction regimes for `k` over `k[x,y]/M`.
///
/// The main case covers `r > 2`, or `r = 2` with the generators not both
/// pure powers; it splits on whether the last generator is a pure power of
/// `y`. The remaining five types are the degenerate cases with at most two
/// generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealClass {
    /// Every generator is divisible by `x` (`a_r >= 1`).
    MainCase1,
    /// The last generator is `y^{b_r}` (`a_r = 0`).
    MainCase2,
    /// `(x)` or `(y)`.
    TypeI,
    /// A single generator `x^a y^b` with `a + b >= 2`.
    TypeII,
    /// `(x, y)`.
    TypeIII,
    /// `(x^a, y)` or `(x, y^b)` with the power at least 2.
    TypeIV,
    /// `(x^a, y^b)` with `a, b >= 2`.
    TypeV,
}

impl IdealClass {
    pub const ALL: [IdealClass; 7] = [
        IdealClass::MainCase1,
        IdealClass::MainCase2,
        IdealClass::TypeI,
        IdealClass::TypeII,
        IdealClass::TypeIII,
        IdealClass::TypeIV,
        IdealClass::TypeV,
    ];

    pub fn is_main(self) -> bool {
        matches!(self, IdealClass::MainCase1 | IdealClass::MainCase2)
    }

    pub fn name(self) -> &'static str {
        match self {
            IdealClass::MainCase1 => "main-case-1",
            IdealClass::MainCase2 => "main-case-2",
            IdealClass::TypeI => "type-1",
            IdealClass::TypeII => "type-2",
            IdealClass::TypeIII => "type-3",
            IdealClass::TypeIV => "type-4",
            IdealClass::TypeV => "type-5",
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClass;

impl fmt::Display for UnknownClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown ideal class")
    }
}

impl FromStr for IdealClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdealClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(UnknownClass)
    }
}

pub fn classify(ideal: &MonomialIdeal) -> IdealClass {
    let gens = ideal.generators();
    match gens {
        [g] => {
            if g.degree() == 1 {
                IdealClass::TypeI
            } else {
                IdealClass::TypeII
            }
        }
        // Two pure powers: the first is x^a, the second y^b.
        [g1, g2] if g1.ydeg == 0 && g2.xdeg == 0 => match (g1.xdeg, g2.ydeg) {
            (1, 1) => IdealClass::TypeIII,
            (1, _) | (_, 1) => IdealClass::TypeIV,
            _ => IdealClass::TypeV,
        },
        _ => {
            if ideal.a(gens.len() - 1) >= 1 {
                IdealClass::MainCase1
            } else {
                IdealClass::MainCase2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn class_of(pairs: &[(u32, u32)]) -> IdealClass {
        classify(&MonomialIdeal::from_exponents(pairs).unwrap())
    }

    #[test]
    fn worked_examples() {
        assert_eq!(class_of(&[(2, 1), (1, 2)]), IdealClass::MainCase1);
        assert_eq!(class_of(&[(1, 2), (0, 4)]), IdealClass::MainCase2);
        assert_eq!(class_of(&[(3, 0), (0, 7)]), IdealClass::TypeV);
        assert_eq!(class_of(&[(1, 0), (0, 1)]), IdealClass::TypeIII);
    }

    #[test]
    fn degenerate_types() {
        assert_eq!(class_of(&[(1, 0)]), IdealClass::TypeI);
        assert_eq!(class_of(&[(0, 1)]), IdealClass::TypeI);
        assert_eq!(class_of(&[(3, 0)]), IdealClass::TypeII);
        assert_eq!(class_of(&[(0, 2)]), IdealClass::TypeII);
        assert_eq!(class_of(&[(1, 1)]), IdealClass::TypeII);
        assert_eq!(class_of(&[(2, 0), (0, 1)]), IdealClass::TypeIV);
        assert_eq!(class_of(&[(1, 0), (0, 5)]), IdealClass::TypeIV);
        assert_eq!(class_of(&[(2, 0), (1, 1)]), IdealClass::MainCase1);
        assert_eq!(class_of(&[(2, 0), (1, 1), (0, 2)]), IdealClass::MainCase2);
    }

    #[test]
    fn names_round_trip() {
        for c in IdealClass::ALL {
            assert_eq!(c.name().parse::<IdealClass>(), Ok(c));
        }
        assert!("type-6".parse::<IdealClass>().is_err());
    }

    /// Every staircase with exponents <= 5, enumerated by non-increasing
    /// column heights h_0 >= ... >= h_5 (height 6 means "no generator yet").
    fn all_staircases() -> Vec<Vec<(u32, u32)>> {
        fn rec(col: u32, prev: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
            if col > 5 {
                out.push(acc.clone());
                return;
            }
            for h in 0..=prev {
                if h < prev {
                    acc.push((col, h));
                }
                rec(col + 1, h, acc, out);
                if h < prev {
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(0, 6, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn classification_is_total_and_matches_the_main_case_condition() {
        let mut seen = 0;
        for gens in all_staircases() {
            let Ok(m) = MonomialIdeal::from_exponents(&gens) else { continue };
            seen += 1;
            let c = classify(&m);
            let r = m.len();
            let pure = r == 2 && m.b(0) == 0 && m.a(1) == 0;
            assert_eq!(c.is_main(), r > 2 || (r == 2 && !pure), "{m}");
            let matches = IdealClass::ALL.into_iter().filter(|&k| describes(k, &m)).count();
            assert_eq!(matches, 1, "{m} matched {matches} descriptions");
            assert!(describes(c, &m));
        }
        // C(12, 6) staircases, minus the zero and unit ideals
        assert_eq!(seen, 922);
    }

    fn describes(class: IdealClass, m: &MonomialIdeal) -> bool {
        let r = m.len();
        let pure_pair = r == 2 && m.b(0) == 0 && m.a(1) == 0;
        match class {
            IdealClass::MainCase1 => (r > 2 || (r == 2 && !pure_pair)) && m.a(r - 1) >= 1,
            IdealClass::MainCase2 => (r > 2 || (r == 2 && !pure_pair)) && m.a(r - 1) == 0,
            IdealClass::TypeI => r == 1 && m.generators()[0].degree() == 1,
            IdealClass::TypeII => r == 1 && m.generators()[0].degree() >= 2,
            IdealClass::TypeIII => pure_pair && m.a(0) == 1 && m.b(1) == 1,
            IdealClass::TypeIV => pure_pair && (m.a(0) == 1) != (m.b(1) == 1),
            IdealClass::TypeV => pure_pair && m.a(0) >= 2 && m.b(1) >= 2,
        }
    }
}

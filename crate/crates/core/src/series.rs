//! Poincaré–Betti series `P_S(z) = Σ β_i z^i` as exact rational functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::classification::IdealClass;

/// A polynomial in `z` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPoly { coeffs }
    }

    pub fn one() -> Self {
        IntPoly::new(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 || k == 0 {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `numerator / denominator`, with the denominator's constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

impl PoincareSeries {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Self {
        assert_eq!(denominator.coeff(0), 1, "denominator must have constant term 1");
        PoincareSeries {
            numerator,
            denominator,
        }
    }

    /// The first `n + 1` power-series coefficients.
    pub fn expand(&self, n: usize) -> Vec<i128> {
        series_expand(self, n)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly, f: &mut fmt::Formatter<'_>| {
            if p.term_count() > 1 {
                write!(f, "({p})")
            } else {
                write!(f, "{p}")
            }
        };
        if self.denominator == IntPoly::one() {
            return write!(f, "{}", self.numerator);
        }
        wrap(&self.numerator, f)?;
        f.write_str("/")?;
        wrap(&self.denominator, f)
    }
}

/// Closed form of `P_S(z)` for the given class; `r` is the number of
/// generators and only matters in the main case.
pub fn poincare_series(class: IdealClass, r: usize) -> PoincareSeries {
    let one_plus_z = IntPoly::new(vec![1, 1]);
    let one_minus_z = IntPoly::new(vec![1, -1]);
    let (num, den) = match class {
        IdealClass::MainCase1 | IdealClass::MainCase2 => {
            (one_plus_z, IntPoly::new(vec![1, -1, 1 - r as i64]))
        }
        IdealClass::TypeI => (one_plus_z, IntPoly::one()),
        IdealClass::TypeII => (one_plus_z, one_minus_z),
        IdealClass::TypeIII => (IntPoly::one(), IntPoly::one()),
        IdealClass::TypeIV => (IntPoly::one(), one_minus_z),
        IdealClass::TypeV => (IntPoly::one(), &one_minus_z * &one_minus_z),
    };
    PoincareSeries::new(num, den)
}

/// The main-case series written over the third-order denominator:
/// `(1+z)^2 / (1 - r z^2 + (1-r) z^3)`.
pub fn third_order_form(r: usize) -> PoincareSeries {
    let one_plus_z = IntPoly::new(vec![1, 1]);
    let r = r as i64;
    PoincareSeries::new(&one_plus_z * &one_plus_z, IntPoly::new(vec![1, 0, -r, 1 - r]))
}

/// Power-series division: `c_k = n_k - Σ_{j>=1} d_j c_{k-j}`.
pub fn series_expand(p: &PoincareSeries, n: usize) -> Vec<i128> {
    let mut out: Vec<i128> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = p.numerator.coeff(k) as i128;
        for j in 1..=k.min(p.denominator.degree()) {
            c -= p.denominator.coeff(j) as i128 * out[k - j];
        }
        out.push(c);
    }
    out
}

/// `β_0, ..., β_n` for the given class.
pub fn total_betti(class: IdealClass, r: usize, n: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let b = match class {
            IdealClass::MainCase1 | IdealClass::MainCase2 => match i {
                0 => 1,
                1 => 2,
                _ => out[i - 1] + (r as u64 - 1) * out[i - 2],
            },
            IdealClass::TypeI => u64::from(i <= 1),
            IdealClass::TypeII => {
                if i == 0 {
                    1
                } else {
                    2
                }
            }
            IdealClass::TypeIII => u64::from(i == 0),
            IdealClass::TypeIV => 1,
            IdealClass::TypeV => i as u64 + 1,
        };
        out.push(b);
    }
    out
}

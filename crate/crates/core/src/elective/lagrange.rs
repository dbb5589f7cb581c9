//! Univariate Lagrange interpolation over exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePoly(Vec<BigRational>);

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> UnivariatePoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> UnivariatePoly {
        UnivariatePoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn mul_linear(&self, root: &BigRational) -> UnivariatePoly {
        // (sum c_k x^k) * (x - root)
        let mut out = vec![BigRational::zero(); self.0.len() + 1];
        for (k, c) in self.0.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * root;
        }
        UnivariatePoly::new(out)
    }

    fn scale(&self, s: &BigRational) -> UnivariatePoly {
        UnivariatePoly::new(self.0.iter().map(|c| c * s).collect())
    }

    fn add(&self, other: &UnivariatePoly) -> UnivariatePoly {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        UnivariatePoly::new(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) + other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The basis polynomial that is 1 at `points[index]` and 0 at every other
/// point, of degree `points.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeBasis {
    points: Vec<BigRational>,
    index: usize,
    poly: UnivariatePoly,
}

impl LagrangeBasis {
    pub fn points(&self) -> &[BigRational] {
        &self.points
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn polynomial(&self) -> &UnivariatePoly {
        &self.poly
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.poly.eval(x)
    }
}

fn check_points(points: &[BigRational]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoint(p.to_string()));
        }
    }
    Ok(())
}

pub fn lagrange_basis(points: &[BigRational], index: usize) -> Result<LagrangeBasis> {
    check_points(points)?;
    if index >= points.len() {
        return Err(Error::IndexOutOfRange {
            index: index.to_string(),
            bound: points.len().to_string(),
        });
    }
    let pivot = &points[index];
    let mut numerator = UnivariatePoly::new(vec![BigRational::one()]);
    let mut denominator = BigRational::one();
    for (j, p) in points.iter().enumerate() {
        if j != index {
            numerator = numerator.mul_linear(p);
            denominator *= pivot - p;
        }
    }
    Ok(LagrangeBasis {
        points: points.to_vec(),
        index,
        poly: numerator.scale(&denominator.recip()),
    })
}

/// `sum_i values[i] * basis_i(x)`: the unique polynomial of degree below
/// `points.len()` through the given values.
pub fn interpolate(points: &[BigRational], values: &[BigRational]) -> Result<UnivariatePoly> {
    if points.len() != values.len() {
        return Err(Error::ArityMismatch {
            expected: points.len(),
            found: values.len(),
        });
    }
    let mut acc = UnivariatePoly::new(Vec::new());
    for (i, v) in values.iter().enumerate() {
        acc = acc.add(&lagrange_basis(points, i)?.poly.scale(v));
    }
    Ok(acc)
}

/// Convenience for integer grids.
pub fn integer_points(points: &[i64]) -> Vec<BigRational> {
    points
        .iter()
        .map(|&p| BigRational::from_integer(BigInt::from(p)))
        .collect()
}

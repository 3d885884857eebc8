//! Univariate polynomials with exact rational coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Highest degree [`interpolate_exact`] will fit.
pub const MAX_INTERPOLATION_DEGREE: usize = 5;

/// Polynomial in one variable, coefficients in ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(from = "Vec<Fraction>", into = "Vec<Fraction>"))]
pub struct RationalPolynomial {
    coefficients: Vec<Fraction>,
}

impl From<Vec<Fraction>> for RationalPolynomial {
    fn from(coefficients: Vec<Fraction>) -> Self {
        RationalPolynomial::new(coefficients)
    }
}

impl From<RationalPolynomial> for Vec<Fraction> {
    fn from(p: RationalPolynomial) -> Self {
        p.coefficients
    }
}

impl RationalPolynomial {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coefficients: Vec<Fraction>) -> Self {
        while coefficients.last().is_some_and(Fraction::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    /// Build from ascending integer coefficients.
    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Fraction::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RationalPolynomial { coefficients: Vec::new() }
    }

    /// Ascending coefficients.
    pub fn coefficients(&self) -> &[Fraction] {
        &self.coefficients
    }

    /// Coefficient of `r^degree` (zero past the end).
    pub fn coefficient(&self, degree: usize) -> Fraction {
        self.coefficients.get(degree).copied().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: Fraction) -> Fraction {
        self.coefficients.iter().rev().fold(Fraction::zero(), |acc, &c| acc * x + c)
    }

    /// Evaluation at an integer.
    pub fn evaluate_at(&self, x: i64) -> Fraction {
        self.evaluate(Fraction::from(x))
    }

    /// True when every value on `xs` is an integer.
    pub fn is_integer_valued_on(&self, xs: impl IntoIterator<Item = i64>) -> bool {
        xs.into_iter().all(|x| self.evaluate_at(x).is_integer())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Fraction, Fraction) -> Fraction) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|d| f(self.coefficient(d), other.coefficient(d))).collect())
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, factor: Fraction) -> Self {
        Self::new(self.coefficients.iter().map(|&c| c * factor).collect())
    }

    /// Product with another polynomial.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Fraction::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Plain-text rendering in descending degree, e.g. `2/15 r^5 - 20/3 r^4 + 64176`.
    pub fn to_plain(&self, var: &str) -> String {
        self.render(var, |out, c, var, degree| {
            if c != Fraction::one() || degree == 0 {
                write!(out, "{c}")?;
                if degree > 0 {
                    out.push(' ');
                }
            }
            match degree {
                0 => Ok(()),
                1 => write!(out, "{var}"),
                d => write!(out, "{var}^{d}"),
            }
        })
    }

    /// LaTeX rendering with `\frac`, e.g. `\frac{2}{15}r^{5} - 8r^{4} + 7202`.
    pub fn to_latex(&self, var: &str) -> String {
        self.render(var, |out, c, var, degree| {
            if c != Fraction::one() || degree == 0 {
                if c.is_integer() {
                    write!(out, "{}", c.numer())?;
                } else {
                    write!(out, "\\frac{{{}}}{{{}}}", c.numer(), c.denom())?;
                }
            }
            match degree {
                0 => Ok(()),
                1 => write!(out, "{var}"),
                d => write!(out, "{var}^{{{d}}}"),
            }
        })
    }

    fn render(&self, var: &str, term: impl Fn(&mut String, Fraction, &str, usize) -> fmt::Result) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (degree, &c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            // writing into a String cannot fail
            term(&mut out, c.abs(), var, degree).unwrap();
        }
        out
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain("r"))
    }
}

/// Least-degree polynomial through `points`, of degree at most
/// [`MAX_INTERPOLATION_DEGREE`].
///
/// The interpolant is fitted on the first `MAX_INTERPOLATION_DEGREE + 1`
/// points; every further point must lie on it.
pub fn interpolate_exact(points: &[(i64, i64)]) -> Result<RationalPolynomial> {
    interpolate_with_max_degree(points, MAX_INTERPOLATION_DEGREE)
}

/// [`interpolate_exact`] with an explicit degree bound.
pub fn interpolate_with_max_degree(points: &[(i64, i64)], max_degree: usize) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let mut seen: Vec<i64> = points.iter().map(|p| p.0).collect();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0]));
    }

    let nodes = &points[..points.len().min(max_degree + 1)];
    let xs: Vec<Fraction> = nodes.iter().map(|p| Fraction::from(p.0)).collect();

    // Newton divided differences, in place.
    let mut dd: Vec<Fraction> = nodes.iter().map(|p| Fraction::from(p.1)).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }

    // Expand c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ... into monomials.
    let mut result = RationalPolynomial::zero();
    let mut basis = RationalPolynomial::new(vec![Fraction::one()]);
    for (i, &c) in dd.iter().enumerate() {
        result = result.add(&basis.scale(c));
        basis = basis.mul(&RationalPolynomial::new(vec![-xs[i], Fraction::one()]));
    }

    for &(x, y) in points {
        let value = result.evaluate_at(x);
        if value != Fraction::from(y) {
            return Err(Error::InconsistentSamples { x, expected: alloc::format!("{value}"), found: y });
        }
    }
    Ok(result)
}

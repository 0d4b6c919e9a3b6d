//! Polynomial values shared by every theorem.
//!
//! All coefficient sequences are stored in ascending order: `coeffs[j]` is
//! the coefficient of `z^j`, so `coeffs[0]` is the constant term and
//! `coeffs[n]` the leading one.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance below which a positive coefficient of a multiplier
/// product is treated as zero by [`nonleading_sign_report`].
pub const SIGN_TOLERANCE: f64 = 1e-12;

/// Real polynomial with strictly positive coefficients (ascending order).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Validates `coeffs` (ascending, `a_0` first).
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::TooShort {
                required: 2,
                actual: coeffs.len(),
            });
        }
        if let Some((index, &value)) = coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !(c.is_finite() && **c > 0.0))
        {
            return Err(Error::NonPositiveCoefficient { index, value });
        }
        Ok(Self { coeffs })
    }

    /// Builds from the display order `a_n, ..., a_0`.
    pub fn from_descending(mut coeffs: Vec<f64>) -> Result<Self> {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `a_j`.
    #[inline]
    pub fn a(&self, j: usize) -> f64 {
        self.coeffs[j]
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    /// `a_{n-i}`; `top(0)` is the leading coefficient.
    #[inline]
    pub fn top(&self, i: usize) -> f64 {
        self.coeffs[self.degree() - i]
    }

    /// Coefficients reversed; its zeros are the reciprocals of ours.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { coeffs }
    }

    /// Errors unless the degree is at least `required`.
    pub fn require_degree(&self, required: usize) -> Result<()> {
        if self.degree() < required {
            Err(Error::DegreeTooLow {
                required,
                actual: self.degree(),
            })
        } else {
            Ok(())
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        horner(&self.coeffs, t)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Iterator over `a_j / a_{j+step}` for `j = 0..=n-step`.
    pub fn ratios(&self, step: usize) -> impl Iterator<Item = f64> + '_ {
        self.coeffs
            .iter()
            .zip(self.coeffs.iter().skip(step))
            .map(|(lo, hi)| lo / hi)
    }
}

impl TryFrom<Vec<f64>> for Polynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<f64>) -> Result<Self> {
        Self::new(coeffs)
    }
}

impl From<Polynomial> for Vec<f64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

/// Validated constructor; see [`Polynomial::new`].
pub fn make_polynomial(coeffs: &[f64]) -> Result<Polynomial> {
    Polynomial::new(coeffs.to_vec())
}

/// Real polynomial of any sign pattern (ascending), e.g. a multiplier product.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedPolynomial {
    coeffs: Vec<f64>,
}

impl SignedPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroLeading);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: f64) -> f64 {
        horner(&self.coeffs, t)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Sparsity of a multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    Full,
    /// `z^4 - alpha z^2 - beta`.
    EvenOnly,
}

/// Monic multiplier `z^d - gamma_{d-1} z^{d-1} - ... - gamma_0`.
///
/// `gammas[j]` is the (sign-flipped) coefficient of `z^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiplierSpec {
    gammas: Vec<f64>,
    pattern: Pattern,
}

impl MultiplierSpec {
    pub fn new(gammas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() || gammas.len() > 4 {
            return Err(Error::InvalidMultiplier("degree must be in 1..=4"));
        }
        if gammas.iter().any(|g| !g.is_finite()) {
            return Err(Error::InvalidMultiplier("non-finite coefficient"));
        }
        Ok(Self {
            gammas,
            pattern: Pattern::Full,
        })
    }

    /// `z - gamma`.
    pub fn linear(gamma: f64) -> Result<Self> {
        Self::new(vec![gamma])
    }

    /// `z^4 - alpha z^2 - beta`.
    pub fn even_quartic(alpha: f64, beta: f64) -> Result<Self> {
        let mut m = Self::new(vec![beta, 0.0, alpha, 0.0])?;
        m.pattern = Pattern::EvenOnly;
        Ok(m)
    }

    pub fn degree(&self) -> usize {
        self.gammas.len()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    /// Ascending coefficients of the multiplier itself.
    pub fn coeffs(&self) -> Vec<f64> {
        self.gammas
            .iter()
            .map(|g| -g)
            .chain(std::iter::once(1.0))
            .collect()
    }

    pub fn eval(&self, t: f64) -> f64 {
        horner(&self.coeffs(), t)
    }
}

/// Exact convolution of the multiplier with `p`; degree `n + d`.
pub fn multiply(p: &Polynomial, m: &MultiplierSpec) -> SignedPolynomial {
    let mc = m.coeffs();
    let mut out = vec![0.0; p.coeffs.len() + mc.len() - 1];
    for (i, &a) in p.coeffs.iter().enumerate() {
        for (j, &b) in mc.iter().enumerate() {
            if b != 0.0 {
                out[i + j] += a * b;
            }
        }
    }
    SignedPolynomial { coeffs: out }
}

/// Outcome of the sign check on a multiplier product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub ok: bool,
    /// Ascending indices of coefficients that are positive beyond tolerance.
    pub offending: Vec<usize>,
}

/// Checks that every coefficient below the top `protected_top_count` powers
/// of `q` is nonpositive, treating values in `(0, 1e-12 * max|q_j|]` as zero.
pub fn nonleading_sign_report(q: &SignedPolynomial, protected_top_count: usize) -> SignReport {
    let protected_top_count = protected_top_count.max(1);
    let tol = SIGN_TOLERANCE * q.max_abs();
    let checked = q.coeffs.len().saturating_sub(protected_top_count);
    let offending: Vec<usize> = q.coeffs[..checked]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > tol)
        .map(|(j, _)| j)
        .collect();
    SignReport {
        ok: offending.is_empty(),
        offending,
    }
}

pub(crate) fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

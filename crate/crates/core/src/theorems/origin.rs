//! Annulus bounds: disks centered at the origin.

use super::{debug_check_signs, max_of, min_of, BoundInterval, Method};
use crate::error::Result;
use crate::poly::{MultiplierSpec, Polynomial};
use crate::radius::{cauchy_radius, unique_positive_root};

/// Parameter choice for the cubic-multiplier annulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    /// `gamma_2 = max(a_{n-1}/a_n, a_{n-2}/a_{n-1})`, `gamma_1 = 0`.
    First,
    /// `gamma_2 = a_{n-1}/a_n`, `gamma_1` zeroes the `z^{n+1}` coefficient.
    Second,
}

/// Upper bound from an inclusion multiplier, lower bound from the same
/// multiplier built for the reverse polynomial.
fn interval(
    p: &Polynomial,
    theorem: Method,
    multiplier: impl Fn(&Polynomial) -> Result<MultiplierSpec>,
) -> Result<BoundInterval> {
    let upper_m = multiplier(p)?;
    debug_check_signs(p, &upper_m, 1);
    let rev = p.reverse();
    let lower_m = multiplier(&rev)?;
    debug_check_signs(&rev, &lower_m, 1);
    Ok(BoundInterval {
        lower: 1.0 / unique_positive_root(&lower_m)?,
        upper: unique_positive_root(&upper_m)?,
        theorem,
    })
}

/// `[1/s_1(p#), s_1(p)]` from the first-kind Cauchy radii.
pub fn cauchy_bounds(p: &Polynomial) -> Result<BoundInterval> {
    Ok(BoundInterval {
        lower: 1.0 / cauchy_radius(p.reverse().coeffs(), 1)?.value,
        upper: cauchy_radius(p.coeffs(), 1)?.value,
        theorem: Method::Cauchy,
    })
}

/// `z - max_j a_j/a_{j+1}`.
pub fn ek_multiplier(p: &Polynomial) -> MultiplierSpec {
    MultiplierSpec::linear(max_of(p.ratios(1))).expect("finite ratio")
}

/// `min_j a_j/a_{j+1} <= |z| <= max_j a_j/a_{j+1}`.
pub fn ek_bounds(p: &Polynomial) -> BoundInterval {
    let upper = max_of(p.ratios(1));
    let lower = min_of(p.ratios(1));
    debug_check_signs(p, &ek_multiplier(p), 1);
    BoundInterval {
        lower,
        upper,
        theorem: Method::EnestromKakeya,
    }
}

/// `z^2 - gamma_1 z - gamma_0` with `gamma_1 = a_{n-1}/a_n` and
/// `gamma_0 = max(0, max_{j <= n-2} (a_j - gamma_1 a_{j+1}) / a_{j+2})`.
pub fn thm32_multiplier(p: &Polynomial) -> Result<MultiplierSpec> {
    p.require_degree(2)?;
    let n = p.degree();
    let a = p.coeffs();
    let g1 = p.top(1) / p.top(0);
    let g0 = max_of((0..=n - 2).map(|j| (a[j] - g1 * a[j + 1]) / a[j + 2])).max(0.0);
    MultiplierSpec::new(vec![g0, g1])
}

pub fn thm32_bounds(p: &Polynomial) -> Result<BoundInterval> {
    interval(p, Method::Thm32, thm32_multiplier)
}

/// Cubic multiplier `z^3 - gamma_2 z^2 - gamma_1 z - gamma_0`.
pub fn thm33_multiplier(p: &Polynomial, choice: Choice) -> Result<MultiplierSpec> {
    p.require_degree(3)?;
    let n = p.degree();
    let a = p.coeffs();
    match choice {
        Choice::First => {
            let g2 = (p.top(1) / p.top(0)).max(p.top(2) / p.top(1));
            let g0 = max_of((0..=n - 3).map(|j| (a[j] - g2 * a[j + 1]) / a[j + 3])).max(0.0);
            MultiplierSpec::new(vec![g0, 0.0, g2])
        }
        Choice::Second => Ok(second_choice_cubic(p, p.top(1) / p.top(0))),
    }
}

/// Cubic whose `gamma_1` cancels the `z^{n+1}` coefficient of the product for
/// a given `gamma_2`; `gamma_0` is the smallest value that keeps every lower
/// coefficient nonpositive.
pub(super) fn second_choice_cubic(p: &Polynomial, g2: f64) -> MultiplierSpec {
    let n = p.degree();
    let a = p.coeffs();
    let g1 = (p.top(2) - g2 * p.top(1)) / p.top(0);
    let body = max_of((0..=n - 3).map(|j| (a[j] - g2 * a[j + 1] - g1 * a[j + 2]) / a[j + 3]));
    let g0 = body
        .max(g1 * a[0] / -a[1])
        .max((g2 * a[0] + g1 * a[1]) / -a[2])
        .max(0.0);
    MultiplierSpec::new(vec![g0, g1, g2]).expect("finite cubic coefficients")
}

pub fn thm33_bounds(p: &Polynomial, choice: Choice) -> Result<BoundInterval> {
    let method = match choice {
        Choice::First => Method::Thm33First,
        Choice::Second => Method::Thm33Second,
    };
    interval(p, method, |q| thm33_multiplier(q, choice))
}

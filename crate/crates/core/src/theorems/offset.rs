//! Single inclusion disks centered off the origin, with an exclusion disk
//! obtained from the reverse polynomial.

use super::origin::second_choice_cubic;
use super::{check_eps, debug_check_signs, max_of, Method};
use crate::error::Result;
use crate::geometry::{disk_d, Parameters, RegionReport};
use crate::poly::{MultiplierSpec, Polynomial};
use crate::radius::unique_positive_root;

/// Builds `D(shift * a_{n-1}/a_n, mu_1)` from the multiplier of `p` and the
/// exclusion disk from the same construction on the reverse polynomial.
fn offset_report(
    theorem: Method,
    p: &Polynomial,
    eps: Option<f64>,
    multiplier: impl Fn(&Polynomial) -> Result<MultiplierSpec>,
) -> Result<RegionReport> {
    let shift = eps.unwrap_or(1.0);
    let m = multiplier(p)?;
    debug_check_signs(p, &m, 2);
    let mu1 = unique_positive_root(&m)?;
    let inclusion = disk_d(shift * p.top(1) / p.top(0), mu1);

    let rev = p.reverse();
    let mr = multiplier(&rev)?;
    debug_check_signs(&rev, &mr, 2);
    let rev_root = unique_positive_root(&mr)?;
    let exclusion = disk_d(shift * rev.top(1) / rev.top(0), rev_root).reciprocal_exclusion()?;

    let params = Parameters {
        eps,
        multiplier: Some(m),
        reverse_multiplier: Some(mr),
        ..Parameters::default()
    }
    .with("mu1", mu1)
    .with("mu2", 1.0 / rev_root);
    let mut report = RegionReport::new(theorem, params, vec![inclusion]);
    report.exclusion.push(exclusion);
    Ok(report)
}

/// `z^2 - max_j a_j/a_{j+2}`.
pub fn thm41_multiplier(p: &Polynomial) -> Result<MultiplierSpec> {
    p.require_degree(2)?;
    MultiplierSpec::new(vec![max_of(p.ratios(2)), 0.0])
}

pub fn thm41_disks(p: &Polynomial) -> Result<RegionReport> {
    offset_report(Method::Thm41, p, None, thm41_multiplier)
}

/// Cubic with `gamma_2 = (1 - eps) a_{n-1}/a_n`, so the `z^{n+2}`
/// coefficient of the product is `eps a_{n-1}` and `z^{n+1}` vanishes.
pub fn thm42_multiplier(p: &Polynomial, eps: f64) -> Result<MultiplierSpec> {
    check_eps(eps)?;
    p.require_degree(3)?;
    Ok(second_choice_cubic(p, (1.0 - eps) * p.top(1) / p.top(0)))
}

pub fn thm42_disks(p: &Polynomial, eps: f64) -> Result<RegionReport> {
    check_eps(eps)?;
    offset_report(Method::Thm42, p, Some(eps), |q| thm42_multiplier(q, eps))
}

/// `z^3 - (a_{n-2}/a_n) z - gamma_0`, the `eps = 1` member of
/// [`thm42_multiplier`].
pub fn cor41_multiplier(p: &Polynomial) -> Result<MultiplierSpec> {
    p.require_degree(3)?;
    let n = p.degree();
    let a = p.coeffs();
    let g1 = p.top(2) / p.top(0);
    let g0 = max_of((0..=n - 3).map(|j| (a[j] - g1 * a[j + 2]) / a[j + 3])).max(0.0);
    MultiplierSpec::new(vec![g0, g1, 0.0])
}

pub fn cor41_disks(p: &Polynomial) -> Result<RegionReport> {
    offset_report(Method::Cor41, p, None, cor41_multiplier)
}

/// Even quartic `z^4 - alpha z^2 - beta` with
/// `alpha = max(a_{n-2}/a_n, a_{n-3}/a_{n-1})`.
pub fn thm43_multiplier(p: &Polynomial) -> Result<MultiplierSpec> {
    p.require_degree(4)?;
    let n = p.degree();
    let a = p.coeffs();
    let alpha = (p.top(2) / p.top(0)).max(p.top(3) / p.top(1));
    let beta = max_of((0..=n - 4).map(|j| (a[j] - alpha * a[j + 2]) / a[j + 4])).max(0.0);
    MultiplierSpec::even_quartic(alpha, beta)
}

pub fn thm43_disks(p: &Polynomial) -> Result<RegionReport> {
    offset_report(Method::Thm43, p, None, thm43_multiplier)
}

//! Unions of two or three equal-radius disks with zero counts.

use num_complex::Complex64;

use super::{
    check_eps, cor41_multiplier, debug_check_signs, max_of, thm41_multiplier, thm42_multiplier,
    Method,
};
use crate::error::Result;
use crate::geometry::{Disk, Parameters, RegionReport, ZeroCount};
use crate::poly::{MultiplierSpec, Polynomial};
use crate::radius::{cauchy_equation_at, unique_positive_root};

fn count(disks: &[usize], count: usize) -> ZeroCount {
    ZeroCount {
        disks: disks.to_vec(),
        count,
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Marks every disk but the first as redundant when the origin disk already
/// reaches the first-kind Cauchy radius.
fn flag_redundant(p: &Polynomial, report: &mut RegionReport) {
    if cauchy_equation_at(p.coeffs(), 1, report.inclusion[0].radius) >= 0.0 {
        report.redundant = (1..report.inclusion.len()).collect();
    }
}

fn params(eps: Option<f64>, m: MultiplierSpec, mu: f64, r: f64) -> Parameters {
    Parameters {
        eps,
        multiplier: Some(m),
        ..Parameters::default()
    }
    .with("mu", mu)
    .with("R", r)
}

/// Disks about `0` and `-shift`, with `n - 1` zeros in the origin disk when
/// they are disjoint.
fn two_disk_report(
    p: &Polynomial,
    theorem: Method,
    par: Parameters,
    shift: f64,
    radius: f64,
) -> RegionReport {
    let disks = vec![Disk::origin(radius), Disk::closed(real(-shift), radius)];
    let mut report = RegionReport::new(theorem, par, disks);
    if report.disjoint[0][1] {
        report.counts = Some(vec![count(&[0], p.degree() - 1), count(&[1], 1)]);
    }
    flag_redundant(p, &mut report);
    report
}

/// `|z| <= R^{1/2}` or `|z + a_{n-1}/a_n| <= R^{1/2}` with `R = mu^2 + (a_{n-1}/a_n) mu`.
pub fn thm51_region(p: &Polynomial) -> Result<RegionReport> {
    let m = thm41_multiplier(p)?;
    debug_check_signs(p, &m, 2);
    let mu = unique_positive_root(&m)?;
    let a = p.top(1) / p.top(0);
    let r = mu * mu + a * mu;
    Ok(two_disk_report(
        p,
        Method::Thm51,
        params(None, m, mu, r),
        a,
        r.sqrt(),
    ))
}

fn cubic_two_disk(
    p: &Polynomial,
    theorem: Method,
    eps: Option<f64>,
    m: MultiplierSpec,
) -> Result<RegionReport> {
    debug_check_signs(p, &m, 2);
    let mu = unique_positive_root(&m)?;
    let shift = eps.unwrap_or(1.0) * p.top(1) / p.top(0);
    let r = mu * mu * mu + shift * mu * mu;
    Ok(two_disk_report(
        p,
        theorem,
        params(eps, m, mu, r),
        shift,
        r.cbrt(),
    ))
}

/// Disks of radius `R^{1/3}` about `0` and `-eps a_{n-1}/a_n` with
/// `R = mu^3 + eps (a_{n-1}/a_n) mu^2`.
pub fn thm52_region(p: &Polynomial, eps: f64) -> Result<RegionReport> {
    let m = thm42_multiplier(p, eps)?;
    cubic_two_disk(p, Method::Thm52, Some(eps), m)
}

pub fn cor51_region(p: &Polynomial) -> Result<RegionReport> {
    let m = cor41_multiplier(p)?;
    cubic_two_disk(p, Method::Cor51, None, m)
}

/// Zeros of `z^2 + a z + b` for `a > 0`, `b >= 0`: `[c1, c2]` with `c1` the
/// one closer to the origin. Complex pairs put the positive imaginary part
/// first.
pub fn quadratic_centers(a: f64, b: f64) -> [Complex64; 2] {
    let disc = a * a - 4.0 * b;
    if disc >= 0.0 {
        let s = a + disc.sqrt();
        [real(-2.0 * b / s), real(-0.5 * s)]
    } else {
        let im = 0.5 * (-disc).sqrt();
        [Complex64::new(-0.5 * a, im), Complex64::new(-0.5 * a, -im)]
    }
}

/// `z^3 - max_j a_j/a_{j+3}`.
pub fn thm53_multiplier(p: &Polynomial) -> Result<MultiplierSpec> {
    p.require_degree(3)?;
    MultiplierSpec::new(vec![max_of(p.ratios(3)), 0.0, 0.0])
}

/// Disks of radius `R^{1/2}` about the zeros of `z^2 + (a_{n-1}/a_n) z + a_{n-2}/a_n`
/// with `R = mu^2 + (a_{n-1}/a_n) mu + a_{n-2}/a_n`.
pub fn thm53_region(p: &Polynomial) -> Result<RegionReport> {
    let m = thm53_multiplier(p)?;
    debug_check_signs(p, &m, 3);
    let mu = unique_positive_root(&m)?;
    let a = p.top(1) / p.top(0);
    let b = p.top(2) / p.top(0);
    let r = mu * mu + a * mu + b;
    let [c1, c2] = quadratic_centers(a, b);
    let radius = r.sqrt();
    let disks = vec![Disk::closed(c1, radius), Disk::closed(c2, radius)];
    let mut report = RegionReport::new(Method::Thm53, params(None, m, mu, r), disks);
    if report.disjoint[0][1] {
        debug_assert!(c1.im == 0.0 && c2.re < c1.re && c1.re < 0.0);
        debug_assert!(report.inclusion[0].contains(real(0.0)));
        if c1.im == 0.0 {
            report.counts = Some(vec![count(&[0], p.degree() - 1), count(&[1], 1)]);
        }
    }
    Ok(report)
}

/// `z^3 - (1 - eps)(a_{n-2}/a_n) z - gamma_0`.
pub fn thm61_multiplier(p: &Polynomial, eps: f64) -> Result<MultiplierSpec> {
    check_eps(eps)?;
    p.require_degree(3)?;
    let n = p.degree();
    let a = p.coeffs();
    let g1 = (1.0 - eps) * p.top(2) / p.top(0);
    let g0 = max_of((0..=n - 3).map(|j| (a[j] - g1 * a[j + 2]) / a[j + 3])).max(0.0);
    MultiplierSpec::new(vec![g0, g1, 0.0])
}

fn three_disk(p: &Polynomial, theorem: Method, eps: f64) -> Result<RegionReport> {
    let m = thm61_multiplier(p, eps)?;
    debug_check_signs(p, &m, 3);
    let mu = unique_positive_root(&m)?;
    let a = p.top(1) / p.top(0);
    let b = eps * p.top(2) / p.top(0);
    let r = mu * mu * mu + a * mu * mu + b * mu;
    let [c1, c2] = quadratic_centers(a, b);
    let radius = r.cbrt();
    let disks = vec![
        Disk::origin(radius),
        Disk::closed(c1, radius),
        Disk::closed(c2, radius),
    ];
    let par = params((theorem == Method::Thm61).then_some(eps), m, mu, r);
    let mut report = RegionReport::new(theorem, par, disks);
    report.counts = three_disk_counts(&report.disjoint, p.degree(), c1.im == 0.0);
    flag_redundant(p, &mut report);
    Ok(report)
}

/// Counts for disks `[origin, c1, c2]` under the two admissible separation
/// patterns; `None` when neither applies.
fn three_disk_counts(d: &[Vec<bool>], n: usize, real_centers: bool) -> Option<Vec<ZeroCount>> {
    if d[0][1] && d[0][2] {
        let mut out = vec![count(&[0], n - 2)];
        if d[1][2] {
            out.extend([count(&[1], 1), count(&[2], 1)]);
        } else {
            out.push(count(&[1, 2], 2));
        }
        return Some(out);
    }
    if real_centers && d[1][2] && d[0][1] != d[0][2] {
        let (isolated, other) = if d[0][1] { (1, 2) } else { (2, 1) };
        return Some(vec![count(&[isolated], 1), count(&[0, other], n - 1)]);
    }
    None
}

/// Disks of radius `R^{1/3}` about `0` and the zeros of
/// `z^2 + (a_{n-1}/a_n) z + eps a_{n-2}/a_n`, with
/// `R = mu^3 + (a_{n-1}/a_n) mu^2 + eps (a_{n-2}/a_n) mu`.
pub fn thm61_region(p: &Polynomial, eps: f64) -> Result<RegionReport> {
    check_eps(eps)?;
    three_disk(p, Method::Thm61, eps)
}

pub fn cor61_region(p: &Polynomial) -> Result<RegionReport> {
    three_disk(p, Method::Cor61, 1.0)
}

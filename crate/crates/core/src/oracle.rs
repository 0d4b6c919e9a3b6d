//! Independent root finder used to check regions.
//!
//! Aberth-Ehrlich simultaneous iteration from a fixed circle, followed by a
//! Newton polish. Nothing in the bound computations calls into this module.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Disk, RegionReport};
use crate::poly::Polynomial;
use crate::radius::cauchy_radius_complex;
use crate::theorems::BoundInterval;

pub const MAX_ITER: usize = 500;
/// Phase of the first initial point; retries use the others.
pub const PHASES: [f64; 3] = [0.4, 1.3, 2.2];
/// Largest accepted residual `|p(z)| / sum |a_j| |z|^j`.
pub const MAX_RESIDUAL: f64 = 1e-8;
/// Additive tolerance for membership tests against oracle roots.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-9;

const INIT_SCALE: f64 = 0.9;
const STEP_RTOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub max_residual: f64,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Moduli sorted ascending.
    pub fn moduli(&self) -> Vec<f64> {
        let mut m: Vec<f64> = self.roots.iter().map(|z| z.norm()).collect();
        m.sort_by(f64::total_cmp);
        m
    }
}

/// `p(z)` and `p'(z)` by Horner.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Backward-error style residual of `z` as a root.
fn residual(coeffs: &[Complex64], moduli: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = moduli.iter().rev().fold(0.0, |acc, &m| acc * r + m);
    let (p, _) = eval_with_derivative(coeffs, z);
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// All zeros of a real polynomial, retrying with other initial phases on
/// non-convergence.
pub fn all_roots(coeffs: &[f64]) -> Result<RootSet> {
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    all_roots_complex(&c)
}

pub fn roots_of(p: &Polynomial) -> Result<RootSet> {
    all_roots(p.coeffs())
}

pub fn all_roots_complex(coeffs: &[Complex64]) -> Result<RootSet> {
    let mut last = Error::NonConvergence("Aberth iteration");
    for phase in PHASES {
        match all_roots_with_phase(coeffs, phase) {
            Ok(rs) => return Ok(rs),
            Err(e @ Error::NonConvergence(_)) => {
                log::debug!("root oracle retry after phase {phase}");
                last = e;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// One Aberth run with initial points `0.9 s_1 exp(i (2 pi k / n + phase))`.
pub fn all_roots_with_phase(coeffs: &[Complex64], phase: f64) -> Result<RootSet> {
    if coeffs.len() < 2 {
        return Err(Error::TooShort {
            required: 2,
            actual: coeffs.len(),
        });
    }
    let n = coeffs.len() - 1;
    if coeffs[n] == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroLeading);
    }
    // zeros at the origin are exact
    let zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &coeffs[zeros..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let m = reduced.len() - 1;
    if m == 1 {
        roots.push(-reduced[0] / reduced[1]);
    } else if m > 1 {
        roots.extend(aberth(reduced, phase)?);
    }
    let moduli: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let max_residual = roots
        .iter()
        .map(|&z| residual(coeffs, &moduli, z))
        .fold(0.0, f64::max);
    if max_residual.is_nan() || max_residual > MAX_RESIDUAL {
        return Err(Error::NonConvergence("root residual"));
    }
    Ok(RootSet {
        roots,
        max_residual,
    })
}

fn aberth(coeffs: &[Complex64], phase: f64) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let radius = cauchy_radius_complex(coeffs, 1)?.value;
    let moduli: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let start = INIT_SCALE * radius;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(start, TAU * k as f64 / n as f64 + phase))
        .collect();
    let mut frozen = vec![false; n];

    let mut converged = false;
    for _ in 0..MAX_ITER {
        let mut max_step = 0.0_f64;
        for i in 0..n {
            if frozen[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if residual(coeffs, &moduli, z[i]) <= 4.0 * f64::EPSILON {
                frozen[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if !step.is_finite() {
                return Err(Error::NonConvergence("Aberth iteration"));
            }
            z[i] -= step;
            max_step = max_step.max(step.norm());
            if step.norm() <= STEP_RTOL * z[i].norm() {
                frozen[i] = true;
            }
        }
        if max_step < STEP_RTOL * radius || frozen.iter().all(|&f| f) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence("Aberth iteration"));
    }
    for zi in z.iter_mut() {
        *zi = polish(coeffs, &moduli, *zi);
    }
    Ok(z)
}

/// Newton steps that are kept only while they lower the residual.
fn polish(coeffs: &[Complex64], moduli: &[f64], mut z: Complex64) -> Complex64 {
    let mut res = residual(coeffs, moduli, z);
    for _ in 0..3 {
        let (p, dp) = eval_with_derivative(coeffs, z);
        let next = z - p / dp;
        if !next.is_finite() {
            break;
        }
        let r = residual(coeffs, moduli, next);
        if r >= res {
            break;
        }
        z = next;
        res = r;
    }
    z
}

/// `(min |z|, max |z|)` over the roots.
pub fn moduli_extremes(rs: &RootSet) -> (f64, f64) {
    assert!(!rs.is_empty(), "empty root set");
    rs.roots
        .iter()
        .fold((f64::INFINITY, 0.0_f64), |(lo, hi), z| {
            let r = z.norm();
            (lo.min(r), hi.max(r))
        })
}

/// Number of roots in `d`, closed or open per the disk, with the additive
/// tolerance [`MEMBERSHIP_TOLERANCE`].
pub fn count_in_disk(rs: &RootSet, d: &Disk) -> usize {
    rs.roots
        .iter()
        .filter(|&&z| d.contains_with(z, MEMBERSHIP_TOLERANCE))
        .count()
}

/// Every way `report` disagrees with the roots: a root outside all
/// inclusion disks, a root inside an exclusion disk, or a wrong count.
pub fn region_violations(report: &RegionReport, rs: &RootSet) -> Vec<String> {
    let mut out = Vec::new();
    for z in &rs.roots {
        if !report
            .inclusion
            .iter()
            .any(|d| d.contains_with(*z, MEMBERSHIP_TOLERANCE))
        {
            out.push(format!(
                "{}: root {z} outside every inclusion disk",
                report.theorem
            ));
        }
        for d in &report.exclusion {
            if d.contains_with(*z, MEMBERSHIP_TOLERANCE) {
                out.push(format!(
                    "{}: root {z} inside exclusion disk {d:?}",
                    report.theorem
                ));
            }
        }
    }
    for group in report.counts.iter().flatten() {
        let found = rs
            .roots
            .iter()
            .filter(|&&z| {
                group
                    .disks
                    .iter()
                    .any(|&i| report.inclusion[i].contains_with(z, MEMBERSHIP_TOLERANCE))
            })
            .count();
        if found != group.count {
            out.push(format!(
                "{}: disks {:?} hold {found} roots, expected {}",
                report.theorem, group.disks, group.count
            ));
        }
    }
    out
}

/// Roots whose modulus falls outside `[lower, upper]`.
pub fn interval_violations(b: &BoundInterval, rs: &RootSet) -> Vec<String> {
    let tol = MEMBERSHIP_TOLERANCE * b.upper.max(1.0);
    rs.roots
        .iter()
        .filter(|z| {
            let r = z.norm();
            r < b.lower - tol || r > b.upper + tol
        })
        .map(|z| {
            format!(
                "{}: |{z}| = {} outside [{}, {}]",
                b.theorem,
                z.norm(),
                b.lower,
                b.upper
            )
        })
        .collect()
}

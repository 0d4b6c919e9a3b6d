//! Positive roots: Cauchy radii of the k-th kind and the positive zero of
//! the low-degree multipliers.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{horner, MultiplierSpec, Pattern};

const BISECT_WIDTH: f64 = 1e-2;
const NEWTON_RTOL: f64 = 1e-13;
const MAX_ITER: usize = 200;
/// Positive real roots closer than this are one root.
const DISTINCT_ROOT_GAP: f64 = 1e-8;

/// Cauchy radius `s_k` of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CauchyRadius {
    pub value: f64,
    pub kind: usize,
    /// Left side of the defining equation evaluated at `value`.
    pub residual: f64,
}

/// The sign-flipped modulus polynomial whose positive root is `s_k`:
/// the top `k` moduli keep their sign, the remaining ones are negated.
pub fn cauchy_equation(coeffs: &[f64], k: usize) -> Vec<f64> {
    let n = coeffs.len() - 1;
    coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| if j + k > n { c.abs() } else { -c.abs() })
        .collect()
}

/// Evaluates the defining equation of `s_k` at `t`; the sign tells on which
/// side of `s_k` the point lies.
pub fn cauchy_equation_at(coeffs: &[f64], k: usize, t: f64) -> f64 {
    horner(&cauchy_equation(coeffs, k), t)
}

/// Unique positive solution of
/// `|a_n| t^n + ... + |a_{n-k+1}| t^{n-k+1} - |a_{n-k}| t^{n-k} - ... - |a_0| = 0`.
///
/// Accepts coefficients of any sign (ascending). The root is bracketed by
/// `[0, 1 + max |a_j / a_n|]`, bisected down to width `1e-2` and finished with
/// a safeguarded Newton iteration.
pub fn cauchy_radius(coeffs: &[f64], k: usize) -> Result<CauchyRadius> {
    let moduli: Vec<f64> = coeffs.iter().map(|c| c.abs()).collect();
    cauchy_radius_of_moduli(&moduli, k)
}

/// Same as [`cauchy_radius`] for complex coefficients.
pub fn cauchy_radius_complex(coeffs: &[Complex64], k: usize) -> Result<CauchyRadius> {
    let moduli: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    cauchy_radius_of_moduli(&moduli, k)
}

fn cauchy_radius_of_moduli(moduli: &[f64], k: usize) -> Result<CauchyRadius> {
    if moduli.len() < 2 {
        return Err(Error::TooShort {
            required: 2,
            actual: moduli.len(),
        });
    }
    let n = moduli.len() - 1;
    if k == 0 || k > n {
        return Err(Error::InvalidKind { k, degree: n });
    }
    let lead = moduli[n];
    if lead == 0.0 {
        return Err(Error::ZeroLeading);
    }
    if moduli[..=n - k].iter().all(|&m| m == 0.0) {
        return Err(Error::DegenerateTail);
    }
    let f: Vec<f64> = moduli
        .iter()
        .enumerate()
        .map(|(j, &m)| if j + k > n { m } else { -m })
        .collect();
    let df: Vec<f64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| j as f64 * c)
        .collect();

    let mut lo = 0.0_f64;
    let mut hi = 1.0 + moduli[..n].iter().fold(0.0_f64, |m, &a| m.max(a / lead));
    // for k > 1 the tail can be tiny relative to the head; shrink hi first
    while hi - lo > BISECT_WIDTH * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if horner(&f, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let mut t = 0.5 * (lo + hi);
    for _ in 0..MAX_ITER {
        let ft = horner(&f, t);
        if ft == 0.0 {
            return Ok(finish(&f, k, t));
        }
        if ft > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let dft = horner(&df, t);
        let newton = t - ft / dft;
        let next = if dft > 0.0 && newton >= lo && newton <= hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - t).abs() <= NEWTON_RTOL * t || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(finish(&f, k, next));
        }
        t = next;
    }
    Err(Error::NonConvergence("Cauchy radius"))
}

fn finish(f: &[f64], k: usize, t: f64) -> CauchyRadius {
    CauchyRadius {
        value: t,
        kind: k,
        residual: horner(f, t),
    }
}

/// Positive zero of a theorem multiplier `z^d - gamma_{d-1} z^{d-1} - ... - gamma_0`.
///
/// Degrees 1 and 2, pure powers `z^d - gamma_0` and the even quartic use
/// closed forms; other cubics and quartics compute all roots and pick the
/// single positive real one.
pub fn unique_positive_root(m: &MultiplierSpec) -> Result<f64> {
    let g = m.gammas();
    if g.iter().all(|&x| x == 0.0) {
        return Err(Error::NoPositiveRoot);
    }
    let d = m.degree();
    if g[1..].iter().all(|&x| x == 0.0) {
        // z^d = gamma_0
        return if g[0] > 0.0 {
            Ok(match d {
                1 => g[0],
                2 => g[0].sqrt(),
                3 => g[0].cbrt(),
                _ => g[0].sqrt().sqrt(),
            })
        } else {
            Err(Error::NoPositiveRoot)
        };
    }
    if d == 3 && g[0] == 0.0 {
        // z (z^2 - gamma_2 z - gamma_1)
        return quadratic_positive_root(g[2], g[1]);
    }
    match (d, m.pattern()) {
        (1, _) => unreachable!("linear multiplier handled as pure power"),
        (2, _) => quadratic_positive_root(g[1], g[0]),
        (4, Pattern::EvenOnly) => {
            // z^4 - alpha z^2 - beta: quadratic in z^2
            let w = quadratic_positive_root(g[2], g[0])?;
            Ok(w.sqrt())
        }
        (3, _) => select_positive(m, &cubic_roots(-g[2], -g[1], -g[0])),
        _ => select_positive(m, &companion_roots(&m.coeffs())),
    }
}

/// Positive root of `z^2 - b z - c`.
fn quadratic_positive_root(b: f64, c: f64) -> Result<f64> {
    if c > 0.0 {
        // product of roots is negative: exactly one positive root
        return Ok(0.5 * (b + (b * b + 4.0 * c).sqrt()));
    }
    if c == 0.0 {
        return if b > 0.0 {
            Ok(b)
        } else {
            Err(Error::NoPositiveRoot)
        };
    }
    let disc = b * b + 4.0 * c;
    if b <= 0.0 || disc < 0.0 {
        return Err(Error::NoPositiveRoot);
    }
    if disc.sqrt() < DISTINCT_ROOT_GAP {
        return Ok(0.5 * b);
    }
    Err(Error::MultiplePositiveRoots(2))
}

fn select_positive(m: &MultiplierSpec, roots: &[Complex64]) -> Result<f64> {
    let scale = 1.0 + m.gammas().iter().fold(0.0_f64, |a, g| a.max(g.abs()));
    let mut positives: Vec<f64> = roots
        .iter()
        .filter(|z| z.im.abs() <= 1e-7 * scale && z.re > 1e-14 * scale)
        .map(|z| z.re)
        .collect();
    positives.sort_by(f64::total_cmp);
    positives.dedup_by(|a, b| (*a - *b).abs() < DISTINCT_ROOT_GAP);
    match positives.len() {
        0 => Err(Error::NoPositiveRoot),
        1 => Ok(polish(&m.coeffs(), positives[0])),
        k => Err(Error::MultiplePositiveRoots(k)),
    }
}

/// A few Newton steps on a simple real root.
fn polish(coeffs: &[f64], mut t: f64) -> f64 {
    let df: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| j as f64 * c)
        .collect();
    for _ in 0..4 {
        let d = horner(&df, t);
        if d == 0.0 {
            break;
        }
        let step = horner(coeffs, t) / d;
        if !step.is_finite() || step.abs() > 1e-6 * t.abs().max(1.0) {
            break;
        }
        t -= step;
        if step.abs() <= f64::EPSILON * t.abs() {
            break;
        }
    }
    t
}

/// All roots of the monic cubic `z^3 + b z^2 + c z + d`.
///
/// Trigonometric form for three real roots, Cardano for one; falls back to
/// the companion matrix when the discriminant is near zero.
pub fn cubic_roots(b: f64, c: f64, d: f64) -> Vec<Complex64> {
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    let scale = 4.0 * p.abs().powi(3) + 27.0 * q * q;
    if scale == 0.0 {
        // triple root
        return vec![Complex64::new(-shift, 0.0); 3];
    }
    if disc.abs() < 1e-14 * scale {
        return companion_roots(&[d, c, b, 1.0]);
    }
    if disc > 0.0 {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| {
                let t = r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
                Complex64::new(t - shift, 0.0)
            })
            .collect()
    } else {
        let sq = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        // pick the sign that avoids cancellation
        let u = (-q / 2.0 - q.signum() * sq).cbrt();
        let v = if u == 0.0 { 0.0 } else { -p / (3.0 * u) };
        let t1 = u + v;
        let re = -0.5 * t1;
        let im = 0.5 * 3f64.sqrt() * (u - v);
        vec![
            Complex64::new(t1 - shift, 0.0),
            Complex64::new(re - shift, im),
            Complex64::new(re - shift, -im),
        ]
    }
}

/// Eigenvalues of the companion matrix of ascending `coeffs`.
pub fn companion_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -coeffs[i] / lead;
    }
    c.complex_eigenvalues()
        .iter()
        .map(|z| Complex64::new(z.re, z.im))
        .collect()
}

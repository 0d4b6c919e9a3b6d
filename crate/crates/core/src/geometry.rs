//! Disks, annuli and region reports.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MultiplierSpec;
use crate::theorems::Method;

/// Relative tolerance used by membership and disjointness predicates.
pub const GEOMETRY_TOLERANCE: f64 = 1e-12;

/// Whether a disk includes or excludes zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Openness {
    /// Closed disk that contains zeros.
    ClosedInclusion,
    /// Open disk free of zeros.
    OpenExclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "DiskRepr", from = "DiskRepr")]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
    pub openness: Openness,
}

#[derive(Serialize, Deserialize)]
struct DiskRepr {
    cx: f64,
    cy: f64,
    r: f64,
    closed: bool,
}

impl From<Disk> for DiskRepr {
    fn from(d: Disk) -> Self {
        DiskRepr {
            cx: d.center.re,
            cy: d.center.im,
            r: d.radius,
            closed: d.openness == Openness::ClosedInclusion,
        }
    }
}

impl From<DiskRepr> for Disk {
    fn from(d: DiskRepr) -> Self {
        Disk {
            center: Complex64::new(d.cx, d.cy),
            radius: d.r,
            openness: if d.closed {
                Openness::ClosedInclusion
            } else {
                Openness::OpenExclusion
            },
        }
    }
}

impl Disk {
    pub fn closed(center: Complex64, radius: f64) -> Self {
        Self {
            center,
            radius,
            openness: Openness::ClosedInclusion,
        }
    }

    pub fn open(center: Complex64, radius: f64) -> Self {
        Self {
            center,
            radius,
            openness: Openness::OpenExclusion,
        }
    }

    /// Closed disk `|z| <= radius`.
    pub fn origin(radius: f64) -> Self {
        Self::closed(Complex64::new(0.0, 0.0), radius)
    }

    pub fn is_closed(&self) -> bool {
        self.openness == Openness::ClosedInclusion
    }

    fn slack(&self) -> f64 {
        GEOMETRY_TOLERANCE * (self.radius + self.center.norm()).max(1.0)
    }

    /// Membership with the disk's own openness, tolerant on the side that
    /// keeps the region's property true: closed disks grow by the slack, open
    /// disks shrink by it.
    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_with(z, self.slack())
    }

    /// As [`Disk::contains`] with an explicit additive tolerance.
    pub fn contains_with(&self, z: Complex64, tol: f64) -> bool {
        let dist = (z - self.center).norm();
        match self.openness {
            Openness::ClosedInclusion => dist <= self.radius + tol,
            Openness::OpenExclusion => dist < self.radius - tol,
        }
    }

    /// Largest modulus of a point in the closed disk.
    pub fn max_modulus(&self) -> f64 {
        self.center.norm() + self.radius
    }

    /// Exclusion disk for the zeros of `p`, given that `self` contains the
    /// zeros of its reverse. Goes through [`recip_exterior`], so the origin
    /// must lie strictly inside `self`.
    pub fn reciprocal_exclusion(&self) -> Result<Disk> {
        // |1/z - w| <= r  <=>  |z + a| <= |a| r |z|  with a = -1/w
        let a = -self.center.inv();
        recip_exterior(a, self.radius)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub inner: f64,
    pub outer: f64,
}

impl Annulus {
    pub fn new(inner: f64, outer: f64) -> Self {
        assert!(
            0.0 <= inner && inner <= outer,
            "annulus needs 0 <= inner <= outer"
        );
        Self { inner, outer }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let r = z.norm();
        let tol = GEOMETRY_TOLERANCE * self.outer.max(1.0);
        r >= self.inner - tol && r <= self.outer + tol
    }
}

/// Closed inclusion disk `D(a, gamma) = { |z + a| <= |a| + gamma }`.
pub fn disk_d(a: f64, gamma: f64) -> Disk {
    Disk::closed(Complex64::new(-a, 0.0), a.abs() + gamma)
}

/// Open exclusion disk
/// `Delta(a, gamma) = { |z - gamma^2/(|a|+2 gamma)| < gamma (|a|+gamma)/(|a|+2 gamma) }`.
pub fn disk_delta(a: f64, gamma: f64) -> Disk {
    let a = a.abs();
    let denom = a + 2.0 * gamma;
    Disk::open(
        Complex64::new(gamma * gamma / denom, 0.0),
        gamma * (a + gamma) / denom,
    )
}

/// The set `{ |z + a| <= |a| R |z| }` is the closed exterior of the returned
/// open disk, with center `a/(|a|^2 R^2 - 1)` and radius `|a|^2 R/(|a|^2 R^2 - 1)`.
pub fn recip_exterior(a: Complex64, r: f64) -> Result<Disk> {
    let m = a.norm();
    if !(m > 0.0 && r * m > 1.0) {
        return Err(Error::HypothesisViolated {
            r,
            inv_a: if m > 0.0 { 1.0 / m } else { f64::INFINITY },
        });
    }
    let denom = m * m * r * r - 1.0;
    Ok(Disk::open(a / denom, m * m * r / denom))
}

/// Disks of radius `R^{1/m}` about each zero `c_j` of a monic degree-`m`
/// polynomial; together they cover `{ prod |z - c_j| <= R }`.
pub fn lemniscate_union(centers: &[Complex64], r: f64) -> Vec<Disk> {
    let m = centers.len();
    let radius = match m {
        0 => return Vec::new(),
        1 => r,
        2 => r.sqrt(),
        3 => r.cbrt(),
        _ => r.powf(1.0 / m as f64),
    };
    centers.iter().map(|&c| Disk::closed(c, radius)).collect()
}

/// Symmetric matrix whose `(i, j)` entry says whether disks `i` and `j` are
/// strictly separated. Tangent disks are not disjoint; the diagonal is false.
pub fn pairwise_disjoint(disks: &[Disk]) -> Vec<Vec<bool>> {
    let n = disks.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&disks[i], &disks[j]);
            let gap = (a.center - b.center).norm();
            let scale = (a.radius + b.radius + a.center.norm() + b.center.norm()).max(1.0);
            let d = gap > a.radius + b.radius + GEOMETRY_TOLERANCE * scale;
            out[i][j] = d;
            out[j][i] = d;
        }
    }
    out
}

/// Certified number of zeros in the union of a group of inclusion disks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCount {
    /// Indices into `RegionReport::inclusion`.
    pub disks: Vec<usize>,
    pub count: usize,
}

/// Parameters a theorem used to build its region.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<f64>,
    /// Multiplier applied to `p` for the inclusion part.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multiplier: Option<MultiplierSpec>,
    /// Multiplier applied to the reverse polynomial for the exclusion part.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reverse_multiplier: Option<MultiplierSpec>,
    /// Named scalars (`mu`, `R`, ...).
    #[serde(default)]
    pub values: std::collections::BTreeMap<String, f64>,
}

impl Parameters {
    pub(crate) fn with(mut self, name: &str, value: f64) -> Self {
        self.values.insert(name.to_owned(), value);
        self
    }
}

/// Zero inclusion/exclusion region produced by one theorem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub theorem: Method,
    pub parameters: Parameters,
    pub inclusion: Vec<Disk>,
    pub exclusion: Vec<Disk>,
    /// `pairwise_disjoint(&inclusion)`.
    pub disjoint: Vec<Vec<bool>>,
    /// Present only when the theorem's disjointness hypothesis holds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counts: Option<Vec<ZeroCount>>,
    /// Inclusion disks made superfluous because the origin-centred disk
    /// already reaches the Cauchy radius.
    #[serde(default)]
    pub redundant: Vec<usize>,
}

impl RegionReport {
    pub(crate) fn new(theorem: Method, parameters: Parameters, inclusion: Vec<Disk>) -> Self {
        let disjoint = pairwise_disjoint(&inclusion);
        Self {
            theorem,
            parameters,
            inclusion,
            exclusion: Vec::new(),
            disjoint,
            counts: None,
            redundant: Vec::new(),
        }
    }

    /// True if `z` is in the union of the inclusion disks.
    pub fn includes(&self, z: Complex64) -> bool {
        self.inclusion.iter().any(|d| d.contains(z))
    }

    /// True if `z` lies in some exclusion disk.
    pub fn excludes(&self, z: Complex64) -> bool {
        self.exclusion.iter().any(|d| d.contains(z))
    }

    /// Radius shared by all inclusion disks of a union theorem.
    pub fn radius(&self) -> f64 {
        self.inclusion.first().map_or(0.0, |d| d.radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn disk_d_examples() {
        let d = disk_d(4.0, 3f64.sqrt());
        assert_eq!(d.center, c(-4.0));
        assert_abs_diff_eq!(d.radius, 5.732, epsilon = 5e-4);
        assert!(d.is_closed());
        let d = disk_d(0.0, 2.5);
        assert_eq!(d.center.norm(), 0.0);
        assert_eq!(d.radius, 2.5);
        let golden = 0.5 * (1.0 + 5f64.sqrt());
        assert_abs_diff_eq!(disk_d(4.0, golden).radius, 5.618, epsilon = 5e-4);
    }

    #[test]
    fn disk_delta_examples() {
        let d = disk_delta(7.0 / 6.0, 0.5f64.sqrt());
        assert_abs_diff_eq!(d.center.re, 0.1937, epsilon = 1e-4);
        assert_abs_diff_eq!(d.radius, 0.5134, epsilon = 1e-4);
        assert!(!d.is_closed());
        assert!(disk_delta(7.0 / 6.0, 1e-12).radius < 1e-11);
    }

    #[test]
    fn recip_exterior_examples() {
        let d = recip_exterior(c(1.0), 2.0).unwrap();
        assert_abs_diff_eq!(d.center.re, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.radius, 2.0 / 3.0, epsilon = 1e-15);

        let d = recip_exterior(c(0.5), 3.0).unwrap();
        assert_abs_diff_eq!(d.center.re, 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(d.radius, 0.6, epsilon = 1e-15);
        // z = -a satisfies |z + a| = 0 <= anything, so it must be outside
        let z = c(-0.5);
        assert!((z - d.center).norm() >= d.radius);
        assert!(!d.contains(z));

        assert!(matches!(
            recip_exterior(c(0.5), 2.0),
            Err(Error::HypothesisViolated { .. })
        ));
        assert!(recip_exterior(c(0.0), 2.0).is_err());
    }

    #[test]
    fn lemniscate_union_examples() {
        let disks = lemniscate_union(&[c(0.0), c(-4.0)], 9.9282);
        assert_eq!(disks.len(), 2);
        assert_abs_diff_eq!(disks[0].radius, 3.151, epsilon = 5e-4);
        let disks = lemniscate_union(&[c(0.0), c(-0.586), c(-3.414)], 15.757);
        assert_abs_diff_eq!(disks[2].radius, 2.507, epsilon = 5e-4);
        let disks = lemniscate_union(&[c(0.0)], 1.3);
        assert_eq!(disks[0].radius, 1.3);
    }

    #[test]
    fn disjointness() {
        let m = pairwise_disjoint(&[Disk::closed(c(0.0), 1.0), Disk::closed(c(3.0), 1.0)]);
        assert!(m[0][1] && m[1][0] && !m[0][0]);
        let m = pairwise_disjoint(&[Disk::closed(c(0.0), 2.0), Disk::closed(c(3.0), 1.5)]);
        assert!(!m[0][1]);
        // tangent
        let m = pairwise_disjoint(&[Disk::closed(c(0.0), 1.0), Disk::closed(c(2.0), 1.0)]);
        assert!(!m[0][1]);
    }

    #[test]
    fn open_membership_shrinks() {
        let d = Disk::open(c(0.0), 1.0);
        assert!(!d.contains(c(1.0)));
        assert!(!d.contains(c(1.0 - 1e-14)));
        assert!(d.contains(c(0.999)));
        let d = Disk::closed(c(0.0), 1.0);
        assert!(d.contains(c(1.0 + 1e-14)));
    }

    #[test]
    fn reciprocal_exclusion_matches_delta() {
        // reverse of p3 has the inclusion disk D(a1/a0, 1/mu2)
        let a0_over_a1 = 7.0 / 6.0;
        let mu2 = 0.5f64.sqrt();
        let rev_disk = disk_d(1.0 / a0_over_a1, 1.0 / mu2);
        let ex = rev_disk.reciprocal_exclusion().unwrap();
        let delta = disk_delta(a0_over_a1, mu2);
        assert_abs_diff_eq!(ex.center.re, delta.center.re, epsilon = 1e-14);
        assert_abs_diff_eq!(ex.radius, delta.radius, epsilon = 1e-14);
    }

    #[test]
    fn disk_json_shape() {
        let d = Disk::closed(Complex64::new(-4.0, 0.5), 5.5);
        let v = serde_json::to_value(d).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"cx": -4.0, "cy": 0.5, "r": 5.5, "closed": true})
        );
        let back: Disk = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
    }
}

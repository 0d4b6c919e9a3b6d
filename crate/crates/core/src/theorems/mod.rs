//! Explicit zero bounds and regions, one function per theorem.
//!
//! Every theorem follows the same recipe: pick a low-degree multiplier
//! `m(z)` whose product with `p` has nonpositive coefficients below a few
//! protected top powers, then read the region off the positive zero of `m`.
//! Lower bounds and exclusion disks reuse the same code on the reverse
//! polynomial.

mod offset;
mod origin;
mod union;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Annulus, RegionReport};
use crate::poly::{multiply, nonleading_sign_report, MultiplierSpec, Polynomial};

pub use offset::{
    cor41_disks, cor41_multiplier, thm41_disks, thm41_multiplier, thm42_disks, thm42_multiplier,
    thm43_disks, thm43_multiplier,
};
pub use origin::{
    cauchy_bounds, ek_bounds, ek_multiplier, thm32_bounds, thm32_multiplier, thm33_bounds,
    thm33_multiplier, Choice,
};
pub use union::{
    cor51_region, cor61_region, quadratic_centers, thm51_region, thm52_region, thm53_multiplier,
    thm53_region, thm61_multiplier, thm61_region,
};

/// Theorem identifiers; the string forms are the CLI `--method` names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "cauchy-k")]
    Cauchy,
    #[serde(rename = "ek")]
    EnestromKakeya,
    #[serde(rename = "thm32")]
    Thm32,
    #[serde(rename = "thm33-1")]
    Thm33First,
    #[serde(rename = "thm33-2")]
    Thm33Second,
    #[serde(rename = "thm41")]
    Thm41,
    #[serde(rename = "thm42")]
    Thm42,
    #[serde(rename = "cor41")]
    Cor41,
    #[serde(rename = "thm43")]
    Thm43,
    #[serde(rename = "thm51")]
    Thm51,
    #[serde(rename = "thm52")]
    Thm52,
    #[serde(rename = "cor51")]
    Cor51,
    #[serde(rename = "thm53")]
    Thm53,
    #[serde(rename = "thm61")]
    Thm61,
    #[serde(rename = "cor61")]
    Cor61,
}

impl Method {
    pub const ALL: [Method; 15] = [
        Method::Cauchy,
        Method::EnestromKakeya,
        Method::Thm32,
        Method::Thm33First,
        Method::Thm33Second,
        Method::Thm41,
        Method::Thm42,
        Method::Cor41,
        Method::Thm43,
        Method::Thm51,
        Method::Thm52,
        Method::Cor51,
        Method::Thm53,
        Method::Thm61,
        Method::Cor61,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Cauchy => "cauchy-k",
            Method::EnestromKakeya => "ek",
            Method::Thm32 => "thm32",
            Method::Thm33First => "thm33-1",
            Method::Thm33Second => "thm33-2",
            Method::Thm41 => "thm41",
            Method::Thm42 => "thm42",
            Method::Cor41 => "cor41",
            Method::Thm43 => "thm43",
            Method::Thm51 => "thm51",
            Method::Thm52 => "thm52",
            Method::Cor51 => "cor51",
            Method::Thm53 => "thm53",
            Method::Thm61 => "thm61",
            Method::Cor61 => "cor61",
        }
    }

    /// Methods that produce a modulus interval rather than a disk region.
    pub fn is_interval(self) -> bool {
        matches!(
            self,
            Method::Cauchy
                | Method::EnestromKakeya
                | Method::Thm32
                | Method::Thm33First
                | Method::Thm33Second
        )
    }

    /// Methods parameterised by `eps`.
    pub fn takes_eps(self) -> bool {
        matches!(self, Method::Thm42 | Method::Thm52 | Method::Thm61)
    }

    /// Smallest degree the method accepts.
    pub fn min_degree(self) -> usize {
        match self {
            Method::Cauchy | Method::EnestromKakeya => 1,
            Method::Thm32 | Method::Thm41 | Method::Thm51 => 2,
            Method::Thm43 => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
                format!(
                    "unknown method `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

/// Bounds `lower <= |z| <= upper` on every zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundInterval {
    pub lower: f64,
    pub upper: f64,
    pub theorem: Method,
}

impl BoundInterval {
    pub fn annulus(&self) -> Annulus {
        Annulus::new(self.lower, self.upper)
    }
}

/// Modulus interval for an interval method; [`Method::Cauchy`] gives the
/// interval from the first-kind radii of `p` and its reverse.
pub fn bounds(method: Method, p: &Polynomial) -> Result<BoundInterval> {
    match method {
        Method::Cauchy => cauchy_bounds(p),
        Method::EnestromKakeya => Ok(ek_bounds(p)),
        Method::Thm32 => thm32_bounds(p),
        Method::Thm33First => thm33_bounds(p, Choice::First),
        Method::Thm33Second => thm33_bounds(p, Choice::Second),
        _ => Err(Error::UnsupportedMethod(method.name(), "modulus interval")),
    }
}

/// Region for a disk method. `eps` is used by the epsilon families only.
pub fn region(method: Method, p: &Polynomial, eps: f64) -> Result<RegionReport> {
    match method {
        Method::Thm41 => thm41_disks(p),
        Method::Thm42 => thm42_disks(p, eps),
        Method::Cor41 => cor41_disks(p),
        Method::Thm43 => thm43_disks(p),
        Method::Thm51 => thm51_region(p),
        Method::Thm52 => thm52_region(p, eps),
        Method::Cor51 => cor51_region(p),
        Method::Thm53 => thm53_region(p),
        Method::Thm61 => thm61_region(p, eps),
        Method::Cor61 => cor61_region(p),
        _ => Err(Error::UnsupportedMethod(method.name(), "disk region")),
    }
}

/// The multiplier a method applies to `p` and the number of top
/// coefficients of the product allowed to stay positive.
pub fn inclusion_multiplier(
    method: Method,
    p: &Polynomial,
    eps: f64,
) -> Result<(MultiplierSpec, usize)> {
    Ok(match method {
        Method::Cauchy => return Err(Error::UnsupportedMethod(method.name(), "multiplier")),
        Method::EnestromKakeya => (ek_multiplier(p), 1),
        Method::Thm32 => (thm32_multiplier(p)?, 1),
        Method::Thm33First => (thm33_multiplier(p, Choice::First)?, 1),
        Method::Thm33Second => (thm33_multiplier(p, Choice::Second)?, 1),
        Method::Thm41 | Method::Thm51 => (thm41_multiplier(p)?, 2),
        Method::Thm42 | Method::Thm52 => (thm42_multiplier(p, eps)?, 2),
        Method::Cor41 | Method::Cor51 => (cor41_multiplier(p)?, 2),
        Method::Thm43 => (thm43_multiplier(p)?, 2),
        Method::Thm53 => (thm53_multiplier(p)?, 3),
        Method::Thm61 => (thm61_multiplier(p, eps)?, 3),
        Method::Cor61 => (thm61_multiplier(p, 1.0)?, 3),
    })
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps))
    }
}

/// The sign condition every multiplier must satisfy; checked in debug builds.
#[inline]
pub(crate) fn debug_check_signs(p: &Polynomial, m: &MultiplierSpec, protected: usize) {
    if cfg!(debug_assertions) {
        let report = nonleading_sign_report(&multiply(p, m), protected);
        assert!(
            report.ok,
            "multiplier {:?} leaves positive coefficients at {:?} for {:?}",
            m.gammas(),
            report.offending,
            p.coeffs()
        );
    }
}

fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::NEG_INFINITY, f64::max)
}

fn min_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::INFINITY, f64::min)
}

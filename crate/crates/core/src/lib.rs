//! Explicit zero inclusion and exclusion regions for polynomials with
//! positive coefficients.
//!
//! Each region is derived by multiplying `p` with a low-degree polynomial so
//! that the product has nonpositive coefficients below its top few powers.
//! Annuli, single disks and unions of two or three disks with per-disk zero
//! counts are available, along with an independent root finder to check
//! them against.

pub mod bench;
pub mod cli;
pub mod error;
pub mod figures;
pub mod geometry;
pub mod oracle;
pub mod poly;
pub mod radius;
pub mod report;
pub mod svg;
pub mod theorems;

pub use error::{Error, Result};
pub use geometry::{Annulus, Disk, Openness, Parameters, RegionReport, ZeroCount};
pub use poly::{make_polynomial, MultiplierSpec, Pattern, Polynomial, SignedPolynomial};
pub use radius::{cauchy_radius, unique_positive_root, CauchyRadius};
pub use theorems::{bounds, region, BoundInterval, Method};

//! Plot specifications for the four comparison figures.
//!
//! Every disk comes straight from a theorem report; zero markers come from
//! the root oracle.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Disk;
use crate::oracle::roots_of;
use crate::poly::Polynomial;
use crate::svg::{PlotSpec, Stroke};
use crate::theorems::{
    cauchy_bounds, cor61_region, thm33_bounds, thm41_disks, thm43_disks, thm51_region, Choice,
};

/// `z^6 + 4z^5 + 2z^4 + 2z^3 + 3z^2 + 6z + 7`, ascending.
pub const P3: [f64; 7] = [7.0, 6.0, 3.0, 2.0, 2.0, 4.0, 1.0];
/// `z^6 + 9z^5 + 5z^4 + 6z^3 + 4z^2 + 8z + 1`, ascending.
pub const P4: [f64; 7] = [1.0, 8.0, 4.0, 6.0, 5.0, 9.0, 1.0];

/// One output file: `suffix` is empty for single-panel figures and `a`/`b`
/// for the two halves of a comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub suffix: &'static str,
    pub spec: PlotSpec,
}

fn poly(c: &[f64]) -> Polynomial {
    Polynomial::new(c.to_vec()).expect("fixed example polynomial")
}

fn base(title: &str, p: &Polynomial) -> Result<PlotSpec> {
    Ok(PlotSpec::new(title).markers(&roots_of(p)?.roots))
}

/// Annulus from the second-choice cubic multiplier plus the quartic offset
/// disk and its exclusion disk, with the Cauchy upper bound for reference.
fn figure1() -> Result<Vec<Panel>> {
    let p = poly(&P3);
    let annulus = thm33_bounds(&p, Choice::Second)?;
    let quartic = thm43_disks(&p)?;
    let spec = base("p3: cubic-multiplier annulus and quartic offset disk", &p)?
        .circle(Disk::origin(annulus.upper), Stroke::Solid)
        .circle(
            Disk::open(Complex64::new(0.0, 0.0), annulus.lower),
            Stroke::DashDot,
        )
        .circles(&quartic.inclusion, Stroke::Solid)
        .circles(&quartic.exclusion, Stroke::DashDot)
        .circle(Disk::origin(cauchy_bounds(&p)?.upper), Stroke::Dashed);
    Ok(vec![Panel { suffix: "", spec }])
}

fn figure2() -> Result<Vec<Panel>> {
    let p = poly(&P3);
    let upper = thm33_bounds(&p, Choice::Second)?.upper;
    let spec = base("p3: quadratic offset disk and two-disk union", &p)?
        .circle(Disk::origin(upper), Stroke::Dotted)
        .circles(&thm41_disks(&p)?.inclusion, Stroke::Dashed)
        .circles(&thm51_region(&p)?.inclusion, Stroke::Solid);
    Ok(vec![Panel { suffix: "", spec }])
}

/// Two-disk union beside the three-disk union, each over the cubic
/// annulus bound.
fn union_pair(name: &str, c: &[f64]) -> Result<Vec<Panel>> {
    let p = poly(c);
    let upper = thm33_bounds(&p, Choice::Second)?.upper;
    let a = base(&format!("{name}: two-disk union"), &p)?
        .circle(Disk::origin(upper), Stroke::Dotted)
        .circles(&thm51_region(&p)?.inclusion, Stroke::Solid);
    let b = base(&format!("{name}: three-disk union"), &p)?
        .circle(Disk::origin(upper), Stroke::Dotted)
        .circles(&cor61_region(&p)?.inclusion, Stroke::Solid);
    Ok(vec![
        Panel {
            suffix: "a",
            spec: a,
        },
        Panel {
            suffix: "b",
            spec: b,
        },
    ])
}

pub fn figure(number: u8) -> Result<Vec<Panel>> {
    match number {
        1 => figure1(),
        2 => figure2(),
        3 => union_pair("p3", &P3),
        4 => union_pair("p4", &P4),
        n => Err(Error::UnknownFigure(n)),
    }
}

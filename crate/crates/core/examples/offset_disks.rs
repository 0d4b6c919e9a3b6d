//! Offset inclusion disks and their exclusion counterparts, including the
//! epsilon family.

use ekzero::theorems::{cor41_disks, thm41_disks, thm42_disks, thm43_disks};
use ekzero::{Polynomial, RegionReport};

fn show(r: &RegionReport) {
    for d in &r.inclusion {
        println!(
            "{:<6} include |z - ({:.4})| <= {:.4}",
            r.theorem, d.center, d.radius
        );
    }
    for d in &r.exclusion {
        println!(
            "{:<6} exclude |z - ({:.4})| <  {:.4}",
            r.theorem, d.center, d.radius
        );
    }
}

fn main() -> ekzero::Result<()> {
    let p = Polynomial::new(vec![7.0, 6.0, 3.0, 2.0, 2.0, 4.0, 1.0])?;
    show(&thm41_disks(&p)?);
    for eps in [0.25, 0.5, 1.0] {
        let r = thm42_disks(&p, eps)?;
        println!("eps = {eps}");
        show(&r);
    }
    show(&cor41_disks(&p)?);
    show(&thm43_disks(&p)?);
    Ok(())
}

//! Two-disk unions about `0` and `-a_{n-1}/a_n`, with zero counts when the
//! disks separate.

use ekzero::theorems::{cor51_region, thm51_region, thm52_region};
use ekzero::{oracle, Polynomial};

fn main() -> ekzero::Result<()> {
    // a large second coefficient pushes one zero far out
    let p = Polynomial::new(vec![1.0, 1.0, 1.0, 1.0, 30.0, 1.0])?;
    let roots = oracle::roots_of(&p)?;
    for r in [thm51_region(&p)?, thm52_region(&p, 0.5)?, cor51_region(&p)?] {
        println!(
            "{:<6} radius {:.4}  centers {:?}",
            r.theorem,
            r.radius(),
            r.inclusion.iter().map(|d| d.center.re).collect::<Vec<_>>()
        );
        match &r.counts {
            Some(groups) => {
                for g in groups {
                    let found: usize = roots
                        .roots
                        .iter()
                        .filter(|&&z| g.disks.iter().any(|&i| r.inclusion[i].contains(z)))
                        .count();
                    println!(
                        "       disks {:?}: {} zeros (found {found})",
                        g.disks, g.count
                    );
                }
            }
            None => println!("       disks overlap; no counts"),
        }
    }
    Ok(())
}

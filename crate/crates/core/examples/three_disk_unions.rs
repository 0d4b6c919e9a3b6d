//! Three-disk unions from cubic multipliers.

use ekzero::theorems::{cor61_region, thm53_region, thm61_region};
use ekzero::Polynomial;

fn main() -> ekzero::Result<()> {
    let p = Polynomial::new(vec![1.0, 8.0, 4.0, 6.0, 5.0, 9.0, 1.0])?;
    for r in [thm53_region(&p)?, thm61_region(&p, 0.5)?, cor61_region(&p)?] {
        println!("{} radius {:.6}", r.theorem, r.radius());
        for (i, d) in r.inclusion.iter().enumerate() {
            println!("  disk {i}: center {:.6}", d.center);
        }
        if let Some(groups) = &r.counts {
            for g in groups {
                println!("  disks {:?} hold {} zeros", g.disks, g.count);
            }
        }
        if !r.redundant.is_empty() {
            println!("  redundant: {:?}", r.redundant);
        }
    }
    Ok(())
}

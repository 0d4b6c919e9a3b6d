//! Modulus intervals from every origin-centered multiplier.
//!
//! ```text
//! cargo run --example annulus_bounds -- 7,6,3,2,2,4,1
//! ```

use ekzero::theorems::{bounds, Method};
use ekzero::{oracle, Polynomial};

fn main() -> ekzero::Result<()> {
    let coeffs: Vec<f64> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "7,6,3,2,2,4,1".to_owned())
        .split(',')
        .map(|s| s.trim().parse().expect("coefficient"))
        .collect();
    let p = Polynomial::new(coeffs)?;
    let (lo, hi) = oracle::moduli_extremes(&oracle::roots_of(&p)?);

    println!("{:<8} {:>10} {:>10}", "method", "lower", "upper");
    for m in Method::ALL.into_iter().filter(|m| m.is_interval()) {
        if p.degree() < m.min_degree() {
            continue;
        }
        let b = bounds(m, &p)?;
        println!("{:<8} {:>10.4} {:>10.4}", m.name(), b.lower, b.upper);
    }
    println!("{:<8} {lo:>10.4} {hi:>10.4}", "actual");
    Ok(())
}

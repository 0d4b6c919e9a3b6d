//! Checks every method against the computed zeros of random polynomials.
//!
//! ```text
//! cargo run --release --example verify_against_oracle -- [samples] [degree]
//! ```

use ekzero::bench::{sample_polynomial, BenchClass, ClassKind, DEFAULT_SEED};
use ekzero::oracle::{interval_violations, region_violations, roots_of};
use ekzero::theorems::{bounds, region, Method};

fn main() -> ekzero::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples: usize = args.next().map_or(200, |s| s.parse().expect("samples"));
    let degree: usize = args.next().map_or(10, |s| s.parse().expect("degree"));

    for kind in [ClassKind::I, ClassKind::II] {
        let class = BenchClass::new(kind, degree, samples, DEFAULT_SEED);
        let mut checked = 0;
        let mut violations = Vec::new();
        for i in 0..samples as u64 {
            let p = sample_polynomial(&class, i);
            let roots = roots_of(&p)?;
            for m in Method::ALL {
                if m.is_interval() {
                    violations.extend(interval_violations(&bounds(m, &p)?, &roots));
                } else {
                    violations.extend(region_violations(&region(m, &p, 0.5)?, &roots));
                }
                checked += 1;
            }
        }
        println!(
            "class {kind}, degree {degree}: {checked} checks, {} violations",
            violations.len()
        );
        for v in violations.iter().take(5) {
            println!("  {v}");
        }
    }
    Ok(())
}

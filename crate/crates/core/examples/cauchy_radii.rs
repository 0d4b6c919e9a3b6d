//! Cauchy radii of the first few kinds, and the unique positive zero of a
//! few multipliers.

use ekzero::radius::{cauchy_equation_at, cauchy_radius};
use ekzero::{unique_positive_root, MultiplierSpec};

fn main() -> ekzero::Result<()> {
    let p = [3.0, 2.0, 1.0, 4.0, 1.0, 2.0];
    for k in 1..=3 {
        let r = cauchy_radius(&p, k)?;
        // the Cauchy polynomial changes sign at the radius
        let below = cauchy_equation_at(&p, k, r.value * (1.0 - 1e-9));
        let above = cauchy_equation_at(&p, k, r.value * (1.0 + 1e-9));
        println!(
            "s_{k} = {:.10}  residual {:.1e}  signs {}/{}",
            r.value,
            r.residual,
            if below < 0.0 { '-' } else { '+' },
            if above > 0.0 { '+' } else { '-' },
        );
    }

    for gammas in [vec![2.0], vec![2.0, 0.5], vec![1.0, 0.0, 3.0]] {
        let m = MultiplierSpec::new(gammas.clone())?;
        println!("gammas {gammas:?}: root {:.10}", unique_positive_root(&m)?);
    }
    Ok(())
}

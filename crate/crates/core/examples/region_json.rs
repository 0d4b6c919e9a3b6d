//! Region reports serialized as JSON and read back.

use ekzero::report::region_report_json;
use ekzero::theorems::{region, Method};
use ekzero::{Polynomial, RegionReport};

fn main() -> ekzero::Result<()> {
    let p = Polynomial::new(vec![7.0, 6.0, 3.0, 2.0, 2.0, 4.0, 1.0])?;
    let text = region_report_json(&region(Method::Thm61, &p, 1.0)?);
    println!("{text}");
    let back: RegionReport = serde_json::from_str(&text).expect("valid report");
    println!(
        "read back {} disks of radius {:.6}",
        back.inclusion.len(),
        back.radius()
    );
    Ok(())
}

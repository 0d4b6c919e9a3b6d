//! Writes the four comparison figures as SVG files.
//!
//! ```text
//! cargo run --example figures -- [out-dir]
//! ```

use std::path::PathBuf;

use ekzero::figures::figure;
use ekzero::svg::render_svg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".to_owned()));
    std::fs::create_dir_all(&dir)?;
    for n in 1..=4 {
        for panel in figure(n)? {
            let name = if panel.suffix.is_empty() {
                format!("figure{n}.svg")
            } else {
                format!("figure{n}_{}.svg", panel.suffix)
            };
            let path = dir.join(name);
            std::fs::write(&path, render_svg(&panel.spec))?;
            println!("{}", path.display());
        }
    }
    Ok(())
}

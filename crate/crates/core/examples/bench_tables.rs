//! Median tables over random Class I and Class II polynomials.
//!
//! ```text
//! cargo run --release --example bench_tables -- [samples] [seed]
//! ```

use ekzero::bench::{full_suite, DEFAULT_SAMPLES, DEFAULT_SEED, DEGREES};

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args
        .next()
        .map_or(DEFAULT_SAMPLES, |s| s.parse().expect("sample count"));
    let seed = args
        .next()
        .map_or(DEFAULT_SEED, |s| s.parse().expect("seed"));

    for table in full_suite(&DEGREES, samples, seed, 0) {
        println!(
            "Table {} ({}, class {}, {} samples)",
            table.statistic.table_number(table.class),
            table.statistic,
            table.class,
            table.samples
        );
        print!("{:>6}", "n");
        for m in &table.methods {
            print!("{m:>11}");
        }
        println!();
        for row in &table.rows {
            print!("{:>6}", row.degree);
            for v in &row.medians {
                print!("{v:>11.3}");
            }
            println!();
        }
        println!();
    }
}

//! Random polynomial ensembles and median tables.
//!
//! Sample `i` of a class is drawn from a ChaCha8 stream keyed by the seed,
//! the class and degree, and `i`, so every table is a pure function of its
//! configuration regardless of how many threads evaluate it. All methods of a
//! table see the same samples.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{moduli_extremes, roots_of};
use crate::poly::Polynomial;
use crate::radius::cauchy_radius;
use crate::theorems::{bounds, region, Method};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEGREES: [usize; 2] = [10, 40];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    /// Coefficients uniform in `(0, 10)`.
    I,
    /// Coefficients uniform in `(1, 5)`.
    II,
}

impl ClassKind {
    pub fn range(self) -> (f64, f64) {
        match self {
            ClassKind::I => (0.0, 10.0),
            ClassKind::II => (1.0, 5.0),
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::I => "I",
            ClassKind::II => "II",
        })
    }
}

impl FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" | "1" | "i" => Ok(ClassKind::I),
            "II" | "2" | "ii" => Ok(ClassKind::II),
            _ => Err(format!("unknown class `{s}` (expected I or II)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchClass {
    pub kind: ClassKind,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
}

impl BenchClass {
    pub fn new(kind: ClassKind, degree: usize, samples: usize, seed: u64) -> Self {
        Self {
            kind,
            degree,
            samples,
            seed,
        }
    }

    fn stream_key(&self) -> u64 {
        let tag = match self.kind {
            ClassKind::I => 1u64,
            ClassKind::II => 2u64,
        };
        self.seed ^ (tag << 56) ^ ((self.degree as u64) << 40)
    }
}

/// Sample `index` of the class: `degree + 1` coefficients drawn strictly
/// inside the class interval.
pub fn sample_polynomial(c: &BenchClass, index: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(c.stream_key());
    rng.set_stream(index);
    let (lo, hi) = c.kind.range();
    let coeffs = (0..=c.degree)
        .map(|_| loop {
            let x: f64 = rng.random_range(lo..hi);
            if x > lo {
                break x;
            }
        })
        .collect();
    Polynomial::new(coeffs).expect("positive coefficients")
}

/// What a table's cells measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    /// Upper bound divided by the largest zero modulus.
    UpperRatio,
    /// Radius of the single disk centered at `-a_{n-1}/a_n`.
    InclusionRadius,
    /// Common radius of the disks at `0` and `-a_{n-1}/a_n`.
    UnionRadius,
}

impl Statistic {
    pub const ALL: [Statistic; 3] = [
        Statistic::UpperRatio,
        Statistic::InclusionRadius,
        Statistic::UnionRadius,
    ];

    /// Column names; `cauchy` and `cauchy-s2` are the reference columns.
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Statistic::UpperRatio => &["cauchy", "ek", "thm32", "thm33-1", "thm33-2"],
            Statistic::InclusionRadius => &["cauchy-s2", "thm41", "cor41", "thm43"],
            Statistic::UnionRadius => &["cauchy-s2", "thm51", "cor51"],
        }
    }

    /// Table number for this statistic and class: 1 to 6.
    pub fn table_number(self, kind: ClassKind) -> usize {
        let base = match self {
            Statistic::UpperRatio => 1,
            Statistic::InclusionRadius => 3,
            Statistic::UnionRadius => 5,
        };
        base + usize::from(kind == ClassKind::II)
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::UpperRatio => "upper-ratio",
            Statistic::InclusionRadius => "inclusion-radius",
            Statistic::UnionRadius => "union-radius",
        }
    }

    /// Every cell of one sample, in [`Statistic::methods`] order.
    pub fn evaluate(self, p: &Polynomial) -> Result<Vec<f64>> {
        let a = p.top(1) / p.top(0);
        match self {
            Statistic::UpperRatio => {
                let (_, max_root) = moduli_extremes(&roots_of(p)?);
                let methods = [
                    Method::Cauchy,
                    Method::EnestromKakeya,
                    Method::Thm32,
                    Method::Thm33First,
                    Method::Thm33Second,
                ];
                methods
                    .iter()
                    .map(|&m| Ok(bounds(m, p)?.upper / max_root))
                    .collect()
            }
            Statistic::InclusionRadius => {
                let s2 = cauchy_radius(p.coeffs(), 2)?.value;
                let mut out = vec![s2 + a];
                for m in [Method::Thm41, Method::Cor41, Method::Thm43] {
                    out.push(region(m, p, 1.0)?.inclusion[0].radius);
                }
                Ok(out)
            }
            Statistic::UnionRadius => {
                let s2 = cauchy_radius(p.coeffs(), 2)?.value;
                let mut out = vec![(s2 * s2 + a * s2).sqrt()];
                for m in [Method::Thm51, Method::Cor51] {
                    out.push(region(m, p, 1.0)?.radius());
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Statistic::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown table `{s}` (expected upper-ratio, inclusion-radius or union-radius)"
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub degree: usize,
    /// One median per entry of `BenchTable::methods`.
    pub medians: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub statistic: Statistic,
    pub class: ClassKind,
    pub samples: usize,
    pub seed: u64,
    pub methods: Vec<String>,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn median(&self, method: &str, degree: usize) -> Option<f64> {
        let col = self.methods.iter().position(|m| m == method)?;
        let row = self.rows.iter().find(|r| r.degree == degree)?;
        Some(row.medians[col])
    }

    /// Long-form records `(method, degree, median)`.
    pub fn records(&self) -> impl Iterator<Item = (&str, usize, f64)> + '_ {
        self.rows.iter().flat_map(move |row| {
            self.methods
                .iter()
                .zip(&row.medians)
                .map(move |(m, &v)| (m.as_str(), row.degree, v))
        })
    }

    /// CSV with columns `method,degree,median`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["method", "degree", "median"])
            .expect("in-memory write");
        for (m, d, v) in self.records() {
            w.write_record([m.to_owned(), d.to_string(), format!("{v:.6}")])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// CSV of several tables with columns `table,class,method,degree,median`.
pub fn suite_csv(tables: &[BenchTable]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["table", "class", "method", "degree", "median"])
        .expect("in-memory write");
    for t in tables {
        for (m, d, v) in t.records() {
            w.write_record([
                t.statistic.table_number(t.class).to_string(),
                t.class.to_string(),
                m.to_owned(),
                d.to_string(),
                format!("{v:.6}"),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Lower-middle element for even lengths.
pub fn median(values: &mut [f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_by(f64::total_cmp);
    values[(values.len() - 1) / 2]
}

/// Per-sample cells for exactly `c.samples` samples. Failed samples are
/// logged and replaced by the next indices, which keeps the result
/// independent of evaluation order.
pub fn sample_cells(stat: Statistic, c: &BenchClass) -> Vec<Vec<f64>> {
    let mut cells = Vec::with_capacity(c.samples);
    let mut next = 0u64;
    while cells.len() < c.samples {
        let want = (c.samples - cells.len()) as u64;
        let batch: Vec<_> = (next..next + want)
            .into_par_iter()
            .map(|i| (i, stat.evaluate(&sample_polynomial(c, i))))
            .collect();
        next += want;
        for (i, r) in batch {
            match r {
                Ok(v) => cells.push(v),
                Err(e) => log::warn!(
                    "class {} degree {} sample {i} skipped: {e}",
                    c.kind,
                    c.degree
                ),
            }
        }
    }
    cells
}

/// One row of a table.
pub fn bench_row(stat: Statistic, c: &BenchClass) -> BenchRow {
    let cells = sample_cells(stat, c);
    let medians = (0..stat.methods().len())
        .map(|k| median(&mut cells.iter().map(|v| v[k]).collect::<Vec<_>>()))
        .collect();
    BenchRow {
        degree: c.degree,
        medians,
    }
}

/// Table for one class over several degrees, evaluated on `workers` threads
/// (`0` uses the global pool).
pub fn bench_table(
    stat: Statistic,
    kind: ClassKind,
    degrees: &[usize],
    samples: usize,
    seed: u64,
    workers: usize,
) -> BenchTable {
    let run = || {
        degrees
            .iter()
            .map(|&n| bench_row(stat, &BenchClass::new(kind, n, samples, seed)))
            .collect()
    };
    let rows = if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(run)
    };
    BenchTable {
        statistic: stat,
        class: kind,
        samples,
        seed,
        methods: stat.methods().iter().map(|m| m.to_string()).collect(),
        rows,
    }
}

pub fn table_upper_ratios(c: &BenchClass) -> BenchTable {
    bench_table(
        Statistic::UpperRatio,
        c.kind,
        &[c.degree],
        c.samples,
        c.seed,
        0,
    )
}

pub fn table_section4_radii(c: &BenchClass) -> BenchTable {
    bench_table(
        Statistic::InclusionRadius,
        c.kind,
        &[c.degree],
        c.samples,
        c.seed,
        0,
    )
}

pub fn table_section5_radii(c: &BenchClass) -> BenchTable {
    bench_table(
        Statistic::UnionRadius,
        c.kind,
        &[c.degree],
        c.samples,
        c.seed,
        0,
    )
}

/// All six tables (three statistics, two classes) in table-number order.
pub fn full_suite(degrees: &[usize], samples: usize, seed: u64, workers: usize) -> Vec<BenchTable> {
    let mut out = Vec::new();
    for stat in Statistic::ALL {
        for kind in [ClassKind::I, ClassKind::II] {
            out.push(bench_table(stat, kind, degrees, samples, seed, workers));
        }
    }
    out
}

//! Command-line front end. The binary only forwards to [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{
    bench_table, full_suite, suite_csv, ClassKind, Statistic, DEFAULT_SAMPLES, DEFAULT_SEED,
    DEGREES,
};
use crate::error::Error;
use crate::figures::figure;
use crate::oracle::{all_roots, moduli_extremes};
use crate::poly::Polynomial;
use crate::radius::cauchy_radius;
use crate::report::{bounds_json, cauchy_json, region_report_json, round_sig, to_rounded_json};
use crate::svg::render_svg;
use crate::theorems::{bounds, region, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const SEED_ENV: &str = "EKZERO_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "ekzero",
    version,
    about = "Explicit zero regions for polynomials with positive coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Coefficients a_0,a_1,...,a_n (constant term first).
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    pub poly: Vec<f64>,
    /// Read --poly as a_n,...,a_0 instead.
    #[arg(long)]
    pub descending: bool,
}

impl PolyArgs {
    fn ascending(&self) -> Vec<f64> {
        let mut c = self.poly.clone();
        if self.descending {
            c.reverse();
        }
        c
    }

    fn polynomial(&self) -> Result<Polynomial, Error> {
        Polynomial::new(self.ascending())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modulus interval [lower, upper] for all zeros.
    Bounds {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value = "ek")]
        method: Method,
        /// Kind of the Cauchy radius (with --method cauchy-k).
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Inclusion and exclusion disks with zero counts.
    Region {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        method: Method,
        /// Parameter of thm42, thm52 and thm61, in (0, 1].
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Median tables over random polynomial classes.
    Bench {
        /// One of upper-ratio, inclusion-radius, union-radius; all when omitted.
        #[arg(long)]
        table: Option<Statistic>,
        /// I or II; both when omitted.
        #[arg(long)]
        class: Option<ClassKind>,
        #[arg(long, value_delimiter = ',', default_values_t = DEGREES)]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Overridden by EKZERO_SEED when set.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one of the comparison figures as SVG.
    Plot {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        figure: u8,
        /// Output path; two-panel figures get `_a` and `_b` before the extension.
        #[arg(long)]
        out: PathBuf,
        /// Width in pixels.
        #[arg(long, default_value_t = 600)]
        size: u32,
    },
    /// All complex zeros from the root oracle.
    Roots {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

/// Parses `args` (program name first) and runs the command, reading
/// `EKZERO_SEED` from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_seed_env(args, std::env::var(SEED_ENV).ok(), out, err)
}

/// As [`run`] with an explicit value for `EKZERO_SEED`.
pub fn run_with_seed_env<I, T>(
    args: I,
    seed_env: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, seed_env, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numerical(msg)) => {
            let _ = writeln!(err, "numerical failure: {msg}");
            EXIT_NUMERICAL
        }
    }
}

fn dispatch(cmd: Command, seed_env: Option<String>, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Bounds {
            poly,
            method,
            k,
            format,
        } => cmd_bounds(&poly, method, k, format, out),
        Command::Region {
            poly,
            method,
            eps,
            format,
        } => cmd_region(&poly, method, eps, format, out),
        Command::Bench {
            table,
            class,
            degrees,
            samples,
            seed,
            workers,
            format,
            out: path,
        } => {
            let seed = match seed_env {
                Some(s) => s.trim().parse().map_err(|_| {
                    Failure::Usage(format!("{SEED_ENV}={s:?} is not an unsigned integer"))
                })?,
                None => seed,
            };
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            if let Some(&n) = degrees.iter().find(|&&n| n < 4) {
                return Err(Failure::Usage(format!(
                    "--degrees: {n} is below the minimum of 4"
                )));
            }
            let tables = match (table, class) {
                (None, None) => full_suite(&degrees, samples, seed, workers),
                _ => {
                    let stats = table.map_or(Statistic::ALL.to_vec(), |t| vec![t]);
                    let kinds = class.map_or(vec![ClassKind::I, ClassKind::II], |c| vec![c]);
                    let mut v = Vec::new();
                    for &s in &stats {
                        for &k in &kinds {
                            v.push(bench_table(s, k, &degrees, samples, seed, workers));
                        }
                    }
                    v
                }
            };
            let text = match format {
                Format::Csv if tables.len() == 1 => tables[0].to_csv(),
                Format::Csv => suite_csv(&tables),
                Format::Json => to_rounded_json(&tables) + "\n",
            };
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
        Command::Plot {
            figure: n,
            out: path,
            size,
        } => {
            let panels = figure(n)?;
            for panel in panels {
                let mut spec = panel.spec;
                spec.size = size;
                let target = panel_path(&path, panel.suffix);
                std::fs::write(&target, render_svg(&spec))?;
                writeln!(out, "{}", target.display())?;
            }
            Ok(())
        }
        Command::Roots { poly, format } => {
            let rs = all_roots(&poly.ascending())?;
            let (lo, hi) = moduli_extremes(&rs);
            match format {
                Format::Json => {
                    let v = json!({
                        "roots": rs.roots.iter().map(|z| json!({"re": z.re, "im": z.im})).collect::<Vec<_>>(),
                        "max_residual": rs.max_residual,
                        "min_modulus": lo,
                        "max_modulus": hi,
                    });
                    writeln!(out, "{}", to_rounded_json(&v))?;
                }
                Format::Csv => {
                    writeln!(out, "re,im")?;
                    for z in &rs.roots {
                        writeln!(out, "{},{}", round_sig(z.re), round_sig(z.im))?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn cmd_bounds(
    poly: &PolyArgs,
    method: Method,
    k: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let p = poly.polynomial()?;
    if method == Method::Cauchy {
        let r = cauchy_radius(p.coeffs(), k)?;
        let rev = cauchy_radius(p.reverse().coeffs(), k)?;
        match format {
            Format::Json => writeln!(out, "{}", cauchy_json(&r, Some(&rev)))?,
            Format::Csv => {
                writeln!(out, "kind,value,residual,reverse_value")?;
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.kind,
                    round_sig(r.value),
                    round_sig(r.residual),
                    round_sig(rev.value)
                )?;
            }
        }
        return Ok(());
    }
    if !method.is_interval() {
        return Err(Failure::Usage(format!(
            "--method {method} gives disks; use `region --method {method}`"
        )));
    }
    let b = bounds(method, &p)?;
    match format {
        Format::Json => writeln!(out, "{}", bounds_json(&b))?,
        Format::Csv => {
            writeln!(out, "lower,upper")?;
            writeln!(out, "{},{}", round_sig(b.lower), round_sig(b.upper))?;
        }
    }
    Ok(())
}

fn cmd_region(
    poly: &PolyArgs,
    method: Method,
    eps: f64,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let p = poly.polynomial()?;
    if method.is_interval() {
        return Err(Failure::Usage(format!(
            "--method {method} gives a modulus interval; use `bounds --method {method}`"
        )));
    }
    if !method.takes_eps() && eps != 1.0 {
        return Err(Failure::Usage(format!(
            "--eps applies only to thm42, thm52 and thm61, not {method}"
        )));
    }
    let r = region(method, &p, eps)?;
    match format {
        Format::Json => writeln!(out, "{}", region_report_json(&r))?,
        Format::Csv => {
            writeln!(out, "role,index,cx,cy,r,closed")?;
            let rows = r
                .inclusion
                .iter()
                .map(|d| ("inclusion", d))
                .enumerate()
                .chain(r.exclusion.iter().map(|d| ("exclusion", d)).enumerate());
            for (i, (role, d)) in rows {
                writeln!(
                    out,
                    "{role},{i},{},{},{},{}",
                    round_sig(d.center.re),
                    round_sig(d.center.im),
                    round_sig(d.radius),
                    d.is_closed()
                )?;
            }
        }
    }
    Ok(())
}

/// `fig.svg` with suffix `a` becomes `fig_a.svg`.
fn panel_path(path: &Path, suffix: &str) -> PathBuf {
    if suffix.is_empty() {
        return path.to_path_buf();
    }
    let stem = path
        .file_stem()
        .map_or_else(|| "figure".into(), |s| s.to_string_lossy().into_owned());
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits with
//! a failure status if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use ekzero::bench::{
    full_suite, sample_polynomial, suite_csv, BenchClass, BenchTable, ClassKind, Statistic,
    DEFAULT_SAMPLES, DEFAULT_SEED, DEGREES,
};
use ekzero::geometry::{disk_d, recip_exterior};
use ekzero::oracle::{
    all_roots, interval_violations, moduli_extremes, region_violations, roots_of,
};
use ekzero::poly::multiply;
use ekzero::radius::{cauchy_equation_at, cauchy_radius};
use ekzero::theorems::{
    bounds, cor41_disks, cor51_region, cor61_region, inclusion_multiplier, region, thm33_bounds,
    thm41_disks, thm42_disks, thm43_disks, thm51_region, thm52_region, thm53_region, thm61_region,
    Choice, Method,
};
use ekzero::{unique_positive_root, Polynomial, RegionReport};

const P1: [f64; 6] = [3.0, 2.0, 1.0, 4.0, 1.0, 2.0];
const P2: [f64; 6] = [1.0, 2.0, 3.0, 2.0, 1.0, 1.0];
const P3: [f64; 7] = [7.0, 6.0, 3.0, 2.0, 2.0, 4.0, 1.0];
const P4: [f64; 7] = [1.0, 8.0, 4.0, 6.0, 5.0, 9.0, 1.0];

const EPS_VALUES: [f64; 3] = [0.1, 0.5, 1.0];

fn poly(c: &[f64]) -> Polynomial {
    Polynomial::new(c.to_vec()).unwrap()
}

#[derive(Default)]
struct Checks {
    count: usize,
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        self.check((got - want).abs() <= tol, || {
            format!("{name}: got {got:.6}, expected {want} +- {tol}")
        });
    }

    fn relative(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        self.check((got - want).abs() <= tol * want.abs().max(1.0), || {
            format!("{name}: got {got:e}, expected {want:e} (relative {tol:e})")
        });
    }

    fn extend(&mut self, failures: Vec<String>) {
        self.count += 1;
        self.failures.extend(failures);
    }
}

/// Shared state between criteria: the full bench is computed once.
struct Context {
    suite: Option<Vec<BenchTable>>,
}

const VALUE_TOL: f64 = 5e-4;

fn reference_values(_: &mut Context) -> Checks {
    let mut c = Checks::default();
    let t = VALUE_TOL;

    let p1 = poly(&P1);
    let ek = bounds(Method::EnestromKakeya, &p1).unwrap();
    c.close("p1 ek lower", ek.lower, 0.25, t);
    c.close("p1 ek upper", ek.upper, 4.00, t);
    let cy = bounds(Method::Cauchy, &p1).unwrap();
    c.close("p1 cauchy lower", cy.lower, 0.6288, t);
    c.close("p1 cauchy upper", cy.upper, 1.9242, t);
    let (lo, hi) = moduli_extremes(&roots_of(&p1).unwrap());
    c.close("p1 min |z|", lo, 0.7740, t);
    c.close("p1 max |z|", hi, 1.3921, t);

    let p2 = poly(&P2);
    let ek = bounds(Method::EnestromKakeya, &p2).unwrap();
    c.close("p2 ek lower", ek.lower, 0.5, t);
    c.close("p2 ek upper", ek.upper, 2.0, t);
    let cy = bounds(Method::Cauchy, &p2).unwrap();
    c.close("p2 cauchy lower", cy.lower, 0.3143, t);
    c.close("p2 cauchy upper", cy.upper, 2.4654, t);
    let (lo, hi) = moduli_extremes(&roots_of(&p2).unwrap());
    c.close("p2 min |z|", lo, 0.7136, t);
    c.close("p2 max |z|", hi, 1.4013, t);

    let p3 = poly(&P3);
    let intervals = [
        (Method::Cauchy, 0.670, 4.580),
        (Method::EnestromKakeya, 0.500, 4.000),
        (Method::Thm32, 0.633, 4.000),
        (Method::Thm33First, 0.766, 4.000),
        (Method::Thm33Second, 0.807, 3.788),
    ];
    for (m, lower, upper) in intervals {
        let b = bounds(m, &p3).unwrap();
        c.close(&format!("p3 {m} lower"), b.lower, lower, t);
        c.close(&format!("p3 {m} upper"), b.upper, upper, t);
    }

    // second-kind Cauchy disk about -a_{n-1}/a_n and its reverse counterpart
    let rev = p3.reverse();
    let s2 = cauchy_radius(p3.coeffs(), 2).unwrap().value;
    let s2_rev = cauchy_radius(rev.coeffs(), 2).unwrap().value;
    let s2_excl = disk_d(rev.top(1) / rev.top(0), s2_rev)
        .reciprocal_exclusion()
        .unwrap();
    c.close("p3 s2 exclusion", s2_excl.radius, 0.698, t);
    c.close("p3 s2 inclusion", s2 + p3.top(1) / p3.top(0), 5.475, t);

    let disks: [(&str, RegionReport, f64, f64); 4] = [
        ("thm41", thm41_disks(&p3).unwrap(), 0.513, 5.732),
        ("cor41", cor41_disks(&p3).unwrap(), 0.607, 5.618),
        ("thm43", thm43_disks(&p3).unwrap(), 0.693, 5.492),
        ("thm42(1/2)", thm42_disks(&p3, 0.5).unwrap(), 0.664, 4.740),
    ];
    for (name, r, excl, incl) in disks {
        c.close(
            &format!("p3 {name} exclusion"),
            r.exclusion[0].radius,
            excl,
            t,
        );
        c.close(
            &format!("p3 {name} inclusion"),
            r.inclusion[0].radius,
            incl,
            t,
        );
    }
    c.close(
        "p3 thm51 radius",
        thm51_region(&p3).unwrap().radius(),
        3.151,
        t,
    );
    c.close(
        "p3 cor61 radius",
        cor61_region(&p3).unwrap().radius(),
        2.507,
        t,
    );
    let (lo, hi) = moduli_extremes(&roots_of(&p3).unwrap());
    c.close("p3 min |z|", lo, 1.075, t);
    c.close("p3 max |z|", hi, 3.554, t);

    let p4 = poly(&P4);
    let b = thm33_bounds(&p4, Choice::Second).unwrap();
    c.close("p4 thm33-2 upper", b.upper, 8.744, t);
    c.close(
        "p4 thm51 radius",
        thm51_region(&p4).unwrap().radius(),
        5.012,
        t,
    );
    let cor61 = cor61_region(&p4).unwrap();
    c.close("p4 cor61 radius", cor61.radius(), 3.552, t);
    c.close(
        "p4 cauchy radius",
        cauchy_radius(p4.coeffs(), 1).unwrap().value,
        9.592,
        t,
    );

    // exactly one zero in a disk disjoint from the other two
    let roots = roots_of(&p4).unwrap();
    let isolated: Vec<usize> = (0..3)
        .filter(|&i| (0..3).all(|j| j == i || cor61.disjoint[i][j]))
        .collect();
    c.check(isolated.len() == 1, || {
        format!("p4 cor61: isolated disks {isolated:?}")
    });
    if let Some(&i) = isolated.first() {
        let inside = roots
            .roots
            .iter()
            .filter(|z| cor61.inclusion[i].contains(**z))
            .count();
        c.check(inside == 1, || {
            format!("p4 cor61: isolated disk holds {inside} oracle roots")
        });
        let certified = cor61
            .counts
            .iter()
            .flatten()
            .any(|g| g.disks == [i] && g.count == 1);
        c.check(certified, || {
            "p4 cor61: no count certificate for the isolated disk".into()
        });
    }
    c.extend(region_violations(&cor61, &roots));
    c
}

const SWEEP_SEED: u64 = 0x5eed_0001;
const SWEEP_SAMPLES: u64 = 1000;

fn soundness_sweep(_: &mut Context) -> Checks {
    let mut c = Checks::default();
    for kind in [ClassKind::I, ClassKind::II] {
        for degree in [5, 10, 40] {
            let class = BenchClass::new(kind, degree, SWEEP_SAMPLES as usize, SWEEP_SEED);
            for i in 0..SWEEP_SAMPLES {
                let p = sample_polynomial(&class, i);
                let roots = match roots_of(&p) {
                    Ok(r) => r,
                    Err(e) => {
                        c.check(false, || {
                            format!("class {kind} n={degree} #{i}: oracle {e}")
                        });
                        continue;
                    }
                };
                for m in Method::ALL {
                    if m.is_interval() {
                        let b = bounds(m, &p).unwrap();
                        c.extend(interval_violations(&b, &roots));
                        continue;
                    }
                    let eps_values: &[f64] = if m.takes_eps() { &EPS_VALUES } else { &[1.0] };
                    for &eps in eps_values {
                        match region(m, &p, eps) {
                            Ok(r) => c.extend(region_violations(&r, &roots)),
                            Err(e) => {
                                c.check(false, || format!("class {kind} n={degree} #{i} {m}: {e}"))
                            }
                        }
                    }
                }
            }
        }
    }
    c
}

/// Reference medians per table, rows by degree, columns in method order.
const REFERENCE_UPPER_I: [[f64; 5]; 2] = [
    [1.465, 4.570, 1.600, 1.479, 1.3553],
    [1.417, 18.828, 2.515, 2.015, 2.072],
];
const REFERENCE_UPPER_II: [[f64; 5]; 2] = [
    [1.626, 2.091, 1.385, 1.365, 1.245],
    [1.629, 2.920, 1.595, 1.516, 1.393],
];
const REFERENCE_SEC4_I: [[f64; 4]; 2] =
    [[2.457, 3.957, 2.808, 2.741], [2.471, 7.235, 3.884, 3.447]];
const REFERENCE_SEC4_II: [[f64; 4]; 2] =
    [[2.413, 2.649, 2.362, 2.359], [2.403, 2.857, 2.463, 2.411]];
const REFERENCE_SEC5_I: [[f64; 3]; 2] = [[1.845, 3.315, 2.052], [1.846, 6.292, 2.884]];
const REFERENCE_SEC5_II: [[f64; 3]; 2] = [[1.845, 2.072, 1.633], [1.854, 2.360, 1.795]];

fn reference_cells(stat: Statistic, kind: ClassKind) -> Vec<&'static [f64]> {
    match (stat, kind) {
        (Statistic::UpperRatio, ClassKind::I) => REFERENCE_UPPER_I.iter().map(|r| &r[..]).collect(),
        (Statistic::UpperRatio, ClassKind::II) => {
            REFERENCE_UPPER_II.iter().map(|r| &r[..]).collect()
        }
        (Statistic::InclusionRadius, ClassKind::I) => {
            REFERENCE_SEC4_I.iter().map(|r| &r[..]).collect()
        }
        (Statistic::InclusionRadius, ClassKind::II) => {
            REFERENCE_SEC4_II.iter().map(|r| &r[..]).collect()
        }
        (Statistic::UnionRadius, ClassKind::I) => REFERENCE_SEC5_I.iter().map(|r| &r[..]).collect(),
        (Statistic::UnionRadius, ClassKind::II) => {
            REFERENCE_SEC5_II.iter().map(|r| &r[..]).collect()
        }
    }
}

/// Relative tolerance per cell. The n = 40 Class II tolerance is not fixed
/// by the reproduction target; it uses the n = 10 value.
fn cell_tolerance(kind: ClassKind, degree: usize) -> f64 {
    match (kind, degree) {
        (ClassKind::I, 40) => 0.20,
        _ => 0.15,
    }
}

fn table_reproduction(ctx: &mut Context) -> Checks {
    let mut c = Checks::default();
    let suite = full_suite(&DEGREES, DEFAULT_SAMPLES, DEFAULT_SEED, 0);

    for table in &suite {
        let reference = reference_cells(table.statistic, table.class);
        for (row, want_row) in table.rows.iter().zip(&reference) {
            let tol = cell_tolerance(table.class, row.degree);
            for ((m, &got), &want) in table.methods.iter().zip(&row.medians).zip(*want_row) {
                c.check((got - want).abs() <= tol * want, || {
                    format!(
                        "table {} n={} {m}: median {got:.4} vs {want} (+-{:.0}%)",
                        table.statistic.table_number(table.class),
                        row.degree,
                        tol * 100.0
                    )
                });
            }
        }
    }

    let get = |stat: Statistic, kind: ClassKind, m: &str, n: usize| -> f64 {
        suite
            .iter()
            .find(|t| t.statistic == stat && t.class == kind)
            .and_then(|t| t.median(m, n))
            .unwrap_or(f64::NAN)
    };

    use ClassKind::{I, II};
    use Statistic::{InclusionRadius as Sec4, UnionRadius as Sec5, UpperRatio as Upper};
    for kind in [I, II] {
        for n in DEGREES {
            let at = |m: &'static str| (m, get(Upper, kind, m, n));
            let ctx = format!("upper ratios class {kind} n={n}");
            for m in ["cauchy", "thm32", "thm33-1", "thm33-2"] {
                less(&mut c, &ctx, at(m), at("ek"));
            }
            less(&mut c, &ctx, at("thm33-1"), at("thm32"));
            less(&mut c, &ctx, at("thm33-2"), at("thm32"));

            let at = |m: &'static str| (m, get(Sec4, kind, m, n));
            let ctx = format!("offset radii class {kind} n={n}");
            less(&mut c, &ctx, at("cor41"), at("thm41"));
            less(&mut c, &ctx, at("thm43"), at("thm41"));

            let at = |m: &'static str| (m, get(Sec5, kind, m, n));
            let ctx = format!("union radii class {kind} n={n}");
            less(&mut c, &ctx, at("cor51"), at("thm51"));
        }
    }
    for n in DEGREES {
        let ctx = format!("class II n={n}");
        let at = |m: &'static str| (m, get(Upper, II, m, n));
        for m in ["cauchy", "ek", "thm32", "thm33-1"] {
            less(&mut c, &ctx, at("thm33-2"), at(m));
        }
        let at = |m: &'static str| (m, get(Sec5, II, m, n));
        less(&mut c, &ctx, at("cor51"), at("cauchy-s2"));

        let ctx = format!("class I n={n}");
        let at = |m: &'static str| (m, get(Sec4, I, m, n));
        for m in ["thm41", "cor41", "thm43"] {
            less(&mut c, &ctx, at("cauchy-s2"), at(m));
        }
        let at = |m: &'static str| (m, get(Sec5, I, m, n));
        for m in ["thm51", "cor51"] {
            less(&mut c, &ctx, at("cauchy-s2"), at(m));
        }
    }
    // the second cubic choice is the better one wherever the tables agree
    let at = |m: &'static str| (m, get(Upper, I, m, 10));
    less(&mut c, "class I n=10", at("thm33-2"), at("thm33-1"));
    // Cauchy radii pull ahead in Class I as the degree grows
    let at = |m: &'static str| (m, get(Upper, I, m, 40));
    for m in ["ek", "thm32", "thm33-1", "thm33-2"] {
        less(&mut c, "class I n=40", at("cauchy"), at(m));
    }
    let gap = |n| get(Upper, I, "ek", n) / get(Upper, I, "cauchy", n);
    c.check(gap(40) > gap(10), || {
        format!("class I ek/cauchy gap {:.3} -> {:.3}", gap(10), gap(40))
    });
    // the quartic multiplier wins over the cubic for Class II at higher degree
    let at = |m: &'static str| (m, get(Sec4, II, m, 40));
    less(&mut c, "class II n=40", at("thm43"), at("cor41"));
    less(&mut c, "class II n=40", at("cauchy-s2"), at("thm43"));

    ctx.suite = Some(suite);
    c
}

fn less(c: &mut Checks, what: &str, (a, x): (&str, f64), (b, y): (&str, f64)) {
    c.check(x < y, || format!("{what}: {a} {x:.4} not below {b} {y:.4}"));
}

fn sample_set() -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = [&P1[..], &P2, &P3, &P4].iter().map(|c| poly(c)).collect();
    for kind in [ClassKind::I, ClassKind::II] {
        for degree in [4, 6, 10, 25] {
            let class = BenchClass::new(kind, degree, 50, 0xacce);
            out.extend((0..50).map(|i| sample_polynomial(&class, i)));
        }
    }
    out
}

fn same_disks(a: &RegionReport, b: &RegionReport) -> bool {
    a.inclusion == b.inclusion && a.exclusion == b.exclusion && a.counts == b.counts
}

fn property_suites(_: &mut Context) -> Checks {
    let mut c = Checks::default();
    let polys = sample_set();
    let tiny = 1e-9;
    let mut disjoint_thm53 = 0;

    for (idx, p) in polys.iter().enumerate() {
        let tag = format!("poly #{idx} (n={})", p.degree());
        c.check(p.reverse().reverse() == *p, || {
            format!("{tag}: reverse involution")
        });

        for m in Method::ALL.into_iter().filter(|m| *m != Method::Cauchy) {
            let (spec, _) = inclusion_multiplier(m, p, 0.5).unwrap();
            let q = multiply(p, &spec);
            for t in [0.3_f64, 0.9, 1.7] {
                let scale: f64 = q
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, x)| x.abs() * t.powi(j as i32))
                    .sum();
                let diff = (q.eval(t) - p.eval(t) * spec.eval(t)).abs();
                c.check(diff <= 1e-12 * scale, || {
                    format!("{tag} {m}: product differs by {diff:e} at t={t}")
                });
            }
            let root = unique_positive_root(&spec).unwrap();
            let positive: Vec<f64> = all_roots(&spec.coeffs())
                .unwrap()
                .roots
                .iter()
                .filter(|z| z.re > 0.0 && z.im.abs() <= 1e-8 * z.norm())
                .map(|z| z.re)
                .collect();
            c.check(positive.len() == 1, || {
                format!("{tag} {m}: oracle finds positive zeros {positive:?}")
            });
            if let [oracle_root] = positive[..] {
                c.relative(
                    &format!("{tag} {m} positive root"),
                    root,
                    oracle_root,
                    1e-10,
                );
            }
        }

        for k in 1..=p.degree().min(4) {
            let s = cauchy_radius(p.coeffs(), k).unwrap().value;
            let below = cauchy_equation_at(p.coeffs(), k, s * (1.0 - tiny));
            let above = cauchy_equation_at(p.coeffs(), k, s * (1.0 + tiny));
            c.check(below < 0.0 && above > 0.0, || {
                format!("{tag}: s_{k} sign witness {below:e} / {above:e}")
            });
        }

        let slack = |x: f64| x * (1.0 + 1e-12);
        let thm41 = thm41_disks(p).unwrap().inclusion[0].radius;
        let thm51 = thm51_region(p).unwrap().radius();
        c.check(thm51 <= slack(thm41), || {
            format!("{tag}: thm51 {thm51} > thm41 {thm41}")
        });
        for eps in EPS_VALUES {
            let r52 = thm52_region(p, eps).unwrap().radius();
            let r42 = thm42_disks(p, eps).unwrap().inclusion[0].radius;
            c.check(r52 <= slack(r42), || {
                format!("{tag}: thm52({eps}) {r52} > thm42 {r42}")
            });
        }
        let r61 = thm61_region(p, 1.0).unwrap().radius();
        let r53 = thm53_region(p).unwrap().radius();
        c.check(r61 <= slack(r53), || {
            format!("{tag}: thm61(1) {r61} > thm53 {r53}")
        });

        let upper = thm33_bounds(p, Choice::Second).unwrap().upper;
        let incl = thm42_disks(p, tiny).unwrap().inclusion[0];
        c.relative(&format!("{tag} thm42(0+)"), incl.max_modulus(), upper, 1e-6);
        let r52 = thm52_region(p, tiny).unwrap().radius();
        c.relative(&format!("{tag} thm52(0+)"), r52, upper, 1e-6);
        let r61 = thm61_region(p, tiny).unwrap().radius();
        let cor51 = thm52_region(p, 1.0).unwrap().radius();
        c.relative(&format!("{tag} thm61(0+)"), r61, cor51, 1e-6);

        let pairs = [
            (thm42_disks(p, 1.0).unwrap(), cor41_disks(p).unwrap()),
            (thm52_region(p, 1.0).unwrap(), cor51_region(p).unwrap()),
            (thm61_region(p, 1.0).unwrap(), cor61_region(p).unwrap()),
        ];
        for (a, b) in &pairs {
            c.check(same_disks(a, b), || {
                format!("{tag}: {} at eps=1 differs from {}", a.theorem, b.theorem)
            });
        }

        let t53 = thm53_region(p).unwrap();
        if t53.counts.is_some() {
            disjoint_thm53 += 1;
            let (c1, c2) = (t53.inclusion[0].center, t53.inclusion[1].center);
            c.check(c1.im == 0.0 && c2.im == 0.0, || {
                format!("{tag}: thm53 complex centers")
            });
            c.check(c2.re < c1.re && c1.re < 0.0, || {
                format!("{tag}: thm53 centers {c1} {c2} out of order")
            });
            c.check(t53.inclusion[0].contains(Complex64::new(0.0, 0.0)), || {
                format!("{tag}: thm53 c1 disk misses the origin")
            });
        }
    }
    c.check(disjoint_thm53 > 0, || {
        "no disjoint thm53 case exercised".into()
    });

    // boundary of the reciprocal exterior disk
    for i in 0..200 {
        let t = f64::from(i);
        let a = Complex64::from_polar(0.1 + 0.05 * t, 0.37 * t);
        let r = (1.01 + 0.02 * t) / a.norm();
        let d = recip_exterior(a, r).unwrap();
        for k in 0..8 {
            let z = d.center + Complex64::from_polar(d.radius, 0.8 * f64::from(k) + 0.1);
            let lhs = (z + a).norm();
            let rhs = a.norm() * r * z.norm();
            c.check((lhs - rhs).abs() <= 1e-9 * lhs.max(rhs), || {
                format!(
                    "recip_exterior({a}, {r}): boundary point {z} off by {:e}",
                    lhs - rhs
                )
            });
        }
        let inside = d.center;
        c.check((inside + a).norm() > a.norm() * r * inside.norm(), || {
            format!("recip_exterior({a}, {r}): center fails the strict inequality")
        });
    }
    c
}

fn determinism(ctx: &mut Context) -> Checks {
    let mut c = Checks::default();
    let first = match ctx.suite.take() {
        Some(s) => s,
        None => full_suite(&DEGREES, DEFAULT_SAMPLES, DEFAULT_SEED, 1),
    };
    let second = full_suite(&DEGREES, DEFAULT_SAMPLES, DEFAULT_SEED, 3);
    let (a, b) = (suite_csv(&first), suite_csv(&second));
    c.check(a == b, || "suite CSV differs between worker counts".into());
    for (x, y) in first.iter().zip(&second) {
        c.check(x.to_csv() == y.to_csv(), || {
            format!("table {} CSV differs", x.statistic.table_number(x.class))
        });
    }
    c
}

type Criterion = (&'static str, fn(&mut Context) -> Checks, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        (
            "reference-value regression",
            reference_values,
            Some(Duration::from_secs(1)),
        ),
        (
            "soundness sweep",
            soundness_sweep,
            Some(Duration::from_secs(60)),
        ),
        (
            "table reproduction",
            table_reproduction,
            Some(Duration::from_secs(300)),
        ),
        ("property suites", property_suites, None),
        ("bench determinism", determinism, None),
    ];
    let mut ctx = Context { suite: None };
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let checks = run(&mut ctx);
        let elapsed = start.elapsed();
        let slow = limit.is_some_and(|l| elapsed > l);
        let ok = checks.failures.is_empty() && !slow;
        println!(
            "criterion {}: {} {name}: {} checks, {} failures, {:.2} s{}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            checks.count,
            checks.failures.len(),
            elapsed.as_secs_f64(),
            if slow { " (over time limit)" } else { "" }
        );
        for f in checks.failures.iter().take(20) {
            println!("    {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

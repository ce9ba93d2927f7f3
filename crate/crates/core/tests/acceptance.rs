//! End-to-end acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails; the process exits nonzero if any criterion is red.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use wright_radii::zeros::hadamard_partial_product;
use wright_radii::*;

const RHOS: [f64; 3] = [0.5, 1.0, 2.0];
const BETAS: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
const JANOWSKI_PAIRS: [(f64, f64); 3] = [(1.0, -1.0), (1.0, 0.0), (0.5, -0.5)];
const RADIUS_TOL: f64 = 1e-9;

// pinned tolerances
const BESSEL_VALUE_TOL: f64 = 1e-10;
const BESSEL_ZERO_TOL: f64 = 1e-8;
const IDENTITY_ROUNDING: f64 = 64.0 * f64::EPSILON;
const HADAMARD_TOL: f64 = 1e-3;
const AGREEMENT_TOL: f64 = 1e-5;
const HALF_PLANE_TOL: f64 = 1e-8;
const ORDER_SLACK: f64 = 1e-9;
const RESCALE_TOL: f64 = 1e-10;

// pinned runtime limits
const LIMIT_FAST: Duration = Duration::from_secs(1);
const LIMIT_ZEROS: Duration = Duration::from_secs(30);
const LIMIT_CROSS: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn grid() -> impl Iterator<Item = WrightParams> {
    RHOS.into_iter()
        .flat_map(|rho| BETAS.into_iter().map(move |beta| WrightParams::new(rho, beta).unwrap()))
}

fn janowski(a: f64, b: f64) -> JanowskiParams {
    JanowskiParams::new(a, b).unwrap()
}

/// Every query of the cross-validation grid.
fn radius_queries() -> Vec<RadiusQuery> {
    let mut out = Vec::new();
    for rk in RadiusKind::ALL {
        for kind in NormalizedKind::ALL {
            for p in grid() {
                let convex = matches!(rk, RadiusKind::LemConvex | RadiusKind::JanConvex);
                if rk.is_janowski() {
                    for (a, b) in JANOWSKI_PAIRS {
                        out.push(RadiusQuery::janowski(kind, p, convex, janowski(a, b)));
                    }
                } else {
                    out.push(RadiusQuery::lemniscate(kind, p, convex));
                }
            }
        }
    }
    out
}

fn certify(q: &RadiusQuery) -> f64 {
    radius_by_certification(q, RADIUS_TOL).unwrap().radius
}

fn within(limit: Duration, elapsed: Duration, pass: bool, detail: String) -> Outcome {
    let ok = elapsed < limit;
    let detail = if ok { detail } else { format!("{detail}; exceeded {limit:?}") };
    Outcome { pass: pass && ok, detail }
}

/// Independent J0 power series.
fn bessel_j0(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..200 {
        term *= q / (k * k) as f64;
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn bessel_reduction() -> Outcome {
    const J0_ZEROS: [f64; 3] = [2.404_825_557_695_773, 5.520_078_110_286_311, 8.653_727_912_911_013];
    let start = Instant::now();
    let p = WrightParams::new(1.0, 1.0).unwrap();
    let mut worst_value: f64 = 0.0;
    for i in 0..50 {
        let r = 5.0 * i as f64 / 49.0;
        let w = wright_eval(&p, Complex64::new(-r * r, 0.0), 1e-15).unwrap().value;
        worst_value = worst_value.max((w.re - bessel_j0(2.0 * r)).abs().max(w.im.abs()));
    }
    let table = positive_zeros(&p, Form::MinusZSquared, 3, 1e-12).unwrap();
    let worst_zero = table.zeros.iter().zip(J0_ZEROS).map(|(l, j)| (l - j / 2.0).abs()).fold(0.0, f64::max);
    let pass = worst_value <= BESSEL_VALUE_TOL && worst_zero <= BESSEL_ZERO_TOL;
    let elapsed = start.elapsed();
    within(LIMIT_FAST, elapsed, pass, format!("value err {worst_value:.2e}, zero err {worst_zero:.2e}, {elapsed:.2?}"))
}

fn analytic_identities() -> Outcome {
    let start = Instant::now();
    let mut worst_ratio: f64 = 0.0;
    for rho in [0.5, 1.0, 2.0] {
        for beta in [1.5, 2.0, 3.0] {
            let p = WrightParams::new(rho, beta).unwrap();
            let shifted = WrightParams::new(rho, beta + rho).unwrap();
            let lowered = WrightParams::new(rho, beta - 1.0).unwrap();
            for i in 0..20 {
                // golden-angle spiral filling |z| <= 5
                let z = Complex64::from_polar(5.0 * ((i as f64 + 0.5) / 20.0).sqrt(), 2.399_963_229_728_653 * i as f64);
                // rounding scales with the sum of term moduli, which is W at |z|
                let magnitude = wright_eval(&p, Complex64::new(z.norm(), 0.0), 1e-15).unwrap().value.re;
                let rounding = IDENTITY_ROUNDING * magnitude.max(1.0) * (1.0 + rho * z.norm() + beta);

                let d = wright_derivative(&p, z, 1, 1e-15).unwrap();
                let s = wright_eval(&shifted, z, 1e-15).unwrap();
                let bound = d.abs_error_bound + s.abs_error_bound + rounding;
                worst_ratio = worst_ratio.max((d.value - s.value).norm() / bound);

                let lhs = wright_eval(&lowered, z, 1e-15).unwrap();
                let w = wright_eval(&p, z, 1e-15).unwrap();
                let rhs = rho * z * s.value + (beta - 1.0) * w.value;
                let bound = lhs.abs_error_bound
                    + rho * z.norm() * s.abs_error_bound
                    + (beta - 1.0) * w.abs_error_bound
                    + rounding;
                worst_ratio = worst_ratio.max((lhs.value - rhs).norm() / bound);
            }
        }
    }
    let elapsed = start.elapsed();
    within(LIMIT_FAST, elapsed, worst_ratio <= 1.0, format!("worst residual/bound {worst_ratio:.2e}, {elapsed:.2?}"))
}

fn zero_completeness() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for p in grid() {
        let t = positive_zeros(&p, Form::MinusZSquared, 5, 1e-12).unwrap();
        for k in 1..=4 {
            let radius = 0.5 * (t.zeros[k - 1] + t.zeros[k]);
            let n = count_zeros_in_disk(&p, Form::MinusZSquared, radius, 512).unwrap();
            if n != 2 * k as i64 {
                bad.push(format!("(rho={}, beta={}, k={k}) counted {n}", p.rho(), p.beta()));
            }
        }
    }
    let elapsed = start.elapsed();
    within(LIMIT_ZEROS, elapsed, bad.is_empty(), format!("{} mismatches {bad:?}, {elapsed:.2?}", bad.len()))
}

fn product_representation() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for p in grid() {
        let t = positive_zeros(&p, Form::MinusZSquared, 80, 1e-12).unwrap();
        let z = Complex64::new(0.6 * t.first(), 0.0);
        let target = base_eval(&p, z, 1e-15).unwrap().value;
        let errors: Vec<f64> = [10, 20, 40, 80]
            .iter()
            .map(|&n| (hadamard_partial_product(&t, z, n).unwrap() - target).norm())
            .collect();
        worst = worst.max(errors[3]);
        let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
        if !decreasing || errors[3] > HADAMARD_TOL {
            bad.push(format!("(rho={}, beta={}) N=80 err {:.2e}", p.rho(), p.beta(), errors[3]));
        }
    }
    let elapsed = start.elapsed();
    within(LIMIT_ZEROS, elapsed, bad.is_empty(), format!("worst N=80 err {worst:.2e}, failing {bad:?}, {elapsed:.2?}"))
}

fn cross_validation() -> Outcome {
    let start = Instant::now();
    let queries = radius_queries();
    let mut findings = 0;
    let mut lemniscate = 0;
    for q in &queries {
        let c = cross_check(q, RADIUS_TOL, AGREEMENT_TOL).unwrap();
        if let Some(f) = c.finding() {
            findings += 1;
            if !q.radius_kind.is_janowski() {
                lemniscate += 1;
            }
            println!("finding: {}", serde_json::to_string(&f).unwrap());
        }
    }
    let elapsed = start.elapsed();
    within(
        LIMIT_CROSS,
        elapsed,
        findings == 0,
        format!("{findings} of {} cells disagree ({lemniscate} lemniscate), {elapsed:.2?}", queries.len()),
    )
}

fn half_plane_specialization() -> Outcome {
    let mut worst: f64 = 0.0;
    for kind in NormalizedKind::ALL {
        for p in grid() {
            let q = RadiusQuery::janowski(kind, p, false, janowski(1.0, -1.0));
            let a = certify(&q);
            let b = radius_half_plane(&q, RADIUS_TOL).unwrap().radius;
            worst = worst.max((a - b).abs());
        }
    }
    Outcome { pass: worst <= HALF_PLANE_TOL, detail: format!("max |delta| {worst:.2e}") }
}

fn orderings() -> Outcome {
    // increasing A at each fixed B
    let ladders: [(f64, &[f64]); 3] = [(-1.0, &[0.0, 0.5, 1.0]), (-0.5, &[0.0, 0.5, 1.0]), (0.0, &[0.5, 1.0])];
    let mut bad = Vec::new();
    for kind in NormalizedKind::ALL {
        for convex in [false, true] {
            for p in grid() {
                let lem = certify(&RadiusQuery::lemniscate(kind, p, convex));
                let disk = certify(&RadiusQuery::janowski(kind, p, convex, janowski(1.0, 0.0)));
                if lem > disk + ORDER_SLACK {
                    bad.push(format!("{kind} {p:?} convex={convex}: lem {lem} > (1,0) {disk}"));
                }
                for (b, ladder) in ladders {
                    let radii: Vec<f64> = ladder
                        .iter()
                        .map(|&a| certify(&RadiusQuery::janowski(kind, p, convex, janowski(a, b))))
                        .collect();
                    if radii.windows(2).any(|w| w[0] > w[1] + ORDER_SLACK) {
                        bad.push(format!("{kind} {p:?} convex={convex} B={b}: {radii:?}"));
                    }
                }
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("{} violations {bad:?}", bad.len()) }
}

fn rescaling_semantics() -> Outcome {
    let p = |rho, beta| WrightParams::new(rho, beta).unwrap();
    let queries = [
        RadiusQuery::lemniscate(NormalizedKind::G, p(1.0, 1.0), false),
        RadiusQuery::lemniscate(NormalizedKind::F, p(0.5, 1.5), true),
        RadiusQuery::lemniscate(NormalizedKind::H, p(2.0, 0.5), false),
        RadiusQuery::janowski(NormalizedKind::G, p(2.0, 2.0), true, janowski(1.0, -1.0)),
        RadiusQuery::janowski(NormalizedKind::F, p(1.0, 0.5), false, janowski(0.5, -0.5)),
        RadiusQuery::janowski(NormalizedKind::H, p(0.5, 1.0), true, janowski(1.0, 0.0)),
    ];
    let mut worst: f64 = 0.0;
    for q in &queries {
        let r = certify(q);
        let original = boundary_sup(q, r, 1e-8).unwrap().sup;
        let rescaled = boundary_sup(&q.rescaled(r), 1.0, 1e-8).unwrap().sup;
        worst = worst.max((original - rescaled).abs());
    }
    Outcome { pass: worst <= RESCALE_TOL, detail: format!("max |delta| {worst:.2e} over {} queries", queries.len()) }
}

fn equation_registry() -> Outcome {
    let registry = EquationRegistry::builtin();
    let (mut cells, mut bad, mut lemniscate) = (0, 0, 0);
    for eq in registry.iter() {
        let convex = matches!(eq.radius_kind, RadiusKind::LemConvex | RadiusKind::JanConvex);
        for p in grid() {
            let queries: Vec<RadiusQuery> = if eq.radius_kind.is_janowski() {
                JANOWSKI_PAIRS.iter().map(|&(a, b)| RadiusQuery::janowski(eq.kind, p, convex, janowski(a, b))).collect()
            } else {
                vec![RadiusQuery::lemniscate(eq.kind, p, convex)]
            };
            for q in queries {
                cells += 1;
                let agree = registry
                    .solve(&q, RADIUS_TOL)
                    .map_or(false, |s| (s.radius - certify(&q)).abs() <= AGREEMENT_TOL);
                if !agree {
                    bad += 1;
                    if !eq.radius_kind.is_janowski() {
                        lemniscate += 1;
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("{} equations, {bad} of {cells} cells disagree ({lemniscate} lemniscate)", registry.len()),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("bessel reduction", bessel_reduction),
        ("analytic identities", analytic_identities),
        ("zero completeness", zero_completeness),
        ("product representation", product_representation),
        ("radius cross-validation", cross_validation),
        ("half-plane specialization", half_plane_specialization),
        ("orderings", orderings),
        ("rescaled radius semantics", rescaling_semantics),
        ("equation registry", equation_registry),
    ];
    let mut red = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {verdict} ({})", i + 1, o.detail);
        if !o.pass {
            red += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - red, criteria.len());
    if red > 0 {
        std::process::exit(1);
    }
}

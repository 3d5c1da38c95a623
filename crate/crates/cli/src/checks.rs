//! The acceptance battery behind `check-all`: golden examples and property
//! suites with pinned tolerances. The integration test target runs exactly
//! these checks, one per criterion.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use spherotrop_core::exact_arith::{rat, rat_int, PuiseuxSeries, Rational, SeriesOrd, Truncation};
use spherotrop_core::grobner_fan::{
    groebner_fan_enumerate, newton_polytope, normal_fan_of_polytope,
};
use spherotrop_core::numeric_amoeba::{snf_svd_limit_check, spherical_log, NumericPoint};
use spherotrop_core::poly_engine::{
    buchberger_reduced, ideal_member, poly_divide, s_polynomial, Exponent, Polynomial, RingMode,
    TermOrder,
};
use spherotrop_core::snf_series::{
    invariant_factors_elimination, invariant_factors_minors, is_unimodular_over_o, SeriesMatrix,
    SnfError,
};
use spherotrop_core::spherical_core::{
    model_tropicalize, sumihiro_estimate, ModelPoint, SphericalModel,
};
use spherotrop_core::spherical_trop::{
    gl2_angle_r1_r2, gl2_borel_trop, gl2_ray_r1, sl2_trop_hypersurface, Cone2Set, RaySet1D,
};
use spherotrop_core::trop_classical::{fundamental_check, TorusPoint};

use crate::CliError;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{}: {} ({} ms) - {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.millis,
            self.detail
        )
    }
}

fn finish(name: &str, start: Instant, pass: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        pass,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

fn plane_poly(terms: &[(&[i64], i64)]) -> Polynomial<Rational> {
    Polynomial::from_terms(
        2,
        RingMode::Poly,
        terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
    )
}

fn figure_matrix() -> SeriesMatrix {
    let t = PuiseuxSeries::monomial(rat_int(1), rat_int(1));
    SeriesMatrix::new(vec![
        vec![&t + &PuiseuxSeries::one(), t.clone()],
        vec![t, PuiseuxSeries::zero()],
    ])
    .expect("square")
}

/// Criterion 1: punctured-plane tropical sets with a 1 s budget.
pub fn check_sl2_hypersurfaces() -> CheckResult {
    let start = Instant::now();
    let f1 = plane_poly(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
    let f2 = plane_poly(&[(&[1, 0], 1), (&[0, 1], -1)]);
    let r1 = sl2_trop_hypersurface(&f1);
    let r2 = sl2_trop_hypersurface(&f2);
    let ok = matches!(&r1, Ok(r) if r.combined == RaySet1D::NONPOS)
        && matches!(&r2, Ok(r) if r.combined == RaySet1D::ALL);
    let within_budget = start.elapsed().as_secs_f64() < 1.0;
    finish(
        "1 punctured-plane tropical sets",
        start,
        ok && within_budget,
        format!(
            "x+y-1 -> {}, x-y -> {}",
            r1.map(|r| r.combined.to_string())
                .unwrap_or_else(|e| e.to_string()),
            r2.map(|r| r.combined.to_string())
                .unwrap_or_else(|e| e.to_string())
        ),
    )
}

/// Criterion 2: the GL(2) Borel-chart hypersurfaces, exact set equality.
pub fn check_gl2_borel() -> CheckResult {
    let start = Instant::now();
    let c_minus_1 = Polynomial::from_terms(
        4,
        RingMode::Poly,
        [
            (vec![0, 0, 1, 0], rat_int(1)),
            (vec![0, 0, 0, 0], rat_int(-1)),
        ],
    );
    let d_minus_1 = Polynomial::from_terms(
        4,
        RingMode::Poly,
        [
            (vec![0, 0, 0, 1], rat_int(1)),
            (vec![0, 0, 0, 0], rat_int(-1)),
        ],
    );
    let z1 = gl2_borel_trop(&c_minus_1);
    let z2 = gl2_borel_trop(&d_minus_1);
    let ok = matches!(&z1, Ok(s) if s.set_eq(&Cone2Set::from_pieces(vec![gl2_ray_r1()])))
        && matches!(&z2, Ok(s) if s.set_eq(&Cone2Set::from_pieces(vec![gl2_angle_r1_r2()])));
    let within_budget = start.elapsed().as_secs_f64() < 1.0;
    finish(
        "2 GL(2) Borel-chart sets",
        start,
        ok && within_budget,
        "c-1 = ray R1, d-1 = angle(R1, R2)".to_string(),
    )
}

fn random_series_matrix(rng: &mut ChaCha8Rng, n: usize) -> SeriesMatrix {
    let entries: Vec<Vec<PuiseuxSeries>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_range(0..5) == 0 {
                        PuiseuxSeries::zero()
                    } else {
                        let nterms = rng.gen_range(1..3usize);
                        PuiseuxSeries::from_terms(
                            1,
                            (0..nterms).map(|_| {
                                (rng.gen_range(-3..=3i64), rat_int(rng.gen_range(1..5i64)))
                            }),
                            Truncation::Exact,
                        )
                    }
                })
                .collect()
        })
        .collect();
    SeriesMatrix::new(entries).expect("square")
}

/// Criterion 3: two-route Smith agreement on 200 seeded matrices and the
/// determinantal-divisor golden value, 30 s budget.
pub fn check_snf_agreement() -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0usize;
    let mut failures = Vec::new();
    while checked < 200 {
        let n = rng.gen_range(2..=4usize);
        let a = random_series_matrix(&mut rng, n);
        let det_ord = match a.det().ord() {
            Ok(SeriesOrd::Finite(q)) => q,
            _ => continue, // singular draw: not in the population
        };
        let minors = match invariant_factors_minors(&a) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("minors failed: {e}"));
                break;
            }
        };
        // elimination with a precision retry ladder
        let mut elim = None;
        for depth in [16i64, 32, 64] {
            match invariant_factors_elimination(&a, &rat_int(depth)) {
                Ok(d) => {
                    elim = Some(d);
                    break;
                }
                Err(SnfError::PrecisionLoss { .. }) => continue,
                Err(e) => {
                    failures.push(format!("elimination failed: {e}"));
                    break;
                }
            }
        }
        let Some(elim) = elim else {
            failures.push("elimination precision ladder exhausted".to_string());
            break;
        };
        if minors != elim.factors {
            failures.push(format!("disagreement: {minors:?} vs {:?}", elim.factors));
            break;
        }
        let total: Rational = minors.iter().fold(rat_int(0), |s, q| s + q);
        if total != det_ord {
            failures.push("sum law violated".to_string());
            break;
        }
        if !elim.verify(&a) {
            failures.push("A != A1 tau A2".to_string());
            break;
        }
        checked += 1;
    }
    let golden = invariant_factors_minors(&figure_matrix())
        .map(|v| v == vec![rat_int(2), rat_int(0)])
        .unwrap_or(false);
    let within_budget = start.elapsed().as_secs_f64() < 30.0;
    let pass = failures.is_empty() && checked == 200 && golden && within_budget;
    finish(
        "3 Smith normal form two-route agreement",
        start,
        pass,
        if failures.is_empty() {
            format!("{checked} matrices agree; [[t+1,t],[t,0]] -> (2, 0)")
        } else {
            failures.join("; ")
        },
    )
}

/// Criterion 4: invariant factors versus singular values on the worked
/// matrix, deviation <= 0.05 at t = 1e-4 and nonincreasing; monomial
/// diagonals deviate only at machine level. 5 s budget.
pub fn check_svd_limit() -> CheckResult {
    let start = Instant::now();
    let schedule = [1e-1, 1e-2, 1e-3, 1e-4];
    let report = match snf_svd_limit_check(&figure_matrix(), &schedule) {
        Ok(r) => r,
        Err(e) => return finish("4 SVD limit law", start, false, e.to_string()),
    };
    let diag = SeriesMatrix::diag_monomials(&[rat_int(3), rat_int(1)]);
    let diag_report = match snf_svd_limit_check(&diag, &schedule) {
        Ok(r) => r,
        Err(e) => return finish("4 SVD limit law", start, false, e.to_string()),
    };
    let diag_exact = diag_report.rows.iter().all(|r| r.deviation <= 1e-9);
    let pass = report.factors == vec![rat_int(2), rat_int(0)]
        && report.final_deviation <= 0.05
        && report.monotone
        && diag_exact
        && start.elapsed().as_secs_f64() < 5.0;
    finish(
        "4 SVD limit law",
        start,
        pass,
        format!(
            "deviations {:?}, final {:.5}, diag(t^3, t) exact to 1e-9: {}",
            report
                .rows
                .iter()
                .map(|r| (r.t, (r.deviation * 1e5).round() / 1e5))
                .collect::<Vec<_>>(),
            report.final_deviation,
            diag_exact
        ),
    )
}

/// Brute-force tropical-line oracle: the minimum of `(w1, w2, 0)` is
/// attained at least twice.
fn on_tropical_line(w: &[Rational]) -> bool {
    let zero = rat_int(0);
    let vals = [w[0].clone(), w[1].clone(), zero];
    let m = vals.iter().min().unwrap();
    vals.iter().filter(|v| *v == m).count() >= 2
}

/// Criterion 5: fundamental-theorem harness on the line `x + y + 1` over a
/// quarter-integer grid plus 20 sampled curves, 60 s budget.
pub fn check_fundamental_line() -> CheckResult {
    let start = Instant::now();
    let gens = crate::commands::bundled_line_ideal();
    // quarter-integer grid on [-3, 3]^2
    let mut grid = Vec::new();
    for a in -12..=12i64 {
        for b in -12..=12i64 {
            grid.push(vec![rat(a, 4), rat(b, 4)]);
        }
    }
    let curves: Vec<TorusPoint> = crate::commands::bundled_line_curves(20, 7);
    let report = match fundamental_check(&gens, &curves, &grid, &rat_int(20)) {
        Ok(r) => r,
        Err(e) => return finish("5 fundamental theorem harness", start, false, e.to_string()),
    };
    // membership-positive grid points must be exactly the brute-force line
    let mut mismatches = 0usize;
    for g in &report.grid {
        if g.membership != on_tropical_line(&g.weight) {
            mismatches += 1;
        }
    }
    let curves_ok = report.curves.iter().all(|c| c.membership);
    let pass = report.pass && mismatches == 0 && curves_ok && start.elapsed().as_secs_f64() < 60.0;
    finish(
        "5 fundamental theorem harness",
        start,
        pass,
        format!(
            "{} grid points match the pair-argmin oracle, {} curves pass membership",
            report.grid.len(),
            report.curves.len()
        ),
    )
}

fn random_homogeneous(rng: &mut ChaCha8Rng, nvars: usize, deg: i64) -> Polynomial<Rational> {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(2..5usize) {
        let mut e = vec![0i64; nvars];
        let mut left = deg;
        for slot in e.iter_mut().take(nvars - 1) {
            let a = rng.gen_range(0..=left);
            *slot = a;
            left -= a;
        }
        e[nvars - 1] = left;
        terms.push((e, rat_int(rng.gen_range(1..5i64))));
    }
    Polynomial::from_terms(nvars, RingMode::Poly, terms)
}

/// Criterion 6: Groebner engine properties on 50 seeded homogeneous ideals:
/// presentation invariance, S-pairs reduce to zero, exact division identity.
pub fn check_groebner_properties() -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2718);
    let mut failures = Vec::new();
    for trial in 0..50 {
        let nvars = rng.gen_range(2..=3usize);
        let ord = TermOrder::grevlex(nvars);
        let ngens = rng.gen_range(1..=3usize);
        let gens: Vec<Polynomial<Rational>> = (0..ngens)
            .map(|_| {
                let deg = rng.gen_range(1..=3i64);
                random_homogeneous(&mut rng, nvars, deg)
            })
            .collect();
        let gb = match buchberger_reduced(&gens, &ord) {
            Ok(b) => b,
            Err(e) => {
                failures.push(format!("trial {trial}: {e}"));
                break;
            }
        };
        // presentation invariance: shuffle and rescale
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let scaled: Vec<Polynomial<Rational>> = shuffled
            .iter()
            .map(|g| g.scale(&rat_int(rng.gen_range(1..7i64))))
            .collect();
        match buchberger_reduced(&scaled, &ord) {
            Ok(gb2) if gb2 == gb => {}
            Ok(_) => {
                failures.push(format!("trial {trial}: basis depends on presentation"));
                break;
            }
            Err(e) => {
                failures.push(format!("trial {trial}: {e}"));
                break;
            }
        }
        // every S-polynomial of the output reduces to zero
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = match s_polynomial(&gb[i], &gb[j], &ord) {
                    Ok(s) => s,
                    Err(e) => {
                        failures.push(format!("trial {trial}: {e}"));
                        break;
                    }
                };
                if s.is_zero() {
                    continue;
                }
                match poly_divide(&s, &gb, &ord) {
                    Ok((_, r)) if r.is_zero() => {}
                    Ok(_) => {
                        failures.push(format!("trial {trial}: S-pair {i},{j} has a remainder"));
                        break;
                    }
                    Err(e) => {
                        failures.push(format!("trial {trial}: {e}"));
                        break;
                    }
                }
            }
        }
        // exact division identity on a random combination + noise
        let mut f = Polynomial::zero(nvars, RingMode::Poly);
        for g in &gens {
            let deg = rng.gen_range(0..=2i64);
            f = f.add(&g.mul(&random_homogeneous(&mut rng, nvars, deg)));
        }
        if f.is_zero() {
            continue;
        }
        match poly_divide(&f, &gb, &ord) {
            Ok((q, r)) => {
                let mut recomposed = r.clone();
                for (qi, gi) in q.iter().zip(&gb) {
                    recomposed = recomposed.add(&qi.mul(gi));
                }
                if recomposed != f {
                    failures.push(format!("trial {trial}: division identity broken"));
                }
                if !r.is_zero() {
                    failures.push(format!("trial {trial}: member had a remainder"));
                }
                match ideal_member(&f, &gb, &ord) {
                    Ok(true) => {}
                    _ => failures.push(format!("trial {trial}: membership denied")),
                }
            }
            Err(e) => failures.push(format!("trial {trial}: {e}")),
        }
        if !failures.is_empty() {
            break;
        }
    }
    let pass = failures.is_empty();
    finish(
        "6 Groebner engine properties",
        start,
        pass,
        if pass {
            "50 seeded ideals: unique reduced bases, S-pairs reduce, division exact".to_string()
        } else {
            failures.join("; ")
        },
    )
}

/// Criterion 7: the Groebner fan of a principal homogeneous ideal equals
/// the normal fan of the Newton polytope, 10 seeded polynomials, 60 s.
pub fn check_fan_vs_newton() -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1618);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 10 && failures.is_empty() {
        let nvars = rng.gen_range(2..=3usize);
        let deg = rng.gen_range(1..=4i64);
        let f = random_homogeneous(&mut rng, nvars, deg);
        if f.is_zero() || f.num_terms() < 2 {
            continue;
        }
        done += 1;
        let fan = match groebner_fan_enumerate(std::slice::from_ref(&f)) {
            Ok(fan) => fan,
            Err(e) => {
                failures.push(format!("enumeration failed: {e}"));
                break;
            }
        };
        let verts = match newton_polytope(&f) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("hull failed: {e}"));
                break;
            }
        };
        let support: Vec<Exponent> = f.support().cloned().collect();
        let normal = normal_fan_of_polytope(&support, &verts, nvars);
        if fan.cones.len() != normal.len() {
            failures.push(format!(
                "cone count {} vs vertex count {}",
                fan.cones.len(),
                normal.len()
            ));
            break;
        }
        for fc in &fan.cones {
            if !normal.iter().any(|nc| nc.set_eq(&fc.cone)) {
                failures.push("missing normal-fan cone".to_string());
                break;
            }
        }
        if !fan.is_valid() {
            failures.push("fan axioms violated".to_string());
        }
    }
    let within_budget = start.elapsed().as_secs_f64() < 60.0;
    let pass = failures.is_empty() && done == 10 && within_budget;
    finish(
        "7 Groebner fan equals Newton normal fan",
        start,
        pass,
        if failures.is_empty() {
            format!("{done} principal homogeneous ideals match")
        } else {
            failures.join("; ")
        },
    )
}

/// Criterion 8: the generic-translate estimator on 100 seeded Puiseux
/// pairs matches `min(ord c1, ord c2)`, with certificates covering at
/// least half the samples in at least 95 cases.
pub fn check_sumihiro() -> CheckResult {
    let start = Instant::now();
    let model = SphericalModel::Sl2PuncturedPlane;
    let y = Polynomial::term(2, RingMode::Poly, vec![0, 1], rat_int(1));
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    let samples = 16usize;
    let mut value_failures = 0usize;
    let mut short_certificates = 0usize;
    for trial in 0..100u64 {
        let mk = |rng: &mut ChaCha8Rng| {
            let nterms = rng.gen_range(1..3usize);
            PuiseuxSeries::from_terms(
                rng.gen_range(1..3u64),
                (0..nterms).map(|_| {
                    let mut c = 0i64;
                    while c == 0 {
                        c = rng.gen_range(-4..=4i64);
                    }
                    (rng.gen_range(-5..9i64), rat_int(c))
                }),
                Truncation::Exact,
            )
        };
        let c1 = mk(&mut rng);
        let c2 = mk(&mut rng);
        let point = ModelPoint::Sl2(c1, c2);
        let expected = model_tropicalize(&model, &point).expect("valid point");
        match sumihiro_estimate(&model, &point, &y, samples, 5000 + trial, &rat_int(24)) {
            Ok(est) => {
                if est.value != expected[0] {
                    value_failures += 1;
                }
                if est.certificate * 2 < samples {
                    short_certificates += 1;
                }
            }
            Err(_) => value_failures += 1,
        }
    }
    let pass = value_failures == 0 && short_certificates <= 5;
    finish(
        "8 generic-translate estimator",
        start,
        pass,
        format!(
            "100 pairs, {value_failures} value mismatches, {short_certificates} short certificates (reported, tolerated up to 5)"
        ),
    )
}

/// Criterion 9: invariance suite: exact unimodular invariance of the GL(n)
/// tropicalization and unitary invariance of the numeric logarithm map.
pub fn check_invariance() -> CheckResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut failures = Vec::new();
    let base_matrix = figure_matrix();
    let base = invariant_factors_minors(&base_matrix).expect("finite");
    for trial in 0..20 {
        // random unimodular-over-O factors from unit triangular pieces
        let mk_unit = |rng: &mut ChaCha8Rng| {
            let upper = PuiseuxSeries::from_terms(
                1,
                [(rng.gen_range(0..3i64), rat_int(rng.gen_range(-3..4i64)))],
                Truncation::Exact,
            );
            let lower = PuiseuxSeries::from_terms(
                1,
                [(rng.gen_range(0..3i64), rat_int(rng.gen_range(-3..4i64)))],
                Truncation::Exact,
            );
            SeriesMatrix::elementary(2, 0, 1, upper).mul(&SeriesMatrix::elementary(2, 1, 0, lower))
        };
        let g1 = mk_unit(&mut rng);
        let g2 = mk_unit(&mut rng);
        if !is_unimodular_over_o(&g1).unwrap_or(false)
            || !is_unimodular_over_o(&g2).unwrap_or(false)
        {
            failures.push(format!("trial {trial}: factor not unimodular"));
            break;
        }
        let moved = g1.mul(&base_matrix).mul(&g2);
        match invariant_factors_minors(&moved) {
            Ok(v) if v == base => {}
            Ok(v) => {
                failures.push(format!("trial {trial}: factors moved to {v:?}"));
                break;
            }
            Err(e) => {
                failures.push(format!("trial {trial}: {e}"));
                break;
            }
        }
    }
    // unitary invariance of the numeric log within 1e-8
    let model = SphericalModel::Gln(2);
    let t = 0.05f64;
    let numeric =
        spherotrop_core::numeric_amoeba::ComplexMatrix::from_real(&base_matrix.eval_f64(t))
            .expect("small");
    let reference =
        spherical_log(&model, &NumericPoint::Gln(numeric.clone()), t).expect("nondegenerate");
    for trial in 0..10 {
        let u = random_unitary(&mut rng, 2);
        let v = random_unitary(&mut rng, 2);
        let moved = u.mul(&numeric).mul(&v);
        match spherical_log(&model, &NumericPoint::Gln(moved), t) {
            Ok(l) => {
                let dev = l
                    .iter()
                    .zip(&reference)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                if dev > 1e-8 {
                    failures.push(format!("trial {trial}: unitary deviation {dev:e}"));
                    break;
                }
            }
            Err(e) => {
                failures.push(format!("trial {trial}: {e}"));
                break;
            }
        }
    }
    let pass = failures.is_empty();
    finish(
        "9 invariance suite",
        start,
        pass,
        if pass {
            "20 unimodular motions exact, 10 unitary motions within 1e-8".to_string()
        } else {
            failures.join("; ")
        },
    )
}

#[allow(clippy::needless_range_loop)]
fn random_unitary(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> spherotrop_core::numeric_amoeba::ComplexMatrix {
    use num_complex::Complex64;
    loop {
        let raw: Vec<Vec<Complex64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect()
            })
            .collect();
        let mut cols: Vec<Vec<Complex64>> = (0..n)
            .map(|j| (0..n).map(|i| raw[i][j]).collect())
            .collect();
        let mut ok = true;
        for j in 0..n {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let sub = proj * cols[k][i];
                    cols[j][i] -= sub;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-6 {
                ok = false;
                break;
            }
            for i in 0..n {
                cols[j][i] /= norm;
            }
        }
        if ok {
            let entries: Vec<Vec<Complex64>> = (0..n)
                .map(|i| (0..n).map(|j| cols[j][i]).collect())
                .collect();
            return spherotrop_core::numeric_amoeba::ComplexMatrix::new(entries).expect("small");
        }
    }
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_sl2_hypersurfaces(),
        check_gl2_borel(),
        check_snf_agreement(),
        check_svd_limit(),
        check_fundamental_line(),
        check_groebner_properties(),
        check_fan_vs_newton(),
        check_sumihiro(),
        check_invariance(),
    ]
}

/// Prints one line per criterion and fails with exit code 4 when any
/// criterion fails.
pub fn cmd_check_all() -> Result<Vec<CheckResult>, CliError> {
    let results = run_all();
    for r in &results {
        println!("{}", r.line());
    }
    if results.iter().all(|r| r.pass) {
        Ok(results)
    } else {
        let failed: Vec<&str> = results
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.name.as_str())
            .collect();
        Err(CliError::check_failed(format!(
            "failed criteria: {}",
            failed.join(", ")
        )))
    }
}

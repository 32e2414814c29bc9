//! Named verification suites over elaborated definitions, plus the bundled
//! corpus each suite runs on when no input file is supplied.
//!
//! Every suite maps each definition to one or more [`CheckResult`]s; a
//! definition a suite cannot meaningfully check (or whose checker reports an
//! input error) yields an inconclusive result rather than aborting the run.
//! Checks execute in declared order with seeds derived per definition, so a
//! run is a pure function of (definitions, config).

use gutzmer::unity::{circle_extrema, discrete_cauchy_derivative, polygonal_mean_value};
use gutzmer::verify::{
    clunie_jack, detect_polynomial_degree, extract_coefficient_estimates, verify_anti_calculus,
    verify_boundary_max, verify_cauchy_bounds, verify_double_series, verify_laurent_uniqueness,
    verify_open_image, verify_parseval, verify_schwarz, DifferentiableSubject,
};
use gutzmer::verify::{classify_critical_point, ConfigValue};
use gutzmer::{
    structure, CheckResult, ComplexScalar, LaurentSeries, Report, SeriesFamily, Tolerances,
    TruncatedSeries, ZERO_THRESHOLD,
};
use thiserror::Error;

use crate::elab::{elaborate, Value};
use crate::expr::parse_series_expr;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`; expected one of {}", SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error("truncation order must be at least 1")]
    OrderTooSmall,
    #[error("sample count must be at least 8")]
    TooFewSamples,
    #[error("radii must form a non-empty, strictly increasing, positive sequence")]
    BadRadii,
}

/// Everything a suite run depends on besides the definitions themselves.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: String,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    pub radii: Vec<f64>,
    pub tolerances: Tolerances,
    /// Random targets drawn per open-image check.
    pub target_count: usize,
    /// Coarse polar grid resolution seeding the open-image point solves.
    pub solve_grid: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suite: "all".into(),
            order: 32,
            samples: 1024,
            seed: 42,
            radii: vec![1.0, 2.0, 4.0],
            tolerances: Tolerances::default(),
            target_count: 16,
            solve_grid: 128,
        }
    }
}

/// Suite names in execution order; `all` runs them all.
pub const SUITE_NAMES: [&str; 16] = [
    "parseval",
    "cauchy",
    "mean-value",
    "discrete-cauchy",
    "extract",
    "liouville",
    "schwarz",
    "clunie-jack",
    "saddle",
    "anti-calculus",
    "boundary-max",
    "open-image",
    "local-rep",
    "injectivity",
    "double-series",
    "laurent",
];

/// The default corpus, grouped by suite. Each entry elaborates at the
/// configured order; the expressions are chosen so that every check passes
/// under the default configuration.
const BUNDLED: [(&str, &[(&str, &str)]); 16] = [
    ("parseval", &[
        ("quadratic", "1 + 0.5*z + 0.25*z^2"),
        ("entire", "exp"),
        ("rotated_cubic", "0.25*z^3 - 2i*z"),
    ]),
    ("cauchy", &[
        ("affine", "1 + 2i*z"),
        ("entire", "exp"),
        ("cubic", "0.25*z^3 - z"),
    ]),
    ("mean-value", &[
        ("shifted_square", "z^2 + 1"),
        ("entire", "exp"),
        ("mixed_cubic", "z^3 - 2i*z"),
    ]),
    ("discrete-cauchy", &[
        ("odd_cubic", "z^3 + 2*z"),
        ("entire", "exp"),
        ("quartic", "1 - z^4"),
    ]),
    ("extract", &[
        ("quadratic", "1 + 2i*z + 0.25*z^2"),
        ("sparse", "z^4 - 0.5*z^8"),
    ]),
    ("liouville", &[
        ("odd_cubic", "z^3 + 2*z"),
        ("sextic", "1 - z + 0.5*z^6"),
        ("entire", "exp"),
    ]),
    ("schwarz", &[
        ("identity", "z"),
        ("square", "z^2"),
        ("contraction", "0.9*z"),
        ("blend", "0.5*z + 0.5*z^2"),
    ]),
    ("clunie-jack", &[
        ("cube", "z^3"),
        ("blend", "0.5*z + 0.5*z^2"),
        ("entire", "exp"),
        ("affine", "0.5 + 0.5*z"),
    ]),
    ("saddle", &[
        ("lifted_square", "1 + z^2"),
        ("double_zero", "z^2"),
        ("translation", "5 + z"),
        ("cosine", "cos"),
    ]),
    ("anti-calculus", &[
        ("entire", "exp"),
        ("identity", "z"),
        ("translation", "5 + z"),
    ]),
    ("boundary-max", &[
        ("lifted_square", "z^2 + 1"),
        ("entire", "exp"),
        ("affine", "1 + z"),
    ]),
    ("open-image", &[
        ("square", "z^2"),
        ("translation", "5 + z"),
        ("odd_cubic", "z^3 + 2*z"),
        ("entire", "exp"),
    ]),
    ("local-rep", &[
        ("entire", "exp"),
        ("even_led", "1 + 4*z^2 + z^3"),
        ("double_zero", "z^2 + z^3"),
    ]),
    ("injectivity", &[
        ("entire", "exp"),
        ("damped", "z - 0.25*z^2"),
        ("translation", "5 + z"),
    ]),
    ("double-series", &[
        ("entire", "exp"),
        ("quadratic", "1 - z + 3*z^2"),
        ("odd_entire", "sin"),
    ]),
    ("laurent", &[
        ("balanced", "laurent(1; 0, 1)"),
        ("mixed", "laurent(2i, 0.5; 1, 0, 0.25)"),
        ("taylor_only", "laurent(; 1, 2, 3)"),
    ]),
];

/// Parses and elaborates the bundled corpus for one suite.
pub fn bundled_definitions(suite: &str, order: usize) -> Vec<(String, Value)> {
    let entries = BUNDLED
        .iter()
        .find(|(name, _)| *name == suite)
        .map(|(_, entries)| *entries)
        .unwrap_or(&[]);
    entries
        .iter()
        .map(|(name, text)| {
            let expr = parse_series_expr(text).expect("bundled expression parses");
            let value = elaborate(&expr, order).expect("bundled expression elaborates");
            (name.to_string(), value)
        })
        .collect()
}

/// SplitMix64 finalizer; decorrelates per-definition seeds drawn from the
/// run seed.
fn mix_seed(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs the configured suite. `definitions` comes from the user's input
/// file; `None` selects the bundled corpus of each suite.
pub fn run_suite(
    config: &SuiteConfig,
    definitions: Option<&[(String, Value)]>,
) -> Result<Report, SuiteError> {
    if config.order < 1 {
        return Err(SuiteError::OrderTooSmall);
    }
    if config.samples < 8 {
        return Err(SuiteError::TooFewSamples);
    }
    let increasing = config.radii.windows(2).all(|w| w[0] < w[1]);
    if config.radii.is_empty() || !increasing || config.radii[0] <= 0.0 {
        return Err(SuiteError::BadRadii);
    }

    let selected: Vec<&str> = if config.suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&config.suite.as_str()) {
        vec![config.suite.as_str()]
    } else {
        return Err(SuiteError::UnknownSuite(config.suite.clone()));
    };

    let mut results = Vec::new();
    for suite in selected {
        let bundled;
        let defs: &[(String, Value)] = match definitions {
            Some(defs) => defs,
            None => {
                bundled = bundled_definitions(suite, config.order);
                &bundled
            }
        };
        for (idx, (name, value)) in defs.iter().enumerate() {
            let seed = mix_seed(config.seed ^ mix_seed(idx as u64));
            results.extend(run_checks(suite, name, value, seed, config));
        }
    }

    Ok(Report {
        suite: config.suite.clone(),
        seed: config.seed,
        config: config_snapshot(config, definitions.is_some()),
        results,
    })
}

fn config_snapshot(config: &SuiteConfig, from_file: bool) -> Vec<(String, ConfigValue)> {
    vec![
        ("order".into(), ConfigValue::Unsigned(config.order as u64)),
        ("samples".into(), ConfigValue::Unsigned(config.samples as u64)),
        ("radii".into(), ConfigValue::RealList(config.radii.clone())),
        ("tolerance_algebraic".into(), ConfigValue::Real(config.tolerances.algebraic)),
        ("tolerance_sampled".into(), ConfigValue::Real(config.tolerances.sampled)),
        ("target_count".into(), ConfigValue::Unsigned(config.target_count as u64)),
        ("solve_grid".into(), ConfigValue::Unsigned(config.solve_grid as u64)),
        (
            "definitions".into(),
            ConfigValue::Text(if from_file { "file" } else { "bundled" }.into()),
        ),
    ]
}

/// Evaluates a series in local coordinates about its center, so circle
/// samplers centered at the origin see the function the coefficients
/// describe.
fn eval_local(s: &TruncatedSeries) -> impl Fn(ComplexScalar) -> ComplexScalar + '_ {
    move |u| s.evaluate(s.center() + u)
}

fn eval_laurent(l: &LaurentSeries) -> impl Fn(ComplexScalar) -> ComplexScalar + '_ {
    move |z| l.evaluate(z).unwrap_or(ComplexScalar::new(f64::NAN, 0.0))
}

fn needs_series(check: &str) -> CheckResult {
    CheckResult::inconclusive(check, "this suite checks one-sided series definitions")
}

fn needs_laurent(check: &str) -> CheckResult {
    CheckResult::inconclusive(check, "this suite checks laurent definitions")
}

fn settle(check: &str, outcome: Result<CheckResult, gutzmer::VerifyError>) -> CheckResult {
    match outcome {
        Ok(mut result) => {
            // Checkers name results after the property; the suite/definition
            // path is strictly more informative in a multi-check report.
            result.name = check.to_string();
            result
        }
        Err(err) => CheckResult::inconclusive(check, format!("checker rejected the input: {err}")),
    }
}

fn run_checks(
    suite: &str,
    def_name: &str,
    value: &Value,
    seed: u64,
    config: &SuiteConfig,
) -> Vec<CheckResult> {
    let tol = &config.tolerances;
    let check = format!("{suite}/{def_name}");
    match suite {
        "parseval" | "cauchy" => {
            let mut out = Vec::new();
            for &r in &config.radii {
                let name = format!("{check}@r={r}");
                let coeffs: Vec<(i64, ComplexScalar)> = match value {
                    Value::Series(s) => s.indexed_coeffs().collect(),
                    Value::Laurent(l) => l.indexed_coeffs().collect(),
                };
                let outcome = match value {
                    Value::Series(s) => {
                        if suite == "parseval" {
                            verify_parseval(&coeffs, eval_local(s), r, config.samples, tol)
                        } else {
                            verify_cauchy_bounds(&coeffs, eval_local(s), r, config.samples, tol)
                        }
                    }
                    Value::Laurent(l) => {
                        if suite == "parseval" {
                            verify_parseval(&coeffs, eval_laurent(l), r, config.samples, tol)
                        } else {
                            verify_cauchy_bounds(&coeffs, eval_laurent(l), r, config.samples, tol)
                        }
                    }
                };
                out.push(settle(&name, outcome));
            }
            out
        }
        "mean-value" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let n = s.degree().unwrap_or(0).max(1);
            let z = ComplexScalar::new(config.radii[0], 0.0);
            let outcome = polygonal_mean_value(s, s.center(), z, n).map(|mean| {
                let scale = s.evaluate(s.center()).norm().max(1.0);
                CheckResult::from_slack(&check, -(mean.residual / scale), tol.algebraic)
                    .with_witness(gutzmer::Witness::new(s.center(), mean.mean))
                    .with_note(format!("vertex family size 2n with n = {n}"))
            });
            vec![settle(&check, outcome.map_err(Into::into))]
        }
        "discrete-cauchy" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let n = s.degree().unwrap_or(0).max(1);
            let z = ComplexScalar::new(config.radii[0], 0.0);
            let mut worst = -1.0f64;
            let mut offender = (0usize, ComplexScalar::new(0.0, 0.0));
            for j in 0..=n.min(s.order()) {
                match discrete_cauchy_derivative(s, s.center(), z, j, n) {
                    Ok(est) => {
                        let want = s.coeff(j);
                        let rel = (est - want).norm() / want.norm().max(1.0);
                        if rel > worst {
                            worst = rel;
                            offender = (j, est);
                        }
                    }
                    Err(err) => return vec![settle(&check, Err(err.into()))],
                }
            }
            vec![
                CheckResult::from_slack(&check, -worst, tol.algebraic)
                    .with_witness(gutzmer::Witness::new(
                        ComplexScalar::new(offender.0 as f64, 0.0),
                        offender.1,
                    ))
                    .with_note(format!("derivative orders 0..={} at 2n nodes, n = {n}", n.min(s.order())))
                    .with_note("witness point encodes the worst derivative order"),
            ]
        }
        "extract" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let cap = s.degree().unwrap_or(0).min(8);
            let outcome = extract_coefficient_estimates(&eval_local(s), cap, 0.1).map(|ests| {
                let mut worst = -1.0f64;
                let mut offender = (0usize, ComplexScalar::new(0.0, 0.0));
                for (n, est) in ests.iter().enumerate() {
                    let want = s.coeff(n);
                    let rel = (est - want).norm() / want.norm().max(1.0);
                    if rel > worst {
                        worst = rel;
                        offender = (n, *est);
                    }
                }
                CheckResult::from_slack(&check, -worst, tol.sampled)
                    .with_witness(gutzmer::Witness::new(
                        ComplexScalar::new(offender.0 as f64, 0.0),
                        offender.1,
                    ))
                    .with_note(format!("alternating extraction of orders 0..={cap} at radius 0.1"))
                    .with_note("witness point encodes the worst coefficient index")
            });
            vec![settle(&check, outcome)]
        }
        "liouville" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let Some(claimed) = s.degree() else {
                return vec![CheckResult::inconclusive(
                    &check,
                    "the zero series has no degree to detect",
                )];
            };
            let growth: f64 = s.coeffs().iter().map(|c| c.norm()).sum();
            let outcome = detect_polynomial_degree(
                eval_local(s),
                growth,
                growth,
                claimed,
                &config.radii,
                claimed + 4,
                tol,
            );
            vec![settle(&check, outcome)]
        }
        "schwarz" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            vec![settle(&check, verify_schwarz(s, config.samples, tol))]
        }
        "clunie-jack" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let alpha = ComplexScalar::new(1.0, 0.0);
            let subject = DifferentiableSubject::Series(s);
            vec![settle(&check, clunie_jack(&subject, alpha, tol))]
        }
        "saddle" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            vec![settle(&check, classify_critical_point(s, s.center(), tol))]
        }
        "anti-calculus" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let subject = DifferentiableSubject::Series(s);
            vec![settle(
                &check,
                verify_anti_calculus(&subject, config.radii[0], config.samples, tol),
            )]
        }
        "boundary-max" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            vec![settle(
                &check,
                verify_boundary_max(eval_local(s), config.radii[0], config.samples, config.samples, tol),
            )]
        }
        "open-image" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            vec![settle(
                &check,
                verify_open_image(
                    eval_local(s),
                    config.radii[0],
                    config.target_count,
                    config.solve_grid,
                    seed,
                    tol,
                ),
            )]
        }
        "local-rep" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let outcome = structure::local_representation(s).map(|rep| {
                let rebuilt = rep.reconstruct(s.order());
                let mut worst = -1.0f64;
                let mut offender = (0usize, ComplexScalar::new(0.0, 0.0));
                for n in 0..=s.order() {
                    let want = s.coeff(n);
                    let rel = (rebuilt.coeff(n) - want).norm() / want.norm().max(1.0);
                    if rel > worst {
                        worst = rel;
                        offender = (n, rebuilt.coeff(n));
                    }
                }
                CheckResult::from_slack(&check, -worst, tol.algebraic)
                    .with_witness(gutzmer::Witness::new(
                        ComplexScalar::new(offender.0 as f64, 0.0),
                        offender.1,
                    ))
                    .with_note(format!("zero multiplicity {}", rep.multiplicity))
                    .with_note("witness point encodes the worst coefficient index")
            });
            vec![settle(&check, outcome.map_err(Into::into))]
        }
        "injectivity" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            vec![settle(&check, injectivity_check(&check, s, tol))]
        }
        "double-series" => {
            let Value::Series(s) = value else { return vec![needs_series(&check)] };
            let members: Vec<TruncatedSeries> = (0..=s.order())
                .map(|n| {
                    let mut coeffs = vec![ComplexScalar::new(0.0, 0.0); s.order() + 1];
                    coeffs[n] = s.coeff(n);
                    TruncatedSeries::new(s.center(), coeffs).expect("monomial slice is valid")
                })
                .collect();
            let outcome = SeriesFamily::new(members)
                .map_err(Into::into)
                .and_then(|family| verify_double_series(&family, config.radii[0], 1, tol));
            vec![settle(&check, outcome)]
        }
        "laurent" => {
            let Value::Laurent(l) = value else { return vec![needs_laurent(&check)] };
            laurent_checks(&check, l, config)
        }
        other => vec![CheckResult::inconclusive(
            format!("{other}/{def_name}"),
            format!("suite `{other}` has no runner"),
        )],
    }
}

/// Certifies the returned injectivity radius by sampling difference
/// quotients inside the certified disk: each must stay at or above half the
/// derivative magnitude at the center, the lower bound the radius proves.
fn injectivity_check(
    check: &str,
    s: &TruncatedSeries,
    tol: &Tolerances,
) -> Result<CheckResult, gutzmer::VerifyError> {
    let rho = structure::injectivity_radius(s)?;
    let target = s.coeff(1).norm() / 2.0;
    let sample_radius = if rho.is_finite() { rho } else { 1.0 };
    let mut points = vec![s.center()];
    for ring in [0.3, 0.7, 1.0] {
        for k in 0..8 {
            let theta = k as f64 * std::f64::consts::TAU / 8.0;
            points.push(s.center() + ComplexScalar::from_polar(ring * sample_radius, theta));
        }
    }
    let mut worst = f64::INFINITY;
    let mut witness = (points[0], points[0]);
    for (a, u) in points.iter().enumerate() {
        for v in points.iter().skip(a + 1) {
            let gap = (u - v).norm();
            if gap == 0.0 {
                continue;
            }
            let quotient = (s.evaluate(*u) - s.evaluate(*v)).norm() / gap;
            if quotient < worst {
                worst = quotient;
                witness = (*u, *v);
            }
        }
    }
    let radius_note = if rho.is_finite() {
        format!("certified radius {rho}")
    } else {
        "certified radius unbounded; sampled at radius 1".into()
    };
    Ok(CheckResult::from_slack(check, worst - target, tol.sampled * target.max(1.0))
        .with_witness(gutzmer::Witness::new(witness.0, s.evaluate(witness.0)))
        .with_witness(gutzmer::Witness::new(witness.1, s.evaluate(witness.1)))
        .with_note(radius_note))
}

/// Two checks per Laurent definition: the coefficient-energy sandwich at
/// each configured radius inside the annulus, and the coefficient ceiling
/// implied by the sampled circle maxima.
fn laurent_checks(check: &str, l: &LaurentSeries, config: &SuiteConfig) -> Vec<CheckResult> {
    let tol = &config.tolerances;
    let (inner, outer) = l.annulus();
    let radii: Vec<f64> = config.radii.iter().copied().filter(|r| *r > inner && *r < outer).collect();
    if radii.is_empty() {
        return vec![CheckResult::inconclusive(
            format!("{check}/energy"),
            "no configured radius lies inside the annulus",
        )];
    }
    let coeffs: Vec<(i64, ComplexScalar)> = l.indexed_coeffs().collect();
    let mut out = Vec::new();
    let mut sup = 0.0f64;
    for &r in &radii {
        let name = format!("{check}/energy@r={r}");
        out.push(settle(
            &name,
            verify_parseval(&coeffs, eval_laurent(l), r, config.samples, tol),
        ));
        if let Ok(extrema) = circle_extrema(eval_laurent(l), r, config.samples) {
            sup = sup.max(extrema.max_modulus);
        }
    }
    let name = format!("{check}/coefficient-ceiling");
    let ceiling = 2.0 * sup.max(ZERO_THRESHOLD);
    out.push(settle(&name, verify_laurent_uniqueness(l, &radii, ceiling, tol)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gutzmer::Verdict;

    #[test]
    fn bundled_corpus_is_wired_for_every_suite() {
        for suite in SUITE_NAMES {
            let defs = bundled_definitions(suite, 8);
            assert!(!defs.is_empty(), "suite {suite} has no bundled definitions");
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let config = SuiteConfig { suite: "nope".into(), ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config, None), Err(SuiteError::UnknownSuite(_))));
    }

    #[test]
    fn config_bounds_are_enforced() {
        let config = SuiteConfig { order: 0, ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config, None), Err(SuiteError::OrderTooSmall)));
        let config = SuiteConfig { samples: 4, ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config, None), Err(SuiteError::TooFewSamples)));
        let config = SuiteConfig { radii: vec![2.0, 1.0], ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config, None), Err(SuiteError::BadRadii)));
    }

    #[test]
    fn mean_value_on_the_shifted_square_passes_tightly() {
        let config = SuiteConfig { suite: "mean-value".into(), ..SuiteConfig::default() };
        let defs = vec![(
            "square".to_string(),
            elaborate(&parse_series_expr("z^2 + 1").unwrap(), 32).unwrap(),
        )];
        let report = run_suite(&config, Some(&defs)).unwrap();
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.results[0].verdict, Verdict::Pass);
        assert!(report.results[0].residual.abs() < 1e-14);
    }

    #[test]
    fn schwarz_suite_classifies_the_square_as_a_rotated_monomial() {
        let config = SuiteConfig { suite: "schwarz".into(), ..SuiteConfig::default() };
        let defs = vec![(
            "square".to_string(),
            elaborate(&parse_series_expr("z^2").unwrap(), 16).unwrap(),
        )];
        let report = run_suite(&config, Some(&defs)).unwrap();
        assert_eq!(report.results[0].verdict, Verdict::Pass);
        assert!(report.results[0].notes.iter().any(|n| n.contains("monomial")));
    }

    #[test]
    fn mismatched_definitions_go_inconclusive_not_fatal() {
        let config = SuiteConfig { suite: "schwarz".into(), ..SuiteConfig::default() };
        let defs = vec![(
            "two_sided".to_string(),
            elaborate(&parse_series_expr("laurent(1; 0, 1)").unwrap(), 16).unwrap(),
        )];
        let report = run_suite(&config, Some(&defs)).unwrap();
        assert_eq!(report.results[0].verdict, Verdict::Inconclusive);
    }

    #[test]
    fn seeds_differ_per_definition_but_are_stable() {
        let config = SuiteConfig { suite: "open-image".into(), ..SuiteConfig::default() };
        let report_a = run_suite(&config, None).unwrap();
        let report_b = run_suite(&config, None).unwrap();
        assert_eq!(report_a, report_b);
    }

    #[test]
    fn full_bundled_run_has_no_failures_or_gaps() {
        let config = SuiteConfig::default();
        let report = run_suite(&config, None).unwrap();
        let (pass, fail, inconclusive) = report.summary();
        assert!(pass > 0);
        let problems: Vec<&str> = report
            .results
            .iter()
            .filter(|r| r.verdict != Verdict::Pass)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!((fail, inconclusive), (0, 0), "non-passing checks: {problems:?}");
    }
}

//! Command implementations: evaluate, analyze, linear algebra, verify, and
//! the bundled reproduction run. All output is deterministic for fixed inputs
//! and flags.

use std::fs;
use std::path::{Path, PathBuf};

use tropnev_core::curve::{self, verify_dependence_witness};
use tropnev_core::harness::{
    self, cc410_report, complete_hyperplane_identity, fmt_report, general_smt_report,
    growth_indicator, meromorphic_smt_report, product_to_sum_check, smt_casorati_report,
    smt_main_report, truncated_counterexample, GrowthClass, ReportTable, Verdict,
};
use tropnev_core::linalg::{
    check_balance, cramer_permanents, cramer_upper_bound, general_position,
    tropical_determinant, tmat_mul,
};
use tropnev_core::scalar::{Rat, TropScalar};
use tropnev_core::suites::{all_suites, SuiteOutcome};

use crate::csv::{render_decimal, render_rat, table_csv};
use crate::scenario::{
    parse_rational, Check, Expectation, GridSpec, ScenarioDocument,
};

/// Exit codes: success / verification failure / usage-or-parse error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const BUNDLED_SCENARIOS: &[(&str, &str)] = &[
    ("example_2_4", include_str!("../scenarios/example_2_4.scn")),
    ("example_3_9", include_str!("../scenarios/example_3_9.scn")),
    ("example_3_13", include_str!("../scenarios/example_3_13.scn")),
    ("general_position_tp2", include_str!("../scenarios/general_position_tp2.scn")),
    ("example_1_5", include_str!("../scenarios/example_1_5.scn")),
    ("example_1_9", include_str!("../scenarios/example_1_9.scn")),
    ("example_5_7", include_str!("../scenarios/example_5_7.scn")),
    ("complete_identity", include_str!("../scenarios/complete_identity.scn")),
    ("coordinate_plus_complete", include_str!("../scenarios/coordinate_plus_complete.scn")),
];

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub scenario: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckResult {
    fn row(&self) -> String {
        format!(
            "{:<48} {:<14} {:<14} {}",
            format!("{}/{}", self.scenario, self.check),
            self.expected,
            self.actual,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

fn verdict_matches(expected: Expectation, v: Verdict) -> bool {
    matches!(
        (expected, v),
        (Expectation::Holds, Verdict::HoldsEventually)
            | (Expectation::Fails, Verdict::FailsEventually)
            | (Expectation::Inconclusive, Verdict::WindowInconclusive)
    )
}

fn verdict_name(v: Verdict) -> String {
    format!("{}", v)
}

struct CheckRun {
    results: Vec<CheckResult>,
    tables: Vec<(String, ReportTable)>,
}

/// Runs every declared check of a parsed document.
fn run_checks(doc: &ScenarioDocument, force_truncate: bool) -> CheckRun {
    let mut results = Vec::new();
    let mut tables: Vec<(String, ReportTable)> = Vec::new();
    let scenario_name = doc.name.clone();
    let truncate = force_truncate || doc.truncation;

    let mut push = |check: &str, expected: String, actual: String, pass: bool| {
        results.push(CheckResult {
            scenario: scenario_name.clone(),
            check: check.to_string(),
            expected,
            actual,
            pass,
        });
    };

    for check in &doc.checks {
        match check {
            Check::Det { matrix, expected } => {
                let label = format!("det {}", matrix);
                match doc.matrix(matrix) {
                    None => push(&label, format!("{}", expected), "missing matrix".into(), false),
                    Some(m) => match tropical_determinant(m) {
                        Ok(cert) => push(
                            &label,
                            format!("{}", expected),
                            format!("{}", cert.value),
                            cert.value == *expected,
                        ),
                        Err(e) => push(&label, format!("{}", expected), e.to_string(), false),
                    },
                }
            }
            Check::Singular { matrix, expected } => {
                let label = format!("singular {}", matrix);
                match doc.matrix(matrix).map(tropical_determinant) {
                    Some(Ok(cert)) => push(
                        &label,
                        expected.to_string(),
                        cert.is_singular().to_string(),
                        cert.is_singular() == *expected,
                    ),
                    Some(Err(e)) => push(&label, expected.to_string(), e.to_string(), false),
                    None => push(&label, expected.to_string(), "missing matrix".into(), false),
                }
            }
            Check::DetMul { a, b, expected } => {
                let label = format!("detmul {} {}", a, b);
                match (doc.matrix(a), doc.matrix(b)) {
                    (Some(ma), Some(mb)) => {
                        let run = tmat_mul(ma, mb).and_then(|c| {
                            let dc = tropical_determinant(&c)?;
                            let da = tropical_determinant(ma)?;
                            let db = tropical_determinant(mb)?;
                            Ok((dc.value, da.value.tmul(&db.value)))
                        });
                        match run {
                            Ok((dc, dab)) => {
                                let pass = dc == *expected && dab <= dc;
                                push(
                                    &label,
                                    format!("{} and product bound", expected),
                                    format!("{} (bound {})", dc, dab),
                                    pass,
                                );
                            }
                            Err(e) => {
                                push(&label, format!("{}", expected), e.to_string(), false)
                            }
                        }
                    }
                    _ => push(&label, format!("{}", expected), "missing matrix".into(), false),
                }
            }
            Check::Product { a, b, expected } => {
                let label = format!("product {} {}", a, b);
                match (doc.matrix(a), doc.matrix(b), doc.matrix(expected)) {
                    (Some(ma), Some(mb), Some(mc)) => match tmat_mul(ma, mb) {
                        Ok(c) => push(
                            &label,
                            expected.clone(),
                            if c == *mc { expected.clone() } else { "mismatch".into() },
                            c == *mc,
                        ),
                        Err(e) => push(&label, expected.clone(), e.to_string(), false),
                    },
                    _ => push(&label, expected.clone(), "missing matrix".into(), false),
                }
            }
            Check::CramerBounds { matrix, vector, expected } => {
                let label = format!("cramer {} {}", matrix, vector);
                match (doc.matrix(matrix), doc.vector(vector)) {
                    (Some(m), Some(v)) => match cramer_upper_bound(m, v) {
                        Ok(bound) => {
                            let balanced = check_balance(m, &bound, v).unwrap_or(false);
                            let pass = bound == *expected && balanced;
                            push(
                                &label,
                                fmt_scalars(expected),
                                format!("{} (balanced {})", fmt_scalars(&bound), balanced),
                                pass,
                            );
                        }
                        Err(e) => push(&label, fmt_scalars(expected), e.to_string(), false),
                    },
                    _ => push(&label, fmt_scalars(expected), "missing data".into(), false),
                }
            }
            Check::CramerPermanents { matrix, vector, expected } => {
                let label = format!("cramer_permanents {} {}", matrix, vector);
                match (doc.matrix(matrix), doc.vector(vector)) {
                    (Some(m), Some(v)) => match cramer_permanents(m, v) {
                        Ok(certs) => {
                            let values: Vec<TropScalar> =
                                certs.iter().map(|c| c.value.clone()).collect();
                            push(
                                &label,
                                fmt_scalars(expected),
                                fmt_scalars(&values),
                                values == *expected,
                            );
                        }
                        Err(e) => push(&label, fmt_scalars(expected), e.to_string(), false),
                    },
                    _ => push(&label, fmt_scalars(expected), "missing data".into(), false),
                }
            }
            Check::CramerSingular { matrix, vector, expected } => {
                let label = format!("cramer_singular {} {}", matrix, vector);
                match (doc.matrix(matrix), doc.vector(vector)) {
                    (Some(m), Some(v)) => match cramer_permanents(m, v) {
                        Ok(certs) => {
                            let flags: Vec<bool> =
                                certs.iter().map(|c| c.is_singular()).collect();
                            push(
                                &label,
                                format!("{:?}", expected),
                                format!("{:?}", flags),
                                flags == *expected,
                            );
                        }
                        Err(e) => push(&label, format!("{:?}", expected), e.to_string(), false),
                    },
                    _ => push(&label, format!("{:?}", expected), "missing data".into(), false),
                }
            }
            Check::GeneralPosition { expected } => {
                let vectors: Vec<Vec<TropScalar>> =
                    doc.hyperplanes.iter().map(|(_, h)| h.coefficients().to_vec()).collect();
                let n = vectors.first().map(|v| v.len().saturating_sub(1)).unwrap_or(0);
                match general_position(&vectors, n) {
                    Ok(gp) => {
                        push("general_position", expected.to_string(), gp.to_string(), gp == *expected)
                    }
                    Err(e) => push("general_position", expected.to_string(), e.to_string(), false),
                }
            }
            Check::Witness { name, expected } => {
                let label = format!("witness {}", name);
                match doc.witness(name) {
                    None => push(&label, expected.to_string(), "missing witness".into(), false),
                    Some(w) => {
                        let fns: Option<Vec<_>> =
                            w.functions.iter().map(|n| doc.function(n).cloned()).collect();
                        match fns {
                            None => {
                                push(&label, expected.to_string(), "missing function".into(), false)
                            }
                            Some(fns) => {
                                match verify_dependence_witness(&fns, &w.alpha, w.window.clone()) {
                                    Ok(v) => push(
                                        &label,
                                        expected.to_string(),
                                        v.to_string(),
                                        v == *expected,
                                    ),
                                    Err(e) => {
                                        push(&label, expected.to_string(), e.to_string(), false)
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Check::Nondegenerate { expected } => match doc.curve() {
                Ok(c) => match curve::nondegenerate_default(&c) {
                    Ok(v) => {
                        push("nondegenerate", expected.to_string(), v.to_string(), v == *expected)
                    }
                    Err(e) => push("nondegenerate", expected.to_string(), e.to_string(), false),
                },
                Err(e) => push("nondegenerate", expected.to_string(), e, false),
            },
            Check::FmtConstant => match doc.scenario().and_then(|sc| {
                fmt_report(&sc).map_err(|e| e.to_string())
            }) {
                Ok(report) => {
                    let constants: Vec<String> =
                        report.constants.iter().map(render_rat).collect();
                    for (i, t) in report.tables.into_iter().enumerate() {
                        tables.push((format!("{}__fmt_h{}", scenario_name, i + 1), t));
                    }
                    push("fmt", "constant".into(), format!("constant ({})", constants.join("; ")), true);
                }
                Err(e) => push("fmt", "constant".into(), e, false),
            },
            Check::SmtMain { expected } => {
                run_slope_check(doc, "smt_main", *expected, &mut push, &mut tables, |sc| {
                    smt_main_report(sc).map_err(|e| e.to_string())
                })
            }
            Check::SmtCasorati { expected } => {
                run_slope_check(doc, "smt_casorati", *expected, &mut push, &mut tables, |sc| {
                    smt_casorati_report(sc).map_err(|e| e.to_string())
                })
            }
            Check::CasoratiCounting { expected } => {
                run_slope_check(doc, "casorati_counting", *expected, &mut push, &mut tables, |sc| {
                    harness::casorati_counting_check(sc).map_err(|e| e.to_string())
                })
            }
            Check::ProductToSum { expected } => match doc.scenario() {
                Ok(sc) => match product_to_sum_check(&sc) {
                    Ok(report) => {
                        tables.push((format!("{}__product_to_sum", scenario_name), report.table));
                        push(
                            "product_to_sum",
                            expected.to_string(),
                            format!("{} (constant {})", report.holds, render_rat(&report.constant)),
                            report.holds == *expected,
                        );
                    }
                    Err(e) => push("product_to_sum", expected.to_string(), e.to_string(), false),
                },
                Err(e) => push("product_to_sum", expected.to_string(), e, false),
            },
            Check::CompleteIdentity { hyperplane, expected } => {
                let label = format!("complete_identity {}", hyperplane);
                let run = || -> Result<harness::SlopeReport, String> {
                    let c = doc.curve()?;
                    let h = doc
                        .hyperplane(hyperplane)
                        .ok_or_else(|| format!("unknown hyperplane {}", hyperplane))?;
                    let grid = doc.grid_for(&c);
                    complete_hyperplane_identity(&c, h, &grid).map_err(|e| e.to_string())
                };
                match run() {
                    Ok(report) => {
                        let pass = verdict_matches(*expected, report.verdict.verdict);
                        tables.push((
                            format!("{}__complete_identity_{}", scenario_name, hyperplane),
                            report.table,
                        ));
                        push(
                            &label,
                            expected.to_string(),
                            verdict_name(report.verdict.verdict),
                            pass,
                        );
                    }
                    Err(e) => push(&label, expected.to_string(), e, false),
                }
            }
            Check::GeneralSmt { expected } => {
                run_slope_check(doc, "general_smt", *expected, &mut push, &mut tables, |sc| {
                    general_smt_report(sc).map_err(|e| e.to_string())
                })
            }
            Check::MeromorphicSmt { function, expected } => {
                let label = format!("meromorphic_smt {}", function);
                match doc.function(function) {
                    None => push(&label, expected.to_string(), "missing function".into(), false),
                    Some(f) => {
                        let grid = grid_for_function(doc, f);
                        if truncate {
                            match truncated_counterexample(f, &doc.values, &grid) {
                                Ok(report) => {
                                    let pass = verdict_matches(*expected, report.verdict.verdict);
                                    tables.push((
                                        format!("{}__meromorphic_smt_truncated", scenario_name),
                                        report.table,
                                    ));
                                    push(
                                        &label,
                                        expected.to_string(),
                                        format!("{} (truncated)", verdict_name(report.verdict.verdict)),
                                        pass,
                                    );
                                }
                                Err(e) => push(&label, expected.to_string(), e.to_string(), false),
                            }
                        } else {
                            match meromorphic_smt_report(f, &doc.values, &grid) {
                                Ok(report) => {
                                    let pass = verdict_matches(*expected, report.main.verdict);
                                    tables.push((
                                        format!("{}__meromorphic_smt", scenario_name),
                                        report.table,
                                    ));
                                    push(
                                        &label,
                                        expected.to_string(),
                                        verdict_name(report.main.verdict),
                                        pass,
                                    );
                                }
                                Err(e) => push(&label, expected.to_string(), e.to_string(), false),
                            }
                        }
                    }
                }
            }
            Check::Truncated { function, expected } => {
                let label = format!("truncated {}", function);
                match doc.function(function) {
                    None => push(&label, expected.to_string(), "missing function".into(), false),
                    Some(f) => {
                        let grid = grid_for_function(doc, f);
                        match truncated_counterexample(f, &doc.values, &grid) {
                            Ok(report) => {
                                let pass = verdict_matches(*expected, report.verdict.verdict);
                                tables.push((
                                    format!("{}__truncated", scenario_name),
                                    report.table,
                                ));
                                push(
                                    &label,
                                    expected.to_string(),
                                    format!(
                                        "{} (T slope {}, rhs slope {})",
                                        verdict_name(report.verdict.verdict),
                                        render_rat(&report.verdict.lhs_tail_slope),
                                        render_rat(&report.verdict.rhs_tail_slope)
                                    ),
                                    pass,
                                );
                            }
                            Err(e) => push(&label, expected.to_string(), e.to_string(), false),
                        }
                    }
                }
            }
            Check::Growth { expected_subnormal } => {
                let expected_name =
                    if *expected_subnormal { "subnormal" } else { "not-subnormal" };
                match doc.curve() {
                    Ok(c) => {
                        let grid = doc.grid_for(&c);
                        match growth_indicator(&c, &grid) {
                            Ok(report) => {
                                let actual_subnormal =
                                    report.classification == GrowthClass::Subnormal;
                                push(
                                    "growth",
                                    expected_name.into(),
                                    format!("{}", report.classification),
                                    actual_subnormal == *expected_subnormal,
                                );
                            }
                            Err(e) => push("growth", expected_name.into(), e.to_string(), false),
                        }
                    }
                    Err(e) => push("growth", expected_name.into(), e, false),
                }
            }
            Check::GrowthMinFinal { bound } => match doc.curve() {
                Ok(c) => {
                    let grid = doc.grid_for(&c);
                    match growth_indicator(&c, &grid) {
                        Ok(report) => {
                            let last = report.samples.last().map(|(_, v)| *v).unwrap_or(0.0);
                            let b = rat_to_f64(bound);
                            push(
                                "growth_min_final",
                                format!("> {}", render_rat(bound)),
                                format!("{:.6}", last),
                                last > b,
                            );
                        }
                        Err(e) => push("growth_min_final", render_rat(bound), e.to_string(), false),
                    }
                }
                Err(e) => push("growth_min_final", render_rat(bound), e, false),
            },
            Check::Cc410 { require_equality } => {
                let expected_name = if *require_equality { "equality" } else { "holds" };
                match doc.scenario() {
                    Ok(sc) => match cc410_report(&sc) {
                        Ok(report) => {
                            let both_hold = report.lower.verdict == Verdict::HoldsEventually
                                && report.upper.verdict == Verdict::HoldsEventually;
                            let pass = if *require_equality {
                                both_hold
                                    && report.lambda == 0
                                    && matches!(
                                        &report.equality,
                                        Some(eq) if eq.verdict == Verdict::HoldsEventually
                                    )
                            } else {
                                both_hold
                            };
                            tables.push((format!("{}__cc410", scenario_name), report.table));
                            push(
                                "cc410",
                                expected_name.into(),
                                format!(
                                    "lower {}, upper {}, lambda* {}, lambda {}{}",
                                    verdict_name(report.lower.verdict),
                                    verdict_name(report.upper.verdict),
                                    report.lambda_star,
                                    report.lambda,
                                    match &report.equality {
                                        Some(eq) =>
                                            format!(", equality {}", verdict_name(eq.verdict)),
                                        None => String::new(),
                                    }
                                ),
                                pass,
                            );
                        }
                        Err(e) => push("cc410", expected_name.into(), e.to_string(), false),
                    },
                    Err(e) => push("cc410", expected_name.into(), e, false),
                }
            }
            Check::Ddg { hyperplanes, expected } => {
                run_ddg(doc, hyperplanes, *expected, false, &mut push)
            }
            Check::DdgStar { hyperplanes, expected } => {
                run_ddg(doc, hyperplanes, *expected, true, &mut push)
            }
        }
    }
    CheckRun { results, tables }
}

fn run_slope_check<F>(
    doc: &ScenarioDocument,
    name: &str,
    expected: Expectation,
    push: &mut impl FnMut(&str, String, String, bool),
    tables: &mut Vec<(String, ReportTable)>,
    run: F,
) where
    F: Fn(&harness::Scenario) -> Result<harness::SlopeReport, String>,
{
    match doc.scenario() {
        Ok(sc) => match run(&sc) {
            Ok(report) => {
                let pass = verdict_matches(expected, report.verdict.verdict);
                tables.push((format!("{}__{}", doc.name, name), report.table));
                push(
                    name,
                    expected.to_string(),
                    format!(
                        "{} (lhs slope {}, rhs slope {})",
                        verdict_name(report.verdict.verdict),
                        render_rat(&report.verdict.lhs_tail_slope),
                        render_rat(&report.verdict.rhs_tail_slope)
                    ),
                    pass,
                );
            }
            Err(e) => push(name, expected.to_string(), e, false),
        },
        Err(e) => push(name, expected.to_string(), e, false),
    }
}

fn run_ddg(
    doc: &ScenarioDocument,
    names: &[String],
    expected: usize,
    star: bool,
    push: &mut impl FnMut(&str, String, String, bool),
) {
    let label = if star {
        format!("ddg_star {}", names.join(" "))
    } else {
        format!("ddg {}", names.join(" "))
    };
    let run = || -> Result<usize, String> {
        let c = doc.curve()?;
        let hs: Vec<_> = if names.is_empty() {
            doc.hyperplanes.iter().map(|(_, h)| h.clone()).collect()
        } else {
            names
                .iter()
                .map(|n| {
                    doc.hyperplane(n)
                        .cloned()
                        .ok_or_else(|| format!("unknown hyperplane {}", n))
                })
                .collect::<Result<_, _>>()?
        };
        if star {
            curve::ddg_star(&hs, &c).map_err(|e| e.to_string())
        } else {
            curve::ddg(&hs, &c).map_err(|e| e.to_string())
        }
    };
    match run() {
        Ok(v) => push(&label, expected.to_string(), v.to_string(), v == expected),
        Err(e) => push(&label, expected.to_string(), e, false),
    }
}

fn fmt_scalars(v: &[TropScalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| format!("{}", s)).collect();
    format!("({})", parts.join(", "))
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Grid for function-level checks: the document grid if explicit, else the
/// default grid induced by the function's breakpoints.
fn grid_for_function(doc: &ScenarioDocument, f: &tropnev_core::PLFunction) -> Vec<Rat> {
    match &doc.grid {
        GridSpec::Points(p) => p.clone(),
        GridSpec::Geometric { from, to, count } => harness::geometric_grid(from, to, *count),
        GridSpec::Default => {
            use num_traits::Zero;
            let top = Rat::from_integer(4.into())
                * (f.max_breakpoint_magnitude().unwrap_or_else(Rat::zero)
                    + Rat::from_integer(1.into()));
            harness::geometric_grid(&Rat::from_integer(1.into()), &top, 64)
        }
    }
}

fn load_document(path: &Path) -> Result<ScenarioDocument, String> {
    let src = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "scenario".to_string());
    crate::scenario::parse_scenario(&name, &src).map_err(|errs| {
        let mut msg = format!("{}: {} validation error(s)\n", path.display(), errs.len());
        for e in errs {
            msg.push_str(&format!("  {}\n", e));
        }
        msg
    })
}

fn apply_overrides(
    doc: &mut ScenarioDocument,
    grid: &Option<String>,
    shift: &Option<String>,
) -> Result<(), String> {
    if let Some(g) = grid {
        let parts: Vec<&str> = g.split(':').collect();
        if parts.len() != 3 {
            return Err("--grid expects from:to:count".into());
        }
        let from = parse_rational(parts[0]).ok_or("bad --grid from")?;
        let to = parse_rational(parts[1]).ok_or("bad --grid to")?;
        let count: usize = parts[2].parse().map_err(|_| "bad --grid count")?;
        if count < 2 || from >= to {
            return Err("--grid expects from < to and count >= 2".into());
        }
        doc.grid = GridSpec::Geometric { from, to, count };
    }
    if let Some(s) = shift {
        use num_traits::Zero;
        let c = parse_rational(s).ok_or("bad --shift-c")?;
        if c.is_zero() {
            return Err("--shift-c must be nonzero".into());
        }
        doc.shift = c;
    }
    Ok(())
}

fn write_tables(
    out: &Option<PathBuf>,
    tables: &[(String, ReportTable)],
    precision: usize,
) -> Result<(), String> {
    let Some(dir) = out else {
        return Ok(());
    };
    fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    for (name, table) in tables {
        let path = dir.join(format!("{}.csv", name));
        fs::write(&path, table_csv(table, precision))
            .map_err(|e| format!("{}: {}", path.display(), e))?;
    }
    Ok(())
}

/// `eval`: exact values of a named function at the requested points.
pub fn cmd_eval(file: &Path, function: &str, points: &str, precision: usize) -> i32 {
    let doc = match load_document(file) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_USAGE;
        }
    };
    let Some(f) = doc.function(function) else {
        eprintln!("unknown function '{}'", function);
        return EXIT_USAGE;
    };
    let Some(pts) = points.split(',').map(parse_rational).collect::<Option<Vec<_>>>() else {
        eprintln!("bad --points list");
        return EXIT_USAGE;
    };
    println!("point,value,value_dec");
    let mut code = EXIT_OK;
    for p in pts {
        match f.eval(&p) {
            Ok(TropScalar::Real(v)) => {
                println!("{},{},{}", render_rat(&p), render_rat(&v), render_decimal(&v, precision))
            }
            Ok(TropScalar::Bottom) => println!("{},-inf,-inf", render_rat(&p)),
            Err(e) => {
                println!("{},error: {},", render_rat(&p), e);
                code = EXIT_VERIFY;
            }
        }
    }
    code
}

/// `analyze`: characteristic tables per function plus first-main-theorem
/// tables per hyperplane when a curve is declared.
pub fn cmd_analyze(
    file: &Path,
    out: &Option<PathBuf>,
    grid: &Option<String>,
    shift: &Option<String>,
    precision: usize,
) -> i32 {
    let mut doc = match load_document(file) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_USAGE;
        }
    };
    if let Err(e) = apply_overrides(&mut doc, grid, shift) {
        eprintln!("{}", e);
        return EXIT_USAGE;
    }

    let mut tables: Vec<(String, ReportTable)> = Vec::new();
    for (name, f) in &doc.functions {
        let grid = grid_for_function(&doc, f);
        let mut rows = Vec::new();
        for r in &grid {
            match tropnev_core::nevanlinna::characteristic(f, r) {
                Ok(s) => rows.push(vec![s.r, s.m, s.n, s.t]),
                Err(_) => continue,
            }
        }
        tables.push((
            format!("{}__characteristic_{}", doc.name, name),
            ReportTable {
                columns: vec!["r".into(), "m".into(), "N".into(), "T".into()],
                rows,
            },
        ));
    }
    if !doc.curve_components.is_empty() {
        match doc.scenario().and_then(|sc| fmt_report(&sc).map_err(|e| e.to_string()))
        {
            Ok(report) => {
                for (i, t) in report.tables.into_iter().enumerate() {
                    tables.push((format!("{}__fmt_h{}", doc.name, i + 1), t));
                }
            }
            Err(e) => {
                eprintln!("first-main-theorem analysis failed: {}", e);
                return EXIT_VERIFY;
            }
        }
    }
    match out {
        Some(_) => {
            if let Err(e) = write_tables(out, &tables, precision) {
                eprintln!("{}", e);
                return EXIT_VERIFY;
            }
            for (name, _) in &tables {
                println!("wrote {}", name);
            }
        }
        None => {
            for (name, table) in &tables {
                println!("# {}", name);
                print!("{}", table_csv(table, precision));
            }
        }
    }
    EXIT_OK
}

/// `linalg`: determinant certificates and Cramer data for the document's
/// matrices and vectors.
pub fn cmd_linalg(file: &Path) -> i32 {
    let doc = match load_document(file) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_USAGE;
        }
    };
    for (name, m) in &doc.matrices {
        match tropical_determinant(m) {
            Ok(cert) => {
                println!(
                    "matrix {}: det {} ({}), {}",
                    name,
                    cert.value,
                    if cert.multiplicity >= 2 { "attained >=2 times" } else { "unique" },
                    if cert.is_singular() { "singular" } else { "nonsingular" }
                );
            }
            Err(e) => println!("matrix {}: {}", name, e),
        }
        for (vname, v) in &doc.vectors {
            if v.len() != m.rows() {
                continue;
            }
            match cramer_permanents(m, v) {
                Ok(certs) => {
                    let values: Vec<TropScalar> = certs.iter().map(|c| c.value.clone()).collect();
                    println!("  cramer permanents vs {}: {}", vname, fmt_scalars(&values));
                }
                Err(e) => println!("  cramer permanents vs {}: {}", vname, e),
            }
            match cramer_upper_bound(m, v) {
                Ok(bound) => println!("  cramer bound vs {}: {}", vname, fmt_scalars(&bound)),
                Err(e) => println!("  cramer bound vs {}: {}", vname, e),
            }
        }
    }
    EXIT_OK
}

/// Applies `--expect kind=expectation` overrides to the declared checks.
fn apply_expectations(doc: &mut ScenarioDocument, overrides: &[String]) -> Result<(), String> {
    for spec in overrides {
        let Some((kind, value)) = spec.split_once('=') else {
            return Err(format!("--expect wants kind=expectation, got '{}'", spec));
        };
        let expectation = Expectation::parse(value.trim())
            .ok_or_else(|| format!("bad expectation '{}'", value))?;
        let as_bool = matches!(expectation, Expectation::True);
        let mut touched = false;
        for check in &mut doc.checks {
            let hit = match (kind.trim(), check) {
                ("smt_main", Check::SmtMain { expected }) => {
                    *expected = expectation;
                    true
                }
                ("smt_casorati", Check::SmtCasorati { expected }) => {
                    *expected = expectation;
                    true
                }
                ("casorati_counting", Check::CasoratiCounting { expected }) => {
                    *expected = expectation;
                    true
                }
                ("general_smt", Check::GeneralSmt { expected }) => {
                    *expected = expectation;
                    true
                }
                ("complete_identity", Check::CompleteIdentity { expected, .. }) => {
                    *expected = expectation;
                    true
                }
                ("meromorphic_smt", Check::MeromorphicSmt { expected, .. }) => {
                    *expected = expectation;
                    true
                }
                ("truncated", Check::Truncated { expected, .. }) => {
                    *expected = expectation;
                    true
                }
                ("witness", Check::Witness { expected, .. }) => {
                    *expected = as_bool;
                    true
                }
                ("product_to_sum", Check::ProductToSum { expected }) => {
                    *expected = as_bool;
                    true
                }
                ("general_position", Check::GeneralPosition { expected }) => {
                    *expected = as_bool;
                    true
                }
                ("nondegenerate", Check::Nondegenerate { expected }) => {
                    *expected = as_bool;
                    true
                }
                _ => false,
            };
            touched |= hit;
        }
        if !touched {
            return Err(format!("--expect '{}' matches no declared check", kind));
        }
    }
    Ok(())
}

/// `verify`: runs the document's declared checks; exit 0 iff every verdict
/// matches its declared expectation.
pub fn cmd_verify(
    file: &Path,
    out: &Option<PathBuf>,
    grid: &Option<String>,
    shift: &Option<String>,
    truncate: bool,
    expect: &[String],
    precision: usize,
) -> i32 {
    let mut doc = match load_document(file) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_USAGE;
        }
    };
    if let Err(e) = apply_overrides(&mut doc, grid, shift) {
        eprintln!("{}", e);
        return EXIT_USAGE;
    }
    if let Err(e) = apply_expectations(&mut doc, expect) {
        eprintln!("{}", e);
        return EXIT_USAGE;
    }
    let run = run_checks(&doc, truncate);
    let mut ok = true;
    for r in &run.results {
        println!("{}", r.row());
        ok &= r.pass;
    }
    if let Err(e) = write_tables(out, &run.tables, precision) {
        eprintln!("{}", e);
        return EXIT_VERIFY;
    }
    if ok {
        EXIT_OK
    } else {
        eprintln!(
            "failed checks: {}",
            run.results
                .iter()
                .filter(|r| !r.pass)
                .map(|r| format!("{}/{}", r.scenario, r.check))
                .collect::<Vec<_>>()
                .join(", ")
        );
        EXIT_VERIFY
    }
}

fn suite_row(s: &SuiteOutcome) -> String {
    format!(
        "{:<48} {:<14} {:<14} {}",
        format!("suite/{} ({} cases)", s.name, s.cases),
        "pass",
        if s.passed() { "pass".to_string() } else { format!("{} failures", s.failures.len()) },
        if s.passed() { "PASS" } else { "FAIL" }
    )
}

/// `reproduce-paper`: every bundled scenario check plus the property-suite
/// battery; exit 0 iff everything passes. Output is byte-deterministic for a
/// fixed seed.
pub fn cmd_reproduce_paper(
    out: &Option<PathBuf>,
    bundle_dir: &Option<PathBuf>,
    seed: u64,
    precision: usize,
) -> i32 {
    let sources: Vec<(String, String)> = match bundle_dir {
        None => BUNDLED_SCENARIOS
            .iter()
            .map(|(n, s)| (n.to_string(), s.to_string()))
            .collect(),
        Some(dir) => {
            let mut found: Vec<(String, String)> = Vec::new();
            let entries = match fs::read_dir(dir) {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("{}: {}", dir.display(), e);
                    return EXIT_USAGE;
                }
            };
            let mut paths: Vec<PathBuf> = entries
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().map(|x| x == "scn").unwrap_or(false))
                .collect();
            paths.sort();
            for p in paths {
                let name =
                    p.file_stem().map(|s| s.to_string_lossy().to_string()).unwrap_or_default();
                match fs::read_to_string(&p) {
                    Ok(src) => found.push((name, src)),
                    Err(e) => {
                        eprintln!("{}: {}", p.display(), e);
                        return EXIT_USAGE;
                    }
                }
            }
            if found.is_empty() {
                eprintln!("missing bundle: no .scn scenarios in {}", dir.display());
                return EXIT_USAGE;
            }
            found
        }
    };

    let mut ok = true;
    let mut all_tables: Vec<(String, ReportTable)> = Vec::new();
    println!(
        "{:<48} {:<14} {:<14} result",
        "check", "expected", "actual"
    );
    for (name, src) in &sources {
        match crate::scenario::parse_scenario(name, src) {
            Ok(doc) => {
                let run = run_checks(&doc, false);
                for r in &run.results {
                    println!("{}", r.row());
                    ok &= r.pass;
                }
                all_tables.extend(run.tables);
            }
            Err(errs) => {
                ok = false;
                println!(
                    "{:<48} {:<14} {:<14} FAIL",
                    format!("{}/parse", name),
                    "ok",
                    format!("{} errors", errs.len())
                );
            }
        }
    }
    for s in all_suites(seed) {
        println!("{}", suite_row(&s));
        for f in s.failures.iter().take(5) {
            println!("    {}", f);
        }
        ok &= s.passed();
    }
    if let Err(e) = write_tables(out, &all_tables, precision) {
        eprintln!("{}", e);
        return EXIT_VERIFY;
    }
    if ok {
        println!("reproduce-paper: all checks passed");
        EXIT_OK
    } else {
        println!("reproduce-paper: FAILURES detected");
        EXIT_VERIFY
    }
}

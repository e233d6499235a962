//! The scenario document: named functions, a curve, hyperplanes, matrices,
//! grids, options and declared checks, in a line-based sectioned text format.
//!
//! ```text
//! # comment
//! [functions]
//! f0 = max(-2*x+12, 3*x-18)
//! f  = f1 - f0
//!
//! [curve]
//! components = f0, f1
//!
//! [hyperplanes]
//! h1 = (0, -inf)
//!
//! [matrix A]
//! 0, -1, 1
//! 0, 0, 2
//! 0, 1, 0
//!
//! [vector b]
//! 0, -1, 1
//!
//! [values]
//! targets = -12, -2
//!
//! [grid]
//! geometric = 1, 44, 64
//!
//! [options]
//! shift = 1
//!
//! [witness w1]
//! functions = f0, f1, f2
//! alpha = 0, 1, 2
//! window = -5, 5
//!
//! [checks]
//! det A = 3
//! smt_main = holds
//! ```
//!
//! Validation is aggregated: every problem in the document is reported, not
//! just the first one.

use std::fmt;

use tropnev_core::curve::Hyperplane;
use tropnev_core::harness::{default_grid, geometric_grid, Scenario};
use tropnev_core::linalg::TropMatrix;
use tropnev_core::scalar::{rat_int, Rat, TropScalar};
use tropnev_core::{Curve, PLFunction};

use crate::expr::{eval_expr, parse_expr};

#[derive(Clone, Debug)]
pub struct ValidationError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // expression errors already carry a position
        if self.line == 0 || self.message.starts_with("line ") {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

/// Declared expectation of a verdict-valued check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Fails,
    Inconclusive,
    True,
    False,
}

impl Expectation {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "holds" => Some(Expectation::Holds),
            "fails" => Some(Expectation::Fails),
            "inconclusive" => Some(Expectation::Inconclusive),
            "true" => Some(Expectation::True),
            "false" => Some(Expectation::False),
            _ => None,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Holds => write!(f, "holds"),
            Expectation::Fails => write!(f, "fails"),
            Expectation::Inconclusive => write!(f, "inconclusive"),
            Expectation::True => write!(f, "true"),
            Expectation::False => write!(f, "false"),
        }
    }
}

/// One declared check from the `[checks]` section.
#[derive(Clone, Debug)]
pub enum Check {
    /// `det A = 3` (value `-inf` allowed) with optional `singular` flag via
    /// `singular A = true`.
    Det { matrix: String, expected: TropScalar },
    Singular { matrix: String, expected: bool },
    /// `detmul A B = 8`: `|A⊗B|` equals, and `|A|⊗|B| ≤ |A⊗B|`.
    DetMul { a: String, b: String, expected: TropScalar },
    /// `product A B = C`: the max-plus product equals the named matrix.
    Product { a: String, b: String, expected: String },
    /// `cramer A b = (0, 0, -2)`.
    CramerBounds { matrix: String, vector: String, expected: Vec<TropScalar> },
    /// `cramer_permanents A b = (3, 3, 1)`.
    CramerPermanents { matrix: String, vector: String, expected: Vec<TropScalar> },
    /// `cramer_singular A b = (false, false, true)`.
    CramerSingular { matrix: String, vector: String, expected: Vec<bool> },
    /// `general_position = true`.
    GeneralPosition { expected: bool },
    /// `witness w1 = true`.
    Witness { name: String, expected: bool },
    /// `nondegenerate = true` (default candidate lattice).
    Nondegenerate { expected: bool },
    /// `fmt = constant`.
    FmtConstant,
    /// `smt_main = holds`.
    SmtMain { expected: Expectation },
    /// `smt_casorati = fails`.
    SmtCasorati { expected: Expectation },
    /// `casorati_counting = holds`.
    CasoratiCounting { expected: Expectation },
    /// `product_to_sum = true`.
    ProductToSum { expected: bool },
    /// `complete_identity h3 = holds`.
    CompleteIdentity { hyperplane: String, expected: Expectation },
    /// `general_smt = holds`.
    GeneralSmt { expected: Expectation },
    /// `meromorphic_smt f = holds`.
    MeromorphicSmt { function: String, expected: Expectation },
    /// `truncated f = fails`.
    Truncated { function: String, expected: Expectation },
    /// `growth = subnormal | not-subnormal`.
    Growth { expected_subnormal: bool },
    /// `growth_min_final = 3/5`: final indicator sample exceeds the bound.
    GrowthMinFinal { bound: Rat },
    /// `cc410 = holds | equality`.
    Cc410 { require_equality: bool },
    /// `ddg h4 = 1` over the named hyperplanes (all when empty).
    Ddg { hyperplanes: Vec<String>, expected: usize },
    /// `ddg_star h1 h2 = 2`.
    DdgStar { hyperplanes: Vec<String>, expected: usize },
}

/// Witness declaration (`[witness w1]`).
#[derive(Clone, Debug)]
pub struct WitnessSpec {
    pub functions: Vec<String>,
    pub alpha: Vec<TropScalar>,
    pub window: Option<(Rat, Rat)>,
}

#[derive(Clone, Debug)]
pub enum GridSpec {
    Default,
    Points(Vec<Rat>),
    Geometric { from: Rat, to: Rat, count: usize },
}

/// A fully parsed and resolved scenario document.
#[derive(Clone, Debug)]
pub struct ScenarioDocument {
    pub name: String,
    pub functions: Vec<(String, PLFunction)>,
    pub curve_components: Vec<String>,
    pub hyperplanes: Vec<(String, Hyperplane)>,
    pub matrices: Vec<(String, TropMatrix)>,
    pub vectors: Vec<(String, Vec<TropScalar>)>,
    pub values: Vec<TropScalar>,
    pub witnesses: Vec<(String, WitnessSpec)>,
    pub grid: GridSpec,
    pub shift: Rat,
    pub truncation: bool,
    pub assume_nondegenerate: bool,
    pub checks: Vec<Check>,
}

impl ScenarioDocument {
    pub fn function(&self, name: &str) -> Option<&PLFunction> {
        self.functions.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn hyperplane(&self, name: &str) -> Option<&Hyperplane> {
        self.hyperplanes.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }

    pub fn matrix(&self, name: &str) -> Option<&TropMatrix> {
        self.matrices.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn vector(&self, name: &str) -> Option<&Vec<TropScalar>> {
        self.vectors.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn witness(&self, name: &str) -> Option<&WitnessSpec> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }

    /// Builds the curve declared in `[curve]`.
    pub fn curve(&self) -> Result<Curve, String> {
        if self.curve_components.is_empty() {
            return Err("no [curve] section".to_string());
        }
        let mut components = Vec::new();
        for name in &self.curve_components {
            components.push(
                self.function(name).cloned().ok_or_else(|| format!("unknown function {}", name))?,
            );
        }
        Curve::new(components).map_err(|e| e.to_string())
    }

    /// Materializes the grid for the given curve.
    pub fn grid_for(&self, curve: &Curve) -> Vec<Rat> {
        match &self.grid {
            GridSpec::Default => default_grid(curve),
            GridSpec::Points(pts) => pts.clone(),
            GridSpec::Geometric { from, to, count } => geometric_grid(from, to, *count),
        }
    }

    /// The harness scenario (curve + hyperplanes + grid + options).
    pub fn scenario(&self) -> Result<Scenario, String> {
        let curve = self.curve()?;
        let grid = self.grid_for(&curve);
        let hyperplanes = self.hyperplanes.iter().map(|(_, h)| h.clone()).collect();
        let mut sc = Scenario::new(curve, hyperplanes, grid, self.shift.clone())
            .map_err(|e| e.to_string())?;
        sc.truncation = self.truncation;
        sc.assume_nondegenerate = self.assume_nondegenerate;
        Ok(sc)
    }
}

/// Parses a rational literal `p`, `p/q`, or decimal (optionally signed).
pub fn parse_rational(s: &str) -> Option<Rat> {
    let e = parse_expr(s.trim(), 1).ok()?;
    const_fold(&e)
}

fn const_fold(e: &crate::expr::Expr) -> Option<Rat> {
    use crate::expr::Expr;
    match e {
        Expr::Const(r) => Some(r.clone()),
        Expr::Neg(inner) => const_fold(inner).map(|r| -r),
        Expr::Add(a, b) => Some(const_fold(a)? + const_fold(b)?),
        Expr::Sub(a, b) => Some(const_fold(a)? - const_fold(b)?),
        _ => None,
    }
}

/// Parses a scalar token: rational or `-inf`.
pub fn parse_scalar(s: &str) -> Option<TropScalar> {
    let t = s.trim();
    if t == "-inf" {
        return Some(TropScalar::Bottom);
    }
    parse_rational(t).map(TropScalar::Real)
}

fn parse_scalar_list(s: &str) -> Option<Vec<TropScalar>> {
    s.split(',').map(parse_scalar).collect()
}

fn parse_rational_list(s: &str) -> Option<Vec<Rat>> {
    s.split(',').map(parse_rational).collect()
}

struct SectionLine {
    line_no: usize,
    text: String,
}

struct Section {
    header: String,
    arg: Option<String>,
    header_line: usize,
    lines: Vec<SectionLine>,
}

fn split_sections(src: &str) -> Result<Vec<Section>, ValidationError> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let Some(inner) = rest.strip_suffix(']') else {
                return Err(ValidationError {
                    line: line_no,
                    message: "unterminated section header".to_string(),
                });
            };
            let mut parts = inner.split_whitespace();
            let header = parts.next().unwrap_or("").to_string();
            let arg = parts.next().map(|s| s.to_string());
            sections.push(Section { header, arg, header_line: line_no, lines: Vec::new() });
        } else {
            match sections.last_mut() {
                Some(s) => {
                    s.lines.push(SectionLine { line_no, text: line.to_string() })
                }
                None => {
                    return Err(ValidationError {
                        line: line_no,
                        message: "content before the first section header".to_string(),
                    })
                }
            }
        }
    }
    Ok(sections)
}

fn key_value(line: &str) -> Option<(&str, &str)> {
    let eq = line.find('=')?;
    Some((line[..eq].trim(), line[eq + 1..].trim()))
}

/// Parses a scenario document, aggregating every validation error.
pub fn parse_scenario(name: &str, src: &str) -> Result<ScenarioDocument, Vec<ValidationError>> {
    let sections = match split_sections(src) {
        Ok(s) => s,
        Err(e) => return Err(vec![e]),
    };

    let mut errors: Vec<ValidationError> = Vec::new();
    let mut doc = ScenarioDocument {
        name: name.to_string(),
        functions: Vec::new(),
        curve_components: Vec::new(),
        hyperplanes: Vec::new(),
        matrices: Vec::new(),
        vectors: Vec::new(),
        values: Vec::new(),
        witnesses: Vec::new(),
        grid: GridSpec::Default,
        shift: rat_int(1),
        truncation: false,
        assume_nondegenerate: false,
        checks: Vec::new(),
    };
    let push_err = |errors: &mut Vec<ValidationError>, line: usize, message: String| {
        errors.push(ValidationError { line, message });
    };

    for section in &sections {
        match section.header.as_str() {
            "functions" => {
                for l in &section.lines {
                    let Some((key, value)) = key_value(&l.text) else {
                        push_err(&mut errors, l.line_no, "expected name = expression".into());
                        continue;
                    };
                    let expr = match parse_expr(value, l.line_no) {
                        Ok(e) => e,
                        Err(e) => {
                            push_err(&mut errors, l.line_no, e.to_string());
                            continue;
                        }
                    };
                    let defined = doc.functions.clone();
                    let env = |n: &str| {
                        defined.iter().find(|(name, _)| name == n).map(|(_, f)| f.clone())
                    };
                    match eval_expr(&expr, &env, l.line_no) {
                        Ok(f) => doc.functions.push((key.to_string(), f)),
                        Err(e) => push_err(&mut errors, l.line_no, e.to_string()),
                    }
                }
            }
            "curve" => {
                for l in &section.lines {
                    match key_value(&l.text) {
                        Some(("components", value)) => {
                            doc.curve_components =
                                value.split(',').map(|s| s.trim().to_string()).collect();
                        }
                        _ => push_err(
                            &mut errors,
                            l.line_no,
                            "expected components = name, name, ...".into(),
                        ),
                    }
                }
            }
            "hyperplanes" => {
                for l in &section.lines {
                    let Some((key, value)) = key_value(&l.text) else {
                        push_err(&mut errors, l.line_no, "expected name = (a0, a1, ...)".into());
                        continue;
                    };
                    let inner = value.trim().trim_start_matches('(').trim_end_matches(')');
                    match parse_scalar_list(inner) {
                        Some(coeffs) => match Hyperplane::new(coeffs) {
                            Ok(h) => doc.hyperplanes.push((key.to_string(), h)),
                            Err(e) => push_err(&mut errors, l.line_no, e.to_string()),
                        },
                        None => {
                            push_err(&mut errors, l.line_no, "bad coefficient list".into())
                        }
                    }
                }
            }
            "matrix" => {
                let Some(mname) = section.arg.clone() else {
                    push_err(&mut errors, section.header_line, "matrix needs a name".into());
                    continue;
                };
                let mut rows: Vec<Vec<TropScalar>> = Vec::new();
                let mut ok = true;
                for l in &section.lines {
                    match parse_scalar_list(&l.text) {
                        Some(row) => rows.push(row),
                        None => {
                            push_err(&mut errors, l.line_no, "bad matrix row".into());
                            ok = false;
                        }
                    }
                }
                if ok {
                    match TropMatrix::from_rows(rows) {
                        Ok(m) => doc.matrices.push((mname, m)),
                        Err(e) => {
                            push_err(&mut errors, section.header_line, e.to_string())
                        }
                    }
                }
            }
            "vector" => {
                let Some(vname) = section.arg.clone() else {
                    push_err(&mut errors, section.header_line, "vector needs a name".into());
                    continue;
                };
                for l in &section.lines {
                    match parse_scalar_list(&l.text) {
                        Some(v) => doc.vectors.push((vname.clone(), v)),
                        None => push_err(&mut errors, l.line_no, "bad vector entries".into()),
                    }
                }
            }
            "values" => {
                for l in &section.lines {
                    match key_value(&l.text) {
                        Some(("targets", value)) => match parse_scalar_list(value) {
                            Some(v) => doc.values = v,
                            None => {
                                push_err(&mut errors, l.line_no, "bad value list".into())
                            }
                        },
                        _ => push_err(&mut errors, l.line_no, "expected targets = ...".into()),
                    }
                }
            }
            "witness" => {
                let Some(wname) = section.arg.clone() else {
                    push_err(&mut errors, section.header_line, "witness needs a name".into());
                    continue;
                };
                let mut spec = WitnessSpec { functions: Vec::new(), alpha: Vec::new(), window: None };
                for l in &section.lines {
                    match key_value(&l.text) {
                        Some(("functions", value)) => {
                            spec.functions =
                                value.split(',').map(|s| s.trim().to_string()).collect();
                        }
                        Some(("alpha", value)) => match parse_scalar_list(value) {
                            Some(v) => spec.alpha = v,
                            None => push_err(&mut errors, l.line_no, "bad alpha list".into()),
                        },
                        Some(("window", value)) => match parse_rational_list(value) {
                            Some(v) if v.len() == 2 => {
                                spec.window = Some((v[0].clone(), v[1].clone()))
                            }
                            _ => push_err(&mut errors, l.line_no, "bad window".into()),
                        },
                        _ => push_err(&mut errors, l.line_no, "unknown witness key".into()),
                    }
                }
                doc.witnesses.push((wname, spec));
            }
            "grid" => {
                for l in &section.lines {
                    match key_value(&l.text) {
                        Some(("geometric", value)) => match parse_rational_list(value) {
                            Some(v) if v.len() == 3 => {
                                let count = v[2].to_integer().try_into().unwrap_or(0);
                                if count < 2 || v[0] >= v[1] {
                                    push_err(&mut errors, l.line_no, "bad geometric grid".into());
                                } else {
                                    doc.grid = GridSpec::Geometric {
                                        from: v[0].clone(),
                                        to: v[1].clone(),
                                        count,
                                    };
                                }
                            }
                            _ => push_err(
                                &mut errors,
                                l.line_no,
                                "expected geometric = from, to, count".into(),
                            ),
                        },
                        Some(("points", value)) => match parse_rational_list(value) {
                            Some(v) => doc.grid = GridSpec::Points(v),
                            None => push_err(&mut errors, l.line_no, "bad grid points".into()),
                        },
                        Some(("default", _)) => doc.grid = GridSpec::Default,
                        _ => push_err(&mut errors, l.line_no, "unknown grid key".into()),
                    }
                }
            }
            "options" => {
                for l in &section.lines {
                    match key_value(&l.text) {
                        Some(("shift", value)) => match parse_rational(value) {
                            Some(c) => doc.shift = c,
                            None => push_err(&mut errors, l.line_no, "bad shift".into()),
                        },
                        Some(("truncation", value)) => match value {
                            "on" => doc.truncation = true,
                            "off" => doc.truncation = false,
                            _ => push_err(
                                &mut errors,
                                l.line_no,
                                "truncation must be on or off".into(),
                            ),
                        },
                        Some(("assume_nondegenerate", value)) => match value {
                            "on" => doc.assume_nondegenerate = true,
                            "off" => doc.assume_nondegenerate = false,
                            _ => push_err(
                                &mut errors,
                                l.line_no,
                                "assume_nondegenerate must be on or off".into(),
                            ),
                        },
                        _ => push_err(&mut errors, l.line_no, "unknown option".into()),
                    }
                }
            }
            "checks" => {
                for l in &section.lines {
                    match parse_check(&l.text) {
                        Ok(c) => doc.checks.push(c),
                        Err(msg) => push_err(&mut errors, l.line_no, msg),
                    }
                }
            }
            other => {
                push_err(
                    &mut errors,
                    section.header_line,
                    format!("unknown section [{}]", other),
                );
            }
        }
    }

    // cross-references
    for name in &doc.curve_components {
        if doc.function(name).is_none() {
            errors.push(ValidationError {
                line: 0,
                message: format!("curve component '{}' is not defined", name),
            });
        }
    }
    if !doc.curve_components.is_empty() {
        if let Err(msg) = doc.curve() {
            errors.push(ValidationError { line: 0, message: msg });
        } else if let Ok(curve) = doc.curve() {
            for (hname, h) in &doc.hyperplanes {
                if h.coefficients().len() != curve.components().len() {
                    errors.push(ValidationError {
                        line: 0,
                        message: format!(
                            "hyperplane '{}' has {} coefficients for a curve with {} components",
                            hname,
                            h.coefficients().len(),
                            curve.components().len()
                        ),
                    });
                }
            }
        }
    }
    for (wname, w) in &doc.witnesses {
        for fname in &w.functions {
            if doc.function(fname).is_none() {
                errors.push(ValidationError {
                    line: 0,
                    message: format!("witness '{}' references unknown function '{}'", wname, fname),
                });
            }
        }
        if w.functions.len() != w.alpha.len() {
            errors.push(ValidationError {
                line: 0,
                message: format!("witness '{}': alpha length differs from functions", wname),
            });
        }
    }

    if errors.is_empty() {
        Ok(doc)
    } else {
        Err(errors)
    }
}

fn parse_check(line: &str) -> Result<Check, String> {
    let Some((head, value)) = key_value(line) else {
        return Err("expected check = expectation".to_string());
    };
    let mut words = head.split_whitespace();
    let kind = words.next().ok_or("empty check")?;
    let args: Vec<String> = words.map(|w| w.to_string()).collect();
    let expectation = || {
        Expectation::parse(value).ok_or_else(|| format!("bad expectation '{}'", value))
    };
    let scalar = || parse_scalar(value).ok_or_else(|| format!("bad scalar '{}'", value));
    let usize_value =
        || value.parse::<usize>().map_err(|_| format!("bad count '{}'", value));
    let scalar_tuple = || {
        let inner = value.trim().trim_start_matches('(').trim_end_matches(')');
        parse_scalar_list(inner).ok_or_else(|| format!("bad tuple '{}'", value))
    };
    let one_arg = |what: &str| {
        if args.len() == 1 {
            Ok(args[0].clone())
        } else {
            Err(format!("{} expects one name", what))
        }
    };
    let two_args = |what: &str| {
        if args.len() == 2 {
            Ok((args[0].clone(), args[1].clone()))
        } else {
            Err(format!("{} expects two names", what))
        }
    };
    match kind {
        "det" => Ok(Check::Det { matrix: one_arg("det")?, expected: scalar()? }),
        "singular" => Ok(Check::Singular {
            matrix: one_arg("singular")?,
            expected: value.parse::<bool>().map_err(|_| "expected true/false")?,
        }),
        "detmul" => {
            let (a, b) = two_args("detmul")?;
            Ok(Check::DetMul { a, b, expected: scalar()? })
        }
        "product" => {
            let (a, b) = two_args("product")?;
            Ok(Check::Product { a, b, expected: value.trim().to_string() })
        }
        "cramer" => {
            let (matrix, vector) = two_args("cramer")?;
            Ok(Check::CramerBounds { matrix, vector, expected: scalar_tuple()? })
        }
        "cramer_permanents" => {
            let (matrix, vector) = two_args("cramer_permanents")?;
            Ok(Check::CramerPermanents { matrix, vector, expected: scalar_tuple()? })
        }
        "cramer_singular" => {
            let (matrix, vector) = two_args("cramer_singular")?;
            let inner = value.trim().trim_start_matches('(').trim_end_matches(')');
            let flags: Result<Vec<bool>, _> =
                inner.split(',').map(|t| t.trim().parse::<bool>()).collect();
            Ok(Check::CramerSingular {
                matrix,
                vector,
                expected: flags.map_err(|_| "expected true/false tuple")?,
            })
        }
        "general_position" => Ok(Check::GeneralPosition {
            expected: value.parse::<bool>().map_err(|_| "expected true/false")?,
        }),
        "witness" => Ok(Check::Witness {
            name: one_arg("witness")?,
            expected: value.parse::<bool>().map_err(|_| "expected true/false")?,
        }),
        "nondegenerate" => Ok(Check::Nondegenerate {
            expected: value.parse::<bool>().map_err(|_| "expected true/false")?,
        }),
        "fmt" => {
            if value == "constant" {
                Ok(Check::FmtConstant)
            } else {
                Err("fmt expects 'constant'".to_string())
            }
        }
        "smt_main" => Ok(Check::SmtMain { expected: expectation()? }),
        "smt_casorati" => Ok(Check::SmtCasorati { expected: expectation()? }),
        "casorati_counting" => Ok(Check::CasoratiCounting { expected: expectation()? }),
        "product_to_sum" => Ok(Check::ProductToSum {
            expected: value.parse::<bool>().map_err(|_| "expected true/false")?,
        }),
        "complete_identity" => Ok(Check::CompleteIdentity {
            hyperplane: one_arg("complete_identity")?,
            expected: expectation()?,
        }),
        "general_smt" => Ok(Check::GeneralSmt { expected: expectation()? }),
        "meromorphic_smt" => Ok(Check::MeromorphicSmt {
            function: one_arg("meromorphic_smt")?,
            expected: expectation()?,
        }),
        "truncated" => {
            Ok(Check::Truncated { function: one_arg("truncated")?, expected: expectation()? })
        }
        "growth" => match value {
            "subnormal" => Ok(Check::Growth { expected_subnormal: true }),
            "not-subnormal" => Ok(Check::Growth { expected_subnormal: false }),
            _ => Err("growth expects subnormal or not-subnormal".to_string()),
        },
        "growth_min_final" => Ok(Check::GrowthMinFinal {
            bound: parse_rational(value).ok_or("bad rational bound")?,
        }),
        "cc410" => match value {
            "holds" => Ok(Check::Cc410 { require_equality: false }),
            "equality" => Ok(Check::Cc410 { require_equality: true }),
            _ => Err("cc410 expects holds or equality".to_string()),
        },
        "ddg" => Ok(Check::Ddg { hyperplanes: args, expected: usize_value()? }),
        "ddg_star" => Ok(Check::DdgStar { hyperplanes: args, expected: usize_value()? }),
        other => Err(format!("unknown check '{}'", other)),
    }
}

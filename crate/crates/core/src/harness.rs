//! Value-distribution theorems as machine-checkable reports.
//!
//! Asymptotic statements of the form `LHS(r) ≤ RHS(r) + O(1)` are decided
//! exactly: on global data both sides are piecewise linear in `r` and affine
//! beyond a computable radius, so the verdict is a rational comparison of
//! tail slopes; on windowed data the reports record the grid minimum and the
//! trend over the last half of the grid, and only a monotone divergence is
//! called a failure. Nothing is sampled approximately and no tolerance is
//! involved anywhere.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::casorati::{casorati, CasoratiError, CasoratiSpec};
use crate::curve::{
    compose, nondegenerate_default, representation_length, Curve, CurveError, Hyperplane,
};
use crate::linalg::{self, LinalgError};
use crate::nevanlinna::{
    self, characteristic, counting_poles, counting_roots, counting_truncated,
    weil_and_proximity, CrossingKind, NevanlinnaError,
};
use crate::plfun::{PLFunction, PlError};
use crate::scalar::{half, rat_int, Rat, TropScalar};
use crate::tail::{
    tail_cartan, tail_characteristic, tail_counting, tail_max, tail_weil, TailAffine,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarnessError {
    EmptyGrid,
    /// Grid radii must be positive and strictly increasing.
    BadGrid,
    DimensionMismatch,
    ZeroShift,
    /// A first-main-theorem constant varied across the grid (a bug, not a
    /// tolerance issue).
    NonConstant,
    NotGeneralPosition,
    /// Curve fails its nondegeneracy precondition (or has a `0_T` component).
    DegenerateCurve,
    DegenerateComposition,
    /// Complete-hyperplane identity with a `0_T` coefficient.
    NotComplete,
    DuplicateValues,
    ZeroCharacteristic,
    NoIndependentSubset,
    /// No grid point fits inside the analysis window.
    WindowTooSmall,
    /// Report defined for global curves only.
    WindowedCurve,
    Nev(NevanlinnaError),
    CurveE(CurveError),
    Cas(CasoratiError),
    Lin(LinalgError),
    Pl(PlError),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::EmptyGrid => write!(f, "empty radius grid"),
            HarnessError::BadGrid => write!(f, "grid must be positive and strictly increasing"),
            HarnessError::DimensionMismatch => write!(f, "hyperplane/curve dimension mismatch"),
            HarnessError::ZeroShift => write!(f, "shift constant must be nonzero"),
            HarnessError::NonConstant => write!(f, "first-main-theorem constant varies"),
            HarnessError::NotGeneralPosition => write!(f, "hyperplanes not in general position"),
            HarnessError::DegenerateCurve => write!(f, "curve fails nondegeneracy precondition"),
            HarnessError::DegenerateComposition => write!(f, "composition identically 0_T"),
            HarnessError::NotComplete => write!(f, "hyperplane has a 0_T coefficient"),
            HarnessError::DuplicateValues => write!(f, "target values are not distinct"),
            HarnessError::ZeroCharacteristic => write!(f, "characteristic not positive on tail"),
            HarnessError::NoIndependentSubset => {
                write!(f, "no independent coefficient subset")
            }
            HarnessError::WindowTooSmall => write!(f, "no grid radius fits the window"),
            HarnessError::WindowedCurve => write!(f, "report requires a global curve"),
            HarnessError::Nev(e) => write!(f, "{}", e),
            HarnessError::CurveE(e) => write!(f, "{}", e),
            HarnessError::Cas(e) => write!(f, "{}", e),
            HarnessError::Lin(e) => write!(f, "{}", e),
            HarnessError::Pl(e) => write!(f, "{}", e),
        }
    }
}

impl From<NevanlinnaError> for HarnessError {
    fn from(e: NevanlinnaError) -> Self {
        HarnessError::Nev(e)
    }
}
impl From<CurveError> for HarnessError {
    fn from(e: CurveError) -> Self {
        HarnessError::CurveE(e)
    }
}
impl From<CasoratiError> for HarnessError {
    fn from(e: CasoratiError) -> Self {
        HarnessError::Cas(e)
    }
}
impl From<LinalgError> for HarnessError {
    fn from(e: LinalgError) -> Self {
        HarnessError::Lin(e)
    }
}
impl From<PlError> for HarnessError {
    fn from(e: PlError) -> Self {
        HarnessError::Pl(e)
    }
}

/// Outcome of an eventual-inequality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    HoldsEventually,
    FailsEventually,
    WindowInconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsEventually => write!(f, "holds"),
            Verdict::FailsEventually => write!(f, "fails"),
            Verdict::WindowInconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Exact slope evidence for a verdict. On global data the slopes are true
/// tail slopes; on windowed data they are the slopes of the last grid
/// segment and the verdict comes from the trend over the last half.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeVerdict {
    pub lhs_tail_slope: Rat,
    pub rhs_tail_slope: Rat,
    pub difference_min_on_grid: Rat,
    pub verdict: Verdict,
}

/// A rectangular report: first column is always `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Rat>>,
}

impl ReportTable {
    pub fn column(&self, name: &str) -> Option<Vec<Rat>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|row| row[idx].clone()).collect())
    }
}

/// A curve, a hyperplane family, a radius grid and the analysis options.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub curve: Curve,
    pub hyperplanes: Vec<Hyperplane>,
    pub grid: Vec<Rat>,
    pub shift: Rat,
    pub truncation: bool,
    /// Skip the witness scan and take nondegeneracy as asserted by the
    /// scenario author.
    pub assume_nondegenerate: bool,
}

impl Scenario {
    pub fn new(
        curve: Curve,
        hyperplanes: Vec<Hyperplane>,
        grid: Vec<Rat>,
        shift: Rat,
    ) -> Result<Self, HarnessError> {
        if grid.is_empty() {
            return Err(HarnessError::EmptyGrid);
        }
        if !grid[0].is_positive() || grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HarnessError::BadGrid);
        }
        if shift.is_zero() {
            return Err(HarnessError::ZeroShift);
        }
        if hyperplanes.iter().any(|h| h.coefficients().len() != curve.components().len()) {
            return Err(HarnessError::DimensionMismatch);
        }
        Ok(Scenario {
            curve,
            hyperplanes,
            grid,
            shift,
            truncation: false,
            assume_nondegenerate: false,
        })
    }

    fn q(&self) -> usize {
        self.hyperplanes.len()
    }

    fn n(&self) -> usize {
        self.curve.dim()
    }
}

/// The default grid: 64 points, geometrically spaced from 1 to four times
/// (largest breakpoint magnitude + 1), capped by the window for windowed
/// curves. Interior points are snapped to dyadic rationals so the grid is
/// exact and reproducible.
pub fn default_grid(curve: &Curve) -> Vec<Rat> {
    let mut top = rat_int(4)
        * (curve.max_breakpoint_magnitude().unwrap_or_else(Rat::zero) + rat_int(1));
    if let Some((lo, hi)) = curve.window() {
        let cap = if -lo.clone() < hi { -lo } else { hi };
        if cap < top {
            top = cap;
        }
    }
    if top <= rat_int(1) {
        return vec![top];
    }
    geometric_grid(&rat_int(1), &top, 64)
}

/// `count` points from `from` to `to`, geometric up to dyadic snapping;
/// endpoints exact.
pub fn geometric_grid(from: &Rat, to: &Rat, count: usize) -> Vec<Rat> {
    assert!(count >= 2 && from < to && from.is_positive());
    let f = from.to_f64().expect("finite rational");
    let t = to.to_f64().expect("finite rational");
    let ratio = libm::log(t / f) / (count as f64 - 1.0);
    let mut out: Vec<Rat> = Vec::with_capacity(count);
    out.push(from.clone());
    for k in 1..count - 1 {
        let x = f * libm::exp(ratio * k as f64);
        let snapped = snap_dyadic(x);
        if snapped > *out.last().unwrap() && snapped < *to {
            out.push(snapped);
        }
    }
    out.push(to.clone());
    out
}

fn snap_dyadic(x: f64) -> Rat {
    const SCALE: i64 = 1 << 20;
    let scaled = libm::round(x * SCALE as f64) as i64;
    Rat::new(scaled.into(), SCALE.into())
}

/// Grid radii usable by every involved windowed function (symmetric
/// evaluation needs `[-r, r]` inside each window).
fn clip_grid(grid: &[Rat], functions: &[&PLFunction]) -> Result<Vec<Rat>, HarnessError> {
    let mut cap: Option<Rat> = None;
    for f in functions {
        if let Some((lo, hi)) = f.window() {
            let c = if -lo.clone() < hi { -lo } else { hi };
            cap = Some(match cap {
                None => c,
                Some(prev) => {
                    if c < prev {
                        c
                    } else {
                        prev
                    }
                }
            });
        }
    }
    let clipped: Vec<Rat> = match &cap {
        None => grid.to_vec(),
        Some(c) => grid.iter().filter(|r| *r <= c).cloned().collect(),
    };
    if clipped.is_empty() {
        return Err(HarnessError::WindowTooSmall);
    }
    Ok(clipped)
}

fn require_general_position(sc: &Scenario) -> Result<(), HarnessError> {
    let vectors: Vec<Vec<TropScalar>> =
        sc.hyperplanes.iter().map(|h| h.coefficients().to_vec()).collect();
    match linalg::general_position(&vectors, sc.n()) {
        Ok(true) => Ok(()),
        Ok(false) | Err(LinalgError::TooFew) => Err(HarnessError::NotGeneralPosition),
        Err(e) => Err(e.into()),
    }
}

fn require_nondegenerate(sc: &Scenario) -> Result<(), HarnessError> {
    if sc.curve.components().iter().any(|f| f.is_bottom()) {
        return Err(HarnessError::DegenerateCurve);
    }
    if !sc.assume_nondegenerate && !nondegenerate_default(&sc.curve)? {
        return Err(HarnessError::DegenerateCurve);
    }
    Ok(())
}

fn grid_slope(grid: &[Rat], vals: &[Rat]) -> Rat {
    if grid.len() < 2 {
        return Rat::zero();
    }
    let k = grid.len() - 1;
    (&vals[k] - &vals[k - 1]) / (&grid[k] - &grid[k - 1])
}

fn min_of(vals: &[Rat]) -> Rat {
    vals.iter().min().cloned().expect("nonempty")
}

/// Trend of the deficit `RHS − LHS` on the last half of a windowed grid.
fn windowed_trend(diff: &[Rat]) -> Verdict {
    let tail = &diff[diff.len() / 2..];
    if tail.len() < 2 {
        return Verdict::WindowInconclusive;
    }
    let non_decreasing = tail.windows(2).all(|w| w[0] <= w[1]);
    if non_decreasing {
        return Verdict::HoldsEventually;
    }
    let non_increasing = tail.windows(2).all(|w| w[0] >= w[1]);
    if non_increasing && tail.last().unwrap() < tail.first().unwrap() {
        return Verdict::FailsEventually;
    }
    Verdict::WindowInconclusive
}

/// Assembles a verdict from per-grid values of both sides, with exact tails
/// on global data and the trend rule on windowed data.
fn decide(
    grid: &[Rat],
    lhs_vals: &[Rat],
    rhs_vals: &[Rat],
    tails: Option<(&TailAffine, &TailAffine)>,
) -> SlopeVerdict {
    let diff: Vec<Rat> = rhs_vals.iter().zip(lhs_vals.iter()).map(|(r, l)| r - l).collect();
    match tails {
        Some((lhs, rhs)) => SlopeVerdict {
            lhs_tail_slope: lhs.slope.clone(),
            rhs_tail_slope: rhs.slope.clone(),
            difference_min_on_grid: min_of(&diff),
            verdict: if rhs.slope >= lhs.slope {
                Verdict::HoldsEventually
            } else {
                Verdict::FailsEventually
            },
        },
        None => SlopeVerdict {
            lhs_tail_slope: grid_slope(grid, lhs_vals),
            rhs_tail_slope: grid_slope(grid, rhs_vals),
            difference_min_on_grid: min_of(&diff),
            verdict: windowed_trend(&diff),
        },
    }
}

/// A verdict plus the grid table backing it.
#[derive(Clone, Debug)]
pub struct SlopeReport {
    pub verdict: SlopeVerdict,
    pub table: ReportTable,
}

/// First Main Theorem constants, one per hyperplane.
#[derive(Clone, Debug)]
pub struct FmtReport {
    pub constants: Vec<Rat>,
    pub tables: Vec<ReportTable>,
}

/// `m_f(r,H) + N(r, 1_T⊘(P∘f)) − T_F(r)` is the same rational at every grid
/// point; any variation is reported as [`HarnessError::NonConstant`].
pub fn fmt_report(sc: &Scenario) -> Result<FmtReport, HarnessError> {
    let mut constants = Vec::with_capacity(sc.q());
    let mut tables = Vec::with_capacity(sc.q());
    let u = sc.curve.sup_norm();
    for h in &sc.hyperplanes {
        let comp = compose(h, &sc.curve)?;
        if comp.is_bottom() {
            return Err(HarnessError::DegenerateComposition);
        }
        let grid = clip_grid(&sc.grid, &[&u, &comp])?;
        let mut constant: Option<Rat> = None;
        let mut rows = Vec::with_capacity(grid.len());
        for r in &grid {
            let m = weil_and_proximity(&sc.curve, h, r)?.m_f;
            let n = counting_roots(&comp, r)?;
            let t = nevanlinna::cartan_characteristic(&sc.curve, r)?;
            let c = &m + &n - &t;
            match &constant {
                None => constant = Some(c.clone()),
                Some(seen) if *seen == c => {}
                Some(_) => return Err(HarnessError::NonConstant),
            }
            rows.push(vec![r.clone(), m, n, t, c]);
        }
        constants.push(constant.expect("nonempty grid"));
        tables.push(ReportTable {
            columns: vec![
                "r".to_string(),
                "m_f".to_string(),
                "N".to_string(),
                "T_f".to_string(),
                "constant".to_string(),
            ],
            rows,
        });
    }
    Ok(FmtReport { constants, tables })
}

/// Growth-free second main theorem: deficit
/// `D(r) = Σ_j N(r,1_T⊘(P_j∘f)) − Σ_i N(r,1_T⊘f_i) − (q−n−1)·T_F(r)`
/// must be bounded below (tail slope ≥ 0 on global curves).
pub fn smt_main_report(sc: &Scenario) -> Result<SlopeReport, HarnessError> {
    require_general_position(sc)?;
    require_nondegenerate(sc)?;
    let comps: Vec<PLFunction> =
        sc.hyperplanes.iter().map(|h| compose(h, &sc.curve)).collect::<Result<_, _>>()?;
    if comps.iter().any(|c| c.is_bottom()) {
        return Err(HarnessError::DegenerateComposition);
    }
    let u = sc.curve.sup_norm();
    let mut involved: Vec<&PLFunction> = comps.iter().collect();
    involved.push(&u);
    involved.extend(sc.curve.components().iter());
    let grid = clip_grid(&sc.grid, &involved)?;

    let coeff = rat_int(sc.q() as i64 - sc.n() as i64 - 1);
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = nevanlinna::cartan_characteristic(&sc.curve, r)?;
        let mut sum_comp = Rat::zero();
        for c in &comps {
            sum_comp += counting_roots(c, r)?;
        }
        let mut sum_components = Rat::zero();
        for f in sc.curve.components() {
            sum_components += counting_roots(f, r)?;
        }
        let lhs = &coeff * &t;
        let rhs = &sum_comp - &sum_components;
        rows.push(vec![r.clone(), t, sum_comp, sum_components, &rhs - &lhs]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }

    let tails = if sc.curve.window().is_none() {
        let lhs_tail = tail_cartan(&sc.curve)?.scale(&coeff);
        let mut rhs_tail = TailAffine::constant(Rat::zero());
        for c in &comps {
            rhs_tail = rhs_tail.add(&tail_counting(c, CrossingKind::Roots, false));
        }
        for f in sc.curve.components() {
            rhs_tail = rhs_tail.sub(&tail_counting(f, CrossingKind::Roots, false));
        }
        Some((lhs_tail, rhs_tail))
    } else {
        None
    };
    let verdict = decide(
        &grid,
        &lhs_vals,
        &rhs_vals,
        tails.as_ref().map(|(l, r)| (l, r)),
    );
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "T_f".to_string(),
                "sum_N_compositions".to_string(),
                "sum_N_components".to_string(),
                "deficit".to_string(),
            ],
            rows,
        },
    })
}

/// Casorati-form second main theorem: the ramification term is
/// `N(r, 1_T⊘C(f))`; the underlying theorem needs subnormal growth, so
/// fast-growing windowed curves can legitimately fail here.
pub fn smt_casorati_report(sc: &Scenario) -> Result<SlopeReport, HarnessError> {
    require_general_position(sc)?;
    require_nondegenerate(sc)?;
    let comps: Vec<PLFunction> =
        sc.hyperplanes.iter().map(|h| compose(h, &sc.curve)).collect::<Result<_, _>>()?;
    if comps.iter().any(|c| c.is_bottom()) {
        return Err(HarnessError::DegenerateComposition);
    }
    let cas = casorati(&CasoratiSpec::new(
        sc.curve.components().to_vec(),
        sc.shift.clone(),
    )?)?;
    let u = sc.curve.sup_norm();
    let mut involved: Vec<&PLFunction> = comps.iter().collect();
    involved.push(&u);
    involved.push(&cas);
    let grid = clip_grid(&sc.grid, &involved)?;

    let coeff = rat_int(sc.q() as i64 - sc.n() as i64 - 1);
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = nevanlinna::cartan_characteristic(&sc.curve, r)?;
        let mut sum_comp = Rat::zero();
        for c in &comps {
            sum_comp += counting_roots(c, r)?;
        }
        let n_cas = counting_roots(&cas, r)?;
        let lhs = &coeff * &t;
        let rhs = &sum_comp - &n_cas;
        rows.push(vec![r.clone(), t, sum_comp, n_cas, &rhs - &lhs]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }

    let tails = if sc.curve.window().is_none() {
        let lhs_tail = tail_cartan(&sc.curve)?.scale(&coeff);
        let mut rhs_tail = TailAffine::constant(Rat::zero());
        for c in &comps {
            rhs_tail = rhs_tail.add(&tail_counting(c, CrossingKind::Roots, false));
        }
        rhs_tail = rhs_tail.sub(&tail_counting(&cas, CrossingKind::Roots, false));
        Some((lhs_tail, rhs_tail))
    } else {
        None
    };
    let verdict = decide(&grid, &lhs_vals, &rhs_vals, tails.as_ref().map(|(l, r)| (l, r)));
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "T_f".to_string(),
                "sum_N_compositions".to_string(),
                "N_inv_casorati".to_string(),
                "deficit".to_string(),
            ],
            rows,
        },
    })
}

/// `N(r, 1_T⊘C(f)) ≤ Σ_j N(r, 1_T⊘f_j) + o(T_f(r))` as a tail-slope
/// comparison; global curves only.
pub fn casorati_counting_check(sc: &Scenario) -> Result<SlopeReport, HarnessError> {
    if sc.curve.window().is_some() {
        return Err(HarnessError::WindowedCurve);
    }
    if sc.curve.components().iter().any(|f| f.is_bottom()) {
        return Err(HarnessError::DegenerateCurve);
    }
    let cas = casorati(&CasoratiSpec::new(
        sc.curve.components().to_vec(),
        sc.shift.clone(),
    )?)?;
    let grid = sc.grid.clone();
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let lhs = counting_roots(&cas, r)?;
        let mut rhs = Rat::zero();
        for f in sc.curve.components() {
            rhs += counting_roots(f, r)?;
        }
        rows.push(vec![r.clone(), lhs.clone(), rhs.clone(), &rhs - &lhs]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }
    let lhs_tail = tail_counting(&cas, CrossingKind::Roots, false);
    let mut rhs_tail = TailAffine::constant(Rat::zero());
    for f in sc.curve.components() {
        rhs_tail = rhs_tail.add(&tail_counting(f, CrossingKind::Roots, false));
    }
    let verdict = decide(&grid, &lhs_vals, &rhs_vals, Some((&lhs_tail, &rhs_tail)));
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "N_inv_casorati".to_string(),
                "sum_N_components".to_string(),
                "deficit".to_string(),
            ],
            rows,
        },
    })
}

/// Product-to-sum estimate: `Σ_j m_f(r,H_j)` against the max over
/// independent index tuples of the halved Weil sums, plus a grid-wide
/// constant.
#[derive(Clone, Debug)]
pub struct ProductToSumReport {
    pub holds: bool,
    pub constant: Rat,
    pub table: ReportTable,
}

pub fn product_to_sum_check(sc: &Scenario) -> Result<ProductToSumReport, HarnessError> {
    let n = sc.n();
    let q = sc.q();
    if q > n {
        require_general_position(sc)?;
    }
    let comps: Vec<PLFunction> =
        sc.hyperplanes.iter().map(|h| compose(h, &sc.curve)).collect::<Result<_, _>>()?;
    if comps.iter().any(|c| c.is_bottom()) {
        return Err(HarnessError::DegenerateComposition);
    }
    let u = sc.curve.sup_norm();
    let mut involved: Vec<&PLFunction> = comps.iter().collect();
    involved.push(&u);
    let grid = clip_grid(&sc.grid, &involved)?;

    let subset_size = (n + 1).min(q);
    let subsets = index_subsets(q, subset_size);

    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let weil: Vec<nevanlinna::WeilSample> = sc
            .hyperplanes
            .iter()
            .map(|h| weil_and_proximity(&sc.curve, h, r))
            .collect::<Result<_, _>>()?;
        let lhs: Rat = weil.iter().map(|w| w.m_f.clone()).sum();
        let mut rhs = Rat::zero();
        for lambda_of in [true, false] {
            let mut best: Option<Rat> = None;
            for k in &subsets {
                let sum: Rat = k
                    .iter()
                    .map(|&j| {
                        if lambda_of {
                            weil[j].lambda_plus.clone()
                        } else {
                            weil[j].lambda_minus.clone()
                        }
                    })
                    .sum();
                best = Some(match best {
                    None => sum,
                    Some(b) => {
                        if sum > b {
                            sum
                        } else {
                            b
                        }
                    }
                });
            }
            rhs += half(&best.expect("nonempty subset list"));
        }
        rows.push(vec![r.clone(), lhs.clone(), rhs.clone(), &rhs - &lhs]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }

    let tails = if sc.curve.window().is_none() {
        let norm_as: Vec<Rat> = sc.hyperplanes.iter().map(|h| h.norm()).collect();
        let weil_tails: Vec<(TailAffine, TailAffine)> = comps
            .iter()
            .zip(norm_as.iter())
            .map(|(c, na)| tail_weil(&sc.curve, c, na))
            .collect::<Result<_, _>>()?;
        let mut lhs_tail = TailAffine::constant(Rat::zero());
        for (p, m) in &weil_tails {
            lhs_tail = lhs_tail.add(&p.add(m).scale(&half(&rat_int(1))));
        }
        let mut rhs_tail = TailAffine::constant(Rat::zero());
        for plus_side in [true, false] {
            let per_subset: Vec<TailAffine> = subsets
                .iter()
                .map(|k| {
                    let mut acc = TailAffine::constant(Rat::zero());
                    for &j in k {
                        let t = if plus_side { &weil_tails[j].0 } else { &weil_tails[j].1 };
                        acc = acc.add(t);
                    }
                    acc
                })
                .collect();
            rhs_tail = rhs_tail.add(&tail_max(&per_subset).scale(&half(&rat_int(1))));
        }
        Some((lhs_tail, rhs_tail))
    } else {
        None
    };
    let verdict = decide(&grid, &lhs_vals, &rhs_vals, tails.as_ref().map(|(l, r)| (l, r)));
    let diff: Vec<Rat> = rhs_vals.iter().zip(lhs_vals.iter()).map(|(r, l)| r - l).collect();
    Ok(ProductToSumReport {
        holds: verdict.verdict == Verdict::HoldsEventually,
        constant: -min_of(&diff),
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "sum_m_f".to_string(),
                "max_injection_sum".to_string(),
                "margin".to_string(),
            ],
            rows,
        },
    })
}

fn index_subsets(q: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(q: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            cur.push(i);
            rec(q, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(q, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Complete-hyperplane identity `T_f(r) = N(r, 1_T⊘(P∘f)) + O(1)`: the tail
/// slope of the difference is exactly zero.
pub fn complete_hyperplane_identity(
    curve: &Curve,
    h: &Hyperplane,
    grid: &[Rat],
) -> Result<SlopeReport, HarnessError> {
    if !h.is_complete() {
        return Err(HarnessError::NotComplete);
    }
    if curve.components().iter().any(|f| f.is_bottom()) {
        return Err(HarnessError::DegenerateCurve);
    }
    if !nondegenerate_default(curve)? {
        return Err(HarnessError::DegenerateCurve);
    }
    let comp = compose(h, curve)?;
    let u = curve.sup_norm();
    let grid = clip_grid(grid, &[&u, &comp])?;
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = nevanlinna::cartan_characteristic(curve, r)?;
        let n = counting_roots(&comp, r)?;
        rows.push(vec![r.clone(), t.clone(), n.clone(), &t - &n]);
        lhs_vals.push(t);
        rhs_vals.push(n);
    }
    let verdict = if curve.window().is_none() {
        let lhs_tail = tail_cartan(curve)?;
        let rhs_tail = tail_counting(&comp, CrossingKind::Roots, false);
        let diff: Vec<Rat> =
            rhs_vals.iter().zip(lhs_vals.iter()).map(|(r, l)| r - l).collect();
        SlopeVerdict {
            lhs_tail_slope: lhs_tail.slope.clone(),
            rhs_tail_slope: rhs_tail.slope.clone(),
            difference_min_on_grid: min_of(&diff),
            verdict: if lhs_tail.slope == rhs_tail.slope {
                Verdict::HoldsEventually
            } else {
                Verdict::FailsEventually
            },
        }
    } else {
        // identity on a window: the difference must be eventually constant
        let diff: Vec<Rat> =
            lhs_vals.iter().zip(rhs_vals.iter()).map(|(l, r)| l - r).collect();
        let tail = &diff[diff.len() / 2..];
        let verdict = if tail.len() >= 2 && tail.windows(2).all(|w| w[0] == w[1]) {
            Verdict::HoldsEventually
        } else {
            Verdict::WindowInconclusive
        };
        SlopeVerdict {
            lhs_tail_slope: grid_slope(&grid, &lhs_vals),
            rhs_tail_slope: grid_slope(&grid, &rhs_vals),
            difference_min_on_grid: min_of(
                &rhs_vals.iter().zip(lhs_vals.iter()).map(|(r, l)| r - l).collect::<Vec<_>>(),
            ),
            verdict,
        }
    };
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "T_f".to_string(),
                "N_inv_composition".to_string(),
                "difference".to_string(),
            ],
            rows,
        },
    })
}

/// One-variable second main theorem for a meromorphic function and distinct
/// target values; also evaluates the simplified right-hand side when the
/// pole-floor hypothesis holds.
#[derive(Clone, Debug)]
pub struct MeromorphicSmtReport {
    pub main: SlopeVerdict,
    pub simplified: Option<SlopeVerdict>,
    pub table: ReportTable,
}

/// The induced `TP^1` coefficient vector of a target value.
pub fn tp1_vector(value: &TropScalar) -> Vec<TropScalar> {
    vec![value.clone(), TropScalar::one()]
}

/// Distinctness of `TP^1` values, decided through general position of the
/// induced coefficient vectors.
pub fn tp1_values_distinct(values: &[TropScalar]) -> Result<bool, LinalgError> {
    if values.len() < 2 {
        return Ok(true);
    }
    let vectors: Vec<Vec<TropScalar>> = values.iter().map(tp1_vector).collect();
    linalg::general_position(&vectors, 1)
}

pub fn meromorphic_smt_report(
    f: &PLFunction,
    values: &[TropScalar],
    grid: &[Rat],
) -> Result<MeromorphicSmtReport, HarnessError> {
    if !tp1_values_distinct(values)? {
        return Err(HarnessError::DuplicateValues);
    }
    if f.is_bottom() {
        return Err(HarnessError::DegenerateCurve);
    }
    let q = values.len();
    let shifted: Vec<PLFunction> = values
        .iter()
        .map(|a| match a {
            TropScalar::Bottom => Ok(f.clone()),
            TropScalar::Real(a) => f.max_combine(&PLFunction::constant(a.clone())),
        })
        .collect::<Result<_, _>>()?;
    let grid = clip_grid(grid, &[f])?;

    let coeff = rat_int(q as i64 - 2);
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut simple_rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let sample = characteristic(f, r)?;
        let n_inv_f = counting_roots(f, r)?;
        let lhs = &coeff * &sample.t + &sample.n + &n_inv_f;
        let mut rhs = Rat::zero();
        let mut simple = Rat::zero();
        for g in &shifted {
            let term = counting_roots(g, r)? + &sample.n - counting_poles(g, r)?;
            simple += counting_roots(g, r)?;
            rhs += term;
        }
        rows.push(vec![r.clone(), lhs.clone(), rhs.clone(), simple.clone()]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
        simple_rhs_vals.push(simple);
    }

    let global = f.window().is_none();
    let (main, simplified_verdict) = if global {
        let t_tail = tail_characteristic(f)?;
        let lhs_tail = t_tail
            .scale(&coeff)
            .add(&tail_counting(f, CrossingKind::Poles, false))
            .add(&tail_counting(f, CrossingKind::Roots, false));
        let mut rhs_tail = TailAffine::constant(Rat::zero());
        let mut simple_tail = TailAffine::constant(Rat::zero());
        for g in &shifted {
            rhs_tail = rhs_tail
                .add(&tail_counting(g, CrossingKind::Roots, false))
                .add(&tail_counting(f, CrossingKind::Poles, false))
                .sub(&tail_counting(g, CrossingKind::Poles, false));
            simple_tail = simple_tail.add(&tail_counting(g, CrossingKind::Roots, false));
        }
        (
            decide(&grid, &lhs_vals, &rhs_vals, Some((&lhs_tail, &rhs_tail))),
            decide(&grid, &lhs_vals, &simple_rhs_vals, Some((&lhs_tail, &simple_tail))),
        )
    } else {
        (
            decide(&grid, &lhs_vals, &rhs_vals, None),
            decide(&grid, &lhs_vals, &simple_rhs_vals, None),
        )
    };

    // Simplified form applies when max{a_j} < inf{f at poles}.
    let max_value = values.iter().filter_map(|v| v.as_rat()).max();
    let pole_floor: Option<Rat> = f
        .poles()
        .iter()
        .map(|p| f.eval_finite(&p.location).expect("pole inside domain"))
        .min();
    let hypothesis = match (&max_value, &pole_floor) {
        (None, _) => true,
        (Some(_), None) => true,
        (Some(a), Some(floor)) => *a < floor,
    };

    Ok(MeromorphicSmtReport {
        main,
        simplified: if hypothesis { Some(simplified_verdict) } else { None },
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "lhs".to_string(),
                "rhs".to_string(),
                "rhs_simplified".to_string(),
            ],
            rows,
        },
    })
}

/// Truncated second main theorem check: `T(r,f)` against
/// `Σ_j N^{(1)}(r,1_T⊘(f⊕a_j)) + N^{(1)}(r,f)`. The tropical counterexample
/// comes out as `FailsEventually` with a strict slope gap.
pub fn truncated_counterexample(
    f: &PLFunction,
    values: &[TropScalar],
    grid: &[Rat],
) -> Result<SlopeReport, HarnessError> {
    if !tp1_values_distinct(values)? {
        return Err(HarnessError::DuplicateValues);
    }
    if f.is_bottom() {
        return Err(HarnessError::DegenerateCurve);
    }
    let shifted: Vec<PLFunction> = values
        .iter()
        .map(|a| match a {
            TropScalar::Bottom => Ok(f.clone()),
            TropScalar::Real(a) => f.max_combine(&PLFunction::constant(a.clone())),
        })
        .collect::<Result<_, _>>()?;
    let grid = clip_grid(grid, &[f])?;

    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = characteristic(f, r)?.t;
        let mut rhs = counting_truncated(f, r, CrossingKind::Poles)?;
        for g in &shifted {
            rhs += counting_truncated(g, r, CrossingKind::Roots)?;
        }
        rows.push(vec![r.clone(), t.clone(), rhs.clone(), &rhs - &t]);
        lhs_vals.push(t);
        rhs_vals.push(rhs);
    }
    let tails = if f.window().is_none() {
        let lhs_tail = tail_characteristic(f)?;
        let mut rhs_tail = tail_counting(f, CrossingKind::Poles, true);
        for g in &shifted {
            rhs_tail = rhs_tail.add(&tail_counting(g, CrossingKind::Roots, true));
        }
        Some((lhs_tail, rhs_tail))
    } else {
        None
    };
    let verdict = decide(&grid, &lhs_vals, &rhs_vals, tails.as_ref().map(|(l, r)| (l, r)));
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "T".to_string(),
                "truncated_rhs".to_string(),
                "margin".to_string(),
            ],
            rows,
        },
    })
}

/// Growth classification from `log T_F(r) / r` samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    Subnormal,
    NotSubnormal,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthClass::Subnormal => write!(f, "subnormal"),
            GrowthClass::NotSubnormal => write!(f, "not-subnormal"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub samples: Vec<(Rat, f64)>,
    pub classification: GrowthClass,
}

/// Diagnostic samples of `log T_F(r) / r`; a monotone increase above 0.1 on
/// the tail quartile flags `NotSubnormal`.
pub fn growth_indicator(curve: &Curve, grid: &[Rat]) -> Result<GrowthReport, HarnessError> {
    let u = curve.sup_norm();
    let grid = clip_grid(grid, &[&u])?;
    let mut samples = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = nevanlinna::cartan_characteristic(curve, r)?;
        if t <= rat_int(1) {
            // pre: T_F > 1 on the sampled tail
            if *r == *grid.last().unwrap() {
                return Err(HarnessError::ZeroCharacteristic);
            }
            continue;
        }
        let tf = t.to_f64().expect("finite characteristic");
        let rf = r.to_f64().expect("finite radius");
        samples.push((r.clone(), libm::log(tf) / rf));
    }
    if samples.is_empty() {
        return Err(HarnessError::ZeroCharacteristic);
    }
    // Net trend over the tail quartile: staircase growth wiggles within
    // segments, so consecutive monotonicity is too strict a filter.
    let tail = &samples[samples.len() - samples.len().div_ceil(4)..];
    let trending_up = tail.len() >= 2 && tail.last().unwrap().1 > tail.first().unwrap().1;
    let classification = if trending_up && tail.last().unwrap().1 > 0.1 {
        GrowthClass::NotSubnormal
    } else {
        GrowthClass::Subnormal
    };
    Ok(GrowthReport { samples, classification })
}

/// Degeneracy-parameter report: `λ* = ddg*` of the pulled-back family, `λ`
/// the `ddg` of the non-single members, the two-sided bound, and the exact
/// equality case when `λ* = n+1`.
#[derive(Clone, Debug)]
pub struct Cc410Report {
    pub lambda_star: usize,
    pub lambda: usize,
    pub lower: SlopeVerdict,
    pub upper: SlopeVerdict,
    pub equality: Option<SlopeVerdict>,
    pub table: ReportTable,
}

pub fn cc410_report(sc: &Scenario) -> Result<Cc410Report, HarnessError> {
    require_general_position(sc)?;
    require_nondegenerate(sc)?;
    let n = sc.n();
    let q = sc.q();

    let lengths: Vec<usize> = sc
        .hyperplanes
        .iter()
        .map(|h| representation_length(h, &sc.curve))
        .collect::<Result<_, _>>()?;
    let singles: Vec<usize> =
        (0..q).filter(|&j| lengths[j] == 1).collect();
    let lambda_star = singles.len();
    let lambda = (0..q)
        .filter(|j| !singles.contains(j))
        .filter(|&j| lengths[j] < n + 1)
        .count();

    let comps: Vec<PLFunction> =
        sc.hyperplanes.iter().map(|h| compose(h, &sc.curve)).collect::<Result<_, _>>()?;
    if comps.iter().any(|c| c.is_bottom()) {
        return Err(HarnessError::DegenerateComposition);
    }
    let u = sc.curve.sup_norm();
    let mut involved: Vec<&PLFunction> = comps.iter().collect();
    involved.push(&u);
    involved.extend(sc.curve.components().iter());
    let grid = clip_grid(&sc.grid, &involved)?;

    let coeff_low = rat_int(q as i64 - n as i64 - 1);
    let coeff_high = rat_int(q as i64 - lambda_star as i64);
    let mut mid_vals = Vec::with_capacity(grid.len());
    let mut t_vals = Vec::with_capacity(grid.len());
    let mut eq_rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let t = nevanlinna::cartan_characteristic(&sc.curve, r)?;
        let mut sum_comp = Rat::zero();
        let mut eq_rhs = Rat::zero();
        for (j, c) in comps.iter().enumerate() {
            let v = counting_roots(c, r)?;
            if !singles.contains(&j) {
                eq_rhs += &v;
            }
            sum_comp += v;
        }
        let mut sum_components = Rat::zero();
        for fc in sc.curve.components() {
            sum_components += counting_roots(fc, r)?;
        }
        let mid = &sum_comp - &sum_components;
        rows.push(vec![r.clone(), t.clone(), mid.clone(), eq_rhs.clone()]);
        t_vals.push(t);
        mid_vals.push(mid);
        eq_rhs_vals.push(eq_rhs);
    }

    let lower_lhs: Vec<Rat> = t_vals.iter().map(|t| &coeff_low * t).collect();
    let upper_rhs: Vec<Rat> = t_vals.iter().map(|t| &coeff_high * t).collect();
    let eq_lhs: Vec<Rat> = lower_lhs.clone();

    let (lower, upper, equality) = if sc.curve.window().is_none() {
        let t_tail = tail_cartan(&sc.curve)?;
        let mut mid_tail = TailAffine::constant(Rat::zero());
        let mut eq_tail = TailAffine::constant(Rat::zero());
        for (j, c) in comps.iter().enumerate() {
            let t = tail_counting(c, CrossingKind::Roots, false);
            if !singles.contains(&j) {
                eq_tail = eq_tail.add(&t);
            }
            mid_tail = mid_tail.add(&t);
        }
        for fc in sc.curve.components() {
            mid_tail = mid_tail.sub(&tail_counting(fc, CrossingKind::Roots, false));
        }
        let lower =
            decide(&grid, &lower_lhs, &mid_vals, Some((&t_tail.scale(&coeff_low), &mid_tail)));
        let upper =
            decide(&grid, &mid_vals, &upper_rhs, Some((&mid_tail, &t_tail.scale(&coeff_high))));
        let equality = if lambda_star == n + 1 {
            let lhs_tail = t_tail.scale(&coeff_low);
            let diff: Vec<Rat> =
                eq_rhs_vals.iter().zip(eq_lhs.iter()).map(|(r, l)| r - l).collect();
            Some(SlopeVerdict {
                lhs_tail_slope: lhs_tail.slope.clone(),
                rhs_tail_slope: eq_tail.slope.clone(),
                difference_min_on_grid: min_of(&diff),
                verdict: if lhs_tail.slope == eq_tail.slope {
                    Verdict::HoldsEventually
                } else {
                    Verdict::FailsEventually
                },
            })
        } else {
            None
        };
        (lower, upper, equality)
    } else {
        let lower = decide(&grid, &lower_lhs, &mid_vals, None);
        let upper = decide(&grid, &mid_vals, &upper_rhs, None);
        let equality = if lambda_star == n + 1 {
            Some(decide(&grid, &eq_lhs, &eq_rhs_vals, None))
        } else {
            None
        };
        (lower, upper, equality)
    };

    Ok(Cc410Report {
        lambda_star,
        lambda,
        lower,
        upper,
        equality,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "T_f".to_string(),
                "middle".to_string(),
                "equality_rhs".to_string(),
            ],
            rows,
        },
    })
}

/// General second main theorem: the per-sign maxima over independent
/// `(n+1)`-subsets of halved Weil sums against
/// `(n+1)·T_F(r) − N(r, 1_T⊘C(f))`.
pub fn general_smt_report(sc: &Scenario) -> Result<SlopeReport, HarnessError> {
    require_nondegenerate(sc)?;
    let n = sc.n();
    let q = sc.q();
    let vectors: Vec<Vec<TropScalar>> =
        sc.hyperplanes.iter().map(|h| h.coefficients().to_vec()).collect();
    let mut independent_subsets: Vec<Vec<usize>> = Vec::new();
    if q > n {
        for k in index_subsets(q, n + 1) {
            let fam: Vec<Vec<TropScalar>> = k.iter().map(|&j| vectors[j].clone()).collect();
            if linalg::vectors_independent(&fam)? {
                independent_subsets.push(k);
            }
        }
    }
    if independent_subsets.is_empty() {
        return Err(HarnessError::NoIndependentSubset);
    }

    let comps: Vec<PLFunction> =
        sc.hyperplanes.iter().map(|h| compose(h, &sc.curve)).collect::<Result<_, _>>()?;
    if comps.iter().any(|c| c.is_bottom()) {
        return Err(HarnessError::DegenerateComposition);
    }
    let cas = casorati(&CasoratiSpec::new(
        sc.curve.components().to_vec(),
        sc.shift.clone(),
    )?)?;
    let u = sc.curve.sup_norm();
    let mut involved: Vec<&PLFunction> = comps.iter().collect();
    involved.push(&u);
    involved.push(&cas);
    let grid = clip_grid(&sc.grid, &involved)?;

    let coeff = rat_int(n as i64 + 1);
    let mut lhs_vals = Vec::with_capacity(grid.len());
    let mut rhs_vals = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for r in &grid {
        let weil: Vec<nevanlinna::WeilSample> = sc
            .hyperplanes
            .iter()
            .map(|h| weil_and_proximity(&sc.curve, h, r))
            .collect::<Result<_, _>>()?;
        let mut lhs = Rat::zero();
        for plus_side in [true, false] {
            let mut best: Option<Rat> = None;
            for k in &independent_subsets {
                let sum: Rat = k
                    .iter()
                    .map(|&j| {
                        if plus_side {
                            weil[j].lambda_plus.clone()
                        } else {
                            weil[j].lambda_minus.clone()
                        }
                    })
                    .sum();
                best = Some(match best {
                    None => sum,
                    Some(b) => {
                        if sum > b {
                            sum
                        } else {
                            b
                        }
                    }
                });
            }
            lhs += half(&best.expect("nonempty"));
        }
        let t = nevanlinna::cartan_characteristic(&sc.curve, r)?;
        let rhs = &coeff * &t - counting_roots(&cas, r)?;
        rows.push(vec![r.clone(), lhs.clone(), rhs.clone(), &rhs - &lhs]);
        lhs_vals.push(lhs);
        rhs_vals.push(rhs);
    }

    let tails = if sc.curve.window().is_none() {
        let weil_tails: Vec<(TailAffine, TailAffine)> = comps
            .iter()
            .zip(sc.hyperplanes.iter())
            .map(|(c, h)| tail_weil(&sc.curve, c, &h.norm()))
            .collect::<Result<_, _>>()?;
        let mut lhs_tail = TailAffine::constant(Rat::zero());
        for plus_side in [true, false] {
            let per_subset: Vec<TailAffine> = independent_subsets
                .iter()
                .map(|k| {
                    let mut acc = TailAffine::constant(Rat::zero());
                    for &j in k {
                        let t = if plus_side { &weil_tails[j].0 } else { &weil_tails[j].1 };
                        acc = acc.add(t);
                    }
                    acc
                })
                .collect();
            lhs_tail = lhs_tail.add(&tail_max(&per_subset).scale(&half(&rat_int(1))));
        }
        let rhs_tail = tail_cartan(&sc.curve)?
            .scale(&coeff)
            .sub(&tail_counting(&cas, CrossingKind::Roots, false));
        Some((lhs_tail, rhs_tail))
    } else {
        None
    };
    let verdict = decide(&grid, &lhs_vals, &rhs_vals, tails.as_ref().map(|(l, r)| (l, r)));
    Ok(SlopeReport {
        verdict,
        table: ReportTable {
            columns: vec![
                "r".to_string(),
                "weil_max_sum".to_string(),
                "rhs".to_string(),
                "margin".to_string(),
            ],
            rows,
        },
    })
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use super::*;

    fn line_curve() -> Curve {
        Curve::new(vec![PLFunction::constant(Rat::zero()), PLFunction::identity()]).unwrap()
    }

    fn coordinate_hyperplanes() -> Vec<Hyperplane> {
        vec![
            Hyperplane::new(vec![TropScalar::one(), TropScalar::Bottom]).unwrap(),
            Hyperplane::new(vec![TropScalar::Bottom, TropScalar::one()]).unwrap(),
            Hyperplane::new(vec![TropScalar::one(), TropScalar::one()]).unwrap(),
        ]
    }

    fn int_grid(hi: i64) -> Vec<Rat> {
        (1..=hi).map(rat_int).collect()
    }

    #[test]
    fn fmt_constants_on_line() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(12), rat_int(1))
            .unwrap();
        let report = fmt_report(&sc).unwrap();
        assert_eq!(report.constants, vec![Rat::zero(), Rat::zero(), Rat::zero()]);
    }

    #[test]
    fn line_curve_deficit_zero() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(16), rat_int(1))
            .unwrap();
        let report = smt_main_report(&sc).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
        let deficits = report.table.column("deficit").unwrap();
        assert!(deficits.iter().all(|d| d.is_zero()));
        assert_eq!(report.verdict.lhs_tail_slope, report.verdict.rhs_tail_slope);
    }

    #[test]
    fn complete_identity_on_line() {
        let h = Hyperplane::new(vec![TropScalar::one(), TropScalar::one()]).unwrap();
        let report =
            complete_hyperplane_identity(&line_curve(), &h, &int_grid(12)).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
        assert_eq!(report.verdict.lhs_tail_slope, report.verdict.rhs_tail_slope);
        let incomplete = Hyperplane::new(vec![TropScalar::one(), TropScalar::Bottom]).unwrap();
        assert!(matches!(
            complete_hyperplane_identity(&line_curve(), &incomplete, &int_grid(12)),
            Err(HarnessError::NotComplete)
        ));
    }

    #[test]
    fn general_smt_on_line() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(12), rat_int(1))
            .unwrap();
        let report = general_smt_report(&sc).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
    }

    #[test]
    fn product_to_sum_on_line() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(12), rat_int(1))
            .unwrap();
        let report = product_to_sum_check(&sc).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn default_grid_shape() {
        let g = default_grid(&line_curve());
        assert_eq!(g[0], rat_int(1));
        assert_eq!(*g.last().unwrap(), rat_int(4));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    // Asymmetric family over (0, x): the deficit settles at the constant
    // -7/2, so the bound holds with slope margin exactly zero.
    #[test]
    fn asymmetric_family_exact_deficit() {
        let family = vec![
            Hyperplane::new(vec![TropScalar::from_int(3), TropScalar::Bottom]).unwrap(),
            Hyperplane::new(vec![TropScalar::Bottom, TropScalar::from_int(-1)]).unwrap(),
            Hyperplane::new(vec![TropScalar::from_int(2), TropScalar::from_int(0)]).unwrap(),
            Hyperplane::new(vec![TropScalar::from_int(0), TropScalar::from_int(5)]).unwrap(),
        ];
        let sc = Scenario::new(line_curve(), family, int_grid(16), rat_int(1)).unwrap();

        let report = smt_main_report(&sc).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
        assert_eq!(report.verdict.lhs_tail_slope, rat_int(1));
        assert_eq!(report.verdict.rhs_tail_slope, rat_int(1));
        assert_eq!(report.verdict.difference_min_on_grid, crate::scalar::rat(-7, 2));
        let deficits = report.table.column("deficit").unwrap();
        assert_eq!(*deficits.last().unwrap(), crate::scalar::rat(-7, 2));
        // before every root has entered, the deficit is still -r
        assert_eq!(deficits[0], rat_int(-1));

        let fmt = fmt_report(&sc).unwrap();
        assert_eq!(fmt.constants, vec![Rat::zero(); 4]);

        let cc = cc410_report(&sc).unwrap();
        assert_eq!(cc.lambda_star, 2);
        assert_eq!(cc.lambda, 0);
        let eq = cc.equality.expect("maximal 1-degeneracy engaged");
        assert_eq!(eq.verdict, Verdict::HoldsEventually);
        assert_eq!(eq.difference_min_on_grid, crate::scalar::rat(-7, 2));
    }

    #[test]
    fn smt_casorati_on_line() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(12), rat_int(1))
            .unwrap();
        let report = smt_casorati_report(&sc).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
        // C(0, x) = x+1 is root-free, so the deficit is identically zero
        let deficits = report.table.column("deficit").unwrap();
        assert!(deficits.iter().all(|d| d.is_zero()));
    }

    #[test]
    fn casorati_counting_on_line() {
        let sc = Scenario::new(line_curve(), coordinate_hyperplanes(), int_grid(12), rat_int(1))
            .unwrap();
        let report = casorati_counting_check(&sc).unwrap();
        // C(0, x) = x+1 has no roots, so both sides have slope 0
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
        assert_eq!(report.verdict.lhs_tail_slope, Rat::zero());
        assert_eq!(report.verdict.rhs_tail_slope, Rat::zero());
        let e2 = crate::plfun::e2_on_window(rat_int(-8), rat_int(8)).unwrap();
        let windowed =
            Curve::new(vec![PLFunction::constant(Rat::zero()), e2]).unwrap();
        let sc = Scenario::new(windowed, coordinate_hyperplanes(), int_grid(4), rat_int(1))
            .unwrap();
        assert!(matches!(casorati_counting_check(&sc), Err(HarnessError::WindowedCurve)));
    }

    #[test]
    fn product_to_sum_single_hyperplane() {
        // q = 1 <= n+1 cannot break the estimate
        let h = vec![Hyperplane::new(vec![TropScalar::one(), TropScalar::one()]).unwrap()];
        let sc = Scenario::new(line_curve(), h, int_grid(12), rat_int(1)).unwrap();
        assert!(product_to_sum_check(&sc).unwrap().holds);
    }

    #[test]
    fn general_smt_needs_independent_subset() {
        let same = Hyperplane::new(vec![TropScalar::one(), TropScalar::one()]).unwrap();
        let sc = Scenario::new(
            line_curve(),
            vec![same.clone(), same],
            int_grid(12),
            rat_int(1),
        )
        .unwrap();
        assert!(matches!(general_smt_report(&sc), Err(HarnessError::NoIndependentSubset)));
    }

    #[test]
    fn growth_on_polynomial_curve_is_subnormal() {
        let report = growth_indicator(&line_curve(), &int_grid(32)).unwrap();
        assert_eq!(report.classification, GrowthClass::Subnormal);
        // log(r/2)/r decays towards zero
        let tail = &report.samples[report.samples.len() - 4..];
        assert!(tail.windows(2).all(|w| w[0].1 >= w[1].1));
    }

    #[test]
    fn truncated_equals_full_on_simple_functions() {
        // all crossings simple: the truncated right side is the full one and
        // the inequality is not violated
        let ramp = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(1)),
        ])
        .unwrap();
        let values = vec![TropScalar::from_int(-5), TropScalar::from_int(7)];
        let report = truncated_counterexample(&ramp, &values, &int_grid(24)).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::HoldsEventually);
    }

    #[test]
    fn growth_rejects_flat_curves() {
        let flat = Curve::new(vec![
            PLFunction::constant(rat_int(2)),
            PLFunction::constant(rat_int(2)),
        ])
        .unwrap();
        assert!(matches!(
            growth_indicator(&flat, &int_grid(8)),
            Err(HarnessError::ZeroCharacteristic)
        ));
    }

    #[test]
    fn smt_main_requires_general_position() {
        let p = Hyperplane::new(vec![TropScalar::from_int(0), TropScalar::from_int(3)]).unwrap();
        let q = Hyperplane::new(vec![TropScalar::from_int(1), TropScalar::from_int(4)]).unwrap();
        let sc = Scenario::new(line_curve(), vec![p, q], int_grid(12), rat_int(1)).unwrap();
        assert!(matches!(smt_main_report(&sc), Err(HarnessError::NotGeneralPosition)));
    }

    #[test]
    fn scenario_validation() {
        assert!(matches!(
            Scenario::new(line_curve(), vec![], vec![], rat_int(1)),
            Err(HarnessError::EmptyGrid)
        ));
        assert!(matches!(
            Scenario::new(line_curve(), vec![], vec![rat_int(2), rat_int(1)], rat_int(1)),
            Err(HarnessError::BadGrid)
        ));
        assert!(matches!(
            Scenario::new(line_curve(), vec![], int_grid(4), rat_int(0)),
            Err(HarnessError::ZeroShift)
        ));
        let wide = Hyperplane::new(vec![TropScalar::one(); 3]).unwrap();
        assert!(matches!(
            Scenario::new(line_curve(), vec![wide], int_grid(4), rat_int(1)),
            Err(HarnessError::DimensionMismatch)
        ));
    }

    #[test]
    fn tp1_distinctness() {
        let vals =
            vec![TropScalar::from_int(-12), TropScalar::from_int(-2), TropScalar::Bottom];
        assert!(tp1_values_distinct(&vals).unwrap());
        let dup = vec![TropScalar::from_int(3), TropScalar::from_int(3)];
        assert!(!tp1_values_distinct(&dup).unwrap());
        let dup_bottom = vec![TropScalar::Bottom, TropScalar::Bottom];
        assert!(!tp1_values_distinct(&dup_bottom).unwrap());
    }
}

//! Nevanlinna functionals for piecewise-linear functions: proximity,
//! counting (closed form, optionally truncated), characteristic, the Jensen
//! identity, Cartan's characteristic for curves, and Weil functions.
//!
//! Counting integrates `n(t)/2` in closed form:
//! `N(r) = (1/2) Σ_{|b|<r} w_b (r − |b|)` with `w_b` the multiplicity (or 1
//! when truncated), so every value is an exact rational. Windowed functions
//! demand `[-r, r]` inside the window; nothing is extrapolated.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::curve::{compose, Curve, CurveError, Hyperplane};
use crate::plfun::{PLFunction, PlError};
use crate::scalar::{half, rat_int, rat_plus, Rat, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NevanlinnaError {
    /// `[-r, r]` is not inside the window (or `r ≤ 0`).
    OutOfWindow,
    /// Functional of the identically-`0_T` function.
    BottomFunction,
    /// `P∘f` identically `0_T`.
    DegenerateComposition,
    /// Characteristic vanishes where a ratio needs it positive.
    ZeroCharacteristic,
    Pl(PlError),
    CurveE(CurveError),
}

impl fmt::Display for NevanlinnaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NevanlinnaError::OutOfWindow => write!(f, "radius outside the analysis window"),
            NevanlinnaError::BottomFunction => write!(f, "functional of the 0_T function"),
            NevanlinnaError::DegenerateComposition => {
                write!(f, "composition is identically 0_T")
            }
            NevanlinnaError::ZeroCharacteristic => write!(f, "characteristic is not positive"),
            NevanlinnaError::Pl(e) => write!(f, "{}", e),
            NevanlinnaError::CurveE(e) => write!(f, "{}", e),
        }
    }
}

impl From<PlError> for NevanlinnaError {
    fn from(e: PlError) -> Self {
        match e {
            PlError::OutOfWindow => NevanlinnaError::OutOfWindow,
            other => NevanlinnaError::Pl(other),
        }
    }
}

impl From<CurveError> for NevanlinnaError {
    fn from(e: CurveError) -> Self {
        NevanlinnaError::CurveE(e)
    }
}

/// Which crossings a counting function charges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingKind {
    Roots,
    Poles,
}

/// One row of the `m/N/T` table; `t = m + n` by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NevanlinnaSample {
    pub r: Rat,
    pub m: Rat,
    pub n: Rat,
    pub t: Rat,
}

/// Weil values at `±r` and their average.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilSample {
    pub r: Rat,
    pub lambda_plus: Rat,
    pub lambda_minus: Rat,
    pub m_f: Rat,
}

fn check_radius(f: &PLFunction, r: &Rat) -> Result<(), NevanlinnaError> {
    if !r.is_positive() {
        return Err(NevanlinnaError::OutOfWindow);
    }
    if let Some((lo, hi)) = f.window() {
        if !(lo <= -r.clone() && *r <= hi) {
            return Err(NevanlinnaError::OutOfWindow);
        }
    }
    Ok(())
}

fn plus_part(v: &TropScalar) -> Rat {
    match v {
        TropScalar::Bottom => Rat::zero(),
        TropScalar::Real(x) => rat_plus(x),
    }
}

/// `m(r,f) = (f⁺(r) + f⁺(-r)) / 2`.
pub fn proximity(f: &PLFunction, r: &Rat) -> Result<Rat, NevanlinnaError> {
    check_radius(f, r)?;
    let vp = plus_part(&f.eval(r)?);
    let vm = plus_part(&f.eval(&-r.clone())?);
    Ok(half(&(vp + vm)))
}

fn counting_weighted(
    f: &PLFunction,
    r: &Rat,
    kind: CrossingKind,
    truncated: bool,
) -> Result<Rat, NevanlinnaError> {
    check_radius(f, r)?;
    let mut acc = Rat::zero();
    for c in f.crossings() {
        let counted = match kind {
            CrossingKind::Roots => c.jump.is_positive(),
            CrossingKind::Poles => c.jump.is_negative(),
        };
        if !counted {
            continue;
        }
        let dist = c.location.abs();
        if dist < *r {
            // truncation at level one caps the multiplicity at 1
            let mult = c.jump.abs();
            let weight = if truncated && mult > rat_int(1) { rat_int(1) } else { mult };
            acc += weight * (r - dist);
        }
    }
    Ok(half(&acc))
}

/// `N(r,f)`: pole counting.
pub fn counting_poles(f: &PLFunction, r: &Rat) -> Result<Rat, NevanlinnaError> {
    counting_weighted(f, r, CrossingKind::Poles, false)
}

/// `N(r, 1_T ⊘ f)`: root counting.
pub fn counting_roots(f: &PLFunction, r: &Rat) -> Result<Rat, NevanlinnaError> {
    counting_weighted(f, r, CrossingKind::Roots, false)
}

/// `N^{(1)}`: every crossing counts once, whatever its multiplicity.
pub fn counting_truncated(
    f: &PLFunction,
    r: &Rat,
    kind: CrossingKind,
) -> Result<Rat, NevanlinnaError> {
    counting_weighted(f, r, kind, true)
}

/// `T(r,f) = m(r,f) + N(r,f)` assembled as one sample.
pub fn characteristic(f: &PLFunction, r: &Rat) -> Result<NevanlinnaSample, NevanlinnaError> {
    let m = proximity(f, r)?;
    let n = counting_poles(f, r)?;
    let t = &m + &n;
    Ok(NevanlinnaSample { r: r.clone(), m, n, t })
}

/// Jensen residue `N(r,1_T⊘f) − N(r,f) − [(f(r)+f(−r))/2 − f(0)]`; the
/// tropical Jensen formula says this is exactly zero.
pub fn jensen_defect(f: &PLFunction, r: &Rat) -> Result<Rat, NevanlinnaError> {
    if f.is_bottom() {
        return Err(NevanlinnaError::BottomFunction);
    }
    check_radius(f, r)?;
    let lhs = counting_roots(f, r)? - counting_poles(f, r)?;
    let fr = f.eval_finite(r)?;
    let fm = f.eval_finite(&-r.clone())?;
    let f0 = f.eval_finite(&Rat::zero())?;
    let rhs = half(&(fr + fm)) - f0;
    Ok(lhs - rhs)
}

/// Cartan characteristic `T_F(r) = (‖F(r)‖+‖F(−r)‖)/2 − ‖F(0)‖`.
pub fn cartan_characteristic(curve: &Curve, r: &Rat) -> Result<Rat, NevanlinnaError> {
    let u = curve.sup_norm();
    check_radius(&u, r)?;
    let up = u.eval_finite(r)?;
    let um = u.eval_finite(&-r.clone())?;
    let u0 = u.eval_finite(&Rat::zero())?;
    Ok(half(&(up + um)) - u0)
}

/// Weil function `λ_H(F(x)) = ‖F(x)‖ + ‖a‖ − (P∘F)(x)` at `±r`, with the
/// proximity `m_f(r,H)` as the average.
pub fn weil_and_proximity(
    curve: &Curve,
    h: &Hyperplane,
    r: &Rat,
) -> Result<WeilSample, NevanlinnaError> {
    let comp = compose(h, curve)?;
    if comp.is_bottom() {
        return Err(NevanlinnaError::DegenerateComposition);
    }
    let u = curve.sup_norm();
    check_radius(&u, r)?;
    check_radius(&comp, r)?;
    let norm_a = h.norm();
    let minus_r = -r.clone();
    let lambda_plus = u.eval_finite(r)? + &norm_a - comp.eval_finite(r)?;
    let lambda_minus = u.eval_finite(&minus_r)? + &norm_a - comp.eval_finite(&minus_r)?;
    let m_f = half(&(&lambda_plus + &lambda_minus));
    Ok(WeilSample { r: r.clone(), lambda_plus, lambda_minus, m_f })
}

/// Defect estimate: minimum of `m_f/T_F` over the last quartile of the grid.
/// A liminf proxy, documented as an estimate.
pub fn defect_estimate(
    curve: &Curve,
    h: &Hyperplane,
    grid: &[Rat],
) -> Result<Rat, NevanlinnaError> {
    if grid.is_empty() {
        return Err(NevanlinnaError::ZeroCharacteristic);
    }
    let tail_start = grid.len() - grid.len().div_ceil(4);
    let mut best: Option<Rat> = None;
    for r in &grid[tail_start..] {
        let t = cartan_characteristic(curve, r)?;
        if !t.is_positive() {
            return Err(NevanlinnaError::ZeroCharacteristic);
        }
        let m = weil_and_proximity(curve, h, r)?.m_f;
        let ratio = m / t;
        best = Some(match best {
            None => ratio,
            Some(b) => {
                if ratio < b {
                    ratio
                } else {
                    b
                }
            }
        });
    }
    Ok(best.unwrap())
}

/// `(r, m, N, T)` rows over a grid, for report tables.
pub fn characteristic_rows(
    f: &PLFunction,
    grid: &[Rat],
) -> Result<Vec<NevanlinnaSample>, NevanlinnaError> {
    grid.iter().map(|r| characteristic(f, r)).collect()
}

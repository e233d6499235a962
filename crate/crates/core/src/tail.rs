//! Exact eventual behaviour of report quantities as functions of the radius.
//!
//! Every Nevanlinna quantity of a global piecewise-linear function is itself
//! piecewise linear in `r` and affine beyond a computable radius. A
//! [`TailAffine`] records that affine tail (`slope·r + intercept` for
//! `r ≥ valid_from`); sums, differences, scalings and maxima of tails are
//! again tails, which turns every "`… + O(1)`" conclusion into an exact
//! rational slope comparison.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::curve::Curve;
use crate::nevanlinna::CrossingKind;
use crate::plfun::{PLFunction, PlError};
use crate::scalar::{half, Rat};

/// `value(r) = slope·r + intercept`, valid for `r ≥ valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailAffine {
    pub slope: Rat,
    pub intercept: Rat,
    pub valid_from: Rat,
}

impl TailAffine {
    pub fn constant(c: Rat) -> Self {
        TailAffine { slope: Rat::zero(), intercept: c, valid_from: Rat::zero() }
    }

    pub fn value_at(&self, r: &Rat) -> Rat {
        &self.slope * r + &self.intercept
    }

    pub fn add(&self, other: &Self) -> Self {
        TailAffine {
            slope: &self.slope + &other.slope,
            intercept: &self.intercept + &other.intercept,
            valid_from: max_rat(&self.valid_from, &other.valid_from),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TailAffine {
            slope: &self.slope - &other.slope,
            intercept: &self.intercept - &other.intercept,
            valid_from: max_rat(&self.valid_from, &other.valid_from),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        TailAffine {
            slope: &self.slope * k,
            intercept: &self.intercept * k,
            valid_from: self.valid_from.clone(),
        }
    }

    pub fn add_const(&self, c: &Rat) -> Self {
        TailAffine {
            slope: self.slope.clone(),
            intercept: &self.intercept + c,
            valid_from: self.valid_from.clone(),
        }
    }

    /// Pointwise maximum for large `r`: the winner at infinity, valid beyond
    /// the crossing of the two lines.
    pub fn max(&self, other: &Self) -> Self {
        let mut from = max_rat(&self.valid_from, &other.valid_from);
        let winner = if self.slope != other.slope {
            let crossing = (&other.intercept - &self.intercept) / (&self.slope - &other.slope);
            from = max_rat(&from, &crossing);
            if self.slope > other.slope {
                self
            } else {
                other
            }
        } else if self.intercept >= other.intercept {
            self
        } else {
            other
        };
        TailAffine { slope: winner.slope.clone(), intercept: winner.intercept.clone(), valid_from: from }
    }
}

fn max_rat(a: &Rat, b: &Rat) -> Rat {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Sums a list of tails.
pub fn tail_sum(tails: &[TailAffine]) -> TailAffine {
    let mut acc = TailAffine::constant(Rat::zero());
    for t in tails {
        acc = acc.add(t);
    }
    acc
}

/// Tail of `r ↦ f(r)` for a global function.
pub fn tail_at_plus(f: &PLFunction) -> Result<TailAffine, PlError> {
    let (_, right) = f.asymptotic_slopes()?;
    let b = f.breakpoints().last().cloned().unwrap_or_else(Rat::zero);
    let v = f.eval_finite(&b)?;
    let intercept = v - &right * &b;
    let valid_from = if b.is_positive() { b } else { Rat::zero() };
    Ok(TailAffine { slope: right, intercept, valid_from })
}

/// Tail of `r ↦ f(-r)` for a global function.
pub fn tail_at_minus(f: &PLFunction) -> Result<TailAffine, PlError> {
    let (left, _) = f.asymptotic_slopes()?;
    let b = f.breakpoints().first().cloned().unwrap_or_else(Rat::zero);
    let v = f.eval_finite(&b)?;
    let intercept = v - &left * &b;
    let neg_b = -b;
    let valid_from = if neg_b.is_positive() { neg_b } else { Rat::zero() };
    Ok(TailAffine { slope: -left, intercept, valid_from })
}

/// Tail of a counting function `r ↦ N(r, ·)`: slope is half the total
/// charged multiplicity, affine beyond the farthest charged crossing.
pub fn tail_counting(f: &PLFunction, kind: CrossingKind, truncated: bool) -> TailAffine {
    let mut slope = Rat::zero();
    let mut intercept = Rat::zero();
    let mut valid_from = Rat::zero();
    for c in f.crossings() {
        let counted = match kind {
            CrossingKind::Roots => c.jump.is_positive(),
            CrossingKind::Poles => c.jump.is_negative(),
        };
        if !counted {
            continue;
        }
        let mult = c.jump.abs();
        let one = Rat::from_integer(1.into());
        let weight = if truncated && mult > one { one } else { mult };
        let dist = c.location.abs();
        slope += half(&weight);
        intercept -= half(&(weight * &dist));
        valid_from = max_rat(&valid_from, &dist);
    }
    TailAffine { slope, intercept, valid_from }
}

/// Tail of the proximity `r ↦ m(r, f) = (f⁺(r) + f⁺(-r)) / 2`.
pub fn tail_proximity(f: &PLFunction) -> Result<TailAffine, PlError> {
    let plus = f.max_combine(&PLFunction::constant(Rat::zero()))?;
    Ok(tail_at_plus(&plus)?.add(&tail_at_minus(&plus)?).scale(&half(&Rat::from_integer(1.into()))))
}

/// Tail of the characteristic `r ↦ T(r, f) = m(r, f) + N(r, f)`.
pub fn tail_characteristic(f: &PLFunction) -> Result<TailAffine, PlError> {
    Ok(tail_proximity(f)?.add(&tail_counting(f, CrossingKind::Poles, false)))
}

/// Tail of Cartan's characteristic `r ↦ T_F(r)` of a global curve.
pub fn tail_cartan(curve: &Curve) -> Result<TailAffine, PlError> {
    let u = curve.sup_norm();
    let u0 = u.eval_finite(&Rat::zero())?;
    Ok(tail_at_plus(&u)?
        .add(&tail_at_minus(&u)?)
        .scale(&half(&Rat::from_integer(1.into())))
        .add_const(&-u0))
}

/// Tails of the Weil function `r ↦ λ_H(F(σr))` for `σ = +1, -1`.
pub fn tail_weil(
    curve: &Curve,
    composition: &PLFunction,
    norm_a: &Rat,
) -> Result<(TailAffine, TailAffine), PlError> {
    let u = curve.sup_norm();
    let plus = tail_at_plus(&u)?.add_const(norm_a).sub(&tail_at_plus(composition)?);
    let minus = tail_at_minus(&u)?.add_const(norm_a).sub(&tail_at_minus(composition)?);
    Ok((plus, minus))
}

/// Maximum of a nonempty list of tails.
pub fn tail_max(tails: &[TailAffine]) -> TailAffine {
    let mut it = tails.iter();
    let mut acc = it.next().expect("nonempty tail list").clone();
    for t in it {
        acc = acc.max(t);
    }
    acc
}

/// Grid values of any exact evaluator, for the report tables.
pub fn grid_values<F: FnMut(&Rat) -> Rat>(grid: &[Rat], f: F) -> Vec<Rat> {
    grid.iter().map(f).collect()
}

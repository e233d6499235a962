//! Tropical Casorati determinants of function tuples.
//!
//! `C(f_0,…,f_n)(x) = ⊕_π f_0(x+π(0)c) ⊗ … ⊗ f_n(x+π(n)c)` over all
//! permutations of the shift indices `0..=n`. The result is itself a
//! piecewise-linear function; permutation terms are combined pairwise in a
//! balanced tree to keep intermediate breakpoint counts low. A tuple
//! containing the `0_T` function annihilates the whole determinant.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::plfun::{PLFunction, PlError};
use crate::scalar::{rat_int, Rat};

/// Factorial guard: at most 7 functions (5040 permutation terms).
pub const MAX_CASORATI_ARITY: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CasoratiError {
    /// More functions than the factorial guard allows.
    TooLarge,
    /// Empty tuple.
    Empty,
    /// Shift constant `c = 0`.
    ZeroShift,
    /// Windowed inputs do not cover the window shifted by `n·c`.
    WindowTooSmall,
    Pl(PlError),
}

impl fmt::Display for CasoratiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CasoratiError::TooLarge => write!(f, "too many functions for permanent expansion"),
            CasoratiError::Empty => write!(f, "empty function tuple"),
            CasoratiError::ZeroShift => write!(f, "shift constant must be nonzero"),
            CasoratiError::WindowTooSmall => {
                write!(f, "window too small for the shifted tuple")
            }
            CasoratiError::Pl(e) => write!(f, "{}", e),
        }
    }
}

impl From<PlError> for CasoratiError {
    fn from(e: PlError) -> Self {
        match e {
            PlError::EmptyWindow => CasoratiError::WindowTooSmall,
            other => CasoratiError::Pl(other),
        }
    }
}

/// A function tuple together with the shift constant `c ≠ 0`.
#[derive(Clone, Debug)]
pub struct CasoratiSpec {
    pub functions: Vec<PLFunction>,
    pub shift: Rat,
}

impl CasoratiSpec {
    pub fn new(functions: Vec<PLFunction>, shift: Rat) -> Result<Self, CasoratiError> {
        if functions.is_empty() {
            return Err(CasoratiError::Empty);
        }
        if functions.len() > MAX_CASORATI_ARITY {
            return Err(CasoratiError::TooLarge);
        }
        if shift.is_zero() {
            return Err(CasoratiError::ZeroShift);
        }
        Ok(CasoratiSpec { functions, shift })
    }
}

/// Domain on which every shift `x + k·c`, `k = 0..=n`, stays inside the
/// windows of the windowed inputs. `None` when every input is global.
fn result_window(spec: &CasoratiSpec) -> Result<Option<(Rat, Rat)>, CasoratiError> {
    let n = spec.functions.len() - 1;
    let reach = rat_int(n as i64) * &spec.shift;
    let mut acc: Option<(Rat, Rat)> = None;
    for f in &spec.functions {
        if let Some((lo, hi)) = f.window() {
            let (wlo, whi) = if spec.shift.is_positive() || reach.is_zero() {
                (lo, hi - &reach)
            } else {
                (lo - &reach, hi)
            };
            acc = Some(match acc {
                None => (wlo, whi),
                Some((alo, ahi)) => {
                    (if wlo > alo { wlo } else { alo }, if whi < ahi { whi } else { ahi })
                }
            });
        }
    }
    if let Some((lo, hi)) = &acc {
        if lo >= hi {
            return Err(CasoratiError::WindowTooSmall);
        }
    }
    Ok(acc)
}

fn for_each_permutation<F: FnMut(&[usize])>(n: usize, f: &mut F) {
    fn heap<F: FnMut(&[usize])>(perm: &mut [usize], k: usize, f: &mut F) {
        if k <= 1 {
            f(perm);
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, f);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    heap(&mut perm, n, f);
}

fn balanced_max(mut terms: Vec<PLFunction>) -> Result<PLFunction, PlError> {
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.max_combine(&b)?),
                None => next.push(a),
            }
        }
        terms = next;
    }
    Ok(terms.pop().expect("nonempty term list"))
}

/// The Casorati determinant as a canonical piecewise-linear function.
pub fn casorati(spec: &CasoratiSpec) -> Result<PLFunction, CasoratiError> {
    if spec.functions.is_empty() {
        return Err(CasoratiError::Empty);
    }
    if spec.functions.len() > MAX_CASORATI_ARITY {
        return Err(CasoratiError::TooLarge);
    }
    if spec.shift.is_zero() {
        return Err(CasoratiError::ZeroShift);
    }
    if spec.functions.iter().any(|f| f.is_bottom()) {
        return Ok(PLFunction::Bottom);
    }
    let window = result_window(spec)?;
    let k = spec.functions.len();

    // Per-function shifted copies, restricted to the shared result window.
    let mut shifted: Vec<Vec<PLFunction>> = Vec::with_capacity(k);
    for f in &spec.functions {
        let mut row = Vec::with_capacity(k);
        for step in 0..k {
            let g = f.shift(&(rat_int(step as i64) * &spec.shift));
            let g = match &window {
                None => g,
                Some((lo, hi)) => g.restrict(lo, hi)?,
            };
            row.push(g);
        }
        shifted.push(row);
    }

    let mut terms: Vec<PLFunction> = Vec::new();
    let mut err: Option<PlError> = None;
    for_each_permutation(k, &mut |perm| {
        if err.is_some() {
            return;
        }
        let mut acc = shifted[0][perm[0]].clone();
        for (j, &step) in perm.iter().enumerate().skip(1) {
            match acc.add_combine(&shifted[j][step]) {
                Ok(v) => acc = v,
                Err(e) => {
                    err = Some(e);
                    return;
                }
            }
        }
        terms.push(acc);
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(balanced_max(terms)?)
}

/// Structural properties of the Casorati determinant on a concrete tuple:
/// symmetry under component swap, the shift bound
/// `C(1_T, f_1,…,f_n) ≥ C(f̄_1,…,f̄_n)`, annihilation by `0_T`, and the
/// common-factor identity
/// `C(f_0⊗h,…,f_n⊗h) = h ⊗ h̄ ⊗ … ⊗ h̄^{[n]} ⊗ C(f_0,…,f_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasoratiProperties {
    pub symmetry: bool,
    pub shift_bound: bool,
    pub bottom_annihilation: bool,
    pub factorization: bool,
}

impl CasoratiProperties {
    pub fn all_hold(&self) -> bool {
        self.symmetry && self.shift_bound && self.bottom_annihilation && self.factorization
    }
}

pub fn casorati_properties_check(
    spec: &CasoratiSpec,
    h: &PLFunction,
) -> Result<CasoratiProperties, CasoratiError> {
    let base = casorati(spec)?;
    let k = spec.functions.len();

    let symmetry = if k >= 2 {
        let mut swapped = spec.functions.clone();
        swapped.swap(0, 1);
        casorati(&CasoratiSpec { functions: swapped, shift: spec.shift.clone() })? == base
    } else {
        true
    };

    let shift_bound = if k >= 2 {
        let mut with_one = spec.functions.clone();
        with_one[0] = PLFunction::constant(Rat::zero());
        let lhs = casorati(&CasoratiSpec { functions: with_one, shift: spec.shift.clone() })?;
        let tail: Vec<PLFunction> =
            spec.functions[1..].iter().map(|f| f.shift(&spec.shift)).collect();
        let rhs = casorati(&CasoratiSpec { functions: tail, shift: spec.shift.clone() })?;
        rhs.pointwise_le(&lhs)?
    } else {
        true
    };

    let bottom_annihilation = {
        let mut with_bottom = spec.functions.clone();
        with_bottom[0] = PLFunction::Bottom;
        casorati(&CasoratiSpec { functions: with_bottom, shift: spec.shift.clone() })?
            == PLFunction::Bottom
    };

    let factorization = {
        let scaled: Vec<PLFunction> = spec
            .functions
            .iter()
            .map(|f| f.add_combine(h))
            .collect::<Result<_, _>>()?;
        let lhs = casorati(&CasoratiSpec { functions: scaled, shift: spec.shift.clone() })?;
        let mut factor = h.clone();
        for step in 1..k {
            factor =
                factor.add_combine(&h.shift(&(rat_int(step as i64) * &spec.shift)))?;
        }
        let rhs = factor.add_combine(&base)?;
        lhs.eq_on_common_domain(&rhs)?
    };

    Ok(CasoratiProperties { symmetry, shift_bound, bottom_annihilation, factorization })
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use super::*;
    use crate::plfun::e2_on_window;
    use crate::scalar::TropScalar;

    #[test]
    fn two_permutation_example() {
        // C(0, x) with c = 1 is max(x+1, x) = x+1
        let spec = CasoratiSpec::new(
            vec![PLFunction::constant(rat_int(0)), PLFunction::identity()],
            rat_int(1),
        )
        .unwrap();
        let c = casorati(&spec).unwrap();
        assert_eq!(c, PLFunction::affine(rat_int(1), rat_int(1)));
    }

    #[test]
    fn e2_casorati_is_shift() {
        let e2 = e2_on_window(rat_int(-8), rat_int(8)).unwrap();
        let spec = CasoratiSpec::new(
            vec![PLFunction::constant(rat_int(0)), e2.clone()],
            rat_int(1),
        )
        .unwrap();
        let c = casorati(&spec).unwrap();
        assert_eq!(c.window(), Some((rat_int(-8), rat_int(7))));
        let shifted = e2.shift(&rat_int(1)).restrict(&rat_int(-8), &rat_int(7)).unwrap();
        assert_eq!(c, shifted);
        assert_eq!(c.eval(&rat_int(0)).unwrap(), TropScalar::from_int(2));
    }

    #[test]
    fn bottom_annihilates() {
        let spec = CasoratiSpec::new(
            vec![PLFunction::Bottom, PLFunction::identity()],
            rat_int(1),
        )
        .unwrap();
        assert_eq!(casorati(&spec).unwrap(), PLFunction::Bottom);
    }

    #[test]
    fn properties_on_simple_pair() {
        let spec = CasoratiSpec::new(
            vec![PLFunction::constant(rat_int(0)), PLFunction::identity()],
            rat_int(1),
        )
        .unwrap();
        let h = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(-1), rat_int(2)),
        ])
        .unwrap();
        let props = casorati_properties_check(&spec, &h).unwrap();
        assert!(props.all_hold(), "{:?}", props);
    }

    #[test]
    fn arity_guard() {
        let fns = vec![PLFunction::identity(); 8];
        assert!(matches!(CasoratiSpec::new(fns, rat_int(1)), Err(CasoratiError::TooLarge)));
        assert!(matches!(
            CasoratiSpec::new(vec![PLFunction::identity()], rat_int(0)),
            Err(CasoratiError::ZeroShift)
        ));
    }

    #[test]
    fn window_must_fit() {
        let tiny = e2_on_window(rat_int(0), rat_int(1)).unwrap();
        let spec = CasoratiSpec::new(
            vec![PLFunction::constant(rat_int(0)), tiny],
            rat_int(2),
        )
        .unwrap();
        assert_eq!(casorati(&spec), Err(CasoratiError::WindowTooSmall));
    }

    #[test]
    fn shift_bound_with_equality() {
        // C(1_T, x) = x+1 and C(x̄) = x+1: the shift bound holds with equality
        let spec = CasoratiSpec::new(
            vec![PLFunction::constant(rat_int(0)), PLFunction::identity()],
            rat_int(1),
        )
        .unwrap();
        let props = casorati_properties_check(&spec, &PLFunction::constant(rat_int(0))).unwrap();
        assert!(props.shift_bound);
    }
}

//! Curves into tropical projective space, hyperplanes, and the witness-level
//! notions of linear dependence and representation length.
//!
//! A curve is an ordered tuple of entire piecewise-linear components with no
//! common roots (a reduced representation). Tropical dependence of the
//! components is certified by witnesses: a coefficient vector `α` such that
//! `max_i(α_i + f_i(x))` is attained at least twice for every `x`. Witness
//! verification is an exact segment analysis, never sampling: on every cell
//! of the partition by the breakpoints of the deficits `g − (α_i + f_i)`
//! (with `g` the combined maximum) each deficit is affine and nonnegative, so
//! it vanishes either on the whole open cell or nowhere inside it, and one
//! probe per cell decides the pattern.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::plfun::{cells, probe_point, PLFunction, PlError};
use crate::scalar::{rat_int, Rat, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveError {
    /// Hyperplane and curve dimensions do not agree.
    DimensionMismatch,
    /// A curve component has a pole.
    ComponentHasPoles,
    /// All components (or all hyperplane coefficients) are `0_T`.
    AllBottom,
    /// The components share a root; the representation is not reduced.
    NotReduced,
    /// Windowed components with different windows.
    WindowMismatch,
    /// Dependence witness with every coefficient `0_T`.
    AllBottomWitness,
    /// Composition `P∘f` is identically `0_T`.
    DegenerateComposition,
    /// Underlying piecewise-linear failure (window misuse and the like).
    Pl(PlError),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::DimensionMismatch => write!(f, "hyperplane/curve dimension mismatch"),
            CurveError::ComponentHasPoles => write!(f, "curve component has a pole"),
            CurveError::AllBottom => write!(f, "all entries are 0_T"),
            CurveError::NotReduced => write!(f, "components share a common root"),
            CurveError::WindowMismatch => write!(f, "components have different windows"),
            CurveError::AllBottomWitness => write!(f, "witness coefficients are all 0_T"),
            CurveError::DegenerateComposition => write!(f, "composition is identically 0_T"),
            CurveError::Pl(e) => write!(f, "{}", e),
        }
    }
}

impl From<PlError> for CurveError {
    fn from(e: PlError) -> Self {
        CurveError::Pl(e)
    }
}

/// Coefficient vector `a ∈ T^{n+1}`, not all `0_T`, defining
/// `P(x) = max_i (a_i + x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    coefficients: Vec<TropScalar>,
}

impl Hyperplane {
    pub fn new(coefficients: Vec<TropScalar>) -> Result<Self, CurveError> {
        if coefficients.is_empty() || coefficients.iter().all(|c| c.is_bottom()) {
            return Err(CurveError::AllBottom);
        }
        Ok(Hyperplane { coefficients })
    }

    pub fn coefficients(&self) -> &[TropScalar] {
        &self.coefficients
    }

    /// Ambient dimension `n` (coefficients live in `T^{n+1}`).
    pub fn dim(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `‖a‖ = max_i a_i`, always finite.
    pub fn norm(&self) -> Rat {
        self.coefficients
            .iter()
            .filter_map(|c| c.as_rat())
            .max()
            .expect("hyperplane has a real coefficient")
            .clone()
    }

    /// All coefficients real (the "complete" hyperplanes of the identity
    /// theorem).
    pub fn is_complete(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_bottom())
    }
}

/// A reduced representation of a map into `TP^n`: `n+1` entire components
/// without common roots, global or sharing one window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    components: Vec<PLFunction>,
}

impl Curve {
    pub fn new(components: Vec<PLFunction>) -> Result<Self, CurveError> {
        if components.len() < 2 {
            return Err(CurveError::DimensionMismatch);
        }
        if components.iter().all(|f| f.is_bottom()) {
            return Err(CurveError::AllBottom);
        }
        if components.iter().any(|f| !f.is_entire()) {
            return Err(CurveError::ComponentHasPoles);
        }
        let mut window: Option<(Rat, Rat)> = None;
        for f in &components {
            if let Some(w) = f.window() {
                match &window {
                    None => window = Some(w),
                    Some(seen) if *seen == w => {}
                    Some(_) => return Err(CurveError::WindowMismatch),
                }
            }
        }
        if !reduced_check(&components) {
            return Err(CurveError::NotReduced);
        }
        Ok(Curve { components })
    }

    pub fn components(&self) -> &[PLFunction] {
        &self.components
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.components.len() - 1
    }

    /// Shared window of the windowed components, if any.
    pub fn window(&self) -> Option<(Rat, Rat)> {
        self.components.iter().find_map(|f| f.window())
    }

    /// `‖f(x)‖ = max_i f_i(x)` as a piecewise-linear function.
    pub fn sup_norm(&self) -> PLFunction {
        let mut acc = PLFunction::Bottom;
        for f in &self.components {
            acc = acc.max_combine(f).expect("components share a window");
        }
        acc
    }

    /// Largest breakpoint magnitude over all components.
    pub fn max_breakpoint_magnitude(&self) -> Option<Rat> {
        self.components.iter().filter_map(|f| f.max_breakpoint_magnitude()).max()
    }
}

/// True iff no location is a root of every component.
pub fn reduced_check(components: &[PLFunction]) -> bool {
    let Some(first) = components.first() else {
        return true;
    };
    'locations: for c in first.roots() {
        for f in &components[1..] {
            if !f.roots().iter().any(|r| r.location == c.location) {
                continue 'locations;
            }
        }
        return false;
    }
    true
}

/// `P∘f = ⊕_i (a_i ⊗ f_i)`; `0_T` only when every participating pair is
/// `0_T`.
pub fn compose(h: &Hyperplane, curve: &Curve) -> Result<PLFunction, CurveError> {
    if h.coefficients.len() != curve.components.len() {
        return Err(CurveError::DimensionMismatch);
    }
    let mut acc = PLFunction::Bottom;
    for (a, f) in h.coefficients.iter().zip(curve.components.iter()) {
        if let TropScalar::Real(a) = a {
            if !f.is_bottom() {
                acc = acc.max_combine(&f.add_scalar(a))?;
            }
        }
    }
    Ok(acc)
}

/// Exact witness check: does `max_i(α_i + f_i(x))` reach its maximum at
/// least twice for every `x` in the analysis domain? `window = None` means
/// all of `R` (every function must then be global).
pub fn verify_dependence_witness(
    functions: &[PLFunction],
    alpha: &[TropScalar],
    window: Option<(Rat, Rat)>,
) -> Result<bool, CurveError> {
    if functions.len() != alpha.len() {
        return Err(CurveError::DimensionMismatch);
    }
    if alpha.iter().all(|a| a.is_bottom()) {
        return Err(CurveError::AllBottomWitness);
    }

    // Terms with a real coefficient and a finite function take part in the
    // maximum; the rest are identically 0_T.
    let mut terms: Vec<PLFunction> = Vec::new();
    let mut bottom_terms = 0usize;
    for (a, f) in alpha.iter().zip(functions.iter()) {
        match (a, f) {
            (TropScalar::Bottom, _) => {}
            (TropScalar::Real(_), PLFunction::Bottom) => bottom_terms += 1,
            (TropScalar::Real(a), f) => {
                let t = f.add_scalar(a);
                let t = match &window {
                    None => {
                        if t.is_windowed() {
                            return Err(CurveError::Pl(PlError::OutOfWindow));
                        }
                        t
                    }
                    Some((lo, hi)) => t.restrict(lo, hi)?,
                };
                terms.push(t);
            }
        }
    }

    match terms.len() {
        // Expression identically 0_T: the degenerate maximum is "attained"
        // by every participating 0_T term.
        0 => return Ok(bottom_terms >= 2),
        1 => return Ok(false),
        _ => {}
    }

    let mut envelope = PLFunction::Bottom;
    for t in &terms {
        envelope = envelope.max_combine(t)?;
    }
    let deficits: Vec<PLFunction> =
        terms.iter().map(|t| envelope.sub_combine(t)).collect::<Result<_, _>>()?;

    // Partition by every deficit breakpoint. Each deficit is affine and >= 0
    // on each cell, so it is zero on the whole open cell or not at all.
    let mut pts: Vec<Rat> = deficits.iter().flat_map(|d| d.breakpoints().to_vec()).collect();
    pts.sort();
    pts.dedup();
    let win = envelope.window();
    for (lo, hi) in cells(&pts, &win) {
        let probe = probe_point(&lo, &hi);
        let attained = deficits
            .iter()
            .filter(|d| d.eval_finite(&probe).map(|v| v.is_zero()).unwrap_or(false))
            .count();
        if attained < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate coefficient vectors for the dependence scan: all index subsets
/// of size ≥ 2, first participating coefficient pinned to `1_T`, remaining
/// ones drawn from breakpoint value differences of the components plus a
/// small integer grid.
pub fn default_candidate_lattice(curve: &Curve) -> Vec<Vec<TropScalar>> {
    let fns = curve.components();
    let m = fns.len();

    // Offsets that can tie two components at a breakpoint.
    let mut values: Vec<Rat> = Vec::new();
    for k in -3i64..=3 {
        values.push(rat_int(k));
    }
    let mut probes: Vec<Rat> = fns.iter().flat_map(|f| f.breakpoints().to_vec()).collect();
    probes.push(Rat::zero());
    if let Some((lo, hi)) = curve.window() {
        probes.retain(|p| *p >= lo && *p <= hi);
        probes.push(lo);
        probes.push(hi);
    }
    probes.sort();
    probes.dedup();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            for p in &probes {
                if let (Ok(TropScalar::Real(vi)), Ok(TropScalar::Real(vj))) =
                    (fns[i].eval(p), fns[j].eval(p))
                {
                    values.push(vi - vj);
                }
            }
        }
    }
    values.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
    values.dedup();
    values.truncate(16);

    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let members: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if members.len() < 2 {
            continue;
        }
        // First member pinned to 1_T; the others range over the value grid.
        let free = members.len() - 1;
        let mut idx = vec![0usize; free];
        loop {
            let mut alpha = vec![TropScalar::Bottom; m];
            alpha[members[0]] = TropScalar::one();
            for (slot, &member) in members[1..].iter().enumerate() {
                alpha[member] = TropScalar::Real(values[idx[slot]].clone());
            }
            out.push(alpha);
            // odometer
            let mut carry = 0;
            loop {
                if carry == free {
                    break;
                }
                idx[carry] += 1;
                if idx[carry] < values.len() {
                    break;
                }
                idx[carry] = 0;
                carry += 1;
            }
            if carry == free {
                break;
            }
        }
    }
    out
}

/// Candidate scan over an arbitrary (possibly meromorphic) function family:
/// `true` means no candidate verifies as a dependence witness.
pub fn family_nondegenerate_witnessed(
    functions: &[PLFunction],
    candidates: &[Vec<TropScalar>],
    window: Option<(Rat, Rat)>,
) -> Result<bool, CurveError> {
    for alpha in candidates {
        if alpha.len() != functions.len() || alpha.iter().all(|a| a.is_bottom()) {
            continue;
        }
        if verify_dependence_witness(functions, alpha, window.clone())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Scans the candidate set for a dependence witness. `true` means "no
/// witness in the candidate set" (relative nondegeneracy); `false` is a
/// proof of degeneracy.
pub fn nondegenerate_witnessed(
    curve: &Curve,
    candidates: &[Vec<TropScalar>],
) -> Result<bool, CurveError> {
    let fns = curve.components();
    let window = curve.window();

    // Cheap rejection pass: a candidate whose maximum is unique at any probe
    // point cannot be a witness. Probe the cells of the breakpoint partition
    // once, with component values precomputed. Global components may carry
    // breakpoints outside the curve window; those do not partition anything.
    let mut pts: Vec<Rat> = fns
        .iter()
        .flat_map(|f| f.breakpoints().to_vec())
        .filter(|b| match &window {
            None => true,
            Some((lo, hi)) => b > lo && b < hi,
        })
        .collect();
    pts.sort();
    pts.dedup();
    let probe_values: Vec<Vec<TropScalar>> = cells(&pts, &window)
        .iter()
        .map(|(lo, hi)| {
            let p = probe_point(lo, hi);
            fns.iter().map(|f| f.eval(&p).expect("probe inside domain")).collect()
        })
        .collect();

    'candidates: for alpha in candidates {
        if alpha.len() != fns.len() || alpha.iter().all(|a| a.is_bottom()) {
            continue;
        }
        for row in &probe_values {
            let terms: Vec<TropScalar> =
                row.iter().zip(alpha.iter()).map(|(v, a)| v.tmul(a)).collect();
            let max = terms.iter().max().unwrap();
            if !max.is_bottom() && terms.iter().filter(|t| *t == max).count() < 2 {
                continue 'candidates;
            }
        }
        if verify_dependence_witness(fns, alpha, window.clone())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: nondegeneracy against the default candidate lattice.
pub fn nondegenerate_default(curve: &Curve) -> Result<bool, CurveError> {
    nondegenerate_witnessed(curve, &default_candidate_lattice(curve))
}

/// Shortest representation length `ℓ(g)` of `g = P∘f`: the least number of
/// real-coefficient terms whose maximum still equals `g` pointwise.
pub fn representation_length(h: &Hyperplane, curve: &Curve) -> Result<usize, CurveError> {
    let target = compose(h, curve)?;
    if target.is_bottom() {
        return Err(CurveError::DegenerateComposition);
    }
    let participating: Vec<usize> = h
        .coefficients
        .iter()
        .enumerate()
        .filter(|(i, a)| !a.is_bottom() && !curve.components[*i].is_bottom())
        .map(|(i, _)| i)
        .collect();

    for size in 1..=participating.len() {
        let mut subset: Vec<usize> = Vec::with_capacity(size);
        if subset_matches(h, curve, &target, &participating, size, 0, &mut subset)? {
            return Ok(size);
        }
    }
    Ok(participating.len())
}

fn subset_matches(
    h: &Hyperplane,
    curve: &Curve,
    target: &PLFunction,
    participating: &[usize],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> Result<bool, CurveError> {
    if subset.len() == size {
        let mut acc = PLFunction::Bottom;
        for &i in subset.iter() {
            let a = h.coefficients[i].as_rat().unwrap();
            acc = acc.max_combine(&curve.components[i].add_scalar(a))?;
        }
        return Ok(acc == *target);
    }
    for s in start..participating.len() {
        subset.push(participating[s]);
        if subset_matches(h, curve, target, participating, size, s + 1, subset)? {
            return Ok(true);
        }
        subset.pop();
    }
    Ok(false)
}

/// Count of non-complete combinations (`ℓ < n+1`) in the family.
pub fn ddg(specs: &[Hyperplane], curve: &Curve) -> Result<usize, CurveError> {
    let n = curve.dim();
    let mut count = 0;
    for h in specs {
        if representation_length(h, curve)? < n + 1 {
            count += 1;
        }
    }
    Ok(count)
}

/// Count of single-term combinations (`ℓ = 1`) in the family.
pub fn ddg_star(specs: &[Hyperplane], curve: &Curve) -> Result<usize, CurveError> {
    let mut count = 0;
    for h in specs {
        if representation_length(h, curve)? == 1 {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use super::*;
    use crate::plfun::e2_on_window;

    fn zero_x_curve() -> Curve {
        Curve::new(vec![PLFunction::constant(rat_int(0)), PLFunction::identity()]).unwrap()
    }

    fn dependent_triple() -> Vec<PLFunction> {
        let f0 = PLFunction::from_terms(&[
            (TropScalar::from_int(1), rat_int(-1)),
            (TropScalar::from_int(1), rat_int(0)),
            (TropScalar::from_int(-1), rat_int(1)),
        ])
        .unwrap();
        let f1 = {
            let a = PLFunction::from_terms(&[
                (TropScalar::from_int(0), rat_int(0)),
                (TropScalar::from_int(-4), rat_int(2)),
            ])
            .unwrap();
            let b = PLFunction::from_terms(&[
                (TropScalar::from_int(0), rat_int(-1)),
                (TropScalar::from_int(0), rat_int(0)),
            ])
            .unwrap();
            a.sub_combine(&b).unwrap()
        };
        let f2 = PLFunction::from_terms(&[
            (TropScalar::from_int(-1), rat_int(-1)),
            (TropScalar::from_int(-1), rat_int(0)),
            (TropScalar::from_int(-5), rat_int(2)),
        ])
        .unwrap();
        vec![f0, f1, f2]
    }

    #[test]
    fn dependent_triple_witness() {
        let fns = dependent_triple();
        // sanity: the pieces match the printed case analysis
        assert_eq!(fns[1].eval(&rat_int(-2)).unwrap(), TropScalar::from_int(-2));
        assert_eq!(fns[1].eval(&rat_int(1)).unwrap(), TropScalar::from_int(0));
        assert_eq!(fns[1].eval(&rat_int(3)).unwrap(), TropScalar::from_int(2));
        assert_eq!(fns[2].eval(&rat_int(-2)).unwrap(), TropScalar::from_int(1));
        assert_eq!(fns[2].eval(&rat_int(3)).unwrap(), TropScalar::from_int(1));

        let witness = vec![
            TropScalar::from_int(0),
            TropScalar::from_int(1),
            TropScalar::from_int(2)
        ];
        let window = Some((rat_int(-5), rat_int(5)));
        assert!(verify_dependence_witness(&fns, &witness, window.clone()).unwrap());
        let flat = vec![
            TropScalar::from_int(0),
            TropScalar::from_int(0),
            TropScalar::from_int(0)
        ];
        assert!(!verify_dependence_witness(&fns, &flat, window).unwrap());
    }

    #[test]
    fn witness_rejects_all_bottom() {
        let fns = vec![PLFunction::identity(), PLFunction::identity()];
        let alpha = vec![TropScalar::Bottom, TropScalar::Bottom];
        assert_eq!(
            verify_dependence_witness(&fns, &alpha, None),
            Err(CurveError::AllBottomWitness)
        );
    }

    #[test]
    fn pair_witness_on_global_line() {
        // (0, x) admits no witness: two distinct-slope graphs tie at one point
        let fns =
            vec![PLFunction::constant(rat_int(0)), PLFunction::identity()];
        for a in -3..=3 {
            let alpha = vec![TropScalar::one(), TropScalar::from_int(a)];
            assert!(!verify_dependence_witness(&fns, &alpha, None).unwrap());
        }
        // equal components with matching coefficients are dependent
        let twin = vec![PLFunction::identity(), PLFunction::identity()];
        let alpha = vec![TropScalar::one(), TropScalar::one()];
        assert!(verify_dependence_witness(&twin, &alpha, None).unwrap());
    }

    #[test]
    fn curve_construction_rules() {
        assert!(zero_x_curve().dim() == 1);
        // common root at 0
        let abs = PLFunction::identity()
            .max_combine(&PLFunction::affine(rat_int(-1), rat_int(0)))
            .unwrap();
        assert!(matches!(
            Curve::new(vec![abs.clone(), abs.clone()]),
            Err(CurveError::NotReduced)
        ));
        // ramp pair shares the root at 0 as well
        let up = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(1)),
        ])
        .unwrap();
        let down = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(-1)),
        ])
        .unwrap();
        assert!(!reduced_check(&[up, down]));
        // poles are rejected
        let pole = PLFunction::constant(rat_int(0)).sub_combine(&abs).unwrap();
        assert!(matches!(
            Curve::new(vec![pole, PLFunction::identity()]),
            Err(CurveError::ComponentHasPoles)
        ));
    }

    #[test]
    fn compose_basics() {
        let c = zero_x_curve();
        let h = Hyperplane::new(vec![TropScalar::from_int(0), TropScalar::from_int(0)])
            .unwrap();
        let ramp = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(1)),
        ])
        .unwrap();
        assert_eq!(compose(&h, &c).unwrap(), ramp);
        let single =
            Hyperplane::new(vec![TropScalar::from_int(1), TropScalar::Bottom]).unwrap();
        assert_eq!(compose(&single, &c).unwrap(), PLFunction::constant(rat_int(1)));
        let wrong = Hyperplane::new(vec![
            TropScalar::from_int(0),
            TropScalar::from_int(0),
            TropScalar::from_int(0)
        ])
        .unwrap();
        assert!(matches!(compose(&wrong, &c), Err(CurveError::DimensionMismatch)));
    }

    #[test]
    fn representation_lengths() {
        let c = zero_x_curve();
        let single =
            Hyperplane::new(vec![TropScalar::Bottom, TropScalar::from_int(1)]).unwrap();
        assert_eq!(representation_length(&single, &c).unwrap(), 1);
        let both =
            Hyperplane::new(vec![TropScalar::from_int(1), TropScalar::from_int(1)])
                .unwrap();
        assert_eq!(representation_length(&both, &c).unwrap(), 2);
        assert_eq!(ddg(core::slice::from_ref(&both), &c).unwrap(), 0);
        assert_eq!(ddg_star(core::slice::from_ref(&single), &c).unwrap(), 1);

        // a term that never attains the maximum does not count
        let e0 = Hyperplane::new(vec![TropScalar::from_int(0), TropScalar::Bottom])
            .unwrap();
        let e1 = Hyperplane::new(vec![TropScalar::Bottom, TropScalar::from_int(0)])
            .unwrap();
        assert_eq!(ddg_star(&[e0, e1], &c).unwrap(), 2);
    }

    #[test]
    fn family_scan_finds_witness() {
        let fns = dependent_triple();
        let with_witness = vec![
            vec![TropScalar::from_int(0), TropScalar::from_int(0), TropScalar::from_int(0)],
            vec![TropScalar::from_int(0), TropScalar::from_int(1), TropScalar::from_int(2)],
        ];
        let window = Some((rat_int(-6), rat_int(6)));
        assert!(!family_nondegenerate_witnessed(&fns, &with_witness, window.clone()).unwrap());
        let without = vec![vec![
            TropScalar::from_int(0),
            TropScalar::from_int(0),
            TropScalar::from_int(0),
        ]];
        assert!(family_nondegenerate_witnessed(&fns, &without, window).unwrap());
    }

    #[test]
    fn representation_length_on_window() {
        // the huge negative coefficient keeps the third term away from the
        // maximum everywhere on the window
        let lo = rat_int(-5);
        let hi = rat_int(5);
        let ident = PLFunction::identity().restrict(&lo, &hi).unwrap();
        let curve = Curve::new(vec![
            PLFunction::constant(rat_int(0)),
            ident.clone(),
            ident,
        ])
        .unwrap();
        let h = Hyperplane::new(vec![
            TropScalar::from_int(0),
            TropScalar::from_int(0),
            TropScalar::from_int(-1_000_000),
        ])
        .unwrap();
        assert_eq!(representation_length(&h, &curve).unwrap(), 2);
    }

    #[test]
    fn nondegenerate_scan_mixed_windows() {
        // a global component with a breakpoint outside the shared window
        let far = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(-20), rat_int(1)),
        ])
        .unwrap();
        assert_eq!(far.breakpoints(), &[rat_int(20)]);
        let e2 = e2_on_window(rat_int(-8), rat_int(8)).unwrap();
        let mixed = Curve::new(vec![far, e2]).unwrap();
        assert!(nondegenerate_default(&mixed).unwrap());
    }

    #[test]
    fn nondegenerate_scan() {
        let c = zero_x_curve();
        assert!(nondegenerate_default(&c).unwrap());
        let e2 = e2_on_window(rat_int(-8), rat_int(8)).unwrap();
        let windowed = Curve::new(vec![PLFunction::constant(rat_int(0)), e2]).unwrap();
        assert!(nondegenerate_default(&windowed).unwrap());
        // the tent/ramp triple is tropically dependent once the witness is
        // in the candidate set; degeneracy is detected, not merely suspected
        // (These are meromorphic, so exercise the witness path directly.)
        let fns = dependent_triple();
        let witness = vec![
            TropScalar::from_int(0),
            TropScalar::from_int(1),
            TropScalar::from_int(2)
        ];
        assert!(verify_dependence_witness(&fns, &witness, Some((rat_int(-9), rat_int(9))))
            .unwrap());
    }
}

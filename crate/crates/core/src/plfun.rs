//! Exact continuous piecewise-linear functions on the real line.
//!
//! A function is stored as one exact sample (the anchor), a strictly
//! increasing list of breakpoints and one slope per segment; values are
//! reconstructed by integrating slopes from the anchor, so the representation
//! cannot encode a jump. The canonical form merges equal-slope neighbours and
//! re-anchors at a fixed location, which makes pointwise equality a plain
//! structural comparison.
//!
//! Three shapes exist: `Global` functions have affine tails beyond the extreme
//! breakpoints, `Windowed` functions are only defined on a closed rational
//! interval, and the distinguished [`PLFunction::Bottom`] is the identically
//! `0_T` degenerate function required by Casorati computations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalar::{rat_int, Rat, TropScalar};

/// Errors from piecewise-linear construction and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlError {
    /// Evaluation point (or radius) outside a windowed function's window.
    OutOfWindow,
    /// Two windowed operands with different windows.
    WindowMismatch,
    /// Subtraction by the identically-`0_T` function.
    DivisionByBottom,
    /// `from_terms` with every coefficient `0_T`.
    AllBottom,
    /// Generator samples violate continuity or piecewise linearity.
    InconsistentGenerator,
    /// Asked for tail slopes of a windowed or bottom function.
    NoTails,
    /// Window bounds with `lo >= hi`, or a restriction to an empty window.
    EmptyWindow,
}

impl fmt::Display for PlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlError::OutOfWindow => write!(f, "point outside the function window"),
            PlError::WindowMismatch => write!(f, "windowed operands with different windows"),
            PlError::DivisionByBottom => write!(f, "subtraction of the 0_T function"),
            PlError::AllBottom => write!(f, "all coefficients are 0_T"),
            PlError::InconsistentGenerator => {
                write!(f, "generator is not piecewise linear on the declared lattice")
            }
            PlError::NoTails => write!(f, "function has no affine tails"),
            PlError::EmptyWindow => write!(f, "empty analysis window"),
        }
    }
}

/// A slope-jump point: `jump = ω_f(location)`, positive for roots and
/// negative for poles; `|jump|` is the multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCrossing {
    pub location: Rat,
    pub jump: Rat,
}

/// Shape of the domain of a finite piecewise-linear function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    /// Defined on all of `R` with affine tails.
    Global,
    /// Defined exactly on `[lo, hi]`.
    Windowed { lo: Rat, hi: Rat },
}

/// The data of a finite (not identically `0_T`) piecewise-linear function.
///
/// Invariants after canonicalization: breakpoints strictly increasing and
/// strictly inside the window, adjacent slopes distinct, anchor at the first
/// breakpoint (or at `lo`, or at 0 when there is nothing else to pin it to).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlData {
    anchor_x: Rat,
    anchor_y: Rat,
    breakpoints: Vec<Rat>,
    slopes: Vec<Rat>,
    form: Form,
}

/// A tropical meromorphic function: continuous piecewise linear, or the
/// degenerate `0_T` constant.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // Bottom is rare; boxing would cost every access
pub enum PLFunction {
    /// Identically `0_T`.
    Bottom,
    Finite(PlData),
}

enum CombineOp {
    Max,
    Add,
    Sub,
}

impl PlData {
    /// Reconstructs the exact value at `x` by walking segments from the
    /// anchor. Does not enforce the window; callers that care use
    /// [`PLFunction::eval`].
    fn value_at(&self, x: &Rat) -> Rat {
        let mut y = self.anchor_y.clone();
        let mut cur = self.anchor_x.clone();
        if *x > cur {
            let mut seg = self.segment_index(&cur);
            loop {
                let stop = if seg < self.breakpoints.len() && self.breakpoints[seg] < *x {
                    self.breakpoints[seg].clone()
                } else {
                    x.clone()
                };
                y += &self.slopes[seg] * (&stop - &cur);
                cur = stop;
                if cur == *x {
                    break;
                }
                seg += 1;
            }
        } else if *x < cur {
            let mut seg = self.segment_index(&cur);
            loop {
                let stop = if seg > 0 && self.breakpoints[seg - 1] > *x {
                    self.breakpoints[seg - 1].clone()
                } else {
                    x.clone()
                };
                y += &self.slopes[seg] * (&stop - &cur);
                cur = stop;
                if cur == *x {
                    break;
                }
                seg -= 1;
            }
        }
        y
    }

    /// Index of the segment whose closure contains `x`, resolving breakpoint
    /// ties to the right segment (continuity makes the value agree anyway).
    fn segment_index(&self, x: &Rat) -> usize {
        self.breakpoints.partition_point(|b| b <= x)
    }

    fn slope_at(&self, x: &Rat) -> &Rat {
        &self.slopes[self.segment_index(x)]
    }

    fn window(&self) -> Option<(&Rat, &Rat)> {
        match &self.form {
            Form::Global => None,
            Form::Windowed { lo, hi } => Some((lo, hi)),
        }
    }

    fn contains(&self, x: &Rat) -> bool {
        match &self.form {
            Form::Global => true,
            Form::Windowed { lo, hi } => lo <= x && x <= hi,
        }
    }

    /// Canonical form: clip breakpoints to the open window, merge equal
    /// adjacent slopes, and re-anchor at the first breakpoint (else at `lo`,
    /// else at 0).
    fn canonicalize(self) -> PlData {
        let PlData { anchor_x, anchor_y, breakpoints, slopes, form } = self;
        debug_assert_eq!(slopes.len(), breakpoints.len() + 1);
        let old = PlData {
            anchor_x,
            anchor_y,
            breakpoints: breakpoints.clone(),
            slopes: slopes.clone(),
            form: form.clone(),
        };

        // Clip to the open window: segments entirely outside [lo, hi] carry
        // no information.
        let (breakpoints, slopes) = match &form {
            Form::Global => (breakpoints, slopes),
            Form::Windowed { lo, hi } => {
                let i0 = breakpoints.partition_point(|b| b <= lo);
                let i1 = breakpoints.partition_point(|b| b < hi);
                (breakpoints[i0..i1].to_vec(), slopes[i0..=i1].to_vec())
            }
        };

        // Merge equal-slope neighbours.
        let mut merged_bps: Vec<Rat> = Vec::with_capacity(breakpoints.len());
        let mut merged_slopes: Vec<Rat> = Vec::with_capacity(slopes.len());
        merged_slopes.push(slopes[0].clone());
        for (bp, slope) in breakpoints.into_iter().zip(slopes.into_iter().skip(1)) {
            if &slope != merged_slopes.last().unwrap() {
                merged_bps.push(bp);
                merged_slopes.push(slope);
            }
        }

        let anchor_x = if let Some(b0) = merged_bps.first() {
            b0.clone()
        } else {
            match &form {
                Form::Global => Rat::zero(),
                Form::Windowed { lo, .. } => lo.clone(),
            }
        };
        let anchor_y = old.value_at(&anchor_x);
        PlData { anchor_x, anchor_y, breakpoints: merged_bps, slopes: merged_slopes, form }
    }
}

impl PLFunction {
    /// The constant function `x ↦ c`.
    pub fn constant(c: Rat) -> Self {
        PLFunction::Finite(
            PlData {
                anchor_x: Rat::zero(),
                anchor_y: c,
                breakpoints: Vec::new(),
                slopes: vec![Rat::zero()],
                form: Form::Global,
            }
            .canonicalize(),
        )
    }

    /// The affine function `x ↦ slope·x + value_at_zero`.
    pub fn affine(slope: Rat, value_at_zero: Rat) -> Self {
        PLFunction::Finite(
            PlData {
                anchor_x: Rat::zero(),
                anchor_y: value_at_zero,
                breakpoints: Vec::new(),
                slopes: vec![slope],
                form: Form::Global,
            }
            .canonicalize(),
        )
    }

    /// The identity `x ↦ x`.
    pub fn identity() -> Self {
        PLFunction::affine(rat_int(1), Rat::zero())
    }

    /// Max-plus polynomial `⊕_j (a_j + n_j·x)`; coefficients equal to `0_T`
    /// drop out, and all-`0_T` input is an error.
    ///
    /// # Examples
    ///
    /// ```
    /// use tropnev_core::plfun::PLFunction;
    /// use tropnev_core::scalar::{rat_int, TropScalar};
    ///
    /// // max(-x+1, 1, x-1): a tent with roots at 0 and 2
    /// let f = PLFunction::from_terms(&[
    ///     (TropScalar::from_int(1), rat_int(-1)),
    ///     (TropScalar::from_int(1), rat_int(0)),
    ///     (TropScalar::from_int(-1), rat_int(1)),
    /// ])
    /// .unwrap();
    /// assert_eq!(f.eval(&rat_int(0)).unwrap(), TropScalar::from_int(1));
    /// assert_eq!(f.roots().len(), 2);
    /// ```
    pub fn from_terms(terms: &[(TropScalar, Rat)]) -> Result<Self, PlError> {
        let mut acc = PLFunction::Bottom;
        for (a, slope) in terms {
            if let TropScalar::Real(a) = a {
                let line = PLFunction::affine(slope.clone(), a.clone());
                acc = acc.max_combine(&line)?;
            }
        }
        if acc == PLFunction::Bottom {
            return Err(PlError::AllBottom);
        }
        Ok(acc)
    }

    /// Materializes a generator on a window. The generator must declare every
    /// breakpoint it has inside `(lo, hi)`; a midpoint probe per segment
    /// rejects generators that are not piecewise linear on that lattice.
    pub fn windowed_from_generator<G>(
        gen: G,
        declared_breakpoints: &[Rat],
        lo: Rat,
        hi: Rat,
    ) -> Result<Self, PlError>
    where
        G: Fn(&Rat) -> Rat,
    {
        if lo >= hi {
            return Err(PlError::EmptyWindow);
        }
        let mut pts: Vec<Rat> = declared_breakpoints
            .iter()
            .filter(|b| **b > lo && **b < hi)
            .cloned()
            .collect();
        pts.sort();
        pts.dedup();

        let mut nodes = Vec::with_capacity(pts.len() + 2);
        nodes.push(lo.clone());
        nodes.extend(pts.iter().cloned());
        nodes.push(hi.clone());
        let values: Vec<Rat> = nodes.iter().map(&gen).collect();

        let mut slopes = Vec::with_capacity(nodes.len() - 1);
        for i in 0..nodes.len() - 1 {
            let dx = &nodes[i + 1] - &nodes[i];
            let dy = &values[i + 1] - &values[i];
            let slope = dy / &dx;
            // Midpoint probe: linear interpolation must reproduce the
            // generator exactly inside the segment.
            let mid = (&nodes[i + 1] + &nodes[i]) / rat_int(2);
            let interp = &values[i] + &slope * (&mid - &nodes[i]);
            if gen(&mid) != interp {
                return Err(PlError::InconsistentGenerator);
            }
            slopes.push(slope);
        }

        Ok(PLFunction::Finite(
            PlData {
                anchor_x: lo.clone(),
                anchor_y: values[0].clone(),
                breakpoints: pts,
                slopes,
                form: Form::Windowed { lo, hi },
            }
            .canonicalize(),
        ))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, PLFunction::Bottom)
    }

    /// The window of definition; `None` for `Global` and `Bottom`.
    pub fn window(&self) -> Option<(Rat, Rat)> {
        match self {
            PLFunction::Bottom => None,
            PLFunction::Finite(d) => d.window().map(|(l, h)| (l.clone(), h.clone())),
        }
    }

    pub fn is_windowed(&self) -> bool {
        matches!(self, PLFunction::Finite(d) if matches!(d.form, Form::Windowed { .. }))
    }

    /// Exact value at `x`; `0_T` for the bottom function.
    pub fn eval(&self, x: &Rat) -> Result<TropScalar, PlError> {
        match self {
            PLFunction::Bottom => Ok(TropScalar::Bottom),
            PLFunction::Finite(d) => {
                if !d.contains(x) {
                    return Err(PlError::OutOfWindow);
                }
                Ok(TropScalar::Real(d.value_at(x)))
            }
        }
    }

    /// Exact finite value at `x`; errors on the bottom function.
    pub fn eval_finite(&self, x: &Rat) -> Result<Rat, PlError> {
        match self.eval(x)? {
            TropScalar::Real(v) => Ok(v),
            TropScalar::Bottom => Err(PlError::DivisionByBottom),
        }
    }

    /// Pointwise maximum `f ⊕ g`.
    pub fn max_combine(&self, other: &Self) -> Result<Self, PlError> {
        match (self, other) {
            (PLFunction::Bottom, g) => Ok(g.clone()),
            (f, PLFunction::Bottom) => Ok(f.clone()),
            (PLFunction::Finite(f), PLFunction::Finite(g)) => {
                combine(f, g, CombineOp::Max).map(PLFunction::Finite)
            }
        }
    }

    /// Pointwise sum `f ⊗ g`; `0_T` absorbs.
    pub fn add_combine(&self, other: &Self) -> Result<Self, PlError> {
        match (self, other) {
            (PLFunction::Bottom, _) | (_, PLFunction::Bottom) => Ok(PLFunction::Bottom),
            (PLFunction::Finite(f), PLFunction::Finite(g)) => {
                combine(f, g, CombineOp::Add).map(PLFunction::Finite)
            }
        }
    }

    /// Pointwise difference `f ⊘ g`; subtracting the bottom function is the
    /// tropical division-by-zero error.
    pub fn sub_combine(&self, other: &Self) -> Result<Self, PlError> {
        match (self, other) {
            (_, PLFunction::Bottom) => Err(PlError::DivisionByBottom),
            (PLFunction::Bottom, _) => Ok(PLFunction::Bottom),
            (PLFunction::Finite(f), PLFunction::Finite(g)) => {
                combine(f, g, CombineOp::Sub).map(PLFunction::Finite)
            }
        }
    }

    /// Adds a real constant pointwise (`c ⊗ f` with a scalar).
    pub fn add_scalar(&self, c: &Rat) -> Self {
        match self {
            PLFunction::Bottom => PLFunction::Bottom,
            PLFunction::Finite(d) => {
                let mut d = d.clone();
                d.anchor_y += c;
                PLFunction::Finite(d)
            }
        }
    }

    /// Pointwise negation `1_T ⊘ f`; errors on the bottom function.
    pub fn negate(&self) -> Result<Self, PlError> {
        PLFunction::constant(Rat::zero()).sub_combine(self)
    }

    /// `g(x) = f(x + c)`; the window translates by `-c`.
    pub fn shift(&self, c: &Rat) -> Self {
        match self {
            PLFunction::Bottom => PLFunction::Bottom,
            PLFunction::Finite(d) => {
                let form = match &d.form {
                    Form::Global => Form::Global,
                    Form::Windowed { lo, hi } => Form::Windowed { lo: lo - c, hi: hi - c },
                };
                PLFunction::Finite(
                    PlData {
                        anchor_x: &d.anchor_x - c,
                        anchor_y: d.anchor_y.clone(),
                        breakpoints: d.breakpoints.iter().map(|b| b - c).collect(),
                        slopes: d.slopes.clone(),
                        form,
                    }
                    .canonicalize(),
                )
            }
        }
    }

    /// Restricts to `[lo, hi]` (intersected with an existing window).
    pub fn restrict(&self, lo: &Rat, hi: &Rat) -> Result<Self, PlError> {
        match self {
            PLFunction::Bottom => Ok(PLFunction::Bottom),
            PLFunction::Finite(d) => {
                let (lo, hi) = match d.window() {
                    None => (lo.clone(), hi.clone()),
                    Some((l, h)) => (if lo > l { lo.clone() } else { l.clone() }, {
                        if hi < h {
                            hi.clone()
                        } else {
                            h.clone()
                        }
                    }),
                };
                if lo >= hi {
                    return Err(PlError::EmptyWindow);
                }
                let mut d = d.clone();
                d.form = Form::Windowed { lo, hi };
                Ok(PLFunction::Finite(d.canonicalize()))
            }
        }
    }

    /// All slope-jump points with their exact jumps.
    pub fn crossings(&self) -> Vec<SignedCrossing> {
        match self {
            PLFunction::Bottom => Vec::new(),
            PLFunction::Finite(d) => d
                .breakpoints
                .iter()
                .enumerate()
                .map(|(i, b)| SignedCrossing {
                    location: b.clone(),
                    jump: &d.slopes[i + 1] - &d.slopes[i],
                })
                .collect(),
        }
    }

    /// Crossings with positive jump.
    pub fn roots(&self) -> Vec<SignedCrossing> {
        self.crossings().into_iter().filter(|c| c.jump.is_positive()).collect()
    }

    /// Crossings with negative jump.
    pub fn poles(&self) -> Vec<SignedCrossing> {
        self.crossings().into_iter().filter(|c| c.jump.is_negative()).collect()
    }

    /// True when the function has no poles (the bottom function counts).
    pub fn is_entire(&self) -> bool {
        self.poles().is_empty()
    }

    /// Tail slopes `(left, right)` of a global function.
    pub fn asymptotic_slopes(&self) -> Result<(Rat, Rat), PlError> {
        match self {
            PLFunction::Bottom => Err(PlError::NoTails),
            PLFunction::Finite(d) => match d.form {
                Form::Windowed { .. } => Err(PlError::NoTails),
                Form::Global => {
                    Ok((d.slopes.first().unwrap().clone(), d.slopes.last().unwrap().clone()))
                }
            },
        }
    }

    /// Breakpoint locations (canonical, strictly increasing).
    pub fn breakpoints(&self) -> &[Rat] {
        match self {
            PLFunction::Bottom => &[],
            PLFunction::Finite(d) => &d.breakpoints,
        }
    }

    /// Largest `|b|` over breakpoints, if any.
    pub fn max_breakpoint_magnitude(&self) -> Option<Rat> {
        self.breakpoints()
            .iter()
            .map(|b| if b.is_negative() { -b } else { b.clone() })
            .max()
    }

    /// `f ≤ g` pointwise on the common domain (windows intersected).
    pub fn pointwise_le(&self, other: &Self) -> Result<bool, PlError> {
        match (self, other) {
            (PLFunction::Bottom, _) => Ok(true),
            (_, PLFunction::Bottom) => Ok(false),
            (PLFunction::Finite(_), PLFunction::Finite(_)) => {
                let (f, g) = common_domain(self, other)?;
                Ok(f.max_combine(&g)? == g)
            }
        }
    }

    /// Exact equality on the common domain (windows intersected).
    pub fn eq_on_common_domain(&self, other: &Self) -> Result<bool, PlError> {
        match (self, other) {
            (PLFunction::Bottom, PLFunction::Bottom) => Ok(true),
            (PLFunction::Bottom, _) | (_, PLFunction::Bottom) => Ok(false),
            _ => {
                let (f, g) = common_domain(self, other)?;
                Ok(f == g)
            }
        }
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PLFunction::Bottom => write!(f, "0_T"),
            PLFunction::Finite(d) => {
                if let Some((lo, hi)) = d.window() {
                    write!(f, "pl on [{}, {}]", lo, hi)?;
                } else {
                    write!(f, "pl on R")?;
                }
                write!(f, "; anchor ({}, {})", d.anchor_x, d.anchor_y)?;
                write!(f, "; slopes ")?;
                for (i, s) in d.slopes.iter().enumerate() {
                    if i > 0 {
                        write!(f, " [{}] ", d.breakpoints[i - 1])?;
                    }
                    write!(f, "{}", s)?;
                }
                Ok(())
            }
        }
    }
}

/// Restricts both operands to the intersection of their windows (no-op when
/// both are global).
fn common_domain(f: &PLFunction, g: &PLFunction) -> Result<(PLFunction, PLFunction), PlError> {
    match (f.window(), g.window()) {
        (None, None) => Ok((f.clone(), g.clone())),
        (Some((lo, hi)), None) | (None, Some((lo, hi))) => {
            Ok((f.restrict(&lo, &hi)?, g.restrict(&lo, &hi)?))
        }
        (Some((l1, h1)), Some((l2, h2))) => {
            let lo = if l1 > l2 { l1 } else { l2 };
            let hi = if h1 < h2 { h1 } else { h2 };
            if lo >= hi {
                return Err(PlError::EmptyWindow);
            }
            Ok((f.restrict(&lo, &hi)?, g.restrict(&lo, &hi)?))
        }
    }
}

/// Resolves the result form of a combination: global with global stays
/// global, a window is adopted, two windows must agree.
fn resolve_form(f: &PlData, g: &PlData) -> Result<Form, PlError> {
    match (&f.form, &g.form) {
        (Form::Global, Form::Global) => Ok(Form::Global),
        (w @ Form::Windowed { .. }, Form::Global) | (Form::Global, w @ Form::Windowed { .. }) => {
            Ok(w.clone())
        }
        (w1 @ Form::Windowed { .. }, w2 @ Form::Windowed { .. }) => {
            if w1 == w2 {
                Ok(w1.clone())
            } else {
                Err(PlError::WindowMismatch)
            }
        }
    }
}

fn combine(f: &PlData, g: &PlData, op: CombineOp) -> Result<PlData, PlError> {
    let form = resolve_form(f, g)?;
    let window = match &form {
        Form::Global => None,
        Form::Windowed { lo, hi } => Some((lo.clone(), hi.clone())),
    };

    // Shared partition: both operands' breakpoints, clipped to the window.
    let mut pts: Vec<Rat> = f
        .breakpoints
        .iter()
        .chain(g.breakpoints.iter())
        .filter(|b| match &window {
            None => true,
            Some((lo, hi)) => *b > lo && *b < hi,
        })
        .cloned()
        .collect();
    pts.sort();
    pts.dedup();

    // For the max we also need the points where the two graphs cross inside a
    // cell of the partition.
    if matches!(op, CombineOp::Max) {
        let mut crossings: Vec<Rat> = Vec::new();
        for (lo, hi) in cells(&pts, &window) {
            let probe = probe_point(&lo, &hi);
            let sf = f.slope_at(&probe);
            let sg = g.slope_at(&probe);
            if sf == sg {
                continue;
            }
            let yf = f.value_at(&probe);
            let yg = g.value_at(&probe);
            // Solve yf + sf·(x − probe) = yg + sg·(x − probe).
            let x = &probe + (yg - yf) / (sf - sg);
            let above_lo = lo.as_ref().is_none_or(|l| x > *l);
            let below_hi = hi.as_ref().is_none_or(|h| x < *h);
            if above_lo && below_hi {
                crossings.push(x);
            }
        }
        pts.extend(crossings);
        pts.sort();
        pts.dedup();
    }

    // One slope per cell of the refined partition.
    let mut slopes = Vec::with_capacity(pts.len() + 1);
    for (lo, hi) in cells(&pts, &window) {
        let probe = probe_point(&lo, &hi);
        let slope = match op {
            CombineOp::Add => f.slope_at(&probe) + g.slope_at(&probe),
            CombineOp::Sub => f.slope_at(&probe) - g.slope_at(&probe),
            CombineOp::Max => {
                let yf = f.value_at(&probe);
                let yg = g.value_at(&probe);
                if yf >= yg {
                    f.slope_at(&probe).clone()
                } else {
                    g.slope_at(&probe).clone()
                }
            }
        };
        slopes.push(slope);
    }

    let anchor_x = pts.first().cloned().unwrap_or_else(|| match &window {
        None => Rat::zero(),
        Some((lo, _)) => lo.clone(),
    });
    let yf = f.value_at(&anchor_x);
    let yg = g.value_at(&anchor_x);
    let anchor_y = match op {
        CombineOp::Add => yf + yg,
        CombineOp::Sub => yf - yg,
        CombineOp::Max => {
            if yf >= yg {
                yf
            } else {
                yg
            }
        }
    };

    Ok(PlData { anchor_x, anchor_y, breakpoints: pts, slopes, form }.canonicalize())
}

/// The cells of the partition of the domain induced by `pts`, as
/// `(Option<lo>, Option<hi>)` with `None` for an unbounded side. Windowed
/// domains contribute their edges as bounds.
pub(crate) fn cells(pts: &[Rat], window: &Option<(Rat, Rat)>) -> Vec<(Option<Rat>, Option<Rat>)> {
    let (left, right) = match window {
        None => (None, None),
        Some((lo, hi)) => (Some(lo.clone()), Some(hi.clone())),
    };
    let mut bounds = Vec::with_capacity(pts.len() + 2);
    bounds.push(left);
    bounds.extend(pts.iter().cloned().map(Some));
    bounds.push(right);
    bounds.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
}

/// A point strictly inside a cell.
pub(crate) fn probe_point(lo: &Option<Rat>, hi: &Option<Rat>) -> Rat {
    match (lo, hi) {
        (Some(l), Some(h)) => (l + h) / rat_int(2),
        (Some(l), None) => l + rat_int(1),
        (None, Some(h)) => h - rat_int(1),
        (None, None) => Rat::zero(),
    }
}

/// The staircase generator `e2(x) = 2^{⌊x⌋}·(x − ⌊x⌋ + 1)`: exponential-type
/// growth with a breakpoint at every integer.
pub fn e2_value(x: &Rat) -> Rat {
    let fl = x.floor();
    let frac = x - &fl;
    let e = fl.to_integer().to_i64().expect("e2 exponent fits i64");
    let two = BigInt::from(2);
    let pow = if e >= 0 {
        Rat::from_integer(two.pow(e as u32))
    } else {
        Rat::new(BigInt::from(1), two.pow((-e) as u32))
    };
    pow * (frac + Rat::from_integer(BigInt::from(1)))
}

/// Integer breakpoint lattice of [`e2_value`] inside `(lo, hi)`.
pub fn e2_breakpoints(lo: &Rat, hi: &Rat) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut k = lo.floor().to_integer();
    let top = hi.ceil().to_integer();
    while k <= top {
        let kr = Rat::from_integer(k.clone());
        if kr > *lo && kr < *hi {
            out.push(kr);
        }
        k += 1;
    }
    out
}

/// `e2` materialized on a window.
pub fn e2_on_window(lo: Rat, hi: Rat) -> Result<PLFunction, PlError> {
    let bps = e2_breakpoints(&lo, &hi);
    PLFunction::windowed_from_generator(e2_value, &bps, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn tent_function() -> PLFunction {
        // max(-x+1, 1, x-1)
        PLFunction::from_terms(&[
            (TropScalar::from_int(1), rat_int(-1)),
            (TropScalar::from_int(1), rat_int(0)),
            (TropScalar::from_int(-1), rat_int(1)),
        ])
        .unwrap()
    }

    fn pole_quotient() -> PLFunction {
        let f0 = PLFunction::from_terms(&[
            (TropScalar::from_int(12), rat_int(-2)),
            (TropScalar::from_int(-18), rat_int(3)),
        ])
        .unwrap();
        let f1 = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(-3)),
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(-8), rat_int(4)),
        ])
        .unwrap();
        f1.sub_combine(&f0).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(tent_function().eval(&rat_int(0)).unwrap(), TropScalar::from_int(1));
        assert_eq!(pole_quotient().eval(&rat_int(7)).unwrap(), TropScalar::from_int(17));
        assert_eq!(PLFunction::Bottom.eval(&rat_int(5)).unwrap(), TropScalar::Bottom);
    }

    #[test]
    fn abs_from_max() {
        let x = PLFunction::identity();
        let neg_x = PLFunction::affine(rat_int(-1), rat_int(0));
        let abs = x.max_combine(&neg_x).unwrap();
        assert_eq!(abs.breakpoints(), &[rat_int(0)]);
        assert_eq!(abs.asymptotic_slopes().unwrap(), (rat_int(-1), rat_int(1)));
        assert_eq!(abs.eval(&rat_int(-3)).unwrap(), TropScalar::from_int(3));
        // max with the bottom function is the identity on the other operand
        assert_eq!(abs.max_combine(&PLFunction::Bottom).unwrap(), abs);
    }

    #[test]
    fn add_of_ramps_is_abs() {
        let ramp_up = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(1)),
        ])
        .unwrap();
        let ramp_down = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(0), rat_int(-1)),
        ])
        .unwrap();
        let sum = ramp_up.add_combine(&ramp_down).unwrap();
        let abs = PLFunction::identity()
            .max_combine(&PLFunction::affine(rat_int(-1), rat_int(0)))
            .unwrap();
        assert_eq!(sum, abs);
    }

    #[test]
    fn shift_inverse_and_eval() {
        let abs = PLFunction::identity()
            .max_combine(&PLFunction::affine(rat_int(-1), rat_int(0)))
            .unwrap();
        let shifted = abs.shift(&rat_int(1));
        assert_eq!(shifted.eval(&rat_int(0)).unwrap(), TropScalar::from_int(1));
        assert_eq!(shifted.shift(&rat_int(-1)), abs);
        assert_eq!(abs.shift(&rat_int(0)), abs);
    }

    #[test]
    fn crossings_of_examples() {
        let f0 = tent_function();
        let roots = f0.roots();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], SignedCrossing { location: rat_int(0), jump: rat_int(1) });
        assert_eq!(roots[1], SignedCrossing { location: rat_int(2), jump: rat_int(1) });
        assert!(f0.poles().is_empty());

        let f = pole_quotient();
        let poles = f.poles();
        assert_eq!(poles, vec![SignedCrossing { location: rat_int(6), jump: rat_int(-5) }]);
        assert_eq!(f.asymptotic_slopes().unwrap(), (rat_int(-1), rat_int(1)));
    }

    #[test]
    fn constant_term_polynomial() {
        let one_t = PLFunction::from_terms(&[(TropScalar::from_int(0), rat_int(0))]).unwrap();
        assert_eq!(one_t, PLFunction::constant(rat_int(0)));
        assert_eq!(one_t.asymptotic_slopes().unwrap(), (rat_int(0), rat_int(0)));
        assert!(PLFunction::from_terms(&[(TropScalar::Bottom, rat_int(1))]).is_err());
    }

    #[test]
    fn e2_samples() {
        let e2 = e2_on_window(rat_int(-4), rat_int(4)).unwrap();
        assert_eq!(e2.eval(&rat_int(1)).unwrap(), TropScalar::from_int(2));
        assert_eq!(e2.eval(&rat_int(0)).unwrap(), TropScalar::from_int(1));
        assert_eq!(e2.eval(&rat(-5, 2)).unwrap(), TropScalar::from_rat(rat(3, 16)));
        assert_eq!(e2.eval(&rat_int(5)), Err(PlError::OutOfWindow));
        // every integer jump is a root
        assert!(e2.poles().is_empty());
        assert_eq!(e2.roots().len(), 7);
    }

    #[test]
    fn generator_rejects_nonlinear() {
        // x^2 is not piecewise linear on the declared (empty) lattice
        let bad = PLFunction::windowed_from_generator(
            |x| x * x,
            &[],
            rat_int(0),
            rat_int(1),
        );
        assert_eq!(bad, Err(PlError::InconsistentGenerator));
        let ok =
            PLFunction::windowed_from_generator(|x| x.clone(), &[], rat_int(0), rat_int(1))
                .unwrap();
        assert_eq!(ok.eval(&rat(1, 2)).unwrap(), TropScalar::from_rat(rat(1, 2)));
    }

    #[test]
    fn window_rules() {
        let e2 = e2_on_window(rat_int(-4), rat_int(4)).unwrap();
        let zero = PLFunction::constant(rat_int(0));
        // global adopts the window
        let m = zero.max_combine(&e2).unwrap();
        assert_eq!(m.window(), Some((rat_int(-4), rat_int(4))));
        let other = e2_on_window(rat_int(-2), rat_int(2)).unwrap();
        assert_eq!(e2.max_combine(&other), Err(PlError::WindowMismatch));
        assert_eq!(e2.asymptotic_slopes(), Err(PlError::NoTails));
    }

    #[test]
    fn sub_bottom_errors() {
        let f = PLFunction::identity();
        assert_eq!(f.sub_combine(&PLFunction::Bottom), Err(PlError::DivisionByBottom));
        assert_eq!(PLFunction::Bottom.sub_combine(&f).unwrap(), PLFunction::Bottom);
        assert_eq!(f.sub_combine(&f).unwrap(), PLFunction::constant(rat_int(0)));
    }

    #[test]
    fn restrict_clips_breakpoints() {
        let f = pole_quotient();
        let w = f.restrict(&rat_int(3), &rat_int(10)).unwrap();
        assert_eq!(w.breakpoints(), &[rat_int(6)]);
        assert_eq!(w.eval(&rat_int(7)).unwrap(), TropScalar::from_int(17));
        assert!(w.eval(&rat_int(0)).is_err());
    }
}

//! The max-plus semiring of exact rationals extended by the bottom element.
//!
//! `0_T = -inf` is the additive identity and absorbs tropical products;
//! `1_T = 0` is the multiplicative identity. Rationals are kept in reduced
//! form by `num-rational`, so equality (and hence every tie decision in the
//! rest of the crate) is exact.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Errors from scalar operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Tropical division `a ⊘ b` with `b = 0_T`.
    DivisionByBottom,
    /// `0_T^{⊗α}` with `α ≤ 0`.
    UndefinedPower,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByBottom => write!(f, "tropical division by 0_T (-inf)"),
            ScalarError::UndefinedPower => write!(f, "0_T raised to a non-positive power"),
        }
    }
}

/// An element of `T = Q ∪ {-inf}`.
///
/// # Examples
///
/// ```
/// use tropnev_core::scalar::TropScalar;
///
/// let a = TropScalar::from_int(3);
/// let b = TropScalar::from_int(5);
/// assert_eq!(a.tadd(&b), b);                       // ⊕ is max
/// assert_eq!(a.tmul(&b), TropScalar::from_int(8)); // ⊗ is +
/// assert_eq!(a.tadd(&TropScalar::Bottom), a);      // 0_T is neutral
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropScalar {
    /// `0_T = -inf`, neutral for ⊕ and absorbing for ⊗.
    Bottom,
    /// A finite rational value.
    Real(Rat),
}

impl TropScalar {
    /// The additive identity `0_T`.
    pub const fn bottom() -> Self {
        TropScalar::Bottom
    }

    /// The multiplicative identity `1_T = 0`.
    pub fn one() -> Self {
        TropScalar::Real(Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        TropScalar::Real(rat_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        TropScalar::Real(r)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Real(r) => Some(r),
        }
    }

    /// Tropical addition `a ⊕ b = max(a, b)`.
    pub fn tadd(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Bottom, x) | (x, TropScalar::Bottom) => x.clone(),
            (TropScalar::Real(a), TropScalar::Real(b)) => {
                TropScalar::Real(if a >= b { a.clone() } else { b.clone() })
            }
        }
    }

    /// Tropical multiplication `a ⊗ b = a + b`; `0_T` absorbs.
    pub fn tmul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Bottom, _) | (_, TropScalar::Bottom) => TropScalar::Bottom,
            (TropScalar::Real(a), TropScalar::Real(b)) => TropScalar::Real(a + b),
        }
    }

    /// Tropical division `a ⊘ b = a - b`; errors when `b = 0_T`.
    pub fn tdiv(&self, other: &Self) -> Result<Self, ScalarError> {
        match (self, other) {
            (_, TropScalar::Bottom) => Err(ScalarError::DivisionByBottom),
            (TropScalar::Bottom, _) => Ok(TropScalar::Bottom),
            (TropScalar::Real(a), TropScalar::Real(b)) => Ok(TropScalar::Real(a - b)),
        }
    }

    /// Tropical power `a^{⊗α} = α·a`; `0_T^{⊗α} = 0_T` only for `α > 0`.
    pub fn tpow(&self, alpha: &Rat) -> Result<Self, ScalarError> {
        match self {
            TropScalar::Bottom => {
                if alpha.is_positive() {
                    Ok(TropScalar::Bottom)
                } else {
                    Err(ScalarError::UndefinedPower)
                }
            }
            TropScalar::Real(a) => Ok(TropScalar::Real(a * alpha)),
        }
    }
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropScalar::Bottom, TropScalar::Bottom) => Ordering::Equal,
            (TropScalar::Bottom, _) => Ordering::Less,
            (_, TropScalar::Bottom) => Ordering::Greater,
            (TropScalar::Real(a), TropScalar::Real(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => write!(f, "-inf"),
            TropScalar::Real(r) => write!(f, "{}", r),
        }
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::from_int(n)
    }
}

impl From<Rat> for TropScalar {
    fn from(r: Rat) -> Self {
        TropScalar::Real(r)
    }
}

/// `max(x, 0)` on rationals, the `x⁺` used by the proximity function.
pub fn rat_plus(x: &Rat) -> Rat {
    if x.is_positive() {
        x.clone()
    } else {
        Rat::zero()
    }
}

/// `1_T` as a rational, for places that want the value rather than the scalar.
pub fn rat_one_t() -> Rat {
    Rat::zero()
}

/// Half of a rational.
pub fn half(x: &Rat) -> Rat {
    x / Rat::from_integer(BigInt::from(2))
}

// num_traits::One is implemented on Rat already; this free function mirrors it
// for call sites that read better with a name.
pub fn rat_one() -> Rat {
    Rat::one()
}

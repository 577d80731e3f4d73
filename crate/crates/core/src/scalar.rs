//! Scalars of the max-plus semifield and its extension by `-inf`.
//!
//! Tropical addition `⊕` is `max` and tropical multiplication `⊗` is ordinary
//! addition. All values are exact rationals; equality is exact.

use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;

/// Exact rational element of the finitary tropical semifield.
pub type TropScalar = Ratio<i128>;

/// Builds the rational `numer / denom`.
///
/// # Panics
///
/// Panics if `denom` is zero.
#[inline]
pub fn rat(numer: i128, denom: i128) -> TropScalar {
    Ratio::new(numer, denom)
}

/// Builds an integer-valued scalar.
#[inline]
pub fn int(value: i128) -> TropScalar {
    Ratio::from_integer(value)
}

/// Minimal structure needed for tropical matrix products.
pub trait MaxPlus: Copy + Ord {
    /// Tropical product (`+`, with `-inf` absorbing where present).
    fn otimes(self, other: Self) -> Self;

    /// Tropical sum.
    #[inline]
    fn oplus(self, other: Self) -> Self {
        self.max(other)
    }
}

impl MaxPlus for TropScalar {
    #[inline]
    fn otimes(self, other: Self) -> Self {
        self + other
    }
}

/// Element of the extended tropical semiring: a finite scalar or `⊥ = -inf`.
///
/// The derived ordering places `Bottom` below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtTropScalar {
    Bottom,
    Finite(TropScalar),
}

impl ExtTropScalar {
    /// The multiplicative identity `0`.
    pub const ONE: ExtTropScalar = ExtTropScalar::Finite(Ratio::new_raw(0, 1));

    #[inline]
    pub fn finite(self) -> Option<TropScalar> {
        match self {
            ExtTropScalar::Bottom => None,
            ExtTropScalar::Finite(v) => Some(v),
        }
    }

    #[inline]
    pub fn is_bottom(self) -> bool {
        matches!(self, ExtTropScalar::Bottom)
    }
}

impl From<TropScalar> for ExtTropScalar {
    #[inline]
    fn from(v: TropScalar) -> Self {
        ExtTropScalar::Finite(v)
    }
}

impl MaxPlus for ExtTropScalar {
    #[inline]
    fn otimes(self, other: Self) -> Self {
        match (self, other) {
            (ExtTropScalar::Finite(a), ExtTropScalar::Finite(b)) => ExtTropScalar::Finite(a + b),
            _ => ExtTropScalar::Bottom,
        }
    }
}

impl PartialEq<TropScalar> for ExtTropScalar {
    fn eq(&self, other: &TropScalar) -> bool {
        *self == ExtTropScalar::Finite(*other)
    }
}

impl PartialOrd<TropScalar> for ExtTropScalar {
    fn partial_cmp(&self, other: &TropScalar) -> Option<Ordering> {
        Some(self.cmp(&ExtTropScalar::Finite(*other)))
    }
}

impl fmt::Display for ExtTropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtTropScalar::Bottom => f.write_str("-inf"),
            ExtTropScalar::Finite(v) => fmt::Display::fmt(v, f),
        }
    }
}

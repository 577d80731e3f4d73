//! Projectivization of affine tropical space onto `ℝ^{n−1}`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::TropVector;
use crate::scalar::TropScalar;

/// A point of projective tropical `(n−1)`-space in the chart `x ↦ (x_i − x_n)_{i<n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint(pub Vec<TropScalar>);

impl Deref for ProjPoint {
    type Target = [TropScalar];

    fn deref(&self) -> &[TropScalar] {
        &self.0
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&TropVector(self.0.clone()), f)
    }
}

/// Normalizes on the last coordinate. Requires at least two coordinates.
pub fn projectivize(x: &[TropScalar]) -> Result<ProjPoint> {
    if x.len() < 2 {
        return Err(Error::TooShort { len: x.len(), min: 2 });
    }
    let last = x[x.len() - 1];
    Ok(ProjPoint(x[..x.len() - 1].iter().map(|v| v - last).collect()))
}

/// Representative with final coordinate `0`.
pub fn lift(p: &ProjPoint) -> TropVector {
    let mut v = p.0.clone();
    v.push(TropScalar::from_integer(0));
    TropVector(v)
}

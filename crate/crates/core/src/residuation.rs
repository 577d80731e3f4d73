//! Residuation: the scalar product, principal solutions and span membership.

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::TropScalar;

fn same_len(op: &'static str, x: &[TropScalar], y: &[TropScalar]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::Dimension {
            op,
            expected: (x.len(), 1),
            found: (y.len(), 1),
        });
    }
    if x.is_empty() {
        return Err(Error::Empty);
    }
    Ok(())
}

/// `⟨x | y⟩ = max{λ : λ ⊗ x ≤ y} = min_i (y_i − x_i)`.
pub fn scalar_product(x: &[TropScalar], y: &[TropScalar]) -> Result<TropScalar> {
    same_len("scalar_product", x, y)?;
    Ok(x.iter().zip(y).map(|(a, b)| b - a).min().expect("nonempty"))
}

/// Greatest `x̂` with `A ⊗ x̂ ≤ y`: `x̂_j = min_i (y_i − A_{i,j})`.
pub fn residual_solve(a: &TropMatrix, y: &[TropScalar]) -> Result<TropVector> {
    if y.len() != a.rows() {
        return Err(Error::Dimension {
            op: "residual_solve",
            expected: (a.rows(), 1),
            found: (y.len(), 1),
        });
    }
    Ok(TropVector(
        (0..a.cols())
            .map(|j| (0..a.rows()).map(|i| y[i] - a.get(i, j)).min().expect("nonempty"))
            .collect(),
    ))
}

/// Membership of `y` in the column space `C(A)`.
///
/// Returns the principal solution as a witness (`A ⊗ x̂ = y`) when `y ∈ C(A)`.
pub fn in_span(a: &TropMatrix, y: &[TropScalar]) -> Result<Option<TropVector>> {
    let x = residual_solve(a, y)?;
    let image = a.mul_vec(&x)?;
    Ok((image.0 == y).then_some(x))
}

/// Returns `λ` with `y = λ ⊗ x` when the difference `y − x` is constant.
pub fn is_multiple(x: &[TropScalar], y: &[TropScalar]) -> Option<TropScalar> {
    if x.len() != y.len() || x.is_empty() {
        return None;
    }
    let lambda = y[0] - x[0];
    x.iter().zip(y).all(|(a, b)| b - a == lambda).then_some(lambda)
}

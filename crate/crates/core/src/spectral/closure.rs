use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::scalar::TropScalar;

use super::max_cycle_mean;

/// `A⁺ = A ⊕ A² ⊕ ⋯ ⊕ Aⁿ`, the heaviest-path matrix, for `λ(A) ≤ 0`.
///
/// Computed by Floyd–Warshall relaxation; with every cycle non-positive the
/// pivot's own star is `0` and drops out of the update.
pub fn kleene_plus(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.require_square()?;
    let mcm = max_cycle_mean(a)?;
    if mcm > TropScalar::zero() {
        return Err(Error::Divergent { mcm });
    }
    let mut b = a.clone();
    for k in 0..n {
        for i in 0..n {
            let bik = b[(i, k)];
            for j in 0..n {
                let through = bik + b[(k, j)];
                if through > b[(i, j)] {
                    b[(i, j)] = through;
                }
            }
        }
    }
    Ok(b)
}

/// `A* = I ⊕ A⁺` restricted to finite entries: an idempotent with zero diagonal.
pub fn kleene_star(a: &TropMatrix) -> Result<TropMatrix> {
    let mut s = kleene_plus(a)?;
    for i in 0..s.rows() {
        if s[(i, i)].is_negative() {
            s[(i, i)] = TropScalar::zero();
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn plus_examples() {
        let one = TropMatrix::from_rows(&[[int(-1)]]).unwrap();
        assert_eq!(kleene_plus(&one).unwrap(), one);
        let a = TropMatrix::from_rows(&[[rat(-1, 2), rat(5, 2)], [rat(-5, 2), rat(-1, 2)]]).unwrap();
        let expected = TropMatrix::from_rows(&[[int(0), rat(5, 2)], [rat(-5, 2), int(0)]]).unwrap();
        assert_eq!(kleene_plus(&a).unwrap(), expected);
        let e = TropMatrix::from_rows(&[[int(0), int(-1)], [int(-2), int(0)]]).unwrap();
        assert_eq!(kleene_plus(&e).unwrap(), e);
    }

    #[test]
    fn star_examples() {
        let one = TropMatrix::from_rows(&[[int(-1)]]).unwrap();
        assert_eq!(kleene_star(&one).unwrap(), TropMatrix::zeros(1, 1).unwrap());
        let a = TropMatrix::from_rows(&[[rat(-1, 2), rat(5, 2)], [rat(-5, 2), rat(-1, 2)]]).unwrap();
        let expected = TropMatrix::from_rows(&[[int(0), rat(5, 2)], [rat(-5, 2), int(0)]]).unwrap();
        assert_eq!(kleene_star(&a).unwrap(), expected);
    }

    #[test]
    fn positive_cycle_diverges() {
        let a = TropMatrix::from_rows(&[[int(-1), int(2)], [int(-1), int(-1)]]).unwrap();
        assert_eq!(kleene_plus(&a), Err(Error::Divergent { mcm: rat(1, 2) }));
        assert!(kleene_star(&a).is_err());
    }
}

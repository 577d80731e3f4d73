//! Span inclusion, Green's relations ℛ, ℒ, ℋ and extremal generators.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::residuation::{in_span, is_multiple};

/// Which Green relation (or preorder) to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    /// `A ≤_ℛ B`: `C(A) ⊆ C(B)`.
    LeqR,
    /// `A ≤_ℒ B`: `R(A) ⊆ R(B)`.
    LeqL,
    /// `C(A) = C(B)`.
    R,
    /// `R(A) = R(B)`.
    L,
    /// Both column and row spaces agree.
    H,
}

/// `C(A) ⊆ C(B)`: every column of `A` lies in the column space of `B`.
pub fn span_subset(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension {
            op: "span_subset",
            expected: (b.rows(), a.cols()),
            found: a.shape(),
        });
    }
    for j in 0..a.cols() {
        if in_span(b, &a.column(j))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C(A) = C(B)`.
pub fn span_equal(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    Ok(span_subset(a, b)? && span_subset(b, a)?)
}

/// `R(A) ⊆ R(B)`, decided on transposes.
pub fn row_span_subset(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    span_subset(&a.transpose(), &b.transpose())
}

/// Decides a Green relation between two square matrices of the same size.
pub fn green_relation(a: &TropMatrix, b: &TropMatrix, rel: GreenRelation) -> Result<bool> {
    let n = a.require_square()?;
    b.require_square()?;
    if b.rows() != n {
        return Err(Error::Dimension {
            op: "green_relation",
            expected: a.shape(),
            found: b.shape(),
        });
    }
    let cols = |x: &TropMatrix, y: &TropMatrix| span_subset(x, y);
    let rows = |x: &TropMatrix, y: &TropMatrix| row_span_subset(x, y);
    Ok(match rel {
        GreenRelation::LeqR => cols(a, b)?,
        GreenRelation::LeqL => rows(a, b)?,
        GreenRelation::R => cols(a, b)? && cols(b, a)?,
        GreenRelation::L => rows(a, b)? && rows(b, a)?,
        GreenRelation::H => cols(a, b)? && cols(b, a)? && rows(a, b)? && rows(b, a)?,
    })
}

/// Column indices giving one extremal generator per scaling class of `C(A)`.
///
/// Exactly proportional columns are collapsed onto the smallest index; a
/// surviving column is kept iff it is not in the span of the other survivors.
pub fn extremal_columns(a: &TropMatrix) -> Vec<usize> {
    let cols = a.columns();
    let mut distinct: Vec<usize> = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if !distinct.iter().any(|&d| is_multiple(&cols[d], c).is_some()) {
            distinct.push(j);
        }
    }
    if distinct.len() == 1 {
        return distinct;
    }
    distinct
        .iter()
        .copied()
        .filter(|&j| {
            let others: Vec<_> = distinct.iter().filter(|&&d| d != j).map(|&d| cols[d].clone()).collect();
            let rest = TropMatrix::from_columns(&others).expect("at least one other column");
            in_span(&rest, &cols[j]).expect("same height").is_none()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::vec;

    fn e() -> TropMatrix {
        TropMatrix::from_rows(&[[int(0), int(-1)], [int(-2), int(0)]]).unwrap()
    }

    fn swapped() -> TropMatrix {
        TropMatrix::from_rows(&[[rat(-3, 2), rat(1, 2)], [rat(-1, 2), rat(-3, 2)]]).unwrap()
    }

    #[test]
    fn span_subset_examples() {
        assert!(span_subset(&e(), &e()).unwrap());
        assert!(span_subset(&swapped(), &e()).unwrap());
        assert!(!span_subset(&e(), &TropMatrix::zeros(2, 2).unwrap()).unwrap());
        assert!(span_subset(&e(), &TropMatrix::zeros(3, 2).unwrap()).is_err());
    }

    #[test]
    fn green_examples() {
        for rel in [
            GreenRelation::LeqR,
            GreenRelation::LeqL,
            GreenRelation::R,
            GreenRelation::L,
            GreenRelation::H,
        ] {
            assert!(green_relation(&e(), &e(), rel).unwrap());
        }
        assert!(green_relation(&swapped(), &e(), GreenRelation::H).unwrap());
        let rank_one = TropMatrix::from_rows(&[[int(0), int(-1)], [int(1), int(0)]]).unwrap();
        assert!(!green_relation(&rank_one, &e(), GreenRelation::R).unwrap());
        // The line spanned by (0,1) sits inside C(E), but not conversely.
        assert!(green_relation(&rank_one, &e(), GreenRelation::LeqR).unwrap());
        assert!(!green_relation(&e(), &rank_one, GreenRelation::LeqR).unwrap());
        assert!(green_relation(&e(), &TropMatrix::zeros(3, 3).unwrap(), GreenRelation::H).is_err());
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_columns(&e()), vec![0, 1]);
        let rank_one = TropMatrix::from_rows(&[[int(0), int(-1)], [int(1), int(0)]]).unwrap();
        assert_eq!(extremal_columns(&rank_one), vec![0]);
        let same = TropMatrix::from_rows(&[[int(2), int(2), int(2)], [int(1), int(1), int(1)]]).unwrap();
        assert_eq!(extremal_columns(&same), vec![0]);
        // Third column is (0,-1) ⊕ (-1,0) = max of the first two.
        let redundant = TropMatrix::from_rows(&[[int(0), int(-1), int(0)], [int(-1), int(0), int(0)]]).unwrap();
        assert_eq!(extremal_columns(&redundant), vec![0, 1]);
    }
}

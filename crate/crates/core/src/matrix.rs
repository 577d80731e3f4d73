//! Dense row-major matrices and vectors over the tropical semirings.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Deref, Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{ExtTropScalar, MaxPlus, TropScalar};

/// Dense `rows × cols` matrix stored row-major. Both dimensions are at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with finite entries: an element of `M_{m×n}(ℝ, max, +)`.
pub type TropMatrix = Matrix<TropScalar>;

/// Matrix whose entries may be `-inf`.
pub type ExtTropMatrix = Matrix<ExtTropScalar>;

impl<T: Copy> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                op: "from_vec",
                expected: (rows, cols),
                found: (data.len() / cols, cols),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        if nrows == 0 || ncols == 0 {
            return Err(Error::Empty);
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != ncols {
                return Err(Error::Dimension {
                    op: "from_rows",
                    expected: (i + 1, ncols),
                    found: (i + 1, r.len()),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        Matrix::from_fn(rows.len(), cols.len(), |a, b| self.get(rows[a], cols[b]))
    }

    pub fn map<U: Copy>(&self, f: impl FnMut(T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().copied().map(f).collect(),
        }
    }

    /// Returns an error unless the matrix is square.
    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: MaxPlus> Matrix<T> {
    /// Tropical sum: entrywise maximum.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension {
                op: "mat_add",
                expected: self.shape(),
                found: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.oplus(*b)).collect(),
        })
    }

    /// Tropical product: `(A ⊗ B)_{i,j} = max_k (A_{i,k} + B_{k,j})`.
    pub fn otimes(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                op: "mat_mul",
                expected: (self.cols, other.cols),
                found: other.shape(),
            });
        }
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k).otimes(other.get(k, j)))
                .reduce(T::oplus)
                .expect("inner dimension is positive")
        })
    }

    /// Tropical matrix-vector product.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::Dimension {
                op: "apply",
                expected: (self.cols, 1),
                found: (x.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a.otimes(*b))
                    .reduce(T::oplus)
                    .expect("positive width")
            })
            .collect())
    }

    /// Scales every entry by `lambda` (tropically: adds it).
    pub fn scale(&self, lambda: T) -> Self {
        self.map(|a| a.otimes(lambda))
    }
}

impl TropMatrix {
    /// The all-zero `rows × cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Matrix::from_fn(rows, cols, |_, _| TropScalar::from_integer(0))
    }

    pub fn to_ext(&self) -> ExtTropMatrix {
        self.map(ExtTropScalar::Finite)
    }

    /// Columns as vectors.
    pub fn columns(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| TropVector(self.column(j))).collect()
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[TropVector]) -> Result<Self> {
        let n = columns.first().map_or(0, |c| c.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(Error::Dimension {
                    op: "from_columns",
                    expected: (n, j + 1),
                    found: (c.len(), j + 1),
                });
            }
        }
        Matrix::from_fn(n, columns.len(), |i, j| columns[j][i])
    }
}

impl ExtTropMatrix {
    /// Tropical identity: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Result<Self> {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                ExtTropScalar::ONE
            } else {
                ExtTropScalar::Bottom
            }
        })
    }

    /// Converts to a finite matrix, failing on the first `-inf` entry.
    pub fn to_finite(&self) -> Result<TropMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for (idx, v) in self.data.iter().enumerate() {
            match v {
                ExtTropScalar::Finite(x) => data.push(*x),
                ExtTropScalar::Bottom => {
                    return Err(Error::Infinite {
                        row: idx / self.cols,
                        col: idx % self.cols,
                    })
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                fmt::Display::fmt(&self.data[i * self.cols + j], f)?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Finite vector in affine tropical `n`-space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropVector(pub Vec<TropScalar>);

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(TropVector(entries))
    }

    pub fn scale(&self, lambda: TropScalar) -> Self {
        TropVector(self.0.iter().map(|x| x + lambda).collect())
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                op: "vec_add",
                expected: (self.len(), 1),
                found: (other.len(), 1),
            });
        }
        Ok(TropVector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect(),
        ))
    }

    /// Entrywise `≤`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn into_inner(self) -> Vec<TropScalar> {
        self.0
    }
}

impl Deref for TropVector {
    type Target = [TropScalar];

    fn deref(&self) -> &[TropScalar] {
        &self.0
    }
}

impl From<Vec<TropScalar>> for TropVector {
    fn from(v: Vec<TropScalar>) -> Self {
        TropVector(v)
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt::Display::fmt(x, f)?;
        }
        f.write_str(")")
    }
}

impl TropMatrix {
    /// `A ⊗ x` for a finite vector.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        self.apply(x).map(TropVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::vec;

    fn m(rows: &[&[i128]]) -> TropMatrix {
        let rows: Vec<Vec<TropScalar>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(m(&[&[0]]).oplus(&m(&[&[-1]])).unwrap(), m(&[&[0]]));
        let a = m(&[&[0, -1], &[-2, 0]]);
        assert_eq!(a.oplus(&a).unwrap(), a);
        let b = m(&[&[-3, 2], &[1, -1]]);
        assert_eq!(a.oplus(&b).unwrap(), m(&[&[0, 2], &[1, 0]]));
    }

    #[test]
    fn add_shape_mismatch() {
        let err = m(&[&[0, 1]]).oplus(&m(&[&[0], &[1]])).unwrap_err();
        assert!(err.is_shape_error());
    }

    #[test]
    fn mul_examples() {
        let e = m(&[&[0, -1], &[-2, 0]]);
        assert_eq!(e.otimes(&e).unwrap(), e);
        let f = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(f.otimes(&f).unwrap(), f);
        let id = ExtTropMatrix::identity(2).unwrap();
        assert_eq!(id.otimes(&e.to_ext()).unwrap(), e.to_ext());
        assert_eq!(e.to_ext().otimes(&id).unwrap(), e.to_ext());
    }

    #[test]
    fn mul_dimension_error() {
        assert!(m(&[&[0, 1]]).otimes(&m(&[&[0, 1]])).unwrap_err().is_shape_error());
    }

    #[test]
    fn extended_product_may_contain_bottom() {
        let id = ExtTropMatrix::identity(2).unwrap();
        let p = id.otimes(&id).unwrap();
        assert_eq!(p, id);
        assert_eq!(p.to_finite(), Err(Error::Infinite { row: 0, col: 1 }));
    }

    #[test]
    fn empty_rejected() {
        let rows: Vec<Vec<TropScalar>> = vec![];
        assert_eq!(TropMatrix::from_rows(&rows), Err(Error::Empty));
        assert_eq!(TropVector::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn mul_vec_and_transpose() {
        let a = m(&[&[0, -1, 3], &[-2, 0, 1]]);
        let x = TropVector(vec![rat(1, 2), int(0), int(-4)]);
        assert_eq!(a.mul_vec(&x).unwrap(), TropVector(vec![rat(1, 2), int(0)]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().shape(), (3, 2));
    }
}

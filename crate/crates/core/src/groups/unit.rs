use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{ExtTropMatrix, Matrix, TropMatrix, TropVector};
use crate::scalar::{ExtTropScalar, TropScalar};

/// A unit `D(λ) P_σ` of the extended matrix monoid: row `i` holds `λ_i` in
/// column `σ(i)` and `-inf` elsewhere, so `(G ⊗ x)_i = λ_i + x_{σ(i)}`.
///
/// Permutations are zero-based image lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialUnit {
    sigma: Vec<usize>,
    lambda: TropVector,
}

/// Cycle decomposition of a zero-based permutation, each cycle starting at its
/// smallest element, cycles ordered by that element.
pub fn permutation_cycles(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut cycles = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = sigma[i];
        }
        cycles.push(cycle);
    }
    cycles
}

pub fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    sigma
        .iter()
        .all(|&s| s < seen.len() && !core::mem::replace(&mut seen[s], true))
}

pub fn invert_permutation(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

impl MonomialUnit {
    pub fn new(sigma: Vec<usize>, lambda: TropVector) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::Empty);
        }
        if sigma.len() != lambda.len() {
            return Err(Error::Dimension {
                op: "monomial_unit",
                expected: (sigma.len(), 1),
                found: (lambda.len(), 1),
            });
        }
        if !is_permutation(&sigma) {
            return Err(Error::Invariant("sigma is not a permutation"));
        }
        Ok(MonomialUnit { sigma, lambda })
    }

    pub(crate) fn new_unchecked(sigma: Vec<usize>, lambda: TropVector) -> Self {
        debug_assert!(is_permutation(&sigma) && sigma.len() == lambda.len());
        MonomialUnit { sigma, lambda }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, TropScalar::zero())
    }

    /// `μ ⊗ I_n`.
    pub fn scalar(n: usize, mu: TropScalar) -> Self {
        MonomialUnit {
            sigma: (0..n).collect(),
            lambda: TropVector(vec![mu; n]),
        }
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn lambda(&self) -> &TropVector {
        &self.lambda
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s) && self.lambda.iter().all(Zero::is_zero)
    }

    /// `G ⊗ H`: `σ_{GH}(i) = σ_H(σ_G(i))` and `λ_{GH,i} = λ_{G,i} + λ_{H,σ_G(i)}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_size(other.size())?;
        let sigma = self.sigma.iter().map(|&s| other.sigma[s]).collect();
        let lambda = self
            .sigma
            .iter()
            .zip(self.lambda.iter())
            .map(|(&s, l)| l + other.lambda[s])
            .collect();
        Ok(MonomialUnit {
            sigma,
            lambda: TropVector(lambda),
        })
    }

    pub fn inverse(&self) -> Self {
        let sigma = invert_permutation(&self.sigma);
        let mut lambda = vec![TropScalar::zero(); self.size()];
        for (i, &s) in self.sigma.iter().enumerate() {
            lambda[s] = -self.lambda[i];
        }
        MonomialUnit {
            sigma,
            lambda: TropVector(lambda),
        }
    }

    /// `μ ⊗ G`.
    pub fn scale(&self, mu: TropScalar) -> Self {
        MonomialUnit {
            sigma: self.sigma.clone(),
            lambda: self.lambda.scale(mu),
        }
    }

    pub fn to_matrix(&self) -> ExtTropMatrix {
        Matrix::from_fn(self.size(), self.size(), |i, j| {
            if self.sigma[i] == j {
                ExtTropScalar::Finite(self.lambda[i])
            } else {
                ExtTropScalar::Bottom
            }
        })
        .expect("positive size")
    }

    /// `G ⊗ x`.
    pub fn apply(&self, x: &[TropScalar]) -> Result<TropVector> {
        self.same_size(x.len())?;
        Ok(TropVector(
            self.sigma
                .iter()
                .zip(self.lambda.iter())
                .map(|(&s, l)| l + x[s])
                .collect(),
        ))
    }

    /// `G ⊗ A`.
    pub fn left_mul(&self, a: &TropMatrix) -> Result<TropMatrix> {
        self.same_size(a.rows())?;
        Matrix::from_fn(a.rows(), a.cols(), |i, j| self.lambda[i] + a[(self.sigma[i], j)])
    }

    /// `A ⊗ G`.
    pub fn right_mul(&self, a: &TropMatrix) -> Result<TropMatrix> {
        self.same_size(a.cols())?;
        let inv = invert_permutation(&self.sigma);
        Matrix::from_fn(a.rows(), a.cols(), |i, j| a[(i, inv[j])] + self.lambda[inv[j]])
    }

    pub fn commutes_with(&self, a: &TropMatrix) -> Result<bool> {
        Ok(self.left_mul(a)? == self.right_mul(a)?)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        permutation_cycles(&self.sigma)
    }

    /// Mean weight of each permutation cycle, in [`permutation_cycles`] order.
    pub fn cycle_means(&self) -> Vec<TropScalar> {
        self.cycles()
            .iter()
            .map(|c| {
                let sum: TropScalar = c.iter().map(|&i| self.lambda[i]).sum();
                sum / TropScalar::from_integer(c.len() as i128)
            })
            .collect()
    }

    /// The maximum cycle mean, i.e. the unit's largest eigenvalue.
    pub fn eigenvalue(&self) -> TropScalar {
        self.cycle_means().into_iter().max().expect("positive size")
    }

    fn same_size(&self, n: usize) -> Result<()> {
        if n != self.size() {
            return Err(Error::Dimension {
                op: "monomial_unit",
                expected: (self.size(), self.size()),
                found: (n, n),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("sigma=[")?;
        for (i, s) in self.sigma.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s + 1)?;
        }
        write!(f, "] lambda={}", self.lambda)
    }
}

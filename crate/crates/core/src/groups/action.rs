use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::idem::idempotent_profile;
use crate::matrix::{Matrix, TropMatrix, TropVector};
use crate::projective::{lift, projectivize, ProjPoint};
use crate::residuation::{in_span, is_multiple, residual_solve};
use crate::scalar::TropScalar;

use super::enumerate::{sigma_group_capped, GroupDecomposition, DEFAULT_MAX_N};
use super::unit::MonomialUnit;

fn require_full_rank_idempotent(e: &TropMatrix) -> Result<()> {
    let profile = idempotent_profile(e)?;
    if profile.rank != e.rows() {
        return Err(Error::NotFullRank {
            rank: profile.rank,
            n: e.rows(),
        });
    }
    Ok(())
}

/// `γ(G) = G ⊗ E = E ⊗ G`, the isomorphism from commuting units onto `H_E`.
pub fn gamma(e: &TropMatrix, g: &MonomialUnit) -> Result<TropMatrix> {
    let left = g.left_mul(e)?;
    if left != g.right_mul(e)? {
        return Err(Error::DoesNotCommute);
    }
    Ok(left)
}

/// Inverts [`gamma`]: finds the unit `G` with `E ⊗ G = G ⊗ E = A`.
///
/// Each column of `A ∈ H_E` is a scaled column of `E`, and no two columns of a
/// full-rank `E` are proportional, so the matching is unique.
pub fn factor_hclass_element(e: &TropMatrix, a: &TropMatrix) -> Result<MonomialUnit> {
    require_full_rank_idempotent(e)?;
    let n = e.rows();
    if a.shape() != e.shape() {
        return Err(Error::Dimension {
            op: "factor_hclass_element",
            expected: e.shape(),
            found: a.shape(),
        });
    }
    let e_cols = e.columns();
    let mut sigma = alloc::vec![usize::MAX; n];
    let mut lambda = alloc::vec![TropScalar::zero(); n];
    for j in 0..n {
        let aj = a.column(j);
        let (p, mu) = e_cols
            .iter()
            .enumerate()
            .find_map(|(p, ep)| is_multiple(ep, &aj).map(|mu| (p, mu)))
            .ok_or(Error::MatchFailed { column: j })?;
        if sigma[p] != usize::MAX {
            return Err(Error::NotInHClass);
        }
        sigma[p] = j;
        lambda[p] = mu;
    }
    let g = MonomialUnit::new_unchecked(sigma, TropVector(lambda));
    if g.right_mul(e)? != *a || g.left_mul(e)? != *a {
        return Err(Error::NotInHClass);
    }
    Ok(g)
}

/// Classical affine description `x ↦ P·x + λ` of the action of `A ∈ H_E` on `C(E)`:
/// `(A ⊗ x)_i = x_{σ(i)} + λ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub sigma: Vec<usize>,
    pub lambda: TropVector,
}

impl AffineForm {
    /// Permute-and-shift with ordinary arithmetic.
    pub fn apply(&self, x: &[TropScalar]) -> Result<TropVector> {
        if x.len() != self.sigma.len() {
            return Err(Error::Dimension {
                op: "affine_apply",
                expected: (self.sigma.len(), 1),
                found: (x.len(), 1),
            });
        }
        Ok(TropVector(
            self.sigma
                .iter()
                .zip(self.lambda.iter())
                .map(|(&s, l)| x[s] + l)
                .collect(),
        ))
    }

    /// The induced map on the projective chart `ℝ^{n−1}`: `p ↦ B·p + c`.
    ///
    /// With `p_n = 0`, the image coordinate is `p_{σ(i)} − p_{σ(n)} + λ_i − λ_n`,
    /// so `B[i][j] = [σ(i) = j] − [σ(n) = j]` and `c_i = λ_i − λ_n`.
    pub fn projective(&self) -> Result<ProjectiveAffine> {
        let n = self.sigma.len();
        if n < 2 {
            return Err(Error::TooShort { len: n, min: 2 });
        }
        let last = self.sigma[n - 1];
        let linear = Matrix::from_fn(n - 1, n - 1, |i, j| {
            i64::from(self.sigma[i] == j) - i64::from(last == j)
        })?;
        let offset = projectivize(&self.lambda)?;
        Ok(ProjectiveAffine { linear, offset })
    }
}

/// Affine map `p ↦ linear·p + offset` on projective coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveAffine {
    pub linear: Matrix<i64>,
    pub offset: ProjPoint,
}

impl ProjectiveAffine {
    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let m = self.linear.rows();
        if p.len() != m {
            return Err(Error::Dimension {
                op: "projective_apply",
                expected: (m, 1),
                found: (p.len(), 1),
            });
        }
        Ok(ProjPoint(
            (0..m)
                .map(|i| {
                    let mut acc = self.offset[i];
                    for j in 0..m {
                        acc += p[j] * TropScalar::from_integer(i128::from(self.linear[(i, j)]));
                    }
                    acc
                })
                .collect(),
        ))
    }
}

/// Affine form of the action of `A ∈ H_E`, read off its unit factorization.
pub fn affine_form(e: &TropMatrix, a: &TropMatrix) -> Result<AffineForm> {
    let g = factor_hclass_element(e, a)?;
    Ok(AffineForm {
        sigma: g.sigma().to_vec(),
        lambda: g.lambda().clone(),
    })
}

/// A common eigenvector of every element of `H_E`, for full-rank idempotent `E`.
///
/// Σ acts on the projectivized column space by classical affine maps that
/// permute the orbit of any point, so the orbit's barycentre is fixed. The
/// column space is classically convex, hence the barycentre lies in it.
pub fn common_eigenvector(e: &TropMatrix) -> Result<TropVector> {
    let decomposition = sigma_group_capped(e, DEFAULT_MAX_N)?;
    common_eigenvector_of(&decomposition)
}

/// [`common_eigenvector`] for an already enumerated Σ.
pub fn common_eigenvector_of(d: &GroupDecomposition) -> Result<TropVector> {
    let e = &d.e;
    let n = e.rows();
    let seed = e.column(0);
    if n == 1 {
        return Ok(TropVector(seed));
    }
    let mut sum = alloc::vec![TropScalar::zero(); n - 1];
    for g in &d.sigma_group {
        let image = gamma(e, g)?.mul_vec(&TropVector(seed.clone()))?;
        for (acc, v) in sum.iter_mut().zip(projectivize(&image)?.iter()) {
            *acc += v;
        }
    }
    let count = TropScalar::from_integer(d.order as i128);
    let x = lift(&ProjPoint(sum.into_iter().map(|s| s / count).collect()));

    if in_span(e, &x)?.is_none() {
        return Err(Error::Invariant("orbit barycentre outside the column space"));
    }
    for g in &d.sigma_group {
        let image = gamma(e, g)?.mul_vec(&x)?;
        if is_multiple(&x, &image).is_none() {
            return Err(Error::Invariant("orbit barycentre is not a common eigenvector"));
        }
    }
    Ok(x)
}

/// Position of a point relative to the column space of a full-rank idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// In `C(E)` with a unique preimage under `E`.
    Interior,
    /// In `C(E)` with several preimages.
    Boundary,
    /// Outside `C(E)`.
    Exterior,
}

impl PointClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PointClass::Interior => "Interior",
            PointClass::Boundary => "Boundary",
            PointClass::Exterior => "Exterior",
        }
    }
}

/// Whether `E ⊗ x = y` has exactly one solution, given `y ∈ C(E)`.
///
/// Every solution lies below the principal solution `x̂`. Coordinate `j` of
/// `x̂` can be lowered without changing the product iff no row is attained by
/// column `j` alone, so the solution is unique iff every column is the strict
/// unique maximizer of `E_{i,k} + x̂_k` in some row `i` where the maximum is `y_i`.
fn unique_solution(e: &TropMatrix, y: &[TropScalar], xhat: &[TropScalar]) -> bool {
    let (rows, cols) = e.shape();
    (0..cols).all(|j| {
        (0..rows).any(|i| {
            let here = e[(i, j)] + xhat[j];
            here == y[i] && (0..cols).all(|k| k == j || e[(i, k)] + xhat[k] < here)
        })
    })
}

/// Classifies `y` as interior, boundary or exterior to `C(E)`.
pub fn classify_point(e: &TropMatrix, y: &[TropScalar]) -> Result<PointClass> {
    e.require_square()?;
    let xhat = residual_solve(e, y)?;
    if e.mul_vec(&xhat)?.0 != y {
        return Ok(PointClass::Exterior);
    }
    Ok(if unique_solution(e, y, &xhat) {
        PointClass::Interior
    } else {
        PointClass::Boundary
    })
}

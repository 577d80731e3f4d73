//! Idempotent matrices: rank, zero-diagonal normalization, reduction to full
//! rank and the canonical zero-diagonal representative of a 𝒟-class.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::green::{green_relation, span_equal, GreenRelation};
use crate::matrix::{ExtTropMatrix, Matrix, TropMatrix};
use crate::scalar::ExtTropScalar;
use crate::spectral::{critical_structure, CriticalStructure};

/// `E ⊗ E = E`, exactly.
pub fn is_idempotent(e: &TropMatrix) -> Result<bool> {
    match check_idempotent(e) {
        Ok(()) => Ok(true),
        Err(Error::NotIdempotent { .. }) => Ok(false),
        Err(other) => Err(other),
    }
}

/// Like [`is_idempotent`] but reports the first offending entry.
///
/// Diagonal entries are scanned first, since a diagonal mismatch means a
/// cycle of nonzero weight; the off-diagonal entries follow in row-major order.
pub fn check_idempotent(e: &TropMatrix) -> Result<()> {
    let n = e.require_square()?;
    let sq = e.otimes(e)?;
    let diagonal = (0..n).map(|i| (i, i));
    let off_diagonal = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j);
    match diagonal.chain(off_diagonal).find(|&(i, j)| sq[(i, j)] != e[(i, j)]) {
        Some((row, col)) => Err(Error::NotIdempotent { row, col }),
        None => Ok(()),
    }
}

fn first_nonzero_diagonal(e: &TropMatrix) -> Option<usize> {
    (0..e.rows()).find(|&i| !e[(i, i)].is_zero())
}

/// Spectral summary of an idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentProfile {
    pub matrix: TropMatrix,
    pub critical: CriticalStructure,
    /// Number of critical classes; equals the tropical, row and column rank.
    pub rank: usize,
    pub zero_diagonal: bool,
}

pub fn idempotent_profile(e: &TropMatrix) -> Result<IdempotentProfile> {
    check_idempotent(e)?;
    let critical = critical_structure(e)?;
    if !critical.mcm.is_zero() {
        return Err(Error::Invariant("idempotent with nonzero maximum cycle mean"));
    }
    Ok(IdempotentProfile {
        matrix: e.clone(),
        rank: critical.class_count(),
        zero_diagonal: first_nonzero_diagonal(e).is_none(),
        critical,
    })
}

/// Rank of an idempotent.
pub fn rank(e: &TropMatrix) -> Result<usize> {
    idempotent_profile(e).map(|p| p.rank)
}

/// Result of [`zero_diag_normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    /// Column `i` is the infimum of `{u ∈ C(E) : u_i ≥ 0}`.
    pub f: TropMatrix,
    /// `F` is idempotent and spans `C(E)`; holds iff `C(E)` is min-plus convex.
    pub valid: bool,
}

/// Zero-diagonal normalization of an idempotent's column space.
///
/// Every `u ∈ C(E)` with `u_i ≥ 0` dominates some rescaled column
/// `E_t − E_{i,t}`, so the infimum is `F_{j,i} = min_t (E_{j,t} − E_{i,t})`.
pub fn zero_diag_normalize(e: &TropMatrix) -> Result<Normalization> {
    check_idempotent(e)?;
    let n = e.rows();
    let f = Matrix::from_fn(n, n, |j, i| (0..n).map(|t| e[(j, t)] - e[(i, t)]).min().expect("n > 0"))?;
    let valid = is_idempotent(&f)? && span_equal(&f, e)?;
    Ok(Normalization { f, valid })
}

/// Whether `C(E)` is min-plus convex, decided by the normalization's validity.
pub fn is_minplus_convex_colspace(e: &TropMatrix) -> Result<bool> {
    zero_diag_normalize(e).map(|n| n.valid)
}

/// Reduction of an idempotent of rank `k` to a `k × k` idempotent of full rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankReduction {
    /// The idempotent being reduced.
    pub e: TropMatrix,
    /// One representative per critical class, ascending.
    pub representatives: Vec<usize>,
    /// `M ⊗ E ⊗ Mᵀ`, the submatrix of `E` on the representatives.
    pub f: TropMatrix,
    /// `k × n` selector: `M[i][j] = 0` iff `j = c_i`.
    pub m: ExtTropMatrix,
    /// `n × k` lift.
    pub n: ExtTropMatrix,
    /// `k × n` lift.
    pub p: ExtTropMatrix,
    pub zero_diagonal: bool,
}

impl FullRankReduction {
    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    fn require_zero_diagonal(&self) -> Result<()> {
        match first_nonzero_diagonal(&self.e) {
            Some(index) => Err(Error::DiagonalNotZero { index }),
            None => Ok(()),
        }
    }
}

/// Restricts an idempotent to its critical class representatives.
pub fn full_rank_reduce(e: &TropMatrix) -> Result<FullRankReduction> {
    let profile = idempotent_profile(e)?;
    let reps = profile.critical.representatives;
    let n = e.rows();
    let k = reps.len();
    let is_rep = |s: usize| reps.binary_search(&s).is_ok();
    let f = e.submatrix(&reps, &reps)?;
    let m = Matrix::from_fn(k, n, |i, j| {
        if j == reps[i] {
            ExtTropScalar::ONE
        } else {
            ExtTropScalar::Bottom
        }
    })?;
    let lift_n = Matrix::from_fn(n, k, |s, t| {
        if s == reps[t] {
            ExtTropScalar::ONE
        } else if !is_rep(s) {
            ExtTropScalar::Finite(e[(s, reps[t])])
        } else {
            ExtTropScalar::Bottom
        }
    })?;
    let lift_p = Matrix::from_fn(k, n, |t, s| {
        if s == reps[t] {
            ExtTropScalar::ONE
        } else if !is_rep(s) {
            ExtTropScalar::Finite(e[(reps[t], s)])
        } else {
            ExtTropScalar::Bottom
        }
    })?;
    Ok(FullRankReduction {
        e: e.clone(),
        representatives: reps,
        f,
        m,
        n: lift_n,
        p: lift_p,
        zero_diagonal: profile.zero_diagonal,
    })
}

/// `φ(A) = M ⊗ A ⊗ Mᵀ` for `A ∈ H_E`; an isomorphism `H_E → H_F` when `E` has zero diagonal.
pub fn reduce_hclass_element(red: &FullRankReduction, a: &TropMatrix) -> Result<TropMatrix> {
    red.require_zero_diagonal()?;
    if !green_relation(a, &red.e, GreenRelation::H)? {
        return Err(Error::NotInHClass);
    }
    a.submatrix(&red.representatives, &red.representatives)
}

/// `G ↦ N ⊗ G ⊗ P`, inverse to [`reduce_hclass_element`] on `H_F`.
pub fn lift_hclass_element(red: &FullRankReduction, g: &TropMatrix) -> Result<TropMatrix> {
    red.require_zero_diagonal()?;
    if !green_relation(g, &red.f, GreenRelation::H)? {
        return Err(Error::NotInHClass);
    }
    red.n.otimes(&g.to_ext())?.otimes(&red.p)?.to_finite()
}

/// Embeds a full-rank `k × k` idempotent into `n × n` by repeating the last index:
/// `E'[i][j] = F[min(i,k)][min(j,k)]` (one-based).
pub fn embed_full_rank(f: &TropMatrix, n: usize) -> Result<TropMatrix> {
    let profile = idempotent_profile(f)?;
    let k = f.rows();
    if profile.rank != k {
        return Err(Error::NotFullRank {
            rank: profile.rank,
            n: k,
        });
    }
    if n < k {
        return Err(Error::Dimension {
            op: "embed_full_rank",
            expected: (k, k),
            found: (n, n),
        });
    }
    Matrix::from_fn(n, n, |i, j| f[(i.min(k - 1), j.min(k - 1))])
}

/// A zero-diagonal idempotent of the same size and rank whose column space
/// is isomorphic to `C(E)`.
pub fn zero_diag_representative(e: &TropMatrix) -> Result<TropMatrix> {
    let red = full_rank_reduce(e)?;
    embed_full_rank(&red.f, e.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::vec;

    fn m2(a: i128, b: i128, c: i128, d: i128) -> TropMatrix {
        TropMatrix::from_rows(&[[int(a), int(b)], [int(c), int(d)]]).unwrap()
    }

    fn e2() -> TropMatrix {
        m2(0, -1, -2, 0)
    }

    #[test]
    fn idempotency_examples() {
        assert!(is_idempotent(&e2()).unwrap());
        assert!(!is_idempotent(&m2(0, -1, -2, 1)).unwrap());
        assert!(is_idempotent(&TropMatrix::zeros(4, 4).unwrap()).unwrap());
        assert!(is_idempotent(&TropMatrix::zeros(2, 3).unwrap()).is_err());
    }

    #[test]
    fn first_offender_prefers_diagonal() {
        // E² = [[0,0],[-1,2]] differs at (1,2), (2,1) and (2,2).
        assert_eq!(
            check_idempotent(&m2(0, -1, -2, 1)),
            Err(Error::NotIdempotent { row: 1, col: 1 })
        );
        // Diagonal intact: first off-diagonal mismatch in row-major order.
        let e = TropMatrix::from_rows(&[[int(0), int(-5), int(0)], [int(0); 3], [int(0); 3]]).unwrap();
        assert_eq!(check_idempotent(&e), Err(Error::NotIdempotent { row: 0, col: 1 }));
    }

    #[test]
    fn profile_examples() {
        let p = idempotent_profile(&e2()).unwrap();
        assert_eq!((p.rank, p.zero_diagonal), (2, true));
        let p = idempotent_profile(&m2(0, -1, 1, 0)).unwrap();
        assert_eq!((p.rank, p.zero_diagonal), (1, true));
        let p = idempotent_profile(&m2(0, -1, -1, -2)).unwrap();
        assert_eq!((p.rank, p.zero_diagonal), (1, false));
        assert!(matches!(
            idempotent_profile(&m2(0, -1, -2, 1)),
            Err(Error::NotIdempotent { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        let n = zero_diag_normalize(&e2()).unwrap();
        assert_eq!(n.f, e2());
        assert!(n.valid);

        // Rank one with a negative diagonal entry: F is the zero-diagonal
        // idempotent spanning the same line.
        let n = zero_diag_normalize(&m2(0, -1, -1, -2)).unwrap();
        assert_eq!(n.f, m2(0, 1, -1, 0));
        assert!(n.valid);

        assert!(is_minplus_convex_colspace(&m2(0, -1, 1, 0)).unwrap());
        assert!(is_minplus_convex_colspace(&TropMatrix::zeros(1, 1).unwrap()).unwrap());
        assert!(zero_diag_normalize(&m2(0, -1, -2, 1)).is_err());
    }

    #[test]
    fn reduce_examples() {
        let r = full_rank_reduce(&m2(0, -1, 1, 0)).unwrap();
        assert_eq!(r.representatives, vec![0]);
        assert_eq!(r.f, TropMatrix::zeros(1, 1).unwrap());

        let r = full_rank_reduce(&e2()).unwrap();
        assert_eq!(r.representatives, vec![0, 1]);
        assert_eq!(r.f, e2());

        let r = full_rank_reduce(&m2(0, -1, -1, -2)).unwrap();
        assert_eq!(r.representatives, vec![0]);
        assert_eq!(r.f, TropMatrix::zeros(1, 1).unwrap());
        assert!(!r.zero_diagonal);
        assert_eq!(
            reduce_hclass_element(&r, &m2(0, -1, -1, -2)),
            Err(Error::DiagonalNotZero { index: 1 })
        );
    }

    #[test]
    fn selector_identities() {
        let e = m2(0, -1, 1, 0);
        let r = full_rank_reduce(&e).unwrap();
        let id = ExtTropMatrix::identity(1).unwrap();
        assert_eq!(r.m.otimes(&r.n).unwrap(), id);
        assert_eq!(r.p.otimes(&r.m.transpose()).unwrap(), id);
        assert_eq!(
            r.m.otimes(&e.to_ext()).unwrap().otimes(&r.m.transpose()).unwrap(),
            r.f.to_ext()
        );
    }

    #[test]
    fn rank_one_hclass_roundtrip() {
        let e = m2(0, -1, 1, 0);
        let r = full_rank_reduce(&e).unwrap();
        let lambda = rat(5, 3);
        let a = e.scale(lambda);
        assert_eq!(
            reduce_hclass_element(&r, &a).unwrap(),
            TropMatrix::from_rows(&[[lambda]]).unwrap()
        );
        assert_eq!(reduce_hclass_element(&r, &e).unwrap(), r.f);
        let g = TropMatrix::from_rows(&[[lambda]]).unwrap();
        assert_eq!(lift_hclass_element(&r, &g).unwrap(), a);
        assert_eq!(reduce_hclass_element(&r, &e2()), Err(Error::NotInHClass));
    }

    #[test]
    fn full_rank_reduce_is_identity() {
        let r = full_rank_reduce(&e2()).unwrap();
        let a = TropMatrix::from_rows(&[[rat(-3, 2), rat(1, 2)], [rat(-1, 2), rat(-3, 2)]]).unwrap();
        assert_eq!(reduce_hclass_element(&r, &a).unwrap(), a);
        assert_eq!(lift_hclass_element(&r, &a).unwrap(), a);
        assert_eq!(lift_hclass_element(&r, &e2()).unwrap(), e2());
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_full_rank(&e2(), 2).unwrap(), e2());
        assert_eq!(
            embed_full_rank(&TropMatrix::zeros(1, 1).unwrap(), 2).unwrap(),
            TropMatrix::zeros(2, 2).unwrap()
        );
        let expected = TropMatrix::from_rows(&[
            [int(0), int(-1), int(-1)],
            [int(-2), int(0), int(0)],
            [int(-2), int(0), int(0)],
        ])
        .unwrap();
        let got = embed_full_rank(&e2(), 3).unwrap();
        assert_eq!(got, expected);
        assert!(is_idempotent(&got).unwrap());
        assert_eq!(rank(&got).unwrap(), 2);
        assert_eq!(
            embed_full_rank(&m2(0, -1, 1, 0), 3),
            Err(Error::NotFullRank { rank: 1, n: 2 })
        );
        assert!(embed_full_rank(&e2(), 1).is_err());
    }

    #[test]
    fn representative_examples() {
        assert_eq!(
            zero_diag_representative(&m2(0, -1, -1, -2)).unwrap(),
            TropMatrix::zeros(2, 2).unwrap()
        );
        assert_eq!(zero_diag_representative(&e2()).unwrap(), e2());
        let rep = zero_diag_representative(&m2(0, -1, 1, 0)).unwrap();
        assert_eq!(rank(&rep).unwrap(), 1);
        assert_eq!(rep, TropMatrix::zeros(2, 2).unwrap());
    }
}

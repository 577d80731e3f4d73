use alloc::vec::Vec;

use crate::error::Result;
use crate::idem::{full_rank_reduce, idempotent_profile, zero_diag_representative};
use crate::matrix::TropMatrix;

use super::enumerate::{sigma_group_capped, GroupDecomposition};

/// Steps taken to bring an idempotent to full rank before enumerating Σ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub n: usize,
    pub rank: usize,
    /// Zero-diagonal 𝒟-representative, present when the rank is below `n`.
    pub representative: Option<TropMatrix>,
    /// Critical class representatives used for the reduction.
    pub representatives: Vec<usize>,
    /// The full-rank `k × k` idempotent whose ℋ-class is isomorphic to `H_E`.
    pub reduced: TropMatrix,
}

/// `H_E ≅ ℝ × Σ` for an idempotent of any rank, with the reduction that led there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    pub decomposition: GroupDecomposition,
    pub trace: ReductionTrace,
}

/// Maximal subgroup structure of any idempotent.
///
/// Below full rank the idempotent is replaced by its zero-diagonal
/// representative (maximal subgroups in one 𝒟-class are isomorphic), which is
/// then reduced to its critical class representatives.
pub fn group_structure(e: &TropMatrix, max_n: usize) -> Result<GroupStructure> {
    let profile = idempotent_profile(e)?;
    let n = e.rows();
    let representative = if profile.rank < n {
        Some(zero_diag_representative(e)?)
    } else {
        None
    };
    let red = full_rank_reduce(representative.as_ref().unwrap_or(e))?;
    let decomposition = sigma_group_capped(&red.f, max_n)?;
    Ok(GroupStructure {
        decomposition,
        trace: ReductionTrace {
            n,
            rank: profile.rank,
            representative,
            representatives: red.representatives,
            reduced: red.f,
        },
    })
}

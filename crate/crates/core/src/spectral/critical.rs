use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Result;
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::TropScalar;

use super::{kleene_plus, max_cycle_mean, strongly_connected_components};

/// Maximum cycle mean together with the critical graph's node partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalStructure {
    /// The maximum cycle mean `λ`.
    pub mcm: TropScalar,
    /// Nodes lying on some cycle of mean `λ`, ascending.
    pub critical_nodes: Vec<usize>,
    /// Strongly connected components of the critical graph, each ascending,
    /// ordered by their smallest node.
    pub classes: Vec<Vec<usize>>,
    /// Smallest node of each class, in class order.
    pub representatives: Vec<usize>,
}

impl CriticalStructure {
    /// Number of critical classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `node`, if it is critical.
    pub fn class_of(&self, node: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&node).is_ok())
    }
}

/// Spectral data: critical structure, `(A_λ)⁺` and one eigenvector per critical class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub critical: CriticalStructure,
    pub aplus: TropMatrix,
    pub eigenbasis: Vec<TropVector>,
}

fn normalized_closure(a: &TropMatrix) -> Result<(TropScalar, TropMatrix, TropMatrix)> {
    a.require_square()?;
    let mcm = max_cycle_mean(a)?;
    let normalized = a.scale(-mcm);
    let plus = kleene_plus(&normalized)?;
    Ok((mcm, normalized, plus))
}

fn build_critical(mcm: TropScalar, normalized: &TropMatrix, plus: &TropMatrix) -> CriticalStructure {
    let n = normalized.rows();
    let zero = TropScalar::zero();
    let critical_flags: Vec<bool> = (0..n).map(|i| plus[(i, i)] == zero).collect();
    // Edge j -> i has weight normalized[i][j]; it is critical iff some return
    // path i -> j closes it into a zero-weight cycle.
    let mut succ: Vec<Vec<usize>> = (0..n).map(|_| Vec::new()).collect();
    for (j, out) in succ.iter_mut().enumerate() {
        for i in 0..n {
            if normalized[(i, j)] + plus[(j, i)] == zero {
                out.push(i);
            }
        }
    }
    let classes = strongly_connected_components(&succ, &critical_flags);
    let representatives = classes.iter().map(|c| c[0]).collect();
    CriticalStructure {
        mcm,
        critical_nodes: (0..n).filter(|&i| critical_flags[i]).collect(),
        classes,
        representatives,
    }
}

/// Critical nodes and critical classes of a square matrix.
pub fn critical_structure(a: &TropMatrix) -> Result<CriticalStructure> {
    let (mcm, normalized, plus) = normalized_closure(a)?;
    Ok(build_critical(mcm, &normalized, &plus))
}

/// Eigenspace generators: the columns of `(A_λ)⁺` at the class representatives.
pub fn eigenspace_basis(a: &TropMatrix) -> Result<SpectralReport> {
    let (mcm, normalized, plus) = normalized_closure(a)?;
    let critical = build_critical(mcm, &normalized, &plus);
    let eigenbasis = critical
        .representatives
        .iter()
        .map(|&r| TropVector(plus.column(r)))
        .collect();
    Ok(SpectralReport {
        critical,
        aplus: plus,
        eigenbasis,
    })
}

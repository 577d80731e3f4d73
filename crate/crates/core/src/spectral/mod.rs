//! Spectral theory of finite max-plus matrices.
//!
//! Graph convention: entry `A[i][j]` is the weight of the edge from node `j`
//! to node `i`, so `A ⊗ x` propagates values along edges. Cycle means do not
//! depend on the convention; critical edges and path entries of `A⁺` do.

mod closure;
mod critical;
mod karp;
mod scc;

pub use closure::{kleene_plus, kleene_star};
pub use critical::{critical_structure, eigenspace_basis, CriticalStructure, SpectralReport};
pub use karp::max_cycle_mean;
pub use scc::strongly_connected_components;

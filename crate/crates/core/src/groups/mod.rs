//! Maximal subgroups of the finitary tropical matrix semigroup.
//!
//! For a full-rank idempotent `E`, the ℋ-class `H_E` is isomorphic to the group
//! `G_E` of monomial units commuting with `E`, and `G_E ≅ ℝ × Σ` where Σ is the
//! finite group of such units with eigenvalue 0.

mod action;
mod enumerate;
mod structure;
mod unit;

pub use action::{
    affine_form, classify_point, common_eigenvector, common_eigenvector_of, factor_hclass_element, gamma, AffineForm,
    PointClass, ProjectiveAffine,
};
pub use enumerate::{
    commuting_units, decompose_unit, sigma_group, sigma_group_capped, GroupDecomposition, DEFAULT_MAX_N,
};
pub use structure::{group_structure, GroupStructure, ReductionTrace};
pub use unit::{invert_permutation, is_permutation, permutation_cycles, MonomialUnit};

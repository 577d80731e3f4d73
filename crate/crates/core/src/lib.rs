//! Exact max-plus matrix algebra for idempotents and maximal subgroups.
//!
//! The crate is `no_std` (it needs `alloc`). Scalars are exact rationals, so
//! every identity is checked by equality rather than within a tolerance.

#![no_std]

extern crate alloc;

pub mod error;
pub mod green;
pub mod groups;
pub mod idem;
pub mod matrix;
pub mod projective;
#[cfg(feature = "rand")]
pub mod random;
pub mod residuation;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use green::{extremal_columns, green_relation, span_equal, span_subset, GreenRelation};
pub use groups::{
    affine_form, classify_point, common_eigenvector, common_eigenvector_of, commuting_units, decompose_unit,
    factor_hclass_element, gamma, group_structure, sigma_group, sigma_group_capped, AffineForm, GroupDecomposition,
    GroupStructure, MonomialUnit, PointClass, ProjectiveAffine,
};
pub use idem::{
    check_idempotent, embed_full_rank, full_rank_reduce, idempotent_profile, is_idempotent, is_minplus_convex_colspace,
    lift_hclass_element, reduce_hclass_element, zero_diag_normalize, zero_diag_representative, FullRankReduction,
    IdempotentProfile, Normalization,
};
pub use matrix::{ExtTropMatrix, Matrix, TropMatrix, TropVector};
pub use projective::{lift, projectivize, ProjPoint};
pub use residuation::{in_span, is_multiple, residual_solve, scalar_product};
pub use scalar::{int, rat, ExtTropScalar, MaxPlus, TropScalar};
pub use spectral::{
    critical_structure, eigenspace_basis, kleene_plus, kleene_star, max_cycle_mean, CriticalStructure, SpectralReport,
};

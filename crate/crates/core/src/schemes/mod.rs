//! The ideals, sample points and pointwise checks for pairs of matrices.

mod checks;
mod ideals;
mod matrix;
mod points;

pub use checks::{
    diag_lemma_check, jacobian_rank, point_values, power_diagonal_matrix, tao_rank_check,
    vanishes_at, DiagConvention, TaoReport,
};
pub use ideals::{
    build_ideal, degeneration_weight, same_up_to_sign, schubert_rank_minors, tau_substitute,
    w0_conjugate, Orientation, SchemeKey, SchemeTag,
};
pub use matrix::{generic_matrices, SymbolicMatrix};
pub use points::{
    permutation_matrix, random_d_point, random_params, sample_point, SamplePointParams,
};

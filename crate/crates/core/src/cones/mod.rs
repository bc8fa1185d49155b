//! Dense symmetric matrices and the numeric operations on PSD cones with a
//! graph sparsity pattern.

mod blocks;
mod matrix;
mod power;
mod psd;
mod sampling;
mod witness;

pub use blocks::{
    condition_number, relative_frobenius_error, schur_complement, split_by_decomposition,
    three_factor_form, ThreeFactorForm, CONDITION_LIMIT,
};
pub use matrix::SymMatrix;
pub use power::{entrywise_power, PowerFamily};
pub use psd::{eigen_extremes, is_psd, PsdVerdict, DEFAULT_TOL_SCALE, DEFAULT_WITNESS_THRESHOLD};
pub use sampling::{random_psd_for_graph, CliqueSumSampler, OrthogonalGramSampler};
pub use witness::{bordered_matrix, rank_two, superadditive_defect, witness_matrix};

//! Finite simple group descriptors and exact order formulas.

mod orders;
mod spec;
mod sporadic;
mod subgroups;

pub use orders::{
    factorial, formula_order, gaussian_binomial, gaussian_binomial_value, order_alternating,
    order_simple, order_symmetric,
};
pub use spec::{ExceptionalKind, GroupSpec, OrthogonalKind, MAX_DEGREE, MAX_RANK};
pub use sporadic::Sporadic;
pub use subgroups::{
    order_psl2_parabolic, order_psl_subspace_stab, order_psu_nondeg_stab, order_psu_totsing_stab,
    order_torus_normalizer, small_group_order, MaxSubgroupDescriptor, SubgroupKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("not a simple group: {0}")]
    NotSimple(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
}

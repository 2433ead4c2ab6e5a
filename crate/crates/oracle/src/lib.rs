//! Brute-force oracle: `PSL(2,p)` as permutations of the projective line,
//! its full subgroup lattice, and the coprime pairs among its maximal
//! subgroups. Nothing here consults the classifier except [`cross_check`].

mod check;
mod lattice;
mod perm;

pub use check::{coprime_pairs_bruteforce, cross_check, normalize_pair, CrossCheckReport};
pub use lattice::{maximal_subgroups, subgroup_lattice, SubgroupLattice, SubgroupRecord};
pub use perm::{build_psl2, Perm, PermGroup};

/// Largest group the lattice enumeration accepts.
pub const MAX_GROUP_ORDER: usize = 7000;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("q = {0} is not prime")]
    NotPrime(u64),
    #[error("q = {0} outside 5..=23")]
    OutOfRange(u64),
    #[error("group order {0} exceeds the lattice bound")]
    TooLarge(usize),
    #[error(transparent)]
    Classifier(#[from] maxpair_core::classifier::ClassifierError),
}

use num_integer::Integer;
use serde::Serialize;

use maxpair_core::classifier::classify_psl2;

use crate::lattice::{maximal_subgroups, subgroup_lattice, SubgroupRecord};
use crate::perm::build_psl2;
use crate::OracleError;

/// Orders `(a, b)` with the odd one first, and the larger first when both are odd.
pub fn normalize_pair(a: u64, b: u64) -> (u64, u64) {
    match (a % 2 == 1, b % 2 == 1) {
        (true, false) => (a, b),
        (false, true) => (b, a),
        _ => (a.max(b), a.min(b)),
    }
}

/// Unordered pairs of maximal subgroups with coprime orders.
///
/// Conjugacy classes with the same order and element-order histogram are
/// counted once, so the two classes of `S_4` in `PSL(2,23)` give one pair.
pub fn coprime_pairs_bruteforce(maximals: &[&SubgroupRecord]) -> Vec<(u64, u64)> {
    let mut types: Vec<(u64, &[(u32, u32)])> = maximals
        .iter()
        .map(|s| (s.order as u64, s.signature.as_slice()))
        .collect();
    types.sort_unstable();
    types.dedup();
    let mut out = Vec::new();
    for (i, &(a, _)) in types.iter().enumerate() {
        for &(b, _) in &types[i + 1..] {
            if a.gcd(&b) == 1 {
                out.push(normalize_pair(a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub q: u64,
    pub group_order: usize,
    pub subgroup_count: usize,
    pub class_count: usize,
    /// One entry per conjugacy class of maximal subgroups, largest first.
    pub maximal_class_orders: Vec<usize>,
    pub oracle_pairs: Vec<(u64, u64)>,
    pub classifier_pairs: Vec<(u64, u64)>,
    pub agree: bool,
}

/// Builds `PSL(2,q)`, enumerates its lattice and compares the coprime pairs
/// by order with the classifier's verdict.
pub fn cross_check(q: u64) -> Result<CrossCheckReport, OracleError> {
    let g = build_psl2(q)?;
    let lattice = subgroup_lattice(&g)?;
    let oracle_pairs = coprime_pairs_bruteforce(&maximal_subgroups(&lattice));
    let verdict = classify_psl2(q)?;
    let mut classifier_pairs: Vec<(u64, u64)> = verdict
        .order_pairs()
        .iter()
        .map(|(h, m)| {
            normalize_pair(
                h.to_u64().expect("small group"),
                m.to_u64().expect("small group"),
            )
        })
        .collect();
    classifier_pairs.sort_unstable();
    Ok(CrossCheckReport {
        q,
        group_order: g.order(),
        subgroup_count: lattice.len(),
        class_count: lattice.classes.len(),
        maximal_class_orders: lattice.maximal_class_orders(),
        agree: oracle_pairs == classifier_pairs,
        oracle_pairs,
        classifier_pairs,
    })
}

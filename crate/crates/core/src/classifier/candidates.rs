use num_bigint::BigUint;

use super::{is_odd_prime, ClassifierError};
use crate::arith::{FactoredInt, PrimePower};
use crate::atlas::structure_order;
use crate::atlas::tables::{BABY_MONSTER_ODD, M23_ODD};
use crate::groups::{
    order_psl2_parabolic, order_torus_normalizer, GroupSpec, MaxSubgroupDescriptor, Sporadic,
    SubgroupKind,
};

/// Linear and unitary groups whose torus normalizer is not maximal.
pub(crate) fn torus_excluded(g: &GroupSpec) -> bool {
    matches!(
        (*g, g_params(g)),
        (GroupSpec::Linear { .. }, Some((3, 4)))
            | (GroupSpec::Unitary { .. }, Some((3, 3) | (3, 5) | (5, 2)))
    )
}

fn g_params(g: &GroupSpec) -> Option<(u32, u64)> {
    match *g {
        GroupSpec::Linear { n, q } | GroupSpec::Unitary { n, q } => Some((n, q.value())),
        _ => None,
    }
}

/// Odd-order maximal subgroups of `g`.
///
/// Empty for every family without one. The Monster rows are returned with
/// `maximal = false`.
pub fn odd_maximal_candidates(g: &GroupSpec) -> Result<Vec<MaxSubgroupDescriptor>, ClassifierError> {
    g.validate()?;
    let out = match *g {
        GroupSpec::Alternating(p) => {
            let p = p as u64;
            if crate::arith::primes::is_prime_u64(p) && p % 4 == 3 && ![7, 11, 23].contains(&p) {
                let order = FactoredInt::from_u64(p * (p - 1) / 2).expect("positive");
                vec![MaxSubgroupDescriptor::new(
                    SubgroupKind::Frobenius,
                    format!("{p}:{}", (p - 1) / 2),
                    order,
                )]
            } else {
                Vec::new()
            }
        }
        GroupSpec::Linear { n: 2, q } if q.value() % 4 == 3 => vec![borel(q)?],
        GroupSpec::Linear { n, q } | GroupSpec::Unitary { n, q }
            if is_odd_prime(n) && !torus_excluded(g) =>
        {
            let linear = matches!(g, GroupSpec::Linear { .. });
            vec![torus(n, q.value(), linear)?]
        }
        GroupSpec::Sporadic(s) => sporadic_rows(s)?,
        _ => Vec::new(),
    };
    Ok(out)
}

/// `E_q:((q-1)/2)` in `PSL(2,q)`.
pub(crate) fn borel(q: PrimePower) -> Result<MaxSubgroupDescriptor, ClassifierError> {
    let order = order_psl2_parabolic(q.value())?;
    let eq = if q.e() == 1 {
        q.p().to_string()
    } else {
        format!("{}^{}", q.p(), exponent(q.e()))
    };
    Ok(MaxSubgroupDescriptor::new(
        SubgroupKind::Parabolic(1),
        format!("{eq}:{}", (q.value() - 1) / 2),
        order,
    ))
}

/// `N:n`, the normalizer of a cyclic torus of order `N` in `PSL(n,q)` or `PSU(n,q)`.
pub(crate) fn torus(n: u32, q: u64, linear: bool) -> Result<MaxSubgroupDescriptor, ClassifierError> {
    let order = order_torus_normalizer(n, q, linear)?;
    let cyclic = order.value() / BigUint::from(n);
    Ok(MaxSubgroupDescriptor::new(
        SubgroupKind::TorusNormalizer,
        format!("{cyclic}:{n}"),
        order,
    ))
}

fn exponent(e: u32) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

fn table_row(s: &str) -> Result<MaxSubgroupDescriptor, ClassifierError> {
    Ok(MaxSubgroupDescriptor::new(
        SubgroupKind::SporadicTable,
        s,
        structure_order(s)?,
    ))
}

pub(crate) fn sporadic_rows(s: Sporadic) -> Result<Vec<MaxSubgroupDescriptor>, ClassifierError> {
    Ok(match s {
        Sporadic::M23 => vec![table_row(M23_ODD)?],
        Sporadic::Th => vec![table_row("31:15")?],
        Sporadic::B => vec![table_row(BABY_MONSTER_ODD)?],
        Sporadic::M => vec![
            table_row("59:29")?.not_maximal(),
            table_row("71:35")?.not_maximal(),
        ],
        _ => Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: GroupSpec) -> Vec<u64> {
        odd_maximal_candidates(&g)
            .unwrap()
            .iter()
            .map(|d| d.order.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn rows() {
        assert_eq!(orders(GroupSpec::Alternating(19)), vec![171]);
        assert!(orders(GroupSpec::Alternating(23)).is_empty());
        assert!(orders(GroupSpec::Alternating(13)).is_empty());
        assert_eq!(orders(GroupSpec::linear(2, 27).unwrap()), vec![351]);
        assert!(orders(GroupSpec::linear(2, 13).unwrap()).is_empty());
        assert_eq!(orders(GroupSpec::linear(5, 2).unwrap()), vec![155]);
        assert!(orders(GroupSpec::linear(3, 4).unwrap()).is_empty());
        assert!(orders(GroupSpec::unitary(5, 2).unwrap()).is_empty());
        assert_eq!(orders(GroupSpec::unitary(3, 11).unwrap()), vec![111]);
        assert_eq!(orders(GroupSpec::Sporadic(Sporadic::Th)), vec![465]);
        let m = odd_maximal_candidates(&GroupSpec::Sporadic(Sporadic::M)).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|d| !d.maximal));
    }

    #[test]
    fn structures() {
        let b = borel(PrimePower::from_value(27).unwrap()).unwrap();
        assert_eq!(b.structure, "3^3:13");
        assert_eq!(torus(5, 2, true).unwrap().structure, "31:5");
        assert_eq!(torus(3, 11, false).unwrap().structure, "37:3");
    }
}

use super::candidates::{torus, torus_excluded};
use super::{
    audit_stabilizers, caveat_applies, is_odd_prime, subscript, Clause, ClassifierError,
    ClassifierVerdict, Condition, CoprimePairReport,
};
use crate::arith::{mult_order_u64, p_part};
use crate::groups::{
    order_psu_nondeg_stab, order_psu_totsing_stab, GroupError, GroupSpec, MaxSubgroupDescriptor,
    SubgroupKind,
};

/// Which totally singular clause covers `m`, if any.
fn singular_clause(n: u32, ord: u32, m: u32) -> Option<Clause> {
    let n1 = n % 4 == 1;
    let n3 = n % 4 == 3;
    if n1 && ord == n - 1 && 3 * m < n {
        Some(Clause::UnitarySingularA)
    } else if n3 && ord == (n - 1) / 2 && 3 * m < n {
        Some(Clause::UnitarySingularB)
    } else if ord == n - 1 && 3 * m > n && 2 * m < n - 1 {
        Some(Clause::UnitarySingularC)
    } else if n3 && ord == n - 1 && 4 * m > n + 1 && 3 * m < n {
        Some(Clause::UnitarySingularD)
    } else {
        None
    }
}

fn nondeg_clause(n: u32, ord: u32) -> Option<Clause> {
    if n % 4 == 1 && ord == n - 1 {
        Some(Clause::UnitaryNondegA)
    } else if n % 4 == 3 && ord == (n - 1) / 2 {
        Some(Clause::UnitaryNondegB)
    } else {
        None
    }
}

/// Pairs in `PSU(n,q)` for an odd prime `n`, with `H` the torus normalizer.
pub fn classify_psu(n: u32, q: u64) -> Result<ClassifierVerdict, ClassifierError> {
    if !is_odd_prime(n) {
        return Err(GroupError::InvalidParameter(format!("n = {n} is not an odd prime")).into());
    }
    let g = GroupSpec::unitary(n, q)?;
    let caveat = caveat_applies(n);
    if torus_excluded(&g) {
        let mut v = ClassifierVerdict::finish(g, Vec::new(), Vec::new(), caveat);
        v.notes
            .insert(0, format!("the torus normalizer is not maximal in {g}"));
        return Ok(v);
    }
    let h = torus(n, q, false)?;
    let half = (n - 1) / 2;
    let nondeg: Vec<_> = (1..=half)
        .map(|m| {
            Ok::<_, ClassifierError>(MaxSubgroupDescriptor::new(
                SubgroupKind::Nondegenerate(m),
                format!("N_{}", subscript(m)),
                order_psu_nondeg_stab(n, q, m)?,
            ))
        })
        .collect::<Result<_, _>>()?;
    let singular: Vec<_> = (1..=half)
        .map(|m| {
            Ok::<_, ClassifierError>(MaxSubgroupDescriptor::new(
                SubgroupKind::TotallySingular(m),
                format!("P_{}", subscript(m)),
                order_psu_totsing_stab(n, q, m)?,
            ))
        })
        .collect::<Result<_, _>>()?;

    let mut notes = Vec::new();
    let mut pairs = Vec::new();
    if n == 3 {
        let part = p_part(q + 1, 3).expect("q + 1 > 0");
        if q != 5 && part == 3 {
            pairs.push(CoprimePairReport::new(
                Clause::Unitary3,
                h.clone(),
                singular[0].clone(),
                vec![Condition::new("(q+1)_3", part)],
            )?);
        } else {
            notes.push(format!("(q+1)_3 = {part}, not 3"));
        }
    } else if q % n as u64 == 0 {
        notes.push(format!("q = {q} is a power of n = {n}"));
    } else {
        let ord = mult_order_u64(q, n as u64).expect("coprime") as u32;
        let base = |m: u32| {
            vec![
                Condition::new("n mod 4", n % 4),
                Condition::new("ord_n(q)", ord),
                Condition::new("m", m),
            ]
        };
        if let Some(clause) = nondeg_clause(n, ord) {
            for m in 2..=half {
                pairs.push(CoprimePairReport::new(
                    clause,
                    h.clone(),
                    nondeg[m as usize - 1].clone(),
                    base(m),
                )?);
            }
        }
        for m in 1..=half {
            if let Some(clause) = singular_clause(n, ord, m) {
                pairs.push(CoprimePairReport::new(
                    clause,
                    h.clone(),
                    singular[m as usize - 1].clone(),
                    base(m),
                )?);
            }
        }
        if pairs.is_empty() {
            notes.push(format!("ord_{n}({q}) = {ord}: no clause applies"));
        }
    }
    let all: Vec<_> = nondeg.into_iter().chain(singular).collect();
    notes.extend(audit_stabilizers(&h, &all, &pairs));
    Ok(ClassifierVerdict::finish(g, pairs, notes, caveat))
}

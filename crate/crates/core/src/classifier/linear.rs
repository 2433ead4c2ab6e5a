use super::candidates::{borel, torus, torus_excluded};
use super::{
    audit_stabilizers, caveat_applies, Clause, ClassifierError, ClassifierVerdict, Condition,
    CoprimePairReport,
};
use crate::arith::{mult_order_u64, primes::is_prime_u64, FactoredInt};
use crate::groups::{
    order_psl_subspace_stab, small_group_order, GroupError, GroupSpec, MaxSubgroupDescriptor,
    SubgroupKind,
};

/// Pairs in `PSL(2,q)`. `H` is always the Borel subgroup `E_q:((q-1)/2)`.
pub fn classify_psl2(q: u64) -> Result<ClassifierVerdict, ClassifierError> {
    let g = GroupSpec::linear(2, q)?;
    let GroupSpec::Linear { q: pp, .. } = g else {
        unreachable!()
    };
    if q % 4 != 3 {
        return Ok(ClassifierVerdict::negative(
            g,
            format!("q = {q} is not 3 mod 4: no maximal subgroup of odd order"),
        ));
    }
    let h = borel(pp)?;
    let prime = is_prime_u64(q);
    let mut pairs = Vec::new();
    if q > 7 {
        let m = MaxSubgroupDescriptor::new(
            SubgroupKind::Dihedral,
            format!("D_{{{}}}", q + 1),
            FactoredInt::from_u64(q + 1).expect("positive"),
        )
        .printed_as(format!("D_{{2({})}}", q + 1));
        pairs.push(CoprimePairReport::new(
            Clause::Psl2Dihedral,
            h.clone(),
            m,
            vec![Condition::new("q mod 4", q % 4), Condition::new("q > 7", true)],
        )?);
    }
    let small_rows = [
        (Clause::Psl2S4, SubgroupKind::S4, "S_4", "S4", 24, q % 24 == 23),
        (
            Clause::Psl2A4,
            SubgroupKind::A4,
            "A_4",
            "A4",
            120,
            q % 120 == 83 || q % 120 == 107,
        ),
        (Clause::Psl2A5, SubgroupKind::A5, "A_5", "A5", 60, q % 60 == 59),
    ];
    for (clause, kind, structure, key, modulus, holds) in small_rows {
        if prime && holds {
            let order = small_group_order(key).expect("tabulated");
            pairs.push(CoprimePairReport::new(
                clause,
                h.clone(),
                MaxSubgroupDescriptor::new(kind, structure, order),
                vec![
                    Condition::new("q prime", true),
                    Condition::new(format!("q mod {modulus}"), q % modulus),
                ],
            )?);
        }
    }
    let mut notes = Vec::new();
    if pairs.is_empty() {
        notes.push(format!(
            "E_q:(q-1)/2 of order {} has no coprime maximal partner",
            h.order
        ));
    }
    Ok(ClassifierVerdict::finish(g, pairs, notes, false))
}

/// Pairs in `PSL(n,q)` for an odd prime `n`, with `H` the torus normalizer.
pub fn classify_psl(n: u32, q: u64) -> Result<ClassifierVerdict, ClassifierError> {
    if !super::is_odd_prime(n) {
        return Err(GroupError::InvalidParameter(format!("n = {n} is not an odd prime")).into());
    }
    let g = GroupSpec::linear(n, q)?;
    let caveat = caveat_applies(n);
    if torus_excluded(&g) {
        let mut v = ClassifierVerdict::finish(g, Vec::new(), Vec::new(), caveat);
        v.notes
            .insert(0, format!("the torus normalizer is not maximal in {g}"));
        return Ok(v);
    }
    let h = torus(n, q, true)?;
    let mut notes = Vec::new();
    let mut pairs = Vec::new();
    let power_of_n = q % n as u64 == 0;
    let ord = if power_of_n {
        notes.push(format!("q = {q} is a power of n = {n}"));
        None
    } else {
        Some(mult_order_u64(q, n as u64).expect("coprime"))
    };
    let stabs: Vec<_> = (1..n)
        .map(|m| stabilizer(n, q, m))
        .collect::<Result<_, _>>()?;
    if ord == Some(n as u64 - 1) {
        for m in 2..=n - 2 {
            pairs.push(CoprimePairReport::new(
                Clause::LinearParabolic,
                h.clone(),
                stabs[m as usize - 1].clone(),
                vec![
                    Condition::new("ord_n(q)", n - 1),
                    Condition::new("m", m),
                ],
            )?);
        }
    } else if let Some(o) = ord {
        notes.push(format!("ord_{n}({q}) = {o}, not n - 1"));
    }
    notes.extend(audit_stabilizers(&h, &stabs, &pairs));
    Ok(ClassifierVerdict::finish(g, pairs, notes, caveat))
}

fn stabilizer(n: u32, q: u64, m: u32) -> Result<MaxSubgroupDescriptor, ClassifierError> {
    Ok(MaxSubgroupDescriptor::new(
        SubgroupKind::Parabolic(m),
        format!("P_{}", super::subscript(m)),
        order_psl_subspace_stab(n, q, m)?,
    ))
}

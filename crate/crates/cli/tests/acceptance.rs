//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;

use maxpair_core::arith::{gcd_q_powers, is_prime_power, FactoredInt, Sign};
use maxpair_core::atlas::structure_order;
use maxpair_core::atlas::tables::{
    BABY_MONSTER_ODD, BABY_MONSTER_PARTNERS, M23_ODD, M23_PARTNERS,
};
use maxpair_core::classifier::{
    classify, classify_psl, classify_psl2, classify_psu, classify_sporadic, Clause,
    ClassifierVerdict, Status,
};
use maxpair_core::groups::{
    gaussian_binomial, order_psl_subspace_stab, order_simple, ExceptionalKind, GroupSpec,
    Sporadic, SubgroupKind,
};
use maxpair_oracle::cross_check;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_pairs(v: &ClassifierVerdict) -> Vec<(u64, u64)> {
    v.order_pairs()
        .iter()
        .map(|(h, m)| (h.to_u64().unwrap(), m.to_u64().unwrap()))
        .collect()
}

fn oracle_agreement() -> Outcome {
    let expected: [(u64, &[(u64, u64)]); 6] = [
        (5, &[]),
        (7, &[]),
        (11, &[(55, 12)]),
        (13, &[]),
        (19, &[(171, 20)]),
        (23, &[(253, 24), (253, 24)]),
    ];
    for (q, pairs) in expected {
        let r = cross_check(q).map_err(|e| e.to_string())?;
        ensure(r.agree, || {
            format!("q={q}: oracle {:?} vs classifier {:?}", r.oracle_pairs, r.classifier_pairs)
        })?;
        ensure(r.oracle_pairs == pairs, || {
            format!("q={q}: got {:?}, expected {pairs:?}", r.oracle_pairs)
        })?;
    }
    Ok("q in {5,7,11,13,19,23} agree; 23 gives (253,24) x2".into())
}

fn gcd_lemma() -> Outcome {
    let signs = [Sign::Minus, Sign::Plus];
    let mut checked = 0;
    for q in 2u64..=12 {
        let qb = BigUint::from(q);
        let value = |k: u32, s: Sign| {
            let p = qb.pow(k);
            match s {
                Sign::Minus => p - 1u32,
                Sign::Plus => p + 1u32,
            }
        };
        for k in 1..=14 {
            for m in 1..=14 {
                for sk in signs {
                    for sm in signs {
                        let lemma = gcd_q_powers(q, k, sk, m, sm).value();
                        let direct = value(k, sk).gcd(&value(m, sm));
                        ensure(lemma == direct, || {
                            format!("q={q} k={k} {sk:?} m={m} {sm:?}: {lemma} != {direct}")
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} cases"))
}

fn stabilizer_identity() -> Outcome {
    let mut checked = 0;
    for n in [3u32, 5, 7, 11, 13] {
        for q in (2..=9).filter(|&q| is_prime_power(q)) {
            let Ok(g) = GroupSpec::linear(n, q) else {
                continue;
            };
            let order = order_simple(&g).map_err(|e| e.to_string())?;
            for m in 1..n {
                let stab = order_psl_subspace_stab(n, q, m).map_err(|e| e.to_string())?;
                let count = gaussian_binomial(n, m, q).map_err(|e| e.to_string())?;
                ensure(stab.mul(&count) == order, || format!("n={n} q={q} m={m}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n,q,m) triples"))
}

fn sporadic_coprimality() -> Outcome {
    let parse = |s: &str| structure_order(s).map_err(|e| format!("{s}: {e}"));
    let h23 = parse(M23_ODD)?;
    let hb = parse(BABY_MONSTER_ODD)?;
    ensure(h23.to_u64() == Some(253), || format!("|23:11| = {h23}"))?;
    ensure(hb.to_u64() == Some(1081), || format!("|47:23| = {hb}"))?;
    let m23: Vec<FactoredInt> = M23_PARTNERS.iter().map(|s| parse(s)).collect::<Result<_, _>>()?;
    let orders: Vec<u64> = m23.iter().map(|o| o.to_u64().unwrap()).collect();
    ensure(orders == [40320, 40320, 20160, 5760], || format!("M23 orders {orders:?}"))?;
    for o in &m23 {
        ensure(o.is_coprime(&h23), || format!("M23 partner {o}"))?;
    }
    let b: Vec<FactoredInt> = BABY_MONSTER_PARTNERS
        .iter()
        .map(|s| parse(s))
        .collect::<Result<_, _>>()?;
    ensure(b.len() == 27, || format!("{} B partners", b.len()))?;
    for (s, o) in BABY_MONSTER_PARTNERS.iter().zip(&b) {
        ensure(o.is_coprime(&hb), || format!("B partner {s}: {o}"))?;
    }
    Ok("4 M23 and 27 B partners coprime; |47:23| = 1081".into())
}

fn congruence_witnesses() -> Outcome {
    let cases: [(u64, &[Clause]); 9] = [
        (11, &[Clause::Psl2Dihedral]),
        (23, &[Clause::Psl2Dihedral, Clause::Psl2S4]),
        (107, &[Clause::Psl2Dihedral, Clause::Psl2A4]),
        (59, &[Clause::Psl2Dihedral, Clause::Psl2A5]),
        (7, &[]),
        (9, &[]),
        (13, &[]),
        (17, &[]),
        (25, &[]),
    ];
    for (q, expected) in cases {
        let got = classify_psl2(q).map_err(|e| e.to_string())?.clauses();
        ensure(got == expected, || format!("q={q}: {got:?}, expected {expected:?}"))?;
    }
    Ok("q = 11, 23, 107, 59 and negatives 7, 9, 13, 17, 25".into())
}

fn unitary_witnesses() -> Outcome {
    let v = classify_psu(3, 11).map_err(|e| e.to_string())?;
    ensure(
        small_pairs(&v) == [(111, 53240)] && v.clauses() == [Clause::Unitary3],
        || format!("PSU(3,11): {:?}", small_pairs(&v)),
    )?;

    let v = classify_psu(7, 2).map_err(|e| e.to_string())?;
    let mut kinds: Vec<SubgroupKind> = v.pairs.iter().map(|p| p.m.kind).collect();
    kinds.sort();
    let expected = [
        SubgroupKind::Nondegenerate(2),
        SubgroupKind::Nondegenerate(3),
        SubgroupKind::TotallySingular(1),
        SubgroupKind::TotallySingular(2),
    ];
    ensure(kinds == expected, || format!("PSU(7,2): {kinds:?}"))?;

    let v = classify_psu(5, 2).map_err(|e| e.to_string())?;
    ensure(v.status == Status::Negative && v.pairs.is_empty(), || {
        format!("PSU(5,2): {:?}", v.status)
    })?;

    let v = classify_psu(19, 2).map_err(|e| e.to_string())?;
    ensure(
        v.pairs.iter().any(|p| {
            p.clause == Clause::UnitarySingularD && p.m.kind == SubgroupKind::TotallySingular(6)
        }),
        || "PSU(19,2): no (8d) m=6 pair".into(),
    )?;
    ensure(v.status == Status::CompleteForAschbacherClasses, || {
        format!("PSU(19,2): {:?}", v.status)
    })?;
    Ok("PSU(3,11), PSU(7,2), PSU(5,2), PSU(19,2)".into())
}

fn negative_sweep() -> Outcome {
    let mut groups: Vec<GroupSpec> = (5..=50).map(GroupSpec::Alternating).collect();
    for kind in ExceptionalKind::ALL {
        for q in [2, 3, 4, 5] {
            groups.extend(GroupSpec::exceptional(kind, q).ok());
        }
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        for dim in [4, 6, 8, 10, 12] {
            groups.extend(format!("PSp({dim},{q})").parse::<GroupSpec>().ok());
        }
        for dim in [5, 7, 9, 11] {
            groups.extend(format!("POmega(o,{dim},{q})").parse::<GroupSpec>().ok());
        }
        for dim in [4, 6, 8, 10, 12] {
            for sign in ["+", "-"] {
                groups.extend(format!("POmega({sign},{dim},{q})").parse::<GroupSpec>().ok());
            }
        }
    }
    let sporadics: Vec<GroupSpec> = Sporadic::all()
        .filter(|s| !matches!(s, Sporadic::M23 | Sporadic::B))
        .map(GroupSpec::Sporadic)
        .collect();
    ensure(sporadics.len() == 24, || format!("{} sporadics", sporadics.len()))?;
    groups.extend(sporadics);
    for g in &groups {
        let v = classify(g).map_err(|e| format!("{g}: {e}"))?;
        ensure(v.status == Status::Negative && v.pairs.is_empty(), || {
            format!("{g}: {:?} with {} pairs", v.status, v.pairs.len())
        })?;
    }
    Ok(format!("{} groups Negative", groups.len()))
}

fn universal_pair_property() -> Outcome {
    let mut verdicts = Vec::new();
    for q in (2..=200).filter(|&q| is_prime_power(q)) {
        verdicts.extend(classify_psl2(q).ok());
        for n in [3, 5, 7, 11, 13, 17, 19, 23] {
            verdicts.extend(classify_psl(n, q).ok());
            verdicts.extend(classify_psu(n, q).ok());
        }
    }
    for s in Sporadic::all() {
        verdicts.push(classify_sporadic(s).map_err(|e| e.to_string())?);
    }
    let mut pairs = 0;
    for v in &verdicts {
        for p in &v.pairs {
            ensure(p.h.order.is_odd(), || format!("{}: |H| = {} even", v.group, p.h.order))?;
            ensure(p.h.order.gcd(&p.m.order).is_one(), || {
                format!("{}: gcd(|{}|, |{}|) != 1", v.group, p.h.structure, p.m.structure)
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs over {} groups", verdicts.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("oracle agreement", oracle_agreement),
        ("gcd lemma exhaustive", gcd_lemma),
        ("stabilizer-order identity", stabilizer_identity),
        ("sporadic coprimality", sporadic_coprimality),
        ("congruence-clause witnesses", congruence_witnesses),
        ("unitary witnesses", unitary_witnesses),
        ("negative-family sweep", negative_sweep),
        ("universal pair property", universal_pair_property),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use maxpair_core::arith::is_prime_power;
use maxpair_core::classifier::{
    classify, classify_psl, classify_psl2, classify_psu, classify_sporadic,
    odd_maximal_candidates, Clause, ClassifierVerdict, Status,
};
use maxpair_core::groups::{
    order_simple, ExceptionalKind, GroupSpec, OrthogonalKind, Sporadic, SubgroupKind,
};
use proptest::prelude::*;

const ODD_PRIMES: [u32; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn prime_powers(max: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(|&q| is_prime_power(q))
}

fn check_pairs(v: &ClassifierVerdict) {
    let g = order_simple(&v.group).unwrap();
    for p in &v.pairs {
        assert!(p.h.order.is_odd(), "{}: |H| even", v.group);
        assert!(p.h.order.is_coprime(&p.m.order), "{}: {}", v.group, p.m.structure);
        assert!(p.h.order.divides(&g));
        assert!(p.m.order.divides(&g));
    }
    assert_eq!(v.status == Status::Negative, v.pairs.is_empty() && v.status != Status::CompleteForAschbacherClasses);
}

#[test]
fn psl2_witnesses() {
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
    for (q, clauses) in cases {
        assert_eq!(classify_psl2(q).unwrap().clauses(), clauses, "q = {q}");
    }
    let v = classify_psl2(59).unwrap();
    let orders: Vec<_> = v
        .order_pairs()
        .iter()
        .map(|(h, m)| (h.to_u64().unwrap(), m.to_u64().unwrap()))
        .collect();
    assert_eq!(orders, vec![(1711, 60), (1711, 60)]);
}

#[test]
fn psl_witnesses() {
    let v = classify_psl(13, 2).unwrap();
    assert_eq!(v.pairs.len(), 10);
    assert_eq!(v.status, Status::CompleteForAschbacherClasses);
    assert_eq!(classify_psl(5, 25).unwrap().status, Status::Negative);
    for q in prime_powers(30) {
        assert!(classify_psl(3, q).unwrap().pairs.is_empty());
    }
}

#[test]
fn psu_witnesses() {
    let v = classify_psu(3, 11).unwrap();
    let orders: Vec<_> = v
        .order_pairs()
        .iter()
        .map(|(h, m)| (h.to_u64().unwrap(), m.to_u64().unwrap()))
        .collect();
    assert_eq!(orders, vec![(111, 53240)]);
    assert_eq!(v.clauses(), vec![Clause::Unitary3]);

    let v = classify_psu(5, 2).unwrap();
    assert_eq!(v.status, Status::Negative);

    let v = classify_psu(19, 2).unwrap();
    assert_eq!(v.status, Status::CompleteForAschbacherClasses);
    let ts: Vec<_> = v
        .pairs
        .iter()
        .map(|p| (p.clause, p.m.kind))
        .collect();
    assert_eq!(
        ts,
        vec![
            (Clause::UnitarySingularD, SubgroupKind::TotallySingular(6)),
            (Clause::UnitarySingularC, SubgroupKind::TotallySingular(7)),
            (Clause::UnitarySingularC, SubgroupKind::TotallySingular(8)),
        ]
    );
}

#[test]
fn coprime_stabilizers_outside_clauses_are_noted() {
    let v = classify_psu(11, 3).unwrap();
    assert!(v.notes.iter().any(|n| n.contains("TotallySingular(4)")));
}

#[test]
fn negative_families() {
    for n in 5..=50 {
        let v = classify(&GroupSpec::Alternating(n)).unwrap();
        assert_eq!(v.status, Status::Negative, "A{n}");
    }
    for kind in ExceptionalKind::ALL {
        for q in [2, 3, 4, 5] {
            if let Ok(g) = GroupSpec::exceptional(kind, q) {
                assert_eq!(classify(&g).unwrap().status, Status::Negative, "{g}");
            }
        }
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for dim in [4, 6, 8, 10] {
            if let Ok(g) = format!("PSp({dim},{q})").parse::<GroupSpec>() {
                assert_eq!(classify(&g).unwrap().status, Status::Negative, "{g}");
            }
        }
        for (kind, dims) in [
            (OrthogonalKind::Odd, [7, 9, 11]),
            (OrthogonalKind::Plus, [8, 10, 12]),
            (OrthogonalKind::Minus, [8, 10, 12]),
        ] {
            for dim in dims {
                let sign = match kind {
                    OrthogonalKind::Odd => "o,",
                    OrthogonalKind::Plus => "+,",
                    OrthogonalKind::Minus => "-,",
                };
                if let Ok(g) = format!("POmega({sign}{dim},{q})").parse::<GroupSpec>() {
                    assert_eq!(classify(&g).unwrap().status, Status::Negative, "{g}");
                }
            }
        }
    }
    for s in Sporadic::all() {
        let v = classify_sporadic(s).unwrap();
        let expected = matches!(s, Sporadic::M23 | Sporadic::B);
        assert_eq!(!v.pairs.is_empty(), expected, "{}", s.name());
    }
}

#[test]
fn universal_pair_property_on_grid() {
    let mut emitted = 0usize;
    for q in prime_powers(200) {
        if let Ok(v) = classify_psl2(q) {
            check_pairs(&v);
            emitted += v.pairs.len();
        }
        for n in ODD_PRIMES {
            for v in [classify_psl(n, q), classify_psu(n, q)].into_iter().flatten() {
                check_pairs(&v);
                emitted += v.pairs.len();
            }
        }
    }
    for s in Sporadic::all() {
        check_pairs(&classify_sporadic(s).unwrap());
    }
    assert!(emitted > 1000);
}

#[test]
fn candidates_are_odd_and_divide() {
    for q in prime_powers(64) {
        for n in [2, 3, 5, 7] {
            for g in [GroupSpec::linear(n, q), GroupSpec::unitary(n, q)].into_iter().flatten() {
                let ord = order_simple(&g).unwrap();
                for c in odd_maximal_candidates(&g).unwrap() {
                    assert!(c.order.is_odd());
                    assert!(c.order.divides(&ord), "{g}: {}", c.structure);
                }
            }
        }
    }
}

#[test]
fn verdict_json_is_stable() {
    let g: GroupSpec = "PSU(7,2)".parse().unwrap();
    let a = serde_json::to_string(&classify(&g).unwrap()).unwrap();
    let b = serde_json::to_string(&classify(&g).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(a.contains("\"clause\":\"(iii)(6b)\""));
    assert!(a.contains("\"status\":\"complete\""));
}

proptest! {
    #[test]
    fn classify_is_deterministic(n in prop::sample::select(ODD_PRIMES.to_vec()), q in 2u64..120) {
        prop_assume!(is_prime_power(q));
        for g in [GroupSpec::linear(n, q), GroupSpec::unitary(n, q)].into_iter().flatten() {
            let a = classify(&g).unwrap();
            prop_assert_eq!(&a, &classify(&g).unwrap());
            check_pairs(&a);
        }
    }

    #[test]
    fn s4_clause_implies_dihedral(k in 0u64..400) {
        let q = 23 + 24 * k;
        prop_assume!(maxpair_core::arith::primes::is_prime_u64(q));
        let v = classify_psl2(q).unwrap();
        prop_assert!(v.pairs.len() >= 2);
        prop_assert!(v.clauses().contains(&Clause::Psl2Dihedral));
    }
}

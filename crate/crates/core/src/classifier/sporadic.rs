use super::candidates::sporadic_rows;
use super::{Clause, ClassifierError, ClassifierVerdict, Condition, CoprimePairReport};
use crate::atlas::structure_order;
use crate::atlas::tables::{BABY_MONSTER_PARTNERS, M23_PARTNERS};
use crate::groups::{GroupSpec, MaxSubgroupDescriptor, Sporadic, SubgroupKind};

/// Pairs in a sporadic group. Only `M23` and the Baby Monster have any.
pub fn classify_sporadic(s: Sporadic) -> Result<ClassifierVerdict, ClassifierError> {
    let g = GroupSpec::Sporadic(s);
    let (clause, partners): (Clause, &[&str]) = match s {
        Sporadic::M23 => (Clause::M23, &M23_PARTNERS),
        Sporadic::B => (Clause::BabyMonster, &BABY_MONSTER_PARTNERS),
        Sporadic::Th => {
            return Ok(ClassifierVerdict::negative(
                g,
                "31:15 shares 3 or 5 with every other maximal subgroup",
            ))
        }
        Sporadic::M => {
            return Ok(ClassifierVerdict::negative(
                g,
                "59:29 and 71:35 are not maximal",
            ))
        }
        _ => {
            return Ok(ClassifierVerdict::negative(
                g,
                "no maximal subgroup of odd order",
            ))
        }
    };
    let h = sporadic_rows(s)?.remove(0);
    let pairs = partners
        .iter()
        .map(|&text| {
            let m = MaxSubgroupDescriptor::new(
                SubgroupKind::SporadicTable,
                text,
                structure_order(text)?,
            );
            CoprimePairReport::new(clause, h.clone(), m, vec![Condition::new("|H|", &h.order)])
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassifierVerdict::finish(g, pairs, Vec::new(), false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::Status;

    #[test]
    fn m23_and_b() {
        let v = classify_sporadic(Sporadic::M23).unwrap();
        assert_eq!(v.pairs.len(), 4);
        assert_eq!(v.pairs[0].h.order.to_u64(), Some(253));
        let v = classify_sporadic(Sporadic::B).unwrap();
        assert_eq!(v.pairs.len(), 27);
        assert_eq!(v.pairs[0].h.order.to_u64(), Some(1081));
        assert_eq!(v.status, Status::Complete);
    }

    #[test]
    fn others_negative() {
        for s in Sporadic::all() {
            if !matches!(s, Sporadic::M23 | Sporadic::B) {
                assert_eq!(classify_sporadic(s).unwrap().status, Status::Negative);
            }
        }
    }
}

//! Decides which finite simple groups have two maximal subgroups of coprime
//! orders, and lists the pairs.
//!
//! One member of a coprime pair must have odd order, so the search starts
//! from the known odd-order maximal subgroups ([`odd_maximal_candidates`])
//! and checks the partner families family by family.

mod candidates;
mod linear;
mod sporadic;
mod unitary;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::FactoredInt;
use crate::atlas::AtlasError;
use crate::groups::{GroupError, GroupSpec, MaxSubgroupDescriptor};

pub use candidates::odd_maximal_candidates;
pub use linear::{classify_psl, classify_psl2};
pub use sporadic::classify_sporadic;
pub use unitary::classify_psu;

/// Which case of the classification justifies a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `M23` with `H = 23:11`.
    M23,
    /// The Baby Monster with `H = 47:23`.
    BabyMonster,
    /// `PSL(2,q)`, `7 < q = 3 (mod 4)`, dihedral partner.
    Psl2Dihedral,
    /// `PSL(2,q)`, q prime, `q = 23 (mod 24)`, partner `S4`.
    Psl2S4,
    /// `PSL(2,q)`, q prime, `q = 83, 107 (mod 120)`, partner `A4`.
    Psl2A4,
    /// `PSL(2,q)`, q prime, `q = 59 (mod 60)`, partner `A5`.
    Psl2A5,
    /// `PSL(n,q)`, `ord_n(q) = n - 1`, subspace stabilizers `2 <= m <= n - 2`.
    LinearParabolic,
    /// `PSU(n,q)`, `n = 1 (mod 4)`, `ord_n(q) = n - 1`, non-degenerate m.
    UnitaryNondegA,
    /// `PSU(n,q)`, `n = 3 (mod 4)`, `ord_n(q) = (n - 1)/2`, non-degenerate m.
    UnitaryNondegB,
    /// `PSU(3,q)`, `q != 5`, `(q + 1)_3 = 3`.
    Unitary3,
    /// `n = 1 (mod 4)`, `ord_n(q) = n - 1`, totally singular `m < n/3`.
    UnitarySingularA,
    /// `n = 3 (mod 4)`, `ord_n(q) = (n - 1)/2`, totally singular `m < n/3`.
    UnitarySingularB,
    /// `ord_n(q) = n - 1`, totally singular `n/3 < m < (n - 1)/2`.
    UnitarySingularC,
    /// `n = 3 (mod 4)`, `ord_n(q) = n - 1`, totally singular `(n + 1)/4 < m < n/3`.
    UnitarySingularD,
}

impl Clause {
    pub const ALL: [Clause; 14] = [
        Clause::M23,
        Clause::BabyMonster,
        Clause::Psl2Dihedral,
        Clause::Psl2S4,
        Clause::Psl2A4,
        Clause::Psl2A5,
        Clause::LinearParabolic,
        Clause::UnitaryNondegA,
        Clause::UnitaryNondegB,
        Clause::Unitary3,
        Clause::UnitarySingularA,
        Clause::UnitarySingularB,
        Clause::UnitarySingularC,
        Clause::UnitarySingularD,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Clause::M23 => "(i)(1)",
            Clause::BabyMonster => "(i)(2)",
            Clause::Psl2Dihedral => "(iii)(1)",
            Clause::Psl2S4 => "(iii)(2)",
            Clause::Psl2A4 => "(iii)(3)",
            Clause::Psl2A5 => "(iii)(4)",
            Clause::LinearParabolic => "(iii)(5)",
            Clause::UnitaryNondegA => "(iii)(6a)",
            Clause::UnitaryNondegB => "(iii)(6b)",
            Clause::Unitary3 => "(iii)(7)",
            Clause::UnitarySingularA => "(iii)(8a)",
            Clause::UnitarySingularB => "(iii)(8b)",
            Clause::UnitarySingularC => "(iii)(8c)",
            Clause::UnitarySingularD => "(iii)(8d)",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.label() == s)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// A named arithmetic fact checked while emitting a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub value: String,
}

impl Condition {
    pub fn new(name: impl Into<String>, value: impl fmt::Display) -> Self {
        Self {
            name: name.into(),
            value: value.to_string(),
        }
    }
}

/// One coprime pair `(H, M)` with `|H|` odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoprimePairReport {
    pub clause: Clause,
    pub h: MaxSubgroupDescriptor,
    pub m: MaxSubgroupDescriptor,
    pub conditions: Vec<Condition>,
}

impl CoprimePairReport {
    /// Checks `gcd(|H|, |M|) = 1` and `|H|` odd before building the report.
    pub fn new(
        clause: Clause,
        h: MaxSubgroupDescriptor,
        m: MaxSubgroupDescriptor,
        mut conditions: Vec<Condition>,
    ) -> Result<Self, ClassifierError> {
        if !h.order.is_odd() {
            return Err(ClassifierError::Invariant(format!(
                "{clause}: |H| = {} is even",
                h.order
            )));
        }
        let g = h.order.gcd(&m.order);
        if !g.is_one() {
            return Err(ClassifierError::Invariant(format!(
                "{clause}: gcd(|{}|, |{}|) = {g}",
                h.structure, m.structure
            )));
        }
        conditions.push(Condition::new("gcd(|H|, |M|)", 1));
        Ok(Self {
            clause,
            h,
            m,
            conditions,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// No two maximal subgroups have coprime orders.
    Negative,
    /// The listed pairs are all of them.
    Complete,
    /// Complete when `M` lies in a geometric (Aschbacher) class; pairs with
    /// an almost simple `M` are not determined.
    CompleteForAschbacherClasses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierVerdict {
    pub group: GroupSpec,
    pub status: Status,
    pub pairs: Vec<CoprimePairReport>,
    pub notes: Vec<String>,
}

impl ClassifierVerdict {
    pub(crate) fn negative(group: GroupSpec, note: impl Into<String>) -> Self {
        Self {
            group,
            status: Status::Negative,
            pairs: Vec::new(),
            notes: vec![note.into()],
        }
    }

    /// Status from the pair list; `caveat` marks the undetermined almost
    /// simple case.
    pub(crate) fn finish(
        group: GroupSpec,
        pairs: Vec<CoprimePairReport>,
        mut notes: Vec<String>,
        caveat: bool,
    ) -> Self {
        let status = if caveat {
            notes.push(
                "pairs with an almost simple maximal subgroup M are not determined".to_string(),
            );
            Status::CompleteForAschbacherClasses
        } else if pairs.is_empty() {
            Status::Negative
        } else {
            Status::Complete
        };
        Self {
            group,
            status,
            pairs,
            notes,
        }
    }

    /// The unordered multiset of `(|H|, |M|)` pairs, sorted.
    pub fn order_pairs(&self) -> Vec<(FactoredInt, FactoredInt)> {
        let mut v: Vec<_> = self
            .pairs
            .iter()
            .map(|p| (p.h.order.clone(), p.m.order.clone()))
            .collect();
        v.sort_by(|a, b| (a.0.value(), a.1.value()).cmp(&(b.0.value(), b.1.value())));
        v
    }

    pub fn clauses(&self) -> Vec<Clause> {
        let mut v: Vec<_> = self.pairs.iter().map(|p| p.clause).collect();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifierError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("structure table entry failed to parse: {0}")]
    Table(#[from] AtlasError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Classifies any simple group.
pub fn classify(g: &GroupSpec) -> Result<ClassifierVerdict, ClassifierError> {
    g.validate()?;
    let mut verdict = match *g {
        GroupSpec::Alternating(_) => ClassifierVerdict::negative(
            *g,
            "alternating group: every maximal subgroup shares a prime with each odd-order candidate",
        ),
        GroupSpec::Exceptional { .. } => ClassifierVerdict::negative(
            *g,
            "exceptional group of Lie type: no maximal subgroup of odd order",
        ),
        GroupSpec::Symplectic { .. } | GroupSpec::Orthogonal { .. } => ClassifierVerdict::negative(
            *g,
            "symplectic or orthogonal group: no maximal subgroup of odd order",
        ),
        GroupSpec::Sporadic(s) => classify_sporadic(s)?,
        GroupSpec::Linear { n: 2, q } => classify_psl2(q.value())?,
        GroupSpec::Linear { n, q } if is_odd_prime(n) => classify_psl(n, q.value())?,
        GroupSpec::Unitary { n, q } if is_odd_prime(n) => classify_psu(n, q.value())?,
        GroupSpec::Linear { .. } | GroupSpec::Unitary { .. } => ClassifierVerdict::negative(
            *g,
            "n is not prime: no maximal subgroup of odd order",
        ),
    };
    let aliases = g.aliases();
    if !aliases.is_empty() {
        verdict.notes.push(format!(
            "isomorphic to {}; classified as {g}",
            aliases.join(", ")
        ));
    }
    Ok(verdict)
}

pub(crate) fn is_odd_prime(n: u32) -> bool {
    n >= 3 && crate::arith::primes::is_prime_u64(n as u64)
}

pub(crate) fn caveat_applies(n: u32) -> bool {
    n >= 13
}

pub(crate) fn subscript(m: u32) -> String {
    if m < 10 {
        m.to_string()
    } else {
        format!("{{{m}}}")
    }
}

/// Notes for stabilizers coprime to `h` that no emitted pair covers.
pub(crate) fn audit_stabilizers(
    h: &MaxSubgroupDescriptor,
    stabs: &[MaxSubgroupDescriptor],
    pairs: &[CoprimePairReport],
) -> Vec<String> {
    stabs
        .iter()
        .filter(|s| h.order.is_coprime(&s.order))
        .filter(|s| !pairs.iter().any(|p| p.m.kind == s.kind))
        .map(|s| {
            format!(
                "{} ({:?}) is coprime to {} but not covered by any clause",
                s.structure, s.kind, h.structure
            )
        })
        .collect()
}

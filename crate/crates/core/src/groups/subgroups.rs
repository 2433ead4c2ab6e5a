use num_integer::Integer;
use serde::Serialize;

use super::orders::{div_small, gaussian_binomial, order_simple, q_to, qk, qk_unitary, small};
use super::spec::GroupSpec;
use super::GroupError;
use crate::arith::primes::is_prime_u64;
use crate::arith::{FactoredInt, PrimePower, Sign};

/// What geometric or tabulated family a maximal subgroup comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "m", rename_all = "snake_case")]
pub enum SubgroupKind {
    /// Stabilizer of an m-subspace of the natural module.
    Parabolic(u32),
    /// Stabilizer of a non-degenerate m-subspace (unitary groups).
    Nondegenerate(u32),
    /// Stabilizer of a totally singular m-subspace (unitary groups).
    TotallySingular(u32),
    TorusNormalizer,
    /// Normalizer of a non-split torus in `PSL(2,q)`.
    Dihedral,
    S4,
    A4,
    A5,
    /// Affine group `p:(p-1)/2` inside `A_p`.
    Frobenius,
    SporadicTable,
    AlmostSimpleUndetermined,
}

/// A maximal subgroup candidate: structure text, exact order and origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxSubgroupDescriptor {
    #[serde(flatten)]
    pub kind: SubgroupKind,
    pub structure: String,
    /// Alternative notation for the same subgroup, when the literature uses one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_as: Option<String>,
    pub order: FactoredInt,
    /// False for tabulated subgroups known not to be maximal.
    pub maximal: bool,
}

impl MaxSubgroupDescriptor {
    pub fn new(kind: SubgroupKind, structure: impl Into<String>, order: FactoredInt) -> Self {
        Self {
            kind,
            structure: structure.into(),
            printed_as: None,
            order,
            maximal: true,
        }
    }

    pub fn printed_as(mut self, alt: impl Into<String>) -> Self {
        self.printed_as = Some(alt.into());
        self
    }

    pub fn not_maximal(mut self) -> Self {
        self.maximal = false;
        self
    }
}

fn check_m(m: u32, lo: u32, hi: u32) -> Result<(), GroupError> {
    if m < lo || m > hi {
        return Err(GroupError::InvalidParameter(format!(
            "m = {m} outside {lo}..={hi}"
        )));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<(), GroupError> {
    if n < 3 || !is_prime_u64(n as u64) {
        return Err(GroupError::InvalidParameter(format!("n = {n} is not an odd prime")));
    }
    Ok(())
}

fn q_param(q: u64) -> Result<PrimePower, GroupError> {
    PrimePower::from_value(q)
        .map_err(|_| GroupError::InvalidParameter(format!("q = {q} is not a prime power")))
}

fn product(it: impl IntoIterator<Item = FactoredInt>) -> FactoredInt {
    it.into_iter().fold(FactoredInt::one(), |acc, x| acc.mul(&x))
}

/// Order of `((q^n - e)/((q - e)(q - e, n))).n`, the normalizer of a
/// Singer-type torus in `PSL(n,q)` (`linear`, e = 1) or `PSU(n,q)` (e = -1).
pub fn order_torus_normalizer(n: u32, q: u64, linear: bool) -> Result<FactoredInt, GroupError> {
    check_n(n)?;
    let q = q_param(q)?;
    let sign = if linear { Sign::Minus } else { Sign::Plus };
    let qv = q.value() as u128;
    let q_minus_e = if linear { qv - 1 } else { qv + 1 };
    let d = (n as u128).gcd(&q_minus_e) as u64;
    let torus = qk(q, n, sign)
        .checked_div(&qk(q, 1, sign))
        .expect("q - e divides q^n - e for odd n");
    let out = div_small(torus, d).mul(&small(n as u64));
    assert!(out.is_odd(), "torus normalizer of odd prime degree has odd order");
    Ok(out)
}

/// Order `q(q-1)/2` of the Borel subgroup `E_q:((q-1)/2)` of `PSL(2,q)`, q odd.
pub fn order_psl2_parabolic(q: u64) -> Result<FactoredInt, GroupError> {
    let pp = q_param(q)?;
    if pp.p() == 2 || q < 5 {
        return Err(GroupError::InvalidParameter(format!(
            "q = {q}: need an odd prime power >= 5"
        )));
    }
    Ok(q_to(pp, 1).mul(&div_small(qk(pp, 1, Sign::Minus), 2)))
}

/// Order of the stabilizer in `PSL(n,q)` of an m-subspace.
///
/// `q^{n(n-1)/2} (q-1)/(q-1,n) prod_{i=2}^{m} (q^i-1) prod_{i=2}^{n-m} (q^i-1)`.
pub fn order_psl_subspace_stab(n: u32, q: u64, m: u32) -> Result<FactoredInt, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParameter(format!("n = {n} below 2")));
    }
    check_m(m, 1, n - 1)?;
    let pp = q_param(q)?;
    let d = (n as u64).gcd(&(q - 1));
    let out = div_small(q_to(pp, n * (n - 1) / 2).mul(&qk(pp, 1, Sign::Minus)), d)
        .mul(&product((2..=m).map(|i| qk(pp, i, Sign::Minus))))
        .mul(&product((2..=n - m).map(|i| qk(pp, i, Sign::Minus))));
    if let Ok(g) = GroupSpec::linear(n, q) {
        debug_assert_eq!(
            out.mul(&gaussian_binomial(n, m, q)?),
            order_simple(&g)?,
            "stabilizer times subspace count must equal |PSL({n},{q})|"
        );
    }
    Ok(out)
}

/// Order of the stabilizer in `PSU(n,q)` of a non-degenerate m-subspace.
pub fn order_psu_nondeg_stab(n: u32, q: u64, m: u32) -> Result<FactoredInt, GroupError> {
    check_n(n)?;
    check_m(m, 1, (n - 1) / 2)?;
    let pp = q_param(q)?;
    let d = (n as u64).gcd(&(q + 1));
    let exp = (m * m + (n - m) * (n - m) - n) / 2;
    Ok(div_small(q_to(pp, exp).mul(&qk(pp, 1, Sign::Plus)), d)
        .mul(&product((2..=m).map(|i| qk_unitary(pp, i))))
        .mul(&product((2..=n - m).map(|i| qk_unitary(pp, i)))))
}

/// Order of the stabilizer in `PSU(n,q)` of a totally singular m-subspace.
pub fn order_psu_totsing_stab(n: u32, q: u64, m: u32) -> Result<FactoredInt, GroupError> {
    check_n(n)?;
    check_m(m, 1, (n - 1) / 2)?;
    let pp = q_param(q)?;
    let d = (n as u64).gcd(&(q + 1));
    Ok(div_small(
        q_to(pp, n * (n - 1) / 2).mul(&qk(pp, 2, Sign::Minus)),
        d,
    )
    .mul(&product((2..=m).map(|i| qk(pp, 2 * i, Sign::Minus))))
    .mul(&product((2..=n - 2 * m).map(|i| qk_unitary(pp, i)))))
}

/// Orders of small named groups used as structure-string leaves.
pub fn small_group_order(name: &str) -> Option<FactoredInt> {
    let v = match name {
        "A4" => 12,
        "S4" => 24,
        "A5" => 60,
        "S5" => 120,
        _ => return None,
    };
    Some(small(v))
}

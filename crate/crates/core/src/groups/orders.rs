use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::spec::{ExceptionalKind, GroupSpec, OrthogonalKind};
use super::GroupError;
use crate::arith::{q_power_factored, FactoredInt, PrimePower, Sign};

/// `q^k - 1` or `q^k + 1`.
pub(crate) fn qk(q: PrimePower, k: u32, sign: Sign) -> FactoredInt {
    q_power_factored(q.value(), k, sign)
}

/// `q^k - (-1)^k`, the unitary twist of `q^k - 1`.
pub(crate) fn qk_unitary(q: PrimePower, k: u32) -> FactoredInt {
    qk(q, k, if k % 2 == 0 { Sign::Minus } else { Sign::Plus })
}

/// `q^k` itself.
pub(crate) fn q_to(q: PrimePower, k: u32) -> FactoredInt {
    FactoredInt::prime_power(&BigUint::from(q.p()), q.e() * k)
}

pub(crate) fn small(v: u64) -> FactoredInt {
    FactoredInt::from_u64(v).expect("positive")
}

pub(crate) fn div_small(x: FactoredInt, d: u64) -> FactoredInt {
    x.checked_div(&small(d)).expect("exact division by a small constant")
}

fn product(it: impl IntoIterator<Item = FactoredInt>) -> FactoredInt {
    it.into_iter().fold(FactoredInt::one(), |acc, x| acc.mul(&x))
}

/// `gcd(4, q^m -/+ 1)` without expanding the power.
fn gcd4(q: u64, m: u32, sign: Sign) -> u64 {
    let r = (0..m).fold(1u64, |acc, _| acc * (q % 4) % 4);
    let r = match sign {
        Sign::Minus => (r + 3) % 4,
        Sign::Plus => (r + 1) % 4,
    };
    r.gcd(&4)
}

/// `n!` as a factored integer (Legendre's formula).
pub fn factorial(n: u32) -> FactoredInt {
    let mut out = FactoredInt::one();
    for p in crate::arith::primes::sieve(n + 1) {
        let mut e = 0;
        let mut pk = p as u64;
        while pk <= n as u64 {
            e += (n as u64 / pk) as u32;
            pk *= p as u64;
        }
        out = out.mul(&small(p as u64).pow(e));
    }
    out
}

pub fn order_symmetric(n: u32) -> FactoredInt {
    factorial(n)
}

pub fn order_alternating(n: u32) -> FactoredInt {
    if n < 2 {
        FactoredInt::one()
    } else {
        div_small(factorial(n), 2)
    }
}

/// Order of the simple group named by `g`. Errors on non-simple parameters.
pub fn order_simple(g: &GroupSpec) -> Result<FactoredInt, GroupError> {
    g.validate()?;
    Ok(formula_order(g))
}

/// The standard order formula evaluated at `g`, without a simplicity check.
///
/// For non-simple points this is the order of the group the formula
/// describes, e.g. 35942400 for the full group `2F4(2)`.
pub fn formula_order(g: &GroupSpec) -> FactoredInt {
    match *g {
        GroupSpec::Alternating(n) => order_alternating(n),
        GroupSpec::Sporadic(s) => s.order(),
        GroupSpec::Linear { n, q } => {
            let body = product((2..=n).map(|i| qk(q, i, Sign::Minus)));
            let d = (n as u64).gcd(&(q.value() - 1));
            div_small(q_to(q, n * (n - 1) / 2).mul(&body), d)
        }
        GroupSpec::Unitary { n, q } => {
            let body = product((2..=n).map(|i| qk_unitary(q, i)));
            let d = (n as u64).gcd(&(q.value() + 1));
            div_small(q_to(q, n * (n - 1) / 2).mul(&body), d)
        }
        GroupSpec::Symplectic { dim, q } => {
            let m = dim / 2;
            let body = product((1..=m).map(|i| qk(q, 2 * i, Sign::Minus)));
            let d = 2u64.gcd(&(q.value() - 1));
            div_small(q_to(q, m * m).mul(&body), d)
        }
        GroupSpec::Orthogonal { kind, dim, q } => match kind {
            OrthogonalKind::Odd => {
                let m = (dim - 1) / 2;
                let body = product((1..=m).map(|i| qk(q, 2 * i, Sign::Minus)));
                let d = 2u64.gcd(&(q.value() - 1));
                div_small(q_to(q, m * m).mul(&body), d)
            }
            OrthogonalKind::Plus | OrthogonalKind::Minus => {
                let m = dim / 2;
                let sign = if kind == OrthogonalKind::Plus {
                    Sign::Minus
                } else {
                    Sign::Plus
                };
                let body = product((1..m).map(|i| qk(q, 2 * i, Sign::Minus)));
                let top = qk(q, m, sign);
                let d = gcd4(q.value(), m, sign);
                div_small(q_to(q, m * (m - 1)).mul(&top).mul(&body), d)
            }
        },
        GroupSpec::Exceptional { kind, q } => exceptional_order(kind, q),
    }
}

fn exceptional_order(kind: ExceptionalKind, q: PrimePower) -> FactoredInt {
    let m = |ks: &[u32]| product(ks.iter().map(|&k| qk(q, k, Sign::Minus)));
    let qv = q.value();
    match kind {
        ExceptionalKind::G2 => q_to(q, 6).mul(&m(&[6, 2])),
        ExceptionalKind::F4 => q_to(q, 24).mul(&m(&[12, 8, 6, 2])),
        ExceptionalKind::E6 => div_small(
            q_to(q, 36).mul(&m(&[12, 9, 8, 6, 5, 2])),
            3u64.gcd(&(qv - 1)),
        ),
        ExceptionalKind::TwistedE6 => {
            let plus = qk(q, 9, Sign::Plus).mul(&qk(q, 5, Sign::Plus));
            div_small(
                q_to(q, 36).mul(&m(&[12, 8, 6, 2])).mul(&plus),
                3u64.gcd(&(qv + 1)),
            )
        }
        ExceptionalKind::E7 => div_small(
            q_to(q, 63).mul(&m(&[18, 14, 12, 10, 8, 6, 2])),
            2u64.gcd(&(qv - 1)),
        ),
        ExceptionalKind::E8 => q_to(q, 120).mul(&m(&[30, 24, 20, 18, 14, 12, 8, 2])),
        ExceptionalKind::TrialityD4 => {
            // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1).
            let phi = qk(q, 12, Sign::Minus)
                .checked_div(&qk(q, 4, Sign::Minus))
                .expect("q^4 - 1 divides q^12 - 1");
            q_to(q, 12).mul(&phi).mul(&m(&[6, 2]))
        }
        ExceptionalKind::Suzuki => q_to(q, 2)
            .mul(&qk(q, 2, Sign::Plus))
            .mul(&qk(q, 1, Sign::Minus)),
        ExceptionalKind::Ree => q_to(q, 3)
            .mul(&qk(q, 3, Sign::Plus))
            .mul(&qk(q, 1, Sign::Minus)),
        ExceptionalKind::TwistedF4 => q_to(q, 12)
            .mul(&qk(q, 6, Sign::Plus))
            .mul(&qk(q, 4, Sign::Minus))
            .mul(&qk(q, 3, Sign::Plus))
            .mul(&qk(q, 1, Sign::Minus)),
    }
}

/// The q-binomial coefficient as a plain integer, by the q-Pascal rule
/// `[n, m] = [n-1, m-1] + q^m [n-1, m]`.
pub fn gaussian_binomial_value(n: u32, m: u32, q: u64) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); (i as usize + 1).min(m as usize + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let j32 = j as u32;
            let left = if j > 0 { row[j - 1].clone() } else { BigUint::zero() };
            let up = if j < row.len() && j32 < i {
                Pow::pow(&q, j32) * &row[j]
            } else {
                BigUint::zero()
            };
            *slot = left + up;
        }
        row = next;
    }
    row[m as usize].clone()
}

/// Number of `m`-dimensional subspaces of `F_q^n`, factored.
pub fn gaussian_binomial(n: u32, m: u32, q: u64) -> Result<FactoredInt, GroupError> {
    if m > n {
        return Err(GroupError::InvalidParameter(format!("m = {m} exceeds n = {n}")));
    }
    if q < 2 {
        return Err(GroupError::InvalidParameter(format!("q = {q} is below 2")));
    }
    let num = product((n - m + 1..=n).map(|i| q_power_factored(q, i, Sign::Minus)));
    let den = product((1..=m).map(|i| q_power_factored(q, i, Sign::Minus)));
    let out = num.checked_div(&den).expect("q-binomial coefficients are integers");
    debug_assert_eq!(out.value(), gaussian_binomial_value(n, m, q));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> BigUint {
        order_simple(&s.parse().unwrap()).unwrap().value()
    }

    #[test]
    fn classical_orders() {
        assert_eq!(order("PSL(2,11)"), 660u32.into());
        assert_eq!(order("PSL(2,4)"), 60u32.into());
        assert_eq!(order("PSL(5,2)"), 9_999_360u32.into());
        assert_eq!(order("PSL(3,4)"), 20160u32.into());
        assert_eq!(order("PSU(5,2)"), 13_685_760u32.into());
        assert_eq!(order("PSU(3,3)"), 6048u32.into());
        assert_eq!(order("PSU(4,2)"), 25920u32.into());
        assert_eq!(order("PSp(4,3)"), 25920u32.into());
        assert_eq!(order("PSp(8,2)"), 47_377_612_800u64.into());
        assert_eq!(order("POmega(o,7,3)"), 4_585_351_680u64.into());
        assert_eq!(order("POmega(+,8,2)"), 174_182_400u64.into());
        assert_eq!(order("POmega(+,8,3)"), 4_952_179_814_400u64.into());
        assert_eq!(order("POmega(-,8,2)"), 197_406_720u64.into());
        assert_eq!(order("POmega(+,6,2)"), 20160u32.into());
        assert_eq!(order("POmega(-,6,2)"), 25920u32.into());
        assert_eq!(order("A8"), 20160u32.into());
    }

    #[test]
    fn exceptional_orders() {
        assert_eq!(order("G2(3)"), 4_245_696u32.into());
        assert_eq!(order("2B2(8)"), 29120u32.into());
        assert_eq!(order("2G2(27)"), 10_073_444_472u64.into());
        assert_eq!(order("3D4(2)"), 211_341_312u64.into());
        assert_eq!(order("F4(2)"), "3311126603366400".parse::<BigUint>().unwrap());
        assert_eq!(order("2E6(2)"), "76532479683774853939200".parse::<BigUint>().unwrap());
        let full_2f4_2 = formula_order(&GroupSpec::Exceptional {
            kind: ExceptionalKind::TwistedF4,
            q: PrimePower::new(2, 1).unwrap(),
        });
        assert_eq!(full_2f4_2.to_u64(), Some(35_942_400));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(5, 2, 2).unwrap().to_u64(), Some(155));
        assert_eq!(gaussian_binomial(5, 2, 3).unwrap().to_u64(), Some(1210));
        assert_eq!(gaussian_binomial(7, 0, 5).unwrap().to_u64(), Some(1));
        assert_eq!(gaussian_binomial_value(4, 2, 2), 35u32.into());
        assert!(gaussian_binomial(2, 3, 2).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(10).to_u64(), Some(3_628_800));
        assert_eq!(order_alternating(5).to_u64(), Some(60));
        assert_eq!(factorial(0).to_u64(), Some(1));
    }
}

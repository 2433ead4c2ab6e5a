use num_bigint::BigUint;
use num_integer::Integer;

use super::primes::{factor_u64, is_prime_u64, pow_mod};
use super::{cyclotomic, ArithError, FactoredInt, Sign};

/// A prime power `p^e` with `e >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    p: u64,
    e: u32,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self, ArithError> {
        if !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        if e == 0 {
            return Err(ArithError::NotPrimePower(1));
        }
        p.checked_pow(e).ok_or(ArithError::Overflow)?;
        Ok(Self { p, e })
    }

    /// Recognizes `q` as `p^e`.
    pub fn from_value(q: u64) -> Result<Self, ArithError> {
        if q < 2 {
            return Err(ArithError::NotPrimePower(q));
        }
        let mut list = Vec::new();
        factor_u64(q, &mut list);
        let p = list[0];
        if list.iter().any(|&x| x != p) {
            return Err(ArithError::NotPrimePower(q));
        }
        Ok(Self {
            p,
            e: list.len() as u32,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn value(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn factored(&self) -> FactoredInt {
        FactoredInt::prime_power(&BigUint::from(self.p), self.e)
    }
}

pub fn is_prime_power(q: u64) -> bool {
    PrimePower::from_value(q).is_ok()
}

/// The `p`-part of `k`: the largest power of `p` dividing `k`.
pub fn p_part(k: u64, p: u64) -> Result<u64, ArithError> {
    if !is_prime_u64(p) {
        return Err(ArithError::NotPrime(p));
    }
    if k == 0 {
        return Err(ArithError::Zero);
    }
    let mut k = k;
    let mut part = 1;
    while k % p == 0 {
        k /= p;
        part *= p;
    }
    Ok(part)
}

/// `p_part` as a [`PrimePower`]; `None` when `p` does not divide `k`.
pub fn p_part_power(k: u64, p: u64) -> Result<Option<PrimePower>, ArithError> {
    let part = p_part(k, p)?;
    if part == 1 {
        Ok(None)
    } else {
        PrimePower::from_value(part).map(Some)
    }
}

/// Exponent of the 2-part, `v_2(k)`.
fn two_adic(k: u32) -> u32 {
    k.trailing_zeros()
}

/// Carmichael's function for a factored modulus.
fn carmichael(n: u64) -> u64 {
    let mut list = Vec::new();
    factor_u64(n, &mut list);
    list.sort_unstable();
    let mut lambda = 1u64;
    let mut i = 0;
    while i < list.len() {
        let p = list[i];
        let mut e = 0;
        while i < list.len() && list[i] == p {
            e += 1;
            i += 1;
        }
        let part = if p == 2 {
            match e {
                1 => 1,
                2 => 2,
                _ => 1 << (e - 2),
            }
        } else {
            (p - 1) * p.pow(e - 1)
        };
        lambda = lambda.lcm(&part);
    }
    lambda
}

/// Multiplicative order of `a` modulo `n`: the least `k >= 1` with
/// `a^k = 1 (mod n)`.
///
/// Starts from the exponent of the unit group and strips prime factors while
/// the power stays 1.
pub fn mult_order(a: i64, n: u64) -> Result<u64, ArithError> {
    if n < 2 {
        return Err(ArithError::ModulusTooSmall(n));
    }
    let a = (a as i128).rem_euclid(n as i128) as u64;
    mult_order_u64(a, n)
}

/// Multiplicative order for an unsigned base.
pub fn mult_order_u64(a: u64, n: u64) -> Result<u64, ArithError> {
    if n < 2 {
        return Err(ArithError::ModulusTooSmall(n));
    }
    let a = a % n;
    if a.gcd(&n) != 1 {
        return Err(ArithError::NotCoprime { a, n });
    }
    let mut order = carmichael(n);
    let mut primes = Vec::new();
    factor_u64(order, &mut primes);
    primes.dedup();
    for p in primes {
        while order % p == 0 && pow_mod(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// `gcd(q^k -/+ 1, q^m -/+ 1)` without expanding either power.
///
/// With `g = gcd(k, m)` and `v_2` the 2-adic valuation:
/// * both minus: `q^g - 1`;
/// * both plus: `q^g + 1` if `v_2(k) = v_2(m)`, otherwise `gcd(2, q + 1)`;
/// * `q^k - 1` against `q^m + 1`: `q^g + 1` if `v_2(k) > v_2(m)`, otherwise
///   `gcd(2, q + 1)`.
pub fn gcd_q_powers(q: u64, k: u32, sign_k: Sign, m: u32, sign_m: Sign) -> FactoredInt {
    assert!(q >= 2 && k >= 1 && m >= 1, "need q >= 2 and k, m >= 1");
    let g = k.gcd(&m);
    let two_or_one = || {
        if q % 2 == 1 {
            FactoredInt::word(2)
        } else {
            FactoredInt::one()
        }
    };
    match (sign_k, sign_m) {
        (Sign::Minus, Sign::Minus) => cyclotomic::q_power_factored(q, g, Sign::Minus),
        (Sign::Plus, Sign::Plus) => {
            if two_adic(k) == two_adic(m) {
                cyclotomic::q_power_factored(q, g, Sign::Plus)
            } else {
                two_or_one()
            }
        }
        (Sign::Minus, Sign::Plus) => {
            if two_adic(k) > two_adic(m) {
                cyclotomic::q_power_factored(q, g, Sign::Plus)
            } else {
                two_or_one()
            }
        }
        (Sign::Plus, Sign::Minus) => gcd_q_powers(q, m, Sign::Minus, k, Sign::Plus),
    }
}

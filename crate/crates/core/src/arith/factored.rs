use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::primes::{self, BIG_RHO_BUDGET};
use super::ArithError;

/// Longest decimal base accepted by [`FactoredInt::from_str`].
const MAX_PARSED_BASE_DIGITS: usize = 120;
const MAX_PARSED_EXPONENT: u32 = 4096;

/// An exact positive integer held as a product of prime powers.
///
/// Keys of `primes` pass the primality test. When Pollard rho exhausts its
/// budget on a multi-word cofactor, that cofactor is kept whole in
/// `cofactors`. Every key in either map is pairwise coprime with every other
/// key, so gcd, divisibility and multiplication stay exact; they refine to a
/// common coprime base whenever cofactors are involved. Cofactors are always
/// at least 2^64 since word-sized inputs are split completely.
#[derive(Clone, Debug, Default)]
pub struct FactoredInt {
    primes: BTreeMap<BigUint, u32>,
    cofactors: BTreeMap<BigUint, u32>,
}

impl FactoredInt {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factorizes a machine word.
    pub fn from_u64(v: u64) -> Result<Self, ArithError> {
        if v == 0 {
            return Err(ArithError::Zero);
        }
        let mut list = Vec::new();
        primes::factor_u64(v, &mut list);
        let mut out = Self::one();
        for p in list {
            *out.primes.entry(BigUint::from(p)).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Infallible variant for callers that already know `v > 0`.
    pub(crate) fn word(v: u64) -> Self {
        Self::from_u64(v).expect("nonzero word")
    }

    pub fn factorize(v: &BigUint) -> Result<Self, ArithError> {
        Self::factorize_with_hints(v, &Self::one())
    }

    /// Factorizes `v`, first dividing out every base of `hints`.
    ///
    /// Hints only speed things up; the result always expands to `v`.
    pub fn factorize_with_hints(v: &BigUint, hints: &FactoredInt) -> Result<Self, ArithError> {
        if v.is_zero() {
            return Err(ArithError::Zero);
        }
        if let Some(w) = v.to_u64() {
            return Self::from_u64(w);
        }
        let mut out = Self::one();
        let mut rest = v.clone();
        for base in hints.primes.keys().chain(hints.cofactors.keys()) {
            let e = strip(&mut rest, base);
            if e > 0 {
                if hints.primes.contains_key(base) {
                    *out.primes.entry(base.clone()).or_insert(0) += e;
                } else {
                    *out.cofactors.entry(base.clone()).or_insert(0) += e;
                }
            }
        }
        trial_divide(&mut rest, &mut out.primes);
        let mut stack = vec![(rest, 1u32)];
        while let Some((n, e)) = stack.pop() {
            if n.is_one() {
                continue;
            }
            if let Some(w) = n.to_u64() {
                let mut list = Vec::new();
                primes::factor_u64(w, &mut list);
                for p in list {
                    *out.primes.entry(BigUint::from(p)).or_insert(0) += e;
                }
            } else if primes::is_prime(&n) {
                *out.primes.entry(n).or_insert(0) += e;
            } else if let Some(d) = primes::rho_big(&n, BIG_RHO_BUDGET) {
                let other = &n / &d;
                stack.push((d, e));
                stack.push((other, e));
            } else {
                *out.cofactors.entry(n).or_insert(0) += e;
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Rebuilds a factored integer from stored parts, re-checking primality
    /// of every claimed prime.
    pub fn from_parts(
        primes_in: impl IntoIterator<Item = (BigUint, u32)>,
        cofactors_in: impl IntoIterator<Item = (BigUint, u32)>,
    ) -> Result<Self, ArithError> {
        let mut out = Self::one();
        for (p, e) in primes_in {
            if e == 0 {
                continue;
            }
            if !primes::is_prime(&p) {
                return Err(ArithError::NotPrimeBig(p.to_string()));
            }
            *out.primes.entry(p).or_insert(0) += e;
        }
        for (c, e) in cofactors_in {
            if e == 0 {
                continue;
            }
            if c.is_zero() {
                return Err(ArithError::Zero);
            }
            if c.is_one() {
                continue;
            }
            if c.to_u64().is_some() || primes::is_prime(&c) {
                out = out.mul(&Self::factorize(&c)?.pow(e));
            } else {
                *out.cofactors.entry(c).or_insert(0) += e;
            }
        }
        out.normalize();
        Ok(out)
    }

    pub fn prime_power(p: &BigUint, e: u32) -> Self {
        let mut out = Self::one();
        if e > 0 {
            out.primes.insert(p.clone(), e);
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.primes.is_empty() && self.cofactors.is_empty()
    }

    /// True when no unsplit cofactor remains.
    pub fn is_fully_factored(&self) -> bool {
        self.cofactors.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.primes.iter().map(|(p, &e)| (p, e))
    }

    pub fn cofactors(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.cofactors.iter().map(|(c, &e)| (c, e))
    }

    /// Exponent of the prime `p` in this integer.
    pub fn valuation(&self, p: u64) -> u32 {
        let p = BigUint::from(p);
        let mut v = self.primes.get(&p).copied().unwrap_or(0);
        for (c, &e) in &self.cofactors {
            let mut c = c.clone();
            v += strip(&mut c, &p) * e;
        }
        v
    }

    pub fn is_odd(&self) -> bool {
        self.valuation(2) == 0
    }

    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (b, &e) in self.primes.iter().chain(self.cofactors.iter()) {
            acc *= num_traits::pow(b.clone(), e as usize);
        }
        acc
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value().to_u64()
    }

    /// Exponent-wise sum.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, &e) in &other.primes {
            *out.primes.entry(p.clone()).or_insert(0) += e;
        }
        for (c, &e) in &other.cofactors {
            *out.cofactors.entry(c.clone()).or_insert(0) += e;
        }
        if !out.cofactors.is_empty() {
            out.normalize();
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = self.clone();
        if k == 0 {
            return Self::one();
        }
        for e in out.primes.values_mut().chain(out.cofactors.values_mut()) {
            *e *= k;
        }
        out
    }

    /// Exponent-wise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.cofactors.is_empty() && other.cofactors.is_empty() {
            let mut out = Self::one();
            for (p, &e) in &self.primes {
                if let Some(&f) = other.primes.get(p) {
                    out.primes.insert(p.clone(), e.min(f));
                }
            }
            return out;
        }
        let (base, a, b) = common_base(self, other);
        let mut out = Self::one();
        for ((beta, ea), eb) in base.iter().zip(a).zip(b) {
            let e = ea.min(eb);
            if e > 0 {
                out.insert_base(beta, e);
            }
        }
        out
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }

    /// Exponent-wise `<=`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.cofactors.is_empty() && other.cofactors.is_empty() {
            return self
                .primes
                .iter()
                .all(|(p, &e)| other.primes.get(p).is_some_and(|&f| e <= f));
        }
        let (_, a, b) = common_base(self, other);
        a.iter().zip(&b).all(|(ea, eb)| ea <= eb)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        if self.cofactors.is_empty() && other.cofactors.is_empty() {
            let mut out = self.clone();
            for (p, &e) in &other.primes {
                let slot = out.primes.get_mut(p).expect("divisor prime present");
                *slot -= e;
                if *slot == 0 {
                    out.primes.remove(p);
                }
            }
            return Some(out);
        }
        let (base, a, b) = common_base(self, other);
        let mut out = Self::one();
        for ((beta, ea), eb) in base.iter().zip(a).zip(b) {
            if ea > eb {
                out.insert_base(beta, ea - eb);
            }
        }
        Some(out)
    }

    fn insert_base(&mut self, base: &BigUint, e: u32) {
        if primes::is_prime(base) {
            *self.primes.entry(base.clone()).or_insert(0) += e;
        } else {
            *self.cofactors.entry(base.clone()).or_insert(0) += e;
        }
    }

    /// Restores the coprime-base invariant after cofactors were merged in.
    fn normalize(&mut self) {
        if self.cofactors.is_empty() {
            return;
        }
        let mut entries: Vec<(BigUint, u32)> = std::mem::take(&mut self.cofactors)
            .into_iter()
            .collect();
        for (c, e) in entries.iter_mut() {
            for (p, pe) in self.primes.iter_mut() {
                let k = strip(c, p);
                *pe += k * *e;
            }
        }
        refine(&mut entries);
        for (b, e) in entries {
            if b.is_one() {
                continue;
            }
            if let Some(w) = b.to_u64() {
                let mut list = Vec::new();
                primes::factor_u64(w, &mut list);
                for p in list {
                    *self.primes.entry(BigUint::from(p)).or_insert(0) += e;
                }
            } else if primes::is_prime(&b) {
                *self.primes.entry(b).or_insert(0) += e;
            } else {
                *self.cofactors.entry(b).or_insert(0) += e;
            }
        }
    }
}

/// Divides `n` by `base` as often as possible and returns the count.
fn strip(n: &mut BigUint, base: &BigUint) -> u32 {
    if base.is_one() || n.is_zero() {
        return 0;
    }
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(base);
        if !r.is_zero() {
            return k;
        }
        *n = q;
        k += 1;
    }
}

fn trial_divide(n: &mut BigUint, out: &mut BTreeMap<BigUint, u32>) {
    let small = primes::small_primes();
    let mut i = 0;
    while i < small.len() {
        if let Some(w) = n.to_u64() {
            if (small[i] as u64).pow(2) > w {
                return;
            }
        }
        // Batch the remainder computation over primes whose product fits a word.
        let mut modulus = 1u64;
        let start = i;
        while i < small.len() {
            match modulus.checked_mul(small[i] as u64) {
                Some(m) => {
                    modulus = m;
                    i += 1;
                }
                None => break,
            }
        }
        let r = (&*n % modulus).to_u64().expect("remainder fits");
        for &p in &small[start..i] {
            if r % p as u64 == 0 {
                let k = strip(n, &BigUint::from(p));
                *out.entry(BigUint::from(p)).or_insert(0) += k;
            }
        }
        if n.is_one() {
            return;
        }
    }
}

/// Splits a list of bases until they are pairwise coprime.
fn refine(entries: &mut Vec<(BigUint, u32)>) {
    loop {
        let mut split = None;
        'scan: for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if entries[i].0 == entries[j].0 {
                    split = Some((i, j, entries[i].0.clone()));
                    break 'scan;
                }
                let g = entries[i].0.gcd(&entries[j].0);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'scan;
                }
            }
        }
        let Some((i, j, g)) = split else { return };
        let (b, eb) = entries.swap_remove(j);
        let (a, ea) = entries.swap_remove(i);
        entries.push((g.clone(), ea + eb));
        for (x, e) in [(a / &g, ea), (b / &g, eb)] {
            if !x.is_one() {
                entries.push((x, e));
            }
        }
    }
}

/// Expresses both integers over one pairwise-coprime base.
fn common_base(a: &FactoredInt, b: &FactoredInt) -> (Vec<BigUint>, Vec<u32>, Vec<u32>) {
    let mut entries: Vec<(BigUint, u32)> = a
        .primes
        .keys()
        .chain(a.cofactors.keys())
        .chain(b.primes.keys())
        .chain(b.cofactors.keys())
        .map(|k| (k.clone(), 1))
        .collect();
    entries.sort();
    entries.dedup();
    refine(&mut entries);
    let base: Vec<BigUint> = entries.into_iter().map(|(k, _)| k).collect();
    let express = |x: &FactoredInt| {
        let mut exps = vec![0u32; base.len()];
        for (k, &e) in x.primes.iter().chain(x.cofactors.iter()) {
            let mut rest = k.clone();
            for (slot, beta) in exps.iter_mut().zip(&base) {
                *slot += strip(&mut rest, beta) * e;
            }
            debug_assert!(rest.is_one());
        }
        exps
    };
    let ea = express(a);
    let eb = express(b);
    (base, ea, eb)
}

impl PartialEq for FactoredInt {
    fn eq(&self, other: &Self) -> bool {
        if self.cofactors.is_empty() && other.cofactors.is_empty() {
            self.primes == other.primes
        } else {
            self.value() == other.value()
        }
    }
}

impl Eq for FactoredInt {}

impl fmt::Display for FactoredInt {
    /// Renders as `2^10 * 3^2 * 7`; unsplit cofactors appear in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut terms: Vec<(&BigUint, u32, bool)> = self
            .primes
            .iter()
            .map(|(b, &e)| (b, e, true))
            .chain(self.cofactors.iter().map(|(b, &e)| (b, e, false)))
            .collect();
        terms.sort();
        for (i, (b, e, prime)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if prime {
                write!(f, "{b}")?;
            } else {
                write!(f, "({b})")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactoredInt {
    type Err = ArithError;

    /// Parses a product of powers such as `2^10 * 3^2 * 7`. Bases need not be
    /// prime; each is factorized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ArithError::Parse("empty input".into()));
        }
        let mut out = Self::one();
        for term in s.split('*') {
            let term = term.trim();
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| ArithError::Parse(format!("bad exponent in `{term}`")))?;
                    (b.trim(), e)
                }
                None => (term, 1),
            };
            if exp > MAX_PARSED_EXPONENT {
                return Err(ArithError::Parse(format!(
                    "exponent above {MAX_PARSED_EXPONENT}"
                )));
            }
            let base = base
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .unwrap_or(base)
                .trim();
            if base.is_empty() || !base.bytes().all(|c| c.is_ascii_digit()) {
                return Err(ArithError::Parse(format!("bad base in `{term}`")));
            }
            if base.len() > MAX_PARSED_BASE_DIGITS {
                return Err(ArithError::Parse(format!(
                    "base longer than {MAX_PARSED_BASE_DIGITS} digits"
                )));
            }
            let b: BigUint = base.parse().expect("digits");
            let f = Self::factorize(&b)?;
            out = out.mul(&f.pow(exp));
        }
        Ok(out)
    }
}

impl Serialize for FactoredInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FactoredInt", 2)?;
        st.serialize_field("decimal", &self.value().to_string())?;
        st.serialize_field("factored", &self.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(v: u64) -> FactoredInt {
        FactoredInt::from_u64(v).unwrap()
    }

    fn map(pairs: &[(u64, u32)]) -> FactoredInt {
        FactoredInt::from_parts(pairs.iter().map(|&(p, e)| (BigUint::from(p), e)), []).unwrap()
    }

    #[test]
    fn factorize_examples() {
        assert!(fi(1).is_one());
        assert_eq!(fi(660), map(&[(2, 2), (3, 1), (5, 1), (11, 1)]));
        assert_eq!(fi(253), map(&[(11, 1), (23, 1)]));
        assert_eq!(fi(1).to_string(), "1");
        assert_eq!(fi(64512).to_string(), "2^10 * 3^2 * 7");
        assert_eq!(FactoredInt::from_u64(0), Err(ArithError::Zero));
    }

    #[test]
    fn gcd_mul_divides_examples() {
        let a = map(&[(11, 1), (23, 1)]);
        let b = map(&[(2, 10), (3, 2), (7, 1)]);
        assert!(a.gcd(&b).is_one());
        assert_eq!(a.gcd(&a), a);
        assert_eq!(map(&[(2, 1)]).mul(&map(&[(2, 1), (3, 1)])), map(&[(2, 2), (3, 1)]));
        assert!(fi(12).divides(&fi(660)));
        assert!(!fi(8).divides(&fi(660)));
        assert_eq!(fi(660).checked_div(&fi(12)), Some(fi(55)));
        assert_eq!(fi(660).checked_div(&fi(8)), None);
    }

    #[test]
    fn parse_and_render() {
        let x: FactoredInt = "2^10 * 3^2 * 7".parse().unwrap();
        assert_eq!(x, fi(64512));
        let y: FactoredInt = "6^2 * 10".parse().unwrap();
        assert_eq!(y, fi(360));
        assert!("2^".parse::<FactoredInt>().is_err());
        assert!("0".parse::<FactoredInt>().is_err());
        assert!("x".parse::<FactoredInt>().is_err());
        assert!("".parse::<FactoredInt>().is_err());
    }

    /// Two 30-digit primes: rho with the default budget cannot split their
    /// product, so it stays a cofactor.
    fn hard_pair() -> (BigUint, BigUint) {
        let p: BigUint = "600000000000000000000000012373".parse().unwrap();
        let q: BigUint = "200000000000000000000000098939".parse().unwrap();
        assert!(primes::is_prime(&p) && primes::is_prime(&q));
        (p, q)
    }

    #[test]
    fn cofactors_keep_arithmetic_exact() {
        let (p, q) = hard_pair();
        let n = &p * &q;
        let x = FactoredInt::factorize(&(&n * 12u32)).unwrap();
        assert!(!x.is_fully_factored());
        assert_eq!(x.value(), &n * 12u32);
        assert_eq!(x.valuation(2), 2);
        // A known prime factor of the cofactor splits it under gcd.
        let with_p = FactoredInt::prime_power(&p, 1).mul(&fi(5));
        let g = x.gcd(&with_p);
        assert_eq!(g.value(), p.clone());
        assert!(g.is_fully_factored());
        assert!(with_p.divides(&FactoredInt::factorize(&(&n * 5u32)).unwrap()));
        let prod = x.mul(&with_p);
        assert_eq!(prod.value(), &n * &p * 60u32);
        assert!(prod.is_fully_factored());
        let q_alone = prod
            .checked_div(&FactoredInt::prime_power(&p, 2).mul(&fi(60)))
            .unwrap();
        assert_eq!(q_alone.value(), q);
        // Coprime to anything built from other primes.
        assert!(x.gcd(&fi(35)).is_one());
        assert!(x.to_string().contains('('));
        let reparsed: FactoredInt = x.to_string().parse().unwrap();
        assert_eq!(reparsed, x);
    }

    #[test]
    fn hints_split_cofactors() {
        let (p, q) = hard_pair();
        let n = &p * &q * &q;
        let hint = FactoredInt::prime_power(&q, 1);
        let x = FactoredInt::factorize_with_hints(&n, &hint).unwrap();
        assert!(x.is_fully_factored());
        assert_eq!(x.primes().count(), 2);
        assert_eq!(x.value(), n);
    }

    #[test]
    fn from_parts_rejects_fake_primes() {
        assert!(FactoredInt::from_parts([(BigUint::from(15u32), 1)], []).is_err());
        let x = FactoredInt::from_parts([], [(BigUint::from(15u32), 2)]).unwrap();
        assert_eq!(x, fi(225));
    }

    #[test]
    fn serializes_both_forms() {
        let v = serde_json::to_value(fi(1081)).unwrap();
        assert_eq!(v["decimal"], "1081");
        assert_eq!(v["factored"], "23 * 47");
    }
}

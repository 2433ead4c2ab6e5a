//! Factorizations of `q^k - 1` and `q^k + 1`, assembled from cached
//! factorizations of cyclotomic values `Phi_d(q)`.
//!
//! `q^k - 1 = prod_{d | k} Phi_d(q)` and `q^k + 1 = prod_{d | 2k, d does not
//! divide k} Phi_d(q)`. Each `Phi_d(q)` is far smaller than `q^k - 1`, and
//! distinct `Phi_d(q)` share only primes dividing `d`, so factoring the
//! pieces separately is both faster and more likely to finish.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use super::{FactoredInt, Sign};

type Cache = RwLock<HashMap<(u64, u32), FactoredInt>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The integer `Phi_d(q)`, via `prod_{e | d} (q^e - 1)^{mu(d/e)}`.
pub fn cyclotomic_value(q: u64, d: u32) -> BigUint {
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for e in divisors(d) {
        let term = Pow::pow(&q, e) - 1u32;
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// Factorization of `Phi_d(q)`, computed once per `(q, d)` and shared
/// across threads.
pub fn cyclotomic_factored(q: u64, d: u32) -> FactoredInt {
    if let Some(hit) = cache().read().expect("cache lock").get(&(q, d)) {
        return hit.clone();
    }
    let f = FactoredInt::factorize(&cyclotomic_value(q, d)).expect("Phi_d(q) > 0 for q >= 2");
    cache()
        .write()
        .expect("cache lock")
        .entry((q, d))
        .or_insert(f)
        .clone()
}

/// Factorization of `q^k - 1` (sign `Minus`) or `q^k + 1` (sign `Plus`).
pub fn q_power_factored(q: u64, k: u32, sign: Sign) -> FactoredInt {
    assert!(q >= 2 && k >= 1, "q^k -/+ 1 needs q >= 2, k >= 1");
    let ds: Vec<u32> = match sign {
        Sign::Minus => divisors(k),
        Sign::Plus => divisors(2 * k).into_iter().filter(|d| k % d != 0).collect(),
    };
    ds.into_iter()
        .fold(FactoredInt::one(), |acc, d| acc.mul(&cyclotomic_factored(q, d)))
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    q: u64,
    d: u32,
    primes: Vec<(String, u32)>,
    cofactors: Vec<(String, u32)>,
}

/// Serializes the current cache as JSON lines sorted by `(q, d)`.
pub fn export_cache() -> String {
    let guard = cache().read().expect("cache lock");
    let mut keys: Vec<_> = guard.keys().copied().collect();
    keys.sort_unstable();
    let mut out = String::new();
    for (q, d) in keys {
        let f = &guard[&(q, d)];
        let entry = CacheEntry {
            q,
            d,
            primes: f.primes().map(|(p, e)| (p.to_string(), e)).collect(),
            cofactors: f.cofactors().map(|(c, e)| (c.to_string(), e)).collect(),
        };
        out.push_str(&serde_json::to_string(&entry).expect("plain data"));
        out.push('\n');
    }
    out
}

/// Errors raised while decoding a cache file.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CacheError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: stored factors of Phi_{d}({q}) do not multiply to its value")]
    Mismatch { line: usize, q: u64, d: u32 },
}

/// Parses cache lines produced by [`export_cache`], verifying every entry.
///
/// Primes are re-tested and each product is checked against `Phi_d(q)`, so a
/// corrupted file can never inject a wrong factorization.
pub fn decode_cache(text: &str) -> Result<Vec<((u64, u32), FactoredInt)>, CacheError> {
    const MAX_Q: u64 = 1 << 20;
    const MAX_D: u32 = 512;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| CacheError::Malformed {
            line: line_no,
            reason,
        };
        let entry: CacheEntry = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        if entry.q < 2 || entry.q > MAX_Q || entry.d == 0 || entry.d > MAX_D {
            return Err(bad(format!("(q, d) = ({}, {}) out of range", entry.q, entry.d)));
        }
        let parse = |v: &[(String, u32)]| -> Result<Vec<(BigUint, u32)>, CacheError> {
            v.iter()
                .map(|(s, e)| {
                    if s.is_empty() || s.len() > 400 || !s.bytes().all(|c| c.is_ascii_digit()) {
                        return Err(bad(format!("bad integer `{s}`")));
                    }
                    Ok((s.parse().expect("digits"), *e))
                })
                .collect()
        };
        let f = FactoredInt::from_parts(parse(&entry.primes)?, parse(&entry.cofactors)?)
            .map_err(|e| bad(e.to_string()))?;
        if f.value() != cyclotomic_value(entry.q, entry.d) {
            return Err(CacheError::Mismatch {
                line: line_no,
                q: entry.q,
                d: entry.d,
            });
        }
        out.push(((entry.q, entry.d), f));
    }
    Ok(out)
}

/// Loads verified entries into the in-memory cache.
pub fn import_cache(text: &str) -> Result<usize, CacheError> {
    let entries = decode_cache(text)?;
    let n = entries.len();
    let mut guard = cache().write().expect("cache lock");
    for (k, f) in entries {
        guard.entry(k).or_insert(f);
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_cyclotomic_values() {
        assert_eq!(cyclotomic_value(2, 1), BigUint::from(1u32));
        assert_eq!(cyclotomic_value(2, 5), BigUint::from(31u32));
        assert_eq!(cyclotomic_value(2, 6), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(3, 4), BigUint::from(10u32));
        assert_eq!(cyclotomic_value(10, 12), BigUint::from(9901u32));
    }

    #[test]
    fn q_powers_expand_correctly() {
        for q in 2..12u64 {
            for k in 1..12u32 {
                let minus = q_power_factored(q, k, Sign::Minus).value();
                let plus = q_power_factored(q, k, Sign::Plus).value();
                let qk = q.pow(k) as u128;
                assert_eq!(minus.to_u128().unwrap(), qk - 1);
                assert_eq!(plus.to_u128().unwrap(), qk + 1);
            }
        }
    }

    #[test]
    fn cache_round_trip_and_tamper_detection() {
        let f = cyclotomic_factored(7, 9);
        let text = export_cache();
        let decoded = decode_cache(&text).unwrap();
        assert!(decoded.iter().any(|(k, v)| *k == (7, 9) && *v == f));
        let forged = r#"{"q":7,"d":9,"primes":[["19",1]],"cofactors":[]}"#;
        assert!(matches!(decode_cache(forged), Err(CacheError::Mismatch { .. })));
        let good = r#"{"q":2,"d":4,"primes":[["5",1]],"cofactors":[]}"#;
        assert_eq!(decode_cache(good).unwrap().len(), 1);
        let not_prime = r#"{"q":2,"d":6,"primes":[["9",1]],"cofactors":[]}"#;
        assert!(decode_cache(not_prime).is_err());
        assert!(decode_cache("{").is_err());
    }
}

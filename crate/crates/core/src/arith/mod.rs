//! Exact integer arithmetic for group orders.

mod cyclotomic;
mod factored;
mod number_theory;
pub mod primes;

pub use cyclotomic::{
    cyclotomic_factored, cyclotomic_value, decode_cache, export_cache, import_cache,
    q_power_factored, CacheError,
};
pub use factored::FactoredInt;
pub use number_theory::{
    gcd_q_powers, is_prime_power, mult_order, mult_order_u64, p_part, p_part_power, PrimePower,
};

/// Sign in `q^k - 1` or `q^k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `Plus` for odd exponents under the unitary twist `q -> -q`.
    pub fn unitary(i: u32) -> Self {
        if i % 2 == 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("zero has no factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not prime")]
    NotPrimeBig(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{a} is not a unit modulo {n}")]
    NotCoprime { a: u64, n: u64 },
    #[error("modulus {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

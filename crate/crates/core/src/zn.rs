//! Arithmetic in the cyclic group Z_n and the small number-theoretic
//! helpers the constructions rely on.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// An element of Z_n, always stored in reduced form `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicElement {
    /// Reduced residue.
    pub value: u64,
    /// The group order n (at least 1).
    pub modulus: u64,
}

impl CyclicElement {
    /// Reduces an arbitrary signed integer into Z_n.
    ///
    /// # Panics
    /// Panics when `modulus == 0`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        CyclicElement {
            value: reduce(value, modulus),
            modulus,
        }
    }

    /// Order of the element in the additive group Z_n.
    pub fn order(self) -> u64 {
        zn_order(self.value as i64, self.modulus)
    }
}

impl std::ops::Neg for CyclicElement {
    type Output = Self;

    /// Additive inverse.
    fn neg(self) -> Self {
        CyclicElement::new(-(self.value as i64), self.modulus)
    }
}

impl std::fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Reduces `x` into `0..n`.
pub fn reduce(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Order of `x` in Z_n, i.e. `n / gcd(x, n)`; the order of 0 is 1.
pub fn zn_order(x: i64, n: u64) -> u64 {
    let r = reduce(x, n);
    n / gcd(r, n)
}

/// Smallest prime divisor of `n >= 2` by trial division.
pub fn smallest_prime_divisor(n: u64) -> Result<u64> {
    if n < 2 {
        return domain(format!("smallest prime divisor needs n >= 2, got {n}"));
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Ok(d);
        }
        d += 1;
    }
    Ok(n)
}

/// Whether `n` is prime.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_divisor(n) == Ok(n)
}

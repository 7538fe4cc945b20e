//! The characteristic shared by every object in a computation.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest accepted prime. Keeps `p^2` and products of residues inside `u64`/`u128`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} exceeds the supported prime bound {MAX_PRIME}")]
    TooLarge(u64),
}

/// A validated prime `p`.
///
/// Construction also expands the Witt addition carry
/// `(X^p + Y^p - (X+Y)^p) / p` once, so Witt arithmetic never recomputes
/// binomial coefficients.
#[derive(Clone)]
pub struct Prime {
    p: u64,
    /// `carry[k]` is the coefficient of `X^k Y^(p-k)` in the carry polynomial,
    /// reduced mod `p`, for `k` in `0..=p` (the endpoints are zero).
    carry: Arc<[u64]>,
}

impl Prime {
    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if p > MAX_PRIME {
            return Err(PrimeError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(PrimeError::NotPrime(p));
        }
        Ok(Prime {
            p,
            carry: carry_coefficients(p).into(),
        })
    }

    #[inline]
    pub fn get(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn square(&self) -> u64 {
        self.p * self.p
    }

    /// Coefficients of the Witt addition carry, indexed by the exponent of `X`.
    pub fn carry_coefficients(&self) -> &[u64] {
        &self.carry
    }
}

impl PartialEq for Prime {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for Prime {}

impl std::hash::Hash for Prime {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state)
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prime({})", self.p)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `-binom(p, k) / p mod p` for `0 < k < p`, zero at the ends.
fn carry_coefficients(p: u64) -> Vec<u64> {
    let p_usize = p as usize;
    let mut out = vec![0u64; p_usize + 1];
    // binom(p, k) / p = binom(p-1, k-1) / k, computed mod p. Every k in 1..p is a unit.
    let mut binom_prev = 1u64; // binom(p-1, k-1) mod p
    for k in 1..p {
        if k > 1 {
            // binom(p-1, k-1) = binom(p-1, k-2) * (p-k+1) / (k-1)
            binom_prev = mul_mod(binom_prev, (p - k + 1) % p, p);
            binom_prev = mul_mod(binom_prev, inv_mod(k - 1, p), p);
        }
        let value = mul_mod(binom_prev, inv_mod(k, p), p);
        out[k as usize] = (p - value) % p;
    }
    out
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of a unit modulo `m` (extended Euclid). Panics on non-units.
pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert!(old_r == 1, "{a} is not invertible modulo {m}");
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert_eq!(Prime::new(1), Err(PrimeError::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(PrimeError::NotPrime(9)));
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(13).is_ok());
    }

    #[test]
    fn carry_matches_integer_expansion() {
        for p in [2u64, 3, 5, 7] {
            let prime = Prime::new(p).unwrap();
            let mut binom = vec![1i64];
            for _ in 0..p {
                let mut next = vec![1i64; binom.len() + 1];
                for k in 1..binom.len() {
                    next[k] = binom[k - 1] + binom[k];
                }
                binom = next;
            }
            for k in 1..p as usize {
                let expected = (-(binom[k] / p as i64)).rem_euclid(p as i64) as u64;
                assert_eq!(prime.carry_coefficients()[k], expected, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn inverse_and_power() {
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(pow_mod(2, 10, 1000), 24);
    }
}

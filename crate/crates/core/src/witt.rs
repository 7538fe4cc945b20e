//! Length-two Witt vectors over `F_p` and over `F_p[x_1, ..., x_n]`.
//!
//! Addition and multiplication use the universal formulas
//!
//! ```text
//! (a0, a1) + (b0, b1) = (a0 + b0, a1 + b1 + P(a0, b0))
//! (a0, a1) * (b0, b1) = (a0 b0, a0^p b1 + a1 b0^p)
//! ```
//!
//! with `P(X, Y) = (X^p + Y^p - (X + Y)^p) / p`. For scalars the ghost map
//! `(a0, a1) -> a0^p + p a1` is a ring isomorphism onto `Z/p^2`.

use thiserror::Error;

use crate::poly::{MultiPoly, PolyError, Zmod};
use crate::prime::{pow_mod, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WittError {
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("component rings differ")]
    ComponentMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An element of `W_2(F_p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WittScalar {
    prime: Prime,
    a0: u64,
    a1: u64,
}

impl WittScalar {
    pub fn new(prime: Prime, a0: i64, a1: i64) -> Self {
        let p = prime.get() as i64;
        WittScalar {
            a0: a0.rem_euclid(p) as u64,
            a1: a1.rem_euclid(p) as u64,
            prime,
        }
    }

    pub fn zero(prime: Prime) -> Self {
        Self::new(prime, 0, 0)
    }

    pub fn one(prime: Prime) -> Self {
        Self::new(prime, 1, 0)
    }

    pub fn prime(&self) -> &Prime {
        &self.prime
    }

    pub fn components(&self) -> (u64, u64) {
        (self.a0, self.a1)
    }

    /// Teichmueller representative `[c] = (c, 0)`.
    pub fn teichmuller(prime: Prime, c: i64) -> Self {
        Self::new(prime, c, 0)
    }

    /// Verschiebung `V(c) = (0, c)`.
    pub fn verschiebung(prime: Prime, c: i64) -> Self {
        Self::new(prime, 0, c)
    }

    pub fn frobenius(&self) -> Self {
        let p = self.prime.get();
        WittScalar {
            prime: self.prime.clone(),
            a0: pow_mod(self.a0, p, p),
            a1: pow_mod(self.a1, p, p),
        }
    }

    /// `a0^p + p a1` in `Z/p^2`, with `a0` read as its least residue.
    pub fn ghost(&self) -> u64 {
        let p = self.prime.get();
        let m = p * p;
        (pow_mod(self.a0, p, m) + p * self.a1) % m
    }

    /// Inverse of [`WittScalar::ghost`].
    pub fn from_ghost(prime: Prime, n: u64) -> Self {
        let p = prime.get();
        let m = p * p;
        let n = n % m;
        let a0 = n % p;
        let a1 = ((n + m - pow_mod(a0, p, m)) % m) / p;
        WittScalar { prime, a0, a1 }
    }

    fn check(&self, other: &Self) -> Result<(), WittError> {
        if self.prime != other.prime {
            return Err(WittError::PrimeMismatch(
                self.prime.get(),
                other.prime.get(),
            ));
        }
        Ok(())
    }

    fn carry(&self, x: u64, y: u64) -> u64 {
        let p = self.prime.get();
        let coeffs = self.prime.carry_coefficients();
        let mut acc = 0;
        for k in 1..p {
            let term = coeffs[k as usize] * pow_mod(x, k, p) % p * pow_mod(y, p - k, p) % p;
            acc = (acc + term) % p;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Result<Self, WittError> {
        self.check(other)?;
        let p = self.prime.get();
        Ok(WittScalar {
            prime: self.prime.clone(),
            a0: (self.a0 + other.a0) % p,
            a1: (self.a1 + other.a1 + self.carry(self.a0, other.a0)) % p,
        })
    }

    pub fn neg(&self) -> Self {
        let p = self.prime.get();
        let b0 = (p - self.a0) % p;
        // a + b = 0 forces b1 = -a1 - P(a0, -a0)
        let c = self.carry(self.a0, b0);
        WittScalar {
            prime: self.prime.clone(),
            a0: b0,
            a1: (2 * p - self.a1 - c) % p,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WittError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WittError> {
        self.check(other)?;
        let p = self.prime.get();
        let a0p = pow_mod(self.a0, p, p);
        let b0p = pow_mod(other.a0, p, p);
        Ok(WittScalar {
            prime: self.prime.clone(),
            a0: self.a0 * other.a0 % p,
            a1: (a0p * other.a1 + self.a1 * b0p) % p,
        })
    }
}

/// An element of `W_2(F_p[x_1, ..., x_n])`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WittPoly {
    f0: MultiPoly,
    f1: MultiPoly,
}

impl WittPoly {
    /// Both components must be `F_p` polynomials in the same number of variables.
    pub fn new(f0: MultiPoly, f1: MultiPoly) -> Result<Self, WittError> {
        f0.check_compatible(&f1)?;
        if f0.ring().level() != crate::poly::Level::ModP {
            return Err(WittError::ComponentMismatch);
        }
        Ok(WittPoly { f0, f1 })
    }

    pub fn zero(prime: Prime, nvars: usize) -> Self {
        let z = MultiPoly::zero(Zmod::fp(prime), nvars);
        WittPoly {
            f0: z.clone(),
            f1: z,
        }
    }

    pub fn one(prime: Prime, nvars: usize) -> Self {
        let r = Zmod::fp(prime);
        WittPoly {
            f0: MultiPoly::one(r.clone(), nvars),
            f1: MultiPoly::zero(r, nvars),
        }
    }

    pub fn teichmuller(c: MultiPoly) -> Self {
        let z = MultiPoly::zero(c.ring().clone(), c.nvars());
        WittPoly { f0: c, f1: z }
    }

    pub fn verschiebung(c: MultiPoly) -> Self {
        let z = MultiPoly::zero(c.ring().clone(), c.nvars());
        WittPoly { f0: z, f1: c }
    }

    pub fn components(&self) -> (&MultiPoly, &MultiPoly) {
        (&self.f0, &self.f1)
    }

    pub fn into_components(self) -> (MultiPoly, MultiPoly) {
        (self.f0, self.f1)
    }

    pub fn prime(&self) -> &Prime {
        self.f0.prime()
    }

    pub fn nvars(&self) -> usize {
        self.f0.nvars()
    }

    fn check(&self, other: &Self) -> Result<(), WittError> {
        if self.prime() != other.prime() {
            return Err(WittError::PrimeMismatch(
                self.prime().get(),
                other.prime().get(),
            ));
        }
        self.f0.check_compatible(&other.f0)?;
        Ok(())
    }

    fn carry(x: &MultiPoly, y: &MultiPoly) -> MultiPoly {
        let prime = x.prime().clone();
        let p = prime.get() as u32;
        let coeffs = prime.carry_coefficients();
        let mut acc = MultiPoly::zero(x.ring().clone(), x.nvars());
        if x.is_zero() || y.is_zero() {
            return acc;
        }
        for k in 1..p {
            let c = coeffs[k as usize];
            if c == 0 {
                continue;
            }
            acc = &acc + &(x.pow(k) * y.pow(p - k)).scale(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Result<Self, WittError> {
        self.check(other)?;
        Ok(WittPoly {
            f0: &self.f0 + &other.f0,
            f1: &(&self.f1 + &other.f1) + &Self::carry(&self.f0, &other.f0),
        })
    }

    pub fn neg(&self) -> Self {
        let b0 = -&self.f0;
        let c = Self::carry(&self.f0, &b0);
        WittPoly {
            f1: -&(&self.f1 + &c),
            f0: b0,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WittError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WittError> {
        self.check(other)?;
        let p = self.prime().get() as u32;
        Ok(WittPoly {
            f0: &self.f0 * &other.f0,
            f1: &(self.f0.pow(p) * &other.f1) + &(&self.f1 * other.f0.pow(p)),
        })
    }

    pub fn frobenius(&self) -> Self {
        let p = self.prime().get() as u32;
        WittPoly {
            f0: self.f0.pow(p),
            f1: self.f1.pow(p),
        }
    }

    /// Multiplication by the integer `p`, i.e. `(a0, a1) -> (0, a0^p)`.
    pub fn times_p(&self) -> Self {
        let p = self.prime().get() as u32;
        WittPoly::verschiebung(self.f0.pow(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn addition_examples() {
        let p3 = prime(3);
        let one = WittScalar::one(p3.clone());
        assert_eq!(one.add(&one).unwrap(), WittScalar::new(p3, 2, 1));
        let p2 = prime(2);
        let one = WittScalar::one(p2.clone());
        assert_eq!(one.add(&one).unwrap(), WittScalar::new(p2.clone(), 0, 1));
        let b = WittScalar::new(p2.clone(), 1, 1);
        assert_eq!(WittScalar::zero(p2).add(&b).unwrap(), b);
    }

    #[test]
    fn multiplication_examples() {
        let p2 = prime(2);
        let a = WittScalar::new(p2.clone(), 1, 1);
        assert_eq!(a.mul(&a).unwrap(), WittScalar::one(p2.clone()));
        assert_eq!(WittScalar::one(p2).mul(&a).unwrap(), a);
        let p3 = prime(3);
        let v = WittScalar::verschiebung(p3.clone(), 1);
        assert_eq!(v.mul(&v).unwrap(), WittScalar::zero(p3));
    }

    #[test]
    fn frobenius_and_verschiebung() {
        let p3 = prime(3);
        let a = WittScalar::new(p3.clone(), 2, 1);
        assert_eq!(a.frobenius(), a);
        for c in 0..3 {
            let fv = WittScalar::verschiebung(p3.clone(), c).frobenius();
            let times_p = WittScalar::verschiebung(p3.clone(), 1)
                .mul(&WittScalar::teichmuller(p3.clone(), c))
                .unwrap();
            assert_eq!(fv, WittScalar::new(p3.clone(), 0, c.pow(3)));
            assert_eq!(fv, times_p);
        }
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(WittScalar::new(prime(2), 1, 1).ghost(), 3);
        assert_eq!(WittScalar::new(prime(3), 2, 1).ghost(), 2);
        assert_eq!(WittScalar::new(prime(5), 0, 4).ghost(), 20);
        for n in 0..25 {
            assert_eq!(WittScalar::from_ghost(prime(5), n).ghost(), n);
        }
    }

    #[test]
    fn prime_mismatch() {
        let a = WittScalar::one(prime(2));
        let b = WittScalar::one(prime(3));
        assert_eq!(a.add(&b), Err(WittError::PrimeMismatch(2, 3)));
    }

    #[test]
    fn poly_frobenius_is_componentwise() {
        let p2 = prime(2);
        let r = Zmod::fp(p2);
        let x = MultiPoly::var(r.clone(), 2, 0);
        let y = MultiPoly::var(r, 2, 1);
        let w = WittPoly::new(x.clone(), y.clone()).unwrap();
        assert_eq!(w.frobenius(), WittPoly::new(x.pow(2), y.pow(2)).unwrap());
    }

    #[test]
    fn negation_is_additive_inverse() {
        for p in [2u64, 3, 5] {
            for a0 in 0..p as i64 {
                for a1 in 0..p as i64 {
                    let a = WittScalar::new(prime(p), a0, a1);
                    assert_eq!(a.add(&a.neg()).unwrap(), WittScalar::zero(prime(p)));
                }
            }
        }
    }
}

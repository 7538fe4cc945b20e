use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, MultiPoly, PolyError};

impl MultiPoly {
    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(*c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.ring.clone(), self.nvars));
        }
        let m = self.ring.modulus() as u128;
        let mut acc: HashMap<Monomial, u128> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ma.checked_mul(mb)?;
                let e = acc.entry(prod).or_insert(0);
                *e = (*e + (*ca as u128) * (*cb as u128)) % m;
            }
        }
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (mono, c) in acc {
            if c != 0 {
                out.terms.insert(mono, c as u64);
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, mut k: u32) -> Result<MultiPoly, PolyError> {
        // Monomials raise exponentwise, which can overflow even when the
        // repeated-squaring intermediates look small.
        if self.len() == 1 {
            let (m, c) = self.leading_term().expect("one term");
            let mono = m.checked_pow(k)?;
            return Ok(MultiPoly::term(
                self.ring.clone(),
                mono,
                self.ring.pow(c, k as u64) as i64,
            ));
        }
        let mut acc = MultiPoly::one(self.ring.clone(), self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^k`. Panics on exponent overflow.
    pub fn pow(&self, k: u32) -> MultiPoly {
        self.try_pow(k).expect("exponent overflow in pow")
    }

    /// `self(images[0], ..., images[n-1])`. The result lives in the images' ring
    /// and arity; coefficients of `self` are reduced into that ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::WrongImageCount {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let Some(first) = images.first() else {
            // constants in zero variables
            return Ok(self.clone());
        };
        for img in &images[1..] {
            first.check_compatible(img)?;
        }
        if first.p() != self.p() {
            return Err(PolyError::RingMismatch {
                left: self.ring.clone(),
                right: first.ring.clone(),
            });
        }
        let ring = first.ring.clone();
        let n = first.nvars;

        // powers[i][e] = images[i]^e, built lazily up to the largest exponent used
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|_| vec![MultiPoly::one(ring.clone(), n)])
            .collect();
        for i in 0..self.nvars {
            let top = self.degree_in(i) as usize;
            while powers[i].len() <= top {
                let next = powers[i].last().unwrap().try_mul(&images[i])?;
                powers[i].push(next);
            }
        }

        let mut out = MultiPoly::zero(ring.clone(), n);
        for (m, c) in &self.terms {
            let c = *c % ring.modulus();
            if c == 0 {
                continue;
            }
            let mut t = MultiPoly::constant(ring.clone(), n, c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&powers[i][e as usize])?;
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }
}

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ring.neg(*c));
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -(&self)
    }
}

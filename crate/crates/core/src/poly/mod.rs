//! Sparse multivariate polynomials over `F_p` and `Z/p^2`.

mod display;
mod division;
mod monomial;
mod ops;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use display::{default_var_names, PolyDisplay};
pub use monomial::{degrevlex, Monomial};

use crate::prime::{mul_mod, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },
    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: Zmod, right: Zmod },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("coefficient of monomial {0:?} is not divisible by p")]
    NotDivisible(Vec<u32>),
    #[error("expected coefficients mod {expected}, found mod {found}")]
    WrongModulus { expected: u64, found: u64 },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} substitution images, got {found}")]
    WrongImageCount { expected: usize, found: usize },
}

/// Which power of `p` the coefficients live modulo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    ModP,
    ModP2,
}

/// The coefficient ring `Z/p` or `Z/p^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zmod {
    prime: Prime,
    level: Level,
}

impl Zmod {
    pub fn fp(prime: Prime) -> Self {
        Zmod {
            prime,
            level: Level::ModP,
        }
    }

    pub fn zp2(prime: Prime) -> Self {
        Zmod {
            prime,
            level: Level::ModP2,
        }
    }

    pub fn prime(&self) -> &Prime {
        &self.prime
    }

    pub fn p(&self) -> u64 {
        self.prime.get()
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        match self.level {
            Level::ModP => self.prime.get(),
            Level::ModP2 => self.prime.square(),
        }
    }

    pub fn reduce(&self, c: i64) -> u64 {
        c.rem_euclid(self.modulus() as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let m = self.modulus();
        let s = a + b;
        if s >= m {
            s - m
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus() - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus())
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        crate::prime::pow_mod(a, e, self.modulus())
    }

    /// Inverse of a unit, `None` for non-units.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p()) {
            None
        } else {
            Some(crate::prime::inv_mod(a, self.modulus()))
        }
    }

    pub fn to_fp(&self) -> Zmod {
        Zmod::fp(self.prime.clone())
    }

    pub fn to_zp2(&self) -> Zmod {
        Zmod::zp2(self.prime.clone())
    }
}

impl fmt::Debug for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}", self.modulus())
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}", self.modulus())
    }
}

/// A sparse polynomial in `nvars` variables with coefficients in `Z/p` or `Z/p^2`.
///
/// No zero coefficients are stored and every coefficient is a least residue,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: Zmod,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl MultiPoly {
    pub fn zero(ring: Zmod, nvars: usize) -> Self {
        MultiPoly {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Zmod, nvars: usize, c: i64) -> Self {
        let mut out = Self::zero(ring, nvars);
        let c = out.ring.reduce(c);
        if c != 0 {
            out.terms.insert(Monomial::one(nvars), c);
        }
        out
    }

    pub fn one(ring: Zmod, nvars: usize) -> Self {
        Self::constant(ring, nvars, 1)
    }

    /// The coordinate function `x_i` (zero-based).
    pub fn var(ring: Zmod, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        Self::term(ring, Monomial::var(nvars, i, 1), 1)
    }

    pub fn term(ring: Zmod, monomial: Monomial, c: i64) -> Self {
        let nvars = monomial.nvars();
        let mut out = Self::zero(ring, nvars);
        let c = out.ring.reduce(c);
        if c != 0 {
            out.terms.insert(monomial, c);
        }
        out
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, combining repeats.
    pub fn from_terms<I>(ring: Zmod, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut out = Self::zero(ring, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            let c = out.ring.reduce(c);
            out.add_term(Monomial::new(e), c);
        }
        out
    }

    pub fn ring(&self) -> &Zmod {
        &self.ring
    }

    pub fn prime(&self) -> &Prime {
        self.ring.prime()
    }

    pub fn p(&self) -> u64 {
        self.ring.p()
    }

    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn coeff_of(&self, exponents: &[u32]) -> u64 {
        self.coeff(&Monomial::new(exponents.to_vec()))
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    /// Largest term in degrevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, u64)> {
        self.terms.iter().next_back().map(|(m, c)| (m, *c))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[i])
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let ring = &self.ring;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn check_compatible(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        Ok(())
    }

    /// Reinterprets the same coefficients in another ring after reducing them.
    fn map_coefficients(&self, ring: Zmod, f: impl Fn(u64) -> u64) -> MultiPoly {
        let mut out = MultiPoly::zero(ring, self.nvars);
        for (m, c) in &self.terms {
            let c = f(*c) % out.ring.modulus();
            if c != 0 {
                out.terms.insert(m.clone(), c);
            }
        }
        out
    }

    /// Coefficientwise reduction `Z/p^2 -> F_p`. Identity on `F_p` input.
    pub fn reduce_mod_p(&self) -> MultiPoly {
        let p = self.p();
        self.map_coefficients(self.ring.to_fp(), |c| c % p)
    }

    /// Least-residue lift `F_p -> Z/p^2`.
    pub fn lift_mod_p2(&self) -> MultiPoly {
        self.map_coefficients(self.ring.to_zp2(), |c| c)
    }

    /// Exact division of every coefficient by `p`, landing in `F_p`.
    pub fn divide_by_p(&self) -> Result<MultiPoly, PolyError> {
        if self.ring.level() != Level::ModP2 {
            return Err(PolyError::WrongModulus {
                expected: self.prime().square(),
                found: self.modulus(),
            });
        }
        let p = self.p();
        if let Some((m, _)) = self.terms.iter().rev().find(|(_, c)| *c % p != 0) {
            return Err(PolyError::NotDivisible(m.exponents().to_vec()));
        }
        Ok(self.map_coefficients(self.ring.to_fp(), |c| c / p))
    }

    /// Multiplication by `p`, landing in `Z/p^2` (`F_p` input is lifted first).
    pub fn times_p(&self) -> MultiPoly {
        let p = self.p();
        self.map_coefficients(self.ring.to_zp2(), |c| (c % p) * p)
    }

    pub fn scale(&self, c: u64) -> MultiPoly {
        let c = c % self.modulus();
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (m, a) in &self.terms {
            let v = self.ring.mul(*a, c);
            if v != 0 {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Formal partial derivative with respect to `x_i` (zero-based).
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let v = self.ring.mul(*c, e as u64 % self.modulus());
            if v == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.exponents_mut()[i] -= 1;
            out.add_term(m2, v);
        }
        Ok(out)
    }

    /// The trace `Tr(x^a) = x^((a - (p-1)) / p)` when every `a_i = p-1 mod p`,
    /// zero otherwise, extended linearly. Defined on `F_p` polynomials.
    pub fn monomial_trace(&self) -> MultiPoly {
        assert_eq!(self.ring.level(), Level::ModP, "trace is defined over F_p");
        let p = self.p() as u32;
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            if m.exponents().iter().all(|&a| a % p == p - 1) {
                let e = m.exponents().iter().map(|&a| (a - (p - 1)) / p).collect();
                out.add_term(Monomial::new(e), *c);
            }
        }
        out
    }

    /// Evaluates at a point with coordinates in the coefficient ring.
    pub fn evaluate(&self, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = self.ring.mul(t, self.ring.pow(*x, e as u64));
                }
            }
            acc = self.ring.add(acc, t);
        }
        acc
    }

    /// Embeds into `total` variables, placing the current ones at `offset..`.
    pub fn shift_variables(&self, offset: usize, total: usize) -> MultiPoly {
        assert!(offset + self.nvars <= total);
        let mut out = MultiPoly::zero(self.ring.clone(), total);
        for (m, c) in &self.terms {
            let mut e = vec![0; total];
            e[offset..offset + self.nvars].copy_from_slice(m.exponents());
            out.terms.insert(Monomial::new(e), *c);
        }
        out
    }

    /// Removes variable `i`, which must not occur.
    pub fn drop_variable(&self, i: usize) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars - 1);
        for (m, c) in &self.terms {
            if m.exponents()[i] != 0 {
                return None;
            }
            let mut e = m.exponents().to_vec();
            e.remove(i);
            out.terms.insert(Monomial::new(e), *c);
        }
        Some(out)
    }

    /// Sets `x_i = value` and removes the variable.
    pub fn specialize(&self, i: usize, value: u64) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            let k = e.remove(i);
            let v = self.ring.mul(*c, self.ring.pow(value, k as u64));
            out.add_term(Monomial::new(e), v);
        }
        out
    }

    /// Exact quotient by the monomial `x^m` if every term is divisible by it.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero(self.ring.clone(), self.nvars);
        for (t, c) in &self.terms {
            out.terms.insert(m.quotient_of(t)?, *c);
        }
        Some(out)
    }

    pub fn display(&self) -> PolyDisplay<'_> {
        PolyDisplay::new(self, None)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay::new(self, Some(names))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.display(), self.ring)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display(), f)
    }
}

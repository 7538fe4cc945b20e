//! Frobenius splittings of `F_p[x_1, ..., x_n]` in trace form.
//!
//! Every `p^-1`-linear map `F_* O -> O` on a polynomial ring is
//! `f -> Tr(u f)` for a unique key polynomial `u`, where `Tr` is the monomial
//! trace. A splitting is unital when `Tr(u) = 1`.

mod canonical;
mod group;

use std::fmt;

use thiserror::Error;

pub use canonical::{
    theorem_iso_check, theorem_iso_check_with, CanonicalLiftElement, CanonicalLiftRing,
    FlatnessReport, IsoCheckReport,
};
pub use group::GroupAction;

use crate::ideal::{IdealError, IdealPresentation};
use crate::lift::{ChartLifting, LiftError};
use crate::poly::{Level, Monomial, MultiPoly, PolyError, Zmod};
use crate::prime::Prime;
use crate::witt::WittError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("sigma(1) = {0}, expected 1")]
    SplittingAxiomFailed(String),
    #[error("splitting is not unital")]
    NotUnital,
    #[error("probe output of degree {found} exceeds the cap {cap}")]
    DegreeUnbounded { cap: u64, found: u64 },
    #[error("group order {order} is divisible by p = {p}")]
    OrderDivisibleByP { order: usize, p: u64 },
    #[error("invalid group action: {0}")]
    InvalidGroup(String),
    #[error("key polynomial must have coefficients mod p")]
    NotOverField,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Witt(#[from] WittError),
}

/// The map `sigma_u(f) = Tr(u f)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceSplitting {
    key: MultiPoly,
}

impl TraceSplitting {
    pub fn new(key: MultiPoly) -> Result<Self, SplitError> {
        if key.ring().level() != Level::ModP {
            return Err(SplitError::NotOverField);
        }
        Ok(TraceSplitting { key })
    }

    /// The trace itself, `u = (x_1 ... x_n)^(p-1)`; the splitting of the
    /// standard toric lifting.
    pub fn standard(prime: Prime, nvars: usize) -> Self {
        let e = (prime.get() - 1) as u32;
        let key = MultiPoly::term(Zmod::fp(prime), Monomial::new(vec![e; nvars]), 1);
        TraceSplitting { key }
    }

    /// The splitting attached to a lifting: key polynomial `det xi`.
    pub fn from_lifting(lifting: &ChartLifting) -> Result<Self, SplitError> {
        let det = lifting.xi_matrix()?.det;
        let s = TraceSplitting { key: det };
        let one = s.evaluate(&MultiPoly::one(s.key.ring().clone(), s.nvars()));
        if one != MultiPoly::one(s.key.ring().clone(), s.nvars()) {
            return Err(SplitError::SplittingAxiomFailed(one.to_string()));
        }
        Ok(s)
    }

    pub fn key(&self) -> &MultiPoly {
        &self.key
    }

    pub fn prime(&self) -> &Prime {
        self.key.prime()
    }

    pub fn nvars(&self) -> usize {
        self.key.nvars()
    }

    /// `Tr(u f)`. `Z/p^2` input is reduced first.
    pub fn evaluate(&self, f: &MultiPoly) -> MultiPoly {
        (&self.key * &f.reduce_mod_p()).monomial_trace()
    }

    pub fn is_unital(&self) -> bool {
        self.key.monomial_trace() == MultiPoly::one(self.key.ring().clone(), self.nvars())
    }

    pub fn require_unital(&self) -> Result<(), SplitError> {
        if self.is_unital() {
            Ok(())
        } else {
            Err(SplitError::NotUnital)
        }
    }

    /// Fedder-type test: `sigma(I) ⊆ I` iff `u I ⊆ I^[p]`.
    pub fn is_compatible_with_ideal(&self, ideal: &IdealPresentation) -> Result<bool, SplitError> {
        self.require_unital()?;
        let frob = ideal.frobenius_power();
        for g in ideal.generators() {
            if !frob.contains(&(&self.key * g))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplicities of the candidate factors in `u`, with the residual.
    pub fn divisor(&self, candidates: &[MultiPoly]) -> DivisorReport {
        let p = self.prime().get();
        let mut residual = self.key.clone();
        let mut components = Vec::new();
        for factor in candidates {
            assert!(
                !factor.is_constant(),
                "candidate factors must be nonconstant"
            );
            let mut multiplicity = 0u32;
            if !residual.is_zero() {
                while let Some(q) = residual.div_exact(factor) {
                    residual = q;
                    multiplicity += 1;
                }
            }
            components.push(DivisorComponent {
                factor: factor.clone(),
                multiplicity,
                coefficient: Ratio::new(multiplicity as u64, p - 1),
                within_bound: (multiplicity as u64) < p,
            });
        }
        DivisorReport {
            components,
            residual,
        }
    }
}

/// A rational number `num / den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorComponent {
    pub factor: MultiPoly,
    pub multiplicity: u32,
    /// `multiplicity / (p - 1)`, the coefficient in the Q-divisor.
    pub coefficient: Ratio,
    /// Whether `multiplicity <= p - 1`; always true for splittings.
    pub within_bound: bool,
}

/// The chart shadow of the divisor of a splitting: multiplicities of the
/// supplied factors in `u` and what is left of `u` after removing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorReport {
    pub components: Vec<DivisorComponent>,
    pub residual: MultiPoly,
}

/// Recovers the key polynomial of a `p^-1`-linear map given as a callback:
/// `u = sum_b x^b sigma(x^((p-1) - b))^p` over `b ∈ [0, p)^n`.
pub fn trace_form_from_map<F>(
    prime: &Prime,
    nvars: usize,
    degree_cap: u64,
    sigma: F,
) -> Result<MultiPoly, SplitError>
where
    F: Fn(&MultiPoly) -> MultiPoly,
{
    let ring = Zmod::fp(prime.clone());
    let p = prime.get() as u32;
    let mut u = MultiPoly::zero(ring.clone(), nvars);
    let mut b = vec![0u32; nvars];
    loop {
        let probe_exp: Vec<u32> = b.iter().map(|&bi| p - 1 - bi).collect();
        let probe = MultiPoly::term(ring.clone(), Monomial::new(probe_exp), 1);
        let value = sigma(&probe);
        if let Some(d) = value.total_degree() {
            if d > degree_cap {
                return Err(SplitError::DegreeUnbounded {
                    cap: degree_cap,
                    found: d,
                });
            }
        }
        let shift = MultiPoly::term(ring.clone(), Monomial::new(b.clone()), 1);
        u = &u + &(&shift * &value.pow(p));

        // next b in [0, p)^n
        let mut k = 0;
        loop {
            if k == nvars {
                return Ok(u);
            }
            b[k] += 1;
            if b[k] < p {
                break;
            }
            b[k] = 0;
            k += 1;
        }
    }
}

/// Fedder's criterion at the origin: `F_p[x] / (f)` is F-split near 0 iff
/// `f^(p-1) ∉ (x_1^p, ..., x_n^p)`.
pub fn fedder_is_fsplit(f: &MultiPoly) -> Result<bool, SplitError> {
    if f.ring().level() != Level::ModP {
        return Err(SplitError::NotOverField);
    }
    assert!(!f.is_zero(), "Fedder test needs a nonzero polynomial");
    let n = f.nvars();
    let p = f.p() as u32;
    let frobenius_max: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::var(f.ring().clone(), n, i).pow(p))
        .collect();
    let ideal = IdealPresentation::new(frobenius_max)?;
    Ok(!ideal.contains(&f.pow(p - 1))?)
}

/// Averages `sigma` over `group`; see [`GroupAction::average`].
pub fn group_average(
    sigma: &TraceSplitting,
    group: &GroupAction,
) -> Result<TraceSplitting, SplitError> {
    group.average(sigma)
}

/// Coefficient of `x^(p-1) y^(p-1)` in `x (x - y)(x - 2y) ... (x - (p-1)y) y^(p-2)`.
pub fn p1_invariant_scan(prime: &Prime) -> u64 {
    let ring = Zmod::fp(prime.clone());
    let p = prime.get();
    let x = MultiPoly::var(ring.clone(), 2, 0);
    let y = MultiPoly::var(ring.clone(), 2, 1);
    let mut prod = x.clone();
    for l in 1..p {
        prod = &prod * &(&x - &y.scale(l));
    }
    prod = &prod * &y.pow((p - 2) as u32);
    prod.coeff_of(&[(p - 1) as u32, (p - 1) as u32])
}

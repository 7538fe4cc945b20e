//! Frobenius liftings of affine charts.
//!
//! A lifting of the Frobenius of `A^n_{F_p}` to `A^n_{Z/p^2}` is determined by
//! the images `F~*(x~_i)`, which must reduce to `x_i^p`. Writing
//! `F~*(x~_i) = x~_i^p + p delta_i` recovers the delta values, and every
//! construction here (xi matrices, compatibility, base change) is computed
//! from the images and the deltas.

mod xi;

use thiserror::Error;

pub use xi::{determinant, XiLogMatrix, XiMatrix, MAX_DET_DIM};

use crate::ideal::{member_mod_p2, IdealError, IdealPresentation};
use crate::poly::{Level, Monomial, MultiPoly, PolyError, Zmod};
use crate::prime::Prime;
use crate::witt::WittPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    /// Coordinates are numbered from 1 as in `x1, ..., xn`.
    #[error("image of x{coordinate} does not reduce to x{coordinate}^p")]
    NotALifting { coordinate: usize },
    #[error("lifting is not compatible with the divisor x{coordinate} = 0")]
    NotCompatibleWithDivisor { coordinate: usize },
    #[error("images must have coefficients mod p^2 and {expected} variables")]
    MalformedImages { expected: usize },
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("determinants are limited to {MAX_DET_DIM} variables, got {0}")]
    DimensionTooLarge(usize),
    #[error("log rank {log_rank} exceeds {nvars} variables")]
    LogRankTooLarge { log_rank: usize, nvars: usize },
    #[error("blow-up centers need at least two coordinates, got {0}")]
    CenterTooSmall(usize),
    #[error("center coordinates must be distinct and in range")]
    InvalidCenter,
    #[error("base-change map must have {expected} components over F_p")]
    BadBaseChange { expected: usize },
    #[error("point must have {expected} coordinates")]
    BadPoint { expected: usize },
    #[error("theta(nu(f)) differs from F*(f) for f = {0}")]
    RoundtripFailed(String),
    #[error("pairwise and direct blow-up tests disagree")]
    CriterionMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A Frobenius lifting of `A^n` over `Z/p^2`, with its cached delta values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartLifting {
    prime: Prime,
    images: Vec<MultiPoly>,
    deltas: Vec<MultiPoly>,
}

/// Outcome of the blow-up extension test for a coordinate center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupCertificate {
    pub center: Vec<usize>,
    /// `f_i = delta(x~_i)` for the center coordinates, in center order.
    pub deltas: Vec<MultiPoly>,
    /// `x_i^p f_j - x_j^p f_i ∈ I^(2p)` for each pair `i < j` of center positions.
    pub pairwise: Vec<((usize, usize), bool)>,
    /// `f_i ∈ I^p` for each center coordinate.
    pub direct: Vec<(usize, bool)>,
    pub extends: bool,
}

impl ChartLifting {
    /// Validates that `images[i]` reduces to `x_i^p` mod `p`.
    pub fn new(prime: Prime, images: Vec<MultiPoly>) -> Result<Self, LiftError> {
        let n = images.len();
        let ring = Zmod::zp2(prime.clone());
        for img in &images {
            if img.nvars() != n || img.ring().level() != Level::ModP2 {
                return Err(LiftError::MalformedImages { expected: n });
            }
            if img.prime() != &prime {
                return Err(LiftError::PrimeMismatch(prime.get(), img.p()));
            }
        }
        let p = prime.get() as u32;
        let mut deltas = Vec::with_capacity(n);
        for (i, img) in images.iter().enumerate() {
            let frob = MultiPoly::var(ring.clone(), n, i).pow(p);
            let diff = img - &frob;
            match diff.divide_by_p() {
                Ok(d) => deltas.push(d),
                Err(PolyError::NotDivisible(_)) => {
                    return Err(LiftError::NotALifting { coordinate: i + 1 })
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok(ChartLifting {
            prime,
            images,
            deltas,
        })
    }

    /// `F~*(x~_i) = x~_i^p + p lift(delta_i)` for arbitrary `delta_i` over `F_p`.
    pub fn from_deltas(prime: Prime, deltas: Vec<MultiPoly>) -> Result<Self, LiftError> {
        let n = deltas.len();
        let ring = Zmod::zp2(prime.clone());
        let p = prime.get() as u32;
        let mut images = Vec::with_capacity(n);
        for (i, d) in deltas.iter().enumerate() {
            if d.nvars() != n || d.ring().level() != Level::ModP || d.prime() != &prime {
                return Err(LiftError::MalformedImages { expected: n });
            }
            images.push(&MultiPoly::var(ring.clone(), n, i).pow(p) + &d.times_p());
        }
        Ok(ChartLifting {
            prime,
            images,
            deltas,
        })
    }

    /// The standard toric lifting `x~_i -> x~_i^p`.
    pub fn standard(prime: Prime, n: usize) -> Self {
        let zero = MultiPoly::zero(Zmod::fp(prime.clone()), n);
        Self::from_deltas(prime, vec![zero; n]).expect("well-formed")
    }

    pub fn prime(&self) -> &Prime {
        &self.prime
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    /// `delta(x~_i)` for each coordinate.
    pub fn deltas(&self) -> &[MultiPoly] {
        &self.deltas
    }

    pub fn ring_p(&self) -> Zmod {
        Zmod::fp(self.prime.clone())
    }

    pub fn ring_p2(&self) -> Zmod {
        Zmod::zp2(self.prime.clone())
    }

    fn check_function(&self, f: &MultiPoly) -> Result<(), LiftError> {
        if f.nvars() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                left: self.nvars(),
                right: f.nvars(),
            }
            .into());
        }
        if f.prime() != &self.prime {
            return Err(LiftError::PrimeMismatch(self.prime.get(), f.p()));
        }
        Ok(())
    }

    /// `F~*(f~)`. An `F_p` input is lifted by least residues first.
    pub fn pullback(&self, f: &MultiPoly) -> Result<MultiPoly, LiftError> {
        self.check_function(f)?;
        Ok(f.lift_mod_p2().substitute(&self.images)?)
    }

    /// `delta(f~) = (F~*(f~) - f~^p) / p`.
    ///
    /// Depends on `f~` itself, not only on its reduction:
    /// `delta(f~ + p g~) = delta(f~) + g^p`.
    pub fn delta(&self, f: &MultiPoly) -> Result<MultiPoly, LiftError> {
        self.check_function(f)?;
        let f = f.lift_mod_p2();
        let p = self.prime.get() as u32;
        let diff = &f.substitute(&self.images)? - &f.pow(p);
        Ok(diff.divide_by_p()?)
    }

    /// `nu*(f~) = (f, delta(f~))` in `W_2`.
    pub fn nu(&self, f: &MultiPoly) -> Result<WittPoly, LiftError> {
        let d = self.delta(f)?;
        Ok(WittPoly::new(f.reduce_mod_p(), d).expect("matching components"))
    }

    /// `theta*(f0, f1) = lift(f0)^p + p lift(f1)`, with least-residue lifts.
    pub fn theta(w: &WittPoly) -> MultiPoly {
        let (f0, f1) = w.components();
        let p = f0.p() as u32;
        &f0.lift_mod_p2().pow(p) + &f1.times_p()
    }

    /// Computes `theta*(nu*(f~))` and checks it equals `F~*(f~)`.
    pub fn nu_theta_roundtrip(&self, f: &MultiPoly) -> Result<MultiPoly, LiftError> {
        let via_witt = Self::theta(&self.nu(f)?);
        let direct = self.pullback(f)?;
        if via_witt != direct {
            return Err(LiftError::RoundtripFailed(f.to_string()));
        }
        Ok(direct)
    }

    /// The cofactor `u~_i` with `F~*(x~_i) = x~_i^p u~_i` and `u~_i = 1 mod p`.
    pub fn divisor_unit(&self, i: usize) -> Result<MultiPoly, LiftError> {
        let n = self.nvars();
        if i >= n {
            return Err(PolyError::VariableOutOfRange { index: i, nvars: n }.into());
        }
        let p = self.prime.get() as u32;
        let not_compatible = LiftError::NotCompatibleWithDivisor { coordinate: i + 1 };
        let u = self.images[i]
            .div_monomial(&Monomial::var(n, i, p))
            .ok_or(not_compatible.clone())?;
        if u.reduce_mod_p() != MultiPoly::one(self.ring_p(), n) {
            return Err(not_compatible);
        }
        Ok(u)
    }

    /// `F~*(g~) ∈ I~^p` for every generator `g~` of `I~` (over `Z/p^2`).
    ///
    /// Checking generators suffices: `F~*` is a ring map and `I~^p` an ideal.
    pub fn is_compatible_with_ideal(&self, ideal: &IdealPresentation) -> Result<bool, LiftError> {
        if ideal.ring() != &self.ring_p2() || ideal.nvars() != self.nvars() {
            return Err(LiftError::MalformedImages {
                expected: self.nvars(),
            });
        }
        let target = ideal.power(self.prime.get() as u32);
        for g in ideal.generators() {
            if !member_mod_p2(&self.pullback(g)?, &target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Decides whether the lifting extends to the blow-up along the
    /// coordinate center `x~_i = 0, i ∈ center` (zero-based indices).
    ///
    /// Runs both the pairwise test on the charts of the blow-up and the
    /// direct test `f_i ∈ I^p`; they must agree.
    pub fn blowup_extends(&self, center: &[usize]) -> Result<BlowupCertificate, LiftError> {
        let n = self.nvars();
        if center.len() < 2 {
            return Err(LiftError::CenterTooSmall(center.len()));
        }
        let mut sorted = center.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != center.len() || sorted.iter().any(|&i| i >= n) {
            return Err(LiftError::InvalidCenter);
        }
        let ring = self.ring_p();
        let p = self.prime.get() as u32;
        let coords: Vec<MultiPoly> = center
            .iter()
            .map(|&i| MultiPoly::var(ring.clone(), n, i))
            .collect();
        let ideal = IdealPresentation::new(coords.clone())?;
        let ip = ideal.power(p);
        let i2p = ideal.power(2 * p);
        let f: Vec<MultiPoly> = center.iter().map(|&i| self.deltas[i].clone()).collect();

        let mut pairwise = Vec::new();
        for b in 0..center.len() {
            for a in 0..b {
                let h = &(coords[a].pow(p) * &f[b]) - &(coords[b].pow(p) * &f[a]);
                pairwise.push(((center[a], center[b]), i2p.contains(&h)?));
            }
        }
        let mut direct = Vec::new();
        for (a, fa) in f.iter().enumerate() {
            direct.push((center[a], ip.contains(fa)?));
        }
        let test_a = pairwise.iter().all(|(_, ok)| *ok);
        let test_b = direct.iter().all(|(_, ok)| *ok);
        if test_a != test_b {
            return Err(LiftError::CriterionMismatch);
        }
        Ok(BlowupCertificate {
            center: center.to_vec(),
            deltas: f,
            pairwise,
            direct,
            extends: test_b,
        })
    }

    /// Product lifting on `A^(n1 + n2)`; the second factor's variables come last.
    pub fn product(&self, other: &ChartLifting) -> Result<ChartLifting, LiftError> {
        if self.prime != other.prime {
            return Err(LiftError::PrimeMismatch(
                self.prime.get(),
                other.prime.get(),
            ));
        }
        let (n1, n2) = (self.nvars(), other.nvars());
        let total = n1 + n2;
        let images = self
            .images
            .iter()
            .map(|f| f.shift_variables(0, total))
            .chain(other.images.iter().map(|f| f.shift_variables(n1, total)))
            .collect();
        let deltas = self
            .deltas
            .iter()
            .map(|f| f.shift_variables(0, total))
            .chain(other.deltas.iter().map(|f| f.shift_variables(n1, total)))
            .collect();
        Ok(ChartLifting {
            prime: self.prime.clone(),
            images,
            deltas,
        })
    }

    /// The lifting induced on the coordinate divisor `x~_i = 0` (zero-based).
    pub fn restrict_to_coordinate_divisor(&self, i: usize) -> Result<ChartLifting, LiftError> {
        self.divisor_unit(i)?;
        let images = self
            .images
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, f)| f.specialize(i, 0))
            .collect();
        ChartLifting::new(self.prime.clone(), images)
    }

    /// Base change along `phi: A^n -> A^m` over `F_p` (this lifting lives on
    /// `A^m`): `psi*(y~_i) = lift(phi_i)^p + p lift(delta_i(phi))`.
    pub fn base_change_psi(&self, phi: &[MultiPoly]) -> Result<Vec<MultiPoly>, LiftError> {
        let m = self.nvars();
        let bad = || LiftError::BadBaseChange { expected: m };
        let first = phi.first().ok_or_else(bad)?;
        if phi.len() != m {
            return Err(bad());
        }
        for f in phi {
            if f.ring() != &self.ring_p() || f.nvars() != first.nvars() {
                return Err(bad());
            }
        }
        let p = self.prime.get() as u32;
        phi.iter()
            .zip(&self.deltas)
            .map(|(f, d)| {
                let pulled = d.substitute(phi)?;
                Ok(&f.lift_mod_p2().pow(p) + &pulled.times_p())
            })
            .collect()
    }

    /// The canonical `Z/p^2` point over `a ∈ F_p^n`:
    /// `x~_i = lift(a_i)^p + p delta_i(a)`.
    pub fn canonical_point_lift(&self, a: &[u64]) -> Result<Vec<u64>, LiftError> {
        let n = self.nvars();
        if a.len() != n {
            return Err(LiftError::BadPoint { expected: n });
        }
        let p = self.prime.get();
        let m = p * p;
        let a: Vec<u64> = a.iter().map(|v| v % p).collect();
        Ok(self
            .deltas
            .iter()
            .zip(&a)
            .map(|(d, &ai)| (crate::prime::pow_mod(ai, p, m) + p * d.evaluate(&a)) % m)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn poly(p: u64, n: usize, sq: bool, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
        let ring = if sq {
            Zmod::zp2(prime(p))
        } else {
            Zmod::fp(prime(p))
        };
        MultiPoly::from_terms(ring, n, terms.iter().cloned())
    }

    #[test]
    fn validate_examples() {
        let l = ChartLifting::new(prime(2), vec![poly(2, 1, true, &[(vec![2], 1)])]).unwrap();
        assert!(l.deltas()[0].is_zero());
        let l = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![1], 2)])],
        )
        .unwrap();
        assert_eq!(l.deltas()[0], poly(2, 1, false, &[(vec![1], 1)]));
        let err = ChartLifting::new(
            prime(3),
            vec![poly(3, 1, true, &[(vec![3], 1), (vec![1], 1)])],
        )
        .unwrap_err();
        assert_eq!(err, LiftError::NotALifting { coordinate: 1 });
    }

    #[test]
    fn delta_examples() {
        let l = ChartLifting::standard(prime(2), 2);
        let x = poly(2, 2, true, &[(vec![1, 0], 1)]);
        assert!(l.delta(&x).unwrap().is_zero());
        let s = poly(2, 2, true, &[(vec![1, 0], 1), (vec![0, 1], 1)]);
        assert_eq!(l.delta(&s).unwrap(), poly(2, 2, false, &[(vec![1, 1], 1)]));

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![0, 1], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1)]),
            ],
        )
        .unwrap();
        assert_eq!(l.delta(&x).unwrap(), poly(2, 2, false, &[(vec![0, 1], 1)]));
    }

    #[test]
    fn delta_depends_on_the_lift() {
        // delta(f + p g) = delta(f) + g^p
        let l = ChartLifting::standard(prime(3), 1);
        let f = poly(3, 1, true, &[(vec![1], 1)]);
        let g = poly(3, 1, false, &[(vec![0], 1), (vec![1], 1)]);
        let shifted = &f + &g.times_p();
        assert_eq!(
            l.delta(&shifted).unwrap(),
            &l.delta(&f).unwrap() + &g.pow(3)
        );
    }

    #[test]
    fn compatibility_examples() {
        let l = ChartLifting::standard(prime(3), 2);
        let x = poly(3, 2, true, &[(vec![1, 0], 1)]);
        let y = poly(3, 2, true, &[(vec![0, 1], 1)]);
        let m = IdealPresentation::new(vec![x, y]).unwrap();
        assert!(l.is_compatible_with_ideal(&m).unwrap());

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![0, 1], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1)]),
            ],
        )
        .unwrap();
        let x = poly(2, 2, true, &[(vec![1, 0], 1)]);
        let y = poly(2, 2, true, &[(vec![0, 1], 1)]);
        let m = IdealPresentation::new(vec![x.clone(), y]).unwrap();
        assert!(!l.is_compatible_with_ideal(&m).unwrap());

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![3, 0], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1)]),
            ],
        )
        .unwrap();
        let ix = IdealPresentation::new(vec![x]).unwrap();
        assert!(l.is_compatible_with_ideal(&ix).unwrap());
    }

    #[test]
    fn blowup_examples() {
        let l = ChartLifting::standard(prime(2), 2);
        assert!(l.blowup_extends(&[0, 1]).unwrap().extends);

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![0, 1], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1)]),
            ],
        )
        .unwrap();
        let cert = l.blowup_extends(&[0, 1]).unwrap();
        assert!(!cert.extends);
        assert_eq!(cert.pairwise, vec![((0, 1), false)]);

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![2, 2], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1), (vec![2, 2], 2)]),
            ],
        )
        .unwrap();
        let cert = l.blowup_extends(&[0, 1]).unwrap();
        assert!(cert.extends);
        assert_eq!(cert.direct, vec![(0, true), (1, true)]);

        assert_eq!(
            l.blowup_extends(&[0]).unwrap_err(),
            LiftError::CenterTooSmall(1)
        );
        assert_eq!(
            l.blowup_extends(&[0, 0]).unwrap_err(),
            LiftError::InvalidCenter
        );
    }

    #[test]
    fn product_examples() {
        let t = ChartLifting::standard(prime(3), 1);
        let prod = t.product(&t).unwrap();
        assert_eq!(prod, ChartLifting::standard(prime(3), 2));
        assert_eq!(
            prod.xi_matrix().unwrap().det,
            poly(3, 2, false, &[(vec![2, 2], 1)])
        );

        let a = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![3], 2)])],
        )
        .unwrap();
        let b = ChartLifting::standard(prime(2), 1);
        let det = a.product(&b).unwrap().xi_matrix().unwrap().det;
        assert_eq!(det, poly(2, 2, false, &[(vec![1, 1], 1), (vec![2, 1], 1)]));

        let c = ChartLifting::standard(prime(3), 1);
        assert_eq!(a.product(&c).unwrap_err(), LiftError::PrimeMismatch(2, 3));
    }

    #[test]
    fn product_is_associative() {
        let a = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![3], 2)])],
        )
        .unwrap();
        let b = ChartLifting::standard(prime(2), 1);
        let c = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![0], 2)])],
        )
        .unwrap();
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn restriction_examples() {
        let l = ChartLifting::standard(prime(3), 2);
        assert_eq!(
            l.restrict_to_coordinate_divisor(0).unwrap(),
            ChartLifting::standard(prime(3), 1)
        );

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![2, 1], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1), (vec![1, 1], 2)]),
            ],
        )
        .unwrap();
        let r = l.restrict_to_coordinate_divisor(0).unwrap();
        assert_eq!(r.images(), &[poly(2, 1, true, &[(vec![2], 1)])]);

        let l = ChartLifting::new(
            prime(2),
            vec![
                poly(2, 2, true, &[(vec![2, 0], 1), (vec![0, 1], 2)]),
                poly(2, 2, true, &[(vec![0, 2], 1)]),
            ],
        )
        .unwrap();
        assert_eq!(
            l.restrict_to_coordinate_divisor(0).unwrap_err(),
            LiftError::NotCompatibleWithDivisor { coordinate: 1 }
        );
    }

    #[test]
    fn psi_examples() {
        let l = ChartLifting::standard(prime(3), 2);
        let id = vec![
            poly(3, 2, false, &[(vec![1, 0], 1)]),
            poly(3, 2, false, &[(vec![0, 1], 1)]),
        ];
        assert_eq!(l.base_change_psi(&id).unwrap(), l.images());

        let l = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![1], 2)])],
        )
        .unwrap();
        let phi = vec![poly(2, 1, false, &[(vec![2], 1)])];
        assert_eq!(
            l.base_change_psi(&phi).unwrap(),
            vec![poly(2, 1, true, &[(vec![4], 1), (vec![2], 2)])]
        );

        // constant map recovers the canonical point lift
        let phi = vec![poly(2, 1, false, &[(vec![0], 1)])];
        let psi = l.base_change_psi(&phi).unwrap();
        assert_eq!(
            psi[0].constant_term(),
            l.canonical_point_lift(&[1]).unwrap()[0]
        );
        assert!(psi[0].is_constant());
    }

    #[test]
    fn point_lift_examples() {
        let l = ChartLifting::standard(prime(3), 1);
        assert_eq!(l.canonical_point_lift(&[2]).unwrap(), vec![8]);
        let l = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![1], 2)])],
        )
        .unwrap();
        assert_eq!(l.canonical_point_lift(&[0]).unwrap(), vec![0]);
        assert_eq!(l.canonical_point_lift(&[1]).unwrap(), vec![3]);
    }

    #[test]
    fn roundtrip_examples() {
        let l = ChartLifting::standard(prime(3), 1);
        let x = poly(3, 1, true, &[(vec![1], 1)]);
        assert_eq!(
            l.nu_theta_roundtrip(&x).unwrap(),
            poly(3, 1, true, &[(vec![3], 1)])
        );

        let l = ChartLifting::new(
            prime(2),
            vec![poly(2, 1, true, &[(vec![2], 1), (vec![3], 2)])],
        )
        .unwrap();
        let f = poly(2, 1, true, &[(vec![1], 1), (vec![0], 1)]);
        assert_eq!(
            l.nu_theta_roundtrip(&f).unwrap(),
            poly(2, 1, true, &[(vec![2], 1), (vec![3], 2), (vec![0], 1)])
        );
    }
}

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::lift::ChartLifting;
use crate::poly::{Monomial, MultiPoly, Zmod};
use crate::random::random_poly;
use crate::witt::WittPoly;

use super::{SplitError, TraceSplitting};

/// An element of `W_2(F_p[x]) / {(0, f) : sigma(f) = 0}` in normal form:
/// the second component is a `p`-th power `sigma(f1)^p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalLiftElement {
    pub f0: MultiPoly,
    pub f1: MultiPoly,
}

impl CanonicalLiftElement {
    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero()
    }
}

/// The canonical lifting of `F_p[x]` attached to a unital splitting.
#[derive(Clone, Debug)]
pub struct CanonicalLiftRing {
    sigma: TraceSplitting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub checked: usize,
    pub violations: usize,
}

impl FlatnessReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl CanonicalLiftRing {
    pub fn new(sigma: TraceSplitting) -> Result<Self, SplitError> {
        sigma.require_unital()?;
        Ok(CanonicalLiftRing { sigma })
    }

    /// No unitality check; the quotient is then not flat in general.
    pub fn new_unchecked(sigma: TraceSplitting) -> Self {
        CanonicalLiftRing { sigma }
    }

    pub fn splitting(&self) -> &TraceSplitting {
        &self.sigma
    }

    fn fp(&self) -> Zmod {
        self.sigma.key().ring().clone()
    }

    pub fn normal_form(&self, f0: &MultiPoly, f1: &MultiPoly) -> CanonicalLiftElement {
        let p = self.sigma.prime().get() as u32;
        CanonicalLiftElement {
            f0: f0.clone(),
            f1: self.sigma.evaluate(f1).pow(p),
        }
    }

    pub fn from_witt(&self, w: &WittPoly) -> CanonicalLiftElement {
        let (f0, f1) = w.components();
        self.normal_form(f0, f1)
    }

    pub fn to_witt(&self, a: &CanonicalLiftElement) -> Result<WittPoly, SplitError> {
        Ok(WittPoly::new(a.f0.clone(), a.f1.clone())?)
    }

    pub fn add(
        &self,
        a: &CanonicalLiftElement,
        b: &CanonicalLiftElement,
    ) -> Result<CanonicalLiftElement, SplitError> {
        let s = self.to_witt(a)?.add(&self.to_witt(b)?)?;
        Ok(self.from_witt(&s))
    }

    pub fn mul(
        &self,
        a: &CanonicalLiftElement,
        b: &CanonicalLiftElement,
    ) -> Result<CanonicalLiftElement, SplitError> {
        let s = self.to_witt(a)?.mul(&self.to_witt(b)?)?;
        Ok(self.from_witt(&s))
    }

    /// `p·(f0, f1) = (0, f0^p)`.
    pub fn times_p(&self, a: &CanonicalLiftElement) -> CanonicalLiftElement {
        let p = self.sigma.prime().get() as u32;
        let zero = MultiPoly::zero(self.fp(), self.sigma.nvars());
        self.normal_form(&zero, &a.f0.pow(p))
    }

    /// The reduction map onto `F_p[x]`.
    pub fn reduction(&self, a: &CanonicalLiftElement) -> MultiPoly {
        a.f0.clone()
    }

    /// Checks `p·z = 0 => z ∈ p·(ring)` on every pair `(c m0, m1)` with
    /// monomials of degree at most `degree_cap`, `c ∈ F_p` and zero entries
    /// allowed.
    pub fn flatness_check(&self, degree_cap: u32) -> FlatnessReport {
        let n = self.sigma.nvars();
        let p = self.sigma.prime().get();
        let ring = self.fp();
        let monomials = monomials_up_to(n, degree_cap);
        let zero = MultiPoly::zero(ring.clone(), n);
        let mut firsts = vec![zero.clone()];
        for m in &monomials {
            for c in 1..p {
                firsts.push(MultiPoly::term(ring.clone(), m.clone(), c as i64));
            }
        }
        let mut seconds = vec![zero.clone()];
        seconds.extend(
            monomials
                .iter()
                .map(|m| MultiPoly::term(ring.clone(), m.clone(), 1)),
        );

        let mut report = FlatnessReport {
            checked: 0,
            violations: 0,
        };
        for f0 in &firsts {
            for f1 in &seconds {
                report.checked += 1;
                let z = self.normal_form(f0, f1);
                if !self.times_p(&z).is_zero() {
                    continue;
                }
                let witness = CanonicalLiftElement {
                    f0: self.sigma.evaluate(&z.f1),
                    f1: zero.clone(),
                };
                if !z.f0.is_zero() || self.times_p(&witness) != z {
                    report.violations += 1;
                }
            }
        }
        report
    }
}

fn monomials_up_to(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        if e.iter().sum::<u32>() <= cap {
            out.push(Monomial::new(e.clone()));
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            e[k] += 1;
            if e[k] <= cap {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Outcome of comparing a lifting with the canonical lifting of its splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCheckReport {
    pub samples: usize,
    /// `sigma(f^p) = f`.
    pub section: bool,
    /// `f~ -> [nu*(f~)]` respects sums.
    pub additive: bool,
    /// `f~ -> [nu*(f~)]` respects products.
    pub multiplicative: bool,
    /// `[nu*(p f~)] = 0` only when `f~ ∈ p Z/p^2[x]`.
    pub injective_on_p: bool,
}

impl IsoCheckReport {
    pub fn passed(&self) -> bool {
        self.section && self.additive && self.multiplicative && self.injective_on_p
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.section {
            out.push("section");
        }
        if !self.additive {
            out.push("additive");
        }
        if !self.multiplicative {
            out.push("multiplicative");
        }
        if !self.injective_on_p {
            out.push("injective_on_p");
        }
        out
    }
}

/// Randomized comparison with the splitting attached to `lifting`.
pub fn theorem_iso_check(
    lifting: &ChartLifting,
    seed: u64,
    samples: usize,
) -> Result<IsoCheckReport, SplitError> {
    let sigma = TraceSplitting::from_lifting(lifting)?;
    theorem_iso_check_with(lifting, &sigma, seed, samples)
}

/// As [`theorem_iso_check`] with an explicit, possibly wrong, splitting.
pub fn theorem_iso_check_with(
    lifting: &ChartLifting,
    sigma: &TraceSplitting,
    seed: u64,
    samples: usize,
) -> Result<IsoCheckReport, SplitError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = lifting.nvars();
    let p = lifting.prime().get() as u32;
    let fp = lifting.ring_p();
    let zp2 = lifting.ring_p2();
    let ring = CanonicalLiftRing::new_unchecked(sigma.clone());
    let image = |f: &MultiPoly| -> Result<CanonicalLiftElement, SplitError> {
        Ok(ring.from_witt(&lifting.nu(f)?))
    };
    let mut report = IsoCheckReport {
        samples,
        section: true,
        additive: true,
        multiplicative: true,
        injective_on_p: true,
    };
    for _ in 0..samples {
        let f = random_poly(&mut rng, &fp, n, 3, 4);
        if sigma.evaluate(&f.pow(p)) != f {
            report.section = false;
        }
        let a = random_poly(&mut rng, &zp2, n, 2, 3);
        let b = random_poly(&mut rng, &zp2, n, 2, 3);
        let (ia, ib) = (image(&a)?, image(&b)?);
        if image(&(&a + &b))? != ring.add(&ia, &ib)? {
            report.additive = false;
        }
        if image(&(&a * &b))? != ring.mul(&ia, &ib)? {
            report.multiplicative = false;
        }
        if !f.is_zero() && image(&f.lift_mod_p2().times_p())?.is_zero() {
            report.injective_on_p = false;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Zmod;
    use crate::prime::Prime;
    use crate::random::random_poly;

    fn fp(p: u64) -> Zmod {
        Zmod::fp(Prime::new(p).unwrap())
    }

    #[test]
    fn toric_normal_forms() {
        let ring =
            CanonicalLiftRing::new(TraceSplitting::standard(Prime::new(2).unwrap(), 1)).unwrap();
        let zero = MultiPoly::zero(fp(2), 1);
        let x = MultiPoly::var(fp(2), 1, 0);
        let x2 = x.pow(2);
        assert_eq!(ring.normal_form(&zero, &x2).f1, x2);
        assert!(ring.normal_form(&zero, &x).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent() {
        let mut rng = StdRng::seed_from_u64(7);
        for p in [2u64, 3] {
            let ring = CanonicalLiftRing::new(TraceSplitting::standard(Prime::new(p).unwrap(), 2))
                .unwrap();
            for _ in 0..200 {
                let f0 = random_poly(&mut rng, &fp(p), 2, 5, 4);
                let f1 = random_poly(&mut rng, &fp(p), 2, 5, 4);
                let once = ring.normal_form(&f0, &f1);
                assert_eq!(ring.normal_form(&once.f0, &once.f1), once);
            }
        }
    }

    #[test]
    fn teichmuller_square() {
        let ring =
            CanonicalLiftRing::new(TraceSplitting::standard(Prime::new(3).unwrap(), 1)).unwrap();
        let x = MultiPoly::var(fp(3), 1, 0);
        let t = WittPoly::teichmuller(x);
        let a = ring.from_witt(&t);
        assert_eq!(
            ring.mul(&a, &a).unwrap(),
            ring.from_witt(&t.mul(&t).unwrap())
        );
    }

    #[test]
    fn toric_flatness() {
        for p in [2u64, 3] {
            for n in [1usize, 2] {
                let ring =
                    CanonicalLiftRing::new(TraceSplitting::standard(Prime::new(p).unwrap(), n))
                        .unwrap();
                let r = ring.flatness_check(2 * p as u32);
                assert!(r.passed() && r.checked > 0, "p = {p}, n = {n}");
            }
        }
    }

    #[test]
    fn iso_check_examples() {
        for p in [2u64, 3, 5] {
            for n in [1usize, 2] {
                let l = ChartLifting::standard(Prime::new(p).unwrap(), n);
                assert!(theorem_iso_check(&l, 1, 20).unwrap().passed());
            }
        }
        let prime = Prime::new(2).unwrap();
        let l = ChartLifting::new(
            prime.clone(),
            vec![MultiPoly::from_terms(
                Zmod::zp2(prime),
                1,
                [(vec![2], 1), (vec![3], 2)],
            )],
        )
        .unwrap();
        assert!(theorem_iso_check(&l, 2, 30).unwrap().passed());
    }

    #[test]
    fn corrupted_splitting_fails_section() {
        let l = ChartLifting::standard(Prime::new(3).unwrap(), 2);
        let sigma = TraceSplitting::from_lifting(&l).unwrap();
        let bad = TraceSplitting::new(sigma.key().scale(2)).unwrap();
        let report = theorem_iso_check_with(&l, &bad, 3, 20).unwrap();
        assert!(!report.section);
        assert!(report.failures().contains(&"section"));
        assert!(CanonicalLiftRing::new(bad).is_err());
    }
}

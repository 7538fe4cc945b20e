//! Ideals of `F_p[x]` and `Z/p^2[x]` given by generators, with Groebner-basis
//! decision procedures.
//!
//! Groebner bases are only ever computed over `F_p`. Membership over `Z/p^2`
//! reduces to two `F_p` membership tests (see [`member_mod_p2`]): a solution
//! mod `p` is corrected by syzygies of the reduced generators, and the
//! leftover `p`-divisible residual is tested against the reduced ideal
//! enlarged by the syzygy corrections.

mod groebner;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

pub use groebner::{GroebnerBasis, MonomialOrder};

use crate::poly::{Level, MultiPoly, PolyError, Zmod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("operation requires coefficients mod p")]
    NotOverField,
    #[error("operation requires coefficients mod p^2")]
    NotOverSquare,
    #[error("cannot take the colon by the zero polynomial")]
    ZeroDivisor,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finite generating set over `F_p` or `Z/p^2`. Zero generators are dropped.
///
/// The Groebner basis of the mod-`p` reduction is computed on first use and
/// cached; after that the value is read-only.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ring: Zmod,
    nvars: usize,
    generators: Vec<MultiPoly>,
    basis: OnceLock<GroebnerBasis>,
}

/// Vectors `s` with `sum_a s_a G_a = 0` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyBasis {
    pub syzygies: Vec<Vec<MultiPoly>>,
}

impl IdealPresentation {
    pub fn new(generators: Vec<MultiPoly>) -> Result<Self, IdealError> {
        let first = generators.first().ok_or(IdealError::NoGenerators)?;
        let ring = first.ring().clone();
        let nvars = first.nvars();
        for g in &generators[1..] {
            first.check_compatible(g)?;
        }
        Ok(IdealPresentation {
            ring,
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    /// The zero ideal in a given ring (no generators).
    pub fn zero(ring: Zmod, nvars: usize) -> Self {
        IdealPresentation {
            ring,
            nvars,
            generators: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Zmod {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// Generators reduced mod `p` (positions preserved, zeros kept).
    pub fn reduced_generators(&self) -> Vec<MultiPoly> {
        self.generators
            .iter()
            .map(MultiPoly::reduce_mod_p)
            .collect()
    }

    /// Reduced degrevlex Groebner basis of the mod-`p` reduction, tracking
    /// cofactors over the stored generators. `None` for the zero ideal mod `p`.
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        let reduced = self.reduced_generators();
        if reduced.iter().all(MultiPoly::is_zero) {
            return None;
        }
        Some(
            self.basis
                .get_or_init(|| GroebnerBasis::compute(&reduced, MonomialOrder::DegRevLex, true)),
        )
    }

    /// Checks that the cached basis and the generators span the same ideal mod `p`.
    pub fn verify_basis(&self) -> bool {
        let Some(gb) = self.basis() else {
            return true;
        };
        let gens = self.reduced_generators();
        let gens_in_basis = gens.iter().all(|g| gb.contains(g));
        let basis_in_gens = match gb.representations() {
            Some(reps) => gb.polys().iter().zip(reps).all(|(b, rep)| {
                let mut acc = MultiPoly::zero(self.ring.to_fp(), self.nvars);
                for (c, g) in rep.iter().zip(&gens) {
                    acc = &acc + &(c * g);
                }
                &acc == b
            }),
            None => false,
        };
        gens_in_basis && basis_in_gens
    }

    fn require_field(&self) -> Result<(), IdealError> {
        if self.ring.level() != Level::ModP {
            return Err(IdealError::NotOverField);
        }
        Ok(())
    }

    /// Reduced Groebner basis (degrevlex) as polynomials.
    pub fn buchberger(&self) -> Result<Vec<MultiPoly>, IdealError> {
        self.require_field()?;
        Ok(self.basis().map(GroebnerBasis::polys).unwrap_or_default())
    }

    /// Ideal membership over `F_p` via normal form.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool, IdealError> {
        self.require_field()?;
        self.generators
            .first()
            .map_or(Ok(()), |g| g.check_compatible(f))?;
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.basis().is_some_and(|gb| gb.contains(f)))
    }

    /// All `k`-fold products of generators (`k >= 1`), deduplicated.
    pub fn power(&self, k: u32) -> IdealPresentation {
        assert!(k >= 1, "ideal power exponent must be positive");
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        let n = self.generators.len();
        // multisets of size k from n generators, as nondecreasing index lists
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(idx) = stack.pop() {
            if idx.len() == k as usize {
                out.insert(idx);
                continue;
            }
            let last = *idx.last().unwrap();
            for j in last..n {
                let mut next = idx.clone();
                next.push(j);
                stack.push(next);
            }
        }
        let mut gens = Vec::new();
        let mut seen = BTreeSet::new();
        for idx in out {
            let mut prod = MultiPoly::one(self.ring.clone(), self.nvars);
            for i in idx {
                prod = &prod * &self.generators[i];
            }
            if !prod.is_zero() && seen.insert(format!("{prod}")) {
                gens.push(prod);
            }
        }
        self.with_generators(gens)
    }

    /// The Frobenius power `I^[p] = (g^p : g a generator)`.
    pub fn frobenius_power(&self) -> IdealPresentation {
        let p = self.ring.p() as u32;
        self.with_generators(self.generators.iter().map(|g| g.pow(p)).collect())
    }

    fn with_generators(&self, generators: Vec<MultiPoly>) -> IdealPresentation {
        IdealPresentation {
            ring: self.ring.clone(),
            nvars: self.nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        }
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &IdealPresentation) -> IdealPresentation {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        self.with_generators(gens)
    }

    /// `(I : g)` over `F_p`, via `I ∩ (g) = elim_t(t I + (1 - t) g)` followed by
    /// exact division by `g`.
    pub fn colon(&self, g: &MultiPoly) -> Result<IdealPresentation, IdealError> {
        self.require_field()?;
        if g.is_zero() {
            return Err(IdealError::ZeroDivisor);
        }
        if self.generators.is_empty() {
            return Ok(self.clone());
        }
        self.generators[0].check_compatible(g)?;
        if g.is_constant() {
            return Ok(self.clone());
        }
        let n = self.nvars;
        let big = n + 1;
        let t = MultiPoly::var(self.ring.clone(), big, 0);
        let one = MultiPoly::one(self.ring.clone(), big);
        let mut gens: Vec<MultiPoly> = self
            .generators
            .iter()
            .map(|f| &t * &f.shift_variables(1, big))
            .collect();
        gens.push(&(&one - &t) * &g.shift_variables(1, big));
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::Elimination(1), false);
        let mut quotients = Vec::new();
        for h in gb.polys() {
            if h.degree_in(0) != 0 {
                continue;
            }
            let h = h.drop_variable(0).expect("t-free element");
            let q = h
                .div_exact(g)
                .expect("elements of I ∩ (g) are divisible by g");
            quotients.push(q);
        }
        let colon = self.with_generators(quotients);
        // present the result by its reduced basis
        let reduced = colon.buchberger()?;
        Ok(self.with_generators(reduced))
    }

    /// Generators of the syzygy module of the mod-`p` generators.
    ///
    /// With `G = F A` (basis over generators) and `F = G B` (generators
    /// reduced by the basis), the module is generated by `A s` for the
    /// Schreyer syzygies `s` of the basis together with the columns of
    /// `1 - A B`. Every returned vector is checked to be an exact syzygy.
    pub fn syzygies(&self) -> SyzygyBasis {
        let gens = self.reduced_generators();
        let m = gens.len();
        let fp = self.ring.to_fp();
        let zero = MultiPoly::zero(fp.clone(), self.nvars);
        let mut out: Vec<Vec<MultiPoly>> = Vec::new();

        // generators vanishing mod p are syzygies on their own
        for (a, g) in gens.iter().enumerate() {
            if g.is_zero() {
                let mut v = vec![zero.clone(); m];
                v[a] = MultiPoly::one(fp.clone(), self.nvars);
                out.push(v);
            }
        }

        if let Some(gb) = self.basis() {
            let reps = gb.representations().expect("tracked basis");
            let t = reps.len();
            let apply_a = |s: &[MultiPoly]| -> Vec<MultiPoly> {
                let mut v = vec![zero.clone(); m];
                for k in 0..t {
                    if s[k].is_zero() {
                        continue;
                    }
                    for a in 0..m {
                        v[a] = &v[a] + &(&s[k] * &reps[k][a]);
                    }
                }
                v
            };
            for s in gb.basis_syzygies() {
                out.push(apply_a(&s));
            }
            for (a, g) in gens.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                // B e_a: g_a written over the basis
                let (r, b_col) = gb.divide_by_basis(g);
                debug_assert!(r.is_zero());
                let ab = apply_a(&b_col);
                let mut col: Vec<MultiPoly> = ab.iter().map(|c| -c).collect();
                col[a] = &col[a] + &MultiPoly::one(fp.clone(), self.nvars);
                out.push(col);
            }
        }

        let mut seen = BTreeSet::new();
        let syzygies: Vec<Vec<MultiPoly>> = out
            .into_iter()
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .filter(|v| seen.insert(v.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            .collect();
        for v in &syzygies {
            let mut acc = zero.clone();
            for (c, g) in v.iter().zip(&gens) {
                acc = &acc + &(c * g);
            }
            assert!(acc.is_zero(), "computed vector is not a syzygy");
        }
        SyzygyBasis { syzygies }
    }
}

/// Decides `f ∈ J` over `Z/p^2`.
///
/// 1. Write `f mod p = sum_a q_a G_a` (false if impossible).
/// 2. `r = (f - sum_a lift(q_a) G~_a) / p`.
/// 3. For each syzygy `s` of the `G_a`, `w_s = (sum_a lift(s_a) G~_a) / p`.
/// 4. `f ∈ J` iff `r ∈ (G_a) + (w_s)` over `F_p`.
pub fn member_mod_p2(f: &MultiPoly, ideal: &IdealPresentation) -> Result<bool, IdealError> {
    Ok(member_mod_p2_certificate(f, ideal)?.is_some())
}

/// Like [`member_mod_p2`], returning the mod-`p` cofactors and residual on success.
pub fn member_mod_p2_certificate(
    f: &MultiPoly,
    ideal: &IdealPresentation,
) -> Result<Option<(Vec<MultiPoly>, MultiPoly)>, IdealError> {
    if f.ring().level() != Level::ModP2 || ideal.ring().level() != Level::ModP2 {
        return Err(IdealError::NotOverSquare);
    }
    if f.ring() != ideal.ring() {
        return Err(PolyError::RingMismatch {
            left: f.ring().clone(),
            right: ideal.ring().clone(),
        }
        .into());
    }
    if f.nvars() != ideal.nvars() {
        return Err(PolyError::ArityMismatch {
            left: f.nvars(),
            right: ideal.nvars(),
        }
        .into());
    }
    let fp = f.ring().to_fp();
    let n = f.nvars();
    let gens = ideal.generators();
    if gens.is_empty() {
        return Ok(f.is_zero().then(|| (Vec::new(), MultiPoly::zero(fp, n))));
    }

    let f0 = f.reduce_mod_p();
    let q0 = match ideal.basis() {
        Some(gb) => {
            let (rem, q) = gb.reduce_with_cofactors(&f0);
            if !rem.is_zero() {
                return Ok(None);
            }
            q
        }
        None => {
            if !f0.is_zero() {
                return Ok(None);
            }
            vec![MultiPoly::zero(fp.clone(), n); gens.len()]
        }
    };

    let mut combo = f.clone();
    for (q, g) in q0.iter().zip(gens) {
        combo = &combo - &(&q.lift_mod_p2() * g);
    }
    let residual = combo.divide_by_p()?;

    let mut enlarged: Vec<MultiPoly> = ideal.reduced_generators();
    for s in ideal.syzygies().syzygies {
        let mut acc = MultiPoly::zero(f.ring().clone(), n);
        for (c, g) in s.iter().zip(gens) {
            acc = &acc + &(&c.lift_mod_p2() * g);
        }
        enlarged.push(acc.divide_by_p()?);
    }
    let test = IdealPresentation::new(enlarged)?;
    Ok(test.contains(&residual)?.then_some((q0, residual)))
}

//! Seeded generators for polynomials, liftings and maps.

use rand::Rng;

use crate::lift::ChartLifting;
use crate::poly::{Monomial, MultiPoly, Zmod};
use crate::prime::Prime;

/// Up to `max_terms` random terms of total degree at most `max_degree`.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Zmod,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> MultiPoly {
    let mut out = MultiPoly::zero(ring.clone(), nvars);
    let count = rng.gen_range(0..=max_terms);
    for _ in 0..count {
        let m = random_monomial(rng, nvars, max_degree);
        let c = rng.gen_range(0..ring.modulus()) as i64;
        out = &out + &MultiPoly::term(ring.clone(), m, c);
    }
    out
}

/// Like [`random_poly`] but never zero.
pub fn random_nonzero_poly<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Zmod,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> MultiPoly {
    loop {
        let f = random_poly(rng, ring, nvars, max_degree, max_terms.max(1));
        if !f.is_zero() {
            return f;
        }
    }
}

/// Homogeneous of the given degree (possibly zero).
pub fn random_homogeneous<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Zmod,
    nvars: usize,
    degree: u32,
    max_terms: usize,
) -> MultiPoly {
    let mut out = MultiPoly::zero(ring.clone(), nvars);
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut e = vec![0u32; nvars];
        for _ in 0..degree {
            e[rng.gen_range(0..nvars)] += 1;
        }
        let c = rng.gen_range(0..ring.modulus()) as i64;
        out = &out + &MultiPoly::term(ring.clone(), Monomial::new(e), c);
    }
    out
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; nvars];
    if nvars > 0 {
        for _ in 0..degree {
            e[rng.gen_range(0..nvars)] += 1;
        }
    }
    Monomial::new(e)
}

/// `F~*(x~_i) = x~_i^p + p delta_i` with random deltas.
pub fn random_lifting<R: Rng + ?Sized>(
    rng: &mut R,
    prime: &Prime,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> ChartLifting {
    let ring = Zmod::fp(prime.clone());
    let deltas = (0..nvars)
        .map(|_| random_poly(rng, &ring, nvars, max_degree, max_terms))
        .collect();
    ChartLifting::from_deltas(prime.clone(), deltas).expect("well-formed deltas")
}

/// A lifting compatible with `x_1 ... x_r = 0`: `F~*(x~_i) = x~_i^p (1 + p v_i)`
/// for `i < r`, random deltas for the remaining coordinates.
pub fn random_log_lifting<R: Rng + ?Sized>(
    rng: &mut R,
    prime: &Prime,
    nvars: usize,
    log_rank: usize,
    max_degree: u32,
    max_terms: usize,
) -> ChartLifting {
    let fp = Zmod::fp(prime.clone());
    let p = prime.get() as u32;
    let deltas = (0..nvars)
        .map(|i| {
            let v = random_poly(rng, &fp, nvars, max_degree, max_terms);
            if i < log_rank {
                &MultiPoly::var(fp.clone(), nvars, i).pow(p) * &v
            } else {
                v
            }
        })
        .collect();
    ChartLifting::from_deltas(prime.clone(), deltas).expect("well-formed deltas")
}

/// A map `A^source -> A^target` whose components are single terms `c x^a`.
pub fn random_monomial_map<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Zmod,
    source: usize,
    target: usize,
    max_degree: u32,
) -> Vec<MultiPoly> {
    (0..target)
        .map(|_| {
            let m = random_monomial(rng, source, max_degree);
            let c = rng.gen_range(1..ring.modulus()) as i64;
            MultiPoly::term(ring.clone(), m, c)
        })
        .collect()
}

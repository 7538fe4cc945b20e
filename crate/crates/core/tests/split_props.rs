mod common;

use common::{fp, prime};
use froblift::random::{random_lifting, random_poly};
use froblift::{
    group_average, trace_form_from_map, CanonicalLiftRing, GroupAction, Monomial, MultiPoly,
    TraceSplitting,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn corner(p: u64, n: usize) -> MultiPoly {
    MultiPoly::term(fp(p), Monomial::new(vec![p as u32 - 1; n]), 1)
}

/// A random key polynomial with `Tr(u) = 1`.
fn random_unital(rng: &mut StdRng, p: u64, n: usize) -> TraceSplitting {
    let r = random_poly(rng, &fp(p), n, 3 * p as u32, 5);
    let correction = &corner(p, n) * &r.monomial_trace().pow(p as u32);
    TraceSplitting::new(&(&corner(p, n) + &r) - &correction).unwrap()
}

#[test]
fn splittings_are_p_inverse_linear() {
    let mut rng = StdRng::seed_from_u64(41);
    for round in 0..100 {
        let p = [2u64, 3, 5][round % 3];
        let s = TraceSplitting::new(random_poly(&mut rng, &fp(p), 2, 8, 6)).unwrap();
        let f = random_poly(&mut rng, &fp(p), 2, 3, 3);
        let g = random_poly(&mut rng, &fp(p), 2, 6, 5);
        assert_eq!(s.evaluate(&(&f.pow(p as u32) * &g)), &f * &s.evaluate(&g));
    }
}

#[test]
fn trace_form_roundtrip() {
    let mut rng = StdRng::seed_from_u64(42);
    for p in [2u64, 3, 5] {
        for _ in 0..50 {
            let n = rng.gen_range(1..=3);
            let u = random_poly(&mut rng, &fp(p), n, 10, 6);
            let s = TraceSplitting::new(u.clone()).unwrap();
            let back = trace_form_from_map(&prime(p), n, 64, |f| s.evaluate(f)).unwrap();
            assert_eq!(back, u);
        }
    }
}

#[test]
fn random_unital_keys_are_unital() {
    let mut rng = StdRng::seed_from_u64(43);
    for p in [2u64, 3, 5] {
        for _ in 0..20 {
            assert!(random_unital(&mut rng, p, 2).is_unital());
        }
    }
}

#[test]
fn averaging_produces_invariant_unital_splittings() {
    let mut rng = StdRng::seed_from_u64(44);
    let groups: Vec<(u64, GroupAction)> = {
        let swap = |p: u64| {
            let x = MultiPoly::var(fp(p), 2, 0);
            let y = MultiPoly::var(fp(p), 2, 1);
            GroupAction::new(vec![vec![x.clone(), y.clone()], vec![y, x]]).unwrap()
        };
        let signs = |p: u64| {
            let x = MultiPoly::var(fp(p), 2, 0);
            let y = MultiPoly::var(fp(p), 2, 1);
            let maps = vec![
                vec![x.clone(), y.clone()],
                vec![-&x, y.clone()],
                vec![x.clone(), -&y],
                vec![-&x, -&y],
            ];
            GroupAction::new(maps).unwrap()
        };
        vec![(3, swap(3)), (5, swap(5)), (3, signs(3)), (5, signs(5))]
    };
    for (p, group) in &groups {
        for _ in 0..5 {
            let s = random_unital(&mut rng, *p, 2);
            let avg = group_average(&s, group).unwrap();
            assert!(avg.is_unital());
            let probes: Vec<MultiPoly> = (0..20)
                .map(|_| random_poly(&mut rng, &fp(*p), 2, 6, 4))
                .collect();
            assert!(group.is_invariant(&avg, &probes));
            // averaging an invariant splitting changes nothing
            assert_eq!(group_average(&avg, group).unwrap(), avg);
        }
    }
}

#[test]
fn canonical_lift_reduction_is_a_ring_map() {
    let mut rng = StdRng::seed_from_u64(45);
    for p in [2u64, 3] {
        let ring = CanonicalLiftRing::new(random_unital(&mut rng, p, 2)).unwrap();
        for _ in 0..50 {
            let mut pair = || {
                ring.normal_form(
                    &random_poly(&mut rng, &fp(p), 2, 4, 3),
                    &random_poly(&mut rng, &fp(p), 2, 4, 3),
                )
            };
            let (a, b) = (pair(), pair());
            let sum = ring.add(&a, &b).unwrap();
            let prod = ring.mul(&a, &b).unwrap();
            assert_eq!(ring.reduction(&sum), &a.f0 + &b.f0);
            assert_eq!(ring.reduction(&prod), &a.f0 * &b.f0);
            // the second component of a normal form is a p-th power of sigma of itself
            assert_eq!(ring.normal_form(&sum.f0, &sum.f1), sum);
        }
    }
}

#[test]
fn canonical_lifts_of_lifting_splittings_are_flat() {
    let mut rng = StdRng::seed_from_u64(46);
    for p in [2u64, 3] {
        for _ in 0..3 {
            let l = random_lifting(&mut rng, &prime(p), 1, 3, 3);
            let s = TraceSplitting::from_lifting(&l).unwrap();
            let ring = CanonicalLiftRing::new(s).unwrap();
            assert!(ring.flatness_check(2 * p as u32).passed());
            assert!(froblift::theorem_iso_check(&l, 5, 15).unwrap().passed());
        }
    }
}

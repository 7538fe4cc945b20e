mod common;

use common::{fp, zp2};
use froblift::random::random_poly;
use froblift::{default_var_names, parse_poly, MultiPoly, Zmod};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ring_for(p: u64, square: bool) -> Zmod {
    if square {
        zp2(p)
    } else {
        fp(p)
    }
}

proptest! {
    #[test]
    fn ring_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7]), square in any::<bool>(), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = ring_for(p, square);
        let mut r = || random_poly(&mut rng, &ring, 3, 4, 5);
        let (a, b, c) = (r(), r(), r());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(ring.clone(), 3), a.clone());
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn frobenius_is_additive_mod_p(p in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = fp(p);
        let a = random_poly(&mut rng, &ring, 2, 3, 4);
        let b = random_poly(&mut rng, &ring, 2, 3, 4);
        let k = p as u32;
        prop_assert_eq!((&a + &b).pow(k), &a.pow(k) + &b.pow(k));
    }

    #[test]
    fn trace_is_p_inverse_linear(p in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = fp(p);
        let f = random_poly(&mut rng, &ring, 2, 8, 6);
        let h = random_poly(&mut rng, &ring, 2, 8, 6);
        let g = random_poly(&mut rng, &ring, 2, 2, 3);
        prop_assert_eq!((&g.pow(p as u32) * &f).monomial_trace(), &g * &f.monomial_trace());
        prop_assert_eq!((&f + &h).monomial_trace(), &f.monomial_trace() + &h.monomial_trace());
        let corner = MultiPoly::from_terms(ring.clone(), 2, [(vec![p as u32 - 1; 2], 1)]);
        prop_assert_eq!((&corner * &g.pow(p as u32)).monomial_trace(), g);
    }

    #[test]
    fn lift_then_reduce(p in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_poly(&mut rng, &fp(p), 3, 4, 5);
        prop_assert_eq!(f.lift_mod_p2().reduce_mod_p(), f.clone());
        prop_assert_eq!(f.times_p().divide_by_p()?, f);
    }

    #[test]
    fn leibniz_rule(p in prop::sample::select(vec![3u64, 5, 7]), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = fp(p);
        let a = random_poly(&mut rng, &ring, 2, 4, 4);
        let b = random_poly(&mut rng, &ring, 2, 4, 4);
        for i in 0..2 {
            let lhs = (&a * &b).partial_derivative(i)?;
            let rhs = &(&a.partial_derivative(i)? * &b) + &(&a * &b.partial_derivative(i)?);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn parse_print_parse_fixed_point() {
    let mut rng = StdRng::seed_from_u64(21);
    let custom: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    for round in 0..200 {
        let p = [2u64, 3, 5, 7][round % 4];
        let ring = ring_for(p, rng.gen());
        let n = rng.gen_range(1..=3);
        let names = if rng.gen() {
            default_var_names(n)
        } else {
            custom[..n].to_vec()
        };
        let f = random_poly(&mut rng, &ring, n, 6, 6);
        let text = f.display_with(&names).to_string();
        let g = parse_poly(&text, &names, &ring).unwrap();
        assert_eq!(g, f, "{text}");
        assert_eq!(g.display_with(&names).to_string(), text);
    }
}

#[test]
fn evaluation_is_a_ring_map() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..100 {
        let ring = zp2(3);
        let a = random_poly(&mut rng, &ring, 2, 4, 4);
        let b = random_poly(&mut rng, &ring, 2, 4, 4);
        let pt = [rng.gen_range(0..9), rng.gen_range(0..9)];
        assert_eq!(
            (&a * &b).evaluate(&pt),
            a.evaluate(&pt) * b.evaluate(&pt) % 9
        );
        assert_eq!(
            (&a + &b).evaluate(&pt),
            (a.evaluate(&pt) + b.evaluate(&pt)) % 9
        );
    }
}

#[test]
fn substitution_composes() {
    let mut rng = StdRng::seed_from_u64(23);
    let ring = fp(5);
    for _ in 0..50 {
        let f = random_poly(&mut rng, &ring, 2, 3, 4);
        let g: Vec<MultiPoly> = (0..2)
            .map(|_| random_poly(&mut rng, &ring, 2, 2, 3))
            .collect();
        let h: Vec<MultiPoly> = (0..2)
            .map(|_| random_poly(&mut rng, &ring, 1, 2, 3))
            .collect();
        let gh: Vec<MultiPoly> = g.iter().map(|gi| gi.substitute(&h).unwrap()).collect();
        let lhs = f.substitute(&g).unwrap().substitute(&h).unwrap();
        assert_eq!(lhs, f.substitute(&gh).unwrap());
    }
}

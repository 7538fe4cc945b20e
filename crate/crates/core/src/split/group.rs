use crate::poly::{Level, MultiPoly};
use crate::prime::Prime;

use super::{trace_form_from_map, SplitError, TraceSplitting};

/// A finite group acting on `F_p[x_1, ..., x_n]` by substitution.
///
/// The element `g` with images `(g_1, ..., g_n)` acts by `g·f = f(g_1, ..., g_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    prime: Prime,
    nvars: usize,
    maps: Vec<Vec<MultiPoly>>,
    inverses: Vec<usize>,
}

impl GroupAction {
    pub fn new(maps: Vec<Vec<MultiPoly>>) -> Result<Self, SplitError> {
        let invalid = |msg: &str| SplitError::InvalidGroup(msg.to_string());
        let first = maps
            .first()
            .and_then(|m| m.first())
            .ok_or_else(|| invalid("empty group"))?;
        let prime = first.prime().clone();
        let nvars = first.nvars();
        for m in &maps {
            if m.len() != nvars {
                return Err(invalid("every map needs one image per variable"));
            }
            for g in m {
                if g.nvars() != nvars || g.prime() != &prime || g.ring().level() != Level::ModP {
                    return Err(invalid("images must be polynomials mod p in the same ring"));
                }
            }
        }
        let ring = first.ring().clone();
        let identity: Vec<MultiPoly> = (0..nvars)
            .map(|i| MultiPoly::var(ring.clone(), nvars, i))
            .collect();
        let index = |target: &[MultiPoly]| maps.iter().position(|m| m.as_slice() == target);
        let identity_at = index(&identity).ok_or_else(|| invalid("identity missing"))?;

        let mut inverses = Vec::with_capacity(maps.len());
        for g in &maps {
            let mut inverse = None;
            for h in &maps {
                let c = compose(g, h)?;
                index(&c).ok_or_else(|| invalid("not closed under composition"))?;
                if index(&c) == Some(identity_at) && inverse.is_none() {
                    inverse = index(h);
                }
            }
            inverses.push(inverse.ok_or_else(|| invalid("element without inverse"))?);
        }
        let order = maps.len();
        if (order as u64).is_multiple_of(prime.get()) {
            return Err(SplitError::OrderDivisibleByP {
                order,
                p: prime.get(),
            });
        }
        Ok(GroupAction {
            prime,
            nvars,
            maps,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn prime(&self) -> &Prime {
        &self.prime
    }

    pub fn maps(&self) -> &[Vec<MultiPoly>] {
        &self.maps
    }

    /// `g·f` for the element at index `g`.
    pub fn act(&self, g: usize, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.maps[g])
            .expect("arity checked on construction")
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// Whether `sigma(g·f) = g·sigma(f)` on the given probes.
    pub fn is_invariant(&self, sigma: &TraceSplitting, probes: &[MultiPoly]) -> bool {
        (0..self.order()).all(|g| {
            probes
                .iter()
                .all(|f| sigma.evaluate(&self.act(g, f)) == self.act(g, &sigma.evaluate(f)))
        })
    }

    /// `f -> |G|^-1 sum_g g^-1·sigma(g·f)`, returned in trace form.
    pub fn average(&self, sigma: &TraceSplitting) -> Result<TraceSplitting, SplitError> {
        if sigma.nvars() != self.nvars || sigma.prime() != &self.prime {
            return Err(SplitError::InvalidGroup(
                "group and splitting live on different rings".to_string(),
            ));
        }
        let p = self.prime.get();
        let inv_order = crate::prime::inv_mod(self.order() as u64 % p, p);
        let averaged = |f: &MultiPoly| {
            let mut acc = MultiPoly::zero(f.ring().clone(), self.nvars);
            for g in 0..self.order() {
                let inner = sigma.evaluate(&self.act(g, f));
                acc = &acc + &self.act(self.inverse(g), &inner);
            }
            acc.scale(inv_order)
        };
        // images of degree d move degrees by at most a factor d
        let stretch = self
            .maps
            .iter()
            .flatten()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(1)
            .max(1);
        let base = sigma.key().total_degree().unwrap_or(0) + self.nvars as u64 * (p - 1);
        let cap = base.saturating_mul(stretch).saturating_mul(stretch);
        let key = trace_form_from_map(&self.prime, self.nvars, cap, averaged)?;
        TraceSplitting::new(key)
    }
}

/// The map `c` with `c·f = g·(h·f)`.
fn compose(g: &[MultiPoly], h: &[MultiPoly]) -> Result<Vec<MultiPoly>, SplitError> {
    h.iter()
        .map(|hi| hi.substitute(g).map_err(SplitError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Zmod};

    fn fp(p: u64) -> Zmod {
        Zmod::fp(Prime::new(p).unwrap())
    }

    fn identity(p: u64, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(fp(p), n, i)).collect()
    }

    #[test]
    fn trivial_group_keeps_splitting() {
        let g = GroupAction::new(vec![identity(3, 2)]).unwrap();
        let s = TraceSplitting::standard(Prime::new(3).unwrap(), 2);
        assert_eq!(g.average(&s).unwrap(), s);
    }

    #[test]
    fn swap_fixes_symmetric_key() {
        let id = identity(3, 2);
        let swap = vec![id[1].clone(), id[0].clone()];
        let g = GroupAction::new(vec![id, swap]).unwrap();
        let s = TraceSplitting::standard(Prime::new(3).unwrap(), 2);
        assert_eq!(g.average(&s).unwrap(), s);
    }

    #[test]
    fn sign_group_average_is_invariant() {
        let x = MultiPoly::var(fp(3), 1, 0);
        let g = GroupAction::new(vec![vec![x.clone()], vec![-&x]]).unwrap();
        let u = MultiPoly::from_terms(fp(3), 1, [(vec![2], 1), (vec![4], 1), (vec![5], 2)]);
        let s = TraceSplitting::new(u).unwrap();
        let avg = g.average(&s).unwrap();
        assert!(avg.is_unital());
        let probes: Vec<MultiPoly> = (0..20)
            .map(|k| MultiPoly::term(fp(3), Monomial::new(vec![k]), 1 + k as i64 % 2))
            .collect();
        assert!(g.is_invariant(&avg, &probes));
        assert!(!g.is_invariant(&s, &probes));
    }

    #[test]
    fn rejects_bad_groups() {
        let x = MultiPoly::var(fp(2), 1, 0);
        let y = MultiPoly::var(fp(3), 2, 1);
        let xs = MultiPoly::var(fp(3), 2, 0);
        // order two over F_2
        assert!(matches!(
            GroupAction::new(vec![vec![x.clone()], vec![x.scale(1)]]),
            Err(SplitError::OrderDivisibleByP { order: 2, p: 2 })
        ));
        // order three cyclic permutation on F_3
        let z = |i| MultiPoly::var(fp(3), 3, i);
        let c1 = vec![z(1), z(2), z(0)];
        let c2 = vec![z(2), z(0), z(1)];
        assert!(matches!(
            GroupAction::new(vec![identity(3, 3), c1, c2]),
            Err(SplitError::OrderDivisibleByP { order: 3, p: 3 })
        ));
        // not closed
        assert!(matches!(
            GroupAction::new(vec![identity(3, 2), vec![y.clone(), y.clone()]]),
            Err(SplitError::InvalidGroup(_))
        ));
        // no identity
        assert!(matches!(
            GroupAction::new(vec![vec![y, xs]]),
            Err(SplitError::InvalidGroup(_))
        ));
    }
}

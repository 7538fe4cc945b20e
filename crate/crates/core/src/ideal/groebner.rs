//! Buchberger's algorithm over `F_p` with optional cofactor tracking.

use std::cmp::Ordering;

use crate::poly::{degrevlex, Monomial, MultiPoly, Zmod};

/// Term orders supported by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Block order eliminating the first `k` variables: degrevlex on the
    /// first block, ties broken by degrevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elimination(k) => {
                let (a1, a2) = a.exponents().split_at(k);
                let (b1, b2) = b.exponents().split_at(k);
                degrevlex(a1, b1).then_with(|| degrevlex(a2, b2))
            }
        }
    }
}

/// Terms in ascending order under some [`MonomialOrder`]; the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Sparse {
    terms: Vec<(Monomial, u64)>,
}

impl Sparse {
    pub(crate) fn from_poly(f: &MultiPoly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, u64)> = f.terms().map(|(m, c)| (m.clone(), c)).collect();
        if order != MonomialOrder::DegRevLex {
            terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        }
        Sparse { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Zmod, nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(
            ring.clone(),
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.exponents().to_vec(), *c as i64)),
        )
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> Option<&(Monomial, u64)> {
        self.terms.last()
    }

    fn scale(&mut self, c: u64, ring: &Zmod) {
        for t in &mut self.terms {
            t.1 = ring.mul(t.1, c);
        }
        self.terms.retain(|t| t.1 != 0);
    }

    /// `self += c * shift * other`.
    fn axpy(
        &mut self,
        c: u64,
        shift: &Monomial,
        other: &Sparse,
        order: MonomialOrder,
        ring: &Zmod,
    ) {
        if c == 0 || other.terms.is_empty() {
            return;
        }
        let shifted = other.terms.iter().map(|(m, a)| {
            (
                m.checked_mul(shift)
                    .expect("exponent overflow in reduction"),
                ring.mul(*a, c),
            )
        });
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut right = shifted.peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
            };
            match ord {
                Ordering::Less => out.push(left.next().unwrap()),
                Ordering::Greater => out.push(right.next().unwrap()),
                Ordering::Equal => {
                    let (m, a) = left.next().unwrap();
                    let (_, b) = right.next().unwrap();
                    let s = ring.add(a, b);
                    if s != 0 {
                        out.push((m, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    fn push_lowest_first(terms: Vec<(Monomial, u64)>) -> Sparse {
        Sparse { terms }
    }
}

/// Result of dividing a polynomial by an ordered list of polynomials.
pub(crate) struct Division {
    pub remainder: Sparse,
    pub quotients: Vec<Sparse>,
}

pub(crate) fn divide(
    f: &Sparse,
    divisors: &[Sparse],
    skip: Option<usize>,
    order: MonomialOrder,
    ring: &Zmod,
    track: bool,
) -> Division {
    let mut h = f.clone();
    let mut rem_desc = Vec::new();
    let mut quot_desc: Vec<Vec<(Monomial, u64)>> = vec![Vec::new(); divisors.len()];
    while let Some((m, c)) = h.terms.last().cloned() {
        let hit = divisors.iter().enumerate().find_map(|(k, g)| {
            if Some(k) == skip {
                return None;
            }
            let (lm, lc) = g.lead()?;
            lm.quotient_of(&m).map(|shift| (k, shift, *lc))
        });
        match hit {
            Some((k, shift, lc)) => {
                let q = ring.mul(c, ring.inv(lc).expect("field coefficient"));
                h.axpy(ring.neg(q), &shift, &divisors[k], order, ring);
                if track {
                    quot_desc[k].push((shift, q));
                }
            }
            None => {
                h.terms.pop();
                rem_desc.push((m, c));
            }
        }
    }
    rem_desc.reverse();
    Division {
        remainder: Sparse::push_lowest_first(rem_desc),
        quotients: quot_desc
            .into_iter()
            .map(|mut q| {
                q.reverse();
                Sparse::push_lowest_first(q)
            })
            .collect(),
    }
}

/// A reduced Groebner basis, optionally remembering how each element is
/// written in terms of the generators it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: Zmod,
    nvars: usize,
    polys: Vec<Sparse>,
    /// `reps[k][a]`: coefficient of generator `a` in basis element `k`.
    reps: Option<Vec<Vec<Sparse>>>,
    ngens: usize,
}

impl GroebnerBasis {
    /// Reduced Groebner basis of the ideal generated by `gens` over `F_p`.
    ///
    /// Pairs are processed by the normal strategy (smallest lcm degree, then
    /// creation order) so the output depends only on the input list.
    pub fn compute(gens: &[MultiPoly], order: MonomialOrder, track: bool) -> GroebnerBasis {
        let first = gens.first().expect("at least one generator");
        let ring = first.ring().to_fp();
        let nvars = first.nvars();
        let ngens = gens.len();
        for g in gens {
            assert_eq!(g.nvars(), nvars, "generator arity");
            assert_eq!(g.ring(), &ring, "Groebner bases are computed over F_p");
        }

        let unit = |a: usize| {
            let mut v = vec![Sparse::default(); ngens];
            v[a] = Sparse::from_poly(&MultiPoly::one(ring.clone(), nvars), order);
            v
        };

        let mut polys: Vec<Sparse> = Vec::new();
        let mut reps: Vec<Vec<Sparse>> = Vec::new();
        for (a, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            polys.push(Sparse::from_poly(g, order));
            if track {
                reps.push(unit(a));
            }
        }

        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..polys.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }

        while !pairs.is_empty() {
            let (idx, _) = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, &(i, j))| {
                    let lcm = polys[i].lead().unwrap().0.lcm(&polys[j].lead().unwrap().0);
                    (lcm.degree(), j, i)
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(idx);
            let (lm_i, lc_i) = polys[i].lead().unwrap().clone();
            let (lm_j, lc_j) = polys[j].lead().unwrap().clone();
            if lm_i.is_coprime(&lm_j) {
                continue;
            }
            let lcm = lm_i.lcm(&lm_j);
            let si = lm_i.quotient_of(&lcm).unwrap();
            let sj = lm_j.quotient_of(&lcm).unwrap();
            let ci = ring.inv(lc_i).unwrap();
            let cj = ring.neg(ring.inv(lc_j).unwrap());
            let mut s = Sparse::default();
            s.axpy(ci, &si, &polys[i], order, &ring);
            s.axpy(cj, &sj, &polys[j], order, &ring);
            let div = divide(&s, &polys, None, order, &ring, track);
            if div.remainder.is_zero() {
                continue;
            }
            if track {
                let mut rep = vec![Sparse::default(); ngens];
                for a in 0..ngens {
                    rep[a].axpy(ci, &si, &reps[i][a], order, &ring);
                    rep[a].axpy(cj, &sj, &reps[j][a], order, &ring);
                    for (k, q) in div.quotients.iter().enumerate() {
                        for (qm, qc) in &q.terms {
                            rep[a].axpy(ring.neg(*qc), qm, &reps[k][a], order, &ring);
                        }
                    }
                }
                reps.push(rep);
            }
            polys.push(div.remainder);
            let new = polys.len() - 1;
            for i in 0..new {
                pairs.push((i, new));
            }
        }

        let mut gb = GroebnerBasis {
            order,
            ring,
            nvars,
            polys,
            reps: if track { Some(reps) } else { None },
            ngens,
        };
        gb.reduce();
        gb
    }

    /// Minimize, normalize to monic, interreduce, and sort by leading monomial.
    fn reduce(&mut self) {
        let n = self.polys.len();
        let keep: Vec<bool> = (0..n)
            .map(|k| {
                let lk = &self.polys[k].lead().unwrap().0;
                !(0..n).any(|l| {
                    if l == k {
                        return false;
                    }
                    let ll = &self.polys[l].lead().unwrap().0;
                    ll.divides(lk) && (ll != lk || l < k)
                })
            })
            .collect();
        let mut polys = Vec::new();
        let mut reps = Vec::new();
        for k in 0..n {
            if keep[k] {
                polys.push(std::mem::take(&mut self.polys[k]));
                if let Some(r) = &mut self.reps {
                    reps.push(std::mem::take(&mut r[k]));
                }
            }
        }
        let track = self.reps.is_some();
        for k in 0..polys.len() {
            let inv = self.ring.inv(polys[k].lead().unwrap().1).unwrap();
            polys[k].scale(inv, &self.ring);
            if track {
                for r in &mut reps[k] {
                    r.scale(inv, &self.ring);
                }
            }
        }
        for k in 0..polys.len() {
            let div = divide(&polys[k], &polys, Some(k), self.order, &self.ring, track);
            if track {
                let mut rep = std::mem::take(&mut reps[k]);
                for (l, q) in div.quotients.iter().enumerate() {
                    for (qm, qc) in &q.terms {
                        for a in 0..self.ngens {
                            let src = reps[l][a].clone();
                            rep[a].axpy(self.ring.neg(*qc), qm, &src, self.order, &self.ring);
                        }
                    }
                }
                reps[k] = rep;
            }
            polys[k] = div.remainder;
        }
        let mut idx: Vec<usize> = (0..polys.len()).collect();
        idx.sort_by(|&a, &b| {
            self.order
                .cmp(&polys[a].lead().unwrap().0, &polys[b].lead().unwrap().0)
        });
        self.polys = idx.iter().map(|&k| polys[k].clone()).collect();
        if track {
            self.reps = Some(idx.iter().map(|&k| reps[k].clone()).collect());
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lead().unwrap().0.is_one()
    }

    pub fn polys(&self) -> Vec<MultiPoly> {
        self.polys
            .iter()
            .map(|s| s.to_poly(&self.ring, self.nvars))
            .collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let s = Sparse::from_poly(&f.reduce_mod_p(), self.order);
        divide(&s, &self.polys, None, self.order, &self.ring, false)
            .remainder
            .to_poly(&self.ring, self.nvars)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Writes `f = sum_a c_a G_a + r` over the original generators `G_a`.
    /// Requires a tracked basis.
    pub fn reduce_with_cofactors(&self, f: &MultiPoly) -> (MultiPoly, Vec<MultiPoly>) {
        let reps = self.reps.as_ref().expect("basis computed without tracking");
        let s = Sparse::from_poly(&f.reduce_mod_p(), self.order);
        let div = divide(&s, &self.polys, None, self.order, &self.ring, true);
        let mut coeffs = vec![Sparse::default(); self.ngens];
        for (k, q) in div.quotients.iter().enumerate() {
            for (qm, qc) in &q.terms {
                for (a, c) in coeffs.iter_mut().enumerate() {
                    c.axpy(*qc, qm, &reps[k][a], self.order, &self.ring);
                }
            }
        }
        (
            div.remainder.to_poly(&self.ring, self.nvars),
            coeffs
                .iter()
                .map(|c| c.to_poly(&self.ring, self.nvars))
                .collect(),
        )
    }

    /// Division by the basis itself: `f = sum_k q_k B_k + r`.
    pub fn divide_by_basis(&self, f: &MultiPoly) -> (MultiPoly, Vec<MultiPoly>) {
        let s = Sparse::from_poly(&f.reduce_mod_p(), self.order);
        let div = divide(&s, &self.polys, None, self.order, &self.ring, true);
        (
            div.remainder.to_poly(&self.ring, self.nvars),
            div.quotients
                .iter()
                .map(|q| q.to_poly(&self.ring, self.nvars))
                .collect(),
        )
    }

    /// Basis elements written over the generators (`reps[k][a]`).
    pub fn representations(&self) -> Option<Vec<Vec<MultiPoly>>> {
        self.reps.as_ref().map(|reps| {
            reps.iter()
                .map(|row| {
                    row.iter()
                        .map(|c| c.to_poly(&self.ring, self.nvars))
                        .collect()
                })
                .collect()
        })
    }

    /// For every pair of basis elements, the Schreyer syzygy obtained by
    /// reducing their S-polynomial to zero, as a vector over the basis.
    pub(crate) fn basis_syzygies(&self) -> Vec<Vec<MultiPoly>> {
        let t = self.polys.len();
        let mut out = Vec::new();
        for j in 0..t {
            for i in 0..j {
                let (lm_i, lc_i) = self.polys[i].lead().unwrap().clone();
                let (lm_j, lc_j) = self.polys[j].lead().unwrap().clone();
                let lcm = lm_i.lcm(&lm_j);
                let si = lm_i.quotient_of(&lcm).unwrap();
                let sj = lm_j.quotient_of(&lcm).unwrap();
                let ci = self.ring.inv(lc_i).unwrap();
                let cj = self.ring.neg(self.ring.inv(lc_j).unwrap());
                let mut s = Sparse::default();
                s.axpy(ci, &si, &self.polys[i], self.order, &self.ring);
                s.axpy(cj, &sj, &self.polys[j], self.order, &self.ring);
                let div = divide(&s, &self.polys, None, self.order, &self.ring, true);
                debug_assert!(div.remainder.is_zero());
                let mut vec: Vec<Sparse> = div
                    .quotients
                    .into_iter()
                    .map(|mut q| {
                        q.scale(self.ring.neg(1), &self.ring);
                        q
                    })
                    .collect();
                vec[i].axpy(
                    ci,
                    &si,
                    &Sparse::from_poly(&MultiPoly::one(self.ring.clone(), self.nvars), self.order),
                    self.order,
                    &self.ring,
                );
                vec[j].axpy(
                    cj,
                    &sj,
                    &Sparse::from_poly(&MultiPoly::one(self.ring.clone(), self.nvars), self.order),
                    self.order,
                    &self.ring,
                );
                out.push(
                    vec.iter()
                        .map(|c| c.to_poly(&self.ring, self.nvars))
                        .collect(),
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prime::Prime;

    fn ring(p: u64) -> Zmod {
        Zmod::fp(Prime::new(p).unwrap())
    }

    fn vars(p: u64, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(ring(p), n, i)).collect()
    }

    #[test]
    fn coordinate_ideal_is_already_reduced() {
        let v = vars(3, 2);
        let gb = GroebnerBasis::compute(&v, MonomialOrder::DegRevLex, false);
        let mut polys = gb.polys();
        polys.sort_by(|a, b| b.leading_term().cmp(&a.leading_term()));
        assert_eq!(polys, vec![v[0].clone(), v[1].clone()]);
    }

    #[test]
    fn unit_ideal() {
        let r = ring(5);
        let gb = GroebnerBasis::compute(
            &[MultiPoly::constant(r.clone(), 2, 3)],
            MonomialOrder::DegRevLex,
            false,
        );
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.polys(), vec![MultiPoly::one(r, 2)]);
    }

    #[test]
    fn quotient_relation() {
        let v = vars(3, 2);
        let (x, y) = (&v[0], &v[1]);
        let gens = [x.pow(2) - y, y.pow(2) - x];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::DegRevLex, false);
        assert!(gb.normal_form(&(x.pow(4) - x)).is_zero());
        assert!(!gb.contains(x));
    }

    #[test]
    fn cofactors_reconstruct_member() {
        let v = vars(3, 2);
        let (x, y) = (&v[0], &v[1]);
        let gens = [x.pow(2) - y, y.pow(2) - x];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::DegRevLex, true);
        let f = x.pow(4) - x + &(x * y) * &gens[0];
        let (r, c) = gb.reduce_with_cofactors(&f);
        assert!(r.is_zero());
        let recombined = &c[0] * &gens[0] + &c[1] * &gens[1];
        assert_eq!(recombined, f);
    }

    #[test]
    fn deterministic() {
        let v = vars(2, 3);
        let gens = [
            &v[0] * &v[1] + v[2].pow(2),
            v[0].pow(2) + &v[1],
            &v[1] * &v[2] + &v[0],
        ];
        let a = GroebnerBasis::compute(&gens, MonomialOrder::DegRevLex, true).polys();
        let b = GroebnerBasis::compute(&gens, MonomialOrder::DegRevLex, true).polys();
        assert_eq!(a, b);
    }

    #[test]
    fn elimination_order() {
        // eliminate t from (x - t^2, y - t^3): y^2 - x^3
        let v = vars(5, 3);
        let (t, x, y) = (&v[0], &v[1], &v[2]);
        let gens = [x - &t.pow(2), y - &t.pow(3)];
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::Elimination(1), false);
        let elim: Vec<_> = gb
            .polys()
            .into_iter()
            .filter(|g| g.degree_in(0) == 0)
            .collect();
        assert_eq!(elim.len(), 1);
        assert_eq!(elim[0], x.pow(3) - y.pow(2));
    }
}

//! Membership by dense linear algebra on a degree-truncated span.
//!
//! `f ∈ (g_1, ..., g_k)` is tested as `f ∈ span{ m g_i : deg m + deg g_i <= cap }`.
//! For homogeneous input with `cap = deg f`, and for monomial ideals, this
//! is exact.

use std::collections::HashMap;

use froblift::{Level, Monomial, MultiPoly};

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Row reduces `m` (row-major, `cols` columns) in place; returns pivot columns.
fn rref(m: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let s = inv(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * s % p;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let c = m[r][col];
                for k in 0..m[r].len() {
                    m[r][k] = (m[r][k] + (p - c) * m[row][k]) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// A solution of `A x = b` over `F_p`, `A` given by columns.
pub fn solve(columns: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let ncols = columns.len();
    let mut m: Vec<Vec<u64>> = (0..b.len())
        .map(|r| {
            let mut row: Vec<u64> = columns.iter().map(|c| c[r] % p).collect();
            row.push(b[r] % p);
            row
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1, p);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0u64; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols];
    }
    Some(x)
}

/// A basis of `{x : A x = 0}` over `F_p`.
pub fn kernel(columns: &[Vec<u64>], nrows: usize, p: u64) -> Vec<Vec<u64>> {
    let ncols = columns.len();
    let mut m: Vec<Vec<u64>> = (0..nrows)
        .map(|r| columns.iter().map(|c| c[r] % p).collect())
        .collect();
    let pivots = rref(&mut m, ncols, p);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = (p - m[r][free]) % p;
        }
        out.push(v);
    }
    out
}

struct Span {
    index: HashMap<Vec<u32>, usize>,
    columns: Vec<Vec<u64>>,
    target: Vec<u64>,
}

fn monomials_up_to(n: usize, cap: u64) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; n]];
    for i in 0..n {
        let mut next = Vec::new();
        for e in &out {
            let used: u64 = e.iter().map(|&v| v as u64).sum();
            for k in 0..=(cap - used) {
                let mut e2 = e.clone();
                e2[i] = k as u32;
                next.push(e2);
            }
        }
        out = next;
    }
    out
}

fn build(f: &MultiPoly, gens: &[MultiPoly], cap: u64) -> Span {
    let n = f.nvars();
    let mut products = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > cap {
            continue;
        }
        for e in monomials_up_to(n, cap - dg) {
            products.push(&MultiPoly::term(g.ring().clone(), Monomial::new(e), 1) * g);
        }
    }
    let mut index = HashMap::new();
    for poly in products.iter().chain(std::iter::once(f)) {
        for (m, _) in poly.terms() {
            let next = index.len();
            index.entry(m.exponents().to_vec()).or_insert(next);
        }
    }
    let dense = |poly: &MultiPoly| {
        let mut v = vec![0u64; index.len()];
        for (m, c) in poly.terms() {
            v[index[m.exponents()]] = c;
        }
        v
    };
    let columns = products.iter().map(dense).collect();
    let target = dense(f);
    Span {
        index,
        columns,
        target,
    }
}

/// Membership over `F_p`.
pub fn member_fp(f: &MultiPoly, gens: &[MultiPoly], cap: u64) -> bool {
    assert_eq!(f.ring().level(), Level::ModP);
    if f.is_zero() {
        return true;
    }
    let span = build(f, gens, cap);
    solve(&span.columns, &span.target, f.p()).is_some()
}

/// Membership over `Z/p^2`: solve `A x0 = f` mod `p`, then the remaining
/// freedom is `x0 + kernel + p (anything)`, which leaves a second linear
/// system mod `p` for `(f - A x0) / p`.
pub fn member_zp2(f: &MultiPoly, gens: &[MultiPoly], cap: u64) -> bool {
    assert_eq!(f.ring().level(), Level::ModP2);
    if f.is_zero() {
        return true;
    }
    let p = f.p();
    let q = p * p;
    let span = build(f, gens, cap);
    let rows = span.index.len();
    let apply = |x: &[u64]| -> Vec<u64> {
        (0..rows)
            .map(|r| {
                span.columns
                    .iter()
                    .zip(x)
                    .fold(0u64, |acc, (c, &xi)| (acc + c[r] * xi) % q)
            })
            .collect()
    };
    let Some(x0) = solve(&span.columns, &span.target, p) else {
        return false;
    };
    let ax0 = apply(&x0);
    let residual: Vec<u64> = (0..rows)
        .map(|r| {
            let d = (span.target[r] + q - ax0[r]) % q;
            assert_eq!(d % p, 0);
            d / p
        })
        .collect();
    let mut columns: Vec<Vec<u64>> = span
        .columns
        .iter()
        .map(|c| c.iter().map(|v| v % p).collect())
        .collect();
    for k in kernel(&span.columns, rows, p) {
        let ak = apply(&k);
        columns.push(
            ak.iter()
                .map(|&v| {
                    assert_eq!(v % p, 0);
                    v / p
                })
                .collect(),
        );
    }
    solve(&columns, &residual, p).is_some()
}

use crate::poly::MultiPoly;

use super::{ChartLifting, LiftError};

/// Largest matrix size accepted by the cofactor determinant.
pub const MAX_DET_DIM: usize = 4;

/// The matrix of `(1/p) F~*` on `dx_1, ..., dx_n`:
/// `M[i][j] = [i = j] x_i^(p-1) + d(delta_i)/dx_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiMatrix {
    pub entries: Vec<Vec<MultiPoly>>,
    pub det: MultiPoly,
}

/// The logarithmic variant for the divisor `x_1 ... x_r = 0`, written in the
/// basis `dx_i / x_i` (`i < r`), `dx_i` (`i >= r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiLogMatrix {
    pub log_rank: usize,
    pub entries: Vec<Vec<MultiPoly>>,
    pub det: MultiPoly,
    /// Units `u~_i` with `F~*(x~_i) = x~_i^p u~_i`, for `i < r`.
    pub units: Vec<MultiPoly>,
    /// `v_i = (u~_i - 1) / p`, for `i < r`.
    pub unit_deltas: Vec<MultiPoly>,
}

/// Laplace expansion along the first row. Exact and division free.
pub fn determinant(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, LiftError> {
    let n = m.len();
    if n > MAX_DET_DIM {
        return Err(LiftError::DimensionTooLarge(n));
    }
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square matrix");
    Ok(laplace(m))
}

fn laplace(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].ring().clone(), m[0][0].nvars());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

impl ChartLifting {
    pub fn xi_matrix(&self) -> Result<XiMatrix, LiftError> {
        let n = self.nvars();
        if n > MAX_DET_DIM {
            return Err(LiftError::DimensionTooLarge(n));
        }
        let p = self.prime().get() as u32;
        let ring = self.ring_p();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut e = self.deltas()[i].partial_derivative(j)?;
                if i == j {
                    e = &e + &MultiPoly::var(ring.clone(), n, i).pow(p - 1);
                }
                row.push(e);
            }
            entries.push(row);
        }
        let det = determinant(&entries)?;
        Ok(XiMatrix { entries, det })
    }

    /// Requires `F~*(x~_i) = x~_i^p u~_i` with `u~_i = 1 mod p` for every `i < r`.
    pub fn log_xi_matrix(&self, log_rank: usize) -> Result<XiLogMatrix, LiftError> {
        let n = self.nvars();
        if n > MAX_DET_DIM {
            return Err(LiftError::DimensionTooLarge(n));
        }
        if log_rank > n {
            return Err(LiftError::LogRankTooLarge { log_rank, nvars: n });
        }
        let p = self.prime().get() as u32;
        let ring = self.ring_p();
        let mut units = Vec::with_capacity(log_rank);
        let mut unit_deltas = Vec::with_capacity(log_rank);
        for i in 0..log_rank {
            let u = self.divisor_unit(i)?;
            let v = (&u - &MultiPoly::one(u.ring().clone(), n)).divide_by_p()?;
            units.push(u);
            unit_deltas.push(v);
        }
        let x = |j: usize| MultiPoly::var(ring.clone(), n, j);
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let e = if i < log_rank {
                    let d = unit_deltas[i].partial_derivative(j)?;
                    if j < log_rank {
                        let mut e = &x(j) * &d;
                        if i == j {
                            e = &e + &MultiPoly::one(ring.clone(), n);
                        }
                        e
                    } else {
                        d
                    }
                } else {
                    let d = self.deltas()[i].partial_derivative(j)?;
                    if j < log_rank {
                        &x(j) * &d
                    } else if i == j {
                        &d + &x(i).pow(p - 1)
                    } else {
                        d
                    }
                };
                row.push(e);
            }
            entries.push(row);
        }
        let det = determinant(&entries)?;
        Ok(XiLogMatrix {
            log_rank,
            entries,
            det,
            units,
            unit_deltas,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Zmod;
    use crate::prime::Prime;

    fn lifting(p: u64, n: usize, images: &[Vec<(Vec<u32>, i64)>]) -> ChartLifting {
        let prime = Prime::new(p).unwrap();
        let ring = Zmod::zp2(prime.clone());
        let images = images
            .iter()
            .map(|t| MultiPoly::from_terms(ring.clone(), n, t.clone()))
            .collect();
        ChartLifting::new(prime, images).unwrap()
    }

    #[test]
    fn toric_determinant() {
        let l = ChartLifting::standard(Prime::new(3).unwrap(), 2);
        let det = l.xi_matrix().unwrap().det;
        assert_eq!(det, MultiPoly::from_terms(l.ring_p(), 2, [(vec![2, 2], 1)]));
    }

    #[test]
    fn one_variable_determinants() {
        // x^2 + 2x^3: delta = x^3, d/dx = 3x^2 = x^2
        let l = lifting(2, 1, &[vec![(vec![2], 1), (vec![3], 2)]]);
        let expected = MultiPoly::from_terms(l.ring_p(), 1, [(vec![1], 1), (vec![2], 1)]);
        assert_eq!(l.xi_matrix().unwrap().det, expected);
        // constant delta
        for p in [2u64, 3, 5] {
            let l = lifting(p, 1, &[vec![(vec![p as u32], 1), (vec![0], p as i64)]]);
            let expected = MultiPoly::from_terms(l.ring_p(), 1, [(vec![p as u32 - 1], 1)]);
            assert_eq!(l.xi_matrix().unwrap().det, expected);
        }
    }

    #[test]
    fn log_examples() {
        let l = ChartLifting::standard(Prime::new(5).unwrap(), 3);
        let lx = l.log_xi_matrix(3).unwrap();
        assert_eq!(lx.det, MultiPoly::one(l.ring_p(), 3));
        for (i, row) in lx.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(e.is_zero(), i != j);
            }
        }

        // x^2 (1 + 2x) = x^2 + 2x^3
        let l = lifting(2, 1, &[vec![(vec![2], 1), (vec![3], 2)]]);
        let lx = l.log_xi_matrix(1).unwrap();
        let one_plus_x = MultiPoly::from_terms(l.ring_p(), 1, [(vec![0], 1), (vec![1], 1)]);
        assert_eq!(lx.det, one_plus_x);
        assert_eq!(lx.unit_deltas[0], MultiPoly::var(l.ring_p(), 1, 0));
        let x = MultiPoly::var(l.ring_p(), 1, 0);
        assert_eq!(l.xi_matrix().unwrap().det, &lx.det * &x);

        // x^2 + 2y is not divisible by x^2
        let l = lifting(
            2,
            2,
            &[
                vec![(vec![2, 0], 1), (vec![0, 1], 2)],
                vec![(vec![0, 2], 1)],
            ],
        );
        assert_eq!(
            l.log_xi_matrix(1).unwrap_err(),
            LiftError::NotCompatibleWithDivisor { coordinate: 1 }
        );
    }

    #[test]
    fn dimension_cap() {
        let l = ChartLifting::standard(Prime::new(2).unwrap(), 5);
        assert_eq!(l.xi_matrix().unwrap_err(), LiftError::DimensionTooLarge(5));
    }
}

//! Dodgson condensation and the octahedral relation.

use crate::rings::Rational;
use crate::scalar::CommRing;

use super::{bareiss_det, Grid2D, LatticeCell, Matrix};

/// `layers[l]` holds the `(l+1) x (l+1)` contiguous minors, size `N - l`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pyramid {
    pub layers: Vec<Vec<Vec<Rational>>>,
    /// `(l, i, j)` entries computed by the Bareiss fallback.
    pub fallbacks: Vec<(usize, usize, usize)>,
}

impl Pyramid {
    /// Layer `l`, with `l = -1` the implicit layer of ones.
    fn at(&self, l: isize, i: usize, j: usize) -> Rational {
        if l < 0 {
            Rational::one()
        } else {
            self.layers[l as usize][i][j].clone()
        }
    }

    pub fn top(&self) -> &Rational {
        &self.layers.last().expect("nonempty pyramid")[0][0]
    }
}

/// Determinant by condensation. Entries whose divisor vanishes are taken
/// from [`bareiss_det`] on the corresponding contiguous minor.
pub fn dodgson_condense(a: &Matrix<Rational>) -> (Rational, Pyramid) {
    let n = a.size();
    let mut p = Pyramid { layers: vec![a.rows().to_vec()], fallbacks: Vec::new() };
    for l in 0..n - 1 {
        let size = n - l - 1;
        let mut next = vec![vec![Rational::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let cur = &p.layers[l];
                let minor = &cur[i][j] * &cur[i + 1][j + 1] - &cur[i][j + 1] * &cur[i + 1][j];
                let d = p.at(l as isize - 1, i + 1, j + 1);
                next[i][j] = if d.is_zero() {
                    p.fallbacks.push((l + 1, i, j));
                    bareiss_det(&a.block(i, j, l + 2))
                } else {
                    minor / d
                };
            }
        }
        p.layers.push(next);
    }
    (p.top().clone(), p)
}

/// An octahedral instance whose two sides differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctaFailure {
    pub layer: usize,
    pub i: usize,
    pub j: usize,
}

/// `u_{l+1} u_{l-1} = u_l(i,j) u_l(i+1,j+1) - u_l(i,j+1) u_l(i+1,j)` at every
/// instance of the pyramid, with layer `-1` all ones.
pub fn octahedral_verify(p: &Pyramid) -> Vec<OctaFailure> {
    let mut bad = Vec::new();
    for l in 0..p.layers.len().saturating_sub(1) {
        let cur = &p.layers[l];
        for i in 0..cur.len() - 1 {
            for j in 0..cur.len() - 1 {
                let lhs = &p.layers[l + 1][i][j] * &p.at(l as isize - 1, i + 1, j + 1);
                let rhs = &cur[i][j] * &cur[i + 1][j + 1] - &cur[i][j + 1] * &cur[i + 1][j];
                if lhs != rhs {
                    bad.push(OctaFailure { layer: l + 1, i, j });
                }
            }
        }
    }
    bad
}

/// The `l`-periodic reduction
/// `u_{m+1,n+1} u_{m-1,n-1} - u_{m+1,n-1} u_{m-1,n+1} = u_{m,n}^2`;
/// returns the interior sites where it fails.
pub fn octa2d_verify<T: LatticeCell>(grid: &Grid2D<T>) -> Vec<(i64, i64)> {
    let w = &grid.window;
    let mut bad = Vec::new();
    for m in w.m_min + 1..w.m_max {
        for n in w.n_min + 1..w.n_max {
            let u = |dm: i64, dn: i64| grid.get(m + dm, n + dn);
            let (Some(a), Some(b), Some(c), Some(d), Some(e)) = (u(1, 1), u(-1, -1), u(1, -1), u(-1, 1), u(0, 0))
            else {
                continue;
            };
            if !CommRing::sub(&a.mul(b), &c.mul(d)).sub(&e.mul(e)).is_zero() {
                bad.push((m, n));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::int;

    fn mat(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_ints(rows).unwrap()
    }

    #[test]
    fn two_by_two() {
        let (d, p) = dodgson_condense(&mat(&[vec![1, 2], vec![3, 4]]));
        assert_eq!(d, int(-2));
        assert!(p.fallbacks.is_empty());
    }

    #[test]
    fn identity_uses_fallback() {
        // the only divisor for 3x3 is the centre entry
        let (d, p) = dodgson_condense(&Matrix::identity(3));
        assert_eq!(d, int(1));
        assert!(p.fallbacks.is_empty());
        let (d, p) = dodgson_condense(&Matrix::identity(4));
        assert_eq!(d, int(1));
        assert!(p.fallbacks.contains(&(2, 0, 1)));
        assert!(octahedral_verify(&p).is_empty());
    }

    #[test]
    fn corrupted_entry_is_located() {
        let a = mat(&[vec![2, 1, 3, 1], vec![1, 4, 1, 2], vec![3, 1, 5, 1], vec![1, 2, 1, 6]]);
        let (d, mut p) = dodgson_condense(&a);
        assert_eq!(d, bareiss_det(&a));
        assert!(octahedral_verify(&p).is_empty());
        p.layers[1][1][0] += int(1);
        let bad = octahedral_verify(&p);
        assert!(bad.contains(&OctaFailure { layer: 1, i: 1, j: 0 }));
    }
}

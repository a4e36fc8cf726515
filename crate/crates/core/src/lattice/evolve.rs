//! Cauchy evolution of `alpha A B + beta C D = E F` on the lattice, where
//! around an anchor `(m, n)`
//! `A = (m+1, n+1)`, `B = (m, n-1)`, `C = (m, n+1)`, `D = (m+1, n-1)`,
//! `E = (m, n)`, `F = (m+1, n)`.
//!
//! With `alpha = 1`, `beta = -1` this is the discrete KdV equation
//! `A B - C D = E F`.

use crate::rings::{int, LaurentPoly, Rational, RingError, VarId};

use super::{Grid2D, LatticeCell, LatticeError, Window};

/// What to do when every way of solving for a cell is `0/0`.
#[derive(Debug, Clone, PartialEq)]
pub enum Indeterminate<T> {
    /// Use the given value and record the site.
    Fill(T),
    Fail,
}

/// Offsets of `A..F` from the anchor.
const SLOTS: [(i64, i64); 6] = [(1, 1), (0, -1), (0, 1), (1, -1), (0, 0), (1, 0)];

/// The three terms as `(coefficient, slot, slot)`; they sum to zero.
fn terms<T: LatticeCell>(alpha: &T, beta: &T) -> [(T, usize, usize); 3] {
    [(alpha.clone(), 0, 1), (beta.clone(), 2, 3), (T::one().neg(), 4, 5)]
}

enum Attempt<T> {
    Solved(T),
    /// All inputs known, divisor zero; carries whether the numerator is zero too.
    Singular(bool),
    Unknown,
}

fn try_slot<T: LatticeCell>(
    grid: &Grid2D<T>,
    alpha: &T,
    beta: &T,
    (m, n): (i64, i64),
    slot: usize,
) -> Result<Attempt<T>, LatticeError> {
    let anchor = (m - SLOTS[slot].0, n - SLOTS[slot].1);
    let cell = |s: usize| grid.get(anchor.0 + SLOTS[s].0, anchor.1 + SLOTS[s].1);
    let mut numerator = T::zero();
    let mut divisor = None;
    for (coef, a, b) in terms(alpha, beta) {
        if coef.is_zero() {
            if a == slot || b == slot {
                return Ok(Attempt::Unknown);
            }
            continue;
        }
        if a == slot || b == slot {
            let partner = if a == slot { b } else { a };
            let Some(p) = cell(partner) else { return Ok(Attempt::Unknown) };
            divisor = Some(coef.mul(p));
        } else {
            let (Some(x), Some(y)) = (cell(a), cell(b)) else { return Ok(Attempt::Unknown) };
            numerator = numerator.sub(&coef.mul(&x.mul(y)));
        }
    }
    let divisor = divisor.expect("slot occurs in exactly one term");
    if divisor.is_zero() {
        return Ok(Attempt::Singular(numerator.is_zero()));
    }
    match numerator.exact_div(&divisor) {
        Ok(v) => Ok(Attempt::Solved(v)),
        Err(RingError::DivisionByZero) => Err(LatticeError::ZeroDivision { m, n }),
        Err(source) => Err(LatticeError::NotDivisible { m, n, source }),
    }
}

fn solve_cell<T: LatticeCell>(
    grid: &mut Grid2D<T>,
    alpha: &T,
    beta: &T,
    site: (i64, i64),
    policy: &Indeterminate<T>,
) -> Result<(), LatticeError> {
    let (m, n) = site;
    let mut singular = None;
    for slot in 0..SLOTS.len() {
        match try_slot(grid, alpha, beta, site, slot)? {
            Attempt::Solved(v) => {
                grid.set(m, n, v);
                return Ok(());
            }
            Attempt::Singular(zero_numerator) => {
                singular.get_or_insert(zero_numerator);
            }
            Attempt::Unknown => {}
        }
    }
    match (singular, policy) {
        (Some(true), Indeterminate::Fill(v)) => {
            grid.set(m, n, v.clone());
            grid.singular.push(site);
            Ok(())
        }
        (Some(_), _) => Err(LatticeError::ZeroDivision { m, n }),
        (None, _) => Err(LatticeError::Undetermined { m, n }),
    }
}

/// Evolves `alpha A B + beta C D = E F` from the seed rows `n = -1, 0`
/// (all ones) and the seed column `m = 0` (`seed(n)` for other `n`).
///
/// Columns are filled outward from `m = 0`, first to the right, then to the
/// left; within a column, upward from `n = 1`, then downward from `n = -2`.
pub fn knight_evolve<T: LatticeCell>(
    alpha: &T,
    beta: &T,
    window: &Window,
    seed: impl Fn(i64) -> T,
    policy: &Indeterminate<T>,
) -> Result<Grid2D<T>, LatticeError> {
    let mut grid = Grid2D::empty(window.clone());
    for m in window.ms() {
        grid.set(m, -1, T::one());
        grid.set(m, 0, T::one());
    }
    for n in window.ns().filter(|n| !(-1..=0).contains(n)) {
        grid.set(0, n, seed(n));
    }
    let columns = (1..=window.m_max).chain((window.m_min..=-1).rev());
    for m in columns {
        for n in (1..=window.n_max).chain((window.n_min..=-2).rev()) {
            solve_cell(&mut grid, alpha, beta, (m, n), policy)?;
        }
    }
    Ok(grid)
}

/// [`knight_evolve`] with `alpha = 1`, `beta = -1`.
pub fn dkdv_evolve<T: LatticeCell>(
    window: &Window,
    seed: impl Fn(i64) -> T,
    policy: &Indeterminate<T>,
) -> Result<Grid2D<T>, LatticeError> {
    knight_evolve(&T::one(), &T::one().neg(), window, seed, policy)
}

/// The all-ones table, with `0/0` sites filled by 1.
pub fn ones_grid(window: &Window) -> Result<Grid2D<Rational>, LatticeError> {
    dkdv_evolve(window, |_| int(1), &Indeterminate::Fill(int(1)))
}

/// Symbolic seed `Q_{0,n} = q_n`; needs `n >= -1` throughout.
pub fn symbolic_grid(window: &Window) -> Result<Grid2D<LaurentPoly>, LatticeError> {
    if window.n_min < -1 {
        return Err(LatticeError::InvalidWindow("symbolic seeds need n >= -1".into()));
    }
    dkdv_evolve(window, |n| LaurentPoly::var(VarId::q(n as u32)), &Indeterminate::Fail)
}

/// Sites `(anchor m, anchor n)` where `alpha A B + beta C D - E F != 0`.
pub fn lattice_residuals<T: LatticeCell>(grid: &Grid2D<T>, alpha: &T, beta: &T) -> Vec<(i64, i64)> {
    let w = &grid.window;
    let mut bad = Vec::new();
    for m in w.m_min..w.m_max {
        for n in w.n_min + 1..w.n_max {
            let c = |(dm, dn): (i64, i64)| grid.get(m + dm, n + dn);
            let cells: Option<Vec<&T>> = SLOTS.iter().map(|&o| c(o)).collect();
            let Some(v) = cells else { continue };
            let r = alpha.mul(&v[0].mul(v[1])).add(&beta.mul(&v[2].mul(v[3]))).sub(&v[4].mul(v[5]));
            if !r.is_zero() {
                bad.push((m, n));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_laurent;

    #[test]
    fn first_symbolic_cell() {
        let g = symbolic_grid(&Window::parse("1x2").unwrap()).unwrap();
        assert_eq!(g.get(1, 1).unwrap(), &parse_laurent("q1 + 1").unwrap());
        assert_eq!(g.get(-1, 1).unwrap(), &parse_laurent("q1 - 1").unwrap());
        assert!(lattice_residuals(&g, &LaurentPoly::one(), &-LaurentPoly::one()).is_empty());
    }

    #[test]
    fn degenerate_knight_is_all_ones() {
        let w = Window::parse("0..3,-1..4").unwrap();
        let g = knight_evolve(&int(1), &int(0), &w, |_| int(1), &Indeterminate::Fail).unwrap();
        assert!(g.iter().all(|(_, v)| *v == int(1)));
        // without the C D term the lower edge needs a cell outside the window
        let w = Window::parse("-3..3,-4..4").unwrap();
        let err = knight_evolve(&int(1), &int(0), &w, |_| int(1), &Indeterminate::Fail).unwrap_err();
        assert_eq!(err, LatticeError::Undetermined { m: 1, n: -4 });
    }

    #[test]
    fn fibonacci_column() {
        let g = ones_grid(&Window::FIGURE4).unwrap();
        let col: Vec<Rational> = (1..=6).map(|n| g.get(1, n).unwrap().clone()).collect();
        assert_eq!(col, [2, 3, 5, 8, 13, 21].map(int));
        assert_eq!(g.get(2, 2), Some(&int(9)));
        assert_eq!(g.get(3, 2), Some(&int(21)));
    }

    #[test]
    fn strict_policy_reports_the_site() {
        let err = dkdv_evolve(&Window::FIGURE4, |_| int(1), &Indeterminate::Fail).unwrap_err();
        assert!(matches!(err, LatticeError::ZeroDivision { .. }));
    }
}

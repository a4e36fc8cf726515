//! Lattice cells against the polynomials `Q_n` evaluated at `z = m`.

use crate::rings::{LaurentPoly, RingError};
use crate::sequences::{gen_q_q, SequenceError};

use super::{symbolic_grid, Grid2D, LatticeError, Window};

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub m: i64,
    pub n: i64,
    pub lattice: LaurentPoly,
    pub polynomial: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeComparison {
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
    pub grid: Grid2D<LaurentPoly>,
}

#[derive(Debug, thiserror::Error)]
pub enum CompareError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Compares the symbolic lattice with `Q_n(m)` for `n <= n_max`, `|m| <= m_abs`.
pub fn lattice_vs_polynomial(n_max: usize, m_abs: i64) -> Result<LatticeComparison, CompareError> {
    let window = Window::new(-m_abs..=m_abs, -1..=n_max as i64)?;
    let grid = symbolic_grid(&window)?;
    let seq = gen_q_q(n_max)?;
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for n in window.ns() {
        for m in window.ms() {
            let polynomial = seq.get(n).eval_z_int(m);
            let lattice = grid.get(m, n).expect("complete grid").clone();
            compared += 1;
            if lattice != polynomial {
                mismatches.push(Mismatch { m, n, lattice, polynomial });
            }
        }
    }
    Ok(LatticeComparison { compared, mismatches, grid })
}

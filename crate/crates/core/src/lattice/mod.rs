//! Lattice Cauchy problems for the discrete KdV and knight recurrences, and
//! determinants by Dodgson condensation with a Bareiss oracle.

mod cell;
pub mod compare;
pub mod condense;
mod error;
pub mod evolve;
mod grid;
mod matrix;

pub use cell::LatticeCell;
pub use compare::{lattice_vs_polynomial, LatticeComparison, Mismatch};
pub use condense::{dodgson_condense, octa2d_verify, octahedral_verify, OctaFailure, Pyramid};
pub use error::LatticeError;
pub use evolve::{dkdv_evolve, knight_evolve, lattice_residuals, ones_grid, symbolic_grid, Indeterminate};
pub use grid::{parse_tsv_rational, Grid2D, Window};
pub use matrix::{bareiss_det, parse_matrix, Matrix};

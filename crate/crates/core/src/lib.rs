//! Exact computation of Burchnall-Chaundy polynomials, their difference
//! analogues, and the lattice equations they reduce to.
//!
//! * [`rings`]: rationals, Laurent polynomials, polynomials in `z`.
//! * [`sequences`]: generators, coordinate changes and relation checks for
//!   the tau sequences `P_n`, `Q_n`, `R_n`.
//! * [`lattice`]: discrete KdV Cauchy evolution and Dodgson condensation.
//! * [`cli`]: the `bchlab` command-line front end.

pub mod cli;
pub mod lattice;
pub mod rings;
pub mod scalar;
pub mod sequences;

pub use rings::{Family, LaurentPoly, Rational, RingError, VarId, ZPoly};
pub use scalar::{CommRing, FieldScalar, Scalar};

/// Rational matrices, the input of both determinant algorithms.
pub type Matrix = lattice::Matrix<Rational>;

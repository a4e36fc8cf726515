//! Dense square matrices and the fraction-free determinant.

use std::fmt;

use crate::rings::{parse_rational, Rational};
use crate::scalar::FieldScalar;

use super::LatticeError;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        if n == 0 {
            return Err(LatticeError::Parse { line: 1, msg: "empty matrix".into() });
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(LatticeError::Parse { line: i + 2, msg: format!("row {} is not of length {n}", i + 1) });
        }
        Ok(Matrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// The contiguous `k x k` block with top-left corner `(i, j)`.
    pub fn block(&self, i: usize, j: usize, k: usize) -> Matrix<T> {
        Matrix { rows: self.rows[i..i + k].iter().map(|r| r[j..j + k].to_vec()).collect() }
    }
}

impl<T: FieldScalar> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
        Matrix { rows }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Matrix::new(rows.iter().map(|r| r.iter().map(|&v| T::from_int(v)).collect()).collect())
    }
}

/// First line `N`, then `N` rows of integers or `p/q`.
pub fn parse_matrix(text: &str) -> Result<Matrix<Rational>, LatticeError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or(LatticeError::Parse { line: 1, msg: "missing size line".into() })?;
    let n: usize = head.trim().parse().map_err(|_| LatticeError::Parse { line: 1, msg: "bad size".into() })?;
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines {
        let row = line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| LatticeError::Parse { line: i + 1, msg: e.to_string() })?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(LatticeError::Parse { line: rows.len() + 1, msg: format!("expected {n} rows") });
    }
    Matrix::new(rows)
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rows.len())?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Bareiss elimination; every intermediate division is exact.
pub fn bareiss_det<T: FieldScalar>(a: &Matrix<T>) -> T {
    let n = a.size();
    let mut m = a.rows.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

//! Rectangular windows of lattice values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde_json::{json, Value};

use crate::rings::{LaurentPoly, Rational, RingError, VarId};

use super::{LatticeCell, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub m_min: i64,
    pub m_max: i64,
    pub n_min: i64,
    pub n_max: i64,
}

impl Window {
    /// The extent of the all-ones table: `m` in `[-6, 6]`, `n` in `[-7, 6]`.
    pub const FIGURE4: Window = Window { m_min: -6, m_max: 6, n_min: -7, n_max: 6 };

    pub fn new(m: RangeInclusive<i64>, n: RangeInclusive<i64>) -> Result<Window, LatticeError> {
        let w = Window { m_min: *m.start(), m_max: *m.end(), n_min: *n.start(), n_max: *n.end() };
        if w.m_min > 0 || w.m_max < 0 {
            return Err(LatticeError::InvalidWindow(format!("m range {m:?} must contain 0")));
        }
        if w.n_min > -1 || w.n_max < 0 {
            return Err(LatticeError::InvalidWindow(format!("n range {n:?} must contain -1 and 0")));
        }
        Ok(w)
    }

    /// `"figure4"`, `"AxB"` (`|m| <= A`, `-1 <= n <= B`) or
    /// `"m0..m1,n0..n1"`.
    pub fn parse(s: &str) -> Result<Window, LatticeError> {
        let bad = || LatticeError::InvalidWindow(format!("cannot parse window {s:?}"));
        if s == "figure4" {
            return Ok(Window::FIGURE4);
        }
        let range = |r: &str| -> Result<RangeInclusive<i64>, LatticeError> {
            let (a, b) = r.split_once("..").ok_or_else(bad)?;
            Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?)
        };
        if let Some((m, n)) = s.split_once(',') {
            return Window::new(range(m)?, range(n)?);
        }
        let (a, b) = s.split_once('x').ok_or_else(bad)?;
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        Window::new(-a..=a, -1..=b)
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        (self.m_min..=self.m_max).contains(&m) && (self.n_min..=self.n_max).contains(&n)
    }

    pub fn ms(&self) -> RangeInclusive<i64> {
        self.m_min..=self.m_max
    }

    pub fn ns(&self) -> RangeInclusive<i64> {
        self.n_min..=self.n_max
    }

    pub fn cells(&self) -> usize {
        ((self.m_max - self.m_min + 1) * (self.n_max - self.n_min + 1)) as usize
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D<T> {
    pub window: Window,
    values: BTreeMap<(i64, i64), T>,
    /// Sites where the recurrence gave `0/0` and a fill value was used.
    pub singular: Vec<(i64, i64)>,
}

impl<T: LatticeCell> Grid2D<T> {
    pub fn empty(window: Window) -> Self {
        Grid2D { window, values: BTreeMap::new(), singular: Vec::new() }
    }

    pub fn from_fn(window: Window, f: impl Fn(i64, i64) -> T) -> Self {
        let mut g = Grid2D::empty(window);
        for m in g.window.ms() {
            for n in g.window.ns() {
                g.values.insert((m, n), f(m, n));
            }
        }
        g
    }

    pub fn get(&self, m: i64, n: i64) -> Option<&T> {
        self.values.get(&(m, n))
    }

    pub fn set(&mut self, m: i64, n: i64, v: T) {
        self.values.insert((m, n), v);
    }

    pub fn is_complete(&self) -> bool {
        self.values.len() == self.window.cells()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &T)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }

    pub fn map<U: LatticeCell>(&self, f: impl Fn(&T) -> U) -> Grid2D<U> {
        Grid2D {
            window: self.window.clone(),
            values: self.values.iter().map(|(&k, v)| (k, f(v))).collect(),
            singular: self.singular.clone(),
        }
    }

    /// Rows from the top (`n` largest) down, columns by increasing `m`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for n in self.window.ns().rev() {
            let row: Vec<String> =
                self.window.ms().map(|m| self.get(m, n).map(|v| v.to_string()).unwrap_or_default()).collect();
            let _ = writeln!(out, "{}", row.join("\t"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.values.iter().map(|(&(m, n), v)| json!({"m": m, "n": n, "value": v.to_string()})).collect(),
        )
    }
}

impl Grid2D<LaurentPoly> {
    /// Evaluates every cell at the given constants.
    pub fn specialize(&self, value: impl Fn(VarId) -> Option<Rational> + Copy) -> Result<Grid2D<Rational>, RingError> {
        let mut out = Grid2D::empty(self.window.clone());
        for (&(m, n), v) in &self.values {
            out.set(m, n, v.eval(value)?);
        }
        Ok(out)
    }
}

/// Reads a TSV grid in the orientation written by [`Grid2D::to_tsv`].
pub fn parse_tsv_rational(text: &str, window: &Window) -> Result<Grid2D<Rational>, LatticeError> {
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let want_rows = (window.n_max - window.n_min + 1) as usize;
    if rows.len() != want_rows {
        return Err(LatticeError::Parse { line: rows.len(), msg: format!("expected {want_rows} rows") });
    }
    let mut g = Grid2D::empty(window.clone());
    for (i, row) in rows.iter().enumerate() {
        let n = window.n_max - i as i64;
        let cols: Vec<&str> = row.split('\t').collect();
        if cols.len() != (window.m_max - window.m_min + 1) as usize {
            return Err(LatticeError::Parse { line: i + 1, msg: "wrong number of columns".into() });
        }
        for (j, c) in cols.iter().enumerate() {
            let v = crate::rings::parse_rational(c.trim())
                .map_err(|e| LatticeError::Parse { line: i + 1, msg: e.to_string() })?;
            g.set(window.m_min + j as i64, n, v);
        }
    }
    Ok(g)
}

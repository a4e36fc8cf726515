//! The polynomials `x_k(z)` with `Δx_k = x_{k-1}`, generated from
//! `exp(sum_k (-1)^{k+1} (z + t_k) u^k / k)`.

use std::collections::BTreeMap;

use crate::rings::{det_expansion, factorial, int, rat, LaurentPoly, Rational, VarId, ZPoly};

use super::SequenceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gauge {
    /// All parameters `t_1, t_2, ...` free.
    Raw,
    /// Even parameters eliminated so that `x_{2p}(0) = 0`.
    EvenFixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct XSequence {
    /// `entries[k] = x_k`, starting from `x_0 = 1`.
    pub entries: Vec<ZPoly>,
    pub gauge: Gauge,
}

impl XSequence {
    pub fn get(&self, k: i64) -> ZPoly {
        match k {
            k if k < 0 => ZPoly::zero(),
            k => self.entries[k as usize].clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest generated index `K`.
    pub fn max_index(&self) -> usize {
        self.entries.len() - 1
    }
}

/// `z_k = (-1)^{k+1} (z + t_k)`.
fn signed_z(k: u32) -> ZPoly {
    let base = ZPoly::from_coeffs(vec![LaurentPoly::var(VarId::t(k)), LaurentPoly::one()]);
    if k % 2 == 1 {
        base
    } else {
        -base
    }
}

/// `x_0, ..., x_K` in the raw gauge, by exact power-series exponentiation.
///
/// With `F = exp(S)` and `S = sum_k s_k u^k`, `F' = S' F` gives
/// `n x_n = sum_{k=1}^n k s_k x_{n-k}`, and `k s_k = z_k`.
pub fn gen_x(k_max: usize) -> XSequence {
    let mut xs = vec![ZPoly::one()];
    for n in 1..=k_max {
        let mut acc = ZPoly::zero();
        for k in 1..=n {
            acc = &acc + &(&signed_z(k as u32) * &xs[n - k]);
        }
        xs.push(acc.scale_scalar(&rat(1, n as i64)));
    }
    XSequence { entries: xs, gauge: Gauge::Raw }
}

/// `x_k` as the almost-triangular determinant in the `z_j`, divided by `k!`.
pub fn x_det(k: usize) -> ZPoly {
    let rows: Vec<Vec<ZPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if j <= i {
                        signed_z((i - j + 1) as u32)
                    } else if j == i + 1 {
                        ZPoly::scalar(int(-(i as i64 + 1)))
                    } else {
                        ZPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    let d = det_expansion(&rows);
    d.scale_scalar(&Rational::new(1.into(), factorial(k as u32)))
}

/// Inverts `x_1, ..., x_K` into `t_1, ..., t_K` (Newton-type determinants).
///
/// `xvals[i]` is `x_{i+1}`; the result follows the same indexing. Row `i` of
/// the `k x k` matrix is `(i+1) x_{i+1}, x_i, ..., x_1, 1, 0, ...`.
pub fn t_from_x(xvals: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let x = |i: usize| -> LaurentPoly {
        if i == 0 {
            LaurentPoly::one()
        } else {
            xvals[i - 1].clone()
        }
    };
    (1..=xvals.len())
        .map(|k| {
            let rows: Vec<Vec<LaurentPoly>> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            if j == 0 {
                                x(i + 1).scale(&int(i as i64 + 1))
                            } else if j <= i + 1 {
                                x(i + 1 - j)
                            } else {
                                LaurentPoly::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            det_expansion(&rows)
        })
        .collect()
}

/// Solves `x_{2p}(0) = 0` for the even parameters and substitutes them.
///
/// Returns the map `2p -> t_{2p}(t_1, t_3, ...)` and the gauge-fixed
/// sequence, which involves odd parameters only. The coefficient of
/// `t_{2p}` in `x_{2p}(0)` is `-1/(2p)`, so every step is a division by a
/// nonzero rational.
pub fn even_gauge(raw: &XSequence) -> Result<(BTreeMap<u32, LaurentPoly>, XSequence), SequenceError> {
    if raw.gauge != Gauge::Raw {
        return Err(SequenceError::InvalidInput("even_gauge expects a raw-gauge sequence".into()));
    }
    let mut images: BTreeMap<VarId, LaurentPoly> = BTreeMap::new();
    let mut table = BTreeMap::new();
    for p in 1..=(raw.max_index() / 2) as u32 {
        let v = VarId::t(2 * p);
        let at0 = raw.entries[2 * p as usize].at_zero().substitute(&images)?;
        let (coef, rest) = at0.split_linear(v)?;
        let c = coef.as_constant().filter(|c| *c != int(0)).ok_or_else(|| {
            SequenceError::InvalidInput(format!("coefficient of {v} in x_{}(0) is not a nonzero constant", 2 * p))
        })?;
        let solved = rest.scale(&(-Rational::from_integer(1.into()) / c));
        images.insert(v, solved.clone());
        table.insert(2 * p, solved);
    }
    let entries = raw.entries.iter().map(|x| x.substitute(&images)).collect::<Result<Vec<_>, _>>()?;
    Ok((table, XSequence { entries, gauge: Gauge::EvenFixed }))
}

/// Even-fixed sequence up to index `k_max`.
pub fn gen_x_even(k_max: usize) -> Result<XSequence, SequenceError> {
    Ok(even_gauge(&gen_x(k_max))?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_laurent, parse_zpoly};

    #[test]
    fn first_x_polynomials() {
        let xs = gen_x(3);
        assert_eq!(xs.entries[0], ZPoly::one());
        assert_eq!(xs.entries[1], parse_zpoly("z + t1").unwrap());
        assert_eq!(xs.entries[2], parse_zpoly("1/2*((z + t1)^2 - (z + t2))").unwrap());
    }

    #[test]
    fn delta_lowers_the_index() {
        let xs = gen_x(6);
        for k in 1..=6 {
            assert_eq!(xs.entries[k].delta(), xs.entries[k - 1], "k = {k}");
            assert_eq!(xs.entries[k].degree(), Some(k));
        }
    }

    #[test]
    fn determinant_route_matches_series() {
        assert_eq!(x_det(1), parse_zpoly("z + t1").unwrap());
        // rows (z_1, -1), (z_2, z_1): (z_1^2 + z_2)/2 with z_2 = -(z + t2)
        assert_eq!(x_det(2), parse_zpoly("1/2*((z + t1)^2 - (z + t2))").unwrap());
        let xs = gen_x(6);
        for k in 1..=6 {
            assert_eq!(x_det(k), xs.entries[k], "k = {k}");
        }
    }

    #[test]
    fn x_at_zero_matches_expansions() {
        let xs = gen_x(5);
        let want = [
            "t1",
            "-1/2*t2 + 1/2*t1^2",
            "1/3*t3 - 1/2*t1*t2 + 1/6*t1^3",
            "-1/4*t4 + 1/3*t1*t3 + 1/8*t2^2 - 1/4*t1^2*t2 + 1/24*t1^4",
            "1/5*t5 - 1/4*t1*t4 - 1/6*t2*t3 + 1/6*t1^2*t3 + 1/8*t1*t2^2 - 1/12*t1^3*t2 + 1/120*t1^5",
        ];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(xs.entries[k + 1].at_zero(), parse_laurent(w).unwrap(), "x_{}(0)", k + 1);
        }
    }

    #[test]
    fn newton_inversion() {
        let xs = gen_x(5);
        let at0: Vec<LaurentPoly> = xs.entries[1..].iter().map(ZPoly::at_zero).collect();
        let ts = t_from_x(&at0);
        for (k, t) in ts.iter().enumerate() {
            assert_eq!(*t, LaurentPoly::var(VarId::t(k as u32 + 1)));
        }
        // symbolic x's standing in for x_1, x_2 (q-family letters used as free symbols)
        let sym: Vec<LaurentPoly> = (1..=4).map(|i| LaurentPoly::var(VarId::q(i))).collect();
        let ts = t_from_x(&sym);
        assert_eq!(ts[0], parse_laurent("q1").unwrap());
        assert_eq!(ts[1], parse_laurent("q1^2 - 2*q2").unwrap());
        assert!(ts.iter().all(|t| t.has_integer_coeffs()));
    }

    #[test]
    fn even_gauge_values() {
        let (table, even) = even_gauge(&gen_x(5)).unwrap();
        assert_eq!(table[&2], parse_laurent("t1^2").unwrap());
        assert_eq!(table[&4], parse_laurent("4/3*t1*t3 - 1/3*t1^4").unwrap());
        assert!(even.entries[2].at_zero().is_zero());
        assert!(even.entries[4].at_zero().is_zero());
        for x in &even.entries {
            assert!(x.coeffs().iter().all(|c| c.variables().iter().all(|v| v.index % 2 == 1)));
        }
        for k in 1..even.len() {
            assert_eq!(even.entries[k].delta(), even.entries[k - 1]);
        }
    }
}

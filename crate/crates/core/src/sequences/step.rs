//! One step `(prev, cur) -> next` of a bilinear recurrence.
//!
//! Writing `next = sum_k a_k z^k`, the left side is linear in the `a_k`, and
//! the image of `z^k` has degree at most `k + d - 1` (`d = deg prev`) with
//! coefficient `c (k - d) lead(prev)` there. Equating coefficients from the
//! top power down determines every `a_k` except `a_d`, which is solved for as
//! an affine function of the free parameter `s = a_d`. The constant term then
//! fixes `s`.

use crate::rings::{LaurentPoly, ZPoly};

use super::{Relation, SequenceError};

/// `a_k = alpha + beta * s`.
#[derive(Clone, Debug, Default)]
struct Affine {
    alpha: LaurentPoly,
    beta: LaurentPoly,
}

impl Affine {
    fn at(&self, s: &LaurentPoly) -> LaurentPoly {
        &self.alpha + &(&self.beta * s)
    }
}

fn monomial_z(k: usize) -> ZPoly {
    let mut coeffs = vec![LaurentPoly::zero(); k + 1];
    coeffs[k] = LaurentPoly::one();
    ZPoly::from_coeffs(coeffs)
}

/// Solves `relation.lhs(next, prev) = relation.rhs(cur)` for a polynomial
/// `next` of the given degree with constant term `newconst`.
///
/// `n` is the index of `next`, used in error reports. When the free
/// parameter does not reach the constant term (initial data with vanishing
/// constants), it is fixed by making the lowest coefficient that still
/// depends on it vanish.
pub fn step(
    relation: Relation,
    prev: &ZPoly,
    cur: &ZPoly,
    newconst: &LaurentPoly,
    degree: usize,
    n: i64,
) -> Result<ZPoly, SequenceError> {
    let fail = |reason: String| SequenceError::NoPolynomialSolution { n, reason };
    let d = prev.degree().ok_or_else(|| fail("previous member is zero".into()))?;
    if degree < d {
        return Err(fail(format!("target degree {degree} below previous degree {d}")));
    }
    let rhs = relation.rhs(cur);
    let images: Vec<ZPoly> = (0..=degree).map(|k| relation.lhs(&monomial_z(k), prev)).collect();

    let mut a: Vec<Affine> = vec![Affine::default(); degree + 1];
    for k in (0..=degree).rev() {
        if k == d {
            a[k] = Affine { alpha: LaurentPoly::zero(), beta: LaurentPoly::one() };
            continue;
        }
        let p = k + d - 1;
        let pivot = images[k].coeff(p);
        if pivot.is_zero() {
            return Err(fail(format!("vanishing pivot at z^{p}")));
        }
        let mut alpha = rhs.coeff(p);
        let mut beta = LaurentPoly::zero();
        for j in k + 1..=degree {
            let c = images[j].coeff(p);
            if c.is_zero() {
                continue;
            }
            alpha = &alpha - &(&a[j].alpha * &c);
            beta = &beta - &(&a[j].beta * &c);
        }
        a[k] = Affine { alpha: alpha.exact_div(&pivot)?, beta: beta.exact_div(&pivot)? };
    }

    let s = if d == 0 {
        newconst.clone()
    } else if !a[0].beta.is_zero() {
        (newconst - &a[0].alpha).exact_div(&a[0].beta)?
    } else {
        if a[0].alpha != *newconst {
            return Err(fail(format!("constant term is forced to {}", a[0].alpha)));
        }
        match a.iter().position(|c| !c.beta.is_zero()) {
            Some(k) if k != d => (-&a[k].alpha).exact_div(&a[k].beta)?,
            _ => LaurentPoly::zero(),
        }
    };

    let next = ZPoly::from_coeffs(a.iter().map(|c| c.at(&s)).collect());
    if next.degree() != Some(degree) {
        return Err(fail(format!("solution has degree {:?}, expected {degree}", next.degree())));
    }
    if !relation.residual(prev, cur, &next).is_zero() {
        return Err(fail("remaining coefficient equations are inconsistent".into()));
    }
    Ok(next)
}

/// Degree of `Q_{n+1}` (and `P_{n+1}`): `(n+1)(n+2)/2`.
pub fn tau_degree(n_next: i64) -> usize {
    (n_next * (n_next + 1) / 2) as usize
}

/// `Q_{n+1}` from `Q_{n-1}, Q_n` and its constant term.
pub fn step_dbch(prev: &ZPoly, cur: &ZPoly, newconst: &LaurentPoly, n_next: i64) -> Result<ZPoly, SequenceError> {
    step(Relation::Dbch, prev, cur, newconst, tau_degree(n_next), n_next)
}

/// `P_{n+1}` from `P_{n-1}, P_n` and its constant term.
pub fn step_bch(prev: &ZPoly, cur: &ZPoly, newconst: &LaurentPoly, n_next: i64) -> Result<ZPoly, SequenceError> {
    step(Relation::Bch, prev, cur, newconst, tau_degree(n_next), n_next)
}

/// `R_{n+1}` from `R_{n-1}, R_n` and its constant term.
pub fn step_dodgson(prev: &ZPoly, cur: &ZPoly, newconst: &LaurentPoly, n_next: i64) -> Result<ZPoly, SequenceError> {
    step(Relation::Dodgson, prev, cur, newconst, tau_degree(n_next), n_next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_laurent, parse_zpoly};

    fn zp(s: &str) -> ZPoly {
        parse_zpoly(s).unwrap()
    }

    #[test]
    fn first_steps() {
        let one = ZPoly::one();
        let p1 = step_bch(&one, &one, &parse_laurent("c1").unwrap(), 1).unwrap();
        assert_eq!(p1, zp("z + c1"));
        let q1 = step_dbch(&one, &one, &parse_laurent("q1").unwrap(), 1).unwrap();
        assert_eq!(q1, zp("z + q1"));
        let p2 = step_bch(&one, &p1, &parse_laurent("c2").unwrap(), 2).unwrap();
        assert_eq!(p2, zp("1/3*z^3 + c1*z^2 + c1^2*z + c2"));
    }

    #[test]
    fn wrong_constant_is_detected_for_zero_data() {
        let one = ZPoly::one();
        let q1 = zp("z");
        // Q_2 with zero data has a vanishing constant term; anything else fails
        let q2 = step_dbch(&one, &q1, &LaurentPoly::zero(), 2).unwrap();
        assert_eq!(q2, zp("1/3*z*(z+1)*(z-1)"));
        assert!(step_dbch(&q1, &q2, &parse_laurent("1").unwrap(), 3).is_err());
    }

    #[test]
    fn inconsistent_data_has_no_solution() {
        let err = step(Relation::Dbch, &zp("z"), &zp("z^2 + 1"), &LaurentPoly::zero(), 3, 2).unwrap_err();
        assert!(matches!(err, SequenceError::NoPolynomialSolution { .. }));
    }
}

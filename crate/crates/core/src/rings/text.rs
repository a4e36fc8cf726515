//! Canonical text form and a small expression parser.
//!
//! Laurent polynomials print their terms in ascending canonical order, for
//! example `-3*q2 + q1^3`. Polynomials in `z` print descending powers of `z`;
//! a multi-term coefficient is parenthesized, e.g. `(-1/3 + q1^2)*z`, except
//! for the constant coefficient, whose terms are written inline.
//!
//! The parser accepts the canonical form and the usual factored notation
//! (`z^2*(z^2-1)*(z^2-4)/45`, implicit products such as `2(z+1)`), so printed
//! formulas can be transcribed directly.

use std::fmt;

use num_traits::One;

use crate::scalar::Scalar;

use super::{parse_rational, Laurent, LaurentPoly, Monomial, Rational, RingError, VarId, ZPoly, ZPolyOver};

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps().iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn format_term<C: Scalar>(c: &C, body: Option<String>) -> String {
    match body {
        None => c.to_string(),
        Some(b) => {
            if c.is_one() {
                b
            } else if (-c.clone()).is_one() {
                format!("-{b}")
            } else {
                format!("{c}*{b}")
            }
        }
    }
}

fn join_terms(terms: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn laurent_terms<C: Scalar>(p: &Laurent<C>, z: Option<&str>) -> Vec<String> {
    p.terms()
        .map(|(m, c)| {
            let body = match (m.is_one(), z) {
                (true, None) => None,
                (true, Some(z)) => Some(z.to_string()),
                (false, None) => Some(m.to_string()),
                (false, Some(z)) => Some(format!("{m}*{z}")),
            };
            format_term(c, body)
        })
        .collect()
}

impl<C: Scalar> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(laurent_terms(self, None)))
    }
}

impl<C: Scalar> fmt::Display for ZPolyOver<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let zpart = match k {
                0 => None,
                1 => Some("z".to_string()),
                _ => Some(format!("z^{k}")),
            };
            match zpart {
                None => terms.extend(laurent_terms(c, None)),
                Some(z) if c.len() == 1 => terms.extend(laurent_terms(c, Some(&z))),
                Some(z) => terms.push(format!("({c})*{z}")),
            }
        }
        f.write_str(&join_terms(terms))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, RingError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(s[start..i].to_string())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(RingError::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> RingError {
        RingError::Parse { pos: self.here(), msg: msg.into() }
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ZPoly, RingError> {
        let mut acc = if self.eat('-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ZPoly, RingError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = self.divide(acc, d)?;
            } else if matches!(self.peek(), Some(Tok::Op('(')) | Some(Tok::Ident(_))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn divide(&self, a: ZPoly, d: ZPoly) -> Result<ZPoly, RingError> {
        match d.degree() {
            None => Err(RingError::DivisionByZero),
            Some(0) => a.exact_div_coeffs(&d.coeff(0)),
            Some(_) => Err(self.err("division by a polynomial in z")),
        }
    }

    fn unary(&mut self) -> Result<ZPoly, RingError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ZPoly, RingError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e: u32 = match self.peek() {
            Some(Tok::Num(n)) => n.parse().map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        self.pos += 1;
        let mut acc = ZPoly::one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        if neg {
            acc = self.divide(ZPoly::one(), acc)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<ZPoly, RingError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(ZPoly::scalar(parse_rational(&n).map_err(|_| self.err("bad number"))?))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if id == "z" {
                    return Ok(ZPoly::z());
                }
                let v: VarId = id.parse().map_err(|_| RingError::Parse { pos: at, msg: format!("unknown symbol {id:?}") })?;
                Ok(ZPoly::constant(Laurent::var(v)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, symbol or '('")),
        }
    }
}

/// Parses an expression in `z` and the indexed variables `t_k`, `q_k`, `c_k`.
pub fn parse_zpoly(s: &str) -> Result<ZPoly, RingError> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, end: s.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// As [`parse_zpoly`] but rejects any occurrence of `z`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly, RingError> {
    let p = parse_zpoly(s)?;
    match p.degree() {
        None => Ok(LaurentPoly::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(RingError::Parse { pos: 0, msg: "unexpected z in a z-free expression".into() }),
    }
}

/// Renders a rational as `p/q` (or `p` when integral).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(parse_laurent("q1^3 - 3*q2").unwrap().to_string(), "-3*q2 + q1^3");
        assert_eq!(parse_laurent("1/3*t1^3 - 1/3*t3").unwrap().to_string(), "-1/3*t3 + 1/3*t1^3");
        assert_eq!(parse_zpoly("c1 + z").unwrap().to_string(), "z + c1");
        assert_eq!(
            parse_zpoly("z(z^2-1)/3 + q1 z^2 + q1^2 z + q2").unwrap().to_string(),
            "1/3*z^3 + q1*z^2 + (-1/3 + q1^2)*z + q2"
        );
        assert_eq!(parse_zpoly("q2/q1 - z").unwrap().to_string(), "-z + q1^-1*q2");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(parse_zpoly("z + "), Err(RingError::Parse { .. })));
        assert!(matches!(parse_zpoly("z / z"), Err(RingError::Parse { .. })));
        assert!(matches!(parse_zpoly("x1"), Err(RingError::Parse { pos: 0, .. })));
        assert!(matches!(parse_zpoly("(q1"), Err(RingError::Parse { .. })));
        assert_eq!(parse_zpoly("1/0"), Err(RingError::DivisionByZero));
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        let term = (-5i64..6, 1i64..4, -2i32..3, -2i32..3, 0i32..3);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|(p, q, a, b, e)| {
                (
                    Monomial::from_pairs([(VarId::q(1), a), (VarId::q(2), b), (VarId::t(3), e)]),
                    super::super::rat(p, q),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn text_round_trips(a in small_laurent(), b in small_laurent()) {
            prop_assert_eq!(parse_laurent(&a.to_string()).unwrap(), a.clone());
            let p = ZPoly::from_coeffs(vec![a, LaurentPoly::zero(), b]);
            prop_assert_eq!(parse_zpoly(&p.to_string()).unwrap(), p);
        }
    }
}

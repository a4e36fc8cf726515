//! JSON form: `{"coeffs": [[{"q1": 2, "z": 3}, "-1/3"], ...]}`.
//!
//! Exponent maps use the canonical variable names plus `"z"` for polynomials
//! in `z`; coefficients are `p/q` strings so bignums survive unchanged.

use serde_json::{json, Map, Value};

use super::text::format_rational;
use super::{parse_rational, LaurentPoly, Monomial, RingError, VarId, ZPoly};

fn bad(msg: &str) -> RingError {
    RingError::Parse { pos: 0, msg: format!("json: {msg}") }
}

fn term_json(m: &Monomial, z: usize, c: &super::Rational) -> Value {
    let mut exps = Map::new();
    if z > 0 {
        exps.insert("z".into(), json!(z));
    }
    for &(v, e) in m.exps() {
        exps.insert(v.to_string(), json!(e));
    }
    json!([Value::Object(exps), format_rational(c)])
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    json!({ "coeffs": p.terms().map(|(m, c)| term_json(m, 0, c)).collect::<Vec<_>>() })
}

pub fn zpoly_to_json(p: &ZPoly) -> Value {
    let terms: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(k, c)| c.terms().map(move |(m, r)| term_json(m, k, r)))
        .collect();
    json!({ "coeffs": terms })
}

/// Parses either form; a `"z"` key is only accepted by polynomials in `z`.
pub fn zpoly_from_json(v: &Value) -> Result<ZPoly, RingError> {
    let terms = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing \"coeffs\" array"))?;
    let mut coeffs: Vec<LaurentPoly> = Vec::new();
    for t in terms {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term must be [exponents, coefficient]"))?;
        let exps = pair[0].as_object().ok_or_else(|| bad("exponent map must be an object"))?;
        let coef = parse_rational(pair[1].as_str().ok_or_else(|| bad("coefficient must be a string"))?)?;
        let mut z = 0usize;
        let mut vars = Vec::new();
        for (name, e) in exps {
            let e = e.as_i64().ok_or_else(|| bad("exponent must be an integer"))?;
            if name == "z" {
                z = usize::try_from(e).map_err(|_| bad("negative power of z"))?;
            } else {
                let var: VarId = name.parse()?;
                vars.push((var, i32::try_from(e).map_err(|_| bad("exponent out of range"))?));
            }
        }
        if coeffs.len() <= z {
            coeffs.resize(z + 1, LaurentPoly::zero());
        }
        coeffs[z].add_term(Monomial::from_pairs(vars), coef);
    }
    Ok(ZPoly::from_coeffs(coeffs))
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly, RingError> {
    let p = zpoly_from_json(v)?;
    match p.degree() {
        None => Ok(LaurentPoly::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(bad("unexpected z")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_laurent, parse_zpoly};

    #[test]
    fn json_shape() {
        let p = parse_laurent("-1/3*t3 + 1/3*t1^3").unwrap();
        let v = laurent_to_json(&p);
        assert_eq!(v, serde_json::json!({"coeffs": [[{"t3": 1}, "-1/3"], [{"t1": 3}, "1/3"]]}));
        assert_eq!(laurent_from_json(&v).unwrap(), p);
    }

    #[test]
    fn zpoly_round_trip() {
        let p = parse_zpoly("1/3*z^3 + q1*z^2 + (q1^2 - 1/3)*z + q2/q1 + 123456789012345678901234567890").unwrap();
        let text = zpoly_to_json(&p).to_string();
        let back = zpoly_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(laurent_from_json(&zpoly_to_json(&p)).is_err());
    }
}

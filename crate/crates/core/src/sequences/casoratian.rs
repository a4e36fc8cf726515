//! Casoratian determinants.

use crate::rings::{det_expansion, factorial, Rational, ZPoly};

use super::XSequence;

/// `det[f_i(z + j)]`, `i, j = 0..n-1`.
pub fn casoratian(fs: &[ZPoly]) -> ZPoly {
    let rows: Vec<Vec<ZPoly>> =
        fs.iter().map(|f| (0..fs.len()).map(|j| f.shift(j as i64)).collect()).collect();
    det_expansion(&rows)
}

/// `det[f_i(z + n + 1 - 2j)]`, `i, j = 1..n`, with the shifts spread
/// symmetrically about `z`.
pub fn sym_casoratian(fs: &[ZPoly]) -> ZPoly {
    let n = fs.len() as i64;
    let rows: Vec<Vec<ZPoly>> =
        fs.iter().map(|f| (1..=n).map(|j| f.shift(n + 1 - 2 * j)).collect()).collect();
    det_expansion(&rows)
}

/// The odd members `y_j = x_{2j-1}`, `j = 1..n`.
pub fn odd_members(xs: &XSequence, n: usize) -> Vec<ZPoly> {
    (1..=n).map(|j| xs.get(2 * j as i64 - 1)).collect()
}

/// `Q_n = det[x_{2j-i}]`, `i, j = 1..n`, with `x_0 = 1` and `x_k = 0` for `k < 0`.
pub fn q_det3(xs: &XSequence, n: usize) -> ZPoly {
    let rows: Vec<Vec<ZPoly>> = (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| xs.get(2 * j - i)).collect())
        .collect();
    det_expansion(&rows)
}

/// `z^{2j-1}/(2j-1)!`, `j = 1..n`.
pub fn zero_data_odd_powers(n: usize) -> Vec<ZPoly> {
    (1..=n)
        .map(|j| {
            let k = 2 * j - 1;
            let mut coeffs = vec![Default::default(); k + 1];
            coeffs[k] = crate::rings::LaurentPoly::constant(Rational::new(1.into(), factorial(k as u32)));
            ZPoly::from_coeffs(coeffs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_zpoly;
    use crate::sequences::xseq::{gen_x, gen_x_even};

    #[test]
    fn casoratian_of_monomials() {
        let fs = vec![ZPoly::one(), ZPoly::z()];
        assert_eq!(casoratian(&fs), ZPoly::one());
        let fs = vec![parse_zpoly("z").unwrap(), parse_zpoly("z^3").unwrap()];
        // z (z+1)^3 - z^3 (z+1) = z (z+1) (2z + 1)
        assert_eq!(casoratian(&fs), parse_zpoly("z*(z+1)*(2*z+1)").unwrap());
    }

    #[test]
    fn det3_agrees_with_casoratian() {
        let xs = gen_x_even(7).unwrap();
        for n in 1..=4 {
            assert_eq!(q_det3(&xs, n), casoratian(&odd_members(&xs, n)), "n = {n}");
        }
    }

    #[test]
    fn det3_ignores_even_times() {
        let raw = gen_x(5);
        let even = gen_x_even(5).unwrap();
        for n in 1..=3 {
            let q = q_det3(&raw, n);
            assert!(q.coeffs().iter().all(|c| c.variables().iter().all(|v| v.index % 2 == 1)));
            assert_eq!(q, q_det3(&even, n));
        }
    }

    #[test]
    fn symmetric_casoratian_small() {
        let fs = zero_data_odd_powers(2);
        // det [[(z+1), (z-1)], [(z+1)^3/6, (z-1)^3/6]]
        let want = parse_zpoly("((z+1)*(z-1)^3 - (z-1)*(z+1)^3)/6").unwrap();
        assert_eq!(sym_casoratian(&fs), want);
    }
}

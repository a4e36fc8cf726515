//! The determinant identity behind the difference recurrence:
//! `C_k(chi) T C_{k+1} - C_{k+1} T C_k(chi) = -(T C_k) C_{k+1}(chi)`,
//! with `C_k = C(phi_1..phi_k)` a Casoratian and `C_k(chi)` the same with
//! `chi` appended.

use crate::rings::{LaurentPoly, VarId, ZPoly};

use super::casoratian::casoratian;

fn with(phis: &[ZPoly], chi: &ZPoly) -> Vec<ZPoly> {
    let mut v = phis.to_vec();
    v.push(chi.clone());
    v
}

/// The left side minus the right side for `k` (uses `phis[..k+1]`).
pub fn jacobi_residual(phis: &[ZPoly], chi: &ZPoly, k: usize) -> ZPoly {
    let ck = casoratian(&phis[..k]);
    let ck1 = casoratian(&phis[..k + 1]);
    let ck_chi = casoratian(&with(&phis[..k], chi));
    let ck1_chi = casoratian(&with(&phis[..k + 1], chi));
    let bracket = &(&ck_chi * &ck1.shift(1)) - &(&ck1 * &ck_chi.shift(1));
    &bracket + &(&ck.shift(1) * &ck1_chi)
}

/// `count` polynomials of the given degree whose coefficients are distinct
/// free symbols (borrowed from the `c` family).
pub fn generic_polys(count: usize, degree: usize) -> Vec<ZPoly> {
    (0..count)
        .map(|i| {
            ZPoly::from_coeffs(
                (0..=degree).map(|j| LaurentPoly::var(VarId::c((i * (degree + 1) + j + 1) as u32))).collect(),
            )
        })
        .collect()
}

/// Residuals for `k = 0..=max_k` with generic cubic `phi_1..phi_{max_k+1}`
/// and a generic cubic `chi`.
pub fn jacobi_check(max_k: usize) -> Vec<(usize, ZPoly)> {
    let mut polys = generic_polys(max_k + 2, 3);
    let chi = polys.pop().expect("count >= 2");
    (0..=max_k).map(|k| (k, jacobi_residual(&polys, &chi, k))).collect()
}

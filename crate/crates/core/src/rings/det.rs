//! Division-free determinant over an arbitrary commutative ring.

use crate::scalar::CommRing;

/// Determinant by Laplace expansion with memoized minors.
///
/// `minors[S]` holds the determinant of the first `|S|` rows restricted to the
/// column set `S`, so the cost is `O(2^n n)` ring operations and no division
/// is ever needed. Suitable for the small matrices of polynomials that arise
/// in Casoratians; numeric matrices should use fraction-free elimination.
pub fn det_expansion<R: CommRing>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    assert!(n < 24, "expansion determinant is exponential in the size");
    if n == 0 {
        return R::one();
    }
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(R::one());
    for size in 1..=n {
        let row = &rows[size - 1];
        for set in 1usize..(1 << n) {
            if set.count_ones() as usize != size {
                continue;
            }
            let mut acc = R::zero();
            for (col, entry) in row.iter().enumerate() {
                if set & (1 << col) == 0 || entry.is_zero() {
                    continue;
                }
                let Some(sub) = &minors[set & !(1 << col)] else { continue };
                if sub.is_zero() {
                    continue;
                }
                let term = entry.mul(sub);
                let above = (set >> (col + 1)).count_ones();
                acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            minors[set] = Some(acc);
        }
        // minors of the previous size are no longer needed
        for set in 1usize..(1 << n) {
            if set.count_ones() as usize == size - 1 {
                minors[set] = None;
            }
        }
    }
    minors[(1 << n) - 1].take().expect("full minor computed")
}

//! Dense Gaussian elimination with partial pivoting, generic over `Scalar`.

use crate::scalar::Scalar;

/// Solves `a x = b` for a square row-major `a`. Returns `None` when a pivot
/// falls below `pivot_tol` times the largest entry of `a`.
pub(crate) fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>, pivot_tol: f64) -> Option<Vec<S>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    if n == 0 {
        return Some(Vec::new());
    }
    let scale = a.iter().flat_map(|r| r.iter().map(|v| v.modulus())).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return None;
    }
    for col in 0..n {
        let (p, best) = (col..n)
            .map(|r| (r, a[r][col].modulus()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if best < pivot_tol * scale {
            return None;
        }
        a.swap(col, p);
        b.swap(col, p);
        let pivot = a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / pivot;
            if f.modulus() == 0.0 {
                continue;
            }
            let (top, rest) = a.split_at_mut(r);
            for (x, &v) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = *x - f * v;
            }
            let v = b[col];
            b[r] = b[r] - f * v;
        }
    }
    let mut x = vec![S::zero(); n];
    for r in (0..n).rev() {
        let acc = (r + 1..n).fold(b[r], |acc, c| acc - a[r][c] * x[c]);
        x[r] = acc / a[r][r];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

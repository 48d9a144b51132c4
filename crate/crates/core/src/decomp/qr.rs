use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{c64, ComplexMatrix, C64};
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Householder QR of a square matrix. Returns `Q` and the diagonal of `R`.
pub fn householder_qr(a: &ComplexMatrix) -> (ComplexMatrix, Vec<C64>) {
    let n = a.rows();
    assert!(a.is_square(), "householder_qr expects a square matrix");
    let mut r = a.clone();
    let mut q = ComplexMatrix::identity(n);
    let mut rdiag = Vec::with_capacity(n);
    for k in 0..n {
        let x0 = r.get(k, k);
        let xnorm = (k..n).map(|i| r.get(i, k).norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            rdiag.push(c64(0.0, 0.0));
            continue;
        }
        let ax0 = x0.norm();
        let phase = if ax0 == 0.0 { c64(1.0, 0.0) } else { x0 / ax0 };
        let alpha = -phase * xnorm;
        let mut v = vec![c64(0.0, 0.0); n];
        v[k] = x0 - alpha;
        for (i, vi) in v.iter_mut().enumerate().skip(k + 1) {
            *vi = r.get(i, k);
        }
        let tau = 1.0 / (xnorm * xnorm + ax0 * xnorm);
        // R ← H R on rows k.., Q ← Q H on columns k..
        for j in k..n {
            let d: C64 = (k..n).map(|i| v[i].conj() * r.get(i, j)).sum::<C64>() * tau;
            let rd = r.data_mut();
            for i in k..n {
                rd[i * n + j] -= v[i] * d;
            }
        }
        for i in 0..n {
            let d: C64 = (k..n).map(|j| q.get(i, j) * v[j]).sum::<C64>() * tau;
            let qd = q.data_mut();
            for j in k..n {
                qd[i * n + j] -= d * v[j].conj();
            }
        }
        rdiag.push(alpha);
    }
    (q, rdiag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_reproduce_input() {
        let a =
            ComplexMatrix::from_fn(4, 4, |i, j| c64((i * 7 + j * 3) as f64 % 5.0 - 2.0, (i + j) as f64 * 0.3 - 1.0));
        let (q, rdiag) = householder_qr(&a);
        let qq = &q.conj_transpose() * &q;
        assert!(qq.frobenius_distance(&ComplexMatrix::identity(4)).unwrap() < 1e-13);
        let r = &q.conj_transpose() * &a;
        for (i, &d) in rdiag.iter().enumerate() {
            assert!((r.get(i, i) - d).norm() < 1e-12);
            for j in 0..i {
                assert!(r.get(i, j).norm() < 1e-12);
            }
        }
    }
}

//! Hermitian eigendecomposition: Householder reduction to a Hermitian
//! tridiagonal, a diagonal phase change to a real symmetric tridiagonal,
//! then implicit QL with accumulated rotations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{c64, ComplexMatrix, C64};
use crate::tolerance::ToleranceConfig;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// `A = Q · diag(λ) · Q*`, eigenvalues nonincreasing.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub q: ComplexMatrix,
    pub eigenvalues: Vec<f64>,
}

impl HermEig {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let ql = ComplexMatrix::from_fn(n, n, |i, j| self.q.get(i, j) * self.eigenvalues[j]);
        &ql * &self.q.conj_transpose()
    }
}

pub fn herm_eig(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<HermEig> {
    let n = a.require_square()?;
    let residual = a.relative_residual(&a.conj_transpose())?;
    if residual > cfg.eq_tol {
        return Err(Error::NotHermitian { residual });
    }
    let sym = (a + &a.conj_transpose()).scale_real(0.5);
    let (q, diag, sub) = tridiagonalize(&sym);
    let (d_phase, e_real) = real_offdiagonal(&sub);
    let (lambda, z) = tql2(diag, e_real, n)?;

    // Eigenvectors: Q · D · Z, then reorder by decreasing eigenvalue.
    let qd = ComplexMatrix::from_fn(n, n, |i, j| q.get(i, j) * d_phase[j]);
    let zc = ComplexMatrix::from_fn(n, n, |i, j| c64(z[i * n + j], 0.0));
    let vecs = &qd * &zc;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| lambda[y].total_cmp(&lambda[x]));
    let eigenvalues = order.iter().map(|&k| lambda[k]).collect();
    let q = ComplexMatrix::from_fn(n, n, |i, j| vecs.get(i, order[j]));
    Ok(HermEig { q, eigenvalues })
}

/// Returns `(Q, diag, sub)` with `Q* A Q` tridiagonal; `sub[k] = T[k+1][k]`.
fn tridiagonalize(a: &ComplexMatrix) -> (ComplexMatrix, Vec<f64>, Vec<C64>) {
    let n = a.rows();
    let mut t = a.clone();
    let mut q = ComplexMatrix::identity(n);
    let zero = c64(0.0, 0.0);
    for k in 0..n.saturating_sub(2) {
        let x0 = t.get(k + 1, k);
        let xnorm = (k + 1..n).map(|i| t.get(i, k).norm_sqr()).sum::<f64>().sqrt();
        let tail = (k + 2..n).map(|i| t.get(i, k).norm_sqr()).sum::<f64>();
        if xnorm == 0.0 || tail == 0.0 {
            continue;
        }
        let ax0 = x0.norm();
        let phase = if ax0 == 0.0 { c64(1.0, 0.0) } else { x0 / ax0 };
        let alpha = -phase * xnorm;
        let mut v = vec![zero; n];
        v[k + 1] = x0 - alpha;
        for (i, vi) in v.iter_mut().enumerate().skip(k + 2) {
            *vi = t.get(i, k);
        }
        let tau = 1.0 / (xnorm * xnorm + ax0 * xnorm);

        // T ← H T H with H = I − τ v v*, as a rank-2 update.
        let p: Vec<C64> = (0..n).map(|i| (k + 1..n).map(|j| t.get(i, j) * v[j]).sum::<C64>() * tau).collect();
        let kk = v.iter().zip(&p).map(|(vi, pi)| vi.conj() * pi).sum::<C64>().re * tau * 0.5;
        let w: Vec<C64> = p.iter().zip(&v).map(|(pi, vi)| pi - vi * kk).collect();
        let data = t.data_mut();
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] -= v[i] * w[j].conj() + w[i] * v[j].conj();
            }
        }
        let qv: Vec<C64> = (0..n).map(|i| (k + 1..n).map(|j| q.get(i, j) * v[j]).sum::<C64>() * tau).collect();
        let qd = q.data_mut();
        for i in 0..n {
            for j in k + 1..n {
                qd[i * n + j] -= qv[i] * v[j].conj();
            }
        }
    }
    let diag = (0..n).map(|i| t.get(i, i).re).collect();
    let sub = (0..n.saturating_sub(1)).map(|k| t.get(k + 1, k)).collect();
    (q, diag, sub)
}

/// Unit phases `d` with `conj(d[k+1]) · sub[k] · d[k] = |sub[k]|`.
fn real_offdiagonal(sub: &[C64]) -> (Vec<C64>, Vec<f64>) {
    let mut d = Vec::with_capacity(sub.len() + 1);
    d.push(c64(1.0, 0.0));
    for (k, &e) in sub.iter().enumerate() {
        let m = e.norm();
        let next = if m == 0.0 { d[k] } else { d[k] * (e / m) };
        d.push(next);
    }
    (d, sub.iter().map(|e| e.norm()).collect())
}

/// Implicit QL on a real symmetric tridiagonal; returns eigenvalues and the
/// row-major orthogonal eigenvector matrix.
fn tql2(mut d: Vec<f64>, sub: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    if n <= 1 {
        return Ok((d, z));
    }
    let mut e = sub;
    e.push(0.0);
    let limit = 100 * n;
    let mut iterations = 0usize;
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                iterations += 1;
                if iterations > limit {
                    return Err(Error::NoConvergence { algorithm: "tridiagonal QL", limit });
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let zk1 = z[k * n + i + 1];
                        let zk = z[k * n + i];
                        z[k * n + i + 1] = s * zk + c * zk1;
                        z[k * n + i] = c * zk - s * zk1;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok((d, z))
}

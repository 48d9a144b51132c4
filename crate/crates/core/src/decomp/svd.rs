//! Singular value decomposition by one-sided (Hestenes) Jacobi rotations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{c64, ComplexMatrix, C64};
#[cfg(not(feature = "std"))]
use num_traits::Float;

const MAX_SWEEPS: usize = 100;

/// `A = U · diag(σ) · V*` with square unitary `U` (rows×rows) and `V` (cols×cols).
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub u: ComplexMatrix,
    /// Nonincreasing, length `min(rows, cols)`.
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

impl SvdResult {
    /// `U · diag(σ) · V*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        let us = ComplexMatrix::from_fn(m, n, |i, j| {
            if j < self.singular_values.len() {
                self.u.get(i, j) * self.singular_values[j]
            } else {
                c64(0.0, 0.0)
            }
        });
        &us * &self.v.conj_transpose()
    }
}

/// Column-major working copy plus the accumulated right factor.
struct Jacobi {
    m: usize,
    n: usize,
    w: Vec<C64>,
    v: Option<Vec<C64>>,
    converged: bool,
}

impl Jacobi {
    fn run(a: &ComplexMatrix, want_v: bool) -> Self {
        let (m, n) = a.shape();
        debug_assert!(m >= n);
        let mut w = vec![c64(0.0, 0.0); m * n];
        for i in 0..m {
            for j in 0..n {
                w[j * m + i] = a.get(i, j);
            }
        }
        let v = want_v.then(|| {
            let mut v = vec![c64(0.0, 0.0); n * n];
            for j in 0..n {
                v[j * n + j] = c64(1.0, 0.0);
            }
            v
        });
        let mut jac = Jacobi { m, n, w, v, converged: false };
        jac.sweep_until_orthogonal();
        jac
    }

    fn sweep_until_orthogonal(&mut self) {
        let (m, n) = (self.m, self.n);
        let tol = f64::EPSILON * m as f64;
        // Columns at rounding-noise level relative to the whole matrix are
        // numerically zero; rotating them only chases noise.
        let total: f64 = self.w.iter().map(|z| z.norm_sqr()).sum();
        let noise = total * (f64::EPSILON * f64::EPSILON);
        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    let (wp, wq) = split_cols(&mut self.w, m, p, q);
                    let alpha: f64 = wp.iter().map(|z| z.norm_sqr()).sum();
                    let beta: f64 = wq.iter().map(|z| z.norm_sqr()).sum();
                    let gamma: C64 = wp.iter().zip(wq.iter()).map(|(a, b)| a.conj() * b).sum();
                    let g = gamma.norm();
                    if alpha <= noise || beta <= noise || g <= tol * (alpha.sqrt() * beta.sqrt()) {
                        continue;
                    }
                    rotated = true;
                    // Rotate q by the phase of γ so the pair becomes a real 2×2 problem.
                    let phase = (gamma / g).conj();
                    let zeta = (beta - alpha) / (2.0 * g);
                    let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
                    let t = sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = c * t;
                    rotate(wp, wq, phase, c, s);
                    if let Some(v) = self.v.as_mut() {
                        let (vp, vq) = split_cols(v, n, p, q);
                        rotate(vp, vq, phase, c, s);
                    }
                }
            }
            if !rotated {
                self.converged = true;
                return;
            }
        }
    }

    fn col_norms(&self) -> Vec<f64> {
        (0..self.n)
            .map(|j| self.w[j * self.m..(j + 1) * self.m].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .collect()
    }
}

fn split_cols(buf: &mut [C64], len: usize, p: usize, q: usize) -> (&mut [C64], &mut [C64]) {
    debug_assert!(p < q);
    let (head, tail) = buf.split_at_mut(q * len);
    (&mut head[p * len..(p + 1) * len], &mut tail[..len])
}

fn rotate(xp: &mut [C64], xq: &mut [C64], phase: C64, c: f64, s: f64) {
    for (a, b) in xp.iter_mut().zip(xq.iter_mut()) {
        let bq = *b * phase;
        let ap = *a;
        *a = ap * c - bq * s;
        *b = ap * s + bq * c;
    }
}

/// Singular values only, nonincreasing. Never fails: an unconverged
/// Jacobi pass still yields values accurate far beyond any rank cutoff.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let work = if a.rows() >= a.cols() { a.clone() } else { a.conj_transpose() };
    if work.cols() == 0 {
        return Vec::new();
    }
    let mut sv = Jacobi::run(&work, false).col_norms();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

pub fn svd(a: &ComplexMatrix) -> Result<SvdResult> {
    if a.rows() < a.cols() {
        let t = svd_tall(&a.conj_transpose())?;
        return Ok(SvdResult { u: t.v, singular_values: t.singular_values, v: t.u });
    }
    svd_tall(a)
}

fn svd_tall(a: &ComplexMatrix) -> Result<SvdResult> {
    let (m, n) = a.shape();
    let jac = Jacobi::run(a, true);
    if !jac.converged {
        return Err(Error::NoConvergence { algorithm: "one-sided Jacobi SVD", limit: MAX_SWEEPS });
    }
    let norms = jac.col_norms();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let vbuf = jac.v.as_ref().expect("right factor requested");
    let v = ComplexMatrix::from_fn(n, n, |i, k| vbuf[order[k] * n + i]);

    // Left vectors: normalized Jacobi columns, completed to a unitary basis.
    // Noise-level columns were never rotated, so they are not orthogonal to
    // the rest; their left vectors come from the basis completion instead.
    let floor = norms.iter().map(|x| x * x).sum::<f64>().sqrt() * f64::EPSILON;
    let mut basis: Vec<Vec<C64>> = Vec::with_capacity(m);
    let mut slots: Vec<Option<Vec<C64>>> = Vec::with_capacity(m);
    for (k, &j) in order.iter().enumerate() {
        let s = sigma[k];
        if s > floor {
            let col: Vec<C64> = jac.w[j * m..(j + 1) * m].iter().map(|z| z / s).collect();
            basis.push(col.clone());
            slots.push(Some(col));
        } else {
            slots.push(None);
        }
    }
    slots.resize(m, None);
    for slot in slots.iter_mut().filter(|s| s.is_none()) {
        let col = complete_basis(&basis, m);
        basis.push(col.clone());
        *slot = Some(col);
    }
    let cols: Vec<Vec<C64>> = slots.into_iter().map(|s| s.expect("filled")).collect();
    let u = ComplexMatrix::from_fn(m, m, |i, k| cols[k][i]);
    Ok(SvdResult { u, singular_values: sigma, v })
}

/// Unit vector orthogonal to every column of `basis`, from the standard
/// basis vector with the largest residual (classical Gram–Schmidt, twice).
pub(crate) fn complete_basis(basis: &[Vec<C64>], m: usize) -> Vec<C64> {
    let mut best: Option<(f64, Vec<C64>)> = None;
    for e in 0..m {
        let mut x = vec![c64(0.0, 0.0); m];
        x[e] = c64(1.0, 0.0);
        for _ in 0..2 {
            for b in basis {
                let d: C64 = b.iter().zip(&x).map(|(bi, xi)| bi.conj() * xi).sum();
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi -= d * bi;
                }
            }
        }
        let nrm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if best.as_ref().is_none_or(|(bn, _)| nrm > *bn) {
            best = Some((nrm, x));
        }
        if nrm > 0.7 {
            break;
        }
    }
    let (nrm, x) = best.expect("m > 0");
    x.into_iter().map(|z| z / nrm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unitarity_residual(u: &ComplexMatrix) -> f64 {
        (&u.conj_transpose() * u).frobenius_distance(&ComplexMatrix::identity(u.cols())).unwrap()
    }

    fn lcg_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
        let mut s = seed;
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        ComplexMatrix::from_fn(rows, cols, |_, _| c64(next(), next()))
    }

    #[test]
    fn identity_and_diagonal() {
        let r = svd(&ComplexMatrix::identity(3)).unwrap();
        assert_eq!(r.singular_values, vec![1.0, 1.0, 1.0]);
        let r = svd(&ComplexMatrix::diag_real(&[0.5, 2.0])).unwrap();
        assert!((r.singular_values[0] - 2.0).abs() < 1e-15);
        assert!((r.singular_values[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rectangular_reconstruction() {
        for (rows, cols, seed) in [(5, 3, 1), (3, 5, 2), (1, 4, 3), (4, 1, 4), (6, 6, 5)] {
            let a = lcg_matrix(rows, cols, seed);
            let r = svd(&a).unwrap();
            assert_eq!(r.singular_values.len(), rows.min(cols));
            assert!(r.singular_values.windows(2).all(|w| w[0] >= w[1]));
            assert!(r.reconstruct().frobenius_distance(&a).unwrap() < 1e-10 * a.frobenius_norm());
            assert!(unitarity_residual(&r.u) < 1e-10 * rows as f64);
            assert!(unitarity_residual(&r.v) < 1e-10 * cols as f64);
        }
    }

    #[test]
    fn rank_deficient_and_zero() {
        let z = ComplexMatrix::zeros(3, 2);
        let r = svd(&z).unwrap();
        assert_eq!(r.singular_values, vec![0.0, 0.0]);
        assert!(unitarity_residual(&r.u) < 1e-14);
        let x = lcg_matrix(4, 1, 9);
        let y = lcg_matrix(1, 4, 10);
        let a = &x * &y;
        let r = svd(&a).unwrap();
        assert!(r.singular_values[1] < 1e-14 * r.singular_values[0]);
        assert!(unitarity_residual(&r.u) < 1e-12);
        assert!(r.reconstruct().frobenius_distance(&a).unwrap() < 1e-12 * a.frobenius_norm());
    }

    #[test]
    fn values_only_path_agrees() {
        let a = lcg_matrix(4, 6, 77);
        let full = svd(&a).unwrap().singular_values;
        let only = singular_values(&a);
        for (x, y) in full.iter().zip(&only) {
            assert!((x - y).abs() < 1e-13);
        }
    }
}

use alloc::vec::Vec;

use crate::decomp::svd::{svd, SvdResult};
use crate::error::Result;
use crate::matrix::{rank_from_singular_values, ComplexMatrix};
use crate::tolerance::ToleranceConfig;

/// Moore–Penrose inverse from the SVD; singular values at or below the
/// rank cutoff are treated as zero.
pub fn mp_inverse(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<ComplexMatrix> {
    let s = svd(a)?;
    Ok(pinv_from_svd(&s, retained_rank(&s, cfg)))
}

pub(crate) fn retained_rank(s: &SvdResult, cfg: &ToleranceConfig) -> usize {
    rank_from_singular_values(&s.singular_values, 0.0, cfg.rank_cutoff(s.u.rows(), s.v.rows()))
}

/// `V_r · Σ_r⁻¹ · U_r*`.
pub(crate) fn pinv_from_svd(s: &SvdResult, r: usize) -> ComplexMatrix {
    let (m, n) = (s.u.rows(), s.v.rows());
    let inv: Vec<f64> = s.singular_values[..r].iter().map(|x| 1.0 / x).collect();
    let vs = ComplexMatrix::from_fn(n, r, |i, k| s.v.get(i, k) * inv[k]);
    let ur = s.u.block(0, m, 0, r);
    &vs * &ur.conj_transpose()
}

/// `[‖AXA − A‖, ‖XAX − X‖, ‖(AX)* − AX‖, ‖(XA)* − XA‖]`, each divided by
/// `max(1, ‖A‖_F)`.
pub fn penrose_residuals(a: &ComplexMatrix, x: &ComplexMatrix) -> [f64; 4] {
    let scale = 1f64.max(a.frobenius_norm());
    let ax = a * x;
    let xa = x * a;
    let r = |p: ComplexMatrix, q: &ComplexMatrix| p.frobenius_distance(q).expect("shapes agree") / scale;
    [r(&ax * a, a), r(&xa * x, x), r(ax.conj_transpose(), &ax), r(xa.conj_transpose(), &xa)]
}

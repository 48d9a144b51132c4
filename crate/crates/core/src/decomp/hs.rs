use alloc::vec::Vec;

use crate::decomp::pinv::retained_rank;
use crate::decomp::svd::svd;
use crate::error::Result;
use crate::matrix::{c64, ComplexMatrix};
use crate::tolerance::ToleranceConfig;

/// `A = U · [ΣK ΣL; 0 0] · U*` with `KK* + LL* = I_r`.
#[derive(Debug, Clone)]
pub struct HSDecomposition {
    pub u: ComplexMatrix,
    /// Diagonal of `Σ`, positive, length `rank`.
    pub sigma: Vec<f64>,
    /// `r × r`.
    pub k: ComplexMatrix,
    /// `r × (n − r)`.
    pub l: ComplexMatrix,
    pub rank: usize,
}

impl HSDecomposition {
    pub fn n(&self) -> usize {
        self.u.rows()
    }

    /// `ΣK`.
    pub fn sigma_k(&self) -> ComplexMatrix {
        scale_rows(&self.sigma, &self.k)
    }

    /// `KΣ`.
    pub fn k_sigma(&self) -> ComplexMatrix {
        let s = &self.sigma;
        ComplexMatrix::from_fn(self.rank, self.rank, |i, j| self.k.get(i, j) * s[j])
    }

    /// `U · [ΣK ΣL; 0 0] · U*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (n, r) = (self.n(), self.rank);
        let sk = self.sigma_k();
        let sl = scale_rows(&self.sigma, &self.l);
        let mid = ComplexMatrix::from_fn(n, n, |i, j| match (i < r, j < r) {
            (true, true) => sk.get(i, j),
            (true, false) => sl.get(i, j - r),
            _ => c64(0.0, 0.0),
        });
        &(&self.u * &mid) * &self.u.conj_transpose()
    }

    /// `‖KK* + LL* − I_r‖_F`.
    pub fn coisometry_residual(&self) -> f64 {
        let kk = &self.k * &self.k.conj_transpose();
        let ll = &self.l * &self.l.conj_transpose();
        (&kk + &ll).frobenius_distance(&ComplexMatrix::identity(self.rank)).expect("r × r")
    }
}

fn scale_rows(d: &[f64], m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j) * d[i])
}

/// Decomposition built from the SVD `A = U_s S V_s*`: `U = U_s` and
/// `[K L] = V_r* U_s`.
pub fn hs_decompose(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<HSDecomposition> {
    let n = a.require_square()?;
    let s = svd(a)?;
    let r = retained_rank(&s, cfg);
    if r == 0 {
        return Ok(HSDecomposition {
            u: ComplexMatrix::identity(n),
            sigma: Vec::new(),
            k: ComplexMatrix::zeros(0, 0),
            l: ComplexMatrix::zeros(0, n),
            rank: 0,
        });
    }
    let vr = s.v.block(0, n, 0, r);
    let kl = &vr.conj_transpose() * &s.u;
    Ok(HSDecomposition {
        k: kl.block(0, r, 0, r),
        l: kl.block(0, r, r, n),
        sigma: s.singular_values[..r].to_vec(),
        u: s.u,
        rank: r,
    })
}

/// `A† = U · [K*Σ⁻¹ 0; L*Σ⁻¹ 0] · U*`.
pub fn mp_via_hs(d: &HSDecomposition) -> ComplexMatrix {
    let (n, r) = (d.n(), d.rank);
    if r == 0 {
        return ComplexMatrix::zeros(n, n);
    }
    let ks = d.k.conj_transpose();
    let ls = d.l.conj_transpose();
    let mid = ComplexMatrix::from_fn(n, n, |i, j| {
        if j >= r {
            c64(0.0, 0.0)
        } else if i < r {
            ks.get(i, j) / d.sigma[j]
        } else {
            ls.get(i - r, j) / d.sigma[j]
        }
    });
    &(&d.u * &mid) * &d.u.conj_transpose()
}

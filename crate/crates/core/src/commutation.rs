//! When does a positive diagonal `Σ` commute with `K`?
//!
//! `ΣK = KΣ` follows from `Σ^s K = K Σ^s` for any `s ≠ 0`, and from
//! `(Σ^s + Σ^t) K = K (Σ^s + Σ^t)` when `st ≥ 0`, `(s, t) ≠ (0, 0)`.
//! Mixed signs break the second implication: `Σ = diag(2, 1/2)` with
//! `s = 3, t = −3` turns `Σ³ + Σ⁻³` into a scalar matrix.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tolerance::ToleranceConfig;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// `Σ^s` for a positive diagonal given by its entries.
pub fn diag_power(sigma: &[f64], s: i32) -> ComplexMatrix {
    let d: Vec<f64> = sigma.iter().map(|x| x.powi(s)).collect();
    ComplexMatrix::diag_real(&d)
}

/// `‖MK − KM‖_F`.
pub fn commutator_norm(m: &ComplexMatrix, k: &ComplexMatrix) -> Result<f64> {
    m.try_mul(k)?.frobenius_distance(&k.try_mul(m)?)
}

/// Verdict of one instance of the commutation implication.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutationCheck {
    /// Exponents are inside the implication's hypothesis.
    pub hypothesis: bool,
    /// `‖(Σ-expression)K − K(Σ-expression)‖_F`.
    pub premise_residual: f64,
    pub premise_holds: bool,
    /// `‖ΣK − KΣ‖_F`.
    pub conclusion_residual: f64,
    pub conclusion_holds: bool,
}

impl CommutationCheck {
    /// The implication is not contradicted.
    pub fn consistent(&self) -> bool {
        !(self.hypothesis && self.premise_holds) || self.conclusion_holds
    }
}

fn validate(sigma: &[f64], k: &ComplexMatrix) -> Result<()> {
    if let Some(&bad) = sigma.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::NonPositiveDiagonal(bad));
    }
    if k.shape() != (sigma.len(), sigma.len()) {
        return Err(Error::DimensionMismatch { op: "commutation", left: (sigma.len(), sigma.len()), right: k.shape() });
    }
    Ok(())
}

fn evaluate(
    sigma: &[f64],
    k: &ComplexMatrix,
    m: &ComplexMatrix,
    hypothesis: bool,
    cfg: &ToleranceConfig,
) -> Result<CommutationCheck> {
    let premise_residual = commutator_norm(m, k)?;
    let scale = 1f64.max((m * k).frobenius_norm()).max((k * m).frobenius_norm());
    let s1 = diag_power(sigma, 1);
    let conclusion_residual = commutator_norm(&s1, k)?;
    let cscale = 1f64.max((&s1 * k).frobenius_norm()).max((k * &s1).frobenius_norm());
    Ok(CommutationCheck {
        hypothesis,
        premise_residual,
        premise_holds: premise_residual <= cfg.eq_tol * scale,
        conclusion_residual,
        conclusion_holds: conclusion_residual <= cfg.eq_tol * cscale,
    })
}

/// Single power: `Σ^s K = K Σ^s ⇒ ΣK = KΣ` for `s ≠ 0`.
pub fn check_single_power(sigma: &[f64], k: &ComplexMatrix, s: i32, cfg: &ToleranceConfig) -> Result<CommutationCheck> {
    validate(sigma, k)?;
    evaluate(sigma, k, &diag_power(sigma, s), s != 0, cfg)
}

/// Two powers: `(Σ^s + Σ^t)K = K(Σ^s + Σ^t) ⇒ ΣK = KΣ` for `st ≥ 0`, `(s,t) ≠ (0,0)`.
pub fn check_power_pair(
    sigma: &[f64],
    k: &ComplexMatrix,
    s: i32,
    t: i32,
    cfg: &ToleranceConfig,
) -> Result<CommutationCheck> {
    validate(sigma, k)?;
    let m = &diag_power(sigma, s) + &diag_power(sigma, t);
    let hypothesis = (s as i64) * (t as i64) >= 0 && (s, t) != (0, 0);
    evaluate(sigma, k, &m, hypothesis, cfg)
}

/// Sum of non-negative powers, not all zero.
pub fn check_power_sum(
    sigma: &[f64],
    k: &ComplexMatrix,
    exponents: &[u32],
    cfg: &ToleranceConfig,
) -> Result<CommutationCheck> {
    validate(sigma, k)?;
    let r = sigma.len();
    let mut m = ComplexMatrix::zeros(r, r);
    for &e in exponents {
        m = &m + &diag_power(sigma, e as i32);
    }
    evaluate(sigma, k, &m, exponents.iter().any(|&e| e > 0), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    fn swap() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn mixed_sign_escape() {
        let cfg = ToleranceConfig::default();
        let r = check_power_pair(&[2.0, 0.5], &swap(), 3, -3, &cfg).unwrap();
        assert!(!r.hypothesis);
        assert!(r.premise_residual <= 1e-14);
        assert!(r.premise_holds);
        assert!(!r.conclusion_holds);
        assert!((r.conclusion_residual - 4.5f64.sqrt()).abs() < 1e-14);
        assert!(r.consistent());
        let sum = &diag_power(&[2.0, 0.5], 3) + &diag_power(&[2.0, 0.5], -3);
        let v = 65.0 / 8.0;
        assert!(sum.frobenius_distance(&ComplexMatrix::diag_real(&[v, v])).unwrap() < 1e-14);
    }

    #[test]
    fn same_sign_pair_does_not_commute() {
        let cfg = ToleranceConfig::default();
        let r = check_power_pair(&[2.0, 0.5], &swap(), 3, 1, &cfg).unwrap();
        assert!(r.hypothesis && !r.premise_holds && r.consistent());
    }

    #[test]
    fn commuting_block_structure() {
        // K block-diagonal over equal σ's commutes with every power.
        let cfg = ToleranceConfig::default();
        let sigma = [3.0, 3.0, 0.25];
        let k = ComplexMatrix::from_fn(3, 3, |i, j| {
            if (i < 2) == (j < 2) {
                c64(1.0 + i as f64, j as f64 - 0.5)
            } else {
                c64(0.0, 0.0)
            }
        });
        for s in [-2, -1, 1, 4] {
            let r = check_single_power(&sigma, &k, s, &cfg).unwrap();
            assert!(r.premise_holds && r.conclusion_holds);
        }
        let r = check_power_sum(&sigma, &k, &[0, 2, 5], &cfg).unwrap();
        assert!(r.hypothesis && r.premise_holds && r.conclusion_holds);
        let r = check_power_sum(&sigma, &k, &[0, 0], &cfg).unwrap();
        assert!(!r.hypothesis);
    }

    #[test]
    fn validates_inputs() {
        let cfg = ToleranceConfig::default();
        assert_eq!(check_single_power(&[1.0, 0.0], &swap(), 1, &cfg).unwrap_err(), Error::NonPositiveDiagonal(0.0));
        assert!(check_single_power(&[1.0], &swap(), 1, &cfg).is_err());
    }
}

//! Membership tests for the ten matrix classes and the canonical-form
//! signature of an orthogonal tripotent.

use core::fmt;
use core::str::FromStr;

use crate::decomp::{herm_eig, mp_inverse, HSDecomposition};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Hermitian: `A = A*`.
    H,
    /// Idempotent: `A² = A`.
    P,
    /// Orthogonal projector: `A² = A = A*`.
    OP,
    /// Tripotent: `A³ = A`.
    TM,
    /// Normal: `AA* = A*A`.
    N,
    /// EP: `AA† = A†A`.
    EP,
    /// Moore–Penrose invertible: `A† = A`.
    MP,
    /// Star-dagger: `A†A* = A*A†`.
    SD,
    /// Partial isometry: `A = AA*A`.
    PI,
    /// Orthogonal tripotent: `A³ = A = A*`.
    ThreeOP,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 10] = [
        ClassLabel::H,
        ClassLabel::P,
        ClassLabel::OP,
        ClassLabel::TM,
        ClassLabel::N,
        ClassLabel::EP,
        ClassLabel::MP,
        ClassLabel::SD,
        ClassLabel::PI,
        ClassLabel::ThreeOP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::H => "H",
            ClassLabel::P => "P",
            ClassLabel::OP => "OP",
            ClassLabel::TM => "TM",
            ClassLabel::N => "N",
            ClassLabel::EP => "EP",
            ClassLabel::MP => "MP",
            ClassLabel::SD => "SD",
            ClassLabel::PI => "PI",
            ClassLabel::ThreeOP => "ThreeOP",
        }
    }

    /// Labels with a criterion in terms of `Σ`, `K`, `L`.
    pub fn has_hs_criterion(self) -> bool {
        self != ClassLabel::P
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassLabel::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .or(match s {
                "3-OP" | "3OP" | "three-op" => Some(ClassLabel::ThreeOP),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownLabel(s.into()))
    }
}

/// Lazily shared products used by the defining equations.
struct Parts<'a> {
    a: &'a ComplexMatrix,
    cfg: &'a ToleranceConfig,
    star: ComplexMatrix,
    dagger: Option<ComplexMatrix>,
}

impl<'a> Parts<'a> {
    fn new(a: &'a ComplexMatrix, cfg: &'a ToleranceConfig) -> Result<Self> {
        a.require_square()?;
        Ok(Parts { a, cfg, star: a.conj_transpose(), dagger: None })
    }

    fn dagger(&mut self) -> Result<&ComplexMatrix> {
        if self.dagger.is_none() {
            self.dagger = Some(mp_inverse(self.a, self.cfg)?);
        }
        Ok(self.dagger.as_ref().expect("just set"))
    }

    fn residual(&mut self, label: ClassLabel) -> Result<f64> {
        let a = self.a;
        let rel = |x: &ComplexMatrix, y: &ComplexMatrix| x.relative_residual(y).expect("square operands");
        Ok(match label {
            ClassLabel::H => rel(a, &self.star),
            ClassLabel::P => rel(&(a * a), a),
            ClassLabel::OP => rel(&(a * a), a).max(rel(a, &self.star)),
            ClassLabel::TM => rel(&(&(a * a) * a), a),
            ClassLabel::N => rel(&(a * &self.star), &(&self.star * a)),
            ClassLabel::EP => {
                let d = self.dagger()?.clone();
                rel(&(a * &d), &(&d * a))
            }
            ClassLabel::MP => {
                let d = self.dagger()?.clone();
                rel(&d, a)
            }
            ClassLabel::SD => {
                let d = self.dagger()?.clone();
                rel(&(&d * &self.star), &(&self.star * &d))
            }
            ClassLabel::PI => rel(&(&(a * &self.star) * a), a),
            ClassLabel::ThreeOP => rel(&(&(a * a) * a), a).max(rel(a, &self.star)),
        })
    }
}

/// Largest relative residual among the defining equations of `label`.
pub fn membership_residual(a: &ComplexMatrix, label: ClassLabel, cfg: &ToleranceConfig) -> Result<f64> {
    Parts::new(a, cfg)?.residual(label)
}

pub fn is_member(a: &ComplexMatrix, label: ClassLabel, cfg: &ToleranceConfig) -> Result<bool> {
    Ok(membership_residual(a, label, cfg)? <= cfg.eq_tol)
}

/// `(label, member, residual)` for every class, sharing one pseudoinverse.
pub fn classify(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<[(ClassLabel, bool, f64); 10]> {
    let mut parts = Parts::new(a, cfg)?;
    let mut out = [(ClassLabel::H, false, 0.0); 10];
    for (slot, label) in out.iter_mut().zip(ClassLabel::ALL) {
        let r = parts.residual(label)?;
        *slot = (label, r <= cfg.eq_tol, r);
    }
    Ok(out)
}

/// Class criterion read off the Hartwig–Spindelböck blocks.
pub fn hs_class_check(d: &HSDecomposition, label: ClassLabel, cfg: &ToleranceConfig) -> Result<bool> {
    let r = d.rank;
    let eq = |x: &ComplexMatrix, y: &ComplexMatrix| x.approx_eq(y, cfg).expect("conformable blocks");
    let ident = ComplexMatrix::identity(r);
    let l_zero = || eq(&d.l, &ComplexMatrix::zeros(r, d.l.cols()));
    let sigma_one = || eq(&ComplexMatrix::diag_real(&d.sigma), &ident);
    let commutes = || eq(&d.k_sigma(), &d.sigma_k());
    let sk_square_one = || {
        let sk = d.sigma_k();
        eq(&(&sk * &sk), &ident)
    };
    Ok(match label {
        ClassLabel::P => return Err(Error::UnsupportedLabel(label)),
        ClassLabel::EP => l_zero(),
        ClassLabel::PI => sigma_one(),
        ClassLabel::SD => commutes(),
        ClassLabel::N => l_zero() && commutes(),
        ClassLabel::H => {
            let sk = d.sigma_k();
            l_zero() && eq(&sk.conj_transpose(), &sk)
        }
        ClassLabel::MP => l_zero() && sk_square_one(),
        ClassLabel::TM => sk_square_one(),
        ClassLabel::OP => {
            // Hermitian idempotent: L = 0 and ΣK is an orthogonal projector;
            // being invertible on the range, that projector is I_r.
            l_zero() && eq(&d.sigma_k(), &ident)
        }
        ClassLabel::ThreeOP => l_zero() && sigma_one() && eq(&d.k, &d.k.conj_transpose()),
    })
}

/// Inertia of an orthogonal tripotent: counts of eigenvalues +1, −1, 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl Signature {
    pub fn n(&self) -> usize {
        self.p + self.q + self.z
    }

    /// `diag(1,…,1, −1,…,−1, 0,…,0)`.
    pub fn canonical_diagonal(&self) -> alloc::vec::Vec<f64> {
        let mut d = alloc::vec![1.0; self.p];
        d.extend(core::iter::repeat_n(-1.0, self.q));
        d.extend(core::iter::repeat_n(0.0, self.z));
        d
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.z)
    }
}

pub fn signature(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<Signature> {
    if !is_member(a, ClassLabel::ThreeOP, cfg)? {
        return Err(Error::NotThreeOp);
    }
    let eig = herm_eig(a, cfg)?;
    let tol = cfg.eig_class_tol;
    let mut sig = Signature { p: 0, q: 0, z: 0 };
    for &value in &eig.eigenvalues {
        if (value - 1.0).abs() <= tol {
            sig.p += 1;
        } else if (value + 1.0).abs() <= tol {
            sig.q += 1;
        } else if value.abs() <= tol {
            sig.z += 1;
        } else {
            return Err(Error::UnclassifiableEigenvalue { value, tol });
        }
    }
    Ok(sig)
}

/// `A^k = A = A*` collapses to `OP` for even `k` and to `ThreeOP` for odd `k`.
pub fn k_idempotent_reduce(k: i64) -> Result<ClassLabel> {
    match k {
        k if k < 2 => Err(Error::InvalidExponent { k, min: 2 }),
        k if k % 2 == 0 => Ok(ClassLabel::OP),
        _ => Ok(ClassLabel::ThreeOP),
    }
}

/// Direct test of `A^k = A = A*`.
pub fn is_k_orthogonal_idempotent(a: &ComplexMatrix, k: u32, cfg: &ToleranceConfig) -> Result<bool> {
    a.require_square()?;
    Ok(a.pow(k)?.approx_eq(a, cfg)? && a.approx_eq(&a.conj_transpose(), cfg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::hs_decompose;
    use crate::matrix::c64;
    use alloc::vec;

    fn example_4x4() -> ComplexMatrix {
        let r = 1.0 / 3f64.sqrt();
        ComplexMatrix::diag(&[c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, r), c64(0.0, -r)])
    }

    #[test]
    fn identity_in_every_class() {
        let cfg = ToleranceConfig::default();
        for label in ClassLabel::ALL {
            assert!(is_member(&ComplexMatrix::identity(3), label, &cfg).unwrap(), "{label}");
        }
    }

    #[test]
    fn four_by_four_example() {
        let cfg = ToleranceConfig::default();
        let a = example_4x4();
        assert!(!is_member(&a, ClassLabel::ThreeOP, &cfg).unwrap());
        assert!(is_member(&a, ClassLabel::N, &cfg).unwrap());
        assert!(is_member(&a, ClassLabel::EP, &cfg).unwrap());
    }

    #[test]
    fn signed_diagonal_by_hand() {
        let cfg = ToleranceConfig::default();
        let a = ComplexMatrix::diag_real(&[1.0, -1.0, 0.0]);
        let want = [
            (ClassLabel::H, true),
            (ClassLabel::P, false),
            (ClassLabel::OP, false),
            (ClassLabel::TM, true),
            (ClassLabel::N, true),
            (ClassLabel::EP, true),
            (ClassLabel::MP, true),
            (ClassLabel::SD, true),
            (ClassLabel::PI, true),
            (ClassLabel::ThreeOP, true),
        ];
        for (label, member) in want {
            assert_eq!(is_member(&a, label, &cfg).unwrap(), member, "{label}");
        }
        let all = classify(&a, &cfg).unwrap();
        for ((label, member, _), (l2, m2)) in all.iter().zip(want) {
            assert_eq!((*label, *member), (l2, m2));
        }
    }

    #[test]
    fn non_square_rejected() {
        let cfg = ToleranceConfig::default();
        assert!(matches!(
            is_member(&ComplexMatrix::zeros(2, 3), ClassLabel::H, &cfg),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn hs_checks_on_zero_are_vacuous() {
        let cfg = ToleranceConfig::default();
        let d = hs_decompose(&ComplexMatrix::zeros(3, 3), &cfg).unwrap();
        for label in ClassLabel::ALL {
            match hs_class_check(&d, label, &cfg) {
                Ok(v) => assert!(v, "{label}"),
                Err(e) => assert_eq!(e, Error::UnsupportedLabel(ClassLabel::P)),
            }
        }
    }

    #[test]
    fn signature_examples() {
        let cfg = ToleranceConfig::default();
        let s = signature(&ComplexMatrix::diag_real(&[1.0, -1.0, 0.0]), &cfg).unwrap();
        assert_eq!(s, Signature { p: 1, q: 1, z: 1 });
        assert_eq!(signature(&ComplexMatrix::identity(5), &cfg).unwrap(), Signature { p: 5, q: 0, z: 0 });
        assert_eq!(signature(&example_4x4(), &cfg), Err(Error::NotThreeOp));
        assert_eq!(s.canonical_diagonal(), vec![1.0, -1.0, 0.0]);
    }

    #[test]
    fn loose_tolerance_exposes_unclassifiable_eigenvalue() {
        // Accepting diag(1.001) as 3-OP is a tolerance misconfiguration.
        let cfg = ToleranceConfig { eq_tol: 1e-2, ..Default::default() };
        let a = ComplexMatrix::diag_real(&[1.001, 0.0]);
        assert!(matches!(signature(&a, &cfg), Err(Error::UnclassifiableEigenvalue { .. })));
    }

    #[test]
    fn k_idempotent() {
        assert_eq!(k_idempotent_reduce(2), Ok(ClassLabel::OP));
        assert_eq!(k_idempotent_reduce(3), Ok(ClassLabel::ThreeOP));
        assert_eq!(k_idempotent_reduce(7), Ok(ClassLabel::ThreeOP));
        assert_eq!(k_idempotent_reduce(10), Ok(ClassLabel::OP));
        assert_eq!(k_idempotent_reduce(1), Err(Error::InvalidExponent { k: 1, min: 2 }));
        let cfg = ToleranceConfig::default();
        let a = ComplexMatrix::diag_real(&[1.0, -1.0, 0.0]);
        assert!(is_k_orthogonal_idempotent(&a, 7, &cfg).unwrap());
        assert!(!is_k_orthogonal_idempotent(&a, 4, &cfg).unwrap());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("threeop".parse::<ClassLabel>(), Ok(ClassLabel::ThreeOP));
        assert_eq!("3-OP".parse::<ClassLabel>(), Ok(ClassLabel::ThreeOP));
        assert_eq!("pi".parse::<ClassLabel>(), Ok(ClassLabel::PI));
        assert!("XX".parse::<ClassLabel>().is_err());
    }
}

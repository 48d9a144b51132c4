use crate::decomp::pinv::mp_inverse;
use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::tolerance::ToleranceConfig;

/// Which Gram matrix: `AA*` (left) or `A*A` (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GramSide {
    Left,
    Right,
}

/// `(AA*)^s` or `(A*A)^s`, negative exponents in the Khatri sense:
/// `G^{-k} = (G†)^k`.
pub fn gram_power(a: &ComplexMatrix, which: GramSide, s: i32, cfg: &ToleranceConfig) -> Result<ComplexMatrix> {
    a.require_square()?;
    if s >= 0 {
        return gram(a, which).pow(s.unsigned_abs());
    }
    let p = mp_inverse(a, cfg)?;
    gram_pinv(&p, which).pow(s.unsigned_abs())
}

pub(crate) fn gram(a: &ComplexMatrix, which: GramSide) -> ComplexMatrix {
    let s = a.conj_transpose();
    match which {
        GramSide::Left => a * &s,
        GramSide::Right => &s * a,
    }
}

/// `(AA*)† = (A†)*A†` and `(A*A)† = A†(A†)*`, sharing `A`'s rank decision.
pub(crate) fn gram_pinv(dagger: &ComplexMatrix, which: GramSide) -> ComplexMatrix {
    let ds = dagger.conj_transpose();
    match which {
        GramSide::Left => &ds * dagger,
        GramSide::Right => dagger * &ds,
    }
}

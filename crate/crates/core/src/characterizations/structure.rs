//! Canonical form, `A = A* = A†`, the projector split, SVD factors,
//! class intersections, `k`-idempotents and the averages.

use super::catalog::{AverageVariant, Outcome};
use super::{Eval, Subject};
use crate::classes::{k_idempotent_reduce, membership_residual, ClassLabel};
use crate::decomp::herm_eig;
use crate::error::Result;
use crate::matrix::{c64, ComplexMatrix};
#[cfg(not(feature = "std"))]
use num_traits::Float;

pub(crate) fn canonical_form(s: &Subject<'_>) -> Result<Outcome> {
    let mut e = Eval::new(s);
    let a = s.a();
    if e.eq("A = A*", a, s.star()) {
        let eig = herm_eig(a, s.cfg())?;
        let snap = eig
            .eigenvalues
            .iter()
            .map(|&x| [-1.0, 0.0, 1.0].iter().map(|c| (x - c).abs()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max);
        e.record("eigenvalue distance to {-1,0,1}", snap, snap <= s.cfg().eig_class_tol);
    }
    Ok(Outcome::three_op(s, e))
}

pub(crate) fn star_dagger(s: &Subject<'_>) -> Outcome {
    let mut e = Eval::new(s);
    e.eq("A = A*", s.a(), s.star());
    e.eq("A = A†", s.a(), s.dagger());
    Outcome::three_op(s, e)
}

/// `E = (A² + A)/2`, `F = (A² − A)/2`: commuting orthogonal projectors with
/// `A = E − F`, equivalently `H = E`, `L = −F` orthogonal tripotents with
/// `HL = LH = 0`.
pub(crate) fn structural(s: &Subject<'_>) -> Outcome {
    let mut e = Eval::new(s);
    let a = s.a();
    let a2 = a * a;
    let big_e = (&a2 + a).scale_real(0.5);
    let big_f = (&a2 - a).scale_real(0.5);
    let cfg = s.cfg();
    let mut member = |name: &str, m: &ComplexMatrix, label: ClassLabel| {
        let r = membership_residual(m, label, cfg).expect("square");
        e.record(name, r, r <= cfg.eq_tol);
    };
    member("E in OP", &big_e, ClassLabel::OP);
    member("F in OP", &big_f, ClassLabel::OP);
    let h = big_e.clone();
    let l = -&big_f;
    member("H in 3-OP", &h, ClassLabel::ThreeOP);
    member("L in 3-OP", &l, ClassLabel::ThreeOP);
    e.eq("EF = FE", &(&big_e * &big_f), &(&big_f * &big_e));
    e.eq("A = E - F", a, &(&big_e - &big_f));
    let zero = ComplexMatrix::zeros(s.n(), s.n());
    e.eq("HL = 0", &(&h * &l), &zero);
    e.eq("LH = 0", &(&l * &h), &zero);
    Outcome::three_op(s, e)
}

pub(crate) fn svd_factors(s: &Subject<'_>) -> Outcome {
    let mut e = Eval::new(s);
    let (n, r) = (s.n(), s.rank());
    let u1 = s.svd().u.block(0, n, 0, r);
    let v1 = s.svd().v.block(0, n, 0, r);
    let ident = ComplexMatrix::identity(r);
    let u1s = u1.conj_transpose();
    let v1s = v1.conj_transpose();
    e.eq("U1*U1 = I", &(&u1s * &u1), &ident);
    e.eq("V1*V1 = I", &(&v1s * &v1), &ident);
    e.eq("A = U1V1*", s.a(), &(&u1 * &v1s));
    e.eq("A = V1U1*", s.a(), &(&v1 * &u1s));
    let m = &u1s * &v1;
    e.eq("(U1*V1)^2 = I", &(&m * &m), &ident);
    Outcome::three_op(s, e)
}

pub(crate) fn class_intersection(s: &Subject<'_>, item: char) -> Outcome {
    use ClassLabel::*;
    // Item (a) is printed with the idempotents but proved for the tripotents.
    let labels: &[ClassLabel] = match item {
        'a' => &[TM, N],
        'b' => &[H, PI],
        'c' => &[H, MP],
        'd' => &[TM, EP, PI],
        'e' => &[TM, EP, SD],
        'f' => &[MP, SD],
        _ => &[MP, PI],
    };
    let mut e = Eval::new(s);
    for &l in labels {
        let m = s.is_member(l);
        e.record(l.name(), if m { 0.0 } else { 1.0 }, m);
    }
    Outcome::three_op(s, e)
}

pub(crate) fn k_idempotent(s: &Subject<'_>, k: u32) -> Outcome {
    let reduced = k_idempotent_reduce(k as i64).expect("validated k ≥ 2");
    let mut e = Eval::new(s);
    let a = s.a();
    e.eq("A^k = A", &a.pow(k).expect("square"), a);
    e.eq("A = A*", a, s.star());
    Outcome {
        condition: e.holds,
        target: if reduced == ClassLabel::OP { "OP" } else { "3-OP" },
        target_holds: s.is_member(reduced),
        residuals: e.residuals,
        exclusion_flag: None,
    }
}

pub(crate) fn average(s: &Subject<'_>, v: AverageVariant) -> Outcome {
    let mut e = Eval::new(s);
    let a = s.a();
    let mean = (&(a + s.star()) + s.dagger()).scale_real(1.0 / 3.0);
    let mut exclusion_flag = None;
    match v {
        AverageVariant::ToA => {
            e.eq("(A + A* + A†)/3 = A", &mean, a);
        }
        AverageVariant::ToDagger => {
            e.eq("(A + A* + A†)/3 = A†", &mean, s.dagger());
        }
        AverageVariant::ToStar => {
            e.eq("(A + A* + A†)/3 = A*", &mean, s.star());
            // σ_min(A − λI) is the distance from λ to the spectrum when A is
            // normal and a lower bound for it otherwise.
            let r = 1.0 / 3f64.sqrt();
            let dist = [r, -r]
                .iter()
                .map(|&im| {
                    let shifted = a - &ComplexMatrix::identity(s.n()).scale(c64(0.0, im));
                    crate::decomp::singular_values(&shifted).last().copied().unwrap_or(0.0)
                })
                .fold(f64::INFINITY, f64::min);
            e.residuals.push(("sigma_min(A -+ i/sqrt3 I)".into(), dist));
            exclusion_flag = Some(dist > s.cfg().eig_class_tol);
        }
    }
    Outcome { exclusion_flag, ..Outcome::three_op(s, e) }
}

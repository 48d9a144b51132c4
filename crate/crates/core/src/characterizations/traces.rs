//! Rank and trace identities.

use super::catalog::Outcome;
use super::equations::gram_is_projector;
use super::{Eval, Subject};
use crate::decomp::GramSide;
use crate::matrix::{c64, ComplexMatrix, C64};

fn tr(m: &ComplexMatrix) -> C64 {
    m.trace().expect("square")
}

fn real(x: f64) -> C64 {
    c64(x, 0.0)
}

fn normal(e: &mut Eval<'_, '_>) -> bool {
    let s = e.subject;
    e.eq("AA* = A*A", &s.gram_power(GramSide::Left, 1), &s.gram_power(GramSide::Right, 1))
}

pub(crate) fn rank_trace(s: &Subject<'_>, item: char) -> Outcome {
    let mut e = Eval::new(s);
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let r = s.rank() as f64;
    let right = s.gram_power(GramSide::Right, 1);
    let left = s.gram_power(GramSide::Left, 1);
    let re_tr_a2 = real(2.0 * tr(&(a * a)).re);
    match item {
        'b' | 'c' => {
            let lhs = tr(&right) + tr(&s.gram_power(GramSide::Right, -1));
            e.trace_eq("tr(A*A) + tr((A*A)†) = 2r(A)", lhs, real(2.0 * r));
            if item == 'b' {
                e.eq("A*A = A*A†", &right, &(st * d));
            } else {
                e.eq("A†A = A†A*", &(d * a), &(d * st));
            }
        }
        'd' => {
            e.trace_eq("tr(AA*) + tr(A*A) = 2Re tr(A²)", tr(&left) + tr(&right), re_tr_a2);
            e.eq("A*A = A*A†", &right, &(st * d));
        }
        _ => {
            let a3 = &(a * a) * a;
            let lhs = tr(&(a * d)) + tr(&(&(&a3 * d) * &(st * st)));
            e.trace_eq("tr(AA†) + tr(A³A†(A*)²) = 2Re tr(A²)", lhs, re_tr_a2);
            normal(&mut e);
        }
    }
    Outcome::three_op(s, e)
}

pub(crate) fn remark(s: &Subject<'_>, item: char, k: u32) -> Outcome {
    let mut e = Eval::new(s);
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let r = real(s.rank() as f64);
    let a2 = a * a;
    let re_tr_a2 = real(2.0 * tr(&a2).re);
    match item {
        'a' => {
            e.eq("A = A*", a, st);
            e.trace_eq("r(A) + tr(A⁴) = 2Re tr(A²)", r + tr(&(&a2 * &a2)), re_tr_a2);
        }
        'b' => {
            normal(&mut e);
            let r_add = s.derived_rank("AA†", 1.0, || a * d) as f64;
            let lhs = real(r_add) + tr(&(&a2 * &(st * st)));
            e.trace_eq("r(AA†) + tr(A²(A*)²) = 2Re tr(A²)", lhs, re_tr_a2);
        }
        _ => {
            let ak = a.pow(k).expect("square");
            let lhs = r + tr(&(&(&ak * d) * &st.pow(k - 1).expect("square")));
            let rhs = real(2.0 * tr(&a.pow(k - 1).expect("square")).re);
            e.trace_eq("r(A) + tr(A^k A†(A*)^(k-1)) = 2Re tr(A^(k-1))", lhs, rhs);
            let target = ak.approx_eq(a, s.cfg()).expect("square");
            return Outcome {
                condition: e.holds,
                target: "A^k = A",
                target_holds: target,
                residuals: e.residuals,
                exclusion_flag: None,
            };
        }
    }
    Outcome::three_op(s, e)
}

pub(crate) fn normal_trace(s: &Subject<'_>, item: char) -> Outcome {
    let mut e = Eval::new(s);
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let r = real(s.rank() as f64);
    normal(&mut e);
    e.merge(gram_is_projector(s));
    let tr_gram = tr(&s.gram_power(GramSide::Left, 1));
    match item {
        'b' => e.trace_eq("r(A) + tr(AA*) = 2tr(A²)", r + tr_gram, tr(&(a * a)) * 2.0),
        'c' => e.trace_eq("r(A) + tr(AA†) = 2tr(A*A†)", r + tr(&(a * d)), tr(&(st * d)) * 2.0),
        'd' => e.trace_eq("r(A) + tr(AA*) = 2Re tr((A*)²)", r + tr_gram, real(2.0 * tr(&(st * st)).re)),
        // The printed `tr(A†)²` is read as `tr((A†)²)`.
        _ => {
            e.trace_eq("r(A) + tr(AA*) = Re(tr(AA†) + tr((A†)²))", r + tr_gram, real((tr(&(a * d)) + tr(&(d * d))).re))
        }
    };
    Outcome::three_op(s, e)
}

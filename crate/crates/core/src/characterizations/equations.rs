//! Matrix equations in `A`, `A*`, `A†` and integer Gram powers.

use alloc::format;
use alloc::string::String;

use super::catalog::{gram_pair_mirror, gram_single_mirror, Outcome};
use super::{Eval, Part, PowerParams, Subject};
use crate::classes::{membership_residual, ClassLabel};
use crate::decomp::GramSide;
use crate::matrix::ComplexMatrix;

#[derive(Clone, Copy)]
enum Op {
    A,
    Star,
    Dagger,
}

type Term = (Op, Option<(GramSide, i32)>);

fn term_name((op, g): Term) -> String {
    let head = match op {
        Op::A => "A",
        Op::Star => "A*",
        Op::Dagger => "A†",
    };
    match g {
        None => head.into(),
        Some((GramSide::Left, e)) => format!("{head}(AA*)^{e}"),
        Some((GramSide::Right, e)) => format!("{head}(A*A)^{e}"),
    }
}

fn term(s: &Subject<'_>, (op, g): Term) -> ComplexMatrix {
    let m = match op {
        Op::A => s.a(),
        Op::Star => s.star(),
        Op::Dagger => s.dagger(),
    };
    match g {
        None => m.clone(),
        Some((side, e)) => m * &s.gram_power(side, e),
    }
}

/// `lhs = rhs`, shared between every checker that uses it.
fn identity(s: &Subject<'_>, lhs: Term, rhs: Term) -> Part {
    let name = format!("{} = {}", term_name(lhs), term_name(rhs));
    s.part(&name, |e| {
        e.eq(&name, &term(s, lhs), &term(s, rhs));
    })
}

const L: GramSide = GramSide::Left;
const R: GramSide = GramSide::Right;

/// Power-family item `b`–`g`.
pub(crate) fn power_identity(s: &Subject<'_>, item: char, p: PowerParams) -> Part {
    let PowerParams { s: x, t: y } = p;
    let (lhs, rhs) = match item {
        'b' => ((Op::A, Some((L, x))), (Op::Dagger, Some((L, y)))),
        'c' => ((Op::Star, Some((L, x))), (Op::A, Some((R, y)))),
        'd' => ((Op::A, Some((R, x))), (Op::Star, Some((R, y)))),
        'e' => ((Op::A, Some((R, x))), (Op::Dagger, Some((R, y)))),
        'f' => ((Op::A, Some((L, x))), (Op::Star, Some((L, y)))),
        _ => ((Op::A, Some((R, x))), (Op::Dagger, Some((L, y)))),
    };
    identity(s, lhs, rhs)
}

/// Corollary item `b`–`i`.
pub(crate) fn corollary_identity(s: &Subject<'_>, item: char, x: i32) -> Part {
    let (lhs, rhs) = match item {
        'b' => ((Op::A, None), (Op::Dagger, Some((L, x)))),
        'c' => ((Op::Dagger, None), (Op::A, Some((L, x)))),
        'd' => ((Op::Star, None), (Op::A, Some((R, x)))),
        'e' => ((Op::A, None), (Op::Star, Some((L, x)))),
        'f' => ((Op::A, None), (Op::Star, Some((R, x)))),
        'g' => ((Op::A, None), (Op::Dagger, Some((R, x)))),
        'h' => ((Op::Dagger, None), (Op::A, Some((R, x)))),
        _ => ((Op::Star, None), (Op::A, Some((L, x)))),
    };
    identity(s, lhs, rhs)
}

pub(crate) fn power(s: &Subject<'_>, item: char, p: PowerParams) -> Outcome {
    let mut e = Eval::new(s);
    e.merge(power_identity(s, item, p));
    Outcome::three_op(s, e)
}

pub(crate) fn corollary(s: &Subject<'_>, item: char, x: i32) -> Outcome {
    let mut e = Eval::new(s);
    e.merge(corollary_identity(s, item, x));
    Outcome::three_op(s, e)
}

/// `AA* ∈ OP`.
pub(crate) fn gram_is_projector(s: &Subject<'_>) -> Part {
    s.part("AA* in OP", |e| {
        let g = s.gram_power(GramSide::Left, 1);
        let r = membership_residual(&g, ClassLabel::OP, s.cfg()).expect("square");
        e.record("AA* in OP", r, r <= s.cfg().eq_tol);
    })
}

pub(crate) fn gram_projector(s: &Subject<'_>, item: char, p: PowerParams) -> Outcome {
    let mut e = Eval::new(s);
    e.merge(gram_is_projector(s));
    if item <= 'g' {
        e.merge(corollary_identity(s, gram_single_mirror(item), p.s));
    } else {
        e.merge(power_identity(s, gram_pair_mirror(item), p));
    }
    Outcome::three_op(s, e)
}

pub(crate) fn linear(s: &Subject<'_>, item: char) -> Outcome {
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let a2 = a * a;
    let (name, lhs, rhs) = match item {
        'b' => ("A* + AA†A* = A + AA*A", st + &(&(a * d) * st), a + &(&(a * st) * a)),
        'c' => ("A + AA†A* = A† + AA*A†", a + &(&(a * d) * st), d + &(&(a * st) * d)),
        'd' => ("A + A²A† = A† + A†AA*", a + &(&a2 * d), d + &(&(d * a) * st)),
        'e' => ("A + A²A* = A† + A†AA*", a + &(&a2 * st), d + &(&(d * a) * st)),
        'f' => ("A + A²A* = A* + A*AA*", a + &(&a2 * st), st + &(&(st * a) * st)),
        'g' => ("A†A + A†A* = A² + (A*)²", &(d * a) + &(d * st), &a2 + &(st * st)),
        _ => ("A†A + A*A† = A² + (A*)²", &(d * a) + &(st * d), &a2 + &(st * st)),
    };
    let mut e = Eval::new(s);
    e.eq(name, &lhs, &rhs);
    Outcome::three_op(s, e)
}

//! Rank conditions: the tripotency/Hermitian condition matrix, the
//! rank-Gram matrix and the coprime-polynomial rank identity.

use alloc::format;

use super::catalog::Outcome;
use super::equations::{corollary_identity, power_identity};
use super::{Eval, Part, PowerParams, Subject};
use crate::decomp::svd;
use crate::error::Result;
use crate::matrix::{rank_from_singular_values, ComplexMatrix};

fn ident(s: &Subject<'_>) -> ComplexMatrix {
    ComplexMatrix::identity(s.n())
}

/// Operand scale of `I ± A`.
fn shift_ref(s: &Subject<'_>) -> f64 {
    1f64.max(s.sigma_max())
}

fn rank_i_minus_a(s: &Subject<'_>) -> usize {
    s.derived_rank("I-A", shift_ref(s), || &ident(s) - s.a())
}

fn rank_i_plus_a(s: &Subject<'_>) -> usize {
    s.derived_rank("I+A", shift_ref(s), || &ident(s) + s.a())
}

/// `r(A) + r(I − A) + r(I + A)`.
fn rank_sum(s: &Subject<'_>) -> usize {
    s.rank() + rank_i_minus_a(s) + rank_i_plus_a(s)
}

/// Orthonormal basis of the null space, with the rank decision of
/// [`Subject::derived_rank`].
fn null_basis(s: &Subject<'_>, m: &ComplexMatrix, reference: f64) -> Result<ComplexMatrix> {
    let n = s.n();
    let d = svd(m)?;
    let r = rank_from_singular_values(&d.singular_values, reference, s.cfg().rank_cutoff(n, n));
    Ok(d.v.block(0, n, r, n))
}

fn kernel_sum(s: &Subject<'_>) -> Result<Part> {
    if let Some(p) = s.parts.borrow().get("cm-row-c") {
        return Ok(p.clone());
    }
    let i = ident(s);
    let bases = [
        null_basis(s, s.a(), 0.0)?,
        null_basis(s, &(&i - s.a()), shift_ref(s))?,
        null_basis(s, &(&i + s.a()), shift_ref(s))?,
    ];
    Ok(s.part("cm-row-c", |e| {
        let n = s.n();
        let dims: usize = bases.iter().map(|b| b.cols()).sum();
        e.rank_eq("dim N(A) + dim N(I-A) + dim N(I+A) = n", dims, n);
        let joined = ComplexMatrix::hstack(&[&bases[0], &bases[1], &bases[2]]).expect("n rows each");
        let span = s.derived_rank("[N(A) N(I-A) N(I+A)]", 1.0, || joined);
        e.rank_eq("dim(N(A) + N(I-A) + N(I+A)) = n", span, n);
    }))
}

fn row_part(s: &Subject<'_>, row: char, k: u32) -> Result<Part> {
    let n = s.n();
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let key = format!("cm-row-{row}[k={k}]");
    Ok(match row {
        'c' => kernel_sum(s)?,
        'a' => s.part(&key, |e| {
            e.rank_eq("r(A) + r(I-A) + r(I+A) = 2n", rank_sum(s), 2 * n);
        }),
        'b' => s.part(&key, |e| {
            e.rank_eq("r(A) + r(I-A) + r(I+A) = n", rank_sum(s), n);
            let i = ident(s);
            let span = s.derived_rank("[A I-A I+A]", shift_ref(s), || {
                ComplexMatrix::hstack(&[a, &(&i - a), &(&i + a)]).expect("n rows each")
            });
            e.rank_eq("r([A, I-A, I+A]) = n", span, n);
        }),
        'd' | 'e' => s.part(&key, |e| {
            let ak = a.pow(k).expect("square");
            e.eq("A^(k+2) = A^k", &(&(&ak * a) * a), &ak);
            if row == 'd' {
                // With spectrum in {0, 1, −1}: diagonalizable iff the
                // geometric multiplicities of those eigenvalues sum to n.
                let geo = 3 * n - rank_sum(s);
                e.rank_eq("geometric multiplicities of 0, 1, -1 sum to n", geo, n);
            } else {
                e.eq("AA† = A†A", &(a * d), &(d * a));
            }
        }),
        'f' => s.part(&key, |e| {
            e.eq("A†(A²)* = A†", &(d * &(st * st)), d);
        }),
        _ => s.part(&key, |e| {
            e.eq("A† = A†A³A†", d, &(&(d * &(&(a * a) * a)) * d));
        }),
    })
}

fn col_part(s: &Subject<'_>, col: char) -> Part {
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    s.part(&format!("cm-col-{col}"), |e| {
        match col {
            'a' => e.eq("A†A = A†A*", &(d * a), &(d * st)),
            'b' => e.eq("A†A = A*A†", &(d * a), &(st * d)),
            'c' => e.eq("A* = A²A†", st, &(&(a * a) * d)),
            'd' => e.eq("A = AA†A*", a, &(&(a * d) * st)),
            'e' => e.eq("A = A*AA†", a, &(&(st * a) * d)),
            'f' => e.eq("A = A†A*A", a, &(&(d * st) * a)),
            _ => e.eq("A = A*A†A", a, &(&(st * d) * a)),
        };
    })
}

pub(crate) fn condition_matrix(s: &Subject<'_>, row: char, col: char, k: u32) -> Result<Outcome> {
    let mut e = Eval::new(s);
    e.merge(row_part(s, row, k)?);
    e.merge(col_part(s, col));
    Ok(Outcome::three_op(s, e))
}

pub(crate) fn rank_gram(s: &Subject<'_>, row: char, col: char, p: PowerParams) -> Outcome {
    let n = s.n();
    let (a, st, d) = (s.a(), s.star(), s.dagger());
    let sm = s.sigma_max();
    let gram_ref = 1f64.max(sm * sm);
    let smin = s.svd().singular_values.get(s.rank().wrapping_sub(1)).copied().unwrap_or(0.0);
    let mixed_ref = if s.rank() == 0 { 1.0 } else { 1f64.max(sm / smin) };
    let i = ident(s);
    let (name, r) = match row {
        'a' => ("r(I - AA*) = n - r(A)", s.derived_rank("I-AA*", gram_ref, || &i - &(a * st))),
        'b' => ("r(I - A*A) = n - r(A)", s.derived_rank("I-A*A", gram_ref, || &i - &(st * a))),
        'c' => ("r(I - A†A*) = n - r(A)", s.derived_rank("I-A†A*", mixed_ref, || &i - &(d * st))),
        _ => ("r(I - A*A†) = n - r(A)", s.derived_rank("I-A*A†", mixed_ref, || &i - &(st * d))),
    };
    let mut e = Eval::new(s);
    e.rank_eq(name, r, n - s.rank());
    let column = match col {
        'a' => corollary_identity(s, 'f', p.s),
        'b' => power_identity(s, 'c', p),
        'c' => power_identity(s, 'd', p),
        'd' => power_identity(s, 'f', p),
        'e' => power_identity(s, 'g', p),
        'f' => power_identity(s, 'b', p),
        _ => power_identity(s, 'e', p),
    };
    e.merge(column);
    Outcome::three_op(s, e)
}

/// `r(A) + r(I − A) + r(I + A) = 2n + r(A − A³)`, true for every `A`.
pub(crate) fn coprime(s: &Subject<'_>) -> Outcome {
    let a = s.a();
    let sm = s.sigma_max();
    let lhs = rank_sum(s);
    let cubic = s.derived_rank("A-A^3", sm.max(sm * sm * sm), || a - &(&(a * a) * a));
    let mut e = Eval::new(s);
    e.record("r(A)", s.rank() as f64, true);
    e.record("r(I-A)", rank_i_minus_a(s) as f64, true);
    e.record("r(I+A)", rank_i_plus_a(s) as f64, true);
    e.record("r(A-A^3)", cubic as f64, true);
    e.rank_eq("r(A) + r(I-A) + r(I+A) = 2n + r(A-A^3)", lhs, 2 * s.n() + cubic);
    Outcome { condition: e.holds, target: "identity", target_holds: true, residuals: e.residuals, exclusion_flag: None }
}

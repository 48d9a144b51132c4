use super::*;
use crate::error::Error;
use crate::generators::{generate, star_average_example, Construction, GenSpec};
use crate::matrix::c64;

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn real_diag(d: &[f64]) -> ComplexMatrix {
    ComplexMatrix::diag_real(d)
}

fn three_op(n: usize, seed: u64) -> ComplexMatrix {
    generate(&GenSpec::new(n, Construction::Label(ClassLabel::ThreeOP), seed)).unwrap()
}

/// `P diag(1, −1, 0) P⁻¹` with a shear `P`.
fn sheared_tripotent() -> ComplexMatrix {
    let p = ComplexMatrix::from_real(3, 3, &[1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
    let p_inv = ComplexMatrix::from_real(3, 3, &[1.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
    &(&p * &real_diag(&[1.0, -1.0, 0.0])) * &p_inv
}

fn pi_non_ep(seed: u64) -> ComplexMatrix {
    generate(&GenSpec::new(4, Construction::PartialIsometryNonEp, seed)).unwrap()
}

#[test]
fn canonical_form_examples() {
    let r = check_canonical_form(&real_diag(&[1.0, -1.0, 0.0]), &cfg()).unwrap();
    assert!(r.condition_holds && r.is_three_op && r.verdict_consistent);
    assert!(r.witness.is_none());

    let r = check_canonical_form(&star_average_example(), &cfg()).unwrap();
    assert!(!r.condition_holds && !r.is_three_op && r.verdict_consistent);

    let a = sheared_tripotent();
    assert!((&(&a * &a) * &a).frobenius_distance(&a).unwrap() < 1e-12);
    let r = check_canonical_form(&a, &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
}

#[test]
fn star_dagger_examples() {
    let r = check_star_dagger_identity(&three_op(5, 1), &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    let r = check_star_dagger_identity(&real_diag(&[2.0]), &cfg()).unwrap();
    assert!(!r.condition_holds && !r.is_three_op);
    let r = check_star_dagger_identity(&star_average_example(), &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
}

#[test]
fn structural_examples() {
    let r = check_structural(&real_diag(&[1.0, -1.0, 0.0]), &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    assert!(r.residual("HL = 0").unwrap() == 0.0);
    let r = check_structural(&ComplexMatrix::zeros(3, 3), &cfg()).unwrap();
    assert!(r.condition_holds && r.is_three_op);
    let r = check_structural(&three_op(6, 4), &cfg()).unwrap();
    assert!(r.condition_holds);
    assert!(r.max_residual() < cfg().eq_tol);
}

#[test]
fn svd_factor_examples() {
    let r = check_svd_factors(&ComplexMatrix::identity(2), &cfg()).unwrap();
    assert!(r.condition_holds && r.max_residual() < 1e-15);
    let spec = GenSpec { rank: Some(4), ..GenSpec::new(6, Construction::Label(ClassLabel::ThreeOP), 2) };
    let r = check_svd_factors(&generate(&spec).unwrap(), &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    let r = check_svd_factors(&pi_non_ep(3), &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
}

#[test]
fn average_examples() {
    let a = three_op(4, 8);
    for v in [AverageVariant::ToA, AverageVariant::ToDagger, AverageVariant::ToStar] {
        let r = check_average(&a, v, &cfg()).unwrap();
        assert!(r.condition_holds && r.verdict_consistent, "{v:?}");
    }
    let ex = star_average_example();
    let r = check_average(&ex, AverageVariant::ToStar, &cfg()).unwrap();
    assert!(r.condition_holds);
    assert!(!r.is_three_op);
    assert_eq!(r.exclusion_flag, Some(false));
    assert!(r.verdict_consistent);
    assert!(r.witness.is_some());

    let r = check_average(&ex, AverageVariant::ToA, &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
}

#[test]
fn linear_examples() {
    let a = three_op(5, 11);
    for v in 'b'..='h' {
        assert!(check_linear_family(&a, v, &cfg()).unwrap().condition_holds, "{v}");
    }
    let g = generate(&GenSpec::new(4, Construction::Gaussian, 5)).unwrap();
    let r = check_linear_family(&g, 'b', &cfg()).unwrap();
    assert!(!r.condition_holds && !r.is_three_op);
    // 2 + 2 = 4 against 2 + 8 = 10.
    let r = check_linear_family(&real_diag(&[2.0]), 'b', &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
    assert!(matches!(check_linear_family(&a, 'i', &cfg()), Err(Error::UnknownVariant { .. })));
}

#[test]
fn power_examples() {
    let p = PowerParams::new(2, 0);
    let r = check_power_family(&three_op(4, 2), 'b', p, &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    // 2·4² = 32 against 1/2.
    let r = check_power_family(&real_diag(&[2.0]), 'b', p, &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
    let err = check_power_family(&real_diag(&[2.0]), 'b', PowerParams::new(1, 2), &cfg()).unwrap_err();
    assert!(matches!(err, Error::SideCondition { .. }));
    let err = check_power_family(&real_diag(&[2.0]), 'c', PowerParams::new(1, 1), &cfg()).unwrap_err();
    assert!(matches!(err, Error::SideCondition { .. }));
}

#[test]
fn corollary_examples() {
    let r = check_corollary_powers(&three_op(4, 3), 'b', 2, &cfg()).unwrap();
    assert!(r.condition_holds);
    let u = ComplexMatrix::diag(&[c64(0.0, 1.0), c64(0.0, -1.0)]);
    let r = check_corollary_powers(&u, 'd', 2, &cfg()).unwrap();
    assert!(!r.condition_holds && !r.is_three_op && r.verdict_consistent);
    assert!(matches!(check_corollary_powers(&u, 'b', 1, &cfg()), Err(Error::SideCondition { .. })));
    assert!(matches!(check_corollary_powers(&u, 'c', -1, &cfg()), Err(Error::SideCondition { .. })));
}

#[test]
fn gram_projector_examples() {
    let r = check_gram_projector_family(&three_op(5, 6), 'b', PowerParams::new(3, 0), &cfg()).unwrap();
    assert!(r.condition_holds);
    let a = pi_non_ep(7);
    let r = check_gram_projector_family(&a, 'b', PowerParams::new(3, 0), &cfg()).unwrap();
    assert!(r.residual("AA* in OP").unwrap() < cfg().eq_tol);
    assert!(!r.condition_holds && r.verdict_consistent);
    let r = check_gram_projector_family(&real_diag(&[2.0, 0.0]), 'b', PowerParams::new(3, 0), &cfg()).unwrap();
    assert!(!r.condition_holds);
    assert!(r.residual("AA* in OP").unwrap() > 0.1);
}

#[test]
fn rank_trace_examples() {
    let a = three_op(5, 9);
    for v in 'b'..='e' {
        let r = check_rank_trace(&a, v, &cfg()).unwrap();
        assert!(r.condition_holds && r.verdict_consistent, "{v}");
    }
    // 4 + 1/4 against 2.
    let r = check_rank_trace(&real_diag(&[2.0]), 'b', &cfg()).unwrap();
    assert!(!r.condition_holds);
    let res = r.residual("tr(A*A) + tr((A*A)†) = 2r(A)").unwrap();
    assert!((res - 2.25 / 4.25).abs() < 1e-12);
}

#[test]
fn remark_examples() {
    let r = check_remark_identities(&real_diag(&[1.0, -1.0, 0.0]), 'a', 0, &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    // 1 + 16 against 8.
    let r = check_remark_identities(&real_diag(&[2.0]), 'a', 0, &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);

    let idem = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
    let r = check_remark_identities(&idem, 'c', 2, &cfg()).unwrap();
    assert!(r.condition_holds);
    assert_eq!(r.target, "A^k = A");
    assert!(r.target_holds && r.verdict_consistent);
    assert!(!r.is_three_op);
    assert!(matches!(check_remark_identities(&idem, 'c', 1, &cfg()), Err(Error::SideCondition { .. })));
}

#[test]
fn normal_trace_examples() {
    let a = three_op(4, 12);
    for v in 'b'..='e' {
        assert!(check_normal_trace(&a, v, &cfg()).unwrap().condition_holds, "{v}");
    }
    for d in [[c64(0.0, 1.0), c64(0.0, -1.0)], [c64(1.0, 0.0), c64(0.0, 1.0)]] {
        let r = check_normal_trace(&ComplexMatrix::diag(&d), 'b', &cfg()).unwrap();
        assert!(r.residual("AA* = A*A").unwrap() < 1e-15);
        assert!(r.residual("AA* in OP").unwrap() < 1e-15);
        assert!(!r.condition_holds && !r.is_three_op && r.verdict_consistent);
    }
}

#[test]
fn condition_matrix_examples() {
    let r = check_condition_matrix(&real_diag(&[1.0, -1.0, 0.0]), 'a', 'a', 1, &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);

    let a = sheared_tripotent();
    let r = check_condition_matrix(&a, 'a', 'a', 1, &cfg()).unwrap();
    assert_eq!(r.residual("r(A) + r(I-A) + r(I+A) = 2n"), Some(0.0));
    assert!(r.residual("A†A = A†A*").unwrap() > cfg().eq_tol);
    assert!(!r.condition_holds && r.verdict_consistent);

    // 2 + 1 + 2 = 5 against 4.
    let r = check_condition_matrix(&real_diag(&[2.0, 1.0]), 'a', 'a', 1, &cfg()).unwrap();
    assert!(!r.condition_holds);
    assert_eq!(r.residual("r(A) + r(I-A) + r(I+A) = 2n"), Some(1.0));
    assert!(matches!(check_condition_matrix(&a, 'd', 'a', 0, &cfg()), Err(Error::SideCondition { .. })));
}

#[test]
fn condition_matrix_rows_hold_on_tripotents() {
    let a = sheared_tripotent();
    for row in ['a', 'c', 'd', 'f', 'g'] {
        let r = check_condition_matrix(&real_diag(&[1.0, -1.0, 0.0]), row, 'b', 2, &cfg()).unwrap();
        assert!(r.condition_holds, "{row}");
        let r = check_condition_matrix(&a, row, 'b', 2, &cfg()).unwrap();
        assert!(!r.condition_holds && r.verdict_consistent, "{row}");
    }
}

#[test]
fn rank_gram_examples() {
    let r = check_rank_gram_matrix(&three_op(5, 13), 'a', 'a', PowerParams::new(2, 0), &cfg()).unwrap();
    assert!(r.condition_holds);
    let r = check_rank_gram_matrix(&real_diag(&[0.5]), 'a', 'a', PowerParams::new(2, 0), &cfg()).unwrap();
    assert_eq!(r.residual("r(I - AA*) = n - r(A)"), Some(1.0));
    assert!(!r.condition_holds && r.verdict_consistent);

    let a = pi_non_ep(2);
    let r = check_rank_gram_matrix(&a, 'a', 'b', PowerParams::new(2, 0), &cfg()).unwrap();
    assert_eq!(r.residual("r(I - AA*) = n - r(A)"), Some(0.0));
    assert!(!r.condition_holds && r.verdict_consistent);
    assert!(matches!(
        check_rank_gram_matrix(&a, 'a', 'a', PowerParams::new(0, 0), &cfg()),
        Err(Error::SideCondition { .. })
    ));
}

#[test]
fn coprime_examples() {
    let r = coprime_rank_identity(&real_diag(&[1.0, -1.0, 0.0]), &cfg()).unwrap();
    assert!(r.condition_holds && r.verdict_consistent);
    assert_eq!(r.residual("r(A-A^3)"), Some(0.0));
    let r = coprime_rank_identity(&real_diag(&[2.0]), &cfg()).unwrap();
    assert!(r.condition_holds);
    assert_eq!(r.residual("r(A-A^3)"), Some(1.0));
    let g = generate(&GenSpec::new(5, Construction::Gaussian, 21)).unwrap();
    assert!(coprime_rank_identity(&g, &cfg()).unwrap().condition_holds);
}

#[test]
fn class_intersections_and_k_idempotents() {
    let a = three_op(5, 14);
    for item in 'a'..='g' {
        assert!(check_class_intersection(&a, item, &cfg()).unwrap().condition_holds, "{item}");
    }
    let r = check_class_intersection(&sheared_tripotent(), 'a', &cfg()).unwrap();
    assert!(!r.condition_holds && r.verdict_consistent);
    let op = real_diag(&[1.0, 0.0]);
    let r = check_k_idempotent(&op, 2, &cfg()).unwrap();
    assert_eq!(r.target, "OP");
    assert!(r.condition_holds && r.verdict_consistent);
    let r = check_k_idempotent(&real_diag(&[1.0, -1.0]), 4, &cfg()).unwrap();
    assert_eq!(r.target, "OP");
    assert!(!r.condition_holds && r.verdict_consistent);
    assert!(check_k_idempotent(&op, 1, &cfg()).is_err());
}

#[test]
fn non_square_is_rejected() {
    let a = ComplexMatrix::zeros(2, 3);
    assert!(check_canonical_form(&a, &cfg()).is_err());
}

// Items whose printed condition is not equivalent to the claimed target.

#[test]
fn linear_f_holds_for_every_hermitian() {
    // A* = A makes both sides A + A³.
    let r = check_linear_family(&real_diag(&[2.0]), 'f', &cfg()).unwrap();
    assert!(r.condition_holds && !r.is_three_op && !r.verdict_consistent);
}

#[test]
fn linear_e_holds_for_every_involution() {
    // A† = A⁻¹ = A turns both sides into A + A*.
    let a = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, -1.0]).unwrap();
    let r = check_linear_family(&a, 'e', &cfg()).unwrap();
    assert!(r.condition_holds && !r.is_three_op && !r.verdict_consistent);
}

#[test]
fn condition_row_b_fails_on_tripotents() {
    // Rank sum of a tripotent is 2n, never n unless n = 0.
    let r = check_condition_matrix(&real_diag(&[1.0, -1.0, 0.0]), 'b', 'a', 1, &cfg()).unwrap();
    assert!(!r.condition_holds && r.is_three_op && !r.verdict_consistent);
}

#[test]
fn rank_gram_e_prime_at_t_equals_s_plus_one() {
    // For A = (2): 2·4^s = (1/2)·4^(s+1), and I − A†A* = 0.
    for row in ['c', 'd'] {
        let r = check_rank_gram_matrix(&real_diag(&[2.0]), row, 'e', PowerParams::new(0, 1), &cfg()).unwrap();
        assert!(r.condition_holds && !r.is_three_op && !r.verdict_consistent, "{row}");
    }
}

#[test]
fn catalog_is_sound_on_three_op() {
    let checks = Check::catalog(&CatalogConfig::default());
    assert_eq!(checks.len(), 1622);
    let broken = |c: &Check| matches!(c, Check::ConditionMatrix { row: 'b', .. });
    for n in 1..=5 {
        let a = three_op(n, 100 + n as u64);
        let subject = Subject::new(&a, &cfg()).unwrap();
        for c in checks.iter().filter(|c| !broken(c)) {
            let r = c.run(&subject).unwrap();
            // Items with their own target (even k-idempotents, A^k = A) only need agreement.
            let expected = if r.target == "3-OP" { true } else { r.target_holds };
            assert!(r.condition_holds == expected && r.verdict_consistent, "{} n={n}", c.id());
        }
    }
}

#[test]
fn ids_round_trip() {
    for c in Check::catalog(&CatalogConfig::default()) {
        assert_eq!(c.id().parse::<Check>().unwrap(), c, "{}", c.id());
    }
}

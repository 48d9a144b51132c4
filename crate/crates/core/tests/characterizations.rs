use proptest::prelude::*;

use tripotent_core::characterizations::{check, AverageVariant, CatalogConfig};
use tripotent_core::generators::{generate, star_average_example, Construction, GenSpec};
use tripotent_core::{Check, ClassLabel, ComplexMatrix, Subject, ToleranceConfig};

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

/// Items whose printed condition is not equivalent to its target.
fn printed_defect(c: &Check) -> bool {
    match *c {
        Check::Linear('e') | Check::Linear('f') => true,
        Check::ConditionMatrix { row: 'b', .. } => true,
        Check::RankGram { row: 'c' | 'd', col: 'e', p } => p.t == p.s + 1,
        _ => false,
    }
}

fn catalog() -> Vec<Check> {
    Check::catalog(&CatalogConfig::default())
}

fn sample(c: Construction, n: usize, seed: u64) -> Option<ComplexMatrix> {
    generate(&GenSpec::new(n, c, seed)).ok()
}

fn adjacent() -> impl Strategy<Value = (Construction, ComplexMatrix)> {
    (proptest::sample::select(Construction::ADJACENT.to_vec()), 1usize..=6, any::<u64>())
        .prop_filter_map("below minimum size", |(c, n, seed)| Some((c, sample(c, n, seed)?)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn soundness(n in 1usize..=7, seed in any::<u64>()) {
        let a = sample(Construction::Label(ClassLabel::ThreeOP), n, seed).unwrap();
        let s = Subject::new(&a, &cfg()).unwrap();
        for c in catalog().iter().filter(|c| !printed_defect(c)) {
            let r = c.run(&s).unwrap();
            prop_assert!(r.verdict_consistent, "{} n={}", c.id(), n);
            if r.target == "3-OP" {
                prop_assert!(r.condition_holds, "{} n={}", c.id(), n);
            }
        }
    }

    #[test]
    fn completeness((con, a) in adjacent()) {
        let s = Subject::new(&a, &cfg()).unwrap();
        prop_assert!(!s.is_three_op());
        for c in catalog().iter().filter(|c| !printed_defect(c)) {
            let r = c.run(&s).unwrap();
            prop_assert!(r.verdict_consistent, "{} on {}", c.id(), con);
            if r.target == "3-OP" && r.exclusion_flag != Some(false) {
                prop_assert!(!r.condition_holds, "{} on {}", c.id(), con);
            }
        }
    }

    #[test]
    fn only_the_star_average_may_disagree((con, a) in adjacent()) {
        let s = Subject::new(&a, &cfg()).unwrap();
        for c in catalog() {
            let r = c.run(&s).unwrap();
            if r.exclusion_flag == Some(false) {
                prop_assert_eq!(c, Check::Average(AverageVariant::ToStar), "{}", con);
            }
        }
    }

    #[test]
    fn rank_verdicts_survive_halving_tol((_con, a) in adjacent(), flip in any::<bool>(), seed in any::<u64>()) {
        let a = if flip { sample(Construction::Label(ClassLabel::ThreeOP), a.rows(), seed).unwrap() } else { a };
        let half = cfg().with_eq_tol(cfg().eq_tol / 2.0);
        let (s, h) = (Subject::new(&a, &cfg()).unwrap(), Subject::new(&a, &half).unwrap());
        let rank_based = |c: &Check| matches!(c, Check::ConditionMatrix { .. } | Check::RankGram { .. } | Check::CoprimeRank);
        for c in catalog().iter().filter(|c| rank_based(c)) {
            prop_assert_eq!(c.run(&s).unwrap().condition_holds, c.run(&h).unwrap().condition_holds, "{}", c.id());
        }
    }
}

#[test]
fn star_average_is_the_documented_exception() {
    let a = star_average_example();
    let s = Subject::new(&a, &cfg()).unwrap();
    for c in catalog() {
        let r = c.run(&s).unwrap();
        let is_star = c == Check::Average(AverageVariant::ToStar);
        assert_eq!(r.exclusion_flag.is_some(), is_star);
        if is_star {
            assert!(r.condition_holds && !r.is_three_op && r.verdict_consistent);
        }
    }
}

#[test]
fn printed_defects_are_real() {
    // Each excluded item has a concrete witness on a generated family.
    let witness = |c: Check, con: Construction| {
        (0..20).any(|seed| {
            let a = sample(con, 3, seed).unwrap();
            !check(&a, &c, &cfg()).unwrap().verdict_consistent
        })
    };
    assert!(witness(Check::Linear('e'), Construction::TripotentNonHermitian));
    assert!(witness(Check::Linear('f'), Construction::HermitianNonTripotent));
    let cm = Check::ConditionMatrix { row: 'b', col: 'a', k: 1 };
    assert!(witness(cm, Construction::Label(ClassLabel::ThreeOP)));
    for row in ['c', 'd'] {
        let rg = Check::RankGram { row, col: 'e', p: tripotent_core::PowerParams::new(-1, 0) };
        assert!(witness(rg, Construction::HermitianNonTripotent), "{row}");
    }
}

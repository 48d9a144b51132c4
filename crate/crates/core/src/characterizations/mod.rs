//! One checker per characterization of the orthogonal tripotents.
//!
//! Every checker evaluates a condition on `A` and compares it with the
//! predicate the condition is claimed to be equivalent to (almost always
//! `A³ = A = A*`). A [`Subject`] caches the products shared between
//! checkers so a sweep over the whole catalog costs one SVD per matrix.

mod catalog;
mod equations;
mod ranks;
mod structure;
#[cfg(test)]
mod tests;
mod traces;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::{OnceCell, RefCell};

use crate::classes::{classify, membership_residual, ClassLabel};
use crate::decomp::{gram, gram_pinv, pinv_from_svd, retained_rank, svd, GramSide, SvdResult};
use crate::error::Result;
use crate::matrix::{numerical_rank_scaled, ComplexMatrix, C64};
use crate::tolerance::ToleranceConfig;

pub use catalog::{AverageVariant, CatalogConfig, Check};

/// Exponents of the Gram-power identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PowerParams {
    pub s: i32,
    pub t: i32,
}

impl PowerParams {
    pub const fn new(s: i32, t: i32) -> Self {
        PowerParams { s, t }
    }
}

/// Outcome of one checker on one matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub condition_holds: bool,
    pub is_three_op: bool,
    /// The predicate the condition is claimed equivalent to.
    pub target: &'static str,
    pub target_holds: bool,
    /// `condition_holds == target_holds`, unless an exclusion suspends the claim.
    pub verdict_consistent: bool,
    pub residuals: Vec<(String, f64)>,
    /// The input, attached whenever condition and target disagree.
    pub witness: Option<ComplexMatrix>,
    /// Only for the `A*` average: no eigenvalue near `±i/√3`.
    pub exclusion_flag: Option<bool>,
}

impl TheoremReport {
    pub fn residual(&self, name: &str) -> Option<f64> {
        self.residuals.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// Largest residual, for reporting.
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|&(_, v)| v).fold(0.0, f64::max)
    }
}

/// A square matrix with its SVD, pseudoinverse and lazily shared products.
pub struct Subject<'a> {
    a: &'a ComplexMatrix,
    cfg: ToleranceConfig,
    star: ComplexMatrix,
    svd: SvdResult,
    rank: usize,
    dagger: ComplexMatrix,
    three_op: OnceCell<bool>,
    classes: OnceCell<[(ClassLabel, bool, f64); 10]>,
    powers: RefCell<BTreeMap<(GramSide, i32), ComplexMatrix>>,
    parts: RefCell<BTreeMap<String, Part>>,
    ranks: RefCell<BTreeMap<&'static str, usize>>,
}

impl<'a> Subject<'a> {
    pub fn new(a: &'a ComplexMatrix, cfg: &ToleranceConfig) -> Result<Self> {
        a.require_square()?;
        cfg.validate()?;
        let s = svd(a)?;
        let rank = retained_rank(&s, cfg);
        let dagger = pinv_from_svd(&s, rank);
        Ok(Subject {
            a,
            cfg: *cfg,
            star: a.conj_transpose(),
            svd: s,
            rank,
            dagger,
            three_op: OnceCell::new(),
            classes: OnceCell::new(),
            powers: RefCell::new(BTreeMap::new()),
            parts: RefCell::new(BTreeMap::new()),
            ranks: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn a(&self) -> &ComplexMatrix {
        self.a
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn cfg(&self) -> &ToleranceConfig {
        &self.cfg
    }

    pub fn star(&self) -> &ComplexMatrix {
        &self.star
    }

    pub fn dagger(&self) -> &ComplexMatrix {
        &self.dagger
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn svd(&self) -> &SvdResult {
        &self.svd
    }

    /// Spectral norm of `A`.
    pub fn sigma_max(&self) -> f64 {
        self.svd.singular_values.first().copied().unwrap_or(0.0)
    }

    pub fn is_three_op(&self) -> bool {
        *self.three_op.get_or_init(|| {
            membership_residual(self.a, ClassLabel::ThreeOP, &self.cfg).expect("square") <= self.cfg.eq_tol
        })
    }

    pub fn is_member(&self, label: ClassLabel) -> bool {
        let classes = self.classes.get_or_init(|| classify(self.a, &self.cfg).expect("square, SVD already converged"));
        classes.iter().find(|(l, _, _)| *l == label).map(|&(_, m, _)| m).expect("every label classified")
    }

    /// `(AA*)^s` or `(A*A)^s` with Khatri negative powers, cached.
    pub fn gram_power(&self, side: GramSide, s: i32) -> ComplexMatrix {
        if let Some(m) = self.powers.borrow().get(&(side, s)) {
            return m.clone();
        }
        let m = match s {
            0 => ComplexMatrix::identity(self.n()),
            1 => gram(self.a, side),
            -1 => gram_pinv(&self.dagger, side),
            s => {
                let unit = self.gram_power(side, s.signum());
                &self.gram_power(side, s - s.signum()) * &unit
            }
        };
        self.powers.borrow_mut().insert((side, s), m.clone());
        m
    }

    /// Rank of a derived matrix cut relative to `max(σ_max(m), reference)`, cached by name.
    pub(crate) fn derived_rank(&self, name: &'static str, reference: f64, m: impl FnOnce() -> ComplexMatrix) -> usize {
        if let Some(&r) = self.ranks.borrow().get(name) {
            return r;
        }
        let r = numerical_rank_scaled(&m(), reference, &self.cfg);
        self.ranks.borrow_mut().insert(name, r);
        r
    }

    /// A sub-condition shared between checkers, evaluated once.
    pub(crate) fn part(&self, key: &str, f: impl FnOnce(&mut Eval<'_, 'a>)) -> Part {
        if let Some(p) = self.parts.borrow().get(key) {
            return p.clone();
        }
        let mut e = Eval::new(self);
        f(&mut e);
        let p = Part { holds: e.holds, residuals: e.residuals };
        self.parts.borrow_mut().insert(key.into(), p.clone());
        p
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Part {
    pub holds: bool,
    pub residuals: Vec<(String, f64)>,
}

/// Accumulates a conjunction of sub-conditions with their residuals.
pub(crate) struct Eval<'s, 'a> {
    pub subject: &'s Subject<'a>,
    pub residuals: Vec<(String, f64)>,
    pub holds: bool,
}

impl<'s, 'a> Eval<'s, 'a> {
    pub fn new(subject: &'s Subject<'a>) -> Self {
        Eval { subject, residuals: Vec::new(), holds: true }
    }

    pub fn record(&mut self, name: &str, residual: f64, ok: bool) -> bool {
        self.residuals.push((name.into(), residual));
        self.holds &= ok;
        ok
    }

    /// Matrix equation, relative residual against `eq_tol`.
    pub fn eq(&mut self, name: &str, x: &ComplexMatrix, y: &ComplexMatrix) -> bool {
        let r = x.relative_residual(y).expect("conformable operands");
        self.record(name, r, r <= self.subject.cfg.eq_tol)
    }

    /// Scalar (trace) equation: `|x − y| ≤ eq_tol · n · max(1, |x|, |y|)`.
    pub fn trace_eq(&mut self, name: &str, x: C64, y: C64) -> bool {
        let r = (x - y).norm() / 1f64.max(x.norm()).max(y.norm());
        let tol = self.subject.cfg.eq_tol * self.subject.n().max(1) as f64;
        self.record(name, r, r <= tol)
    }

    /// Integer (rank) equation; the residual is the absolute difference.
    pub fn rank_eq(&mut self, name: &str, x: usize, y: usize) -> bool {
        self.record(name, x.abs_diff(y) as f64, x == y)
    }

    pub fn merge(&mut self, p: Part) -> bool {
        self.residuals.extend(p.residuals);
        self.holds &= p.holds;
        p.holds
    }
}

/// Runs one check against a fresh subject.
pub fn check(a: &ComplexMatrix, which: &Check, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    which.validate()?;
    which.run(&Subject::new(a, cfg)?)
}

pub fn check_canonical_form(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::CanonicalForm, cfg)
}

pub fn check_star_dagger_identity(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::StarDagger, cfg)
}

pub fn check_structural(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::Structural, cfg)
}

pub fn check_svd_factors(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::SvdFactors, cfg)
}

pub fn check_average(a: &ComplexMatrix, variant: AverageVariant, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::Average(variant), cfg)
}

pub fn check_linear_family(a: &ComplexMatrix, variant: char, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::Linear(variant), cfg)
}

pub fn check_power_family(
    a: &ComplexMatrix,
    variant: char,
    p: PowerParams,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::Power(variant, p), cfg)
}

pub fn check_corollary_powers(
    a: &ComplexMatrix,
    variant: char,
    s: i32,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::Corollary(variant, s), cfg)
}

pub fn check_gram_projector_family(
    a: &ComplexMatrix,
    variant: char,
    p: PowerParams,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::GramProjector(variant, p), cfg)
}

pub fn check_rank_trace(a: &ComplexMatrix, variant: char, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::RankTrace(variant), cfg)
}

/// `k` is only read by variant `c`.
pub fn check_remark_identities(
    a: &ComplexMatrix,
    variant: char,
    k: u32,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::Remark(variant, k), cfg)
}

pub fn check_normal_trace(a: &ComplexMatrix, variant: char, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::NormalTrace(variant), cfg)
}

/// `k` is only read by rows `d` and `e`.
pub fn check_condition_matrix(
    a: &ComplexMatrix,
    row: char,
    col: char,
    k: u32,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::ConditionMatrix { row, col, k }, cfg)
}

pub fn check_rank_gram_matrix(
    a: &ComplexMatrix,
    row: char,
    col: char,
    p: PowerParams,
    cfg: &ToleranceConfig,
) -> Result<TheoremReport> {
    check(a, &Check::RankGram { row, col, p }, cfg)
}

pub fn coprime_rank_identity(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::CoprimeRank, cfg)
}

pub fn check_class_intersection(a: &ComplexMatrix, item: char, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::ClassIntersection(item), cfg)
}

pub fn check_k_idempotent(a: &ComplexMatrix, k: u32, cfg: &ToleranceConfig) -> Result<TheoremReport> {
    check(a, &Check::KIdempotent(k), cfg)
}

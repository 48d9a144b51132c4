use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use super::{equations, ranks, structure, traces, PowerParams, Subject, TheoremReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AverageVariant {
    /// `⅓(A + A* + A†) = A`.
    ToA,
    /// `⅓(A + A* + A†) = A†`.
    ToDagger,
    /// `⅓(A + A* + A†) = A*`, claimed only without eigenvalues `±i/√3`.
    ToStar,
}

impl AverageVariant {
    pub const ALL: [AverageVariant; 3] = [AverageVariant::ToA, AverageVariant::ToDagger, AverageVariant::ToStar];

    pub fn name(self) -> &'static str {
        match self {
            AverageVariant::ToA => "toA",
            AverageVariant::ToDagger => "toDagger",
            AverageVariant::ToStar => "toStar",
        }
    }
}

impl FromStr for AverageVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AverageVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownVariant { theorem: "average", variant: s.into() })
    }
}

/// Every checker instance. Letters name the items of each displayed list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    CanonicalForm,
    StarDagger,
    Structural,
    SvdFactors,
    /// `a`–`g`.
    ClassIntersection(char),
    /// `A^k = A = A*`, `k ≥ 2`.
    KIdempotent(u32),
    Average(AverageVariant),
    /// `b`–`h`.
    Linear(char),
    /// `b`–`g`.
    Power(char, PowerParams),
    /// `b`–`i`, one exponent.
    Corollary(char, i32),
    /// `b`–`g` read only `s`; `h`–`l` read `s` and `t`.
    GramProjector(char, PowerParams),
    /// `b`–`e`.
    RankTrace(char),
    /// `a`, `b`; `c` with `k ≥ 2`.
    Remark(char, u32),
    /// `b`–`e`.
    NormalTrace(char),
    /// Rows `a`–`g` (`d`, `e` read `k ≥ 1`), columns `a`–`g` (primed in print).
    ConditionMatrix {
        row: char,
        col: char,
        k: u32,
    },
    /// Rows `a`–`d`, columns `a`–`g`; column `a` reads only `s`.
    RankGram {
        row: char,
        col: char,
        p: PowerParams,
    },
    CoprimeRank,
}

pub const FAMILIES: [&str; 17] = [
    "canonical-form",
    "star-dagger-identity",
    "structural",
    "svd-factors",
    "class-intersection",
    "k-idempotent",
    "average",
    "linear-family",
    "power-family",
    "corollary-powers",
    "gram-projector",
    "rank-trace",
    "remark",
    "normal-trace",
    "condition-matrix",
    "rank-gram",
    "coprime-rank",
];

fn in_range(c: char, lo: char, hi: char) -> bool {
    (lo..=hi).contains(&c)
}

fn side(theorem: &Check, ok: bool, condition: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::SideCondition { theorem: theorem.id(), condition })
    }
}

/// Which corollary item a Gram-projector item `b`–`g` mirrors.
pub(crate) fn gram_single_mirror(v: char) -> char {
    match v {
        'f' => 'i',
        'g' => 'h',
        v => v,
    }
}

/// Which power-family item a Gram-projector item `h`–`l` mirrors.
pub(crate) fn gram_pair_mirror(v: char) -> char {
    match v {
        'h' => 'b',
        'i' => 'c',
        'j' => 'd',
        'k' => 'f',
        _ => 'g',
    }
}

fn power_side(v: char, p: PowerParams) -> (bool, &'static str) {
    let PowerParams { s, t } = p;
    match v {
        'c' => (s != t && s + t + 1 != 0, "s ≠ t and s + t + 1 ≠ 0"),
        'f' => (s != t && s - t - 1 != 0, "s ≠ t and s − t − 1 ≠ 0"),
        'g' => (s != -t && s - t + 1 != 0, "s ≠ −t and s − t + 1 ≠ 0"),
        _ => (s != t && s - t + 1 != 0, "s ≠ t and s − t + 1 ≠ 0"),
    }
}

fn corollary_side(v: char, s: i32) -> (bool, &'static str) {
    match v {
        'b' | 'f' | 'g' | 'i' => (s != 0 && s != 1, "s ∉ {0, 1}"),
        _ => (s != 0 && s != -1, "s ∉ {0, −1}"),
    }
}

fn rank_gram_side(col: char, p: PowerParams) -> (bool, &'static str) {
    match col {
        'a' => (p.s != 0, "s ≠ 0"),
        'f' | 'g' => (p.s != p.t - 1, "s ≠ t − 1"),
        _ => (p.s != p.t, "s ≠ t"),
    }
}

impl Check {
    pub fn family(&self) -> &'static str {
        match self {
            Check::CanonicalForm => FAMILIES[0],
            Check::StarDagger => FAMILIES[1],
            Check::Structural => FAMILIES[2],
            Check::SvdFactors => FAMILIES[3],
            Check::ClassIntersection(_) => FAMILIES[4],
            Check::KIdempotent(_) => FAMILIES[5],
            Check::Average(_) => FAMILIES[6],
            Check::Linear(_) => FAMILIES[7],
            Check::Power(..) => FAMILIES[8],
            Check::Corollary(..) => FAMILIES[9],
            Check::GramProjector(..) => FAMILIES[10],
            Check::RankTrace(_) => FAMILIES[11],
            Check::Remark(..) => FAMILIES[12],
            Check::NormalTrace(_) => FAMILIES[13],
            Check::ConditionMatrix { .. } => FAMILIES[14],
            Check::RankGram { .. } => FAMILIES[15],
            Check::CoprimeRank => FAMILIES[16],
        }
    }

    /// Stable identifier, e.g. `power-family/b[s=2,t=0]`.
    pub fn id(&self) -> String {
        let f = self.family();
        match *self {
            Check::CanonicalForm | Check::StarDagger | Check::Structural | Check::SvdFactors | Check::CoprimeRank => {
                f.into()
            }
            Check::ClassIntersection(v) | Check::Linear(v) | Check::RankTrace(v) | Check::NormalTrace(v) => {
                format!("{f}/{v}")
            }
            Check::KIdempotent(k) => format!("{f}[k={k}]"),
            Check::Average(v) => format!("{f}/{}", v.name()),
            Check::Power(v, p) => format!("{f}/{v}[s={},t={}]", p.s, p.t),
            Check::Corollary(v, s) => format!("{f}/{v}[s={s}]"),
            Check::GramProjector(v, p) if v <= 'g' => format!("{f}/{v}[s={}]", p.s),
            Check::GramProjector(v, p) => format!("{f}/{v}[s={},t={}]", p.s, p.t),
            Check::Remark('c', k) => format!("{f}/c[k={k}]"),
            Check::Remark(v, _) => format!("{f}/{v}"),
            Check::ConditionMatrix { row, col, k } if row == 'd' || row == 'e' => format!("{f}/{row},{col}'[k={k}]"),
            Check::ConditionMatrix { row, col, .. } => format!("{f}/{row},{col}'"),
            Check::RankGram { row, col: 'a', p } => format!("{f}/{row},a'[s={}]", p.s),
            Check::RankGram { row, col, p } => format!("{f}/{row},{col}'[s={},t={}]", p.s, p.t),
        }
    }

    /// Rejects unknown variants and parameters outside the claim.
    pub fn validate(&self) -> Result<()> {
        let bad = |theorem: &'static str, v: String| Err(Error::UnknownVariant { theorem, variant: v });
        let f = self.family();
        match *self {
            Check::CanonicalForm | Check::StarDagger | Check::Structural | Check::SvdFactors | Check::CoprimeRank => {
                Ok(())
            }
            Check::Average(_) => Ok(()),
            Check::ClassIntersection(v) if !in_range(v, 'a', 'g') => bad(f, v.to_string()),
            Check::ClassIntersection(_) => Ok(()),
            Check::KIdempotent(k) => side(self, k >= 2, "k ≥ 2"),
            Check::Linear(v) if !in_range(v, 'b', 'h') => bad(f, v.to_string()),
            Check::Linear(_) => Ok(()),
            Check::Power(v, _) if !in_range(v, 'b', 'g') => bad(f, v.to_string()),
            Check::Power(v, p) => {
                let (ok, c) = power_side(v, p);
                side(self, ok, c)
            }
            Check::Corollary(v, _) if !in_range(v, 'b', 'i') => bad(f, v.to_string()),
            Check::Corollary(v, s) => {
                let (ok, c) = corollary_side(v, s);
                side(self, ok, c)
            }
            Check::GramProjector(v, _) if !in_range(v, 'b', 'l') => bad(f, v.to_string()),
            Check::GramProjector(v, p) if v <= 'g' => {
                let (ok, c) = corollary_side(gram_single_mirror(v), p.s);
                side(self, ok, c)
            }
            Check::GramProjector(v, p) => {
                let (ok, c) = power_side(gram_pair_mirror(v), p);
                side(self, ok, c)
            }
            Check::RankTrace(v) | Check::NormalTrace(v) if !in_range(v, 'b', 'e') => bad(f, v.to_string()),
            Check::RankTrace(_) | Check::NormalTrace(_) => Ok(()),
            Check::Remark(v, _) if !in_range(v, 'a', 'c') => bad(f, v.to_string()),
            Check::Remark('c', k) => side(self, k >= 2, "k ≥ 2"),
            Check::Remark(..) => Ok(()),
            Check::ConditionMatrix { row, col, .. } if !in_range(row, 'a', 'g') || !in_range(col, 'a', 'g') => {
                bad(f, format!("{row},{col}'"))
            }
            Check::ConditionMatrix { row, k, .. } => side(self, !(row == 'd' || row == 'e') || k >= 1, "k ≥ 1"),
            Check::RankGram { row, col, .. } if !in_range(row, 'a', 'd') || !in_range(col, 'a', 'g') => {
                bad(f, format!("{row},{col}'"))
            }
            Check::RankGram { col, p, .. } => {
                let (ok, c) = rank_gram_side(col, p);
                side(self, ok, c)
            }
        }
    }

    /// Builds a check from a family name or full id plus optional
    /// parameters; explicit parameters override those in the id.
    pub fn parse(
        theorem: &str,
        variant: Option<&str>,
        s: Option<i32>,
        t: Option<i32>,
        k: Option<u32>,
    ) -> Result<Check> {
        let (head, params) = match theorem.find('[') {
            Some(i) if theorem.ends_with(']') => (&theorem[..i], &theorem[i + 1..theorem.len() - 1]),
            Some(_) => return Err(Error::UnknownTheorem(theorem.into())),
            None => (theorem, ""),
        };
        let (mut s, mut t, mut k) = (s, t, k);
        for kv in params.split(',').filter(|x| !x.is_empty()) {
            let (key, val) = kv.split_once('=').ok_or_else(|| Error::UnknownTheorem(theorem.into()))?;
            let bad = || Error::UnknownTheorem(theorem.into());
            match key.trim() {
                "s" => s = s.or(Some(val.trim().parse().map_err(|_| bad())?)),
                "t" => t = t.or(Some(val.trim().parse().map_err(|_| bad())?)),
                "k" => k = k.or(Some(val.trim().parse().map_err(|_| bad())?)),
                _ => return Err(bad()),
            }
        }
        let (family, id_variant) = match head.split_once('/') {
            Some((f, v)) => (f, Some(v)),
            None => (head, None),
        };
        let family =
            FAMILIES.iter().copied().find(|f| *f == family).ok_or_else(|| Error::UnknownTheorem(family.into()))?;
        let variant = variant.or(id_variant);
        let need_v = || variant.ok_or(Error::MissingParameter { theorem: family, name: "variant" });
        let letter = |v: &str| -> Result<char> {
            let v = v.trim().trim_end_matches('\'');
            let mut it = v.chars();
            match (it.next(), it.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
                _ => Err(Error::UnknownVariant { theorem: family, variant: v.into() }),
            }
        };
        let pair = |v: &str| -> Result<(char, char)> {
            let (r, c) =
                v.split_once(',').ok_or_else(|| Error::UnknownVariant { theorem: family, variant: v.into() })?;
            Ok((letter(r)?, letter(c)?))
        };
        let need_s = || s.ok_or(Error::MissingParameter { theorem: family, name: "s" });
        let need_t = || t.ok_or(Error::MissingParameter { theorem: family, name: "t" });
        let need_k = || k.ok_or(Error::MissingParameter { theorem: family, name: "k" });
        let check = match family {
            "canonical-form" => Check::CanonicalForm,
            "star-dagger-identity" => Check::StarDagger,
            "structural" => Check::Structural,
            "svd-factors" => Check::SvdFactors,
            "coprime-rank" => Check::CoprimeRank,
            "class-intersection" => Check::ClassIntersection(letter(need_v()?)?),
            "k-idempotent" => Check::KIdempotent(need_k()?),
            "average" => Check::Average(need_v()?.parse()?),
            "linear-family" => Check::Linear(letter(need_v()?)?),
            "power-family" => Check::Power(letter(need_v()?)?, PowerParams::new(need_s()?, need_t()?)),
            "corollary-powers" => Check::Corollary(letter(need_v()?)?, need_s()?),
            "gram-projector" => {
                let v = letter(need_v()?)?;
                let t = if v <= 'g' { t.unwrap_or(0) } else { need_t()? };
                Check::GramProjector(v, PowerParams::new(need_s()?, t))
            }
            "rank-trace" => Check::RankTrace(letter(need_v()?)?),
            "remark" => {
                let v = letter(need_v()?)?;
                Check::Remark(v, if v == 'c' { need_k()? } else { 0 })
            }
            "normal-trace" => Check::NormalTrace(letter(need_v()?)?),
            "condition-matrix" => {
                let (row, col) = pair(need_v()?)?;
                let k = if row == 'd' || row == 'e' { need_k()? } else { 0 };
                Check::ConditionMatrix { row, col, k }
            }
            "rank-gram" => {
                let (row, col) = pair(need_v()?)?;
                let t = if col == 'a' { t.unwrap_or(0) } else { need_t()? };
                Check::RankGram { row, col, p: PowerParams::new(need_s()?, t) }
            }
            _ => unreachable!("family list is exhaustive"),
        };
        check.validate()?;
        Ok(check)
    }

    /// Every instance on the grid whose side conditions hold.
    pub fn catalog(grid: &CatalogConfig) -> Vec<Check> {
        let mut out = alloc::vec![Check::CanonicalForm, Check::StarDagger, Check::Structural, Check::SvdFactors];
        out.extend(('a'..='g').map(Check::ClassIntersection));
        out.extend(grid.k_idempotent.iter().map(|&k| Check::KIdempotent(k)));
        out.extend(AverageVariant::ALL.map(Check::Average));
        out.extend(('b'..='h').map(Check::Linear));
        let pairs: Vec<PowerParams> =
            grid.s.clone().flat_map(|s| grid.t.clone().map(move |t| PowerParams::new(s, t))).collect();
        for v in 'b'..='g' {
            out.extend(pairs.iter().map(|&p| Check::Power(v, p)));
        }
        for v in 'b'..='i' {
            out.extend(grid.s.clone().map(|s| Check::Corollary(v, s)));
        }
        for v in 'b'..='g' {
            out.extend(grid.s.clone().map(|s| Check::GramProjector(v, PowerParams::new(s, 0))));
        }
        for v in 'h'..='l' {
            out.extend(pairs.iter().map(|&p| Check::GramProjector(v, p)));
        }
        out.extend(('b'..='e').map(Check::RankTrace));
        out.push(Check::Remark('a', 0));
        out.push(Check::Remark('b', 0));
        out.extend(grid.remark_k.iter().map(|&k| Check::Remark('c', k)));
        out.extend(('b'..='e').map(Check::NormalTrace));
        for row in 'a'..='g' {
            let ks: Vec<u32> = if row == 'd' || row == 'e' { grid.condition_k.clone() } else { alloc::vec![0] };
            for col in 'a'..='g' {
                out.extend(ks.iter().map(|&k| Check::ConditionMatrix { row, col, k }));
            }
        }
        for row in 'a'..='d' {
            out.extend(grid.s.clone().map(|s| Check::RankGram { row, col: 'a', p: PowerParams::new(s, 0) }));
            for col in 'b'..='g' {
                out.extend(pairs.iter().map(|&p| Check::RankGram { row, col, p }));
            }
        }
        out.push(Check::CoprimeRank);
        out.retain(|c| c.validate().is_ok());
        out
    }

    pub fn run(&self, subject: &Subject<'_>) -> Result<TheoremReport> {
        self.validate()?;
        let outcome = match *self {
            Check::CanonicalForm => structure::canonical_form(subject)?,
            Check::StarDagger => structure::star_dagger(subject),
            Check::Structural => structure::structural(subject),
            Check::SvdFactors => structure::svd_factors(subject),
            Check::ClassIntersection(v) => structure::class_intersection(subject, v),
            Check::KIdempotent(k) => structure::k_idempotent(subject, k),
            Check::Average(v) => structure::average(subject, v),
            Check::Linear(v) => equations::linear(subject, v),
            Check::Power(v, p) => equations::power(subject, v, p),
            Check::Corollary(v, s) => equations::corollary(subject, v, s),
            Check::GramProjector(v, p) => equations::gram_projector(subject, v, p),
            Check::RankTrace(v) => traces::rank_trace(subject, v),
            Check::Remark(v, k) => traces::remark(subject, v, k),
            Check::NormalTrace(v) => traces::normal_trace(subject, v),
            Check::ConditionMatrix { row, col, k } => ranks::condition_matrix(subject, row, col, k)?,
            Check::RankGram { row, col, p } => ranks::rank_gram(subject, row, col, p),
            Check::CoprimeRank => ranks::coprime(subject),
        };
        Ok(outcome.into_report(self.id(), subject))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::parse(s, None, None, None, None)
    }
}

/// Parameter grid the catalog is expanded over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogConfig {
    pub s: RangeInclusive<i32>,
    pub t: RangeInclusive<i32>,
    pub k_idempotent: Vec<u32>,
    pub remark_k: Vec<u32>,
    pub condition_k: Vec<u32>,
}

impl Default for CatalogConfig {
    fn default() -> Self {
        CatalogConfig {
            s: -3..=3,
            t: -3..=3,
            k_idempotent: alloc::vec![2, 3, 4, 5],
            remark_k: alloc::vec![2, 3, 4],
            condition_k: alloc::vec![1, 2, 3],
        }
    }
}

/// What a checker computed, before it is labelled.
pub(crate) struct Outcome {
    pub condition: bool,
    pub target: &'static str,
    pub target_holds: bool,
    pub residuals: Vec<(String, f64)>,
    pub exclusion_flag: Option<bool>,
}

impl Outcome {
    /// Condition claimed equivalent to `A³ = A = A*`.
    pub fn three_op(subject: &Subject<'_>, e: super::Eval<'_, '_>) -> Self {
        Outcome {
            condition: e.holds,
            target: "3-OP",
            target_holds: subject.is_three_op(),
            residuals: e.residuals,
            exclusion_flag: None,
        }
    }

    fn into_report(self, theorem_id: String, subject: &Subject<'_>) -> TheoremReport {
        let agrees = self.condition == self.target_holds;
        let verdict_consistent = agrees || self.exclusion_flag == Some(false);
        TheoremReport {
            theorem_id,
            condition_holds: self.condition,
            is_three_op: subject.is_three_op(),
            target: self.target,
            target_holds: self.target_holds,
            verdict_consistent,
            residuals: self.residuals,
            witness: (!agrees).then(|| subject.a().clone()),
            exclusion_flag: self.exclusion_flag,
        }
    }
}

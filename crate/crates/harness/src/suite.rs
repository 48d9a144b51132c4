//! Soundness and completeness sweeps over the checker catalog.
//!
//! One task per (construction, size, trial): the matrix is generated from
//! `derive_seed(seed, task)` and every selected checker runs against one
//! shared [`Subject`]. Results are folded into (theorem, class, size) cells.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use tripotent_core::characterizations::CatalogConfig;
use tripotent_core::generators::{derive_seed, generate, Construction, GenSpec};
use tripotent_core::{Check, ClassLabel, ComplexMatrix, Subject, ToleranceConfig};

use crate::error::{HarnessError, Result};
use crate::json::MatrixJson;

/// Witnesses kept per failing cell.
const WITNESS_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ToleranceJson {
    pub eq_tol: f64,
    pub rank_rel_tol: Option<f64>,
    pub eig_class_tol: f64,
}

impl Default for ToleranceJson {
    fn default() -> Self {
        ToleranceConfig::default().into()
    }
}

impl From<ToleranceConfig> for ToleranceJson {
    fn from(c: ToleranceConfig) -> Self {
        ToleranceJson { eq_tol: c.eq_tol, rank_rel_tol: c.rank_rel_tol, eig_class_tol: c.eig_class_tol }
    }
}

impl From<&ToleranceJson> for ToleranceConfig {
    fn from(t: &ToleranceJson) -> Self {
        ToleranceConfig { eq_tol: t.eq_tol, rank_rel_tol: t.rank_rel_tol, eig_class_tol: t.eig_class_tol }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub sizes: Vec<usize>,
    pub trials_per_cell: usize,
    pub seed: u64,
    pub tolerance: ToleranceJson,
    /// Family names or full ids; empty selects everything.
    pub theorems: Vec<String>,
    /// Inclusive `[lo, hi]` ranges of the Gram-power exponents.
    pub power_grid: PowerGrid,
    /// Construction names; empty means ThreeOP plus the adjacent families.
    pub classes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerGrid {
    pub s: [i32; 2],
    pub t: [i32; 2],
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            sizes: (1..=8).collect(),
            trials_per_cell: 50,
            seed: 0,
            tolerance: ToleranceJson::default(),
            theorems: Vec::new(),
            power_grid: PowerGrid { s: [-3, 3], t: [-3, 3] },
            classes: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(HarnessError::Format(m.into()));
        if self.sizes.is_empty() {
            return bad("sizes must be nonempty");
        }
        if self.sizes.contains(&0) {
            return bad("sizes must be positive");
        }
        if self.trials_per_cell == 0 {
            return bad("trials_per_cell must be at least 1");
        }
        ToleranceConfig::from(&self.tolerance).validate()?;
        Ok(())
    }

    pub fn checks(&self) -> Result<Vec<Check>> {
        let grid = CatalogConfig {
            s: self.power_grid.s[0]..=self.power_grid.s[1],
            t: self.power_grid.t[0]..=self.power_grid.t[1],
            ..CatalogConfig::default()
        };
        let all = Check::catalog(&grid);
        if self.theorems.is_empty() {
            return Ok(all);
        }
        let picked: Vec<Check> =
            all.into_iter().filter(|c| self.theorems.iter().any(|t| t == c.family() || *t == c.id())).collect();
        if picked.is_empty() {
            return Err(tripotent_core::Error::UnknownTheorem(self.theorems.join(",")).into());
        }
        Ok(picked)
    }

    pub fn constructions(&self) -> Result<Vec<Construction>> {
        if self.classes.is_empty() {
            let mut v = vec![Construction::Label(ClassLabel::ThreeOP)];
            v.extend(Construction::ADJACENT);
            return Ok(v);
        }
        Ok(self.classes.iter().map(|c| c.parse()).collect::<tripotent_core::Result<_>>()?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Pass,
    /// Every trial agrees except for disagreements the theorem excludes.
    ExpectedException,
    Fail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellReport {
    pub theorem: String,
    pub class: String,
    pub size: usize,
    pub passed: usize,
    pub expected_exceptions: usize,
    pub failed: usize,
    pub max_residual: f64,
    pub witnesses: Vec<ComplexMatrix>,
}

impl CellReport {
    pub fn status(&self) -> CellStatus {
        if self.failed > 0 {
            CellStatus::Fail
        } else if self.expected_exceptions > 0 {
            CellStatus::ExpectedException
        } else {
            CellStatus::Pass
        }
    }

    pub fn trials(&self) -> usize {
        self.passed + self.expected_exceptions + self.failed
    }
}

impl Serialize for CellReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = ser.serialize_struct("Cell", 9)?;
        s.serialize_field("theorem", &self.theorem)?;
        s.serialize_field("class", &self.class)?;
        s.serialize_field("size", &self.size)?;
        s.serialize_field("status", &self.status())?;
        s.serialize_field("passed", &self.passed)?;
        s.serialize_field("expected_exceptions", &self.expected_exceptions)?;
        s.serialize_field("failed", &self.failed)?;
        s.serialize_field("max_residual", &self.max_residual)?;
        let w: Vec<MatrixJson<'_>> = self.witnesses.iter().map(MatrixJson).collect();
        s.serialize_field("witnesses", &w)?;
        s.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub cells: Vec<CellReport>,
    pub duration_secs: f64,
}

impl SuiteReport {
    pub fn failed_cells(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| c.status() == CellStatus::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failed_cells().next().is_none()
    }

    /// (theorem, class, size) → status, the reproducible part of the report.
    pub fn grid(&self) -> BTreeMap<(String, String, usize), CellStatus> {
        self.cells.iter().map(|c| ((c.theorem.clone(), c.class.clone(), c.size), c.status())).collect()
    }
}

#[derive(Clone, Copy)]
enum Verdict {
    Pass,
    Excepted,
    Fail,
}

struct TaskResult {
    construction: usize,
    size: usize,
    matrix: ComplexMatrix,
    /// One entry per selected check.
    outcomes: Vec<(Verdict, f64)>,
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let tol = ToleranceConfig::from(&cfg.tolerance);
    let checks = cfg.checks()?;
    let constructions = cfg.constructions()?;

    let mut tasks = Vec::new();
    for (ci, c) in constructions.iter().enumerate() {
        for &n in cfg.sizes.iter().filter(|&&n| n >= c.min_n()) {
            for trial in 0..cfg.trials_per_cell {
                tasks.push((ci, n, trial));
            }
        }
    }

    let results: Vec<TaskResult> = tasks
        .par_iter()
        .enumerate()
        .map(|(index, &(ci, n, _))| {
            let seed = derive_seed(cfg.seed, index as u64);
            let matrix = generate(&GenSpec::new(n, constructions[ci], seed))?;
            let subject = Subject::new(&matrix, &tol)?;
            let outcomes = checks
                .iter()
                .map(|c| {
                    let r = c.run(&subject)?;
                    let agrees = r.condition_holds == r.target_holds;
                    let v = match (agrees, r.verdict_consistent) {
                        (true, _) => Verdict::Pass,
                        (false, true) => Verdict::Excepted,
                        (false, false) => Verdict::Fail,
                    };
                    Ok((v, r.max_residual()))
                })
                .collect::<tripotent_core::Result<Vec<_>>>()?;
            Ok(TaskResult { construction: ci, size: n, matrix, outcomes })
        })
        .collect::<Result<_>>()?;

    let mut cells: BTreeMap<(usize, usize, usize), CellReport> = BTreeMap::new();
    for t in &results {
        for (k, &(verdict, residual)) in t.outcomes.iter().enumerate() {
            let cell = cells.entry((k, t.construction, t.size)).or_insert_with(|| CellReport {
                theorem: checks[k].id(),
                class: constructions[t.construction].name(),
                size: t.size,
                passed: 0,
                expected_exceptions: 0,
                failed: 0,
                max_residual: 0.0,
                witnesses: Vec::new(),
            });
            cell.max_residual = cell.max_residual.max(residual);
            match verdict {
                Verdict::Pass => cell.passed += 1,
                Verdict::Excepted => cell.expected_exceptions += 1,
                Verdict::Fail => {
                    cell.failed += 1;
                    if cell.witnesses.len() < WITNESS_CAP {
                        cell.witnesses.push(t.matrix.clone());
                    }
                }
            }
        }
    }

    Ok(SuiteReport { cells: cells.into_values().collect(), duration_secs: start.elapsed().as_secs_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(theorems: &[&str]) -> SuiteConfig {
        SuiteConfig {
            sizes: vec![1, 2, 3],
            trials_per_cell: 2,
            seed: 11,
            theorems: theorems.iter().map(|s| s.to_string()).collect(),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn counts_sum_to_trials() {
        let r = run_suite(&small(&["structural", "rank-trace"])).unwrap();
        assert!(!r.cells.is_empty());
        assert!(r.cells.iter().all(|c| c.trials() == 2));
        assert!(r.all_pass());
        // Sizes below a construction's minimum are skipped.
        assert!(!r.cells.iter().any(|c| c.class == "tripotent-nonhermitian" && c.size == 1));
    }

    #[test]
    fn reproducible() {
        let cfg = small(&["power-family"]);
        assert_eq!(run_suite(&cfg).unwrap().grid(), run_suite(&cfg).unwrap().grid());
    }

    #[test]
    fn star_average_cell_is_an_expected_exception() {
        let cfg = SuiteConfig {
            classes: vec!["normal-unit-modulus-spectrum".into()],
            sizes: vec![2],
            trials_per_cell: 200,
            ..small(&["average/toStar"])
        };
        let r = run_suite(&cfg).unwrap();
        assert_eq!(r.cells.len(), 1);
        assert_eq!(r.cells[0].status(), CellStatus::ExpectedException);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(run_suite(&SuiteConfig { sizes: vec![], ..small(&[]) }).is_err());
        assert!(run_suite(&SuiteConfig { trials_per_cell: 0, ..small(&[]) }).is_err());
        assert!(run_suite(&small(&["no-such-theorem"])).is_err());
    }
}

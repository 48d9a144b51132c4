//! Random search for matrices on which a checker's condition and its
//! target disagree, exclusions ignored.

use rayon::prelude::*;

use tripotent_core::generators::{derive_seed, generate, Construction, GenSpec};
use tripotent_core::{Check, ComplexMatrix, TheoremReport, ToleranceConfig};

use crate::error::Result;

/// Samples evaluated per parallel batch; the first witness in sample order wins.
const BATCH: u64 = 4096;

/// A generator family, or every family in turn.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    pub constructions: Vec<Construction>,
    pub max_n: usize,
}

impl Ensemble {
    pub const DEFAULT_MAX_N: usize = 4;

    /// A construction name, or `all`.
    pub fn parse(name: &str, max_n: usize) -> Result<Self> {
        let constructions = if name.eq_ignore_ascii_case("all") { Construction::all() } else { vec![name.parse()?] };
        Ok(Ensemble { constructions, max_n })
    }

    fn sample(&self, seed: u64) -> Result<ComplexMatrix> {
        let c = self.constructions[(seed % self.constructions.len() as u64) as usize];
        let lo = c.min_n();
        let span = (self.max_n.max(lo) - lo + 1) as u64;
        let n = lo + ((seed >> 32) % span) as usize;
        Ok(generate(&GenSpec::new(n, c, derive_seed(seed, 1)))?)
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub sample: u64,
    pub matrix: ComplexMatrix,
    pub report: TheoremReport,
}

pub fn search_counterexample(
    check: &Check,
    ensemble: &Ensemble,
    budget: u64,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<Option<Witness>> {
    check.validate()?;
    let mut start = 0;
    while start < budget {
        let end = budget.min(start + BATCH);
        let hit = (start..end)
            .into_par_iter()
            .map(|i| -> Result<Option<Witness>> {
                let a = ensemble.sample(derive_seed(seed, i))?;
                let report = tripotent_core::characterizations::check(&a, check, cfg)?;
                Ok((report.condition_holds != report.target_holds).then_some(Witness { sample: i, matrix: a, report }))
            })
            .find_first(|r| !matches!(r, Ok(None)));
        match hit {
            Some(Ok(w)) => return Ok(w),
            Some(Err(e)) => return Err(e),
            None => start = end,
        }
    }
    Ok(None)
}

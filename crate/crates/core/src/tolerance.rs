use crate::error::{Error, Result};

/// Safety multiple on `max(rows, cols) · ε` for the default rank cutoff.
///
/// Products such as `I − A†A` carry a few dozen ulps of noise; the bare
/// `max(rows, cols) · ε` rule also fails to drop `1e-15` next to `1`.
pub const RANK_EPS_MULTIPLE: f64 = 64.0;

/// Numerical thresholds shared by every module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Relative Frobenius threshold for matrix equalities.
    pub eq_tol: f64,
    /// Relative singular-value cutoff; `None` means the dimension-scaled default.
    pub rank_rel_tol: Option<f64>,
    /// Distance threshold when snapping eigenvalues to {-1, 0, 1}.
    pub eig_class_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig { eq_tol: 1e-10, rank_rel_tol: None, eig_class_tol: 1e-8 }
    }
}

impl ToleranceConfig {
    pub fn with_eq_tol(mut self, eq_tol: f64) -> Self {
        self.eq_tol = eq_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let check = |name, value: f64| {
            if value.is_finite() && value >= 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidTolerance { name, value })
            }
        };
        check("eq_tol", self.eq_tol)?;
        if let Some(v) = self.rank_rel_tol {
            check("rank_rel_tol", v)?;
        }
        check("eig_class_tol", self.eig_class_tol)
    }

    /// Relative singular-value cutoff for a `rows × cols` matrix.
    pub fn rank_cutoff(&self, rows: usize, cols: usize) -> f64 {
        self.rank_rel_tol.unwrap_or(RANK_EPS_MULTIPLE * f64::EPSILON * rows.max(cols).max(1) as f64)
    }
}

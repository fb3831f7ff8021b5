use crate::error::{invalid, Result};

/// Environment variable that overrides [`ToleranceConfig::max_terms`].
pub const MAX_TERMS_ENV: &str = "BOHR_MAX_TERMS";

/// Tolerances and iteration caps shared by every solver in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Absolute width of the final bisection bracket.
    pub root_tol: f64,
    /// Absolute bound on the discarded tail of a majorant series.
    pub tail_tol: f64,
    /// Absolute quadrature error target.
    pub quad_tol: f64,
    /// Maximum number of series terms.
    pub max_terms: usize,
    /// Maximum number of bisection steps.
    pub max_iter: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { root_tol: 1e-12, tail_tol: 1e-14, quad_tol: 1e-12, max_terms: 10_000, max_iter: 200 }
    }
}

impl ToleranceConfig {
    pub fn with_root_tol(mut self, root_tol: f64) -> Self {
        self.root_tol = root_tol;
        self
    }

    pub fn with_quad_tol(mut self, quad_tol: f64) -> Self {
        self.quad_tol = quad_tol;
        self
    }

    /// Applies `BOHR_MAX_TERMS` when it is set.
    pub fn with_env_overrides(mut self) -> Result<Self> {
        if let Ok(raw) = std::env::var(MAX_TERMS_ENV) {
            self.max_terms = raw
                .trim()
                .parse()
                .map_err(|_| invalid(format!("{MAX_TERMS_ENV} must be a positive integer, got {raw:?}")))?;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(invalid(format!("{name} must be a positive finite number, got {v}")))
            }
        };
        positive("root_tol", self.root_tol)?;
        positive("tail_tol", self.tail_tol)?;
        positive("quad_tol", self.quad_tol)?;
        if self.max_terms == 0 {
            return Err(invalid("max_terms must be at least 1"));
        }
        if self.max_iter == 0 {
            return Err(invalid("max_iter must be at least 1"));
        }
        Ok(())
    }
}

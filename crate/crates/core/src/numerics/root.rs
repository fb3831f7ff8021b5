use super::{sum_series_bounded, MajorantSeries, SeriesSum, ToleranceConfig};
use crate::error::{invalid, Error, Result};

/// Upper end of the bisection bracket. Roots beyond it are reported as `1`.
pub const BRACKET_TOP: f64 = 1.0 - 1e-9;

/// Left-hand side `L(r)` of a radius equation: increasing, with `L(0) = 0`.
pub trait Lhs: Send + Sync {
    /// Evaluates `L(r)`. With a ceiling, evaluation may stop early once the
    /// value is certified to exceed it.
    fn evaluate(&self, r: f64, ceiling: Option<f64>, cfg: &ToleranceConfig) -> Result<SeriesSum>;
}

/// `L` given by a truncated majorant series.
pub struct SeriesLhs<S>(pub S);

impl<S: MajorantSeries + Send + Sync> Lhs for SeriesLhs<S> {
    fn evaluate(&self, r: f64, ceiling: Option<f64>, cfg: &ToleranceConfig) -> Result<SeriesSum> {
        sum_series_bounded(&self.0, r, cfg, ceiling)
    }
}

/// `L` given in closed form.
pub struct ClosedForm<F>(pub F);

impl<F: Fn(f64) -> f64 + Send + Sync> Lhs for ClosedForm<F> {
    fn evaluate(&self, r: f64, _ceiling: Option<f64>, _cfg: &ToleranceConfig) -> Result<SeriesSum> {
        Ok(SeriesSum { value: (self.0)(r), terms_used: 0, exceeded: false })
    }
}

/// A radius equation `L(r) = target` on `(0, 1)`.
pub struct BohrProblem {
    lhs: Box<dyn Lhs>,
    target: f64,
}

impl BohrProblem {
    pub fn new(lhs: impl Lhs + 'static, target: f64) -> Self {
        Self { lhs: Box::new(lhs), target }
    }

    pub fn series<S: MajorantSeries + Send + Sync + 'static>(series: S, target: f64) -> Self {
        Self::new(SeriesLhs(series), target)
    }

    pub fn closed_form<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F, target: f64) -> Self {
        Self::new(ClosedForm(f), target)
    }

    pub fn target(&self) -> f64 {
        self.target
    }

    /// Certified value of `L(r)`.
    pub fn lhs(&self, r: f64, cfg: &ToleranceConfig) -> Result<f64> {
        Ok(self.evaluate(r, cfg)?.value)
    }

    /// `L(r)` together with the number of terms summed.
    pub fn evaluate(&self, r: f64, cfg: &ToleranceConfig) -> Result<SeriesSum> {
        self.lhs.evaluate(r, None, cfg)
    }
}

impl std::fmt::Debug for BohrProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BohrProblem").field("target", &self.target).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub radius: f64,
    /// `|L(radius) − target|`; for clamped results, `target − L(1 − 1e-9)`.
    pub residual: f64,
    pub terms_used: usize,
    /// No root below [`BRACKET_TOP`]; the radius is reported as 1.
    pub clamped: bool,
}

/// Bisection for the root of an increasing `L(r) = target` on `(0, 1)`.
pub fn solve_monotone(problem: &BohrProblem, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    cfg.validate()?;
    let target = problem.target;
    if !(target.is_finite() && target > 0.0) {
        return Err(invalid(format!("radius target must be positive and finite, got {target}")));
    }
    let lhs = problem.lhs.as_ref();

    let top = lhs.evaluate(BRACKET_TOP, Some(target), cfg)?;
    if !top.exceeded && top.value < target {
        return Ok(RadiusResult {
            radius: 1.0,
            residual: target - top.value,
            terms_used: top.terms_used,
            clamped: true,
        });
    }

    let slack = cfg.tail_tol;
    let (mut lo, mut hi) = (0.0_f64, BRACKET_TOP);
    let mut lo_value = 0.0;
    // Exact value at `hi` when known; early-exit evaluations only give a lower bound.
    let mut hi_value = if top.exceeded { None } else { Some(top.value) };

    let mut iterations = 0;
    while hi - lo > cfg.root_tol {
        if iterations == cfg.max_iter {
            return Err(Error::NoConvergence(cfg.max_iter));
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let e = lhs.evaluate(mid, Some(target), cfg)?;
        if e.value < lo_value - slack {
            return Err(Error::NonMonotoneDetected { lo, hi: mid });
        }
        if e.exceeded {
            hi = mid;
            hi_value = None;
            continue;
        }
        if let Some(hv) = hi_value {
            if e.value > hv + slack {
                return Err(Error::NonMonotoneDetected { lo: mid, hi });
            }
        }
        if e.value >= target {
            hi = mid;
            hi_value = Some(e.value);
        } else {
            lo = mid;
            lo_value = e.value;
        }
    }

    let radius = 0.5 * (lo + hi);
    let at_root = lhs.evaluate(radius, None, cfg)?;
    Ok(RadiusResult {
        radius,
        residual: (at_root.value - target).abs(),
        terms_used: at_root.terms_used,
        clamped: false,
    })
}

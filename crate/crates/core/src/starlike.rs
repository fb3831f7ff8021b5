//! Bohr radius of the Janowski starlike class `ST[A,B]` and its classical
//! special cases: `ST(α)`, Robertson's `ST^(β) = ST[β,−β]`, MacGregor's
//! `ST_(β) = ST[β,0]` and Janowski's `ST(M) = ST[1,(1−M)/M]`.

use crate::error::{invalid, Result};
use crate::janowski::{distance_lower, extremal_coeffs, JanowskiMajorant, JanowskiParams};
use crate::numerics::{solve_monotone, sum_series, BohrProblem, MajorantSeries, RadiusResult, ToleranceConfig};

#[derive(Debug, Clone, Copy)]
pub struct StarlikeRadiusQuery {
    pub params: JanowskiParams,
    pub cfg: ToleranceConfig,
}

impl StarlikeRadiusQuery {
    pub fn solve(&self) -> Result<RadiusResult> {
        bohr_radius_st(self.params, &self.cfg)
    }
}

/// The radius equation `r + Σ_{n>=2} coeff_bound(n) r^n = l_(−A,−B)(1)`.
///
/// For `B = 0` the left side is summed in closed form as `r e^{Ar}`.
pub fn bohr_problem(p: JanowskiParams) -> BohrProblem {
    let target = distance_lower(p).value;
    if p.b() == 0.0 {
        let a = p.a();
        BohrProblem::closed_form(move |r| r * (a * r).exp(), target)
    } else {
        BohrProblem::series(JanowskiMajorant::new(p), target)
    }
}

pub fn bohr_radius_st(p: JanowskiParams, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    solve_monotone(&bohr_problem(p), cfg)
}

/// Starlike functions of order `α`: root of `(1 − r)^{2(1−α)} = 2^{2(1−α)} r`.
pub fn st_alpha_radius(alpha: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(invalid(format!("order α must satisfy 0 ≤ α < 1, got {alpha}")));
    }
    let e = 2.0 * (1.0 - alpha);
    let scale = 2f64.powf(e);
    // Divide through by (1 − r)^e to get an increasing left side with target 1.
    let problem = BohrProblem::closed_form(move |r| scale * r / (1.0 - r).powf(e), 1.0);
    solve_monotone(&problem, cfg)
}

/// Closed-form radius of `ST^(β) = ST[β, −β]`:
/// `−(−1 − 4β − β² + (1 + β)√(1 + β(6 + β))) / (2β²)`.
///
/// Evaluated in the algebraically equal form
/// `2 / (1 + 4β + β² + (1 + β)√(1 + 6β + β²))`, which avoids the
/// cancellation of the first form's numerator for small `β`.
pub fn st_beta_radius_closed(beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(invalid(format!("β must satisfy 0 < β ≤ 1, got {beta}")));
    }
    let root = (1.0 + beta * (6.0 + beta)).sqrt();
    Ok(2.0 / (1.0 + 4.0 * beta + beta * beta + (1.0 + beta) * root))
}

/// `ST^(β)` through the general series route, for cross-checking the closed form.
pub fn st_beta_radius(beta: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(invalid(format!("β must satisfy 0 < β ≤ 1, got {beta}")));
    }
    bohr_radius_st(JanowskiParams::new(beta, -beta)?, cfg)
}

/// `ST_(β) = ST[β, 0]`: root of `r e^{βr} = e^{−β}`.
pub fn st_beta0_radius(beta: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(invalid(format!("β must satisfy 0 < β ≤ 1, got {beta}")));
    }
    bohr_radius_st(JanowskiParams::new(beta, 0.0)?, cfg)
}

/// Janowski parameters of `ST(M)`: `A = 1`, `B = (1 − M)/M`, with `M = 1`
/// mapped exactly to `B = 0`.
pub fn st_m_params(m: f64) -> Result<JanowskiParams> {
    if !(m.is_finite() && m > 0.5) {
        return Err(invalid(format!("M must satisfy M > 1/2, got {m}")));
    }
    let b = if m == 1.0 { 0.0 } else { (1.0 - m) / m };
    JanowskiParams::new(1.0, b)
}

pub fn st_m_radius(m: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    bohr_radius_st(st_m_params(m)?, cfg)
}

struct ExtremalAbs {
    coeffs: Vec<f64>,
    params: JanowskiParams,
}

impl MajorantSeries for ExtremalAbs {
    fn term(&self, n: usize) -> f64 {
        self.coeffs[n - 1].abs()
    }
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some(self.params.coeff_ratio_bound(n))
    }
    fn available_terms(&self) -> Option<usize> {
        Some(self.coeffs.len())
    }
}

/// `|Σ |c_n| r*^n − l_(−A,−B)(1)|` for the extremal `l_(A,B)`, whose Taylor
/// coefficients come from the binomial recurrence rather than the bounds.
pub fn sharpness_residual_st(p: JanowskiParams, r_star: f64, cfg: &ToleranceConfig) -> Result<f64> {
    let series = ExtremalAbs { coeffs: extremal_coeffs(p, cfg.max_terms), params: p };
    let (value, _) = sum_series(&series, r_star, cfg)?;
    Ok((value - distance_lower(p).value).abs())
}

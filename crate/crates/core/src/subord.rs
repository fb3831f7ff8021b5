//! Bohr radius of `R(β, γ, h) = {f : f + βzf' + γz²f'' ≺ h}` with `h` Janowski
//! starlike.
//!
//! With `μ + ν = β − γ` and `μν = γ`, the `n`-th coefficient of `f` is damped by
//! `D_n = (1 + μn)(1 + νn) = 1 + (μ+ν)n + μνn²`. `μ` and `ν` may be complex;
//! only their sum and product are ever used, so all arithmetic stays real.

use crate::error::{invalid, Result};
use crate::janowski::{coeff_bound, distance_lower, extremal_coeffs, JanowskiParams};
use crate::numerics::{solve_monotone, sum_series, BohrProblem, MajorantSeries, RadiusResult, ToleranceConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubordParams {
    beta: f64,
    gamma: f64,
    janowski: JanowskiParams,
}

impl SubordParams {
    pub fn new(beta: f64, gamma: f64, janowski: JanowskiParams) -> Result<Self> {
        if !(beta.is_finite() && gamma.is_finite() && beta >= gamma && gamma >= 0.0) {
            return Err(invalid(format!("requires β ≥ γ ≥ 0, got β = {beta}, γ = {gamma}")));
        }
        Ok(Self { beta, gamma, janowski })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn janowski(&self) -> JanowskiParams {
        self.janowski
    }

    pub fn mu_nu(&self) -> MuNuPair {
        MuNuPair { sum: self.beta - self.gamma, product: self.gamma }
    }
}

/// Symmetric functions of the (possibly complex) pair `μ, ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuNuPair {
    pub sum: f64,
    pub product: f64,
}

impl MuNuPair {
    pub fn denom(&self, n: usize) -> f64 {
        let n = n as f64;
        1.0 + self.sum * n + self.product * n * n
    }
}

/// `D_n = 1 + (β − γ)n + γn²`, equal to `1 + βn + γn(n − 1)`.
pub fn denom(p: &SubordParams, n: usize) -> f64 {
    p.mu_nu().denom(n)
}

/// Majorant `r/D_1 + Σ_{n>=2} coeff_bound(A,B,n)/D_n · r^n`.
#[derive(Debug, Clone, Copy)]
pub struct SubordMajorant {
    params: SubordParams,
}

impl SubordMajorant {
    pub fn new(params: SubordParams) -> Self {
        Self { params }
    }
}

impl MajorantSeries for SubordMajorant {
    fn term(&self, n: usize) -> f64 {
        coeff_bound(self.params.janowski, n) / denom(&self.params, n)
    }

    // D_n is nondecreasing, so the Janowski ratio bound still applies.
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some(self.params.janowski.coeff_ratio_bound(n))
    }
}

pub fn bohr_problem(p: SubordParams) -> BohrProblem {
    BohrProblem::series(SubordMajorant::new(p), distance_lower(p.janowski).value)
}

/// Root of `r/D_1 + Σ_{n>=2} coeff_bound(n)/D_n · r^n = l_(−A,−B)(1)`,
/// with `h` normalized so that `h'(0) = 1`.
pub fn bohr_radius_subord(p: SubordParams, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    solve_monotone(&bohr_problem(p), cfg)
}

/// Majorant for `h` starlike of order `α`, with numerators
/// `Π_{k=2}^{n} (k − 2α) / (n − 1)!` built independently of [`coeff_bound`].
#[derive(Debug, Clone, Copy)]
struct OrderAlphaMajorant {
    alpha: f64,
    pair: MuNuPair,
}

impl OrderAlphaMajorant {
    fn numerator(&self, n: usize) -> f64 {
        (2..=n).fold(1.0, |acc, k| acc * (k as f64 - 2.0 * self.alpha) / (k - 1) as f64)
    }
}

impl MajorantSeries for OrderAlphaMajorant {
    fn term(&self, n: usize) -> f64 {
        self.numerator(n) / self.pair.denom(n)
    }

    // b_{m+1}/b_m <= (m + 1 − 2α)/m = 1 + (1 − 2α)/m.
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some((1.0 + (1.0 - 2.0 * self.alpha) / n as f64).max(1.0))
    }
}

/// Solves the radius equation for `h` starlike of order `α` directly:
/// `r/D_1 + Σ_{n>=2} [Π_{k=2}^{n}(k − 2α)/(n − 1)!] / D_n · r^n = 2^{−2(1−α)}`.
pub fn subord_starlike_alpha_radius(alpha: f64, beta: f64, gamma: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(invalid(format!("order α must satisfy 0 ≤ α < 1, got {alpha}")));
    }
    let params = SubordParams::new(beta, gamma, JanowskiParams::starlike_of_order(alpha)?)?;
    let series = OrderAlphaMajorant { alpha, pair: params.mu_nu() };
    let target = 2f64.powf(-2.0 * (1.0 - alpha));
    solve_monotone(&BohrProblem::series(series, target), cfg)
}

/// `|n`-th coefficient| of the extremal `q = (φ_ν ∗ φ_μ) ∗ l_(A,B)`.
///
/// The convolution with `φ_ν ∗ φ_μ` divides the `n`-th coefficient of
/// `l_(A,B)` by `D_n`.
pub fn extremal_subord_coeffs(p: &SubordParams, n: usize) -> f64 {
    assert!(n >= 1, "coefficient index starts at 1");
    extremal_coeffs(p.janowski, n)[n - 1].abs() / denom(p, n)
}

struct ExtremalSubord {
    coeffs: Vec<f64>,
    params: SubordParams,
}

impl MajorantSeries for ExtremalSubord {
    fn term(&self, n: usize) -> f64 {
        self.coeffs[n - 1].abs() / denom(&self.params, n)
    }
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some(self.params.janowski.coeff_ratio_bound(n))
    }
    fn available_terms(&self) -> Option<usize> {
        Some(self.coeffs.len())
    }
}

/// `|Σ_{n>=1} |q_n| r*^n − l_(−A,−B)(1)|` for the extremal function.
pub fn sharpness_residual_subord(p: &SubordParams, r_star: f64, cfg: &ToleranceConfig) -> Result<f64> {
    let series = ExtremalSubord { coeffs: extremal_coeffs(p.janowski, cfg.max_terms), params: *p };
    let (value, _) = sum_series(&series, r_star, cfg)?;
    Ok((value - distance_lower(p.janowski).value).abs())
}

//! Bohr radius of Mocanu α-convex functions.
//!
//! Coefficients are bounded by the partition sum
//!
//! ```text
//! |a_{n+1}| <= Σ_{x ∈ S(n)} V(α, q−1) c_1^{x_1} ⋯ c_n^{x_n} / (x_1! ⋯ x_n!)
//! ```
//!
//! and the boundary distance by `|k(−1, α)|`, where
//! `k(z, α) = [α^{-1} ∫_0^z ξ^{1/α−1} (1−ξ)^{−2/α} dξ]^α` is the extremal function.

mod partitions;

pub use partitions::{enumerate_partitions, for_each_partition, PartitionTuple, PARTITION_CAP};

use crate::error::{invalid, Error, Result};
use crate::numerics::{
    dominated_linear_tail, integrate_with_estimate, solve_monotone, sum_series, BohrProblem, MajorantSeries,
    NeumaierSum, RadiusResult, ToleranceConfig,
};

/// Number of majorant coefficients `a_1 ..= a_N` kept before the dominated
/// tail `Σ_{m>N} m r^m` takes over.
pub const DEFAULT_TERM_CAP: usize = 4000;

/// Majorant coefficients beyond this index always come from the extremal
/// recurrence; enumerating larger partition sets costs more than it checks.
const PARTITION_TERMS: usize = 30;

/// Partition sums whose rounding bound exceeds this are replaced by the
/// extremal recurrence.
const PARTITION_ROUNDING_LIMIT: f64 = 1e-12;

/// `α > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 {
            Ok(Self(alpha))
        } else {
            Err(invalid(format!("α-convex classes require α > 0, got {alpha}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `V(α, q) = α(α−1)⋯(α−q)`, with `V(α, 0) = α`.
pub fn v_factor(alpha: f64, q: u32) -> f64 {
    (1..=q).fold(alpha, |acc, j| acc * (alpha - j as f64))
}

/// `c_n = Π_{k=0}^{n−1}(2 + kα) / (n! α^n (1 + nα))`.
pub fn c_coeff(alpha: f64, n: usize) -> f64 {
    assert!(n >= 1, "c_n is defined for n ≥ 1");
    c_coeffs(alpha, n)[n - 1]
}

/// `[c_1, ..., c_n]` via the running ratio `Π (2 + kα)/((k + 1)α)`.
pub fn c_coeffs(alpha: f64, n: usize) -> Vec<f64> {
    let mut ratio = 1.0;
    (0..n)
        .map(|k| {
            let k = k as f64;
            ratio *= (2.0 + k * alpha) / ((k + 1.0) * alpha);
            ratio / (1.0 + (k + 1.0) * alpha)
        })
        .collect()
}

/// A partition sum with the data needed to judge its conditioning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionSum {
    pub value: f64,
    /// `Σ |term|`.
    pub abs_sum: f64,
    /// A-priori bound on the floating-point error of `value`.
    pub rounding_bound: f64,
}

/// Partition-sum bound on `|a_m|`, `m >= 2`, with conditioning information.
///
/// Terms alternate in sign through `V(α, q−1)`; they are added in decreasing
/// magnitude with compensated summation.
pub fn partition_sum(alpha: f64, m: usize) -> Result<PartitionSum> {
    AlphaParam::new(alpha)?;
    if m < 2 {
        return Err(invalid(format!("the partition bound covers a_m for m ≥ 2, got m = {m}")));
    }
    let n = m - 1;
    let c = c_coeffs(alpha, n);
    let mut terms = Vec::new();
    for_each_partition(n, |parts, q| {
        let mut t = v_factor(alpha, q - 1);
        for &(i, x) in parts {
            for j in 1..=x {
                t *= c[i - 1] / j as f64;
            }
        }
        terms.push(t);
    })?;
    terms.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    let abs_sum: f64 = terms.iter().map(|t| t.abs()).sum();
    let value = terms.iter().copied().collect::<NeumaierSum>().value();
    // Each term carries about 3m rounded operations; summation adds ~2ε|S|.
    let rounding_bound = f64::EPSILON * (3.0 * m as f64 * abs_sum + 2.0 * value.abs());
    Ok(PartitionSum { value, abs_sum, rounding_bound })
}

/// Sharp bound on `|a_m|` for `m >= 2`.
///
/// The bound is attained by `k(z, α)`, so when the partition sum is too
/// ill-conditioned to meet `PARTITION_ROUNDING_LIMIT` the same number is taken
/// from [`extremal_coeffs`] instead.
pub fn ac_coeff_bound(alpha: f64, m: usize) -> Result<f64> {
    let s = partition_sum(alpha, m)?;
    if s.rounding_bound <= PARTITION_ROUNDING_LIMIT {
        Ok(s.value)
    } else {
        Ok(extremal_coeffs(alpha, m)?[m - 1])
    }
}

/// Taylor coefficients `[a_1, ..., a_n]` of the extremal `k(z, α)`.
///
/// `p = zk'/k` satisfies `p + αzp'/p = (1 + z)/(1 − z)`, which gives
/// `(1 + αn) p_n = 2 + 2Σ_{k<n} p_k − Σ_{0<k<n} p_k p_{n−k}`, and then
/// `(n − 1) a_n = Σ_{k=1}^{n−1} p_k a_{n−k}`. No cancellation of large terms
/// occurs, unlike in the partition sum for small `α`.
pub fn extremal_coeffs(alpha: f64, n: usize) -> Result<Vec<f64>> {
    let alpha = AlphaParam::new(alpha)?.get();
    let mut p = vec![0.0; n + 1];
    let mut running = 0.0;
    for j in 1..=n {
        let conv: f64 = (1..j).map(|k| p[k] * p[j - k]).sum();
        p[j] = (2.0 + 2.0 * running - conv) / (1.0 + alpha * j as f64);
        running += p[j];
    }
    let mut a = vec![0.0; n + 1];
    if n >= 1 {
        a[1] = 1.0;
    }
    for j in 2..=n {
        let s: f64 = (1..j).map(|k| p[k] * a[j - k]).sum();
        a[j] = s / (j - 1) as f64;
    }
    a.remove(0);
    Ok(a)
}

/// The α-convex majorant `r + Σ_{m>=2} ac_coeff_bound(α, m) r^m`.
#[derive(Debug, Clone)]
pub struct AlphaConvexMajorant {
    alpha: f64,
    coeffs: Vec<f64>,
    from_partitions: usize,
}

impl AlphaConvexMajorant {
    pub fn new(alpha: f64, term_cap: usize) -> Result<Self> {
        let alpha = AlphaParam::new(alpha)?.get();
        if term_cap == 0 {
            return Err(invalid("the α-convex majorant needs at least one coefficient"));
        }
        let mut coeffs = vec![1.0];
        let mut m = 2;
        while m <= term_cap.min(PARTITION_TERMS) {
            let s = partition_sum(alpha, m)?;
            if s.rounding_bound > PARTITION_ROUNDING_LIMIT {
                break;
            }
            coeffs.push(s.value);
            m += 1;
        }
        let from_partitions = coeffs.len();
        if from_partitions < term_cap {
            let extremal = extremal_coeffs(alpha, term_cap)?;
            coeffs.extend_from_slice(&extremal[from_partitions..]);
        }
        Ok(Self { alpha, coeffs, from_partitions })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Coefficients `a_1 ..= a_N`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// How many leading coefficients come from the partition sum; the rest
    /// come from [`extremal_coeffs`].
    pub fn from_partitions(&self) -> usize {
        self.from_partitions
    }
}

impl MajorantSeries for AlphaConvexMajorant {
    fn term(&self, n: usize) -> f64 {
        self.coeffs[n - 1]
    }

    // α-convex functions are starlike, so |a_m| <= m.
    fn tail_bound(&self, n: usize, r: f64, _last: f64) -> Option<f64> {
        Some(dominated_linear_tail(n, r))
    }

    fn available_terms(&self) -> Option<usize> {
        Some(self.coeffs.len())
    }
}

/// `|k(−1, α)|` with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthConstant {
    pub value: f64,
    pub error: f64,
}

/// `ln cosh τ`, stable for large `τ`.
fn ln_cosh(tau: f64) -> f64 {
    tau + (-2.0 * tau).exp().ln_1p() - std::f64::consts::LN_2
}

/// `|k(−1, α)| = [α^{-1} ∫_0^1 t^{1/α−1} (1+t)^{−2/α} dt]^α`.
///
/// With `t = e^{−2τ}` the integrand becomes `(2 cosh τ)^{−2/α}`. Pulling out
/// `4^{−1/α}` leaves
///
/// ```text
/// |k(−1, α)| = (1/4) [ (2/α) ∫_0^∞ sech(τ)^{2/α} dτ ]^α
/// ```
///
/// whose integrand is smooth and of order one for every `α`; the bracket is
/// then well scaled even when the original integral underflows the absolute
/// tolerance (it is about `7e-12` at `α = 0.05`). The infinite range is cut at
/// `T` with the tail bounded by `∫_T^∞ (2e^{−τ})^{2/α} dτ`.
pub fn k_min_with_error(alpha: f64, cfg: &ToleranceConfig) -> Result<GrowthConstant> {
    let alpha = AlphaParam::new(alpha)?.get();
    cfg.validate()?;
    let p = 2.0 / alpha;
    let tail_budget = 0.25 * cfg.quad_tol;
    // 2^p e^{−pT} / p <= budget
    let t_max = std::f64::consts::LN_2 + (1.0 / (p * tail_budget)).ln() / p;
    let tail = (p * std::f64::consts::LN_2 - p * t_max).exp() / p;
    let quad =
        integrate_with_estimate(|tau| (-p * ln_cosh(tau)).exp(), 0.0, t_max, &cfg.with_quad_tol(0.5 * cfg.quad_tol))?;
    let integral = quad.value + 0.5 * tail;
    let bracket = 2.0 / alpha * integral;
    let value = 0.25 * bracket.powf(alpha);
    // dk = (2k / J) dS with J the bracket and S the integral.
    let error = 2.0 * value / bracket * (quad.error + 0.5 * tail);
    Ok(GrowthConstant { value, error })
}

pub fn k_min(alpha: f64, cfg: &ToleranceConfig) -> Result<f64> {
    k_min_with_error(alpha, cfg).map(|k| k.value)
}

/// `(1 + u^α)^{−2/α}`, the integrand of `k(−1, α)^{1/α}` after `t = u^α`.
pub fn unit_interval_integrand(alpha: f64, u: f64) -> f64 {
    (1.0 + u.powf(alpha)).powf(-2.0 / alpha)
}

/// `|k(−1, α)| = [∫_0^1 (1 + u^α)^{−2/α} du]^α`, the unit-interval route.
///
/// Accurate for moderate `α`; for small `α` the integral falls below the
/// absolute quadrature tolerance and [`k_min`] should be used instead.
pub fn k_min_unit_interval(alpha: f64, cfg: &ToleranceConfig) -> Result<f64> {
    let alpha = AlphaParam::new(alpha)?.get();
    let quad = integrate_with_estimate(|u| unit_interval_integrand(alpha, u), 0.0, 1.0, cfg)?;
    Ok(quad.value.powf(alpha))
}

pub fn bohr_problem(alpha: f64, cfg: &ToleranceConfig) -> Result<BohrProblem> {
    let majorant = AlphaConvexMajorant::new(alpha, DEFAULT_TERM_CAP)?;
    Ok(BohrProblem::series(majorant, k_min(alpha, cfg)?))
}

/// Root of `r + Σ_{m>=2} ac_coeff_bound(α, m) r^m = |k(−1, α)|`.
pub fn bohr_radius_alpha_cv(alpha: f64, cfg: &ToleranceConfig) -> Result<RadiusResult> {
    let problem = bohr_problem(alpha, cfg)?;
    solve_monotone(&problem, cfg).map_err(|e| match e {
        Error::TailNotCertifiable { terms, .. } => Error::CapExceeded { n: terms, cap: DEFAULT_TERM_CAP },
        other => other,
    })
}

struct ExtremalSeries(Vec<f64>);

impl MajorantSeries for ExtremalSeries {
    fn term(&self, n: usize) -> f64 {
        self.0[n - 1].abs()
    }
    fn tail_bound(&self, n: usize, r: f64, _last: f64) -> Option<f64> {
        Some(dominated_linear_tail(n, r))
    }
    fn available_terms(&self) -> Option<usize> {
        Some(self.0.len())
    }
}

/// `|Σ |a_n(k)| r*^n − |k(−1, α)||` with the coefficients of `k(·, α)` taken
/// from [`extremal_coeffs`].
pub fn sharpness_residual_alpha_cv(alpha: f64, r_star: f64, cfg: &ToleranceConfig) -> Result<f64> {
    let series = ExtremalSeries(extremal_coeffs(alpha, cfg.max_terms.min(2_000))?);
    let (value, _) = sum_series(&series, r_star, cfg)?;
    Ok((value - k_min(alpha, cfg)?).abs())
}

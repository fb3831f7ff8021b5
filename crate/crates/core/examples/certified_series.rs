//! The numerical kernels on their own: a custom majorant series, certified
//! truncation and the bisection solver.

use bohr_radius::numerics::{integrate_with_estimate, solve_monotone, sum_series, BohrProblem, MajorantSeries};
use bohr_radius::ToleranceConfig;

/// `Σ n² r^n`, with `b_{n+1}/b_n = (1 + 1/n)² <= (1 + 1/N)²` past index `N`.
struct Squares;

impl MajorantSeries for Squares {
    fn term(&self, n: usize) -> f64 {
        (n * n) as f64
    }
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some((1.0 + 1.0 / n as f64).powi(2))
    }
}

fn main() -> bohr_radius::Result<()> {
    let cfg = ToleranceConfig::default();

    let r = 0.5;
    let (value, terms) = sum_series(Squares, r, &cfg)?;
    let exact = r * (1.0 + r) / (1.0 - r).powi(3);
    println!("Σ n² r^n at r = {r}: {value:.15} after {terms} terms (exact {exact:.15})");

    let res = solve_monotone(&BohrProblem::series(Squares, 0.5), &cfg)?;
    println!("Σ n² r^n = 1/2 at r = {:.15}, residual {:.1e}", res.radius, res.residual);

    let q = integrate_with_estimate(|u: f64| (1.0 + u.sqrt()).powi(-4), 0.0, 1.0, &cfg)?;
    println!("∫_0^1 (1 + √u)^(−4) du = {:.15} ± {:.1e} on {} intervals", q.value, q.error, q.intervals);
    Ok(())
}

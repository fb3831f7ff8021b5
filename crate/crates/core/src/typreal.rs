//! Typically real functions: `sign Im f(z) = sign Im z` off the real axis.
//!
//! Coefficients satisfy `m_n <= a_n <= n` with `m_n = min_θ sin(nθ)/sin θ`, and
//! `|f| >= 1/4` on the boundary, so the Bohr radius solves `r/(1 − r)^2 = 1/4`.

use std::f64::consts::{PI, SQRT_2};

use crate::error::Result;
use crate::numerics::{solve_monotone, sum_series, BohrProblem, MajorantSeries, RadiusResult, ToleranceConfig};

/// `3 − 2√2`, written as `(√2 − 1)^2` to avoid cancellation.
pub const TYPREAL_RADIUS: f64 = (SQRT_2 - 1.0) * (SQRT_2 - 1.0);

/// Lower bound for the distance from 0 to the image boundary.
pub const TYPREAL_DISTANCE: f64 = 0.25;

/// Coefficient envelope `m_n <= a_n <= n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TypRealEnvelope {
    pub n: usize,
    pub lower: f64,
    pub upper: f64,
    /// A minimizer of `sin(nθ)/sin θ` on `[0, π]`.
    pub argmin: f64,
}

/// `r/(1 − r)^2 = Σ n r^n`.
pub fn typreal_lhs(r: f64) -> f64 {
    r / ((1.0 - r) * (1.0 - r))
}

pub fn bohr_problem() -> BohrProblem {
    BohrProblem::closed_form(typreal_lhs, TYPREAL_DISTANCE)
}

pub fn typreal_radius(cfg: &ToleranceConfig) -> Result<RadiusResult> {
    solve_monotone(&bohr_problem(), cfg)
}

/// `n`-th Taylor coefficient of `l_t(z) = z / (1 − 2z cos t + z^2)`, i.e.
/// `sin(nt)/sin t`, via `u_n = 2cos(t) u_{n−1} − u_{n−2}`, `u_0 = 0`, `u_1 = 1`.
///
/// The recurrence is exact at `t = 0` and `t = π`, where the quotient form is
/// `0/0`.
pub fn extremal_lt_coeff(t: f64, n: usize) -> f64 {
    chebyshev_u(t.cos(), n)
}

fn chebyshev_u(x: f64, n: usize) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    if n == 0 {
        0.0
    } else {
        cur
    }
}

/// `min_θ sin(nθ)/sin θ` with its minimizer.
///
/// A grid of `20n + 1` points on `[0, π]` locates the best few basins, each of
/// which is refined by golden-section search.
pub fn envelope(n: usize) -> TypRealEnvelope {
    assert!(n >= 1, "coefficient index starts at 1");
    let f = |theta: f64| extremal_lt_coeff(theta, n);
    let points = 20 * n + 1;
    let step = PI / (points - 1) as f64;
    let mut grid: Vec<(f64, usize)> = (0..points).map(|i| (f(i as f64 * step), i)).collect();
    grid.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut best = (grid[0].0, grid[0].1 as f64 * step);
    for &(_, i) in grid.iter().take(3) {
        let lo = (i as f64 - 1.0).max(0.0) * step;
        let hi = ((i + 1) as f64 * step).min(PI);
        let (theta, value) = golden_min(&f, lo, hi);
        if value < best.0 {
            best = (value, theta);
        }
    }
    TypRealEnvelope { n, lower: best.0, upper: n as f64, argmin: best.1 }
}

pub fn m_n_lower(n: usize) -> f64 {
    envelope(n).lower
}

fn golden_min<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..100 {
        if fc < fd {
            b = d;
            (d, fd) = (c, fc);
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            (c, fc) = (d, fd);
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let candidates = [(a, f(a)), (b, f(b)), (c, fc), (d, fd)];
    candidates.into_iter().min_by(|x, y| x.1.total_cmp(&y.1)).unwrap()
}

struct KoebeExtremal;

impl MajorantSeries for KoebeExtremal {
    fn term(&self, n: usize) -> f64 {
        extremal_lt_coeff(0.0, n)
    }
    fn tail_bound(&self, n: usize, r: f64, _last: f64) -> Option<f64> {
        Some(crate::numerics::dominated_linear_tail(n, r))
    }
}

/// `Σ |a_n(l_0)| r^n`, summed term by term from the extremal `l_0`.
pub fn extremal_majorant(r: f64, cfg: &ToleranceConfig) -> Result<f64> {
    sum_series(KoebeExtremal, r, cfg).map(|(v, _)| v)
}

/// `|Σ n r*^n − 1/4|` at the closed-form radius.
pub fn sharpness_residual_typreal(cfg: &ToleranceConfig) -> Result<f64> {
    Ok((extremal_majorant(TYPREAL_RADIUS, cfg)? - TYPREAL_DISTANCE).abs())
}

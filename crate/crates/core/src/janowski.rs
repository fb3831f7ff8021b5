//! Janowski starlike class `ST[A,B]`: sharp coefficient bounds, the growth
//! function `l_(A,B)(z) = z(1+Bz)^((A−B)/B)` (or `z e^{Az}` when `B = 0`) and
//! the boundary-distance constant `l_(−A,−B)(1)`.

use crate::error::{invalid, Result};
use crate::numerics::MajorantSeries;

/// The pair `(A, B)` with `−1 <= B < A <= 1`; `A > 0` is required when `B = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

impl JanowskiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(invalid(format!("A and B must be finite, got A = {a}, B = {b}")));
        }
        if !(-1.0 <= b && b < a && a <= 1.0) {
            return Err(invalid(format!("requires −1 ≤ B < A ≤ 1, got A = {a}, B = {b}")));
        }
        if b == 0.0 && a <= 0.0 {
            return Err(invalid(format!("B = 0 requires A > 0, got A = {a}")));
        }
        Ok(Self { a, b })
    }

    /// `ST(α) = ST[1 − 2α, −1]`, starlike of order `α ∈ [0, 1)`.
    pub fn starlike_of_order(alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(invalid(format!("order α must satisfy 0 ≤ α < 1, got {alpha}")));
        }
        Self::new(1.0 - 2.0 * alpha, -1.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Exponent `(A − B)/B` of the growth function; only meaningful for `B ≠ 0`.
    fn exponent(&self) -> f64 {
        (self.a - self.b) / self.b
    }

    /// `ρ_n = sup_{m>=n} b_{m+1}/b_m` for the coefficient bounds.
    ///
    /// The ratio is `|B − A/m|`, convex in `A/m`, so the supremum over `m >= n`
    /// sits at `m = n` or in the limit `m → ∞`.
    pub fn coeff_ratio_bound(&self, n: usize) -> f64 {
        let n = n.max(1) as f64;
        (self.b - self.a / n).abs().max(self.b.abs())
    }
}

/// Distance bound `l_(−A,−B)(1)` from the origin to the image boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceBound {
    pub value: f64,
}

/// Sharp bound `|a_n| <= Π_{k=0}^{n−2} |(B − A) + Bk| / (k + 1)` for `n >= 2`.
///
/// `n = 1` returns 1, the normalization `a_1 = 1`. When `(A − B)/B` is a
/// nonnegative integer the bounds are exactly zero from index `(A − B)/B + 2` on.
pub fn coeff_bound(p: JanowskiParams, n: usize) -> f64 {
    assert!(n >= 1, "coefficient index starts at 1");
    if vanishing_index(p).is_some_and(|v| n >= v) {
        return 0.0;
    }
    let (a, b) = (p.a, p.b);
    (0..n.saturating_sub(1)).fold(1.0, |acc, k| {
        let k = k as f64;
        acc * ((b - a) + b * k).abs() / (k + 1.0)
    })
}

fn l_value(a: f64, b: f64, r: f64) -> f64 {
    if b == 0.0 {
        r * (a * r).exp()
    } else {
        let base = 1.0 + b * r;
        let e = (a - b) / b;
        if base == 0.0 {
            // z(1 − z)^{e} with e = −(A + 1) < 0 blows up at z = 1.
            if e < 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        } else {
            r * base.powf(e)
        }
    }
}

/// Upper growth bound `l_(A,B)(r)` on `|f(re^{iθ})|`.
pub fn growth_value(p: JanowskiParams, r: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&r));
    l_value(p.a, p.b, r)
}

/// Lower growth bound `l_(−A,−B)(r)` on `|f(re^{iθ})|`.
pub fn lower_growth_value(p: JanowskiParams, r: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&r));
    l_value(-p.a, -p.b, r)
}

/// `(1 − B)^{(A−B)/B}` for `B ≠ 0`, `e^{−A}` for `B = 0`.
pub fn distance_lower(p: JanowskiParams) -> DistanceBound {
    let value = if p.b == 0.0 { (-p.a).exp() } else { (1.0 - p.b).powf(p.exponent()) };
    DistanceBound { value }
}

/// Signed Taylor coefficients `[c_1, ..., c_n]` of the extremal function
/// `l_(A,B)`.
///
/// Computed from the binomial recurrence `c_{n+1} = c_n · B · (e − (n − 1)) / n`
/// with `e = (A − B)/B` (or `c_{n+1} = c_n · A / n` when `B = 0`), which is
/// independent of the product formula in [`coeff_bound`].
pub fn extremal_coeffs(p: JanowskiParams, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    let mut c = 1.0;
    for m in 1..=n {
        out.push(c);
        let k = m as f64;
        c *= if p.b == 0.0 { p.a / k } else { p.b * (p.exponent() - (k - 1.0)) / k };
    }
    out
}

/// Majorant `r + Σ_{n>=2} coeff_bound(n) r^n` of the class.
#[derive(Debug, Clone, Copy)]
pub struct JanowskiMajorant {
    params: JanowskiParams,
    /// First index whose bound vanishes: all later ones vanish too.
    vanishes_from: Option<usize>,
}

impl JanowskiMajorant {
    pub fn new(params: JanowskiParams) -> Self {
        Self { params, vanishes_from: vanishing_index(params) }
    }

    pub fn params(&self) -> JanowskiParams {
        self.params
    }
}

/// Smallest `n` with `coeff_bound(n) = 0`, i.e. `(B − A) + B(n − 2) = 0`.
pub(crate) fn vanishing_index(p: JanowskiParams) -> Option<usize> {
    if p.b == 0.0 {
        return None;
    }
    let k = (p.a - p.b) / p.b;
    let nearest = k.round();
    // (A, B) = (1, 1/3) gives k = 2 only up to rounding.
    if k > -0.5 && nearest < 1e9 && (k - nearest).abs() <= 1e-12 * nearest.max(1.0) {
        Some(nearest as usize + 2)
    } else {
        None
    }
}

impl MajorantSeries for JanowskiMajorant {
    fn term(&self, n: usize) -> f64 {
        match self.vanishes_from {
            Some(z) if n >= z => 0.0,
            _ => coeff_bound(self.params, n),
        }
    }

    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        Some(self.params.coeff_ratio_bound(n))
    }

    fn tail_bound(&self, n: usize, r: f64, last: f64) -> Option<f64> {
        if matches!(self.vanishes_from, Some(z) if n + 1 >= z) {
            return Some(0.0);
        }
        let x = self.params.coeff_ratio_bound(n) * r;
        (x < 1.0).then(|| last * x / (1.0 - x))
    }
}

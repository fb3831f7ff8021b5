use super::{NeumaierSum, ToleranceConfig};
use crate::error::{Error, Result};

/// Nonnegative coefficient bounds `b_1, b_2, ...` of a majorant `Σ b_n r^n`.
///
/// Implementors must certify their tails: either through
/// [`tail_ratio_bound`](Self::tail_ratio_bound) or by overriding
/// [`tail_bound`](Self::tail_bound) with a dominating closed form.
pub trait MajorantSeries {
    /// `b_n` for `n >= 1`; `b_1` multiplies the linear term.
    fn term(&self, n: usize) -> f64;

    /// A value `ρ` with `b_{m+1} <= ρ b_m` for every `m >= n`.
    fn tail_ratio_bound(&self, _n: usize) -> Option<f64> {
        None
    }

    /// Upper bound on `Σ_{m>n} b_m r^m`, given `last = b_n r^n`.
    ///
    /// The default geometric bound is `last · ρr / (1 − ρr)` and requires
    /// `ρr < 1`.
    fn tail_bound(&self, n: usize, r: f64, last: f64) -> Option<f64> {
        let x = self.tail_ratio_bound(n)? * r;
        if x < 1.0 {
            Some(last * x / (1.0 - x))
        } else {
            None
        }
    }

    /// Number of terms the series can produce, if finite.
    fn available_terms(&self) -> Option<usize> {
        None
    }
}

impl<S: MajorantSeries + ?Sized> MajorantSeries for &S {
    fn term(&self, n: usize) -> f64 {
        (**self).term(n)
    }
    fn tail_ratio_bound(&self, n: usize) -> Option<f64> {
        (**self).tail_ratio_bound(n)
    }
    fn tail_bound(&self, n: usize, r: f64, last: f64) -> Option<f64> {
        (**self).tail_bound(n, r, last)
    }
    fn available_terms(&self) -> Option<usize> {
        (**self).available_terms()
    }
}

/// `Σ_{m>n} m r^m = r^{n+1} ((n+1) − n r) / (1 − r)^2`, the tail of the
/// Koebe majorant. Dominates the tail of any class whose coefficients obey
/// `|a_m| <= m`.
pub fn dominated_linear_tail(n: usize, r: f64) -> f64 {
    let n = n as f64;
    r.powf(n + 1.0) * ((n + 1.0) - n * r) / ((1.0 - r) * (1.0 - r))
}

/// Outcome of a (possibly early-terminated) majorant summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    /// The certified sum, or the partial sum when `exceeded` is set.
    pub value: f64,
    pub terms_used: usize,
    /// The partial sum passed the requested ceiling; `value` is then only a
    /// lower bound for the full series.
    pub exceeded: bool,
}

/// Sums `Σ_{n>=1} b_n r^n` to within `cfg.tail_tol`.
pub fn sum_series<S: MajorantSeries>(series: S, r: f64, cfg: &ToleranceConfig) -> Result<(f64, usize)> {
    let s = sum_series_bounded(series, r, cfg, None)?;
    Ok((s.value, s.terms_used))
}

/// As [`sum_series`], but stops as soon as the partial sum exceeds `ceiling`.
///
/// All terms are nonnegative, so an exceeded partial sum already certifies
/// that the full series lies above the ceiling. Root bracketing relies on this
/// near `r = 1`, where the tail of a slowly converging majorant cannot be
/// certified in any reasonable number of terms.
pub fn sum_series_bounded<S: MajorantSeries>(
    series: S,
    r: f64,
    cfg: &ToleranceConfig,
    ceiling: Option<f64>,
) -> Result<SeriesSum> {
    if !(0.0..1.0).contains(&r) {
        return Err(crate::error::invalid(format!("series radius must lie in [0, 1), got {r}")));
    }
    let cap = series.available_terms().map_or(cfg.max_terms, |n| n.min(cfg.max_terms));
    let mut acc = NeumaierSum::new();
    let mut power = 1.0;
    for n in 1..=cap {
        power *= r;
        let last = series.term(n) * power;
        acc.add(last);
        if let Some(c) = ceiling {
            if acc.value() > c {
                return Ok(SeriesSum { value: acc.value(), terms_used: n, exceeded: true });
            }
        }
        if let Some(tail) = series.tail_bound(n, r, last) {
            if tail <= cfg.tail_tol {
                return Ok(SeriesSum { value: acc.value(), terms_used: n, exceeded: false });
            }
        }
    }
    Err(Error::TailNotCertifiable { r, terms: cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Linear;
    impl MajorantSeries for Linear {
        fn term(&self, n: usize) -> f64 {
            n as f64
        }
        fn tail_bound(&self, n: usize, r: f64, _last: f64) -> Option<f64> {
            Some(dominated_linear_tail(n, r))
        }
    }

    struct Ones;
    impl MajorantSeries for Ones {
        fn term(&self, _n: usize) -> f64 {
            1.0
        }
        fn tail_ratio_bound(&self, _n: usize) -> Option<f64> {
            Some(1.0)
        }
    }

    struct Monomial;
    impl MajorantSeries for Monomial {
        fn term(&self, n: usize) -> f64 {
            if n == 1 {
                1.0
            } else {
                0.0
            }
        }
        fn tail_bound(&self, _n: usize, _r: f64, _last: f64) -> Option<f64> {
            Some(0.0)
        }
    }

    struct Opaque;
    impl MajorantSeries for Opaque {
        fn term(&self, _n: usize) -> f64 {
            1.0
        }
    }

    #[test]
    fn koebe_majorant_at_half() {
        let (v, _) = sum_series(Linear, 0.5, &ToleranceConfig::default()).unwrap();
        assert!((v - 2.0).abs() <= 1e-14, "{v}");
    }

    #[test]
    fn single_term() {
        let (v, n) = sum_series(Monomial, 0.3, &ToleranceConfig::default()).unwrap();
        assert_eq!(v, 0.3);
        assert_eq!(n, 1);
    }

    #[test]
    fn geometric_quarter() {
        let (v, n) = sum_series(Ones, 0.25, &ToleranceConfig::default()).unwrap();
        assert!((v - 1.0 / 3.0).abs() <= 1e-14, "{v}");
        assert!(n <= ToleranceConfig::default().max_terms);
    }

    #[test]
    fn linear_tail_matches_brute_force() {
        for &(n, r) in &[(1usize, 0.3f64), (5, 0.5), (20, 0.9), (0, 0.2)] {
            let brute: f64 = (n + 1..20_000).map(|m| m as f64 * r.powi(m as i32)).sum();
            let closed = dominated_linear_tail(n, r);
            assert!((brute - closed).abs() <= 1e-12 * closed.max(1.0), "n={n} r={r}");
        }
    }

    #[test]
    fn uncertifiable_tail_is_an_error() {
        let err = sum_series(Opaque, 0.5, &ToleranceConfig::default()).unwrap_err();
        assert!(matches!(err, Error::TailNotCertifiable { .. }));
        let cfg = ToleranceConfig { max_terms: 5, ..Default::default() };
        assert!(matches!(sum_series(Ones, 0.9, &cfg), Err(Error::TailNotCertifiable { terms: 5, .. })));
    }

    #[test]
    fn ceiling_stops_early() {
        let cfg = ToleranceConfig::default();
        let s = sum_series_bounded(Linear, 1.0 - 1e-9, &cfg, Some(0.25)).unwrap();
        assert!(s.exceeded);
        assert_eq!(s.terms_used, 1);
    }

    #[test]
    fn rejects_radius_outside_unit_interval() {
        let cfg = ToleranceConfig::default();
        assert!(sum_series(Ones, 1.0, &cfg).is_err());
        assert!(sum_series(Ones, -0.1, &cfg).is_err());
    }
}

//! Closed-form and oracle cross-checks run by `bohr verify`.

use std::cmp::Ordering;
use std::io::Write;

use crate::error::Result;
use crate::janowski::{coeff_bound, JanowskiParams};
use crate::numerics::{BohrProblem, ToleranceConfig};
use crate::subord::SubordParams;
use crate::{alpha_convex, starlike, subord, typreal};

const KOEBE_RADIUS: f64 = 0.171_572_875_253_809_9;

/// One numeric comparison `|got − expected| ≤ tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub expected: f64,
    pub got: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn close(label: impl Into<String>, expected: f64, got: f64, tolerance: f64) -> Self {
        let pass = (got - expected).abs() <= tolerance;
        Self { label: label.into(), expected, got, tolerance, pass }
    }

    /// A residual that must not exceed `tolerance`.
    pub fn small(label: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self::close(label, 0.0, residual.abs(), tolerance)
    }
}

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn(&ToleranceConfig) -> Result<Vec<Check>>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Set when the criterion could not be evaluated at all.
    pub error: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "st-koebe", title: "ST[1,-1] radius is 3 - 2√2", run: st_koebe },
        Criterion { id: "st-order-half", title: "starlike of order 1/2 has radius 1/3", run: st_order_half },
        Criterion {
            id: "st-beta-closed",
            title: "ST[β,-β] closed form agrees with the series route",
            run: st_beta_closed,
        },
        Criterion { id: "st-beta0", title: "ST[β,0] root solves r e^{βr} = e^{-β}", run: st_beta0 },
        Criterion {
            id: "subord-degenerate",
            title: "R(0,0,h) with h = Koebe reduces to 3 - 2√2",
            run: subord_degenerate,
        },
        Criterion {
            id: "subord-order-alpha",
            title: "order-α route matches the Janowski route",
            run: subord_order_alpha,
        },
        Criterion { id: "ac-convex", title: "1-convex radius 1/3 and k(-1,1) = 1/2", run: ac_convex },
        Criterion {
            id: "ac-coeff-closed",
            title: "partition bound in closed form for m = 2 and α = 1",
            run: ac_coeff_closed,
        },
        Criterion {
            id: "ac-partition-oracle",
            title: "partition bound matches composition enumeration",
            run: ac_partition_oracle,
        },
        Criterion { id: "typreal", title: "typically real radius and envelope minima", run: typreal_check },
        Criterion { id: "sharpness", title: "extremal functions attain equality at r*", run: sharpness },
        Criterion {
            id: "janowski-expansion",
            title: "Taylor expansion of l_(A,B) gives the coefficient bounds",
            run: janowski_expansion,
        },
        Criterion { id: "monotonicity", title: "radii and radius equations are increasing", run: monotonicity },
    ]
}

pub fn run_all(cfg: &ToleranceConfig) -> Vec<Outcome> {
    criteria()
        .into_iter()
        .map(|c| {
            let (checks, error) = match (c.run)(cfg) {
                Ok(checks) => (checks, None),
                Err(e) => (Vec::new(), Some(e.to_string())),
            };
            Outcome { id: c.id, title: c.title, checks, error }
        })
        .collect()
}

/// Table of criterion / check / expected / got / tolerance / pass.
pub fn write_report(outcomes: &[Outcome], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:<20} {:<44} {:>23} {:>23} {:>8} pass", "criterion", "check", "expected", "got", "tol")?;
    for o in outcomes {
        if let Some(e) = &o.error {
            writeln!(out, "{:<20} error: {e}", o.id)?;
        }
        for c in &o.checks {
            writeln!(
                out,
                "{:<20} {:<44} {:>23.16e} {:>23.16e} {:>8.0e} {}",
                o.id,
                c.label,
                c.expected,
                c.got,
                c.tolerance,
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    writeln!(out, "{passed}/{} criteria passed", outcomes.len())
}

fn jp(a: f64, b: f64) -> Result<JanowskiParams> {
    JanowskiParams::new(a, b)
}

fn st_koebe(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let r = starlike::bohr_radius_st(jp(1.0, -1.0)?, cfg)?.radius;
    Ok(vec![Check::close("bohr_radius_st(1, -1)", KOEBE_RADIUS, r, 1e-9)])
}

fn st_order_half(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let via_janowski = starlike::bohr_radius_st(jp(0.0, -1.0)?, cfg)?.radius;
    let via_order = starlike::st_alpha_radius(0.5, cfg)?.radius;
    Ok(vec![
        Check::close("bohr_radius_st(0, -1)", 1.0 / 3.0, via_janowski, 1e-9),
        Check::close("st_alpha_radius(0.5)", 1.0 / 3.0, via_order, 1e-9),
    ])
}

fn st_beta_closed(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    (1..=10)
        .map(|k| {
            let beta = k as f64 / 10.0;
            let closed = starlike::st_beta_radius_closed(beta)?;
            let series = starlike::bohr_radius_st(jp(beta, -beta)?, cfg)?.radius;
            Ok(Check::close(format!("β = {beta:.1}"), closed, series, 1e-8))
        })
        .collect()
}

fn st_beta0(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    [0.2, 0.5, 0.8]
        .into_iter()
        .map(|beta: f64| {
            let r = starlike::st_beta0_radius(beta, cfg)?.radius;
            Ok(Check::small(format!("r e^(βr) - e^(-β), β = {beta}"), r * (beta * r).exp() - (-beta).exp(), 1e-12))
        })
        .collect()
}

fn subord_degenerate(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let p = SubordParams::new(0.0, 0.0, jp(1.0, -1.0)?)?;
    let problem = subord::bohr_problem(p);
    let r = subord::bohr_radius_subord(p, cfg)?.radius;
    Ok(vec![
        Check::close("radius", KOEBE_RADIUS, r, 1e-9),
        Check::close("distance target", 0.25, problem.target(), 1e-15),
    ])
}

fn subord_order_alpha(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for alpha in [0.0, 0.5] {
        for beta in [0.0, 1.0, 2.0] {
            for gamma in [0.0, 1.0] {
                if beta < gamma {
                    continue;
                }
                let direct = subord::subord_starlike_alpha_radius(alpha, beta, gamma, cfg)?.radius;
                let p = SubordParams::new(beta, gamma, JanowskiParams::starlike_of_order(alpha)?)?;
                let general = subord::bohr_radius_subord(p, cfg)?.radius;
                checks.push(Check::close(format!("α = {alpha}, β = {beta}, γ = {gamma}"), general, direct, 1e-8));
            }
        }
    }
    Ok(checks)
}

fn ac_convex(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    Ok(vec![
        Check::close("bohr_radius_alpha_cv(1)", 1.0 / 3.0, alpha_convex::bohr_radius_alpha_cv(1.0, cfg)?.radius, 1e-6),
        Check::close("k_min(1)", 0.5, alpha_convex::k_min(1.0, cfg)?, 1e-10),
    ])
}

fn ac_coeff_closed(_cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let got = alpha_convex::ac_coeff_bound(alpha, 2)?;
        checks.push(Check::close(format!("m = 2, α = {alpha}"), 2.0 / (1.0 + alpha), got, 1e-12));
    }
    for m in 2..=20 {
        checks.push(Check::close(format!("α = 1, m = {m}"), 1.0, alpha_convex::ac_coeff_bound(1.0, m)?, 1e-12));
    }
    Ok(checks)
}

/// Double-double number `hi + lo`, enough to keep the alternating sums of the
/// oracle below the criterion tolerance.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Self { hi: s, lo: (a - (s - bb)) + (b - bb) }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Self { hi: s, lo: lo - (s - hi) }
    }

    fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        Self::renorm(s.hi, s.lo + self.lo + o.lo)
    }

    fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Self::renorm(p, err + self.hi * o.lo + self.lo * o.hi)
    }

    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Self::new(-q1)));
        let q2 = r.hi / o.hi;
        Self::renorm(q1, q2)
    }
}

/// `Π_{k=0}^{n−1}(2 + kα) / (n! α^n (1 + nα))`, evaluated literally.
fn c_literal(alpha: f64, n: usize) -> Dd {
    let a = Dd::new(alpha);
    let mut num = Dd::new(1.0);
    let mut den = Dd::new(1.0).add(Dd::new(n as f64).mul(a));
    for k in 0..n {
        num = num.mul(Dd::new(2.0).add(Dd::new(k as f64).mul(a)));
        den = den.mul(Dd::new((k + 1) as f64)).mul(a);
    }
    num.div(den)
}

/// `Σ_{(j_1, ..., j_q) composition of n} Π c_{j_i}`.
fn composition_sum(c: &[Dd], n: usize, q: usize) -> Dd {
    if q == 0 {
        return Dd::new(if n == 0 { 1.0 } else { 0.0 });
    }
    (1..=n.saturating_sub(q - 1)).fold(Dd::new(0.0), |acc, j| acc.add(c[j].mul(composition_sum(c, n - j, q - 1))))
}

/// Coefficient of `z^{m−1}` in `(1 + Σ c_i z^i)^α`, expanded as
/// `Σ_q binom(α, q) (Σ c_i z^i)^q` over ordered compositions.
fn composition_oracle(alpha: f64, m: usize) -> f64 {
    let n = m - 1;
    let c: Vec<Dd> = (0..=n).map(|i| if i == 0 { Dd::new(0.0) } else { c_literal(alpha, i) }).collect();
    let mut binom = Dd::new(1.0);
    let mut total = Dd::new(0.0);
    for q in 1..=n {
        binom = binom.mul(Dd::new(alpha - (q - 1) as f64)).div(Dd::new(q as f64));
        total = total.add(binom.mul(composition_sum(&c, n, q)));
    }
    total.hi + total.lo
}

fn ac_partition_oracle(_cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        for m in 2..=9 {
            let oracle = composition_oracle(alpha, m);
            let got = alpha_convex::ac_coeff_bound(alpha, m)?;
            checks.push(Check::close(format!("α = {alpha}, m = {m}"), oracle, got, 1e-12));
        }
    }
    Ok(checks)
}

fn typreal_check(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    Ok(vec![
        Check::close("typreal_radius", KOEBE_RADIUS, typreal::typreal_radius(cfg)?.radius, 1e-12),
        Check::close("m_2", -2.0, typreal::m_n_lower(2), 1e-6),
        Check::close("m_3", -1.0, typreal::m_n_lower(3), 1e-6),
    ])
}

fn sharpness(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (a, b) in [(1.0, -1.0), (0.5, 0.0)] {
        let p = jp(a, b)?;
        let r = starlike::bohr_radius_st(p, cfg)?.radius;
        checks.push(Check::small(format!("ST[{a}, {b}]"), starlike::sharpness_residual_st(p, r, cfg)?, 1e-8));
    }
    let p = SubordParams::new(1.0, 0.0, jp(1.0, -1.0)?)?;
    let r = subord::bohr_radius_subord(p, cfg)?.radius;
    checks.push(Check::small("R(1, 0, Koebe)", subord::sharpness_residual_subord(&p, r, cfg)?, 1e-8));
    let r = alpha_convex::bohr_radius_alpha_cv(1.0, cfg)?.radius;
    checks.push(Check::small("1-convex", alpha_convex::sharpness_residual_alpha_cv(1.0, r, cfg)?, 1e-6));
    let r = typreal::typreal_radius(cfg)?.radius;
    let residual = typreal::extremal_majorant(r, cfg)? - typreal::TYPREAL_DISTANCE;
    checks.push(Check::small("typically real", residual, 1e-8));
    Ok(checks)
}

/// Taylor coefficients `[l_1, ..., l_n]` of `l_(A,B)(z) = z exp(e log(1 + Bz))`
/// (`z e^{Az}` when `B = 0`), by exponentiating the logarithm series.
fn janowski_taylor(a: f64, b: f64, n: usize) -> Vec<f64> {
    let log: Vec<f64> = (0..n)
        .map(|k| match k {
            0 => 0.0,
            _ if b == 0.0 => {
                if k == 1 {
                    a
                } else {
                    0.0
                }
            }
            _ => {
                let e = (a - b) / b;
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                e * sign * b.powi(k as i32) / k as f64
            }
        })
        .collect();
    // g = exp(f): k g_k = Σ_{j=1}^{k} j f_j g_{k−j}.
    let mut g = vec![0.0; n];
    g[0] = 1.0;
    for k in 1..n {
        g[k] = (1..=k).map(|j| j as f64 * log[j] * g[k - j]).sum::<f64>() / k as f64;
    }
    g
}

fn janowski_expansion(_cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (a, b) in [(1.0, -1.0), (0.5, -0.5), (1.0, 1.0 / 3.0), (0.7, 0.0)] {
        let p = jp(a, b)?;
        let taylor = janowski_taylor(a, b, 30);
        let worst = (1..=30)
            .map(|n| {
                let bound = coeff_bound(p, n);
                (taylor[n - 1].abs() - bound).abs() / bound.max(1.0)
            })
            .fold(0.0, f64::max);
        checks.push(Check::small(format!("(A, B) = ({a}, {b:.4}), n ≤ 30"), worst, 1e-10));
    }
    Ok(checks)
}

fn count_non_increasing(values: &[f64]) -> usize {
    values.windows(2).filter(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater)).count()
}

fn monotonicity(cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let radii = (0..10)
        .map(|k| starlike::st_alpha_radius(k as f64 / 10.0, cfg).map(|r| r.radius))
        .collect::<Result<Vec<_>>>()?;
    let mut checks =
        vec![Check::close("st_alpha_radius, non-increasing steps", 0.0, count_non_increasing(&radii) as f64, 0.0)];

    let mut problems: Vec<(String, BohrProblem)> = Vec::new();
    for (a, b) in [(1.0, -1.0), (0.5, -0.5), (1.0, 1.0 / 3.0), (0.7, 0.0), (0.0, -1.0)] {
        problems.push((format!("ST[{a}, {b:.4}]"), starlike::bohr_problem(jp(a, b)?)));
    }
    for (beta, gamma) in [(1.0, 0.0), (2.0, 1.0)] {
        let p = SubordParams::new(beta, gamma, jp(1.0, -1.0)?)?;
        problems.push((format!("R({beta}, {gamma}, Koebe)"), subord::bohr_problem(p)));
    }
    for alpha in [0.25, 0.5, 1.0] {
        problems.push((format!("{alpha}-convex"), alpha_convex::bohr_problem(alpha, cfg)?));
    }
    problems.push(("typically real".into(), typreal::bohr_problem()));

    for (label, problem) in problems {
        let values = (1..20).map(|k| problem.lhs(k as f64 / 20.0, cfg)).collect::<Result<Vec<_>>>()?;
        checks.push(Check::close(
            format!("L(r) of {label}, non-increasing steps"),
            0.0,
            count_non_increasing(&values) as f64,
            0.0,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_oracle_matches_hand_values() {
        // m = 2: α c_1 = 2/(1+α).
        assert!((composition_oracle(0.5, 2) - 2.0 / 1.5).abs() < 1e-14);
        // α = 1: c_n = 1 and binom(1, q) vanishes for q ≥ 2.
        assert!((composition_oracle(1.0, 7) - 1.0).abs() < 1e-14);
        // Exact rational value at α = 1/4.
        assert!((composition_oracle(0.25, 9) - 4.916_931_234_285_714).abs() < 1e-14);
    }

    #[test]
    fn janowski_taylor_examples() {
        let koebe = janowski_taylor(1.0, -1.0, 6);
        for (n, c) in koebe.iter().enumerate() {
            assert!((c - (n + 1) as f64).abs() < 1e-12);
        }
        let exp = janowski_taylor(1.0, 0.0, 4);
        assert!((exp[3] - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn loose_root_tolerance_fails() {
        let cfg = ToleranceConfig::default().with_root_tol(1e-2);
        assert!(run_all(&cfg).iter().any(|o| !o.passed()));
    }
}

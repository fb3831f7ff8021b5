use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::janowski::JanowskiParams;
use crate::numerics::{RadiusResult, ToleranceConfig};
use crate::subord::SubordParams;
use crate::{alpha_convex, starlike, subord, typreal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassId {
    St,
    StAlpha,
    StBeta,
    #[value(name = "st-beta0")]
    #[serde(rename = "st-beta0")]
    StBeta0,
    StM,
    Subord,
    AlphaConvex,
    Typreal,
}

impl ClassId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::St => "st",
            ClassId::StAlpha => "st-alpha",
            ClassId::StBeta => "st-beta",
            ClassId::StBeta0 => "st-beta0",
            ClassId::StM => "st-m",
            ClassId::Subord => "subord",
            ClassId::AlphaConvex => "alpha-convex",
            ClassId::Typreal => "typreal",
        }
    }

    /// Parameters the class accepts.
    pub fn params(self) -> &'static [ParamName] {
        use ParamName::*;
        match self {
            ClassId::St => &[A, B],
            ClassId::StAlpha | ClassId::AlphaConvex => &[Alpha],
            ClassId::StBeta | ClassId::StBeta0 => &[Beta],
            ClassId::StM => &[M],
            ClassId::Subord => &[A, B, Alpha, Beta, Gamma],
            ClassId::Typreal => &[],
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        <ClassId as ValueEnum>::from_str(s, false).map_err(|_| invalid(format!("unknown class {s:?}")))
    }
}

/// Parameter names in canonical column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamName {
    A,
    B,
    Alpha,
    Beta,
    Gamma,
    M,
}

impl ParamName {
    pub const ALL: [ParamName; 6] =
        [ParamName::A, ParamName::B, ParamName::Alpha, ParamName::Beta, ParamName::Gamma, ParamName::M];

    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::A => "A",
            ParamName::B => "B",
            ParamName::Alpha => "alpha",
            ParamName::Beta => "beta",
            ParamName::Gamma => "gamma",
            ParamName::M => "M",
        }
    }
}

impl FromStr for ParamName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ParamName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown parameter {s:?}; expected one of A, B, alpha, beta, gamma, M")))
    }
}

/// Raw parameter values as given on the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ClassParams {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub m: Option<f64>,
}

impl ClassParams {
    pub fn get(&self, name: ParamName) -> Option<f64> {
        match name {
            ParamName::A => self.a,
            ParamName::B => self.b,
            ParamName::Alpha => self.alpha,
            ParamName::Beta => self.beta,
            ParamName::Gamma => self.gamma,
            ParamName::M => self.m,
        }
    }

    pub fn set(&mut self, name: ParamName, value: f64) {
        let slot = match name {
            ParamName::A => &mut self.a,
            ParamName::B => &mut self.b,
            ParamName::Alpha => &mut self.alpha,
            ParamName::Beta => &mut self.beta,
            ParamName::Gamma => &mut self.gamma,
            ParamName::M => &mut self.m,
        };
        *slot = Some(value);
    }
}

/// One computed radius, as printed and as written by sweeps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub class: ClassId,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    #[serde(rename = "M")]
    pub m: Option<f64>,
    pub radius: Option<f64>,
    pub residual: Option<f64>,
    pub terms_used: Option<usize>,
    pub clamped: Option<bool>,
    pub error: Option<String>,
}

impl ResultRow {
    fn new(class: ClassId, params: ClassParams, res: RadiusResult) -> Self {
        Self {
            class,
            a: params.a,
            b: params.b,
            alpha: params.alpha,
            beta: params.beta,
            gamma: params.gamma,
            m: params.m,
            radius: Some(res.radius),
            residual: Some(res.residual),
            terms_used: Some(res.terms_used),
            clamped: Some(res.clamped),
            error: None,
        }
    }

    /// A row recording a failed evaluation.
    pub fn failed(class: ClassId, params: ClassParams, err: &Error) -> Self {
        Self {
            class,
            a: params.a,
            b: params.b,
            alpha: params.alpha,
            beta: params.beta,
            gamma: params.gamma,
            m: params.m,
            radius: None,
            residual: None,
            terms_used: None,
            clamped: None,
            error: Some(err.to_string()),
        }
    }

    pub fn param(&self, name: ParamName) -> Option<f64> {
        match name {
            ParamName::A => self.a,
            ParamName::B => self.b,
            ParamName::Alpha => self.alpha,
            ParamName::Beta => self.beta,
            ParamName::Gamma => self.gamma,
            ParamName::M => self.m,
        }
    }

    /// One-line summary, e.g. `st A=1 B=-1: r* = 0.171572875253810 ...`.
    pub fn human(&self) -> String {
        let params: Vec<String> =
            ParamName::ALL.into_iter().filter_map(|p| self.param(p).map(|v| format!("{}={}", p.as_str(), v))).collect();
        let head =
            if params.is_empty() { self.class.to_string() } else { format!("{} {}", self.class, params.join(" ")) };
        match (&self.error, self.radius) {
            (Some(e), _) => format!("{head}: error: {e}"),
            (None, Some(r)) => {
                let mut s = format!(
                    "{head}: r* = {r:.15} (residual {:.1e}, {} terms)",
                    self.residual.unwrap_or(f64::NAN),
                    self.terms_used.unwrap_or(0)
                );
                if self.clamped == Some(true) {
                    s.push_str(" [clamped: no root below 1 - 1e-9]");
                }
                s
            }
            (None, None) => head,
        }
    }
}

fn reject_unused(class: ClassId, params: &ClassParams) -> Result<()> {
    for name in ParamName::ALL {
        if params.get(name).is_some() && !class.params().contains(&name) {
            return Err(invalid(format!("class {class} does not take --{}", name.as_str())));
        }
    }
    Ok(())
}

fn required(class: ClassId, params: &ClassParams, name: ParamName) -> Result<f64> {
    params.get(name).ok_or_else(|| invalid(format!("class {class} requires --{}", name.as_str())))
}

/// Radius for `class` at `params`, dispatched to the matching module.
pub fn run_single(class: ClassId, params: &ClassParams, cfg: &ToleranceConfig) -> Result<ResultRow> {
    reject_unused(class, params)?;
    let mut used = *params;
    let res = match class {
        ClassId::St => {
            let a = *used.a.get_or_insert(1.0);
            let b = *used.b.get_or_insert(-1.0);
            starlike::bohr_radius_st(JanowskiParams::new(a, b)?, cfg)?
        }
        ClassId::StAlpha => starlike::st_alpha_radius(required(class, params, ParamName::Alpha)?, cfg)?,
        ClassId::StBeta => {
            let beta = required(class, params, ParamName::Beta)?;
            let radius = starlike::st_beta_radius_closed(beta)?;
            let problem = starlike::bohr_problem(JanowskiParams::new(beta, -beta)?);
            let at = problem.evaluate(radius, cfg)?;
            RadiusResult {
                radius,
                residual: (at.value - problem.target()).abs(),
                terms_used: at.terms_used,
                clamped: false,
            }
        }
        ClassId::StBeta0 => starlike::st_beta0_radius(required(class, params, ParamName::Beta)?, cfg)?,
        ClassId::StM => starlike::st_m_radius(required(class, params, ParamName::M)?, cfg)?,
        ClassId::Subord => {
            let beta = required(class, params, ParamName::Beta)?;
            let gamma = *used.gamma.get_or_insert(0.0);
            if let Some(alpha) = params.alpha {
                if params.a.is_some() || params.b.is_some() {
                    return Err(invalid("subord takes either --alpha or --A/--B, not both"));
                }
                subord::subord_starlike_alpha_radius(alpha, beta, gamma, cfg)?
            } else {
                let a = *used.a.get_or_insert(1.0);
                let b = *used.b.get_or_insert(-1.0);
                subord::bohr_radius_subord(SubordParams::new(beta, gamma, JanowskiParams::new(a, b)?)?, cfg)?
            }
        }
        ClassId::AlphaConvex => alpha_convex::bohr_radius_alpha_cv(required(class, params, ParamName::Alpha)?, cfg)?,
        ClassId::Typreal => typreal::typreal_radius(cfg)?,
    };
    Ok(ResultRow::new(class, used, res))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn dispatch_examples() {
        let row = run_single(ClassId::St, &ClassParams { a: Some(1.0), b: Some(-1.0), ..Default::default() }, &cfg())
            .unwrap();
        assert!((row.radius.unwrap() - 0.171_572_9).abs() < 1e-7);
        let row = run_single(ClassId::Typreal, &ClassParams::default(), &cfg()).unwrap();
        assert!((row.radius.unwrap() - 0.171_573).abs() < 1e-6);
        let row =
            run_single(ClassId::AlphaConvex, &ClassParams { alpha: Some(1.0), ..Default::default() }, &cfg()).unwrap();
        assert!((row.radius.unwrap() - 0.333_333_3).abs() < 1e-7);
    }

    #[test]
    fn st_defaults_are_recorded() {
        let row = run_single(ClassId::St, &ClassParams::default(), &cfg()).unwrap();
        assert_eq!((row.a, row.b), (Some(1.0), Some(-1.0)));
    }

    #[test]
    fn st_beta_reports_series_residual() {
        let row = run_single(ClassId::StBeta, &ClassParams { beta: Some(0.5), ..Default::default() }, &cfg()).unwrap();
        assert!(row.residual.unwrap() < 1e-12);
        assert!(row.terms_used.unwrap() > 1);
    }

    #[test]
    fn subord_alpha_route() {
        let p = ClassParams { alpha: Some(0.5), beta: Some(1.0), gamma: Some(1.0), ..Default::default() };
        let via_alpha = run_single(ClassId::Subord, &p, &cfg()).unwrap().radius.unwrap();
        let p = ClassParams { a: Some(0.0), b: Some(-1.0), beta: Some(1.0), gamma: Some(1.0), ..Default::default() };
        let via_ab = run_single(ClassId::Subord, &p, &cfg()).unwrap().radius.unwrap();
        assert!((via_alpha - via_ab).abs() < 1e-8);
        let both = ClassParams { a: Some(0.0), alpha: Some(0.5), beta: Some(1.0), ..Default::default() };
        assert!(run_single(ClassId::Subord, &both, &cfg()).is_err());
    }

    #[test]
    fn error_messages_name_the_constraint() {
        let err = run_single(ClassId::St, &ClassParams { a: Some(0.5), b: Some(0.7), ..Default::default() }, &cfg())
            .unwrap_err();
        assert!(err.to_string().contains("requires −1 ≤ B < A ≤ 1"));
        let err = run_single(ClassId::StM, &ClassParams::default(), &cfg()).unwrap_err();
        assert!(err.to_string().contains("requires --M"));
        let err =
            run_single(ClassId::Typreal, &ClassParams { beta: Some(1.0), ..Default::default() }, &cfg()).unwrap_err();
        assert!(err.to_string().contains("does not take --beta"));
    }

    #[test]
    fn class_names_round_trip() {
        for c in ClassId::value_variants() {
            assert_eq!(c.as_str().parse::<ClassId>().unwrap(), *c);
            let json = serde_json::to_string(c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.as_str()));
        }
    }
}

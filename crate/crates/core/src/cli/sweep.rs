use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;

use super::classes::{run_single, ClassId, ClassParams, ParamName, ResultRow};
use crate::error::{invalid, Error, Result};
use crate::numerics::ToleranceConfig;

/// CSV columns, in order.
pub const CSV_HEADER: [&str; 12] =
    ["class", "A", "B", "alpha", "beta", "gamma", "M", "radius", "residual", "terms_used", "clamped", "error"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// `<param>:<start>:<stop>:<step>`, inclusive of `stop` when it lies on the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweptParam {
    pub name: ParamName,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SweptParam {
    /// Grid points, snapped to 12 decimals so that `-1 + 9 * 0.1` prints as `-0.1`.
    pub fn grid(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| {
                let v = self.start + i as f64 * self.step;
                (v * 1e12).round() / 1e12
            })
            .collect()
    }
}

impl FromStr for SweptParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_sweep(s)
    }
}

pub fn parse_sweep(s: &str) -> Result<SweptParam> {
    let fields: Vec<&str> = s.split(':').collect();
    let [name, start, stop, step] = fields[..] else {
        return Err(invalid(format!("sweep must look like <param>:<start>:<stop>:<step>, got {s:?}")));
    };
    let number = |field: &str, what: &str| -> Result<f64> {
        field
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| invalid(format!("sweep {what} {field:?} is not a decimal number")))
    };
    Ok(SweptParam {
        name: name.trim().parse()?,
        start: number(start, "start")?,
        stop: number(stop, "stop")?,
        step: number(step, "step")?,
    })
}

/// A validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub class: ClassId,
    pub fixed: ClassParams,
    pub swept: Option<SweptParam>,
    pub out: PathBuf,
    pub format: OutputFormat,
}

impl SweepSpec {
    pub fn new(
        class: ClassId,
        fixed: ClassParams,
        swept: Option<SweptParam>,
        out: PathBuf,
        format: OutputFormat,
    ) -> Result<Self> {
        match swept {
            Some(sw) => {
                if !class.params().contains(&sw.name) {
                    return Err(invalid(format!("class {class} has no parameter {}", sw.name.as_str())));
                }
                if fixed.get(sw.name).is_some() {
                    return Err(invalid(format!("{} is both swept and fixed", sw.name.as_str())));
                }
                if !(sw.step > 0.0 && sw.step.is_finite()) {
                    return Err(invalid(format!("sweep requires step > 0, got {}", sw.step)));
                }
                if !(sw.start < sw.stop && sw.start.is_finite() && sw.stop.is_finite()) {
                    return Err(invalid(format!("sweep requires start < stop, got {} and {}", sw.start, sw.stop)));
                }
            }
            None if !class.params().is_empty() => {
                return Err(invalid(format!("class {class} needs --sweep <param>:<start>:<stop>:<step>")));
            }
            None => {}
        }
        Ok(Self { class, fixed, swept, out, format })
    }

    /// Parameter sets in sweep order.
    pub fn points(&self) -> Vec<ClassParams> {
        match self.swept {
            None => vec![self.fixed],
            Some(sw) => sw
                .grid()
                .into_iter()
                .map(|v| {
                    let mut p = self.fixed;
                    p.set(sw.name, v);
                    p
                })
                .collect(),
        }
    }
}

/// Evaluates every grid point; failures become rows with the `error` column set.
pub fn run_sweep(spec: &SweepSpec, cfg: &ToleranceConfig) -> Result<Vec<ResultRow>> {
    cfg.validate()?;
    Ok(spec
        .points()
        .into_par_iter()
        .map(|p| run_single(spec.class, &p, cfg).unwrap_or_else(|e| ResultRow::failed(spec.class, p, &e)))
        .collect())
}

fn float_cell(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_default()
}

fn csv_record(row: &ResultRow) -> [String; 12] {
    [
        row.class.to_string(),
        float_cell(row.a),
        float_cell(row.b),
        float_cell(row.alpha),
        float_cell(row.beta),
        float_cell(row.gamma),
        float_cell(row.m),
        float_cell(row.radius),
        float_cell(row.residual),
        row.terms_used.map(|n| n.to_string()).unwrap_or_default(),
        row.clamped.map(|c| c.to_string()).unwrap_or_default(),
        row.error.clone().unwrap_or_default(),
    ]
}

fn csv_error(e: csv::Error) -> Error {
    invalid(format!("csv: {e}"))
}

pub fn write_rows<W: Write>(rows: &[ResultRow], format: OutputFormat, mut out: W) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.write_record(csv_record(row))?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
    }
    out.flush()
}

/// Parses CSV written by [`write_rows`].
pub fn read_csv_rows<R: Read>(input: R) -> Result<Vec<ResultRow>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers().map_err(csv_error)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(invalid(format!("unexpected csv header {header:?}")));
    }
    let float = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            return Ok(None);
        }
        s.parse().map(Some).map_err(|_| invalid(format!("bad number {s:?}")))
    };
    let mut rows = Vec::new();
    for record in reader.records() {
        let r = record.map_err(csv_error)?;
        rows.push(ResultRow {
            class: r[0].parse()?,
            a: float(&r[1])?,
            b: float(&r[2])?,
            alpha: float(&r[3])?,
            beta: float(&r[4])?,
            gamma: float(&r[5])?,
            m: float(&r[6])?,
            radius: float(&r[7])?,
            residual: float(&r[8])?,
            terms_used: if r[9].is_empty() {
                None
            } else {
                Some(r[9].parse().map_err(|_| invalid(format!("bad term count {:?}", &r[9])))?)
            },
            clamped: if r[10].is_empty() {
                None
            } else {
                Some(r[10].parse().map_err(|_| invalid(format!("bad flag {:?}", &r[10])))?)
            },
            error: (!r[11].is_empty()).then(|| r[11].to_string()),
        });
    }
    Ok(rows)
}

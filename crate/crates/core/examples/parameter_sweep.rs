//! Sweeps `B` for `ST[1,B]` in parallel and writes the rows as CSV to stdout,
//! the same path `bohr sweep st --A 1 --sweep B:-1:-0.1:0.1` takes.

use std::io::stdout;

use bohr_radius::cli::{parse_sweep, run_sweep, write_rows, ClassId, ClassParams, OutputFormat, SweepSpec};
use bohr_radius::ToleranceConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fixed = ClassParams { a: Some(1.0), ..Default::default() };
    let swept = parse_sweep("B:-1:-0.1:0.1")?;
    let spec = SweepSpec::new(ClassId::St, fixed, Some(swept), "-".into(), OutputFormat::Csv)?;
    let rows = run_sweep(&spec, &ToleranceConfig::default())?;
    write_rows(&rows, spec.format, stdout().lock())?;
    Ok(())
}

//! The `bohr` command line: single radius queries, parameter sweeps and the
//! `verify` self-check.
//!
//! ```text
//! bohr <class_id> [--A x] [--B x] [--alpha x] [--beta x] [--gamma x] [--M x] [--tol x] [--json]
//! bohr sweep <class_id> --sweep <param>:<start>:<stop>:<step> [fixed flags] --out <path> --format csv|json
//! bohr verify [--list] [--tol x]
//! ```
//!
//! Exit codes: 0 success, 1 invalid parameters, 2 numerical failure, 3 verify
//! failure.

mod classes;
mod sweep;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use classes::{run_single, ClassId, ClassParams, ParamName, ResultRow};
pub use sweep::{parse_sweep, read_csv_rows, run_sweep, write_rows, OutputFormat, SweepSpec, SweptParam, CSV_HEADER};

use crate::error::{Error, Result};
use crate::numerics::ToleranceConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Sharp Bohr radius constants for classes of analytic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Janowski starlike ST[A,B] (defaults A = 1, B = −1)
    #[command(name = "st")]
    St(QueryArgs),
    /// Starlike of order α: ST[1 − 2α, −1]
    #[command(name = "st-alpha")]
    StAlpha(QueryArgs),
    /// Robertson's ST^(β) = ST[β, −β], closed form
    #[command(name = "st-beta")]
    StBeta(QueryArgs),
    /// MacGregor's ST_(β) = ST[β, 0]
    #[command(name = "st-beta0")]
    StBeta0(QueryArgs),
    /// Janowski's ST(M) = ST[1, (1 − M)/M]
    #[command(name = "st-m")]
    StM(QueryArgs),
    /// f + βzf' + γz²f'' ≺ h with h ∈ ST[A,B] (or h starlike of order --alpha)
    #[command(name = "subord")]
    Subord(QueryArgs),
    /// Mocanu α-convex functions
    #[command(name = "alpha-convex")]
    AlphaConvex(QueryArgs),
    /// Typically real functions
    #[command(name = "typreal")]
    Typreal(QueryArgs),
    /// Evaluate a class over a parameter grid and write CSV or JSON
    Sweep(SweepArgs),
    /// Run the built-in cross-check suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamFlags {
    /// Janowski parameter A
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Janowski parameter B
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Order α (st-alpha, subord) or α-convexity parameter
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// β for st-beta, st-beta0 and subord
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// γ for subord, 0 ≤ γ ≤ β
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// ST(M) parameter, M > 1/2
    #[arg(long = "M", allow_negative_numbers = true)]
    pub m: Option<f64>,
}

impl From<&ParamFlags> for ClassParams {
    fn from(f: &ParamFlags) -> Self {
        ClassParams { a: f.a, b: f.b, alpha: f.alpha, beta: f.beta, gamma: f.gamma, m: f.m }
    }
}

#[derive(Debug, Clone, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub params: ParamFlags,
    /// Root tolerance (absolute, on r*)
    #[arg(long)]
    pub tol: Option<f64>,
    /// Print the result as a JSON object
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    pub class: ClassId,
    /// <param>:<start>:<stop>:<step>, e.g. B:-1:-0.1:0.1
    #[arg(long, allow_hyphen_values = true)]
    pub sweep: Option<String>,
    #[command(flatten)]
    pub params: ParamFlags,
    /// Root tolerance (absolute, on r*)
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Print criterion identifiers without running them
    #[arg(long)]
    pub list: bool,
    /// Root tolerance used by every criterion
    #[arg(long)]
    pub tol: Option<f64>,
}

fn config(tol: Option<f64>) -> Result<ToleranceConfig> {
    let mut cfg = ToleranceConfig::default().with_env_overrides()?;
    if let Some(t) = tol {
        cfg.root_tol = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Parses `std::env::args` and runs the command; returns the exit code.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => execute(cli, &mut std::io::stdout().lock()),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Runs a parsed command, writing normal output to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::St(q) => query(ClassId::St, q, out),
        Command::StAlpha(q) => query(ClassId::StAlpha, q, out),
        Command::StBeta(q) => query(ClassId::StBeta, q, out),
        Command::StBeta0(q) => query(ClassId::StBeta0, q, out),
        Command::StM(q) => query(ClassId::StM, q, out),
        Command::Subord(q) => query(ClassId::Subord, q, out),
        Command::AlphaConvex(q) => query(ClassId::AlphaConvex, q, out),
        Command::Typreal(q) => query(ClassId::Typreal, q, out),
        Command::Sweep(s) => sweep_command(s, out),
        Command::Verify(v) => return verify_command(v, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParams(format!("I/O error: {e}"))
}

fn query(class: ClassId, q: QueryArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = config(q.tol)?;
    let row = run_single(class, &ClassParams::from(&q.params), &cfg)?;
    if q.json {
        let s = serde_json::to_string(&row).expect("rows always serialize");
        writeln!(out, "{s}").map_err(io_err)?;
    } else {
        writeln!(out, "{}", row.human()).map_err(io_err)?;
    }
    Ok(())
}

fn sweep_command(s: SweepArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = config(s.tol)?;
    let swept = s.sweep.as_deref().map(parse_sweep).transpose()?;
    let spec = SweepSpec::new(s.class, ClassParams::from(&s.params), swept, s.out, s.format)?;
    let rows = run_sweep(&spec, &cfg)?;
    let file = std::fs::File::create(&spec.out).map_err(io_err)?;
    write_rows(&rows, spec.format, std::io::BufWriter::new(file)).map_err(io_err)?;
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    writeln!(out, "wrote {} rows ({} with errors) to {}", rows.len(), failed, spec.out.display()).map_err(io_err)?;
    Ok(())
}

fn verify_command(v: VerifyArgs, out: &mut dyn Write) -> i32 {
    if v.list {
        for c in verify::criteria() {
            let _ = writeln!(out, "{}\t{}", c.id, c.title);
        }
        return EXIT_OK;
    }
    let cfg = match config(v.tol) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let outcomes = verify::run_all(&cfg);
    let _ = verify::write_report(&outcomes, out);
    if outcomes.iter().all(|o| o.passed()) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

//! Command-line front end for `implicit-core`.
//!
//! The binary is a thin wrapper around [`run`], which takes the argument list
//! and two output streams so that commands can be driven from tests.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use implicit_core::{implicitize, substitute_check, Error, Method, MethodConfig, RatParam};

pub use parse::{parse_bipoly, parse_rational_function, render_rational_function, ParseError};
pub use report::{
    poly_from_json, poly_hash, run_bench, BenchRecord, BenchReport, OpStats, PolyDoc,
};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const DEGENERATE: i32 = 2;
    pub const DISAGREE: i32 = 3;
    pub const NOT_ON_CURVE: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "implicit",
    version,
    about = "Implicit equations of rational plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the implicit polynomial with one method.
    Implicitize(ImplicitizeArgs),
    /// Run several methods and compare cost and results.
    Bench(BenchArgs),
    /// Check whether a polynomial vanishes on the curve.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// x(t), e.g. "(1+t)/(2+t)"
    #[arg(long = "x", allow_hyphen_values = true)]
    pub x: String,
    /// y(t), e.g. "(3+t)/(4+t)"
    #[arg(long = "y", allow_hyphen_values = true)]
    pub y: String,
}

#[derive(Debug, Args)]
pub struct ImplicitizeArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// unstructured, dualvand or kron
    #[arg(long, default_value = "kron")]
    pub method: String,
    /// Node bases of the dual-Vandermonde method.
    #[arg(long, default_value = "2,3")]
    pub primes: String,
    #[arg(long)]
    pub json: bool,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// "all" or a comma-separated list of methods.
    #[arg(long, default_value = "all")]
    pub methods: String,
    /// Timed runs per method; the median is reported.
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    #[arg(long, default_value = "2,3")]
    pub primes: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Polynomial in human form or JSON, inline or as a file path.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

/// A failed command: exit code plus a message for the diagnostic stream.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Failure {
            code,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::ZeroPolynomial => exit::PARSE,
            Error::DegenerateParametrization(_) | Error::DegenerateInput { .. } => exit::DEGENERATE,
            _ => exit::INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(exit::INTERNAL, format!("write failed: {e}"))
}

fn parse_param(curve: &CurveArgs) -> std::result::Result<RatParam, Failure> {
    let component = |name: &str, text: &str| {
        parse_rational_function(text)
            .map_err(|e| Failure::new(exit::PARSE, format!("--{name}: {e}")))
    };
    let (u1, v1) = component("x", &curve.x)?;
    let (u2, v2) = component("y", &curve.y)?;
    Ok(RatParam::new(u1, v1, u2, v2)?)
}

fn parse_primes(text: &str) -> std::result::Result<(u64, u64), Failure> {
    let bad = || {
        Failure::new(
            exit::PARSE,
            format!("--primes: expected `p1,p2`, got `{text}`"),
        )
    };
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn parse_method(text: &str) -> std::result::Result<Method, Failure> {
    text.parse::<Method>()
        .map_err(|e| Failure::new(exit::PARSE, e.to_string()))
}

fn cmd_implicitize(args: &ImplicitizeArgs, out: &mut dyn Write) -> CmdResult {
    let param = parse_param(&args.curve)?;
    let (p1, p2) = parse_primes(&args.primes)?;
    let cfg = MethodConfig::new(parse_method(&args.method)?).with_primes(p1, p2)?;
    let result = implicitize(&param, &cfg)?;
    let text = if args.json {
        serde_json::to_string(&PolyDoc::from_result(&result)).expect("serializable")
    } else {
        result.poly.render()
    };
    match &args.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::new(exit::INTERNAL, format!("{}: {e}", path.display())))?,
        None => writeln!(out, "{text}").map_err(io_failure)?,
    }
    Ok(exit::OK)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let param = parse_param(&args.curve)?;
    let primes = parse_primes(&args.primes)?;
    let methods = if args.methods.trim() == "all" {
        Method::ALL.to_vec()
    } else {
        args.methods
            .split(',')
            .map(parse_method)
            .collect::<std::result::Result<Vec<_>, _>>()?
    };
    if args.repeat == 0 {
        return Err(Failure::new(exit::PARSE, "--repeat must be at least 1"));
    }
    let report = run_bench(&param, &methods, args.repeat, primes)?;
    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        )
        .map_err(io_failure)?;
    } else {
        write!(out, "{}", report.table()).map_err(io_failure)?;
    }
    if !report.agreed() {
        let _ = writeln!(err, "methods disagree on the implicit polynomial");
        return Ok(exit::DISAGREE);
    }
    if !report.all_verified() {
        let _ = writeln!(err, "a result does not vanish on the curve");
        return Ok(exit::INTERNAL);
    }
    Ok(exit::OK)
}

fn read_poly(text: &str) -> std::result::Result<implicit_core::BiPoly, Failure> {
    let path = Path::new(text);
    let content = if !text.trim_start().starts_with('{') && path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::new(exit::PARSE, format!("{}: {e}", path.display())))?
    } else {
        text.to_string()
    };
    let content = content.trim();
    if content.starts_with('{') {
        poly_from_json(content).map_err(|e| Failure::new(exit::PARSE, format!("--poly: {e}")))
    } else {
        parse_bipoly(content).map_err(|e| Failure::new(exit::PARSE, format!("--poly: {e}")))
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let param = parse_param(&args.curve)?;
    let f = read_poly(&args.poly)?;
    if substitute_check(&f, &param)? {
        writeln!(out, "ok: {} vanishes on the curve", f.render()).map_err(io_failure)?;
        Ok(exit::OK)
    } else {
        writeln!(out, "fail: {} does not vanish on the curve", f.render()).map_err(io_failure)?;
        Ok(exit::NOT_ON_CURVE)
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                exit::PARSE
            } else {
                let _ = write!(out, "{rendered}");
                exit::OK
            };
        }
    };
    let outcome = match &cli.command {
        Command::Implicitize(a) => cmd_implicitize(a, out),
        Command::Bench(a) => cmd_bench(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

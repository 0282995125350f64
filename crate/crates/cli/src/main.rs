//! `hscalc` — Hilbert–Samuel multiplicities, Poincaré-series numerators,
//! coefficient inequalities, and plane-curve resolution over exact
//! arithmetic.
//!
//! Exit codes: 0 success (verify-paper: every row passed); 1 verification
//! rows failed; 2 parse error (flags, expressions, session files); 3
//! precondition violation (not m-primary, ring mismatches, bad values); 4
//! not stabilized within the cap or timed out; 5 rationality/reducedness
//! failure during curve resolution; 6 internal invariant violation (a bug).

mod commands;
mod parse;
mod report;
mod session;

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::mpsc;
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hscalc_core::{
    Error, FieldKind, Ideal, MonomialOrder, PlaneCurve, Polynomial, Result, RingContext,
};
use serde::Serialize;

use commands::Ctx;

#[derive(Parser)]
#[command(
    name = "hscalc",
    version,
    about = "Hilbert-Samuel functions, multiplicities, and plane-curve invariants \
             of m-primary ideals, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Deglex,
    Lex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Deglex => MonomialOrder::DegLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Degrevlex => "degrevlex",
            OrderArg::Deglex => "deglex",
            OrderArg::Lex => "lex",
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the report as JSON instead of aligned text.
    #[arg(long)]
    json: bool,
    /// Include wall-clock timing in the report (breaks byte-identity).
    #[arg(long)]
    timings: bool,
    /// Abort with exit code 4 after this many seconds.
    #[arg(long, value_name = "SECS")]
    timeout_secs: Option<u64>,
}

#[derive(Args)]
struct RingArgs {
    /// Ring spec: variable list with optional field, e.g. "Q[x,y]",
    /// "fp:7[x,y]", or "[x,y,z]".
    #[arg(long)]
    ring: String,
    /// Coefficient field when the ring spec leaves it implicit: q | fp:<p>.
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
    /// Monomial order for Gröbner runs and term ordering in echoes.
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    /// Stabilization cap on the sample window (exit code 4 beyond it).
    #[arg(long, value_name = "N", default_value_t = 64,
          value_parser = clap::value_parser!(u32).range(1..))]
    max_power: u32,
}

impl RingArgs {
    fn ctx(&self, timings: bool) -> Ctx {
        Ctx {
            order: self.order.order(),
            order_name: self.order.name().to_string(),
            max_power: self.max_power as usize,
            timings,
        }
    }

    /// Base polynomial ring from `--ring`, with `--field` as fallback and
    /// conflicts rejected.
    fn base_ring(&self) -> Result<Arc<RingContext>> {
        let flag_field = self.field.as_deref().map(parse_field).transpose()?;
        let ring = parse::parse_ring_spec(&self.ring, flag_field.unwrap_or(FieldKind::Q))?;
        if let Some(f) = flag_field {
            if ring.field() != f {
                return Err(Error::InvalidInput(
                    "--field conflicts with the field named in --ring".into(),
                ));
            }
        }
        Ok(ring)
    }
}

fn parse_field(text: &str) -> Result<FieldKind> {
    if text.eq_ignore_ascii_case("q") {
        return Ok(FieldKind::Q);
    }
    if let Some(p) = text.strip_prefix("fp:").or_else(|| text.strip_prefix("FP:")) {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse { line: 1, col: 1, msg: format!("invalid prime '{p}'") })?;
        return FieldKind::prime_field(p)
            .map_err(|e| Error::Parse { line: 1, col: 1, msg: e.to_string() });
    }
    Err(Error::Parse { line: 1, col: 1, msg: format!("unknown field '{text}' (use q or fp:<p>)") })
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Quotient modulus, e.g. "y^2 - x^8"; generators are then read in the
    /// quotient ring.
    #[arg(long = "mod", value_name = "POLY")]
    modulus: Option<String>,
    /// Comma-separated generators, e.g. "x^6, x^2 y" or "m^5, x^4".
    #[arg(long)]
    ideal: String,
    #[command(flatten)]
    out: OutputArgs,
}

impl IdealArgs {
    fn build(&self) -> Result<Ideal> {
        let base = self.ring.base_ring()?;
        match &self.modulus {
            Some(text) => {
                let f = parse::parse_polynomial(text, &base)?;
                commands::quotient_ideal(&base, f, &self.ideal)
            }
            None => {
                let gens = parse::parse_generators(&self.ideal, &base)?;
                Ideal::new(&base, &gens)
            }
        }
    }
}

#[derive(Args)]
struct CurveArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Curve equation f(x,y) with f(0,0) = 0, e.g. "y^2 - x^8".
    #[arg(long)]
    curve: String,
    #[command(flatten)]
    out: OutputArgs,
}

impl CurveArgs {
    fn equation(&self) -> Result<Polynomial> {
        let base = self.ring.base_ring()?;
        parse::parse_polynomial(&self.curve, &base)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert-Samuel coefficients e_0..e_d of an m-primary ideal.
    Coeffs(IdealArgs),
    /// Poincaré-series numerator (the a-vector) of an m-primary ideal.
    Hvector(IdealArgs),
    /// Table of values h(n) = length(R/I^(n+1)).
    HilbertValues {
        #[command(flatten)]
        args: IdealArgs,
        /// How many values h(0..count-1) to print.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
    },
    /// Coefficient inequalities, clause by clause, under both readings.
    CheckHhc(IdealArgs),
    /// Coefficient vectors of I^n for n = 1..powers; asserts e_d invariance.
    CheckPowers {
        #[command(flatten)]
        args: IdealArgs,
        /// Largest power n to check.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..))]
        powers: u32,
    },
    /// Blow-up tree of a plane curve germ at the origin.
    CurveResolve(CurveArgs),
    /// δ-invariant of a plane curve by both routes.
    Delta(CurveArgs),
    /// Hironaka test e_1(I) = δ for an ideal on the curve's local ring.
    Hironaka {
        #[command(flatten)]
        curve: CurveArgs,
        /// Comma-separated generators, read in the curve's local ring.
        #[arg(long)]
        ideal: String,
    },
    /// Run the full verification table; exit 1 unless every row passes.
    VerifyPaper {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Interpret a session file (see the repository README for the format).
    Run {
        /// Path to the session file.
        file: PathBuf,
        /// Monomial order for Gröbner runs and term ordering in echoes.
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
        /// Stabilization cap on the sample window (exit code 4 beyond it).
        #[arg(long, value_name = "N", default_value_t = 64,
              value_parser = clap::value_parser!(u32).range(1..))]
        max_power: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// What a command prints and the exit status it requests.
struct Outcome {
    stdout: String,
    code: i32,
}

fn render<T: Serialize>(value: &T, text: String, json: bool) -> Outcome {
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports are serializable");
        s.push('\n');
        s
    } else {
        text
    };
    Outcome { stdout, code: 0 }
}

fn dispatch(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Coeffs(args) => {
            let ideal = args.build()?;
            let out = commands::coeffs(&ideal, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::Hvector(args) => {
            let ideal = args.build()?;
            let out = commands::hvector(&ideal, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::HilbertValues { args, count } => {
            let ideal = args.build()?;
            let out =
                commands::hilbert_values(&ideal, count as usize, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::CheckHhc(args) => {
            let ideal = args.build()?;
            let out = commands::check_hhc(&ideal, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::CheckPowers { args, powers } => {
            let ideal = args.build()?;
            let out =
                commands::check_powers(&ideal, powers as usize, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::CurveResolve(args) => {
            let f = args.equation()?;
            let out = commands::curve_resolve(&f, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::Delta(args) => {
            let f = args.equation()?;
            let out = commands::delta(&f, &args.ring.ctx(args.out.timings))?;
            Ok(render(&out, out.text(), args.out.json))
        }
        Cmd::Hironaka { curve, ideal } => {
            let f = curve.equation()?;
            let plane = PlaneCurve::new(f)?;
            let gens = parse::parse_generators(&ideal, plane.ring())?;
            let ideal = Ideal::new(plane.ring(), &gens)?;
            let out = commands::hironaka(&plane, &ideal, &curve.ring.ctx(curve.out.timings))?;
            Ok(render(&out, out.text(), curve.out.json))
        }
        Cmd::VerifyPaper { out } => {
            let (report, suite) = commands::verify_paper(out.timings)?;
            let mut outcome = render(&report, report.text(&suite), out.json);
            if !suite.all_pass() {
                outcome.code = 1;
            }
            Ok(outcome)
        }
        Cmd::Run { file, order, max_power, out } => {
            let text = std::fs::read_to_string(&file).map_err(|e| {
                Error::InvalidInput(format!("cannot read {}: {e}", file.display()))
            })?;
            let ctx = Ctx {
                order: order.order(),
                order_name: order.name().to_string(),
                max_power: max_power as usize,
                timings: out.timings,
            };
            let (session, texts) =
                session::run_session(&text, &file.display().to_string(), &ctx)?;
            let rendered = texts.join("\n");
            Ok(render(&session, rendered, out.json))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::ArityMismatch { .. }
        | Error::RingMismatch(_)
        | Error::ZeroPolynomial(_)
        | Error::ZeroIdeal
        | Error::InvalidInput(_)
        | Error::Precondition(_)
        | Error::DimensionMismatch { .. } => 3,
        Error::NotStabilized { .. } | Error::ResourceCap(_) => 4,
        Error::Rationality(_) | Error::NonReduced(_) | Error::DepthExceeded(_) => 5,
        Error::InvariantViolation(_) => 6,
    }
}

enum Exec {
    Done(Result<Outcome>),
    TimedOut(u64),
    Panicked(String),
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic payload".to_string()
    }
}

fn execute(cmd: Cmd, timeout: Option<u64>) -> Exec {
    // The hook would print its own report before we map the panic to exit
    // code 6; keep stderr to the single line we emit ourselves.
    panic::set_hook(Box::new(|_| {}));
    match timeout {
        None => match panic::catch_unwind(AssertUnwindSafe(|| dispatch(cmd))) {
            Ok(result) => Exec::Done(result),
            Err(payload) => Exec::Panicked(panic_message(payload)),
        },
        Some(secs) => {
            let (tx, rx) = mpsc::channel();
            thread::spawn(move || {
                let outcome = panic::catch_unwind(AssertUnwindSafe(|| dispatch(cmd)));
                let _ = tx.send(outcome);
            });
            match rx.recv_timeout(Duration::from_secs(secs)) {
                Ok(Ok(result)) => Exec::Done(result),
                Ok(Err(payload)) => Exec::Panicked(panic_message(payload)),
                Err(mpsc::RecvTimeoutError::Timeout) => Exec::TimedOut(secs),
                Err(mpsc::RecvTimeoutError::Disconnected) => {
                    Exec::Panicked("worker thread vanished".to_string())
                }
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let timeout = match &cli.command {
        Cmd::Coeffs(a) | Cmd::Hvector(a) | Cmd::CheckHhc(a) => a.out.timeout_secs,
        Cmd::HilbertValues { args, .. } | Cmd::CheckPowers { args, .. } => args.out.timeout_secs,
        Cmd::CurveResolve(a) | Cmd::Delta(a) => a.out.timeout_secs,
        Cmd::Hironaka { curve, .. } => curve.out.timeout_secs,
        Cmd::VerifyPaper { out } => out.timeout_secs,
        Cmd::Run { out, .. } => out.timeout_secs,
    };
    let code = match execute(cli.command, timeout) {
        Exec::Done(Ok(outcome)) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Exec::Done(Err(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
        Exec::TimedOut(secs) => {
            eprintln!("error: timed out after {secs} s");
            4
        }
        Exec::Panicked(msg) => {
            eprintln!("internal error: {msg}");
            6
        }
    };
    std::process::exit(code);
}

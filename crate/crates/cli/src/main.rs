mod compute;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compute::{compute, parse_b, parse_relax, BArg, Computed, Kind, Source};
use num::complex::Complex64;
use serde::Serialize;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use zerograph::approx::{edge_cover_approx, ising_line_approx};
use zerograph::graphs::GeneratorSpec;
use zerograph::partition::Limits;
use zerograph::poly::json::{parse_poly_json, AnyPoly, RootSetJson};
use zerograph::poly::{find_roots, ExactPoly, RootOptions};
use zerograph::regions::{
    cardioid_boundary, in_cardioid, verify_roots, Claim, Region, BOUNDARY_TOL,
};

#[derive(Parser)]
#[command(
    name = "zerograph",
    version,
    about = "Graph polynomials, their roots and zero-free regions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial and print it as JSON.
    Poly(PolyCmd),
    /// Find the complex roots of a polynomial.
    Roots(RootsCmd),
    /// Check the roots of a polynomial against a region claim.
    Verify(VerifyCmd),
    /// Approximate the log of a partition function by Taylor interpolation.
    Approx(ApproxCmd),
    /// Emit roots and the cardioid boundary as CSV.
    Plotdata(PlotCmd),
    /// Run the acceptance suite.
    Selftest(SelftestCmd),
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct InputArgs {
    /// Generator spec, NAME[:PARAMS[:SEED]], e.g. gnp:8,0.5:7
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<GeneratorSpec>,
    /// Edge list file, or polynomial JSON where no --kind is given ("-" for stdin)
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Edge weight b as p/q, or "sym" for the polynomial in b
    #[arg(long, value_parser = parse_b)]
    b: Option<BArg>,
    /// Degree for --kind key
    #[arg(long)]
    d: Option<usize>,
    /// Comma separated vertices that need not be covered (edge covers only)
    #[arg(long, value_parser = parse_relax)]
    relax: Option<Vec<usize>>,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest n for 2^n subset enumeration
    #[arg(long, default_value_t = Limits::default().subset_exponent)]
    max_subset_exp: u32,
    /// Largest vertex count for inclusion-exclusion
    #[arg(long, default_value_t = Limits::default().ie_vertices)]
    max_ie_vertices: u32,
    /// Largest number of subsets visited by the approximation
    #[arg(long, default_value_t = Limits::default().approx_budget)]
    budget: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            subset_exponent: self.max_subset_exp,
            ie_vertices: self.max_ie_vertices,
            approx_budget: self.budget,
        }
    }
}

#[derive(Args)]
struct OutArgs {
    /// Write to this file instead of stdout
    #[arg(long, short, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    poly: PolyArgs,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct RootsCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    poly: PolyArgs,
    #[command(flatten)]
    limits: LimitArgs,
    /// Residual tolerance
    #[arg(long, default_value_t = RootOptions::default().tol)]
    tol: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    poly: PolyArgs,
    #[command(flatten)]
    limits: LimitArgs,
    /// real-negative, cardioid, disk:R, exterior:R or sector:THETA
    #[arg(long, value_parser = parse_claim)]
    claim: Claim,
    /// Width of the band around the boundary counted as on it
    #[arg(long, default_value_t = BOUNDARY_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ApproxCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    poly: PolyArgs,
    #[command(flatten)]
    limits: LimitArgs,
    /// Evaluation point as RE,IM
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    xi: Complex64,
    /// Truncation order
    #[arg(long)]
    m: usize,
    /// Report every order from 1 to m as a separate run
    #[arg(long)]
    sweep: bool,
    /// Run even where no zero-free disk is guaranteed
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct PlotCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    poly: PolyArgs,
    #[command(flatten)]
    limits: LimitArgs,
    /// Number of cardioid boundary points
    #[arg(long, default_value_t = 360)]
    samples: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SelftestCmd {
    /// Run a single criterion
    #[arg(long)]
    only: Option<usize>,
}

/// Failure modes, each with its own exit code.
#[derive(Debug)]
enum Failure {
    /// Bad arguments or input: exit 2.
    Usage(String),
    /// A cap, budget or convergence failure: exit 3.
    Compute(String),
    /// The command ran but the check did not pass: exit 1.
    Check,
}

impl From<zerograph::Error> for Failure {
    fn from(e: zerograph::Error) -> Self {
        if e.is_computational() {
            Failure::Compute(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn parse_claim(s: &str) -> Result<Claim, String> {
    let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    let claim = match s.split_once(':') {
        None if s == "real-negative" => Claim::RealNegative,
        None if s == "cardioid" => Claim::Inside(Region::Cardioid),
        Some(("disk", r)) => Claim::Inside(Region::Disk { r: num(r)? }),
        Some(("exterior", r)) => Claim::Outside(Region::Disk { r: num(r)? }),
        Some(("sector", t)) => Claim::Outside(Region::Sector { theta: num(t)? }),
        _ => return Err(format!("unknown claim {s:?}")),
    };
    if let Claim::Inside(r) | Claim::Outside(r) = &claim {
        r.validate().map_err(|e| e.to_string())?;
    }
    Ok(claim)
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let f = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    let z = Complex64::new(f(re)?, f(im)?);
    if !z.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    Ok(z)
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn source(input: &InputArgs) -> Result<Source, Failure> {
    match (&input.generator, &input.input) {
        (Some(g), None) => Ok(Source::Generated(g.clone())),
        (None, Some(p)) => Ok(Source::Text(read_input(p)?)),
        (None, None) => Ok(Source::None),
        (Some(_), Some(_)) => Err(Failure::Usage("give --gen or --in, not both".into())),
    }
}

fn emit(out: &OutArgs, text: &str) -> CmdResult {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &OutArgs, value: &T) -> CmdResult {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    emit(out, &text)
}

/// The polynomial for a command: computed from a graph when `--kind` is
/// given, otherwise read as polynomial JSON from `--in`.
fn polynomial(input: &InputArgs, poly: &PolyArgs, limits: &LimitArgs) -> Result<Computed, Failure> {
    match poly.kind {
        Some(kind) => compute(kind, source(input)?, poly, &limits.limits()),
        None => {
            if poly.b.is_some() || poly.d.is_some() || poly.relax.is_some() {
                return Err(Failure::Usage("--b, --d and --relax need --kind".into()));
            }
            match source(input)? {
                Source::Text(t) => Ok(match parse_poly_json(&t)? {
                    AnyPoly::Exact(p) => Computed::Exact(p, "z"),
                    AnyPoly::Symbolic(p) => Computed::Symbolic(p),
                }),
                _ => Err(Failure::Usage(
                    "without --kind, --in must name a polynomial JSON file".into(),
                )),
            }
        }
    }
}

fn exact(c: Computed) -> Result<ExactPoly, Failure> {
    match c {
        Computed::Exact(p, _) => Ok(p),
        Computed::Symbolic(_) => Err(Failure::Usage(
            "this command needs a numeric polynomial; give --b as a number".into(),
        )),
    }
}

fn cmd_poly(c: PolyCmd) -> CmdResult {
    if c.poly.kind.is_none() {
        return Err(Failure::Usage("poly needs --kind".into()));
    }
    let p = polynomial(&c.input, &c.poly, &c.limits)?;
    p.write_json(&c.out)
}

fn cmd_roots(c: RootsCmd) -> CmdResult {
    let p = exact(polynomial(&c.input, &c.poly, &c.limits)?)?;
    let opts = RootOptions {
        tol: c.tol,
        ..RootOptions::default()
    };
    let roots = find_roots(&p, &opts)?;
    emit_json(&c.out, &RootSetJson::from(&roots))
}

fn cmd_verify(c: VerifyCmd) -> CmdResult {
    let p = exact(polynomial(&c.input, &c.poly, &c.limits)?)?;
    let report = verify_roots(&p, &c.claim, c.tol)?;
    match c.format {
        Format::Json => emit_json(&c.out, &report)?,
        Format::Csv => emit(&c.out, &report.to_csv())?,
    }
    if report.inconclusive {
        Err(Failure::Compute(report.error.unwrap_or_default()))
    } else if report.pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_approx(c: ApproxCmd) -> CmdResult {
    let kind = c
        .poly
        .kind
        .ok_or_else(|| Failure::Usage("approx needs --kind".into()))?;
    if c.poly.d.is_some() || c.poly.relax.is_some() {
        return Err(Failure::Usage("approx takes no --d or --relax".into()));
    }
    let limits = c.limits.limits();
    let run = |m: usize, src: &Source| -> Result<_, Failure> {
        match kind {
            Kind::Edgecover => {
                if c.poly.b.is_some() {
                    return Err(Failure::Usage("edge covers take no --b".into()));
                }
                let h = src.hypergraph()?;
                Ok(edge_cover_approx(&h, c.xi, m, c.force, &limits)?)
            }
            Kind::IsingLine => {
                let b = match &c.poly.b {
                    Some(BArg::Value(b)) => b,
                    _ => {
                        return Err(Failure::Usage(
                            "ising-line approx needs a numeric --b".into(),
                        ))
                    }
                };
                let g = src.graph()?;
                Ok(ising_line_approx(&g, b, c.xi, m, c.force, &limits)?)
            }
            _ => Err(Failure::Usage(
                "approx supports --kind edgecover and ising-line".into(),
            )),
        }
    };
    let src = source(&c.input)?;
    if c.sweep {
        let results = (1..=c.m)
            .map(|m| run(m, &src))
            .collect::<Result<Vec<_>, _>>()?;
        emit_json(&c.out, &results)
    } else {
        emit_json(&c.out, &run(c.m, &src)?)
    }
}

fn cmd_plotdata(c: PlotCmd) -> CmdResult {
    let p = exact(polynomial(&c.input, &c.poly, &c.limits)?)?;
    let roots = find_roots(&p, &RootOptions::default())?;
    let mut text = String::from("series,re,im,cardioid_margin\n");
    for z in &roots.roots {
        text.push_str(&format!(
            "root,{},{},{}\n",
            z.re,
            z.im,
            in_cardioid(*z).margin
        ));
    }
    for (_, z) in cardioid_boundary(c.samples) {
        text.push_str(&format!("cardioid,{},{},0\n", z.re, z.im));
    }
    emit(&c.out, &text)
}

fn cmd_selftest(c: SelftestCmd) -> CmdResult {
    let outcomes = match c.only {
        Some(id) if (1..=zerograph::acceptance::count()).contains(&id) => {
            vec![zerograph::acceptance::run(id)]
        }
        Some(id) => return Err(Failure::Usage(format!("no criterion {id}"))),
        None => zerograph::acceptance::run_all(),
    };
    let mut stdout = io::stdout().lock();
    for o in &outcomes {
        writeln!(stdout, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    writeln!(stdout, "{passed}/{} criteria passed", outcomes.len())?;
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn configure_threads() -> CmdResult {
    let Ok(raw) = std::env::var("ZEROGRAPH_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("ZEROGRAPH_THREADS={raw:?} is not a count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Poly(c) => cmd_poly(c),
        Command::Roots(c) => cmd_roots(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Approx(c) => cmd_approx(c),
        Command::Plotdata(c) => cmd_plotdata(c),
        Command::Selftest(c) => cmd_selftest(c),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

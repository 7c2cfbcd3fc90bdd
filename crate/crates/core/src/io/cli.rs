//! `udseq` command-line interface.
//!
//! Exit codes: 0 on success, 1 on domain or numerical errors (including a
//! failed `verify`), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use super::{decode_sequence, emit_report_csv, encode_sequence};
use crate::analysis::{
    carleson_mass, divergence_sum, is_uniformly_discrete, partition_into_discrete,
    separation_constant, theorem_sum, SumReport, WeightFunction,
};
use crate::error::Error;
use crate::geometry::{BaseDomain, Domain, MoebiusMap, Point};
use crate::sequences::{
    construct_disc_horocycle_sequence, construct_halfplane_line_sequence, greedy_pack,
    PackerConfig, PointSequence, Walk,
};

#[derive(Debug, Parser)]
#[command(
    name = "udseq",
    version,
    about = "Uniformly discrete sequences and boundary series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a sequence (line, horocycle or greedy packing) and write it as JSON.
    Construct(ConstructArgs),
    /// Report the separation constant and test it against --delta.
    Verify(VerifyArgs),
    /// Split a sequence into delta-separated classes.
    Partition(PartitionArgs),
    /// Evaluate a boundary series and write a CSV report.
    Sum(SumArgs),
    /// Push a sequence through a Moebius map (Cayley by default).
    Transport(TransportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Disc,
    Halfplane,
    Ball,
    Polydisc,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum MethodArg {
    Line,
    Horocycle,
    Pack,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    domain: DomainArg,
    /// Defaults to `line` for the half-plane and `horocycle` for the disc.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Complex dimension for ball and polydisc.
    #[arg(long, default_value_t = 1)]
    dim: usize,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    count: usize,
    /// Boundary-distance floor for `pack`.
    #[arg(long)]
    c: Option<f64>,
    /// Ray origin for `pack`, coordinates as `re,im` joined by `;`.
    #[arg(long, allow_hyphen_values = true)]
    origin: Option<String>,
    /// Unit ray direction for `pack`, same syntax as --origin.
    #[arg(long, allow_hyphen_values = true)]
    direction: Option<String>,
    #[arg(long, default_value_t = 0.1)]
    initial_step: f64,
    #[arg(long, default_value_t = 1.0)]
    max_step: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    delta: f64,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SumKind {
    /// sum d^(n+1)
    Carleson,
    /// sum d^n h(-1/log d)
    Theorem1,
    /// sum d^(2n) h(-1/log d)
    Theorem2,
    /// sum F(d)
    Divergence,
}

#[derive(Debug, Args)]
struct SumArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: SumKind,
    /// Exponent of the power weight x^s.
    #[arg(long, conflicts_with = "weight_table")]
    s: Option<f64>,
    /// CSV of `x,h` rows defining a piecewise-linear increasing weight.
    #[arg(long)]
    weight_table: Option<PathBuf>,
    /// Dimension n used in the exponents; defaults to the domain dimension.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TransportArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Coefficient a of z -> (az+b)/(cz+d) as `re,im`; all four or none.
    #[arg(long, allow_hyphen_values = true, requires_all = ["b", "c", "d"])]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    d: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses `argv` (program name first) and executes; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Construct(args) => construct(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Partition(args) => partition(args, out),
        Command::Sum(args) => sum(args, out),
        Command::Transport(args) => transport(args, out),
    }
}

fn emit(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(Error::from)?,
        None => out.write_all(bytes).map_err(Error::from)?,
    }
    Ok(())
}

fn load(path: &Path) -> CliResult<PointSequence> {
    let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(decode_sequence(&bytes)?)
}

fn parse_complex(flag: &str, text: &str) -> CliResult<Complex64> {
    let bad = || Failure::Usage(format!("--{flag}: expected `re,im`, got `{text}`"));
    let (re, im) = text.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn parse_point(flag: &str, text: &str) -> CliResult<Point> {
    let coords = text
        .split(';')
        .map(|c| parse_complex(flag, c))
        .collect::<CliResult<Vec<_>>>()?;
    Point::new(coords).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn construct(args: ConstructArgs, out: &mut dyn Write) -> CliResult<i32> {
    let method = match (args.method, args.domain) {
        (Some(m), _) => m,
        (None, DomainArg::Halfplane) => MethodArg::Line,
        (None, DomainArg::Disc) => MethodArg::Horocycle,
        (None, _) => {
            return Err(Failure::Usage(
                "--method is required for ball and polydisc".into(),
            ))
        }
    };
    let seq = match method {
        MethodArg::Line | MethodArg::Horocycle => {
            let expected = if method == MethodArg::Line {
                "halfplane"
            } else {
                "disc"
            };
            let domain_ok = matches!(
                (method, args.domain),
                (MethodArg::Line, DomainArg::Halfplane) | (MethodArg::Horocycle, DomainArg::Disc)
            );
            if !domain_ok {
                return Err(Failure::Usage(format!(
                    "--domain: method {method:?} requires `{expected}`"
                )));
            }
            let epsilon = args
                .epsilon
                .ok_or_else(|| Failure::Usage("--epsilon is required".into()))?;
            if method == MethodArg::Line {
                construct_halfplane_line_sequence(epsilon, args.delta, args.count)?
            } else {
                construct_disc_horocycle_sequence(epsilon, args.delta, args.count)?
            }
        }
        MethodArg::Pack => {
            let domain = match args.domain {
                DomainArg::Disc => Domain::UnitDisc,
                DomainArg::Halfplane => Domain::RightHalfPlane,
                DomainArg::Ball => Domain::unit_ball(args.dim)?,
                DomainArg::Polydisc => Domain::polydisc(args.dim)?,
            };
            let c = args
                .c
                .ok_or_else(|| Failure::Usage("--c is required for pack".into()))?;
            let origin = args
                .origin
                .as_deref()
                .ok_or_else(|| Failure::Usage("--origin is required for pack".into()))?;
            let direction = args
                .direction
                .as_deref()
                .ok_or_else(|| Failure::Usage("--direction is required for pack".into()))?;
            let walk = Walk {
                origin: parse_point("origin", origin)?,
                direction: parse_point("direction", direction)?,
                initial_step: args.initial_step,
                max_step: args.max_step,
            };
            let cfg = PackerConfig::new(c, args.delta, args.count, walk)?;
            greedy_pack(&domain, &cfg)?.sequence
        }
    };
    emit(args.out.as_deref(), &encode_sequence(&seq)?, out)?;
    Ok(0)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let seq = load(&args.input)?;
    let ok = is_uniformly_discrete(&seq, args.delta)?;
    let io = |e: std::io::Error| Failure::Domain(Error::from(e));
    writeln!(out, "points: {}", seq.len()).map_err(io)?;
    if seq.len() >= 2 {
        let rep = separation_constant(&seq)?;
        writeln!(out, "min separation: {}", rep.min_distance).map_err(io)?;
        writeln!(
            out,
            "argmin pair: ({}, {})",
            rep.argmin_pair.0, rep.argmin_pair.1
        )
        .map_err(io)?;
    } else {
        writeln!(out, "min separation: none (fewer than two points)").map_err(io)?;
    }
    writeln!(
        out,
        "uniformly discrete at delta {}: {}",
        args.delta,
        if ok { "yes" } else { "no" }
    )
    .map_err(io)?;
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct PartitionRecord<'a> {
    delta: f64,
    class_count: usize,
    classes: &'a [Vec<usize>],
}

fn partition(args: PartitionArgs, out: &mut dyn Write) -> CliResult<i32> {
    let seq = load(&args.input)?;
    let part = partition_into_discrete(&seq, args.delta)?;
    let record = PartitionRecord {
        delta: part.delta,
        class_count: part.class_count(),
        classes: &part.classes,
    };
    let mut bytes = serde_json::to_vec_pretty(&record)
        .map_err(|e| Failure::Domain(Error::Io(e.to_string())))?;
    bytes.push(b'\n');
    emit(args.out.as_deref(), &bytes, out)?;
    Ok(0)
}

fn read_weight_table(path: &Path) -> CliResult<WeightFunction> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut knots = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line == "x,h" {
            continue;
        }
        let bad = || Error::Schema {
            path: format!("{}: line {}", path.display(), i + 1),
            message: "expected `x,h`".into(),
        };
        let (x, h) = line.split_once(',').ok_or_else(bad)?;
        let x: f64 = x.trim().parse().map_err(|_| bad())?;
        let h: f64 = h.trim().parse().map_err(|_| bad())?;
        knots.push((x, h));
    }
    Ok(WeightFunction::tabulated(knots)?)
}

fn sum(args: SumArgs, out: &mut dyn Write) -> CliResult<i32> {
    let seq = load(&args.input)?;
    let n = args.dim.unwrap_or_else(|| seq.domain().dimension());
    let weight = || -> CliResult<WeightFunction> {
        match (args.s, &args.weight_table) {
            (Some(s), None) => Ok(WeightFunction::power(s)),
            (None, Some(path)) => read_weight_table(path),
            _ => Err(Failure::Usage(format!(
                "--s or --weight-table is required for --kind {}",
                kind_name(args.kind)
            ))),
        }
    };
    let report: SumReport = match args.kind {
        SumKind::Carleson => carleson_mass(&seq, n)?,
        SumKind::Theorem1 => theorem_sum(&seq, n as f64, &weight()?)?,
        SumKind::Theorem2 => theorem_sum(&seq, 2.0 * n as f64, &weight()?)?,
        SumKind::Divergence => divergence_sum(&seq, &weight()?)?,
    };
    let bytes = emit_report_csv(&report);
    emit(args.csv.as_deref(), &bytes, out)?;
    if args.csv.is_some() {
        writeln!(
            out,
            "terms: {}\ntotal: {}\nverdict: {} (heuristic)",
            report.len(),
            report.total(),
            report.verdict
        )
        .map_err(|e| Failure::Domain(Error::from(e)))?;
    }
    Ok(0)
}

fn kind_name(kind: SumKind) -> &'static str {
    match kind {
        SumKind::Carleson => "carleson",
        SumKind::Theorem1 => "theorem1",
        SumKind::Theorem2 => "theorem2",
        SumKind::Divergence => "divergence",
    }
}

fn transport(args: TransportArgs, out: &mut dyn Write) -> CliResult<i32> {
    let seq = load(&args.input)?;
    let map = match (&args.a, &args.b, &args.c, &args.d) {
        (Some(a), Some(b), Some(c), Some(d)) => MoebiusMap::new(
            parse_complex("a", a)?,
            parse_complex("b", b)?,
            parse_complex("c", c)?,
            parse_complex("d", d)?,
        )
        .map_err(|e| Failure::Usage(format!("--a/--b/--c/--d: {e}")))?,
        _ => MoebiusMap::cayley(),
    };
    let domain = match seq.domain() {
        Domain::UnitDisc => Domain::transported(BaseDomain::UnitDisc, map),
        Domain::RightHalfPlane => Domain::transported(BaseDomain::RightHalfPlane, map),
        Domain::Transported { base, map: inner } => Domain::transported(*base, map.compose(inner)?),
        other => {
            return Err(Failure::Domain(Error::DimensionMismatch {
                expected: 1,
                found: other.dimension(),
            }))
        }
    };
    let moved = seq.with_domain(domain)?;
    emit(args.out.as_deref(), &encode_sequence(&moved)?, out)?;
    Ok(0)
}

//! The `supercat` command line: compute q-objects, verify and sweep
//! identities, enumerate noncrossing partitions and scan conjectures.
//!
//! Exit codes: 0 all checks hold, 1 some identity refuted, 2 usage error,
//! 3 conjecture counterexample.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use supercat::identities::{parse_range, sweep, verify, IdentityId, Status, VerificationReport};
use supercat::noncrossing::{
    enumerate_ncb, enumerate_ncb_pair, enumerate_ncd, enumerate_two_paths, phi, phi_inverse, rank,
    SignedBlockPartition, Step, TwoPath,
};
use supercat::positivity::{
    first_log_concavity_failure, first_log_convexity_failure, first_unimodality_failure, scan,
    ConjectureName,
};
use supercat::qkernel::{
    half_binomial, narayana_poly_t, pochhammer, q_binomial, q_catalan, q_narayana, super_catalan,
    PochSpec, Sign,
};
use supercat::series::{
    series_f0_closed, series_fm, verify_f0_closed_form, verify_f0_f1_convolution,
    verify_f0_functional, verify_f1_formula,
};
use supercat::{LaurentPoly, RationalForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "supercat",
    version,
    about = "Exact q-super Catalan computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Leave out wall-clock timings so output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a single object.
    Compute {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        p: Params,
        /// Partition text such as `(1,-2),(-1,2)`, for `phi`.
        #[arg(long, allow_hyphen_values = true)]
        partition: Option<String>,
        /// Step word over U, D, W, S, for `phi-inverse`.
        #[arg(long)]
        path: Option<String>,
        /// Use `(-q^a; q^b)_n` for `pochhammer`.
        #[arg(long)]
        negative: bool,
    },
    /// Verify one identity at one parameter tuple.
    Verify {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        p: Params,
    },
    /// Verify an identity over a box of parameters (`a..b` inclusive).
    Sweep {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        p: Params,
    },
    /// Enumerate noncrossing partitions or 2-paths.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Zero block `{i, -i}`, for `ncb-pair`.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Scan a conjecture, or test it on a user-supplied sequence.
    Conjecture {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// JSON array of polynomials (or a path to one) to test instead of
        /// the built-in family.
        #[arg(long)]
        sequence: Option<String>,
    },
    /// Generating-function checks and coefficients.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        m: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    SuperCatalan,
    QBinomial,
    QCatalan,
    QNarayana,
    Pochhammer,
    HalfBinomial,
    NarayanaPoly,
    Phi,
    PhiInverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Ncb,
    Ncd,
    NcbPair,
    TwoPaths,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesName {
    F0Functional,
    F0ClosedForm,
    F1Formula,
    F0F1Convolution,
    Fm,
    F0Closed,
}

/// Parameter flags, named as in the identity registry. Values are integers,
/// or `a..b` ranges for `sweep`.
#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long = "N", allow_hyphen_values = true)]
    big_n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    order: Option<String>,
}

impl Params {
    fn get(&self, name: &str) -> Option<&str> {
        match name {
            "n" => self.n.as_deref(),
            "m" => self.m.as_deref(),
            "k" => self.k.as_deref(),
            "a" => self.a.as_deref(),
            "b" => self.b.as_deref(),
            "c" => self.c.as_deref(),
            "N" => self.big_n.as_deref(),
            "order" => self.order.as_deref(),
            _ => None,
        }
    }

    fn int(&self, name: &str) -> Result<i64, Failure> {
        let s = self
            .get(name)
            .ok_or_else(|| Failure::usage(format!("missing --{name}")))?;
        s.trim()
            .parse()
            .map_err(|_| Failure::usage(format!("--{name} expects an integer, got `{s}`")))
    }

    fn nat(&self, name: &str) -> Result<u32, Failure> {
        let v = self.int(name)?;
        u32::try_from(v).map_err(|_| Failure::usage(format!("--{name} must be >= 0, got {v}")))
    }

    fn supplied(&self) -> Vec<&'static str> {
        ["n", "m", "k", "a", "b", "c", "N", "order"]
            .into_iter()
            .filter(|p| self.get(p).is_some())
            .collect()
    }

    /// Values for exactly the parameters `id` takes.
    fn for_identity<T>(
        &self,
        id: IdentityId,
        parse: impl Fn(&str, &str) -> Result<T, Failure>,
    ) -> Result<Vec<T>, Failure> {
        let wanted = id.params();
        if let Some(extra) = self.supplied().into_iter().find(|p| !wanted.contains(p)) {
            return Err(Failure::usage(format!("{id} does not take --{extra}")));
        }
        wanted
            .iter()
            .map(|&p| {
                let s = self
                    .get(p)
                    .ok_or_else(|| Failure::usage(format!("{id} needs --{p}")))?;
                parse(p, s)
            })
            .collect()
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn other(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

/// One line per registered identity and its parameters.
pub fn registry_listing() -> String {
    let mut s = String::from("identities:\n");
    for id in IdentityId::ALL {
        s.push_str(&format!(
            "  {:<24} ({})  {}\n",
            id.name(),
            id.params().join(", "),
            id.about()
        ));
    }
    s
}

fn parse_id(s: &str) -> Result<IdentityId, Failure> {
    s.parse()
        .map_err(|_| Failure::usage(format!("unknown identity `{s}`")))
}

/// Runs the command line `args` (including the program name), writing the
/// report stream to `out` (or `--output`) and diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}\n{}", registry_listing());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                let r = execute(&cli, &mut w, err);
                w.flush()
                    .map(|_| r)
                    .unwrap_or_else(|e| Err(Failure::other(e)))
            }
            Err(e) => Err(Failure::other(format!(
                "cannot write {}: {e}",
                path.display()
            ))),
        },
        None => execute(&cli, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if f.code == EXIT_USAGE {
                let _ = write!(err, "{}", registry_listing());
            }
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let timing = !cli.no_timing;
    let io = |e: io::Error| Failure {
        code: EXIT_REFUTED,
        message: e.to_string(),
    };
    match &cli.command {
        Command::Compute {
            target,
            p,
            partition,
            path,
            negative,
        } => {
            let value = compute(*target, p, partition.as_deref(), path.as_deref(), *negative)?;
            value.emit(cli.format, out).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { id, p } => {
            let id = parse_id(id)?;
            let params = p.for_identity(id, |name, s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Failure::usage(format!("--{name} expects an integer, got `{s}`")))
            })?;
            let report = verify(id, &params);
            emit_reports(id, std::slice::from_ref(&report), cli.format, timing, out).map_err(io)?;
            Ok(report_code(std::slice::from_ref(&report)))
        }
        Command::Sweep { id, p } => {
            let id = parse_id(id)?;
            let ranges = p.for_identity(id, |name, s| {
                parse_range(s).map_err(|e| Failure::usage(format!("--{name}: {e}")))
            })?;
            let result = sweep(id, &ranges).map_err(Failure::other)?;
            emit_reports(id, &result.reports, cli.format, timing, out).map_err(io)?;
            let count = |s: Status| result.reports.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                err,
                "{id}: {} Verified, {} Refuted, {} excluded (vanishing denominator), {} out-of-domain tuples skipped",
                count(Status::Verified),
                count(Status::Refuted),
                count(Status::ParameterInvalid),
                result.skipped
            );
            Ok(if count(Status::Refuted) > 0 {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
        Command::Enumerate {
            kind,
            n,
            i,
            count_only,
        } => {
            enumerate(*kind, *n, *i, *count_only, cli.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Conjecture {
            name,
            m_max,
            n_max,
            sequence,
        } => {
            let name: ConjectureName = name.parse().map_err(Failure::other)?;
            let (holds, report) = match sequence {
                Some(s) => check_sequence(name, s)?,
                None => {
                    let r = scan(name, *m_max, *n_max).map_err(Failure::other)?;
                    (r.holds, serde_json::to_value(&r).expect("serializable"))
                }
            };
            emit_value(&report, cli.format, out).map_err(io)?;
            Ok(if holds { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Series { name, order, m } => {
            let report = match name {
                SeriesName::F0Functional => verify_f0_functional(*order),
                SeriesName::F0ClosedForm => verify_f0_closed_form(*order),
                SeriesName::F1Formula => verify_f1_formula(*order),
                SeriesName::F0F1Convolution => verify_f0_f1_convolution(*order),
                SeriesName::Fm | SeriesName::F0Closed => {
                    let s = match name {
                        SeriesName::Fm => series_fm(*m, *order),
                        _ => series_f0_closed(*order),
                    };
                    let v = serde_json::to_value(&s).expect("serializable");
                    emit_value(&v, cli.format, out).map_err(io)?;
                    return Ok(EXIT_OK);
                }
            };
            emit_reports(
                report.id,
                std::slice::from_ref(&report),
                cli.format,
                timing,
                out,
            )
            .map_err(io)?;
            Ok(report_code(std::slice::from_ref(&report)))
        }
    }
}

fn report_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Refuted) {
        EXIT_REFUTED
    } else if reports.iter().any(|r| r.status == Status::ParameterInvalid) {
        EXIT_USAGE
    } else {
        EXIT_OK
    }
}

fn emit_reports(
    id: IdentityId,
    reports: &[VerificationReport],
    format: Format,
    timing: bool,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json(timing))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", VerificationReport::csv_header(id, timing))?;
            for r in reports {
                writeln!(out, "{}", r.to_csv_row(timing))?;
            }
        }
        Format::Pretty => {
            for r in reports {
                let params: Vec<String> = id
                    .params()
                    .iter()
                    .zip(&r.params)
                    .map(|(p, v)| format!("{p}={v}"))
                    .collect();
                write!(out, "{id} {} {}", params.join(" "), r.status)?;
                if timing {
                    write!(out, " ({:.3} ms)", r.elapsed.as_secs_f64() * 1e3)?;
                }
                if let Some(d) = &r.detail {
                    write!(out, ": {d}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn emit_value(v: &Value, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Pretty => writeln!(out, "{}", serde_json::to_string_pretty(v).expect("valid")),
        _ => writeln!(out, "{v}"),
    }
}

enum Computed {
    Poly(LaurentPoly),
    Rational(RationalForm),
    Path(TwoPath),
    Partition(SignedBlockPartition),
}

impl Computed {
    fn emit(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match (self, format) {
            (Computed::Poly(p), Format::Json) => {
                writeln!(out, "{}", serde_json::to_string(p).expect("serializable"))
            }
            (Computed::Poly(p), Format::Csv) => {
                writeln!(out, "exp,coeff")?;
                let lo = p.min_exp().unwrap_or(0);
                for (i, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{},{c}", lo + i as i64)?;
                }
                Ok(())
            }
            (Computed::Poly(p), Format::Pretty) => writeln!(out, "{p}"),
            (Computed::Rational(r), Format::Pretty) => {
                writeln!(out, "({}) / ({})", r.num(), r.den())
            }
            (Computed::Rational(r), _) => {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))
            }
            (Computed::Path(w), Format::Json) => {
                writeln!(out, "{}", serde_json::to_string(w).expect("serializable"))
            }
            (Computed::Path(w), _) => writeln!(out, "{w}"),
            (Computed::Partition(p), Format::Json) => {
                writeln!(out, "{}", serde_json::to_string(p).expect("serializable"))
            }
            (Computed::Partition(p), _) => writeln!(out, "{p}"),
        }
    }
}

fn compute(
    target: Target,
    p: &Params,
    partition: Option<&str>,
    path: Option<&str>,
    negative: bool,
) -> Result<Computed, Failure> {
    Ok(match target {
        Target::SuperCatalan => Computed::Poly(super_catalan(p.nat("n")?, p.nat("m")?)),
        Target::QBinomial => Computed::Poly(q_binomial(p.int("n")?, p.int("k")?)),
        Target::QCatalan => Computed::Poly(q_catalan(p.nat("n")?)),
        Target::QNarayana => Computed::Poly(
            q_narayana(p.nat("m")?, p.nat("n")?, p.nat("k")?).map_err(Failure::other)?,
        ),
        Target::Pochhammer => {
            let sign = if negative { Sign::Minus } else { Sign::Plus };
            let base = if p.get("b").is_some() { p.nat("b")? } else { 1 };
            let spec = PochSpec::new(sign, p.int("a")?, base).map_err(Failure::other)?;
            Computed::Poly(pochhammer(spec, p.nat("n")?))
        }
        Target::HalfBinomial => Computed::Rational(half_binomial(p.nat("m")?, p.nat("k")?)),
        Target::NarayanaPoly => {
            Computed::Poly(narayana_poly_t(p.nat("m")?, p.nat("n")?).map_err(Failure::other)?)
        }
        Target::Phi => {
            let s = partition.ok_or_else(|| Failure::usage("phi needs --partition"))?;
            let part: SignedBlockPartition = s.parse().map_err(Failure::other)?;
            Computed::Path(phi(&part))
        }
        Target::PhiInverse => {
            let s = path.ok_or_else(|| Failure::usage("phi-inverse needs --path"))?;
            let w: TwoPath = s.parse().map_err(Failure::other)?;
            Computed::Partition(phi_inverse(&w).map_err(Failure::other)?)
        }
    })
}

fn enumerate(
    kind: Kind,
    n: usize,
    i: Option<usize>,
    count_only: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let io = |e: io::Error| Failure::other(e);
    if let Kind::TwoPaths = kind {
        let paths = enumerate_two_paths(n).map_err(Failure::other)?;
        if count_only {
            return writeln!(out, "{}", paths.len()).map_err(io);
        }
        if format == Format::Csv {
            writeln!(out, "path,up,wavy").map_err(io)?;
        }
        for w in &paths {
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(w).expect("serializable"))
                }
                Format::Csv => writeln!(out, "{w},{},{}", w.count(Step::U), w.count(Step::W)),
                Format::Pretty => writeln!(out, "{w}"),
            }
            .map_err(io)?;
        }
        return Ok(());
    }
    let parts = match kind {
        Kind::Ncb => enumerate_ncb(n),
        Kind::Ncd => enumerate_ncd(n),
        Kind::NcbPair => {
            let i = i.ok_or_else(|| Failure::usage("ncb-pair needs --i"))?;
            enumerate_ncb_pair(n, i)
        }
        Kind::TwoPaths => unreachable!("handled above"),
    }
    .map_err(Failure::other)?;
    if count_only {
        return writeln!(out, "{}", parts.len()).map_err(io);
    }
    if format == Format::Csv {
        writeln!(out, "partition,rank,path").map_err(io)?;
    }
    for p in &parts {
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({"partition": p, "rank": rank(p), "path": phi(p)})
            ),
            Format::Csv => writeln!(out, "\"{p}\",{},{}", rank(p), phi(p)),
            Format::Pretty => writeln!(out, "{p}  rank {}  {}", rank(p), phi(p)),
        }
        .map_err(io)?;
    }
    Ok(())
}

/// Tests `name` on an explicit sequence given as JSON text or a file path.
fn check_sequence(name: ConjectureName, arg: &str) -> Result<(bool, Value), Failure> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::usage(format!("cannot read sequence {arg}: {e}")))?
    };
    let seq: Vec<LaurentPoly> = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("sequence is not a JSON array of polynomials: {e}")))?;
    let bad = match name {
        ConjectureName::UnimodalQNarayana => first_unimodality_failure(&seq),
        ConjectureName::QLogConcave => first_log_concavity_failure(&seq),
        ConjectureName::TLogConvex => first_log_convexity_failure(&seq),
    };
    let report = json!({
        "name": name.name(),
        "length": seq.len(),
        "holds": bad.is_none(),
        "counterexample": bad.map(|k| vec![k]),
    });
    Ok((bad.is_none(), report))
}

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pil_core::bijection::{backward_map, base_of, decompose, forward_map, BaseVariant, Direction, MoveTrace, PairedPartition};
use pil_core::fuzz::fuzz;
use pil_core::generators::{expand_named, Expansion, SERIES_NAMES};
use pil_core::partitions::{count_table, ConstraintFamily, PaddedPartition};
use pil_core::verify::{verify, Coefficient, Identity, VerificationReport};
use pil_core::{Error, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "pil", version, about = "Partition identity lab: enumeration, q-series and bijections")]
struct Cli {
    /// Truncation order / largest weight considered.
    #[arg(long, global = true, env = "PIL_DEFAULT_N", default_value_t = 40)]
    max_n: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare every available side of an identity.
    Verify {
        /// capparelli1, capparelli2, gg1, gg2, gordon(k,a), rr, euler, a
        /// bijective family name, schur or shifts.
        #[arg(long)]
        identity: String,
        /// Record wall time per side.
        #[arg(long)]
        timings: bool,
    },
    /// Print c(n, m), the number of partitions of n into m parts in a family.
    Counts {
        #[arg(long)]
        family: String,
    },
    /// Print the coefficients of a named series or product.
    Expand {
        #[arg(long, help = series_help())]
        series: String,
    },
    /// Run the constructive bijection in either direction.
    Bijection {
        #[command(subcommand)]
        direction: BijectionCommand,
    },
    /// Exhaustive roundtrip checks plus seeded random triples.
    Fuzz {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random triples drawn after the exhaustive pass.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn series_help() -> String {
    format!("Series name, one of:\n  {}", SERIES_NAMES.join("\n  "))
}

#[derive(Args)]
struct BijectionOpts {
    #[arg(long)]
    family: String,
    /// Print every step with its case label.
    #[arg(long)]
    trace: bool,
}

#[derive(Subcommand)]
enum BijectionCommand {
    /// (β, μ, η) to a partition.
    Forward {
        #[command(flatten)]
        opts: BijectionOpts,
        /// Number of singletons; defaults to the length of --mu.
        #[arg(long)]
        n1: Option<usize>,
        /// Number of pairs; defaults to the length of --eta.
        #[arg(long)]
        n2: Option<usize>,
        /// Singleton increments, e.g. 1,2 or 1+2.
        #[arg(long)]
        mu: Option<String>,
        /// Pair increments, multiples of the move step.
        #[arg(long)]
        eta: Option<String>,
        /// Start from the base partition with the fixed smallest part.
        #[arg(long)]
        anchored: bool,
    },
    /// A partition to (β, μ, η).
    Backward {
        #[command(flatten)]
        opts: BijectionOpts,
        /// Parts as `3,6,9` or in paired notation `[3,6],9`.
        input: String,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout().lock();
    let result = match cli.command {
        Command::Verify { identity, timings } => cmd_verify(out, &identity, cli.max_n, timings, cli.format),
        Command::Counts { family } => cmd_counts(out, &family, cli.max_n, cli.format),
        Command::Expand { series } => cmd_expand(out, &series, cli.max_n, cli.format),
        Command::Bijection { direction } => cmd_bijection(out, direction, cli.format),
        Command::Fuzz { family, seed, samples } => cmd_fuzz(out, &family, cli.max_n, seed, samples, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_family(s: &str) -> Result<ConstraintFamily, Failure> {
    Ok(s.parse()?)
}

fn json_line<W: Write, T: Serialize>(out: &mut W, value: &T) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ComparisonRow<'a> {
    identity: String,
    max_n: usize,
    left: &'a str,
    right: &'a str,
    compared: usize,
    status: String,
    mismatch_n: Option<usize>,
    mismatch_m: Option<usize>,
    left_value: Option<String>,
    right_value: Option<String>,
}

fn write_report<W: Write>(out: W, report: &VerificationReport, format: Format) -> Outcome {
    match format {
        Format::Json => {
            let mut out = out;
            json_line(&mut out, report)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for c in &report.comparisons {
                let m = c.first_mismatch.as_ref();
                w.serialize(ComparisonRow {
                    identity: report.identity.to_string(),
                    max_n: report.max_n,
                    left: &c.left,
                    right: &c.right,
                    compared: c.compared,
                    status: c.status.to_string(),
                    mismatch_n: m.map(|m| m.n),
                    mismatch_m: m.and_then(|m| m.m),
                    left_value: m.map(|m| m.left.to_string()),
                    right_value: m.map(|m| m.right.to_string()),
                })?;
            }
            w.flush()?;
            if let Some(ts) = &report.timings {
                for t in ts {
                    eprintln!("# {} {:.3} ms", t.side, t.millis);
                }
            }
        }
    }
    Ok(())
}

fn cmd_verify<W: Write>(out: W, identity: &str, max_n: usize, timings: bool, format: Format) -> Outcome {
    let id: Identity = identity.parse().map_err(|e: Error| {
        let names: Vec<String> = Identity::catalogue().iter().map(ToString::to_string).collect();
        Failure::Usage(format!("{e}; known identities: {}, rr", names.join(", ")))
    })?;
    let report = verify(id, max_n, timings)?;
    write_report(out, &report, format)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    m: usize,
    count: u64,
}

fn cmd_counts<W: Write>(mut out: W, family: &str, max_n: usize, format: Format) -> Outcome {
    let table = count_table(parse_family(family)?, max_n);
    let rows = table.entries().map(|(n, m, count)| CountRow { n, m, count });
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in rows {
                json_line(&mut out, &r)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CoefficientRow {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    coefficient: Coefficient,
}

fn cmd_expand<W: Write>(mut out: W, name: &str, max_n: usize, format: Format) -> Outcome {
    let expansion = expand_named(name, max_n).map_err(|e| Failure::Usage(format!("{e}\n{}", series_help())))?;
    let rows: Vec<CoefficientRow> = match &expansion {
        Expansion::Univariate(s) => (0..=s.order())
            .map(|n| CoefficientRow {
                n,
                m: None,
                coefficient: Coefficient(s[n].clone()),
            })
            .collect(),
        Expansion::Bivariate(b) => {
            let mut rows = Vec::new();
            for n in 0..=b.order() {
                for m in 0..=b.x_bound() {
                    let c = b.coefficient(n, m);
                    if c != 0.into() {
                        rows.push(CoefficientRow {
                            n,
                            m: Some(m),
                            coefficient: Coefficient(c),
                        });
                    }
                }
            }
            rows
        }
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            match expansion {
                Expansion::Univariate(_) => w.write_record(["n", "coefficient"])?,
                Expansion::Bivariate(_) => w.write_record(["n", "m", "coefficient"])?,
            }
            for r in rows {
                let mut rec = vec![r.n.to_string()];
                rec.extend(r.m.map(|m| m.to_string()));
                rec.push(r.coefficient.to_string());
                w.write_record(rec)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in rows {
                json_line(&mut out, &r)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TraceLine {
    label: String,
    snapshot: String,
    weight: u64,
}

fn trace_lines(trace: &MoveTrace) -> Vec<TraceLine> {
    trace
        .steps
        .iter()
        .map(|s| TraceLine {
            label: s.label.to_string(),
            snapshot: s.snapshot.render(s.focus),
            weight: s.snapshot.weight(),
        })
        .collect()
}

#[derive(Serialize)]
struct ForwardOutput {
    family: String,
    partition: String,
    weight: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceLine>>,
}

#[derive(Serialize)]
struct BackwardOutput {
    family: String,
    beta: String,
    beta_weight: u64,
    anchored: bool,
    mu: String,
    eta: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceLine>>,
}

fn padded(text: Option<&str>, len: Option<usize>, what: &str) -> Result<PaddedPartition, Failure> {
    let p = match (text, len) {
        (Some(t), _) => t.parse::<PaddedPartition>()?,
        (None, Some(n)) => PaddedPartition::zeros(n),
        (None, None) => PaddedPartition::zeros(0),
    };
    match len {
        Some(n) if n != p.len() => Err(Failure::Usage(format!("--{what} has {} entries, expected {n}", p.len()))),
        _ => Ok(p),
    }
}

/// Paired input is accepted in either direction's canonical grouping.
fn parse_input(input: &str, family: ConstraintFamily) -> Result<pil_core::Partition, Failure> {
    match PairedPartition::parse(input, family, Direction::Backward) {
        Ok(pp) => Ok(pp.to_partition()),
        Err(e) => PairedPartition::parse(input, family, Direction::Forward)
            .map(|pp| pp.to_partition())
            .map_err(|_| e.into()),
    }
}

fn cmd_bijection<W: Write>(mut out: W, cmd: BijectionCommand, format: Format) -> Outcome {
    match cmd {
        BijectionCommand::Forward {
            opts,
            n1,
            n2,
            mu,
            eta,
            anchored,
        } => {
            let family = parse_family(&opts.family)?;
            let mu = padded(mu.as_deref(), n1, "mu")?;
            let eta = padded(eta.as_deref(), n2, "eta")?;
            let t = Triple {
                n1: mu.len(),
                n2: eta.len(),
                mu,
                eta,
            };
            let variant = if anchored { BaseVariant::Anchored } else { BaseVariant::Plain };
            let (p, trace) = forward_map(family, &t, variant)?;
            let shown = decompose(family, &p, Direction::Forward)?;
            match format {
                Format::Csv => {
                    if opts.trace {
                        write!(out, "{}", trace.render())?;
                    }
                    writeln!(out, "{shown}")?;
                }
                Format::Json => json_line(
                    &mut out,
                    &ForwardOutput {
                        family: family.to_string(),
                        partition: shown.to_string(),
                        weight: p.weight(),
                        trace: opts.trace.then(|| trace_lines(&trace)),
                    },
                )?,
            }
        }
        BijectionCommand::Backward { opts, input } => {
            let family = parse_family(&opts.family)?;
            let p = parse_input(&input, family)?;
            let (t, variant, trace) = backward_map(family, &p)?;
            let beta = base_of(family, &t, variant)?;
            match format {
                Format::Csv => {
                    if opts.trace {
                        write!(out, "{}", trace.render())?;
                    }
                    writeln!(out, "beta {beta} (weight {})", beta.weight())?;
                    writeln!(out, "mu {}", t.mu)?;
                    writeln!(out, "eta {}", t.eta)?;
                }
                Format::Json => json_line(
                    &mut out,
                    &BackwardOutput {
                        family: family.to_string(),
                        beta: beta.to_string(),
                        beta_weight: beta.weight(),
                        anchored: variant == BaseVariant::Anchored,
                        mu: t.mu.to_string(),
                        eta: t.eta.to_string(),
                        trace: opts.trace.then(|| trace_lines(&trace)),
                    },
                )?,
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FuzzRow {
    family: String,
    max_n: usize,
    seed: u64,
    partitions: usize,
    triples: usize,
    moves: usize,
    samples: usize,
    failures: usize,
}

fn cmd_fuzz<W: Write>(mut out: W, family: &str, max_n: usize, seed: u64, samples: usize, format: Format) -> Outcome {
    let report = fuzz(parse_family(family)?, max_n, seed, samples)?;
    match format {
        Format::Json => json_line(&mut out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(FuzzRow {
                family: report.family.to_string(),
                max_n,
                seed,
                partitions: report.partitions,
                triples: report.triples,
                moves: report.moves,
                samples,
                failures: report.failures.len(),
            })?;
            w.flush()?;
            for f in &report.failures {
                eprintln!("{:?}: {}: {}", f.kind, f.input, f.detail);
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

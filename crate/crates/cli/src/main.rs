//! Command-line front end: every subcommand is a thin adapter over the
//! library, emitting the same JSON the API produces.
//!
//! Exit codes: 0 = success / property holds; 1 = property fails or a
//! counterexample was found (the witness is in the payload); 2 = usage or
//! input error. stdout carries only machine-readable JSON; diagnostics go
//! to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use semiring_core::census::{census_stats, enumerate_semirings, CENSUS_DEFAULT_MAX, CENSUS_HARD_CAP};
use semiring_core::claims::{run_suite, suite_has_blocking_failure, ClaimId, SuiteConfig};
use semiring_core::classify::{classify, structure_flags, Classification, StructureFlags};
use semiring_core::construct::{construct_named, FamilySpec};
use semiring_core::decide::{decide, decide_all, Property, PropertyVerdict};
use semiring_core::error::Error;
use semiring_core::ideals::{all_ideals, ideal_semiring, order_props, IDEAL_ORDER_CAP};
use semiring_core::localize::{localize_at_prime, total_quotient};
use semiring_core::par::Parallelism;
use semiring_core::semiring::FiniteSemiring;

#[derive(Parser)]
#[command(
    name = "semiring",
    version,
    about = "Finite commutative semirings: construction, classification, ideals, localization, enumeration, and claim checking",
    propagate_version = true
)]
struct Cli {
    /// Worker threads for enumeration and claim checking (1 = sequential;
    /// default: available parallelism). Output is identical for any value.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction from `family[:p1,p2[,interp]]` syntax,
    /// e.g. `hu`, `chain:3`, `zn:6`, `xn:2`, `bni:4,1,canonical`.
    Construct {
        spec: String,
        /// Write the JSON payload here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Per-element classification, structure flags, and all property verdicts.
    Classify { file: PathBuf },
    /// Decide one property; exit 0 when it holds, 1 when it fails.
    Check { property: String, file: PathBuf },
    /// The complete ideal lattice, or one selected slice of it.
    Ideals {
        file: PathBuf,
        #[command(flatten)]
        slice: IdealSlice,
    },
    /// The semiring whose elements are the ideals of the input.
    Idsemiring {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Localize at the cancellative elements (`--at mc`) or at a prime ideal
    /// (`--at prime:K`, K an index into the `ideals` listing).
    Localize {
        file: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate every semiring of a given order (elements 0 = zero, 1 = one).
    Census {
        #[arg(long)]
        order: usize,
        /// Deduplicate up to isomorphism (canonical-key order).
        #[arg(long)]
        up_to_iso: bool,
        /// Keep only structures satisfying this property.
        #[arg(long)]
        filter: Option<String>,
        /// Write full statistics (counts, per-property, representatives) here.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Write each representative as its own JSON file into this directory.
        #[arg(long)]
        reps: Option<PathBuf>,
        /// Checkpoint file for resumable statistics runs.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Allow orders above the quick-run cap (currently enables order 5).
        #[arg(long)]
        long_run: bool,
    },
    /// Run the claim-checking suite; exit 1 if any claim that must verify
    /// produced a counterexample.
    Verify {
        /// Claim selection: `full` runs the whole registry.
        #[arg(long, default_value = "full")]
        suite: String,
        /// Comma-separated claim ids (e.g. C1,C5,C12); default: all.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Census classes up to this order feed the instance sets.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Also write the report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-emit a structure in canonical encoding (validates it on the way).
    Encode { file: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct IdealSlice {
    /// Only the prime ideals.
    #[arg(long)]
    primes: bool,
    /// Only the maximal ideals.
    #[arg(long)]
    maximal: bool,
    /// Only the nilpotent elements.
    #[arg(long)]
    nil: bool,
}

fn size_cap() -> Result<usize, String> {
    match std::env::var("SEMIRING_SIZE_CAP") {
        Ok(text) => text
            .parse::<usize>()
            .map_err(|_| format!("SEMIRING_SIZE_CAP must be a positive integer, got `{text}`")),
        Err(_) => Ok(semiring_core::semiring::DEFAULT_SIZE_CAP),
    }
}

fn parallelism(jobs: Option<usize>) -> Result<Parallelism, String> {
    match jobs {
        None => Ok(Parallelism::Auto),
        Some(0) => Err("--jobs must be at least 1".into()),
        Some(1) => Ok(Parallelism::Sequential),
        Some(k) => Ok(Parallelism::Threads(k)),
    }
}

fn load(file: &Path, cap: usize) -> Result<FiniteSemiring, String> {
    let text = fs::read_to_string(file)
        .map_err(|e| format!("cannot read `{}`: {e}", file.display()))?;
    let s = FiniteSemiring::decode(&text)
        .map_err(|e| format!("`{}` is not a valid structure: {e}", file.display()))?;
    if s.order > cap {
        return Err(format!(
            "`{}` has order {} above the size cap {cap} (override with SEMIRING_SIZE_CAP)",
            file.display(),
            s.order
        ));
    }
    Ok(s)
}

/// Writes a line to stdout, exiting quietly when the reader hung up early
/// (e.g. the output is piped into `head`).
fn print_stdout(line: &str) -> Result<(), String> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(format!("cannot write to stdout: {e}")),
    }
}

fn emit<T: Serialize>(payload: &T, output: Option<&Path>) -> Result<(), String> {
    let json = serde_json::to_string_pretty(payload).map_err(|e| e.to_string())?;
    match output {
        Some(path) => fs::write(path, json.as_bytes())
            .map_err(|e| format!("cannot write `{}`: {e}", path.display())),
        None => print_stdout(&json),
    }
}

fn parse_property(text: &str) -> Result<Property, String> {
    text.parse::<Property>().map_err(|_| {
        let known: Vec<&str> = Property::ALL.iter().map(|p| p.token()).collect();
        format!("unknown property `{text}`; known: {}", known.join(", "))
    })
}

#[derive(Serialize)]
struct ClassifyPayload {
    order: usize,
    flags: StructureFlags,
    classification: Classification,
    properties: Vec<PropertyVerdict>,
}

fn run(cli: Cli) -> Result<u8, String> {
    let cap = size_cap()?;
    let par = parallelism(cli.jobs)?;
    match cli.command {
        Command::Construct { spec, output } => {
            let parsed = FamilySpec::parse(&spec).map_err(|e| e.to_string())?;
            let (s, report) = construct_named(&parsed).map_err(|e| e.to_string())?;
            if !report.ok {
                eprintln!("warning: `{spec}` violates {} axiom check(s)", report.violations.len());
            }
            if s.order > cap {
                return Err(format!("`{spec}` has order {} above the size cap {cap}", s.order));
            }
            emit(&s, output.as_deref())?;
            Ok(0)
        }
        Command::Classify { file } => {
            let s = load(&file, cap)?;
            let payload = ClassifyPayload {
                order: s.order,
                flags: structure_flags(&s),
                classification: classify(&s),
                properties: decide_all(&s),
            };
            emit(&payload, None)?;
            Ok(0)
        }
        Command::Check { property, file } => {
            let prop = parse_property(&property)?;
            let s = load(&file, cap)?;
            let verdict = decide(&s, prop);
            let holds = verdict.holds;
            emit(&verdict, None)?;
            Ok(if holds { 0 } else { 1 })
        }
        Command::Ideals { file, slice } => {
            let s = load(&file, cap)?;
            let lattice = all_ideals(&s).map_err(|e| e.to_string())?;
            if slice.primes {
                let primes: Vec<_> = lattice.primes.iter().map(|&i| &lattice.ideals[i]).collect();
                emit(&primes, None)?;
            } else if slice.maximal {
                let maximal: Vec<_> =
                    lattice.maximals.iter().map(|&i| &lattice.ideals[i]).collect();
                emit(&maximal, None)?;
            } else if slice.nil {
                emit(&lattice.nil, None)?;
            } else {
                #[derive(Serialize)]
                struct LatticePayload<T: Serialize> {
                    lattice: T,
                    order_properties: semiring_core::ideals::OrderProps,
                }
                let order_properties = order_props(&s).map_err(|e| e.to_string())?;
                emit(&LatticePayload { lattice, order_properties }, None)?;
            }
            Ok(0)
        }
        Command::Idsemiring { file, output } => {
            let s = load(&file, cap)?;
            let (ideal_ring, _) = ideal_semiring(&s, IDEAL_ORDER_CAP).map_err(|e| e.to_string())?;
            emit(&ideal_ring, output.as_deref())?;
            Ok(0)
        }
        Command::Localize { file, at, output } => {
            let s = load(&file, cap)?;
            match at.as_str() {
                "mc" => {
                    let tq = total_quotient(&s).map_err(|e| e.to_string())?;
                    emit(&tq, output.as_deref())?;
                }
                other => {
                    let index: usize = other
                        .strip_prefix("prime:")
                        .and_then(|k| k.parse().ok())
                        .ok_or_else(|| {
                            format!("--at must be `mc` or `prime:K`, got `{other}`")
                        })?;
                    let lattice = all_ideals(&s).map_err(|e| e.to_string())?;
                    let ideal = lattice.ideals.get(index).ok_or_else(|| {
                        format!(
                            "prime index {index} out of range; the lattice has {} ideals",
                            lattice.ideals.len()
                        )
                    })?;
                    let localized = localize_at_prime(&s, ideal).map_err(|e| e.to_string())?;
                    emit(&localized, output.as_deref())?;
                }
            }
            Ok(0)
        }
        Command::Census { order, up_to_iso, filter, stats, reps, resume, long_run } => {
            if filter.is_some() && (stats.is_some() || resume.is_some()) {
                return Err("--filter cannot be combined with --stats/--resume".into());
            }
            if order > CENSUS_HARD_CAP || (order > CENSUS_DEFAULT_MAX && !long_run) {
                return Err(format!(
                    "--order {order} out of range (quick cap {CENSUS_DEFAULT_MAX}, \
                     {CENSUS_HARD_CAP} with --long-run)"
                ));
            }
            let representatives: Vec<FiniteSemiring>;
            if stats.is_some() || resume.is_some() {
                let record = census_stats(order, par, long_run, resume.as_deref())
                    .map_err(|e| e.to_string())?;
                if let Some(path) = &stats {
                    emit(&record, Some(path))?;
                }
                representatives = record.representatives.clone();
                emit(&record, None)?;
            } else {
                let prop = filter.as_deref().map(parse_property).transpose()?;
                let list = enumerate_semirings(order, up_to_iso, prop, par, long_run)
                    .map_err(|e| e.to_string())?;
                representatives = list.clone();
                emit(&list, None)?;
            }
            if let Some(dir) = reps {
                fs::create_dir_all(&dir)
                    .map_err(|e| format!("cannot create `{}`: {e}", dir.display()))?;
                for (i, s) in representatives.iter().enumerate() {
                    let path = dir.join(format!("order{order}_rep{i:03}.json"));
                    fs::write(&path, s.encode())
                        .map_err(|e| format!("cannot write `{}`: {e}", path.display()))?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite, claims, max_order, report } => {
            if suite != "full" {
                return Err(format!("unknown suite `{suite}`; only `full` is available"));
            }
            let claim_ids = claims
                .map(|list| {
                    list.iter()
                        .map(|c| c.parse::<ClaimId>())
                        .collect::<Result<Vec<_>, Error>>()
                })
                .transpose()
                .map_err(|e| e.to_string())?;
            let cfg = SuiteConfig { claim_ids, max_order, parallelism: par };
            let suite_report = run_suite(&cfg).map_err(|e| e.to_string())?;
            if let Some(path) = &report {
                emit(&suite_report, Some(path))?;
            }
            emit(&suite_report, None)?;
            let s = &suite_report.summary;
            eprintln!(
                "claims: {} verified, {} counterexamples, {} mixed; {} instances",
                s.verified, s.counterexamples, s.mixed, s.instances_checked
            );
            Ok(if suite_has_blocking_failure(&suite_report) { 1 } else { 0 })
        }
        Command::Encode { file } => {
            let s = load(&file, cap)?;
            print_stdout(&s.encode())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end for `lowrank`.
//!
//! Exit codes: 0 success, 1 a domain failure (the algebra is invalid or a
//! precondition fails), 2 an I/O, parse or usage error, 3 an unsupported
//! ring, an infinite ring where a finite one is needed, or a search over the
//! limit.

pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lowrank::census::{census, limit_from_env, CensusMode, ClassLabel};
use lowrank::corpus::{build, build_default, standard_entries, FAMILIES};
use lowrank::rank3::iso_test;
use lowrank::{BaseRing, Error, StructureAlgebra};
use serde_json::{json, Value};

pub use report::{analyze, render, AnalyzeOptions};

pub const DEFAULT_SEED: u64 = 20100;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lowrank", version, about = "Exact analysis of low-rank algebras given by structure constants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a file describes an associative algebra with unit e0.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Degree, geometric degree, involution, exceptional and rank-3 data.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Seed for the sampling check over infinite rings.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Add wall-clock timings; the report is then no longer reproducible.
        #[arg(long)]
        timing: bool,
    },
    /// Decide whether two rank-3 algebras with involution are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every algebra of rank 2 or 3 over a finite ring.
    Census(CensusArgs),
    /// The built-in example algebras.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long)]
    pub rank: usize,
    /// Largest number of tables to enumerate; defaults to LOWRANK_LIMIT or 2^24.
    #[arg(long)]
    pub limit: Option<u128>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Normalized,
    /// Full when it fits the limit, normalized otherwise.
    Auto,
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    /// List the families.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print one entry; its "algebra" field is a valid input file.
    Show {
        name: String,
        #[arg(long)]
        ring: Option<String>,
        /// Constructor parameters, in order.
        #[arg(long = "param", allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Print only the algebra.
        #[arg(long)]
        algebra: bool,
    },
    /// Recompute the expected properties of every standard entry.
    Check {
        #[arg(long)]
        json: bool,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotAssociative(..) | Error::NoUnit(_) | Error::ZeroRank | Error::Precondition(_) | Error::Internal(_) => {
            EXIT_DOMAIN
        }
        Error::Parse(_) | Error::InvalidElement { .. } | Error::DimensionMismatch(_) | Error::UnknownEntry(_) => EXIT_INPUT,
        Error::UnsupportedRing(_)
        | Error::NotPrime(_)
        | Error::InfiniteRing(_)
        | Error::UnsupportedHom { .. }
        | Error::Unsupported(_)
        | Error::LimitExceeded { .. } => EXIT_UNSUPPORTED,
    }
}

/// A failed command: exit code plus message, and a JSON diagnostic when known.
struct Failure {
    code: i32,
    message: String,
    detail: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let detail = match &e {
            Error::NotAssociative(i, j, k) => json!({"kind": "not_associative", "witness": [i, j, k]}),
            Error::LimitExceeded { size, limit } => {
                json!({"kind": "limit_exceeded", "size": size.to_string(), "limit": limit.to_string()})
            }
            _ => json!({"kind": kind_name(&e)}),
        };
        Failure { code: exit_code(&e), message: e.to_string(), detail }
    }
}

fn kind_name(e: &Error) -> &'static str {
    match e {
        Error::UnsupportedRing(_) => "unsupported_ring",
        Error::InvalidElement { .. } => "invalid_element",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::NotPrime(_) => "not_prime",
        Error::InfiniteRing(_) => "infinite_ring",
        Error::ZeroRank => "zero_rank",
        Error::NoUnit(_) => "no_unit",
        Error::NotAssociative(..) => "not_associative",
        Error::UnsupportedHom { .. } => "unsupported_hom",
        Error::Precondition(_) => "precondition",
        Error::Unsupported(_) => "unsupported",
        Error::LimitExceeded { .. } => "limit_exceeded",
        Error::UnknownEntry(_) => "unknown_entry",
        Error::Parse(_) => "parse",
        Error::Internal(_) => "internal",
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()), detail: json!({"kind": "io"}) }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| io_failure(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    }
    serde_json::from_str(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
        detail: json!({"kind": "parse"}),
    })
}

/// Reads an algebra file; a corpus entry printed by `corpus show` is accepted too.
fn read_algebra(path: &Path) -> Result<StructureAlgebra, Failure> {
    let v = read_json(path)?;
    let v = match v.get("algebra") {
        Some(inner) if v.get("expected").is_some() => inner.clone(),
        _ => v,
    };
    Ok(StructureAlgebra::from_json(&v)?)
}

fn print_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
}

/// Parses `args` and runs the command, writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let json = wants_json(&cli.command);
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            if json {
                let _ = print_json(out, &json!({"ok": false, "error": f.message, "detail": f.detail}));
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn wants_json(c: &Command) -> bool {
    match c {
        Command::Validate { json, .. } | Command::Analyze { json, .. } | Command::Iso { json, .. } => *json,
        Command::Census(a) => a.json,
        Command::Corpus { action: CorpusAction::List { json } | CorpusAction::Check { json } } => *json,
        Command::Corpus { .. } => true,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure { code: EXIT_INPUT, message: e.to_string(), detail: json!({"kind": "io"}) };
    match cmd {
        Command::Validate { file, json } => {
            let alg = read_algebra(&file)?;
            if json {
                print_json(out, &json!({"ok": true, "ring": alg.ring(), "rank": alg.rank()})).map_err(io)?;
            } else {
                writeln!(out, "valid: rank {} algebra over {}", alg.rank(), alg.ring()).map_err(io)?;
            }
        }
        Command::Analyze { file, json, seed, samples, timing } => {
            let alg = read_algebra(&file)?;
            let report = analyze(&alg, &AnalyzeOptions { seed, samples, timing })?;
            if json {
                print_json(out, &report).map_err(io)?;
            } else {
                writeln!(out, "{}", render(&report)).map_err(io)?;
            }
        }
        Command::Iso { first, second, json } => {
            let (a, b) = (read_algebra(&first)?, read_algebra(&second)?);
            let phi = iso_test(&a, &b)?;
            let ring = a.ring();
            let rows = phi.as_ref().map(|m| {
                m.to_rows().iter().map(|r| r.iter().map(|e| ring.elem_to_json(e)).collect::<Vec<_>>()).collect::<Vec<_>>()
            });
            if json {
                print_json(out, &json!({"isomorphic": phi.is_some(), "matrix": rows})).map_err(io)?;
            } else if let Some(m) = &phi {
                writeln!(out, "isomorphic; rows give the second basis in the first algebra's coordinates:").map_err(io)?;
                for r in m.to_rows() {
                    let cells: Vec<String> = r.iter().map(|e| ring.format(e)).collect();
                    writeln!(out, "  [{}]", cells.join(", ")).map_err(io)?;
                }
            } else {
                writeln!(out, "not isomorphic").map_err(io)?;
            }
        }
        Command::Census(args) => {
            let text = run_census(args)?;
            write!(out, "{text}").map_err(io)?;
        }
        Command::Corpus { action } => return run_corpus(action, out),
    }
    Ok(EXIT_OK)
}

/// The census mode actually run for `mode`.
pub fn resolve_mode(ring: &BaseRing, rank: usize, mode: ModeArg, limit: u128) -> CensusMode {
    match mode {
        ModeArg::Full => CensusMode::Full,
        ModeArg::Normalized => CensusMode::Normalized,
        ModeArg::Auto => match ring.modulus().and_then(|m| u32::try_from(m).ok()) {
            Some(m) if rank == 3 && CensusMode::Full.search_size(m, rank) > limit => CensusMode::Normalized,
            _ => CensusMode::Full,
        },
    }
}

fn run_census(args: CensusArgs) -> Result<String, Error> {
    let ring = BaseRing::parse(&args.ring)?;
    let limit = args.limit.unwrap_or_else(limit_from_env);
    let mode = resolve_mode(&ring, args.rank, args.mode, limit);
    let report = census(&ring, args.rank, mode, limit)?;
    if args.json {
        return Ok(serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n");
    }
    let mut lines = vec![
        format!("census of rank {} algebras over {} ({} mode)", report.rank, report.ring, mode.name()),
        format!("tables enumerated: {}", report.counts.enumerated),
        format!("associative: {}", report.counts.associative),
        format!("with standard involution: {}", report.with_involution),
        format!("isomorphism classes with involution: {}", report.classes.len()),
    ];
    for c in &report.classes {
        let label = match &c.label {
            ClassLabel::Orbit(o) => o.describe(&report.ring),
            ClassLabel::Quadratic { n0, n1 } => format!("x^2 = {n0} + {n1}x"),
        };
        let exc = if c.exceptional { "exceptional" } else { "not exceptional" };
        lines.push(format!("  {label}: {} tables, {exc}", c.count));
    }
    let verdict = if report.agree { "agree" } else { "DISAGREE" };
    lines.push(format!("brute-force classes: {} ({verdict})", report.brute_force_classes));
    Ok(lines.join("\n") + "\n")
}

fn run_corpus(action: CorpusAction, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure { code: EXIT_INPUT, message: e.to_string(), detail: json!({"kind": "io"}) };
    match action {
        CorpusAction::List { json } => {
            if json {
                let fams: Vec<Value> = FAMILIES
                    .iter()
                    .map(|f| {
                        json!({"name": f.name, "params": f.params, "default_ring": f.default_ring,
                               "default_params": f.default_params, "source": f.source})
                    })
                    .collect();
                print_json(out, &Value::Array(fams)).map_err(io)?;
            } else {
                for f in FAMILIES {
                    let params = if f.params.is_empty() { String::new() } else { format!(" [{}]", f.params) };
                    writeln!(out, "{}{params}: {} (default over {})", f.name, f.source, f.default_ring).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        CorpusAction::Show { name, ring, params, algebra } => {
            let entry = match ring {
                None if params.is_empty() => build_default(&name)?,
                ring => {
                    let ring = match ring {
                        Some(r) => BaseRing::parse(&r)?,
                        None => build_default(&name)?.algebra.ring().clone(),
                    };
                    build(&name, &ring, &params)?
                }
            };
            let v = if algebra { entry.algebra.to_json() } else { entry.to_json() };
            print_json(out, &v).map_err(io)?;
            Ok(EXIT_OK)
        }
        CorpusAction::Check { json } => {
            let mut results = Vec::new();
            let mut failed = 0;
            for e in standard_entries()? {
                let bad = e.check()?;
                failed += !bad.is_empty() as usize;
                results.push((e, bad));
            }
            if json {
                let rows: Vec<Value> = results
                    .iter()
                    .map(|(e, bad)| {
                        json!({"name": e.name, "params": e.params, "ring": e.algebra.ring(),
                               "mismatches": bad.iter().map(|m| m.to_string()).collect::<Vec<_>>()})
                    })
                    .collect();
                print_json(out, &json!({"entries": rows, "failed": failed})).map_err(io)?;
            } else {
                for (e, bad) in &results {
                    let status = if bad.is_empty() { "ok" } else { "MISMATCH" };
                    writeln!(out, "{status:8} {} {:?} over {}", e.name, e.params, e.algebra.ring()).map_err(io)?;
                    for m in bad {
                        writeln!(out, "         {m}").map_err(io)?;
                    }
                }
                writeln!(out, "{} entries, {failed} with mismatches", results.len()).map_err(io)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_DOMAIN })
        }
    }
}

//! File formats, the verification pipeline, and the command-line front end.
//!
//! Exit codes: 0 for success or a claim that holds, 1 for a claim that fails
//! (a copy found, an audit violated, a certificate rejected), 2 for usage,
//! parse and input errors.

mod format;
mod pipeline;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::decompose::{counting_audit_3, counting_audit_general};
use crate::embed::{contains_expansion_through, ExpansionChecker, Embedding};
use crate::error::{Error, Result};
use crate::gallery::{random, FamilySpec};
use crate::hypercore::Hypergraph;
use crate::oracle::{
    exact_turan, find_subhypergraph, find_subhypergraph_through, Budget, Forbidden,
    TuranCertificate, TuranOptions,
};

pub use format::{emit_g, emit_uhg, parse_g, parse_uhg};
pub use pipeline::{
    run_pipeline, Audits, CountClaim, Environment, Freeness, PipelineRequest, VerificationReport,
    REPORT_SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fan-turan", version, about = "Fan expansions, containment search and small Turán numbers")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget for searches that accept one.
    #[arg(long, global = true)]
    budget_sec: Option<f64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family member in .uhg format. `random n=.. r=.. p=..` draws a
    /// seeded random hypergraph.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a hypergraph contains the family's forbidden copy.
    CheckFree {
        file: PathBuf,
        #[arg(long)]
        family: String,
    },
    /// Find a copy (optionally through a given hyperedge), or check a
    /// supplied embedding.
    Embed {
        file: PathBuf,
        #[arg(long)]
        family: String,
        /// Hyperedge the copy must use, e.g. "0 1 2".
        #[arg(long)]
        through: Option<String>,
        /// Embedding JSON to validate instead of searching.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Heaviness classes and counting audits.
    Classify {
        file: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Exact Turán number by branch and bound.
    Turan {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Uniformity.
        #[arg(long)]
        r: usize,
        /// Family whose expansion (or member) is forbidden, e.g. "fan t=2".
        #[arg(long, required_unless_present = "forbid_file")]
        forbid: Option<String>,
        /// Forbid the hypergraph in this .uhg file.
        #[arg(long, conflicts_with = "forbid")]
        forbid_file: Option<PathBuf>,
        /// Fix the first hyperedge to {0..r-1}.
        #[arg(long, value_enum, default_value = "on")]
        sym: Switch,
        /// Write the certificate here as well as to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check the witness of a Turán certificate.
    VerifyCert { file: PathBuf },
    /// Check the star-cover construction: size, freeness, audits.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
    },
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_uhg(path: &Path) -> Result<Hypergraph> {
    parse_uhg(&fs::read_to_string(path)?)
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn family(text: &str) -> Result<FamilySpec> {
    text.parse()
}

fn random_spec(words: &[String], seed: u64) -> Result<Hypergraph> {
    let mut n = None;
    let mut r = None;
    let mut p = None;
    for w in words {
        match w.split_once('=') {
            Some(("n", v)) => n = v.parse::<usize>().ok(),
            Some(("r", v)) => r = v.parse::<usize>().ok(),
            Some(("p", v)) => p = v.parse::<f64>().ok().filter(|p| (0.0..=1.0).contains(p)),
            _ => return Err(Error::input(format!("unexpected `{w}` in random spec"))),
        }
    }
    match (n, r, p) {
        (Some(n), Some(r), Some(p)) if r >= 1 => {
            Ok(random::hypergraph(n, r, p, &mut random::rng(seed)))
        }
        _ => Err(Error::input("random needs n=<int> r=<int >= 1> p=<0..1>")),
    }
}

fn parse_edge(text: &str) -> Result<Vec<usize>> {
    let mut e = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::input(format!("`{s}` is not a vertex")))
        })
        .collect::<Result<Vec<_>>>()?;
    e.sort_unstable();
    Ok(e)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen { spec, output } => {
            let h = if spec.first().map(String::as_str) == Some("random") {
                random_spec(&spec[1..], cli.seed)?
            } else {
                family(&spec.join(" "))?.hypergraph()?
            };
            let text = emit_uhg(&h);
            match output {
                Some(path) => fs::write(path, &text)?,
                None if cli.json => print_json(
                    out,
                    &json!({"n": h.vertex_count(), "r": h.uniformity(), "edges": h.edges().collect::<Vec<_>>()}),
                )?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::CheckFree { file, family: spec } => {
            let h = read_uhg(file)?;
            let forbidden = Forbidden::from_family(&family(spec)?, h.uniformity())?;
            let found = match &forbidden {
                Forbidden::Expansion(f) => ExpansionChecker::for_host(f, &h)
                    .find()
                    .map(serde_json::to_value)
                    .transpose()?,
                Forbidden::Patterns(ps) => ps
                    .iter()
                    .find_map(|p| find_subhypergraph(&h, p))
                    .map(|map| json!({ "map": map })),
            };
            match &found {
                None if cli.json => print_json(out, &json!({"free": true}))?,
                None => writeln!(out, "FREE")?,
                Some(copy) if cli.json => print_json(out, &json!({"free": false, "embedding": copy}))?,
                Some(copy) => print_json(out, copy)?,
            }
            Ok(if found.is_none() { EXIT_OK } else { EXIT_CLAIM_FAILS })
        }
        Command::Embed { file, family: spec, through, check } => {
            let h = read_uhg(file)?;
            let spec = family(spec)?;
            if let Some(path) = check {
                let emb: Embedding = serde_json::from_str(&fs::read_to_string(path)?)?;
                let f = spec.core_graph()?;
                let reason = emb.validate(&h, &f).err().map(|e| e.to_string());
                print_json(out, &json!({"valid": reason.is_none(), "reason": reason}))?;
                return Ok(if reason.is_none() { EXIT_OK } else { EXIT_CLAIM_FAILS });
            }
            let forbidden = Forbidden::from_family(&spec, h.uniformity())?;
            let edge = through.as_deref().map(parse_edge).transpose()?;
            if let Some(e) = &edge {
                if !h.contains(e) {
                    return Err(Error::input(format!("{e:?} is not a hyperedge of the input")));
                }
            }
            let found = match (&forbidden, &edge) {
                (Forbidden::Expansion(f), Some(e)) => contains_expansion_through(&h, f, e)
                    .map(serde_json::to_value)
                    .transpose()?,
                (Forbidden::Expansion(f), None) => ExpansionChecker::for_host(f, &h)
                    .find()
                    .map(serde_json::to_value)
                    .transpose()?,
                (Forbidden::Patterns(ps), Some(e)) => ps
                    .iter()
                    .find_map(|p| find_subhypergraph_through(&h, p, e))
                    .map(|map| json!({ "map": map })),
                (Forbidden::Patterns(ps), None) => ps
                    .iter()
                    .find_map(|p| find_subhypergraph(&h, p))
                    .map(|map| json!({ "map": map })),
            };
            match &found {
                Some(copy) => print_json(out, copy)?,
                None if cli.json => print_json(out, &serde_json::Value::Null)?,
                None => writeln!(out, "NONE")?,
            }
            Ok(if found.is_some() { EXIT_OK } else { EXIT_CLAIM_FAILS })
        }
        Command::Classify { file, t } => {
            let h = read_uhg(file)?;
            let three = if h.uniformity() == 3 { Some(counting_audit_3(&h, *t)?) } else { None };
            let general = counting_audit_general(&h, *t)?;
            let holds = general.holds() && three.as_ref().is_none_or(|a| a.holds());
            print_json(
                out,
                &json!({
                    "t": t,
                    "r": h.uniformity(),
                    "holds": holds,
                    "three": three,
                    "general": general,
                }),
            )?;
            Ok(if holds { EXIT_OK } else { EXIT_CLAIM_FAILS })
        }
        Command::Turan { n, r, forbid, forbid_file, sym, output } => {
            let (forbidden, label) = match (forbid, forbid_file) {
                (Some(spec), _) => {
                    let spec = family(spec)?;
                    (Forbidden::from_family(&spec, *r)?, Some(spec.to_string()))
                }
                (None, Some(path)) => (
                    Forbidden::Patterns(vec![read_uhg(path)?]),
                    Some(path.display().to_string()),
                ),
                (None, None) => return Err(Error::input("give --forbid or --forbid-file")),
            };
            let options = TuranOptions {
                budget: cli.budget_sec.map(Budget::seconds).unwrap_or_default(),
                symmetry: *sym == Switch::On,
                seed: cli.seed,
            };
            let cert = exact_turan(*n, *r, &forbidden, label, &options)?;
            if let Some(path) = output {
                fs::write(path, serde_json::to_string_pretty(&cert)? + "\n")?;
            }
            print_json(out, &cert)?;
            Ok(EXIT_OK)
        }
        Command::VerifyCert { file } => {
            let cert: TuranCertificate = serde_json::from_str(&fs::read_to_string(file)?)?;
            let check = cert.verify()?;
            if cli.json {
                print_json(out, &check)?;
            } else if check.holds() {
                writeln!(out, "OK value={} exact={}", cert.value, cert.exact)?;
            } else {
                writeln!(out, "REJECTED {}", serde_json::to_string(&check)?)?;
            }
            Ok(if check.holds() { EXIT_OK } else { EXIT_CLAIM_FAILS })
        }
        Command::VerifyTheorem { n, t, r } => {
            let report = run_pipeline(PipelineRequest { n: *n, t: *t, r: *r, seed: cli.seed })?;
            if cli.json {
                print_json(out, &report)?;
            } else {
                writeln!(
                    out,
                    "{}: count {} (expected {}), free {}, audits {}",
                    report.construction,
                    report.count_claim.enumerated,
                    report.count_claim.expected,
                    match report.freeness.free {
                        Some(true) => "yes",
                        Some(false) => "NO",
                        None => "not checked",
                    },
                    if report.holds() { "hold" } else { "FAIL" },
                )?;
            }
            Ok(if report.holds() { EXIT_OK } else { EXIT_CLAIM_FAILS })
        }
    }
}

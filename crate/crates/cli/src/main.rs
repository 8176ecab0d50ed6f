//! `muttjeff`: generate polynomials, run verification checks, pair roots,
//! and write aggregate reports.
//!
//! Exit codes: 0 when everything passes, 1 when a mathematical check fails,
//! 2 for usage or infrastructure errors.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use muttjeff::chebyshev::{cheb, ChebKind};
use muttjeff::muttjeff as mj;
use muttjeff::rootiso::{self, PairingReport};
use muttjeff::serialize::{parse_rat, BivarJson, PolyJson};
use muttjeff::verify::{self, VerificationReport, VerifyOptions};

/// Smallest n at which the pairing window is required to hold.
const PAIRING_FROM: usize = 6;

#[derive(Parser)]
#[command(name = "muttjeff", version, about = "Exact verification of Mutt/Jeff polynomial discriminants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial as JSON.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Run the verification checks, one JSON line per n.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        /// Comma-separated subset of check names.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Include per-check wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Pair Jeff and Mutt roots, one JSON line per n.
    Pair {
        #[command(flatten)]
        range: RangeArgs,
        /// Refinement width as `num/den`; defaults to 1/(100 n^2).
        #[arg(long)]
        width: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write verification and pairing results to a file.
    Report {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct RangeArgs {
    /// A single n.
    #[arg(long, conflicts_with = "n_range")]
    n: Option<usize>,
    /// Inclusive range `A..B`.
    #[arg(long)]
    n_range: Option<String>,
}

impl RangeArgs {
    fn bounds(&self) -> Result<(usize, usize)> {
        match (&self.n, &self.n_range) {
            (Some(n), None) => Ok((*n, *n)),
            (None, Some(r)) => parse_range(r),
            _ => bail!("one of --n or --n-range is required"),
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("range must look like A..B, got {s:?}"))?;
    let a = a.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
    let b = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in {s:?}"))?;
    Ok((a, b))
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    MuttRaw,
    MuttPrim,
    Jeff,
    UprimeSqrt,
    Su,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure classes mapped onto exit codes.
enum Outcome {
    Pass,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Gen { kind, n } => cmd_gen(kind, n),
        Command::Verify { range, checks, timings, jobs } => {
            let (a, b) = range.bounds()?;
            if a < 1 || a > b {
                bail!("verify needs 1 <= n_from <= n_to, got {a}..{b}");
            }
            let only = checks.map(|c| c.into_iter().collect::<BTreeSet<_>>());
            if let Some(names) = &only {
                let known = verify::check_names();
                if let Some(bad) = names.iter().find(|c| !known.contains(&c.as_str())) {
                    bail!("unknown check {bad:?}; known checks: {}", known.join(", "));
                }
            }
            cmd_verify(a, b, VerifyOptions { only, timings }, jobs)
        }
        Command::Pair { range, width, jobs } => {
            let (a, b) = range.bounds()?;
            if a < 2 || a > b {
                bail!("pair needs 2 <= n_from <= n_to, got {a}..{b}");
            }
            let width = width
                .map(|w| parse_width(&w))
                .transpose()?;
            cmd_pair(a, b, width, jobs)
        }
        Command::Report { range, out, format, jobs } => {
            let (a, b) = range.bounds()?;
            if a < 1 && a <= b {
                bail!("report needs n >= 1, got {a}..{b}");
            }
            cmd_report(a, b, &out, format, jobs)
        }
    }
}

fn parse_width(s: &str) -> Result<BigRational> {
    let w = parse_rat(s).ok_or_else(|| anyhow!("bad width {s:?}; expected num/den"))?;
    if w <= BigRational::from_integer(0.into()) {
        bail!("width must be positive");
    }
    Ok(w)
}

fn cmd_gen(kind: Kind, n: usize) -> Result<Outcome> {
    let derived = |name: &str| -> Result<()> {
        if n < 1 {
            bail!("{name} needs n >= 1");
        }
        Ok(())
    };
    let line = match kind {
        Kind::T => serde_json::to_string(&PolyJson::new("T", n, &cheb(ChebKind::FirstKind, n)))?,
        Kind::U => serde_json::to_string(&PolyJson::new("U", n, &cheb(ChebKind::SecondKind, n)))?,
        Kind::MuttRaw => {
            derived("mutt-raw")?;
            serde_json::to_string(&PolyJson::new("mutt-raw", n, &mj::mutt(n)?.0))?
        }
        Kind::MuttPrim => {
            derived("mutt-prim")?;
            serde_json::to_string(&PolyJson::new("mutt-prim", n, &mj::mutt(n)?.1))?
        }
        Kind::Jeff => {
            derived("jeff")?;
            serde_json::to_string(&PolyJson::new("jeff", n, &mj::jeff(n)?))?
        }
        Kind::UprimeSqrt => {
            derived("uprime-sqrt")?;
            serde_json::to_string(&PolyJson::new("uprime-sqrt", n, &mj::uprime_sqrt(n)?))?
        }
        Kind::Su => {
            derived("su")?;
            serde_json::to_string(&BivarJson::new("su", n, &mj::transform_su(n)?))?
        }
    };
    println!("{line}");
    Ok(Outcome::Pass)
}

/// Runs `f` for each n in `a..=b` on `jobs` workers and hands results to
/// `sink` in n order, one batch of `jobs` values at a time.
fn fan_out<T: Send>(
    a: usize,
    b: usize,
    jobs: usize,
    f: impl Fn(usize) -> T + Sync + Send,
    mut sink: impl FnMut(T) -> Result<()>,
) -> Result<()> {
    let ns: Vec<usize> = if a <= b { (a..=b).collect() } else { Vec::new() };
    let jobs = jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    for batch in ns.chunks(jobs) {
        let results: Vec<T> = if jobs == 1 {
            batch.iter().map(|&n| f(n)).collect()
        } else {
            pool.install(|| batch.par_iter().map(|&n| f(n)).collect())
        };
        for r in results {
            sink(r)?;
        }
    }
    Ok(())
}

fn emit(line: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{line}")?;
    out.flush()?;
    Ok(())
}

fn verify_outcome(reports: &[VerificationReport]) -> Result<Outcome> {
    if let Some(r) = reports.iter().find(|r| r.has_errors()) {
        bail!("verification could not complete at n = {}", r.n);
    }
    Ok(if reports.iter().all(|r| r.pass) { Outcome::Pass } else { Outcome::CheckFailed })
}

fn cmd_verify(a: usize, b: usize, opts: VerifyOptions, jobs: usize) -> Result<Outcome> {
    let mut reports = Vec::new();
    fan_out(a, b, jobs, |n| verify::verify(n, &opts), |r| {
        emit(&serde_json::to_string(&r)?)?;
        reports.push(r);
        Ok(())
    })?;
    verify_outcome(&reports)
}

fn pairing(n: usize, width: &Option<BigRational>) -> Result<PairingReport> {
    let w = width.clone().unwrap_or_else(|| rootiso::default_width(n));
    Ok(rootiso::pair_roots_with(n, &w)?)
}

fn pair_outcome(reports: &[PairingReport]) -> Outcome {
    let ok = reports.iter().filter(|r| r.n >= PAIRING_FROM).all(|r| r.all_in_window());
    if ok {
        Outcome::Pass
    } else {
        Outcome::CheckFailed
    }
}

fn cmd_pair(a: usize, b: usize, width: Option<BigRational>, jobs: usize) -> Result<Outcome> {
    let mut reports = Vec::new();
    fan_out(a, b, jobs, |n| pairing(n, &width), |r| {
        let r = r?;
        emit(&serde_json::to_string(&r)?)?;
        reports.push(r);
        Ok(())
    })?;
    Ok(pair_outcome(&reports))
}

#[derive(Serialize)]
struct Row {
    n: usize,
    check: String,
    pass: bool,
    value: String,
}

fn rows_for(v: &VerificationReport, p: Option<&PairingReport>) -> Vec<Row> {
    let mut rows: Vec<Row> = v
        .checks
        .iter()
        .map(|(name, c)| Row {
            n: v.n,
            check: name.to_string(),
            pass: c.pass,
            value: c.value.clone().unwrap_or_default(),
        })
        .collect();
    if let Some(p) = p {
        let inside = p.pairs.iter().filter(|q| q.in_window && q.exists_in_window).count();
        rows.push(Row {
            n: p.n,
            check: "pairing".into(),
            pass: p.all_in_window() && p.all_gaps_ok(),
            value: format!("{inside}/{} pairs in window", p.pairs.len()),
        });
    }
    rows.sort_by(|x, y| (x.n, &x.check).cmp(&(y.n, &y.check)));
    rows
}

fn cmd_report(a: usize, b: usize, out: &Path, format: Format, jobs: usize) -> Result<Outcome> {
    let mut verifications = Vec::new();
    let mut pairings = Vec::new();
    let work = |n| {
        let v = verify::verify(n, &VerifyOptions::default());
        let p = if n >= 2 { Some(pairing(n, &None)) } else { None };
        (v, p)
    };
    fan_out(a, b, jobs, work, |(v, p)| {
        verifications.push(v);
        if let Some(p) = p {
            pairings.push(p?);
        }
        Ok(())
    })?;
    let rows: Vec<Row> = verifications
        .iter()
        .flat_map(|v| rows_for(v, pairings.iter().find(|p| p.n == v.n)))
        .collect();

    let body = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if rows.is_empty() {
                w.write_record(["n", "check", "pass", "value"])?;
            }
            for r in &rows {
                w.serialize(r)?;
            }
            w.into_inner()?
        }
        Format::Json => {
            let doc = json!({ "rows": rows, "verify": verifications, "pair": pairings });
            (serde_json::to_string_pretty(&doc)? + "\n").into_bytes()
        }
    };
    write_atomically(out, &body)?;

    verify_outcome(&verifications)?;
    let checks_ok = verifications.iter().all(|v| v.pass);
    Ok(match (checks_ok, pair_outcome(&pairings)) {
        (true, Outcome::Pass) => Outcome::Pass,
        _ => Outcome::CheckFailed,
    })
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.persist(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

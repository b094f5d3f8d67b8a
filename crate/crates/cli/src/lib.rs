//! Command-line front end: argument handling, dataset ingestion, the
//! constants lockfile, and writing certificates and reports.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use sz8_verify_core::constants::sha256_hex;
use sz8_verify_core::golay::GolayCode;
use sz8_verify_core::permfile::parse_perm_file;
use sz8_verify_core::steps::{registry, run_step, Certificate, Dataset, Inputs, Report, StepId, Verdict};

/// Name of the `not22a` dataset inside `--data-dir`.
pub const HELD_FILE: &str = "not22a.perm";

pub const LOCKFILE: &str = include_str!("../data.lock");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    UnknownStep(#[from] sz8_verify_core::steps::UnknownStep),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Data { path: PathBuf, source: sz8_verify_core::Error },
    #[error("{0}: not a recognized data format")]
    UnknownFormat(PathBuf),
    #[error("--jobs must be at least 1")]
    ZeroJobs,
}

impl CliError {
    /// Usage and data errors share exit code 2.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Parser, Debug)]
#[command(name = "sz8-verify", version, about = "Re-run the computational steps of the no-Sz(8)-in-Monster proof")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run steps by id, or `all`
    Verify {
        #[arg(required = true, value_name = "IDS|all")]
        steps: Vec<String>,
        /// Directory holding external datasets (not22a.perm)
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the aggregated report here
        #[arg(long)]
        emit_report: Option<PathBuf>,
        /// Directory for certificate files
        #[arg(long, default_value = "certificates")]
        out_dir: PathBuf,
    },
    /// Validate or hash a data file
    Data {
        #[command(subcommand)]
        action: DataAction,
    },
    /// List step ids
    Steps,
}

#[derive(Subcommand, Debug)]
pub enum DataAction {
    Check { file: PathBuf },
    Hash { file: PathBuf },
}

pub fn parse_steps(args: &[String]) -> Result<Vec<StepId>, CliError> {
    if args.iter().any(|a| a.eq_ignore_ascii_case("all")) {
        return Ok(StepId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for a in args.iter().flat_map(|a| a.split(',')).filter(|a| !a.is_empty()) {
        let id: StepId = a.parse()?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

/// Lockfile entries: name, sha256, file name.
pub fn lock_entries() -> Vec<(&'static str, &'static str)> {
    LOCKFILE
        .lines()
        .filter_map(|l| {
            let mut f = l.split('\t');
            Some((f.next()?, f.next()?))
        })
        .collect()
}

pub fn lock_name(hash: &str) -> Option<&'static str> {
    lock_entries().into_iter().find(|(_, h)| *h == hash).map(|(n, _)| n)
}

/// Result of `data check`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataCheck {
    pub format: String,
    pub sha256: String,
    pub locked_as: Option<&'static str>,
}

impl DataCheck {
    pub fn render(&self) -> String {
        format!("format: {}\nsha256: {}\nlock: {}\n", self.format, self.sha256, self.locked_as.unwrap_or("unrecognized"))
    }
}

pub fn check_data(path: &Path) -> Result<DataCheck, CliError> {
    let bytes = read(path)?;
    let data = |source| CliError::Data { path: path.into(), source };
    let looks_golay = bytes.first().is_some_and(|b| *b == b'0' || *b == b'1') && bytes.iter().position(|&b| b == b'\n') == Some(24);
    let format = if looks_golay {
        let text = std::str::from_utf8(&bytes).map_err(|_| CliError::UnknownFormat(path.into()))?;
        let code = GolayCode::parse(text).map_err(data)?;
        format!("golay words={}", code.words().count())
    } else {
        let f = parse_perm_file(&bytes).map_err(data)?;
        format!("perm degree={} generators={}", f.degree, f.generators.len())
    };
    let sha256 = sha256_hex(&bytes);
    Ok(DataCheck { format, locked_as: lock_name(&sha256), sha256 })
}

pub fn load_inputs(data_dir: Option<&Path>) -> Result<Inputs, CliError> {
    let mut inputs = Inputs::default();
    if let Some(dir) = data_dir {
        let p = dir.join(HELD_FILE);
        if p.exists() {
            inputs.held = Some(Dataset { name: HELD_FILE.into(), bytes: read(&p)? });
        }
    }
    Ok(inputs)
}

/// Runs the steps on `jobs` threads; the result is in `ids` order
/// whatever the scheduling.
pub fn run_parallel(ids: &[StepId], inputs: &Inputs, jobs: usize) -> (Report, Vec<Duration>) {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<(Certificate, Duration)>>> = Mutex::new(vec![None; ids.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, ids.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&id) = ids.get(i) else { break };
                let t = Instant::now();
                let c = run_step(id, inputs);
                slots.lock().expect("no poisoned workers")[i] = Some((c, t.elapsed()));
            });
        }
    });
    let (certificates, times) = slots.into_inner().expect("no poisoned workers").into_iter().map(|s| s.expect("every step ran")).unzip();
    (Report { certificates }, times)
}

/// One line per step: `<id>\t<verdict>\tsha256:<digest>`.
pub fn summary_lines(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.certificates {
        let text = c.render();
        let digest = text.lines().last().and_then(|l| l.strip_prefix("digest: ")).unwrap_or("");
        let _ = writeln!(s, "{}\t{}\t{}", c.step, c.verdict.as_str(), digest);
    }
    let _ = writeln!(
        s,
        "summary\tverified={} failed={} skipped-missing-data={}",
        r.count(Verdict::Verified),
        r.count(Verdict::Failed),
        r.count(Verdict::SkippedMissingData)
    );
    s
}

/// The aggregated report. Wall times are the only nondeterministic part.
pub fn render_report(r: &Report, times: &[Duration]) -> String {
    let mut s = String::from("report: sz8-verify\n");
    let _ = writeln!(
        s,
        "summary: verified={} failed={} skipped-missing-data={}",
        r.count(Verdict::Verified),
        r.count(Verdict::Failed),
        r.count(Verdict::SkippedMissingData)
    );
    s.push_str("steps:\n");
    for (c, t) in r.certificates.iter().zip(times) {
        let _ = writeln!(s, "  - {}: {}", c.step, c.verdict.as_str());
        let _ = writeln!(s, "    supports: {}", c.step.claim());
        for f in c.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(s, "    failed: {}", f.name);
        }
        let _ = writeln!(s, "    wall_ms: {}", t.as_millis());
    }
    s.push_str("cited:\n");
    let reg = registry();
    for id in r.cited_facts() {
        if let Some(f) = reg.iter().find(|f| f.id == id) {
            let _ = writeln!(s, "  - {}: {} [{}]", f.id, f.statement, f.citation);
        }
    }
    let _ = writeln!(s, "theorem: {}", if r.any_failed() { "not re-established" } else { "all computational steps re-established" });
    s
}

pub fn exit_code(r: &Report) -> u8 {
    u8::from(r.any_failed())
}

/// Runs the CLI, writing machine output to `out` and prose to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let io = |source| CliError::Io { path: PathBuf::from("<stdout>"), source };
    match cli.command {
        Command::Steps => {
            for id in StepId::ALL {
                writeln!(out, "{id}\t{}", id.claim()).map_err(io)?;
            }
            Ok(0)
        }
        Command::Data { action: DataAction::Hash { file } } => {
            writeln!(out, "{}", sha256_hex(&read(&file)?)).map_err(io)?;
            Ok(0)
        }
        Command::Data { action: DataAction::Check { file } } => {
            let c = check_data(&file)?;
            out.write_all(c.render().as_bytes()).map_err(io)?;
            if c.locked_as.is_none() {
                let _ = writeln!(err, "warning: {}: unrecognized hash; certificates will record it as given", file.display());
            }
            Ok(0)
        }
        Command::Verify { steps, data_dir, jobs, emit_report, out_dir } => {
            if jobs == 0 {
                return Err(CliError::ZeroJobs);
            }
            let ids = parse_steps(&steps)?;
            let inputs = load_inputs(data_dir.as_deref())?;
            if ids.contains(&StepId::Not22a) && inputs.held.is_none() {
                let _ = writeln!(err, "note: {HELD_FILE} not found; not22a will be skipped");
            }
            let start = Instant::now();
            let (report, times) = run_parallel(&ids, &inputs, jobs);
            fs::create_dir_all(&out_dir).map_err(|source| CliError::Io { path: out_dir.clone(), source })?;
            for c in &report.certificates {
                write(&out_dir.join(format!("{}.cert", c.step)), &c.render())?;
            }
            if let Some(p) = emit_report {
                write(&p, &render_report(&report, &times))?;
            }
            out.write_all(summary_lines(&report).as_bytes()).map_err(io)?;
            let _ = writeln!(err, "{} step(s) in {:.1}s; certificates in {}", ids.len(), start.elapsed().as_secs_f64(), out_dir.display());
            Ok(exit_code(&report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lockfile_lists_bundled_constants() {
        let c = sz8_verify_core::constants::Constants::default();
        for (name, _) in c.named() {
            assert_eq!(lock_name(&c.hash_of(name).unwrap()), Some(name));
        }
        assert_eq!(lock_entries().len(), 3);
    }

    #[test]
    fn all_expands_and_unknown_ids_error() {
        assert_eq!(parse_steps(&["all".into()]).unwrap(), StepId::ALL);
        assert!(parse_steps(&["7A,bogus".into()]).is_err());
    }

    proptest! {
        #[test]
        fn step_lists_parse_in_given_order(idx in proptest::collection::vec(0usize..10, 1..12), commas in any::<bool>()) {
            let names: Vec<String> = idx.iter().map(|&i| StepId::ALL[i].as_str().to_string()).collect();
            let args = if commas { vec![names.join(",")] } else { names };
            let mut want: Vec<StepId> = Vec::new();
            for &i in &idx {
                if !want.contains(&StepId::ALL[i]) {
                    want.push(StepId::ALL[i]);
                }
            }
            prop_assert_eq!(parse_steps(&args).unwrap(), want);
        }
    }
}

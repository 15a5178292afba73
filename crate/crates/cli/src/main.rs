//! `symgenus`: bounds tables, optimal constructions, verification of
//! embedding and cut-system files, exhaustive search, exports and the
//! summary report.
//!
//! Exit status: 0 on success, 1 when a verification or consistency check
//! fails, 2 on a usage error (bad flags, out-of-domain `n`, unreadable
//! input).

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use symgenus::bounds::bounds_report;
use symgenus::io::{report_row, to_dot, transition_svg, CutSystemDoc, EmbeddingDoc, Verification};
use symgenus::search::{
    merge, partitions, search_partition, white_representatives, PartitionResult, MAX_N,
};
use symgenus::TransitionGraph;

/// Largest n searched without `--allow-big`.
const SEARCH_DEFAULT_MAX: u64 = 8;

#[derive(Parser, Debug)]
#[command(
    name = "symgenus",
    version,
    about = "Minimum-genus cyclically symmetric embeddings of K_{n,n} with a Hamiltonian face"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the closed-form genus bounds for a range of n (n >= 2).
    Bounds {
        /// A single n or an inclusive range `A..B`.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build the optimal symmetric embedding of K_{n,n} (n >= 3).
    Construct {
        #[arg(long)]
        n: u64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the 3-dimensional rotationally symmetric cut system (n >= 2).
    Construct3d {
        #[arg(long)]
        n: u64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute and check every claim of an embedding file.
    Verify {
        file: PathBuf,
        /// Print the checks as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Recompute and check every claim of a cut-system file.
    Verify3d {
        file: PathBuf,
        /// Print the checks as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive minimum-genus search over rotation pairs of D_n (3 <= n <= 8, 9 with --allow-big).
    Search {
        #[arg(long)]
        n: u64,
        /// Do not require a Hamiltonian face.
        #[arg(long)]
        no_ham: bool,
        /// Disable symmetry reduction of the white rotation.
        #[arg(long)]
        no_reduce: bool,
        /// Worker threads.
        #[arg(long, env = "SYMGENUS_JOBS")]
        jobs: Option<usize>,
        /// JSON-lines file recording finished partitions; an existing file
        /// for the same parameters is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Permit n = 9.
        #[arg(long)]
        allow_big: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a graph as DOT or a transition graph as SVG.
    Export {
        /// Embedding or cut-system file.
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        input: Option<PathBuf>,
        /// Use the optimal construction for this n instead of a file.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// For DOT: export the derived K_{n,n} instead of the base dipole.
        #[arg(long)]
        derived: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summary table: bounds against constructions and search (n >= 3).
    Report {
        /// A single n or an inclusive range `A..B`.
        #[arg(long, default_value = "3..20")]
        n: String,
        /// Run the exhaustive search for n up to this value.
        #[arg(long, default_value_t = 7)]
        search_up_to: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Dot,
    Svg,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    /// Exit 2.
    Usage(anyhow::Error),
    /// Exit 1.
    Check(anyhow::Error),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn check(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Check(e.into())
}

/// Library errors on user-supplied `n` are usage errors; anything else is
/// a failed check.
fn lib(e: symgenus::Error) -> Failure {
    match e {
        symgenus::Error::Domain(_) => usage(e),
        _ => check(e),
    }
}

fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<u64>> {
    let s = s.trim();
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u64 = a
        .trim()
        .parse()
        .with_context(|| format!("bad range start in {s:?}"))?;
    let b: u64 = b
        .trim()
        .parse()
        .with_context(|| format!("bad range end in {s:?}"))?;
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok(a..=b)
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    serde_json::from_str(&text)
        .with_context(|| format!("{} is not JSON", path.display()))
        .map_err(usage)
}

fn parse_doc<T: for<'de> Deserialize<'de>>(
    v: Value,
    path: &Path,
    what: &str,
) -> Result<T, Failure> {
    serde_json::from_value(v)
        .with_context(|| format!("{} is not a valid {what}", path.display()))
        .map_err(check)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let cells: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn pair(v: Option<(u64, u64)>) -> String {
    v.map_or_else(|| "-".into(), |(a, b)| format!("({a},{b})"))
}

fn snake<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn cmd_bounds(n: &str, format: Format) -> Outcome {
    let range = parse_range(n).map_err(usage)?;
    let rows = range
        .map(bounds_report)
        .collect::<symgenus::Result<Vec<_>>>()
        .map_err(lib)?;
    let text = match format {
        Format::Json => to_json(&rows),
        Format::Table => table(
            &[
                "n",
                "L_C",
                "branch",
                "L_C*",
                "attainable",
                "L~_C*",
                "p1",
                "(p,q)",
                "(g1,g2)",
            ],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.l_c.to_string(),
                        snake(&r.branch_l_c),
                        r.l_c_star.to_string(),
                        r.l_c_star_attainable.to_string(),
                        r.l_c_star_tilde.to_string(),
                        opt(r.p1),
                        pair(r.pq),
                        pair(r.g1g2),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(None, &text)
}

fn cmd_construct(n: u64, out: Option<&Path>) -> Outcome {
    let doc = EmbeddingDoc::optimal(n).map_err(lib)?;
    emit(out, &to_json(&doc))?;
    if out.is_some() {
        eprintln!(
            "n={n} genus={} method={}",
            opt(doc.claims.genus),
            doc.method.map(|m| snake(&m)).unwrap_or_default()
        );
    }
    Ok(())
}

fn cmd_construct3d(n: u64, out: Option<&Path>) -> Outcome {
    let doc = CutSystemDoc::construct(n).map_err(lib)?;
    emit(out, &to_json(&doc))?;
    if out.is_some() {
        eprintln!(
            "n={n} genus={} arcs={}",
            opt(doc.claims.genus),
            opt(doc.claims.arcs)
        );
    }
    if let Some(note) = &doc.note {
        eprintln!("note: {note}");
    }
    Ok(())
}

fn report_verification(v: &Verification, json: bool) -> Outcome {
    if json {
        print!("{}", to_json(v));
    } else {
        for c in &v.checks {
            if c.ok {
                println!("ok        {}: {}", c.name, c.computed);
            } else {
                println!(
                    "MISMATCH  {}: claimed {}, computed {}",
                    c.name, c.claimed, c.computed
                );
            }
        }
    }
    if v.ok {
        Ok(())
    } else {
        let names: Vec<&str> = v.mismatches().map(|c| c.name.as_str()).collect();
        Err(check(anyhow!("verification failed: {}", names.join(", "))))
    }
}

fn cmd_verify(file: &Path, json: bool) -> Outcome {
    let doc: EmbeddingDoc = parse_doc(read_json(file)?, file, "embedding document")?;
    report_verification(&doc.verify().map_err(check)?, json)
}

fn cmd_verify3d(file: &Path, json: bool) -> Outcome {
    let doc: CutSystemDoc = parse_doc(read_json(file)?, file, "cut-system document")?;
    report_verification(&doc.verify().map_err(check)?, json)
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct CheckpointHeader {
    n: u64,
    require_ham: bool,
    reduce: bool,
}

/// Reads finished partitions from a checkpoint, or creates it.
fn open_checkpoint(
    path: &Path,
    header: &CheckpointHeader,
) -> anyhow::Result<(File, Vec<PartitionResult>)> {
    let mut done = Vec::new();
    if path.exists() {
        let mut lines = BufReader::new(File::open(path)?).lines();
        let first = lines.next().transpose()?.unwrap_or_default();
        let found: CheckpointHeader = serde_json::from_str(&first)
            .with_context(|| format!("{} has no checkpoint header", path.display()))?;
        if &found != header {
            bail!(
                "checkpoint {} was written for {found:?}, not {header:?}",
                path.display()
            );
        }
        for line in lines {
            let line = line?;
            // A torn final line from an interrupted run is dropped and recomputed.
            if let Ok(r) = serde_json::from_str::<PartitionResult>(&line) {
                done.push(r);
            }
        }
        // Rewrite without any torn line so appends stay line-aligned.
        let mut f = File::create(path)?;
        writeln!(f, "{}", serde_json::to_string(header)?)?;
        for r in &done {
            writeln!(f, "{}", serde_json::to_string(r)?)?;
        }
        Ok((f, done))
    } else {
        let mut f = OpenOptions::new().create_new(true).write(true).open(path)?;
        writeln!(f, "{}", serde_json::to_string(header)?)?;
        Ok((f, done))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    n: u64,
    no_ham: bool,
    no_reduce: bool,
    jobs: Option<usize>,
    checkpoint: Option<&Path>,
    allow_big: bool,
    out: Option<&Path>,
) -> Outcome {
    let limit = if allow_big { MAX_N } else { SEARCH_DEFAULT_MAX };
    if !(3..=limit).contains(&n) {
        let hint = if n == MAX_N {
            " (n = 9 needs --allow-big)"
        } else {
            ""
        };
        return Err(usage(anyhow!(
            "search supports 3 <= n <= {limit}, got {n}{hint}"
        )));
    }
    let (require_ham, reduce) = (!no_ham, !no_reduce);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage(anyhow!("--jobs must be positive")));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(usage)?;
    let nu = n as usize;
    let header = CheckpointHeader {
        n,
        require_ham,
        reduce,
    };
    let (writer, mut results) = match checkpoint {
        Some(p) => {
            let (f, done) = open_checkpoint(p, &header).map_err(usage)?;
            (Some(Mutex::new(f)), done)
        }
        None => (None, Vec::new()),
    };
    let whites = white_representatives(nu, reduce);
    let todo: Vec<_> = partitions(nu, reduce)
        .into_iter()
        .filter(|p| !results.iter().any(|r| r.partition == *p))
        .collect();
    let total = todo.len() + results.len();
    if !results.is_empty() {
        eprintln!(
            "resuming: {} of {total} partitions already done",
            results.len()
        );
    }
    let started = Instant::now();
    let finished = std::sync::atomic::AtomicUsize::new(results.len());
    let fresh: Vec<PartitionResult> = pool.install(|| {
        todo.into_par_iter()
            .map(|p| {
                let r = search_partition(nu, &whites, p, require_ham);
                if let Some(w) = &writer {
                    let mut f = w.lock().expect("checkpoint writer");
                    let _ = writeln!(f, "{}", serde_json::to_string(&r).expect("serialisable"));
                    let _ = f.flush();
                }
                let k = finished.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                if checkpoint.is_some() && (k % 64 == 0 || k == total) {
                    eprintln!(
                        "progress: {k}/{total} partitions, {:.1}s",
                        started.elapsed().as_secs_f64()
                    );
                }
                r
            })
            .collect()
    });
    results.extend(fresh);
    results.sort_by_key(|r| r.partition);
    let res = merge(n, require_ham, reduce, &results);
    emit(out, &to_json(&res))
}

fn cmd_export(
    input: Option<&Path>,
    n: Option<u64>,
    format: ExportFormat,
    derived: bool,
    out: Option<&Path>,
) -> Outcome {
    enum Loaded {
        Embedding(EmbeddingDoc),
        Cut(CutSystemDoc),
    }
    let loaded = match (input, n) {
        (Some(p), _) => {
            let v = read_json(p)?;
            if v.get("cut_system").is_some() {
                Loaded::Cut(parse_doc(v, p, "cut-system document")?)
            } else {
                Loaded::Embedding(parse_doc(v, p, "embedding document")?)
            }
        }
        (None, Some(n)) => Loaded::Embedding(EmbeddingDoc::optimal(n).map_err(lib)?),
        (None, None) => return Err(usage(anyhow!("give --input or --n"))),
    };
    let text = match (format, &loaded) {
        (ExportFormat::Dot, Loaded::Embedding(d)) => {
            let vg = &d.voltage_graph;
            if derived {
                to_dot(&vg.derive_graph(), None)
            } else {
                to_dot(vg.base().graph(), Some(vg.alpha()))
            }
        }
        (ExportFormat::Dot, Loaded::Cut(d)) => {
            let cs = &d.cut_system;
            let vg = cs.voltage_graph().map_err(check)?;
            if derived {
                to_dot(&vg.derive_graph(), None)
            } else {
                to_dot(cs.base.graph(), Some(vg.alpha()))
            }
        }
        (ExportFormat::Svg, Loaded::Embedding(d)) => {
            let tg = match &d.transition {
                Some(tg) => tg.clone(),
                None => TransitionGraph::from_voltage(&d.voltage_graph).map_err(check)?,
            };
            transition_svg(&tg)
        }
        (ExportFormat::Svg, Loaded::Cut(d)) => {
            let vg = d.cut_system.voltage_graph().map_err(check)?;
            transition_svg(&TransitionGraph::from_voltage(&vg).map_err(check)?)
        }
    };
    emit(out, &text)
}

fn cmd_report(n: &str, search_up_to: u64, format: Format) -> Outcome {
    let range = parse_range(n).map_err(usage)?;
    if *range.start() < 3 {
        return Err(usage(anyhow!("report needs n >= 3")));
    }
    if search_up_to > SEARCH_DEFAULT_MAX {
        return Err(usage(anyhow!(
            "--search-up-to is limited to {SEARCH_DEFAULT_MAX}"
        )));
    }
    let rows = range
        .map(|n| report_row(n, search_up_to))
        .collect::<symgenus::Result<Vec<_>>>()
        .map_err(lib)?;
    let text = match format {
        Format::Json => to_json(&rows),
        Format::Table => table(
            &[
                "n",
                "L_C",
                "construction",
                "search",
                "L_C*",
                "3d construction",
                "status",
            ],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.l_c.to_string(),
                        r.construction_genus.to_string(),
                        opt(r.search_min_genus),
                        r.l_c_star.to_string(),
                        r.construction_3d_genus.to_string(),
                        if r.consistent() { "ok" } else { "MISMATCH" }.into(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(None, &text)?;
    if rows.iter().all(|r| r.consistent()) {
        Ok(())
    } else {
        Err(check(anyhow!("some rows disagree with the closed forms")))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Bounds { n, format } => cmd_bounds(&n, format),
        Command::Construct { n, out } => cmd_construct(n, out.as_deref()),
        Command::Construct3d { n, out } => cmd_construct3d(n, out.as_deref()),
        Command::Verify { file, json } => cmd_verify(&file, json),
        Command::Verify3d { file, json } => cmd_verify3d(&file, json),
        Command::Search {
            n,
            no_ham,
            no_reduce,
            jobs,
            checkpoint,
            allow_big,
            out,
        } => cmd_search(
            n,
            no_ham,
            no_reduce,
            jobs,
            checkpoint.as_deref(),
            allow_big,
            out.as_deref(),
        ),
        Command::Export {
            input,
            n,
            format,
            derived,
            out,
        } => cmd_export(input.as_deref(), n, format, derived, out.as_deref()),
        Command::Report {
            n,
            search_up_to,
            format,
        } => cmd_report(&n, search_up_to, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("usage error: {e:#}");
            ExitCode::from(2)
        }
    }
}

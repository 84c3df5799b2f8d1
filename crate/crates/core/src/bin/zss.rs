//! `zss`: enumerate, classify and verify zero-sum-square-free matrices.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use zss::search::{enumerate, DiscConstraint, Emit, EnumerationQuery, EnumerationReport, DEFAULT_PREFIX_CELLS};
use zss::verify::{self, Status, VerifyConfig};
use zss::{canonical_form, classify_split, BinaryMatrix, SplitClassifier, SplitDescriptor};

#[derive(Parser)]
#[command(
    name = "zss",
    version,
    about = "Exact search over zero-sum-square-free {-1,+1} matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every zero-sum-square-free matrix meeting a discrepancy constraint.
    #[command(group(ArgGroup::new("constraint").required(true).args(["disc", "max_abs_disc"])))]
    Enumerate {
        /// Number of rows (at most 64).
        #[arg(long)]
        rows: usize,
        /// Number of columns (at most 64).
        #[arg(long)]
        cols: usize,
        /// Exact discrepancy.
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
        /// Bound on the absolute discrepancy.
        #[arg(long)]
        max_abs_disc: Option<u64>,
        /// Print only the summary report.
        #[arg(long)]
        count_only: bool,
        /// Reduce the results to one canonical representative per symmetry class.
        #[arg(long)]
        canonical: bool,
        /// Keep matrices that contain zero-sum squares too.
        #[arg(long)]
        allow_squares: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads [default: available cores].
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
        /// Leading cells expanded into parallel subtrees (capped at one row).
        #[arg(long, default_value_t = DEFAULT_PREFIX_CELLS)]
        prefix_cells: usize,
    },
    /// Run verification checks: lemma3, classes, theorem5, observation1,
    /// corollary2, claim8, parabola, lemma4, lemma5, or all.
    Verify {
        #[arg(value_parser = check_name)]
        check: String,
        /// Side for the theorem5 check (default: every side within the budget).
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..))]
        n: Option<u32>,
        /// Largest side run by size-graded checks.
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N as u32, conflicts_with = "full")]
        max_n: u32,
        /// Include the 10x10 through 11x12 shapes.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads [default: available cores].
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
    },
    /// Report discrepancy, zero-sum squares and split structure of a matrix file.
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn check_name(s: &str) -> Result<String, String> {
    if s == "all" || verify::CHECK_NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown check; expected one of {} or all",
            verify::CHECK_NAMES.join(", ")
        ))
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Serialize)]
struct MatrixRecord<'a> {
    rows: usize,
    cols: usize,
    disc: i64,
    split: Option<SplitDescriptor>,
    entries: &'a [String],
}

fn write_matrix(
    out: &mut impl Write,
    m: &BinaryMatrix,
    split: Option<SplitDescriptor>,
    format: Format,
    first: bool,
) -> io::Result<()> {
    match format {
        Format::Text => {
            if !first {
                out.write_all(b"\n")?;
            }
            out.write_all(m.to_text().as_bytes())
        }
        Format::Jsonl => {
            let entries = m.row_strings();
            let rec = MatrixRecord {
                rows: m.rows(),
                cols: m.cols(),
                disc: m.discrepancy(),
                split,
                entries: &entries,
            };
            serde_json::to_writer(&mut *out, &rec)?;
            out.write_all(b"\n")
        }
    }
}

fn constraint_text(c: DiscConstraint) -> String {
    match c {
        DiscConstraint::Exact(d) => format!("disc = {d}"),
        DiscConstraint::AbsAtMost(b) => format!("|disc| <= {b}"),
    }
}

fn write_report(
    out: &mut impl Write,
    report: &EnumerationReport,
    constraint: DiscConstraint,
    canonical: Option<usize>,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "shape {}x{}", report.rows, report.cols)?;
            writeln!(out, "constraint {}", constraint_text(constraint))?;
            writeln!(out, "total {}", report.total)?;
            writeln!(out, "split {}", report.split_count)?;
            writeln!(out, "exceptional {}", report.exceptional_count)?;
            if let Some(c) = canonical {
                writeln!(out, "canonical_classes {c}")?;
            }
            for (d, c) in &report.per_disc {
                writeln!(out, "disc {d} {c}")?;
            }
            Ok(())
        }
        Format::Jsonl => {
            let per_disc: serde_json::Map<String, serde_json::Value> =
                report.per_disc.iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
            let mut rec = json!({
                "rows": report.rows,
                "cols": report.cols,
                "constraint": constraint,
                "total": report.total,
                "split_count": report.split_count,
                "exceptional_count": report.exceptional_count,
                "per_disc": per_disc,
            });
            if let Some(c) = canonical {
                rec["canonical_classes"] = json!(c);
            }
            serde_json::to_writer(&mut *out, &rec)?;
            out.write_all(b"\n")
        }
    }
}

enum Failure {
    Usage(String),
    Checks,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<zss::Error> for Failure {
    fn from(e: zss::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    rows: usize,
    cols: usize,
    constraint: DiscConstraint,
    count_only: bool,
    canonical: bool,
    allow_squares: bool,
    format: Format,
    jobs: usize,
    prefix_cells: usize,
) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut query = EnumerationQuery::new(rows, cols, constraint)
        .require_zssf(!allow_squares)
        .jobs(jobs)
        .prefix_cells(prefix_cells);
    let classifier = SplitClassifier::new(rows, cols)?;

    if canonical {
        let mut reps = std::collections::BTreeSet::new();
        let report = enumerate(&query, |m| {
            reps.insert(canonical_form(m));
        })?;
        if count_only {
            write_report(&mut out, &report, constraint, Some(reps.len()), format)?;
        } else {
            for (k, m) in reps.iter().enumerate() {
                write_matrix(&mut out, m, classifier.classify(m), format, k == 0)?;
            }
        }
        eprintln!("elapsed_ms {}", report.elapsed.as_millis());
    } else if count_only {
        query.emit = Emit::CountOnly;
        let report = enumerate(&query, |_| {})?;
        write_report(&mut out, &report, constraint, None, format)?;
        eprintln!("elapsed_ms {}", report.elapsed.as_millis());
    } else {
        let mut first = true;
        let mut io_err = None;
        let report = enumerate(&query, |m| {
            if io_err.is_none() {
                if let Err(e) = write_matrix(&mut out, m, classifier.classify(m), format, first) {
                    io_err = Some(e);
                }
            }
            first = false;
        })?;
        if let Some(e) = io_err {
            return Err(e.into());
        }
        eprintln!("elapsed_ms {}", report.elapsed.as_millis());
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(check: &str, n: Option<usize>, cfg: VerifyConfig, format: Format) -> Result<(), Failure> {
    let outcomes = verify::run_check(check, &cfg, n)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    for o in &outcomes {
        match o.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skipped => skipped += 1,
        }
        match format {
            Format::Text => {
                writeln!(
                    out,
                    "{:<7} {:<16} {:>8} ms  {}",
                    o.status.as_str(),
                    o.name,
                    o.duration.as_millis(),
                    serde_json::Value::Object(o.details.clone())
                )?;
                for w in &o.witnesses {
                    if o.status == Status::Fail {
                        write!(out, "{}", w.to_text())?;
                    }
                }
            }
            Format::Jsonl => {
                serde_json::to_writer(&mut out, o).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
    }
    if format == Format::Text {
        writeln!(out, "{pass} passed, {fail} failed, {skipped} skipped")?;
    }
    out.flush()?;
    if fail > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn cmd_classify(path: &PathBuf, format: Format) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let m = BinaryMatrix::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))?;
    let disc = m.discrepancy();
    let witness = m.find_zero_sum_square();
    let split = classify_split(&m);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => {
            let squares = match witness {
                None => "zssf".to_string(),
                Some(q) => format!("zero-sum square at {q}"),
            };
            let split = split.map_or("non-split".to_string(), |d| d.to_string());
            writeln!(out, "disc {disc}, {squares}, {split}")?;
        }
        Format::Jsonl => {
            let rec = json!({
                "rows": m.rows(),
                "cols": m.cols(),
                "disc": disc,
                "zssf": witness.is_none(),
                "witness": witness.map(|q| json!({ "i": q.i, "j": q.j, "s": q.s })),
                "split": split,
            });
            serde_json::to_writer(&mut out, &rec).map_err(io::Error::from)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate {
            rows,
            cols,
            disc,
            max_abs_disc,
            count_only,
            canonical,
            allow_squares,
            format,
            jobs,
            prefix_cells,
        } => {
            let constraint = match (disc, max_abs_disc) {
                (Some(d), None) => DiscConstraint::Exact(d),
                (None, Some(b)) => DiscConstraint::AbsAtMost(b),
                _ => unreachable!("clap enforces exactly one constraint"),
            };
            let jobs = jobs.map_or_else(default_jobs, |j| j as usize);
            cmd_enumerate(
                rows,
                cols,
                constraint,
                count_only,
                canonical,
                allow_squares,
                format,
                jobs,
                prefix_cells,
            )
        }
        Command::Verify {
            check,
            n,
            max_n,
            full,
            format,
            jobs,
        } => {
            let cfg = VerifyConfig {
                jobs: jobs.map_or_else(default_jobs, |j| j as usize),
                max_n: if full { verify::FULL_MAX_N } else { max_n as usize },
            };
            cmd_verify(&check, n.map(|n| n as usize), cfg, format)
        }
        Command::Classify { path, format } => cmd_classify(&path, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use mgcount::bench::{run_row, Suite};
use mgcount::oracle::Oracle;
use mgcount::report::{write_records, Format, OutputRecord};
use mgcount::sci::Sci3;
use mgcount::verify::{self, VerifyOptions};
use mgcount::{Error, FreeCounter};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "mgcount", version, about = "Count tree-like multigraphs up to isomorphism")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count multigraphs with n vertices and delta multiple edges.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        /// Count rooted multigraphs instead of free ones.
        #[arg(long)]
        rooted: bool,
        /// Print only the exact decimal count.
        #[arg(long, conflicts_with = "sci")]
        exact: bool,
        /// Print only the 3-significant-figure form.
        #[arg(long)]
        sci: bool,
    },
    /// Free counts for every 1 <= n <= n-max, 0 <= delta <= delta-max.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        delta_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Check the counting tables against brute-force enumeration.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        delta_max: usize,
        /// Corrupt one table cell before checking (exercises the failure path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Recompute the published reference rows and compare.
    Bench {
        #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
        suite: SuiteArg,
        /// Compare totals built with the overcounting bicentroid sum that
        /// the published values were computed with.
        #[arg(long)]
        as_published: bool,
    },
    /// List the canonical codes of all rooted classes (brute force).
    Dump {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table1,
    Quick,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        // downstream closed early, e.g. `| head`
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mgcount: {e}");
            ExitCode::from(match e {
                Failure::Lib(Error::Domain(_)) => EXIT_USAGE,
                Failure::Lib(Error::Resource { .. } | Error::Budget { .. }) => EXIT_RESOURCE,
                Failure::Lib(Error::Internal(_)) | Failure::Io(_) => EXIT_MISMATCH,
            })
        }
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Count {
            n,
            delta,
            rooted,
            exact,
            sci,
        } => {
            let counter = FreeCounter::new(n, delta)?;
            let count = if rooted {
                counter.rooted(n, delta)?
            } else {
                counter.free(n, delta)?.total
            };
            let s = Sci3::from_count(&count);
            match (exact, sci) {
                (true, _) => writeln!(out, "{count}")?,
                (_, true) => writeln!(out, "{s}")?,
                _ => writeln!(out, "count_exact={count}\ncount_sci={s}")?,
            }
        }
        Command::Table {
            n_max,
            delta_max,
            format,
        } => {
            if n_max == 0 {
                return Err(Error::Domain("--n-max must be at least 1".into()).into());
            }
            let start = Instant::now();
            let counter = FreeCounter::new(n_max, delta_max)?;
            eprintln!("table fill: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
            let mut records = Vec::new();
            for n in 1..=n_max {
                for delta in 0..=delta_max {
                    let t = Instant::now();
                    let total = counter.free(n, delta)?.total;
                    records.push(OutputRecord::new(n, delta, &total, t.elapsed().as_secs_f64() * 1e3));
                }
            }
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
                FormatArg::Md => Format::Markdown,
            };
            write_records(&mut out, &records, format)?;
        }
        Command::Verify {
            n_max,
            delta_max,
            inject_fault,
        } => {
            let report = verify::run(VerifyOptions {
                n_max,
                delta_max,
                inject_fault,
            })?;
            writeln!(
                out,
                "checks={} classes={} failures={}",
                report.checks, report.classes, report.failures
            )?;
            if let Some(first) = &report.first_failure {
                writeln!(out, "FAIL first counterexample: {first}")?;
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
            writeln!(out, "PASS")?;
        }
        Command::Bench { suite, as_published } => {
            let suite = match suite {
                SuiteArg::Table1 => Suite::Table1,
                SuiteArg::Quick => Suite::Quick,
            };
            writeln!(out, "n,delta,count_sci,published,millis,published_seconds,status")?;
            let mut mismatches = 0;
            for row in suite.rows() {
                let o = run_row(row)?;
                let (sci, ok) = if as_published {
                    (o.as_published_sci.as_str(), o.as_published_matches)
                } else {
                    (o.record.count_sci.as_str(), o.matches)
                };
                mismatches += usize::from(!ok);
                writeln!(
                    out,
                    "{},{},{},{},{:.3},{},{}",
                    row.n,
                    row.delta,
                    sci,
                    row.published,
                    o.record.millis,
                    row.published_seconds,
                    if ok { "match" } else { "MISMATCH" }
                )?;
                out.flush()?;
            }
            if mismatches > 0 {
                eprintln!("{mismatches} row(s) differ from the published values");
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Dump { n, delta } => {
            let oracle = Oracle::build(n, delta)?;
            oracle.dump(n, delta, &mut out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

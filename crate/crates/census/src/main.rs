//! Command-line driver: run the census, emit the tables, look up curves,
//! and run the verification suite.
//!
//! Exit codes: 0 success, 1 usage or I/O failure, 2 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genus4_census::census::{self, CensusOptions, CensusResult};
use genus4_census::record::{CurveRecord, Row};
use genus4_census::report;
use genus4_census::trig::VALIDATED_KMAX;
use genus4_census::verify;
use genus4_census::zeta;

#[derive(Parser)]
#[command(
    name = "genus4-census",
    about = "Isomorphism census of genus-4 curves over the field with two elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hyp,
    Trig,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    /// Singular-point search depth (validated default: 6).
    #[arg(long, default_value_t = VALIDATED_KMAX, value_parser = clap::value_parser!(u32).range(3..=8))]
    kmax: u32,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the census and write curves.jsonl, lpolys.csv, summary.txt.
    Run {
        #[arg(long, value_enum, default_value_t = Family::All)]
        family: Family,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Also write curves.csv when set to csv.
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Emit the five summary tables from an existing curves.jsonl.
    Tables {
        /// Census database to read.
        #[arg(long, default_value = "out/curves.jsonl")]
        input: PathBuf,
        /// Output directory for table files.
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Print census rows matching exact filters, as JSON lines.
    Lookup {
        #[arg(long, default_value = "out/curves.jsonl")]
        input: PathBuf,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Quadric label (trigonal rows): q1, q2 or q3.
        #[arg(long)]
        quadric: Option<String>,
        /// Point counts N_k, e.g. --n1 8.
        #[arg(long)]
        n1: Option<i64>,
        #[arg(long)]
        n2: Option<i64>,
        #[arg(long)]
        n3: Option<i64>,
        #[arg(long)]
        n4: Option<i64>,
        #[arg(long)]
        n5: Option<i64>,
        /// Degree-point counts a_k, e.g. --a3 8.
        #[arg(long)]
        a1: Option<i64>,
        #[arg(long)]
        a2: Option<i64>,
        #[arg(long)]
        a3: Option<i64>,
        #[arg(long)]
        a4: Option<i64>,
        #[arg(long)]
        a5: Option<i64>,
        /// Comma-separated prefix of (a_1, a_2, ...), e.g. --a 0,0,0,1.
        #[arg(long)]
        a: Option<String>,
        /// Comma-separated prefix of (N_1, N_2, ...).
        #[arg(long)]
        n: Option<String>,
    },
    /// Recompute everything and run the acceptance checks.
    Verify {
        #[command(flatten)]
        compute: ComputeArgs,
        /// Optional curves.jsonl to cross-check against the recomputation.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // Ignore the error if a pool already exists (tests, repeated calls).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run_command(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Run { family, compute, out, format } => {
            init_threads(compute.threads);
            // Fail before computing anything if the output directory is
            // unusable; no partial files either way (writes are atomic).
            fs::create_dir_all(&out)
                .map_err(|e| format!("cannot create {}: {e}", out.display()))?;
            let probe = out.join(".write-probe");
            fs::write(&probe, b"")
                .map_err(|e| format!("cannot write to {}: {e}", out.display()))?;
            let _ = fs::remove_file(&probe);
            let opts = CensusOptions {
                hyperelliptic: !matches!(family, Family::Trig),
                trigonal: !matches!(family, Family::Hyp),
                kmax: compute.kmax,
            };
            let started = Instant::now();
            let result = census::run(opts)?;
            let elapsed = started.elapsed();
            let with_csv = matches!(format, Format::Csv);
            report::write_run_files(&out, &result, elapsed, with_csv)?;
            print!("{}", report::summary_text(&result, elapsed));
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables { input, out } => {
            let result = load_database(&input)?;
            let t = report::tables(&result);
            let written = report::write_table_files(&out, &t)?;
            for path in written {
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lookup {
            input,
            family,
            quadric,
            n1,
            n2,
            n3,
            n4,
            n5,
            a1,
            a2,
            a3,
            a4,
            a5,
            a,
            n,
        } => {
            let result = load_database(&input)?;
            let a_prefix = a.map(|s| parse_list(&s)).transpose()?;
            let n_prefix = n.map(|s| parse_list(&s)).transpose()?;
            let n_filters = [n1, n2, n3, n4, n5];
            let a_filters = [a1, a2, a3, a4, a5];
            for rec in &result.records {
                let family_ok = match family {
                    Some(Family::Hyp) => rec.is_hyperelliptic(),
                    Some(Family::Trig) => !rec.is_hyperelliptic(),
                    _ => true,
                };
                let quadric_ok = match &quadric {
                    Some(label) => rec.quadric_label() == Some(label.as_str()),
                    None => true,
                };
                let exact_ok = n_filters
                    .iter()
                    .enumerate()
                    .all(|(i, f)| f.is_none_or(|v| rec.n[i] == v))
                    && a_filters
                        .iter()
                        .enumerate()
                        .all(|(i, f)| f.is_none_or(|v| rec.a[i] == v));
                let prefix_ok = a_prefix
                    .as_deref()
                    .is_none_or(|p| rec.a.starts_with(p))
                    && n_prefix.as_deref().is_none_or(|p| rec.n.starts_with(p));
                if family_ok && quadric_ok && exact_ok && prefix_ok {
                    println!("{}", serde_json::to_string(&rec.to_row())?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { compute, input } => {
            init_threads(compute.threads);
            if compute.kmax < VALIDATED_KMAX {
                println!(
                    "WARN config: kmax {} is below the validated bound {}; \
                     verification uses the validated depth",
                    compute.kmax, VALIDATED_KMAX
                );
            }
            let kmax = compute.kmax.max(VALIDATED_KMAX);
            let result = census::run(CensusOptions {
                hyperelliptic: true,
                trigonal: true,
                kmax,
            })?;
            let db = input.filter(|p| p.exists());
            let checks = verify::run_all(&result, kmax, db.as_deref());
            let mut failed = 0;
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{status} {:>3} {}", c.id, c.name);
                } else {
                    println!("{status} {:>3} {} — {}", c.id, c.name, c.detail);
                }
                if !c.pass {
                    failed += 1;
                }
            }
            if failed > 0 {
                println!("{failed} of {} checks failed", checks.len());
                return Ok(ExitCode::from(2));
            }
            println!("all {} checks passed", checks.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>, Box<dyn std::error::Error>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(Into::into))
        .collect()
}

// Rebuild a CensusResult from a database file; isogeny data is re-derived
// from the L-polynomials, which reproduces the stored ids.
fn load_database(path: &PathBuf) -> Result<CensusResult, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut records: Vec<CurveRecord> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Row = serde_json::from_str(line)
            .map_err(|e| format!("{}:{}: {e}", path.display(), lineno + 1))?;
        let rec = CurveRecord::from_row(&row)
            .ok_or_else(|| format!("{}:{}: malformed row", path.display(), lineno + 1))?;
        records.push(rec);
    }
    let iso_classes = zeta::isogeny_group(&mut records);
    Ok(CensusResult { records, iso_classes })
}

//! `waringid`: decide whether a Waring decomposition of a plane form is
//! provably unique, inspect supports, generate instances, and compare
//! the cost of the two certificates.
//!
//! Results go to standard output as JSON (or CSV for `bench`);
//! diagnostics go to standard error. Exit codes for `check`:
//! 0 identifiable, 2 inconclusive, 3 rank-deficient, 1 any error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use waring::bench::{bench, records_to_csv, summary_table};
use waring::gen::{gen_double_decomposition_fixture, gen_instance, Position};
use waring::hilbert::{hilbert_profile, PointSet};
use waring::io::{
    baseline_json, kruskal_json, parse_instance, serialize_instance, terracini_json,
    verdict_document,
};
use waring::kruskal::{kruskal_rank_d, baseline_check};
use waring::pipeline::{identify_with, VerdictKind};
use waring::terracini::terracini_dimension;
use waring::{Error, Instance};

#[derive(Parser)]
#[command(name = "waringid", version, about = "Identifiability tests for Waring decompositions of plane forms")]
struct Cli {
    /// Attach position diagnostics (collinear/conic/cubic scans) to verdicts
    #[arg(long, global = true)]
    diagnostics: bool,
    /// Reject zero coefficients already at parse time
    #[arg(long, global = true)]
    strict: bool,
    /// Suppress progress and summary output on standard error
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identifiability pipeline on an instance file
    Check { file: PathBuf },
    /// Hilbert function and first difference of the instance's support
    Hilbert {
        file: PathBuf,
        /// Cap the computed degree range
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Kruskal rank of the support's degree-d Veronese image
    Kruskal {
        file: PathBuf,
        /// Veronese degree
        #[arg(long)]
        d: usize,
    },
    /// Terracini dimension report for the instance
    Terracini { file: PathBuf },
    /// Baseline certificate: the two Kruskal-rank conditions
    Baseline { file: PathBuf },
    /// Generate an instance file
    Gen {
        /// Degree parameter: the instance has degree 8 + 2n
        #[arg(long)]
        n: usize,
        /// Number of support points
        #[arg(long)]
        r: usize,
        /// general | collinear:S | conic:S | cubic
        #[arg(long, default_value = "general")]
        position: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Permit lengths beyond the certified range
        #[arg(long)]
        allow_out_of_range: bool,
    },
    /// Two disjoint decompositions of one form, supported on a line
    GenDouble {
        #[arg(long, default_value_t = 8)]
        d: usize,
        #[arg(long, default_value_t = 5)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Instrumented cost comparison of the two certificates
    Bench {
        #[arg(long = "n-list", value_delimiter = ',', default_value = "0")]
        n_list: Vec<usize>,
        #[arg(long = "r-list", value_delimiter = ',', default_value = "8,9,10,11")]
        r_list: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the CSV to a file instead of standard output
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_position(text: &str) -> Result<Position, Error> {
    let cleaned = text.trim().to_ascii_lowercase();
    let (name, arg) = match cleaned.split_once([':', '(']) {
        Some((name, rest)) => (name.trim(), Some(rest.trim_end_matches(')').trim())),
        None => (cleaned.as_str(), None),
    };
    let count = |arg: Option<&str>| -> Result<usize, Error> {
        arg.ok_or_else(|| Error::InvalidRequest(format!("{name} needs a count, e.g. {name}:5")))?
            .parse()
            .map_err(|_| Error::InvalidRequest(format!("bad count in position {text:?}")))
    };
    match name {
        "general" => Ok(Position::General),
        "cubic" => Ok(Position::Cubic),
        "collinear" => Ok(Position::Collinear(count(arg)?)),
        "conic" => Ok(Position::Conic(count(arg)?)),
        other => Err(Error::InvalidRequest(format!("unknown position {other:?}"))),
    }
}

fn load_instance(path: &PathBuf, strict: bool) -> Result<Instance, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        location: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_instance(&text, strict)
}

fn support(inst: &Instance) -> Result<PointSet, Error> {
    PointSet::new(inst.points().to_vec())
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable document"));
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { file } => {
            let inst = load_instance(&file, cli.strict)?;
            let verdict = identify_with(&inst, cli.diagnostics)?;
            if !cli.quiet {
                for note in &verdict.notes {
                    eprintln!("note: {note}");
                }
            }
            emit(&verdict_document(&verdict));
            Ok(match verdict.kind {
                VerdictKind::IdentifiableSmallRank | VerdictKind::IdentifiableTerracini => {
                    ExitCode::SUCCESS
                }
                VerdictKind::Inconclusive => ExitCode::from(2),
                VerdictKind::RankDeficient => ExitCode::from(3),
            })
        }
        Command::Hilbert { file, dmax } => {
            let inst = load_instance(&file, cli.strict)?;
            let profile = hilbert_profile(&support(&inst)?, dmax);
            emit(&serde_json::json!({
                "ell": profile.ell(),
                "h": profile.h(),
                "dh": profile.dh(),
                "stabilization_degree": profile.stabilization_degree(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Kruskal { file, d } => {
            if d == 0 {
                return Err(Error::InvalidRequest("the Veronese degree must be >= 1".into()));
            }
            let inst = load_instance(&file, cli.strict)?;
            let report = kruskal_rank_d(&support(&inst)?, d);
            emit(&kruskal_json(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Terracini { file } => {
            let inst = load_instance(&file, cli.strict)?;
            let report = terracini_dimension(&inst);
            emit(&terracini_json(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Baseline { file } => {
            let inst = load_instance(&file, cli.strict)?;
            let report = baseline_check(&inst)?;
            emit(&baseline_json(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, r, position, seed, output, allow_out_of_range } => {
            let position = parse_position(&position)?;
            let inst = gen_instance(n, r, position, seed, allow_out_of_range)?;
            let text = serialize_instance(&inst)?;
            match output {
                Some(path) => {
                    fs::write(&path, text + "\n").map_err(|e| Error::Parse {
                        location: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    if !cli.quiet {
                        eprintln!("wrote {}", path.display());
                    }
                }
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GenDouble { d, r, seed } => {
            let (a, b, t) = gen_double_decomposition_fixture(d, r, seed)?;
            emit(&serde_json::json!({
                "first": serde_json::from_str::<serde_json::Value>(&serialize_instance(&a)?).unwrap(),
                "second": serde_json::from_str::<serde_json::Value>(&serialize_instance(&b)?).unwrap(),
                "form_coeffs": t.coeffs().iter().map(waring::io::scalar_string).collect::<Vec<_>>(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { n_list, r_list, trials, seed, csv } => {
            let out = bench(&n_list, &r_list, trials, seed)?;
            let table = records_to_csv(&out.records);
            match csv {
                Some(path) => {
                    fs::write(&path, &table).map_err(|e| Error::Parse {
                        location: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    if !cli.quiet {
                        eprintln!("wrote {}", path.display());
                    }
                    print!("{}", summary_table(&out));
                }
                None => {
                    print!("{table}");
                    if !cli.quiet {
                        eprint!("{}", summary_table(&out));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

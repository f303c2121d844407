use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catalan_poset::poset::export::{to_dot, to_json, Family};
use catalan_poset::verify::{run_check, Check};
use catalan_poset::{
    build_poset_p, build_poset_q, enumerate_av132, enumerate_ncp, ncp_to_perm, perm_to_ncp,
    DescentCensus, Error, NoncrossingPartition, Permutation,
};

#[derive(Parser)]
#[command(
    name = "catalan-poset",
    version,
    about = "Noncrossing partitions, 132-avoiding permutations and their posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of one family, one per line, in canonical order.
    Enumerate {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply the bijection (f: partition -> permutation) or its inverse.
    Map { direction: Direction, input: String },
    /// Export P_n or Q_n as Graphviz or JSON.
    Poset {
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run exhaustive checks; exits non-zero if any check reports a violation.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated: coarsening, ranks, lemma, selfdual, sperner, all.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Descent-set census of the 132-avoiding permutations as CSV.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ncp,
    Av132,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    F,
    Finv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(format!("i/o error: {e}"))
    }
}

fn open_output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Enumerate {
            kind,
            n,
            limit,
            output,
        } => {
            let limit = limit.unwrap_or(usize::MAX);
            let lines: Box<dyn Iterator<Item = String>> = match kind {
                Kind::Av132 => Box::new(
                    enumerate_av132(n)
                        .map_err(|e| Failure::Usage(e.to_string()))?
                        .map(|p| p.to_string()),
                ),
                Kind::Ncp => Box::new(
                    enumerate_ncp(n)
                        .map_err(|e| Failure::Usage(e.to_string()))?
                        .map(|q| q.to_string()),
                ),
            };
            let mut out = open_output(output.as_ref())?;
            for line in lines.take(limit) {
                writeln!(out, "{line}")?;
            }
            out.flush()?;
        }
        Command::Map { direction, input } => {
            let image = match direction {
                Direction::F => ncp_to_perm(&input.parse::<NoncrossingPartition>()?).to_string(),
                Direction::Finv => perm_to_ncp(&input.parse::<Permutation>()?)?.to_string(),
            };
            println!("{image}");
        }
        Command::Poset {
            family,
            n,
            format,
            output,
        } => {
            let text = match (family, format) {
                (FamilyArg::P, Format::Json) => to_json(n, Family::P, &build_poset_p(n)?),
                (FamilyArg::P, Format::Dot) => to_dot(n, Family::P, &build_poset_p(n)?),
                (FamilyArg::Q, Format::Json) => to_json(n, Family::Q, &build_poset_q(n)?),
                (FamilyArg::Q, Format::Dot) => to_dot(n, Family::Q, &build_poset_q(n)?),
            };
            let mut out = open_output(output.as_ref())?;
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
        Command::Verify { n, checks } => {
            let checks = Check::parse_list(&checks).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut all_passed = true;
            for check in checks {
                let report = run_check(check, n)?;
                eprintln!("{check}: {:.3}s", report.elapsed.as_secs_f64());
                for v in &report.violations {
                    eprintln!("  {v}");
                }
                println!("{report}");
                all_passed &= report.passed();
            }
            return Ok(all_passed);
        }
        Command::Census { n, output } => {
            let census = DescentCensus::build(n)?;
            let out = open_output(output.as_ref())?;
            census.write_csv(out)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

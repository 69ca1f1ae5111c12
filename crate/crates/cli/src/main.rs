use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyflip::budget::NODE_CAP_ENV;
use polyflip::verifier::{Claim, VerificationReport, Verifier};
use polyflip::{Budget, Error};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "polyflip",
    version,
    about = "Exact flip-graph computations on convex polygons"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest flip-graph slice (node count) that may be built.
    #[arg(long, global = true, env = NODE_CAP_ENV)]
    node_cap: Option<u128>,
    /// Largest slice on which one search per triangulation runs.
    #[arg(long, global = true)]
    sweep_cap: Option<u128>,
    /// Largest slice on which all ordered pairs are examined.
    #[arg(long, global = true)]
    pair_cap: Option<u128>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Error> {
        let mut b = Budget::default();
        if let Some(c) = self.node_cap {
            b.slice_nodes = c;
        }
        if let Some(c) = self.sweep_cap {
            b.sweep_nodes = c;
        }
        if let Some(c) = self.pair_cap {
            b.pair_nodes = c;
        }
        b.validate()?;
        Ok(b)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every triangulation of the n-gon.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Exact flip distance and one geodesic.
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
        #[arg(long)]
        u: String,
    },
    /// Eccentricity of one triangulation, with a farthest triangulation.
    Eccentricity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
    },
    /// Eccentricity of every triangulation, grouped by comb gap.
    Profile {
        #[arg(long)]
        n: usize,
        /// Also list each triangulation with its comb gap and eccentricity.
        #[arg(long)]
        per_triangulation: bool,
    },
    /// Build a witness triangulation.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Check claims exhaustively over a range of n.
    Verify {
        /// Claim to check; repeatable.
        #[arg(long, required_unless_present = "all")]
        claim: Vec<String>,
        /// Check every claim.
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// A single n, or an inclusive range such as 6..9.
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Leave elapsed times out of the reports.
        #[arg(long)]
        no_timing: bool,
    },
    /// Export the flip-graph as DOT or JSON.
    Export {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessKind {
    /// Member of the doubly supported witness set at a vertex.
    Omega {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
        #[arg(long)]
        v: u32,
    },
    /// Zigzag witness on a central triangle side.
    FarLong {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
    },
    /// Zigzag witness using the comb gap.
    FarShort {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
    },
    /// Low-degree triangulation with small eccentricity.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Central triangle of a triangulation.
    Central {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: String,
    },
}

/// How a command finished.
enum Outcome {
    Done,
    Verified(bool),
}

fn parse_range(s: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parse {
        literal: s.to_string(),
        reason: "expected N, A..B or A..=B".into(),
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else {
        (s, s)
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, Error> {
    let budget = cli.budget.budget()?;
    let format = cli.format;
    match cli.command {
        Command::Enumerate { n } => commands::enumerate(n, &budget, format, out)?,
        Command::Distance { n, t, u } => commands::distance(n, &t, &u, format, out)?,
        Command::Eccentricity { n, t } => commands::eccentricity(n, &t, &budget, format, out)?,
        Command::Profile {
            n,
            per_triangulation,
        } => commands::profile(n, per_triangulation, &budget, format, out)?,
        Command::Witness { kind } => commands::witness(kind, &budget, format, out)?,
        Command::Export { n } => commands::export(n, &budget, format, out)?,
        Command::Verify {
            claim,
            all,
            n,
            workers,
            no_timing,
        } => {
            let claims: Vec<Claim> = if all {
                Claim::ALL.to_vec()
            } else {
                claim
                    .iter()
                    .map(|c| c.parse())
                    .collect::<Result<_, Error>>()?
            };
            let ns = parse_range(&n)?;
            let mut verifier = Verifier::new(workers, budget)?;
            if no_timing {
                verifier = verifier.without_timing();
            }
            let mut reports: Vec<VerificationReport> = Vec::new();
            for &n in &ns {
                for &c in &claims {
                    reports.push(verifier.run(c, n)?);
                }
            }
            commands::write_reports(&reports, format, out)?;
            return Ok(Outcome::Verified(reports.iter().all(|r| r.is_ok())));
        }
    }
    Ok(Outcome::Done)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = run(cli, &mut sink);
    if let Err(e) = sink.flush() {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(Outcome::Done) | Ok(Outcome::Verified(true)) => ExitCode::SUCCESS,
        Ok(Outcome::Verified(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6..9").unwrap(), vec![6, 7, 8, 9]);
        assert_eq!(parse_range("6..=7").unwrap(), vec![6, 7]);
        assert_eq!(parse_range("12").unwrap(), vec![12]);
        assert!(parse_range("9..6").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

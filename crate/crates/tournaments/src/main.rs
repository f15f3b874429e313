//! Command-line front end.
//!
//! Exit codes: 0 when everything checked holds, 1 when a counterexample
//! was found, 2 for malformed input or unusable parameters.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tournaments::automorphism::automorphisms;
use tournaments::distinguishing::{check_conjecture, distinguishing_cost, CheckMode};
use tournaments::error::Error;
use tournaments::indegree::{profile, render_path};
use tournaments::paley::paley_tournament;
use tournaments::sweep::{csv_summary, method_counts, run_sweep, write_jsonl, SweepConfig};
use tournaments::tournament::{ConnectorSet, CyclicTournament, PseudoCyclicTournament};

#[derive(Parser)]
#[command(
    name = "tournaments",
    version,
    about = "Rotational tournaments, automorphism groups, and the canonical half/half labeling"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Brute,
    Certified,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> CheckMode {
        match m {
            ModeArg::Brute => CheckMode::Brute,
            ModeArg::Certified => CheckMode::Certified,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that the canonical labeling of T(2p+1; neg) is distinguishing
    Check {
        /// Half-order p; the tournament has 2p+1 vertices
        #[arg(long)]
        p: usize,
        /// Comma-separated backward connectors, e.g. 2,5,6 (empty for none)
        #[arg(long, default_value = "", allow_hyphen_values = false)]
        neg: String,
        #[arg(long, value_enum, default_value = "certified")]
        mode: ModeArg,
    },
    /// Print the automorphism group of T(2p+1; neg)
    Aut {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "")]
        neg: String,
    },
    /// Print the indegree sequence and step structure of P(p; neg)
    Profile {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "")]
        neg: String,
    },
    /// Build the quadratic-residue tournament on n vertices and check it
    Paley {
        #[arg(long)]
        n: usize,
    },
    /// Check every connector set for p in [p-min, p-max], writing JSONL
    Sweep {
        #[arg(long)]
        p_min: usize,
        #[arg(long)]
        p_max: usize,
        /// Keep one representative per converse pair
        #[arg(long)]
        dedup: bool,
        /// Worker threads (default: SWEEP_WORKERS env var, then 1)
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "certified")]
        mode: ModeArg,
        /// Allow p-max beyond the built-in limit
        #[arg(long)]
        force: bool,
        /// Also write a per-method CSV summary
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        // downstream closed the pipe (e.g. `aut ... | head`); not our error
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(err: &Box<dyn std::error::Error>) -> bool {
    err.downcast_ref::<std::io::Error>()
        .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Check { p, neg, mode } => {
            let t = cyclic(p, &neg)?;
            let order = automorphisms(t.tournament()).order();
            let res = check_conjecture(&t, mode.into());
            if res.holds {
                writeln!(out, "HOLDS ({} |Aut|={order})", res.method.name())?;
                Ok(ExitCode::SUCCESS)
            } else {
                let witness = res.witness.expect("failing check carries a witness");
                writeln!(
                    out,
                    "FAILS ({} |Aut|={order} witness={witness})",
                    res.method.name()
                )?;
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Aut { p, neg } => {
            let t = cyclic(p, &neg)?;
            let g = automorphisms(t.tournament());
            writeln!(out, "|Aut({t})| = {}", g.order())?;
            for phi in g.elements() {
                writeln!(out, "{phi}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Profile { p, neg } => {
            let neg = ConnectorSet::parse(p, &neg)?;
            let pt = PseudoCyclicTournament::new(neg)?;
            let pr = profile(&pt);
            let values: Vec<String> = pr.values().iter().map(|v| v.to_string()).collect();
            writeln!(out, "IS({pt}) = ({})", values.join(", "))?;
            let kinds: Vec<String> = pr.kinds().iter().map(|k| k.letter().to_string()).collect();
            writeln!(
                out,
                "steps: {} (ascents={}, descents={}, plateaus={})",
                kinds.join(" "),
                pr.ascents(),
                pr.descents(),
                pr.plateaus()
            )?;
            write!(out, "{}", render_path(&pr))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Paley { n } => {
            let t = paley_tournament(n)?;
            let order = automorphisms(t.tournament()).order();
            let rho = distinguishing_cost(t.tournament())?;
            let res = check_conjecture(&t, CheckMode::Certified);
            let verdict = if res.holds { "HOLDS" } else { "FAILS" };
            writeln!(out, "{verdict}, |Aut|={order}, rho={rho}")?;
            Ok(if res.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Sweep {
            p_min,
            p_max,
            dedup,
            workers,
            out: path,
            mode,
            force,
            csv,
        } => {
            let workers = workers
                .or_else(|| {
                    std::env::var("SWEEP_WORKERS")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(1);
            let cfg = SweepConfig {
                p_min,
                p_max,
                mode: mode.into(),
                dedup,
                workers,
                force,
            };
            let records = run_sweep(&cfg)?;
            let file = File::create(&path)?;
            let mut writer = BufWriter::new(file);
            write_jsonl(&mut writer, &records)?;
            writer.flush()?;
            if let Some(csv_path) = csv {
                std::fs::write(&csv_path, csv_summary(&records))?;
            }
            let failures: Vec<_> = records.iter().filter(|r| !r.holds).collect();
            writeln!(
                out,
                "checked {} instances (p {}..={}), {} failures",
                records.len(),
                p_min,
                p_max,
                failures.len()
            )?;
            for (method, count) in method_counts(&records) {
                writeln!(out, "  {method}: {count}")?;
            }
            if let Some(bad) = failures.first() {
                writeln!(
                    out,
                    "counterexample at p={} neg={:?}; full record in {}",
                    bad.p,
                    bad.neg,
                    path.display()
                )?;
                return Ok(ExitCode::from(1));
            }
            writeln!(out, "records written to {}", path.display())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cyclic(p: usize, neg: &str) -> Result<CyclicTournament, Error> {
    CyclicTournament::new(ConnectorSet::parse(p, neg)?)
}

//! `arlab`: exact Turán / anti-Ramsey searches for complete bipartite
//! patterns, structural verifiers, bound tables and certificate checking.

use anyhow::Context;
use arlab::sample_rainbow_free_coloring;
use arlab::verify::{self, Outcome};
use arlab_core::{
    ar_exact_opts, cert, io, validate_certificate, Certificate, FamilySpec, SearchOptions,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "arlab",
    about = "Exact ex/AR numbers for complete bipartite patterns, with structural verifiers and certificates",
    version
)]
struct Cli {
    /// Base seed for all sampled instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads; falls back to ARLAB_THREADS, then 1. Results are
    /// schedule-independent.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Node budget for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,

    /// Output format for tables and run records.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Turán number ex(K_n, family) with a canonical witness.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Forbidden family: the pattern itself or its one-edge-deleted form.
        #[arg(long, value_enum, default_value_t = FamilyArg::Kst)]
        family: FamilyArg,
        /// Write the result as a certificate file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact anti-Ramsey number AR(K_n, K_{s,t}) with a canonical witness.
    Ar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Bound table for n = s+t ..= n-max with the sandwich, theorem and
    /// corollary inequalities asserted on every exact row.
    Bounds {
        #[arg(long = "n-max", visible_alias = "n")]
        n_max: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Also write the CSV table to a file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Empirical verification of the structural lemmas.
    Verify {
        #[command(subcommand)]
        claim: VerifyClaim,
    },
    /// Re-validate a certificate file from its content alone.
    VerifyCert { file: PathBuf },
    /// Sample a rainbow-K_{s,t}-free coloring of K_n.
    SampleColoring {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Write the coloring to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// The single pattern K_{s,t}.
    Kst,
    /// The family {K_{s,t} - e}.
    MinusOneEdge,
}

#[derive(Subcommand)]
enum VerifyClaim {
    /// Rainbow-free colorings contain no rainbow K_{s,t-1}-string-tie.
    Lemma1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Base-length budget for the tie search.
        #[arg(long = "max-len", default_value_t = 4)]
        max_len: usize,
        /// Write a counterexample certificate here on failure.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Every random valid ring extracts to a validating string-tie.
    Lemma2 {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        /// Let exterior vertices repeat across copies.
        #[arg(long)]
        overlap_exteriors: bool,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Packing machinery and the slack bound on random subgraphs.
    Lemma3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("ARLAB_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);
    let search = SearchOptions {
        budget: cli.budget,
        threads,
    };

    match cli.command {
        Command::Ex {
            n,
            s,
            t,
            family,
            cert,
        } => {
            let spec = match family {
                FamilyArg::Kst => FamilySpec::Kst,
                FamilyArg::MinusOneEdge => FamilySpec::MinusOneEdge,
            };
            let fam = spec.build(s, t)?;
            let res = arlab_core::turan_exact_opts(n, &fam, &search)?;
            let certificate = cert::extremal_certificate(n, s, t, spec, &res);
            if cli.format == Some(Format::Json) {
                println!("{}", certificate.to_json());
            } else {
                let fam_name = match spec {
                    FamilySpec::Kst => format!("K_{{{s},{t}}}"),
                    FamilySpec::MinusOneEdge => format!("K_{{{s},{t}}}-e"),
                };
                println!(
                    "ex(K_{n}, {{{fam_name}}}) = {}{}  witness {}",
                    res.value(),
                    if res.exact() {
                        ""
                    } else {
                        " (budget-limited lower bound)"
                    },
                    io::to_graph6(res.witness()),
                );
            }
            write_cert(cert.as_deref(), &certificate)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ar { n, s, t, cert } => {
            let res = ar_exact_opts(n, s, t, &search)?;
            let certificate = cert::ar_certificate(n, s, t, &res);
            if cli.format == Some(Format::Json) {
                println!("{}", certificate.to_json());
            } else {
                println!(
                    "AR(K_{n}, K_{{{s},{t}}}) = {}{}",
                    res.value(),
                    if res.exact() {
                        ""
                    } else {
                        " (budget-limited lower bound)"
                    },
                );
                print!("{}", io::coloring_to_text(res.witness()));
            }
            write_cert(cert.as_deref(), &certificate)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n_max, s, t, csv } => {
            let out = verify::verify_bounds(n_max, s, t, &search)?;
            if cli.format == Some(Format::Json) {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print!("{}", out.csv);
            }
            if let Some(path) = csv {
                fs::write(&path, &out.csv)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            for run in &out.runs {
                eprintln!("{} ({:.2}s)", run.summary(), run.stats.wall_seconds);
            }
            let failed = out.runs.iter().any(|r| r.outcome == Outcome::Fail);
            Ok(if failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Verify { claim } => {
            let (run, cert_path) = match claim {
                VerifyClaim::Lemma1 {
                    n,
                    s,
                    t,
                    samples,
                    max_len,
                    cert,
                } => (
                    verify::verify_lemma1(n, s, t, samples, max_len, cli.seed, threads)?,
                    cert,
                ),
                VerifyClaim::Lemma2 {
                    s,
                    t,
                    instances,
                    overlap_exteriors,
                    cert,
                } => (
                    verify::verify_lemma2(s, t, instances, cli.seed, overlap_exteriors, threads)?,
                    cert,
                ),
                VerifyClaim::Lemma3 {
                    n,
                    s,
                    t,
                    trials,
                    cert,
                } => (
                    verify::verify_lemma3(n, s, t, trials, cli.seed, &search)?,
                    cert,
                ),
            };
            if cli.format == Some(Format::Json) {
                println!("{}", serde_json::to_string_pretty(&run)?);
            } else {
                println!("{}", run.summary());
            }
            eprintln!("wall time: {:.2}s", run.stats.wall_seconds);
            if let (Some(path), Some(counterexample)) = (cert_path, &run.counterexample) {
                write_cert(Some(&path), counterexample)?;
            }
            Ok(match run.outcome {
                Outcome::Fail => ExitCode::FAILURE,
                _ => ExitCode::SUCCESS,
            })
        }
        Command::VerifyCert { file } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let certificate = Certificate::from_json(&text)?;
            let report = validate_certificate(&certificate)?;
            if cli.format == Some(Format::Json) {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{}", if report.valid { "VALID" } else { "INVALID" });
                for d in &report.details {
                    println!("  {d}");
                }
            }
            Ok(if report.valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::SampleColoring { n, s, t, out } => {
            let c = sample_rainbow_free_coloring(n, s, t, cli.seed)?;
            let text = io::coloring_to_text(&c);
            match out {
                Some(path) => fs::write(&path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_cert(path: Option<&std::path::Path>, certificate: &Certificate) -> anyhow::Result<()> {
    if let Some(path) = path {
        fs::write(path, certificate.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn bounds_accepts_both_flag_spellings() {
        for args in [
            ["arlab", "bounds", "--n-max", "5", "--s", "2", "--t", "2"],
            ["arlab", "bounds", "--n", "5", "--s", "2", "--t", "2"],
        ] {
            let cli = Cli::try_parse_from(args).unwrap();
            match cli.command {
                Command::Bounds { n_max, .. } => assert_eq!(n_max, 5),
                _ => panic!("parsed wrong command"),
            }
        }
    }
}

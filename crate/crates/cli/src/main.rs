//! `dipaths`: generate oriented graphs, colour them so that monochromatic
//! directed paths stay short, and check the result.
//!
//! Exit status is 0 on success, 1 when a check fails, 2 on invalid input and
//! 3 when the library breaks one of its own contracts. Errors are written to
//! stderr as one-line JSON records.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dipaths::generate::GraphKind;
use dipaths::verify::DEFAULT_EXACT_CAP;

use commands::{Outcome, StatsConfig};
use error::CliError;

#[derive(Parser)]
#[command(name = "dipaths", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph in the edge-list format.
    Generate {
        #[arg(long)]
        kind: GraphKind,
        #[arg(long)]
        vertices: usize,
        /// Edge count for oriented-gnm and dag.
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        cycle_length: Option<usize>,
        /// Required for random kinds.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Red/blue colouring with a path-length certificate.
    Colour {
        #[arg(short, long, default_value = "-")]
        input: String,
        #[arg(long)]
        n: usize,
        /// Colouring file; stdout by default.
        #[arg(short, long)]
        output: Option<String>,
        /// Certificate JSON; stderr by default.
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Find a k-special vertex set.
    Extract {
        #[arg(short, long, default_value = "-")]
        input: String,
        #[arg(long)]
        k: usize,
        /// Density as p/q; defaults to M/N².
        #[arg(long)]
        eps: Option<String>,
        /// Include the round-by-round trace.
        #[arg(long)]
        trace: bool,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Longest monochromatic paths of a colouring, checked against a certificate.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        colouring: String,
        #[arg(long)]
        certificate: Option<String>,
        /// Largest cyclic class searched exactly.
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP, value_parser = parse_cap)]
        cap: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Stage schedule and special-set size targets.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Colour and verify a range of generated instances; CSV output.
    Stats {
        #[arg(long)]
        kind: GraphKind,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        n: usize,
        /// `a..b` or `a..=b`.
        #[arg(long)]
        seeds: String,
        #[arg(long, env = "DIPATHS_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP, value_parser = parse_cap)]
        cap: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(c) if (1..=30).contains(&c) => Ok(c),
        _ => Err(format!("cap must be an integer in 1..=30, got {s:?}")),
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Generate {
            kind,
            vertices,
            edges,
            cycle_length,
            seed,
            output,
        } => {
            let spec = commands::build_spec(kind, vertices, edges, cycle_length, seed)?;
            commands::emit(output.as_deref(), &commands::generate_text(&spec)?)?;
            Ok(Outcome::Ok)
        }
        Command::Colour {
            input,
            n,
            output,
            certificate,
        } => {
            let g = commands::load_graph(&input)?;
            let out = commands::colour(&g, n)?;
            commands::emit(output.as_deref(), &out.colouring)?;
            match certificate {
                Some(p) => commands::emit(Some(&p), &out.certificate)?,
                None => eprint!("{}", out.certificate),
            }
            Ok(commands::colour_outcome(&out))
        }
        Command::Extract {
            input,
            k,
            eps,
            trace,
            output,
        } => {
            let g = commands::load_graph(&input)?;
            let eps = eps.as_deref().map(commands::parse_eps).transpose()?;
            commands::emit(output.as_deref(), &commands::extract(&g, k, eps, trace)?)?;
            Ok(Outcome::Ok)
        }
        Command::Verify {
            graph,
            colouring,
            certificate,
            cap,
            output,
        } => {
            let g = commands::load_graph(&graph)?;
            let out = commands::verify(&g, &colouring, certificate.as_deref(), cap)?;
            commands::emit(output.as_deref(), &out.report)?;
            Ok(commands::verify_outcome(&out))
        }
        Command::Bounds { n, vertices, output } => {
            commands::emit(output.as_deref(), &commands::bounds(n, vertices)?)?;
            Ok(Outcome::Ok)
        }
        Command::Stats {
            kind,
            vertices,
            edges,
            n,
            seeds,
            workers,
            cap,
            output,
        } => {
            let cfg = StatsConfig {
                kind,
                vertices,
                edges,
                n,
                seeds: commands::parse_seeds(&seeds)?,
                workers,
                cap,
            };
            let (csv, outcome) = commands::stats(&cfg)?;
            commands::emit(output.as_deref(), &csv)?;
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

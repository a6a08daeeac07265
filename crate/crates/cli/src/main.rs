//! Command-line front end for `hopfcyc`.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use commands::{CliError, Session};

#[derive(Parser, Debug)]
#[command(name = "hopfcyc", version, about = "Exact Hopf-cyclic homology calculator")]
pub struct Cli {
  #[command(flatten)]
  pub config:  Config,
  #[command(subcommand)]
  pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Config {
  /// Coefficient field: `q` or `f<p>` for a supported prime p.
  #[arg(long, global = true, default_value = "q")]
  pub field:      String,
  /// Highest homological degree.
  #[arg(long, global = true, default_value_t = 3)]
  pub max_degree: usize,
  /// Complex used for cyclic homology.
  #[arg(long, global = true, value_enum, default_value_t = MethodArg::Lambda)]
  pub method:     MethodArg,
  #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
  #[serde(skip)]
  pub format:     Format,
  /// Worker threads.
  #[arg(long, global = true, default_value_t = 1)]
  #[serde(skip)]
  pub jobs:       usize,
  /// Leave the timing block out of the report.
  #[arg(long, global = true)]
  #[serde(skip)]
  pub no_timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
  Lambda,
  Bicomplex,
  Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
  Json,
  Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
  /// Verify the axioms of an input document.
  Verify {
    #[command(subcommand)]
    what: VerifyWhat,
  },
  /// Hochschild homology `HH_*(H, M)`.
  Hh(Pair),
  /// Cyclic homology `HC_*(H, M)`.
  Hc(Pair),
  /// Hopf-Galois suite: β, translation map relations, `λ_*` and `HC(A/B)` both ways.
  Galois {
    /// Comodule-algebra document (file or inline JSON).
    input: String,
  },
  /// Finite-group decomposition of `HC_*(kG, M)` against the direct computation.
  Burghelea(Pair),
  /// Homology of the quantum torus given by `{r, a, q_order}`.
  Qtorus {
    /// Cocycle document (file or inline JSON).
    input: String,
  },
  /// Print the document of a builtin object.
  Export {
    #[command(subcommand)]
    what: ExportWhat,
  },
}

#[derive(Args, Debug)]
pub struct Pair {
  /// Hopf algebra: builtin name, file, or inline JSON.
  pub hopf:   String,
  /// Module: builtin name (adjoint, coadjoint, trivial, sign), file, or inline JSON.
  pub module: String,
}

#[derive(Subcommand, Debug)]
pub enum VerifyWhat {
  /// Hopf algebra axioms.
  Hopf { input: String },
  /// Crossed-module and modularity axioms.
  Crossed {
    input: String,
    /// Base used when the document has none.
    #[arg(long)]
    base:  Option<String>,
  },
  /// Comodule algebra, Galois map and translation-map relations.
  Galois { input: String },
  /// Identities of the cyclic object `Z_*(H, M)` up to `--max-degree`.
  Cyclic(Pair),
}

#[derive(Subcommand, Debug)]
pub enum ExportWhat {
  Hopf { input: String },
  Crossed(Pair),
}

fn main() -> ExitCode {
  let argv: Vec<String> = std::env::args().collect();
  let cli = match Cli::try_parse_from(&argv) {
    Ok(c) => c,
    Err(e) => {
      let code = if e.use_stderr() { 2 } else { 0 };
      let _ = e.print();
      return ExitCode::from(code);
    },
  };
  if cli.config.jobs > 0 {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.config.jobs).build_global();
  }
  let start = Instant::now();
  let session = Session { command: argv[1..].to_vec(), config: cli.config.clone() };
  match session.run(&cli.command) {
    Ok(commands::Output::Document(text)) => {
      println!("{text}");
      ExitCode::SUCCESS
    },
    Ok(commands::Output::Report(mut report, parse_ms)) => {
      if !cli.config.no_timings {
        let total = start.elapsed().as_secs_f64() * 1e3;
        report.timings = Some(output::Timings { parse_ms, compute_ms: total - parse_ms });
      }
      match cli.config.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Table => print!("{}", report.to_table()),
      }
      if report.passed {
        ExitCode::SUCCESS
      } else {
        ExitCode::from(1)
      }
    },
    Err(CliError::Input(msg)) => {
      eprintln!("error: {msg}");
      ExitCode::from(2)
    },
  }
}

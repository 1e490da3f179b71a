use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bavn_core::certificate;
use bavn_core::classify::{self, ReportFormat};
use bavn_core::graph::parse_graph;
use bavn_core::{Bipartition, ColoredGraph, Error};
use clap::{Args, Parser, Subcommand};

/// Search and certify bipartite all-versus-nothing proofs on graph states.
#[derive(Parser)]
#[command(name = "bavn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List connected graphs on n vertices grouped into LC classes.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
    },
    /// Classify the qubit distributions of every n-qubit graph state.
    Classify {
        n: usize,
        #[arg(long, default_value = "text", value_parser = ["text", "json", "dot"])]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Build a certificate for a graph ("n;u-v,..." or graph6) and a
    /// partition ("A=i,j,k").
    Prove {
        graph: String,
        partition: String,
        /// Write the certificate here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate file from scratch.
    Verify { file: PathBuf },
    /// Convert a graph to DOT or graph6.
    Export {
        graph: String,
        #[command(flatten)]
        target: ExportTarget,
        /// Colour the DOT output by this partition.
        #[arg(long, requires = "dot")]
        partition: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExportTarget {
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    graph6: bool,
}

enum Failure {
    /// No proof exists or verification failed.
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoProof(_) | Error::MalformedCertificate(_) => Failure::Negative(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(text: &str, output: Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate { n, format } => {
            let format: ReportFormat = format.parse()?;
            emit(&classify::enumeration_report(n)?.render(format)?, None)
        }
        Command::Classify { n, format, output } => {
            let report = classify::classify(n)?;
            emit(&classify::report_render(&report, format.parse()?)?, output)
        }
        Command::Prove {
            graph,
            partition,
            output,
        } => {
            let g = parse_graph(&graph)?;
            let part = Bipartition::parse(&partition, g.n())?;
            emit(&certificate::prove(&g, &part)?, output)
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            let verification = certificate::verify(&text)?;
            println!("{verification}");
            if verification.passed() {
                Ok(())
            } else {
                Err(Failure::Negative("verification failed".into()))
            }
        }
        Command::Export {
            graph,
            target,
            partition,
        } => {
            let g = parse_graph(&graph)?;
            let text = if target.graph6 {
                format!("{}\n", g.to_graph6())
            } else if let Some(p) = partition {
                ColoredGraph::new(g, Bipartition::parse(&p, g.n())?)?.to_dot("G")
            } else {
                g.to_dot("G")
            };
            emit(&text, None)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("bavn: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bavn: {msg}");
            ExitCode::from(2)
        }
    }
}

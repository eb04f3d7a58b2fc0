use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mist_kernel::io::{
    generate, parse_edge_list, verify_artifacts, write_edge_list, Family, FormatError, GenError,
    TraceDocument,
};
use mist_kernel::oracle::{decide_pist_with_limit, max_n_from_env, OracleError};
use mist_kernel::{kernelize, Graph, KernelError, Outcome, SpanningTree};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "mist",
    version,
    about = "Kernelize and solve maximum internal spanning tree instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce (G, k) to an equivalent instance on at most 3k vertices.
    Kernelize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_trace: PathBuf,
    },
    /// Decide whether G has a spanning tree with at least k internal vertices.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Replay a trace and check it reproduces the kernel file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        kernel: PathBuf,
    },
    /// Print a seeded connected instance.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{path}: malformed trace: {source}")]
    Trace {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. }
            | CliError::Format { .. }
            | CliError::Trace { .. }
            | CliError::Gen(_) => 2,
            CliError::Write { .. } => 3,
            CliError::Kernel(e) | CliError::Oracle(OracleError::Kernel(e)) => kernel_exit_code(e),
            CliError::Oracle(_) => 3,
        }
    }
}

fn kernel_exit_code(e: &KernelError) -> u8 {
    match e {
        KernelError::Precondition(_) | KernelError::Graph(_) => 3,
        // Anything else is a bug; report it distinctly from user errors.
        _ => 4,
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read_text(path)?).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Print to stdout. A closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Write {
            path: PathBuf::from("<stdout>"),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn tree_lines(t: &SpanningTree) -> String {
    let mut out = String::new();
    for (u, v) in t.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a string");
    }
    out
}

fn cmd_kernelize(input: &Path, k: i64, out_graph: &Path, out_trace: &Path) -> Result<u8, CliError> {
    let g = read_graph(input)?;
    let result = kernelize(&g, k)?;
    write_file(out_graph, &write_edge_list(&result.graph))?;
    write_file(
        out_trace,
        &TraceDocument::from_result(&g, &result).to_json(),
    )?;
    match &result.outcome {
        Outcome::Solved(t) | Outcome::TrivialYes(t) => {
            emit(&format!(
                "SOLVED {}\n{}",
                t.internal_count(None),
                tree_lines(t)
            ))?;
            Ok(0)
        }
        Outcome::Kernel => {
            emit(&format!(
                "KERNEL n={} m={} k'={} reductions={}\n",
                result.graph.n(),
                result.graph.edge_count(),
                result.k_prime,
                result.trace.len()
            ))?;
            Ok(0)
        }
        Outcome::TrivialNo(reason) => {
            emit(&format!("NO {reason}\n"))?;
            Ok(1)
        }
    }
}

fn cmd_solve(input: &Path, k: i64) -> Result<u8, CliError> {
    let g = read_graph(input)?;
    let decision = decide_pist_with_limit(&g, k, max_n_from_env())?;
    match decision.witness {
        Some(t) if decision.answer => {
            emit(&format!("YES\n{}", tree_lines(&t)))?;
            Ok(0)
        }
        _ => {
            emit("NO\n")?;
            Ok(1)
        }
    }
}

fn cmd_verify(graph: &Path, trace: &Path, kernel: &Path) -> Result<u8, CliError> {
    let g = read_graph(graph)?;
    let doc = TraceDocument::from_json(&read_text(trace)?).map_err(|source| CliError::Trace {
        path: trace.to_path_buf(),
        source,
    })?;
    let kernel_graph = read_graph(kernel)?;
    match verify_artifacts(&g, &doc, &kernel_graph) {
        Ok(()) => {
            emit(&format!("OK {} reductions\n", doc.reductions.len()))?;
            Ok(0)
        }
        Err(failure) => {
            emit(&format!("FAIL {}: {}\n", failure.invariant, failure.detail))?;
            Ok(1)
        }
    }
}

fn cmd_gen(family: &str, n: usize, m: Option<usize>, seed: u64) -> Result<u8, CliError> {
    let family: Family = family.parse()?;
    emit(&write_edge_list(&generate(family, n, m, seed)?))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Kernelize {
            input,
            k,
            out_graph,
            out_trace,
        } => cmd_kernelize(input, *k, out_graph, out_trace),
        Command::Solve { input, k } => cmd_solve(input, *k),
        Command::Verify {
            graph,
            trace,
            kernel,
        } => cmd_verify(graph, trace, kernel),
        Command::Gen { family, n, m, seed } => cmd_gen(family, *n, *m, *seed),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! The `ckikit` command-line interface.
//!
//! `run` is the whole program minus process plumbing, so tests can drive it
//! with in-memory streams.

pub mod codec;

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::digraph::Digraph;
use crate::enumeration::{enumerate_forms, EnumClass, EnumOptions, FilterSpec};
use crate::error::Error;
use crate::families::{
    antihole, biorient, circulant, complete_digraph, cycle_edges, directed_cycle, path_edges,
    star_edges, three_cycle_extension, transitive_tournament, CirculantSpec,
};
use crate::kernels::{all_kernels, find_kernel, is_cki, KernelAnswer};
use crate::recognizers::Predicate;
use crate::structure4t::classify_strong_4_transitive;
use crate::verification::{default_max_n, suites, verify_theorem_with};

use codec::{encode_digraph6, parse_inputs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ckikit", version, about = "Kernels and critical kernel imperfect digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named digraph as digraph6.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        /// Circulant jump set.
        #[arg(long, value_delimiter = ',')]
        jumps: Vec<usize>,
        /// Part sizes of a 3-cycle extension.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Evaluate a predicate on each input digraph.
    Check {
        #[arg(long = "pred")]
        pred: String,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the least kernel, or every kernel with --all.
    Kernel {
        #[arg(long)]
        all: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Decide critical kernel imperfection.
    Cki {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Classify strong 4-transitive digraphs; one JSON object per input.
    Classify4t {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Stream isomorphism class representatives of order n as digraph6.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        class: EnumClass,
        /// Comma-separated predicate identifiers, all required.
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Apply every filter predicate at order n only.
        #[arg(long)]
        no_prune: bool,
    },
    /// Run a verification suite.
    Verify {
        /// Suite identifier; `list` prints the registry.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Cycle,
    Antihole,
    Circulant,
    #[value(name = "c7-12")]
    C712,
    TransitiveTournament,
    Complete,
    Star,
    SymPath,
    SymCycle,
    Extension,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Json,
    Text,
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_inputs(input: &str, stdin: &mut dyn Read) -> CliResult<Vec<Digraph>> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input)?
    };
    Ok(parse_inputs(&text)?)
}

fn need_n(n: Option<usize>, family: &str) -> CliResult<usize> {
    n.ok_or_else(|| CliError::Usage(format!("family {family} needs --n")))
}

fn generate(family: Family, n: Option<usize>, jumps: &[usize], sizes: &[usize]) -> CliResult<Digraph> {
    let d = match family {
        Family::Cycle => directed_cycle(need_n(n, "cycle")?)?,
        Family::Antihole => antihole(need_n(n, "antihole")?)?,
        Family::Circulant => {
            let spec = CirculantSpec::new(need_n(n, "circulant")?, jumps.iter().copied())?;
            circulant(&spec)
        }
        Family::C712 => crate::families::c7_12(),
        Family::TransitiveTournament => transitive_tournament(need_n(n, "transitive-tournament")?)?,
        Family::Complete => complete_digraph(need_n(n, "complete")?)?,
        Family::Star => {
            let n = need_n(n, "star")?;
            if n == 0 {
                return Err(CliError::Usage("star needs --n at least 1".into()));
            }
            biorient(n, &star_edges(n - 1))?
        }
        Family::SymPath => {
            let n = need_n(n, "sym-path")?;
            biorient(n, &path_edges(n))?
        }
        Family::SymCycle => {
            let n = need_n(n, "sym-cycle")?;
            if n < 3 {
                return Err(CliError::Usage("sym-cycle needs --n at least 3".into()));
            }
            biorient(n, &cycle_edges(n))?
        }
        Family::Extension => {
            let [a, b, c] = sizes else {
                return Err(CliError::Usage("extension needs --sizes a,b,c".into()));
            };
            three_cycle_extension([*a, *b, *c])?.0
        }
    };
    Ok(d)
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Gen { family, n, jumps, sizes, output } => {
            let line = encode_digraph6(&generate(family, n, &jumps, &sizes)?)? + "\n";
            match output {
                Some(path) => fs::write(path, line)?,
                None => out.write_all(line.as_bytes())?,
            }
        }
        Command::Check { pred, input } => {
            let p: Predicate = pred.parse()?;
            for d in read_inputs(&input, stdin)? {
                writeln!(out, "{}", p.eval(&d))?;
            }
        }
        Command::Kernel { all, input } => {
            for d in read_inputs(&input, stdin)? {
                let ks = if all {
                    all_kernels(&d)
                } else {
                    match find_kernel(&d) {
                        KernelAnswer::Found(k) => vec![k],
                        KernelAnswer::None => Vec::new(),
                    }
                };
                if ks.is_empty() {
                    writeln!(out, "NONE")?;
                } else {
                    let parts: Vec<String> = ks.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", parts.join(" "))?;
                }
            }
        }
        Command::Cki { input } => {
            for d in read_inputs(&input, stdin)? {
                writeln!(out, "CKI: {}", is_cki(&d)?)?;
            }
        }
        Command::Classify4t { input } => {
            for d in read_inputs(&input, stdin)? {
                let label = classify_strong_4_transitive(&d)?;
                writeln!(out, "{}", serde_json::to_string(&label).expect("label serializes"))?;
            }
        }
        Command::Enum { n, class, filter, jobs, no_prune } => {
            let filter = FilterSpec::parse(&filter)?;
            let opts = EnumOptions { jobs: jobs.max(1), prune: !no_prune };
            for f in enumerate_forms(n, class, &filter, &opts)? {
                writeln!(out, "{}", encode_digraph6(&f.to_digraph())?)?;
            }
        }
        Command::Verify { suite, max_n, report, jobs } => {
            if suite == "list" {
                for (id, m) in suites() {
                    writeln!(out, "{id}\t{m}")?;
                }
                return Ok(EXIT_OK);
            }
            let max_n = match max_n {
                Some(m) => m,
                None => default_max_n(&suite)?,
            };
            let opts = EnumOptions { jobs: jobs.max(1), ..EnumOptions::default() };
            let r = verify_theorem_with(&suite, max_n, &opts)?;
            match report {
                ReportFormat::Json => writeln!(out, "{}", r.to_json())?,
                ReportFormat::Text => write!(out, "{}", r.to_text())?,
            }
            return Ok(if r.pass { EXIT_OK } else { EXIT_SUITE_FAILED });
        }
    }
    Ok(EXIT_OK)
}

/// `run` on the process arguments and standard streams.
pub fn main_with_std() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

//! `quasigraph`: verify, search, construct, and analyze framework
//! representations of small matroids.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a definitive false
//! verdict, 2 when a bounded search stayed indeterminate, 64 for usage
//! errors, 65 for malformed input data, 66 for unreadable input files.

mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use quasigraph_core::io::render_records;

#[derive(Parser)]
#[command(name = "quasigraph", version, about = "framework search for quasi-graphic matroids")]
pub struct Cli {
    /// Output format; `records` is the line-oriented machine form.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (default: $QUASIGRAPH_JOBS, else 1).  Results and
    /// output bytes never depend on this.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Cap on candidate vertex counts; searches report `bounded` when it
    /// truncates the space.
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,

    /// Largest ground set the searches accept.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,

    /// Seed for sampled property suites; echoed into machine output.  The
    /// shipped verbs are exact, so it only tags the run.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
pub enum Verb {
    /// Check the framework axioms for a graph file against a matroid.
    Verify {
        /// Graph file (any signature/balanced lines are ignored here).
        graph: PathBuf,
        /// Matroid: a file path, or inline `uniform <r> <n>`,
        /// `graphic <file>`, `named <F7|F7*|MK5*|MK33*>`, `dual <file>`.
        #[arg(num_args = 1.., required = true)]
        matroid: Vec<String>,
    },
    /// Search for a framework of a matroid; write witness files if one exists.
    Decide {
        /// Matroid, as for `verify`.
        #[arg(num_args = 1.., required = true)]
        matroid: Vec<String>,
        /// Prefix for the emitted `.graph` and `.bias` witness files.
        #[arg(long, default_value = "witness")]
        out: PathBuf,
        /// Search connected candidates only.
        #[arg(long)]
        connected_only: bool,
        /// Disable the collapsed candidate space for 3-connected inputs.
        #[arg(long)]
        no_shortcut: bool,
    },
    /// List every framework class of a matroid, grouped by underlying graph.
    Enumerate {
        /// Matroid, as for `verify`.
        #[arg(num_args = 1.., required = true)]
        matroid: Vec<String>,
        /// Run the unpruned reference search instead.
        #[arg(long)]
        naive: bool,
        /// Search connected candidates only.
        #[arg(long)]
        connected_only: bool,
        /// Disable the collapsed candidate space for 3-connected inputs.
        #[arg(long)]
        no_shortcut: bool,
    },
    /// Structured report on a framework: representation, blocking and fixed
    /// vertices, minimal balancing sets, invariant checks.
    Analyze {
        /// Graph file for the framework.
        graph: PathBuf,
        /// Matroid, as for `verify`.
        #[arg(num_args = 1.., required = true)]
        matroid: Vec<String>,
        /// Largest mixed balancing set size to list.
        #[arg(long, default_value_t = 2)]
        max_balancing: usize,
    },
    /// Run a signed-graph construction and emit its graph files.
    Construct {
        /// Either `pinch <graph> <v1> <v2>`, `curl <graph> <v>`, a
        /// construction kind followed by inline `<graph> <x> <y> [z]` part
        /// groups, or a single spec file.
        #[arg(num_args = 1.., required = true)]
        spec: Vec<String>,
        /// Prefix for the emitted `.graph` and `-base.graph` files.
        #[arg(long, default_value = "constructed")]
        out: PathBuf,
    },
    /// Test whether one matroid has another as a minor.
    Minor {
        /// Matroid searched in, as for `verify`.
        #[arg(num_args = 1.., required = true)]
        base: Vec<String>,
        /// Pattern matroid looked for.
        #[arg(long, num_args = 1.., required = true)]
        pattern: Vec<String>,
    },
    /// Re-run a packaged small-case result and report pass/fail checks.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Frameworks of U_{3,6}; exclusion of U_{3,7}.
    #[value(name = "thm-3.1")]
    Thm31,
    /// Frameworks of U_{4,6}; exclusion of U_{4,7}.
    #[value(name = "thm-3.2")]
    Thm32,
    /// Excluded-minor and connectivity checks on U_{3,7} and U_{4,7}.
    #[value(name = "thm-3.3-small")]
    Thm33Small,
    /// Framework count of the rank-4 wheel.
    #[value(name = "wheel-count")]
    WheelCount,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match verbs::run(cli) {
        Ok(report) => {
            match format {
                Format::Records => print!("{}", render_records(&report.records)),
                Format::Text => print!("{}", report.text),
            }
            ExitCode::from(report.exit)
        }
        Err(err) => {
            eprintln!("quasigraph: {err}");
            ExitCode::from(err.code())
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use it2mabac::problem::{BaaKind, DecisionProblem};
use it2mabac::report::{self, Format, Section};
use it2mabac::{parse_problem, run, Error};

/// Group decision making with interval type-2 fuzzy MABAC
#[derive(Parser)]
#[command(name = "it2mabac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every step and print the full report
    Solve {
        #[command(flatten)]
        common: Common,
    },
    /// Print one intermediate table
    Trace {
        #[command(flatten)]
        common: Common,
        /// weights, decisions, normalized, weighted, baa, q, g or scores
        table: String,
    },
    /// Parse and validate a problem file without solving it
    Validate {
        /// Problem file
        problem: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Problem file
    problem: PathBuf,
    /// Attitude parameter of the rank-based distance, in [0, 1]
    #[arg(long)]
    lambda: Option<f64>,
    /// First Bonferroni exponent
    #[arg(long = "r")]
    r: Option<f64>,
    /// Second Bonferroni exponent
    #[arg(long = "s")]
    s: Option<f64>,
    /// Operator for the border approximation area
    #[arg(long, value_enum)]
    baa: Option<BaaArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaaArg {
    Bonferroni,
    Geomean,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_COMPUTATION: u8 = 2;

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    if e.is_validation() {
        ExitCode::from(EXIT_VALIDATION)
    } else {
        ExitCode::from(EXIT_COMPUTATION)
    }
}

fn load(path: &PathBuf) -> Result<DecisionProblem, ExitCode> {
    let src = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_VALIDATION)
    })?;
    parse_problem(&src).map_err(|e| fail(&e))
}

fn load_with_overrides(c: &Common) -> Result<DecisionProblem, ExitCode> {
    let mut p = load(&c.problem)?;
    if let Some(l) = c.lambda {
        p.params.lambda = l;
    }
    if let Some(r) = c.r {
        p.params.r = r;
    }
    if let Some(s) = c.s {
        p.params.s = s;
    }
    if let Some(b) = c.baa {
        p.params.baa = match b {
            BaaArg::Bonferroni => BaaKind::Bonferroni,
            BaaArg::Geomean => BaaKind::Geomean,
        };
    }
    if let Err(e) = p.params.validate() {
        return Err(fail(&e));
    }
    Ok(p)
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Validate { problem } => match load(&problem) {
            Ok(p) => {
                println!(
                    "ok: {} alternatives, {} criteria, {} experts",
                    p.alternatives.len(),
                    p.criteria.len(),
                    p.experts.len()
                );
                for (t, v) in p.weight_scale.iter().chain(p.rating_scale.iter()) {
                    let bad = v.fou_violations();
                    if !bad.is_empty() {
                        eprintln!("warning: term {t}: lower {} outside the upper support", bad.join(", "));
                    }
                }
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Solve { common } => {
            let p = match load_with_overrides(&common) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match run(&p) {
                Ok(trace) => {
                    print!("{}", report::render(&trace, format(common.format)));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Trace { common, table } => {
            let section: Section = match table.parse() {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let p = match load_with_overrides(&common) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match run(&p) {
                Ok(trace) => {
                    print!("{}", report::render_section(&trace, section, format(common.format)));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
    }
}

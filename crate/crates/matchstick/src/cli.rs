//! Command-line driver: compile, verify, render, check, and oracle.
//!
//! Exit codes partition failures by pipeline stage so scripts can gate on
//! them: `compile` exits 1 on a compile error and 2 on I/O trouble; `verify`
//! exits 1 on Reject and 2 on a malformed trace; `check` exits 1/2/3 for the
//! compile, verify, and oracle stages respectively.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::config::{ChoiceStrategy, Config, ConfigFile};
use crate::lang::{self, Program, StmtKind};
use crate::oracle::{self, AnalyticValue};
use crate::render::render_svg;
use crate::trace::Trace;
use crate::verifier::{self, Verdict};

/// Environment variable naming a JSON config file applied before CLI flags.
pub const CONFIG_ENV: &str = "MATCHSTICK_CONFIG";

#[derive(Debug, Parser)]
#[command(name = "matchstick", version, about = "Match-stick geometry compiler and verifier")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigFlags,
    #[command(subcommand)]
    pub command: Command,
}

/// Configuration overrides; highest precedence, applied over the defaults
/// and any file named by `MATCHSTICK_CONFIG`.
#[derive(Debug, Args)]
pub struct ConfigFlags {
    /// Working precision in bits.
    #[arg(long, global = true)]
    pub precision: Option<usize>,
    /// Hard cap for predicate precision escalation, in bits.
    #[arg(long, global = true)]
    pub max_precision: Option<usize>,
    /// Predicate tolerance, e.g. "2^-128" or a decimal literal.
    #[arg(long, global = true)]
    pub epsilon: Option<String>,
    /// Oracle comparison tolerance, e.g. "2^-64".
    #[arg(long, global = true)]
    pub epsilon_cmp: Option<String>,
    /// Seed for random choice resolution.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Choice strategy: "half" or "random".
    #[arg(long, global = true)]
    pub choice_strategy: Option<String>,
    /// Significant decimal digits for serialized coordinates.
    #[arg(long, global = true)]
    pub output_digits: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a .euclid program to a trace.
    Compile {
        /// Source file.
        source: PathBuf,
        /// Trace output path (stdout when omitted).
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Replay a trace and report the verdict.
    Verify {
        /// Trace file.
        trace: PathBuf,
        /// Also fail when any predicate escalated beyond the base precision.
        #[arg(long)]
        strict: bool,
    },
    /// Render a trace as a deterministic SVG.
    Render {
        /// Trace file.
        trace: PathBuf,
        /// SVG output path (stdout when omitted).
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Compile, verify, and compare against the analytic oracle.
    Check {
        /// Source file.
        source: PathBuf,
    },
    /// Evaluate a program analytically and print the exact outputs.
    Oracle {
        /// Source file.
        source: PathBuf,
    },
}

/// Resolve the effective config: defaults, then the `MATCHSTICK_CONFIG`
/// file, then command-line flags.
pub fn resolve_config(flags: &ConfigFlags) -> Result<Config, String> {
    let mut config = Config::default();
    if let Ok(path) = std::env::var(CONFIG_ENV) {
        let text = fs::read_to_string(&path)
            .map_err(|e| format!("cannot read config file {path}: {e}"))?;
        let file: ConfigFile = serde_json::from_str(&text)
            .map_err(|e| format!("bad config file {path}: {e}"))?;
        config = file.apply(config).map_err(|e| e.to_string())?;
    }
    if let Some(v) = flags.precision {
        config.precision_bits = v;
    }
    if let Some(v) = flags.max_precision {
        config.max_precision_bits = v;
    }
    if let Some(v) = &flags.epsilon {
        config.epsilon_eq = Config::parse_epsilon(v).map_err(|e| e.to_string())?;
    }
    if let Some(v) = &flags.epsilon_cmp {
        config.epsilon_cmp = Config::parse_epsilon(v).map_err(|e| e.to_string())?;
    }
    if let Some(v) = flags.seed {
        config.seed = v;
    }
    if let Some(v) = &flags.choice_strategy {
        config.choice_strategy = ChoiceStrategy::from_str(v).map_err(|e| e.to_string())?;
    }
    if let Some(v) = flags.output_digits {
        config.output_digits = v;
    }
    config.validate().map_err(|e| e.to_string())?;
    Ok(config)
}

fn read_source(path: &Path) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        2
    })
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), i32> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", p.display());
            2
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn format_analytic(value: &AnalyticValue, digits: usize) -> String {
    match value {
        AnalyticValue::Point(p) => {
            format!("point ({}, {})", p.x.to_decimal_string(digits), p.y.to_decimal_string(digits))
        }
        AnalyticValue::Line(l) => format!(
            "line through ({}, {}) direction ({}, {})",
            l.anchor.x.to_decimal_string(digits),
            l.anchor.y.to_decimal_string(digits),
            l.dir.x.to_decimal_string(digits),
            l.dir.y.to_decimal_string(digits)
        ),
        AnalyticValue::Circle(c) => format!(
            "circle center ({}, {}) radius {}",
            c.center.x.to_decimal_string(digits),
            c.center.y.to_decimal_string(digits),
            c.radius.to_decimal_string(digits)
        ),
    }
}

fn cmd_compile(config: &Config, source: &Path, output: Option<&Path>) -> i32 {
    let text = match read_source(source) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let lowered = match lang::compile(&text, config) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{}: {e}", source.display());
            return 1;
        }
    };
    match write_output(output, &lowered.trace.to_string()) {
        Ok(()) => 0,
        Err(code) => code,
    }
}

fn cmd_verify(trace_path: &Path, strict: bool) -> i32 {
    let text = match read_source(trace_path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let trace = match Trace::parse(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", trace_path.display());
            return 2;
        }
    };
    let config = match trace.header.to_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}: {e}", trace_path.display());
            return 2;
        }
    };
    let report = verifier::verify_parsed(&trace, &config);
    print!("{report}");
    if report.verdict != Verdict::Accept {
        return 1;
    }
    if strict && report.stats.max_precision_bits > config.precision_bits {
        eprintln!(
            "strict: precision escalated to {} bits (base {})",
            report.stats.max_precision_bits, config.precision_bits
        );
        return 1;
    }
    0
}

fn cmd_render(trace_path: &Path, output: Option<&Path>) -> i32 {
    let text = match read_source(trace_path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let trace = match Trace::parse(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", trace_path.display());
            return 2;
        }
    };
    match write_output(output, &render_svg(&trace)) {
        Ok(()) => 0,
        Err(code) => code,
    }
}

/// Compile, verify, and oracle-compare one program. Used by both the CLI
/// and batch tests; returns the per-stage exit code.
pub fn check_program(source: &str, config: &Config, quiet: bool) -> i32 {
    let program = match lang::parse(source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let lowered = match lang::lower(&program, config) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let report = verifier::verify_parsed(&lowered.trace, config);
    if !quiet {
        print!("{report}");
    }
    if report.verdict != Verdict::Accept {
        if quiet {
            eprint!("{report}");
        }
        return 2;
    }
    match oracle::compare(&program, &lowered.trace, config) {
        Ok(oracle_report) => {
            if !quiet {
                print!("{oracle_report}");
            }
            if oracle_report.pass {
                0
            } else {
                if quiet {
                    eprint!("{oracle_report}");
                }
                3
            }
        }
        Err(e) => {
            eprintln!("oracle: {e}");
            3
        }
    }
}

fn cmd_check(config: &Config, source: &Path) -> i32 {
    let text = match read_source(source) {
        Ok(t) => t,
        Err(code) => return code,
    };
    check_program(&text, config, false)
}

fn cmd_oracle(config: &Config, source: &Path) -> i32 {
    let text = match read_source(source) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let program: Program = match lang::parse(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let values = match oracle::evaluate_analytic(&program, config) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("oracle: {e}");
            return 1;
        }
    };
    for stmt in &program.statements {
        if let StmtKind::Output { name } = &stmt.kind {
            if let Some(value) = values.get(name) {
                println!("{name} = {}", format_analytic(value, config.output_digits));
            }
        }
    }
    0
}

/// Run the CLI against the given argument list; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // Help/version print to stdout and exit 0; clap encodes that.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = match resolve_config(&cli.config) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match &cli.command {
        Command::Compile { source, output } => cmd_compile(&config, source, output.as_deref()),
        Command::Verify { trace, strict } => cmd_verify(trace, *strict),
        Command::Render { trace, output } => cmd_render(trace, output.as_deref()),
        Command::Check { source } => cmd_check(&config, source),
        Command::Oracle { source } => cmd_oracle(&config, source),
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

//! Command-line front end.
//!
//! Exit codes: 0 the identity holds, 1 it was computed and failed, 2 bad
//! input or flags, 3 degenerate configuration.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::ceva::CevaError;
use crate::circle::CircleError;
use crate::config::{parse_config, ConfigError, ConfigFile};
use crate::harness::{fuzz_theorem1, fuzz_theorem2, FuzzReport, GenParams, InscribedMode};
use crate::report::{ceva_report, counterexample_report, inscribed_report, RunReport};
use crate::svg::{render_svg, SvgError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Holds = 0,
    Violated = 1,
    InputError = 2,
    Degenerate = 3,
}

#[derive(Debug, Parser)]
#[command(name = "ceva", version, about = "Exact verification of generalized Ceva identities")]
pub struct Cli {
    /// Print an aligned text table instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Print JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the identity for a configuration file of any kind.
    Verify { file: PathBuf },
    /// Build the pentagon counterexample from a `counterexample` file.
    Counterexample { file: PathBuf },
    /// Run a seeded batch of random configurations.
    Fuzz(FuzzArgs),
    /// Draw a configuration as SVG.
    Svg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FuzzKind {
    Ceva,
    Inscribed,
    Concurrent,
}

#[derive(Debug, clap::Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = FuzzKind::Ceva)]
    kind: FuzzKind,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    /// Defaults to 9 for `ceva` and 7 otherwise.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    bound: i64,
    #[arg(long, default_value_t = 1000)]
    max_rejections: u32,
}

struct Output<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    pretty: bool,
}

impl Output<'_> {
    fn fail(&mut self, code: Exit, message: impl std::fmt::Display) -> Exit {
        let _ = writeln!(self.err, "error: {message}");
        code
    }

    fn report(&mut self, report: &RunReport) -> Exit {
        let text = if self.pretty {
            report.to_table()
        } else {
            report.to_json() + "\n"
        };
        let _ = self.out.write_all(text.as_bytes());
        if report.holds {
            Exit::Holds
        } else {
            Exit::Violated
        }
    }
}

fn config_exit(e: &ConfigError) -> Exit {
    match e {
        ConfigError::Degenerate { .. } => Exit::Degenerate,
        _ => Exit::InputError,
    }
}

fn ceva_exit(e: &CevaError) -> Exit {
    match e {
        CevaError::Degenerate { .. } | CevaError::NoCounterexampleBranch => Exit::Degenerate,
        _ => Exit::InputError,
    }
}

fn circle_exit(e: &CircleError) -> Exit {
    match e {
        CircleError::Degenerate { .. } | CircleError::Tangent | CircleError::TangentLine { .. } => {
            Exit::Degenerate
        }
        _ => Exit::InputError,
    }
}

fn load(path: &Path, io: &mut Output<'_>) -> Result<ConfigFile, Exit> {
    let bytes = std::fs::read(path)
        .map_err(|e| io.fail(Exit::InputError, format!("{}: {e}", path.display())))?;
    parse_config(&bytes).map_err(|e| io.fail(config_exit(&e), format!("{}: {e}", path.display())))
}

fn verify(cfg: &ConfigFile, io: &mut Output<'_>) -> Exit {
    let result = match cfg {
        ConfigFile::Ceva(c) => ceva_report(c).map_err(|e| (ceva_exit(&e), e.to_string())),
        ConfigFile::Inscribed(c) => {
            inscribed_report(c).map_err(|e| (circle_exit(&e), e.to_string()))
        }
        ConfigFile::Counterexample(c) => {
            counterexample_report(c).map_err(|e| (ceva_exit(&e), e.to_string()))
        }
    };
    match result {
        Ok(report) => io.report(&report),
        Err((code, message)) => io.fail(code, message),
    }
}

fn fuzz(args: &FuzzArgs, io: &mut Output<'_>) -> Exit {
    let params = GenParams {
        seed: args.seed,
        n_min: args.n_min,
        n_max: args.n_max.unwrap_or(match args.kind {
            FuzzKind::Ceva => 9,
            _ => 7,
        }),
        coordinate_bound: args.bound,
        max_rejections: args.max_rejections,
    };
    let result = match args.kind {
        FuzzKind::Ceva => fuzz_theorem1(&params, args.trials),
        FuzzKind::Inscribed => fuzz_theorem2(&params, args.trials, InscribedMode::Chords),
        FuzzKind::Concurrent => fuzz_theorem2(&params, args.trials, InscribedMode::Concurrent),
    };
    let report: FuzzReport = match result {
        Ok(r) => r,
        Err(e) => return io.fail(Exit::InputError, e),
    };
    let text = if io.pretty {
        format!(
            "{}: {}/{} trials completed, {} rejections, {} exhausted, {} failures, {} ms\n",
            report.kind,
            report.trials_completed,
            report.trials_requested,
            report.rejections,
            report.exhausted,
            report.failures.len(),
            report.elapsed.as_millis()
        )
    } else {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    };
    let _ = io.out.write_all(text.as_bytes());
    if report.passed() {
        Exit::Holds
    } else {
        Exit::Violated
    }
}

fn svg(cfg: &ConfigFile, out: &Path, io: &mut Output<'_>) -> Exit {
    let doc = match render_svg(cfg) {
        Ok(doc) => doc,
        Err(SvgError::Ceva(e)) => return io.fail(ceva_exit(&e), e),
        Err(SvgError::Circle(e)) => return io.fail(circle_exit(&e), e),
    };
    match std::fs::write(out, doc) {
        Ok(()) => Exit::Holds,
        Err(e) => io.fail(Exit::InputError, format!("{}: {e}", out.display())),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                Exit::InputError
            } else {
                Exit::Holds
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Output {
        out,
        err,
        pretty: cli.pretty,
    };
    match &cli.command {
        Command::Verify { file } => match load(file, &mut io) {
            Ok(cfg) => verify(&cfg, &mut io),
            Err(code) => code,
        },
        Command::Counterexample { file } => match load(file, &mut io) {
            Ok(cfg @ ConfigFile::Counterexample(_)) => verify(&cfg, &mut io),
            Ok(other) => io.fail(
                Exit::InputError,
                format!(
                    "{}: expected kind \"counterexample\", got \"{}\"",
                    file.display(),
                    other.kind()
                ),
            ),
            Err(code) => code,
        },
        Command::Fuzz(args) => fuzz(args, &mut io),
        Command::Svg { file, out } => match load(file, &mut io) {
            Ok(cfg) => svg(&cfg, out, &mut io),
            Err(code) => code,
        },
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 unparsable input, 3 internal
//! invariant violation (or kernel/oracle disagreement in `equiv`).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pawfree::{
    enumerate_paws, generate_random_instance, is_paw_free, kernelize, parse_instance, run_equivalence, solve_exact,
    write_instance, EquivConfig, Instance, PlantedSpec, Problem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pawfree", version, about = "Kernels and exact solvers for paw-free edge modification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an instance and write the kernel.
    Kernelize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Report file; printed to stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide an instance exactly and print a solution.
    Solve {
        #[arg(long)]
        input: PathBuf,
    },
    /// Report whether the graph is paw-free and how many paws it has.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        problem: Problem,
        /// Planted structure, e.g. `cm:3x2,tone:6x1,pendants:2`.
        #[arg(long)]
        planted: Option<String>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare both kernels with the exact solver on random instances.
    Equiv {
        #[arg(long, default_value_t = EquivConfig::default().trials)]
        trials: usize,
        #[arg(long, default_value_t = EquivConfig::default().n_max)]
        n_max: usize,
        #[arg(long, default_value_t = EquivConfig::default().k_max)]
        k_max: i64,
        #[arg(long, default_value_t = EquivConfig::default().seed)]
        seed: u64,
    },
}

/// A failed command with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Runs the CLI on `argv` (program name first), writing to `out` and `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("cannot write output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Kernelize { input, output, report } => {
            let instance = read_instance(&input)?;
            let result = kernelize(&instance).map_err(|e| Failure {
                code: EXIT_INTERNAL,
                message: format!("kernelization failed: {e}"),
            })?;
            write_file(&output, &write_instance(&result.kernel))?;
            match report {
                Some(path) => write_file(&path, &result.render())?,
                None => emit(out, &result.render())?,
            }
        }
        Command::Solve { input } => {
            let instance = read_instance(&input)?;
            match solve_exact(&instance) {
                Some(solution) => {
                    let mut text = format!("yes\nsize: {}\n", solution.size());
                    for (u, v) in &solution.edges {
                        text += &format!("e {} {}\n", u + 1, v + 1);
                    }
                    emit(out, &text)?;
                }
                None => emit(out, "no\n")?,
            }
        }
        Command::Check { input } => {
            let instance = read_instance(&input)?;
            let paws = enumerate_paws(&instance.graph).len();
            let free = is_paw_free(&instance.graph);
            if free != (paws == 0) {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    message: format!("structural test says paw-free = {free} but {paws} paws were found"),
                });
            }
            emit(out, &format!("paw_free: {free}\npaws: {paws}\n"))?;
        }
        Command::Gen {
            seed,
            n,
            p,
            k,
            problem,
            planted,
            output,
        } => {
            let spec: Option<PlantedSpec> = planted
                .as_deref()
                .map(str::parse::<PlantedSpec>)
                .transpose()
                .map_err(|e| usage(e.to_string()))?;
            let instance =
                generate_random_instance(seed, n, p, k, problem, spec.as_ref()).map_err(|e| usage(e.to_string()))?;
            let text = write_instance(&instance);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => emit(out, &text)?,
            }
        }
        Command::Equiv {
            trials,
            n_max,
            k_max,
            seed,
        } => {
            let stats = run_equivalence(&EquivConfig {
                trials,
                n_max,
                k_max,
                seed,
            });
            let mut text = stats.render();
            for m in &stats.mismatches {
                text += &format!("mismatch.trial {}: {}\n", m.trial, m.detail);
            }
            emit(out, &text)?;
            if !stats.mismatches.is_empty() {
                return Ok(EXIT_INTERNAL);
            }
        }
    }
    Ok(EXIT_OK)
}

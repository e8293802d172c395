//! Command-line front end for `ghzsep`: classification reports, the `ρ_{p,q}`
//! plane sweep, `C(z)` cross-checks, witness emission and the self-test suites.

pub mod error;
pub mod report;
pub mod selftest;
pub mod statefile;
pub mod svg;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ghzsep::decider::{decide, necessary_check, NecessaryVerdict};
use ghzsep::oracle::{c_grid_oracle, DEFAULT_GRID};
use ghzsep::witness::{c_value, classify_region};
use ghzsep::Execution;
use serde::Serialize;

pub use error::CliError;
use report::NECESSARY_SAMPLES;
use selftest::{Config, Level, DEFAULT_SEED};
use statefile::{Input, StateFile, WitnessFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ghzsep", version, about = "Separability of three-qubit GHZ-diagonal states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a state file as separable, PPT-entangled or NPT-entangled.
    Classify {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        json: bool,
        /// Seed for the complex-z search on general X-states.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep the rho_{p,q} plane on a grid x grid lattice.
    SweepPq {
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG region map.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Closed-form C(z) with an angle-grid cross-check.
    Cvalue {
        /// Four comma-separated reals, e.g. --z -1,2,2,2
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        json: bool,
    },
    /// Write an entanglement witness for an entangled state.
    Witness {
        #[arg(long)]
        state: PathBuf,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the cross-validation suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Level::Full)]
        level: Level,
        #[arg(long)]
        json: bool,
        /// Multiplies every numeric tolerance; 0 injects a fault.
        #[arg(long, hide = true, default_value_t = 1.0)]
        tolerance_scale: f64,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

fn parse_z(text: &str) -> Result<[f64; 4], CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Parse(format!(
            "--z expects four comma-separated numbers, got {}",
            parts.len()
        )));
    }
    let mut z = [0.0f64; 4];
    for (i, p) in parts.iter().enumerate() {
        z[i] = p
            .parse()
            .map_err(|_| CliError::Parse(format!("--z component {}: {p:?} is not a number", i + 1)))?;
        if !z[i].is_finite() {
            return Err(CliError::Parse(format!("--z component {} is not finite", i + 1)));
        }
    }
    Ok(z)
}

#[derive(Serialize)]
struct CvalueReport {
    z: [f64; 4],
    region: String,
    c_value: f64,
    oracle: f64,
    difference: f64,
}

fn cmd_cvalue(z: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let z = parse_z(z)?;
    let region = classify_region(&z).map_err(|e| CliError::Parse(format!("--z: {e}")))?;
    let c = c_value(&z)?;
    let oracle = c_grid_oracle(&z, DEFAULT_GRID, Execution::default());
    let r = CvalueReport {
        z,
        region: region.to_string(),
        c_value: c,
        oracle,
        difference: (c - oracle).abs(),
    };
    let text = if json {
        serde_json::to_string_pretty(&r).expect("plain data") + "\n"
    } else {
        format!(
            "region      {}\nC(z)        {}\noracle      {}\ndifference  {:e}\n",
            r.region, r.c_value, r.oracle, r.difference
        )
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_classify(path: &Path, json: bool, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = StateFile::read(path)?.to_input()?;
    let report = report::classify(&input, seed)?;
    let text = if json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_sweep(grid: usize, csv_path: &Path, svg_path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    if grid < 2 {
        return Err(CliError::Usage("--grid must be at least 2".into()));
    }
    let records = sweep::sweep(grid, Execution::default());
    let mut buf = Vec::new();
    sweep::write_csv(&records, &mut buf)?;
    std::fs::write(csv_path, buf).map_err(|e| CliError::io(csv_path, e))?;
    if let Some(svg_path) = svg_path {
        write_file(svg_path, &svg::render(&records, grid))?;
    }
    let separable = records.iter().filter(|r| r.separable).count();
    emit(
        out,
        &format!(
            "{} cells, {separable} separable; wrote {}\n",
            records.len(),
            csv_path.display()
        ),
    )?;
    Ok(EXIT_OK)
}

fn cmd_witness(path: &Path, out_path: Option<&Path>, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let cert = match StateFile::read(path)?.to_input()? {
        Input::GhzDiagonal(s) => {
            let v = decide(&s);
            if !v.positive {
                return Err(CliError::Refused(
                    "input is not positive semidefinite, so it is not a state".into(),
                ));
            }
            match v.witness {
                Some(w) => w,
                None => return Err(CliError::Refused("state is separable: no witness exists".into())),
            }
        }
        Input::General(x) => {
            if !x.is_positive() {
                return Err(CliError::Refused(
                    "input is not positive semidefinite, so it is not a state".into(),
                ));
            }
            let r = necessary_check(&x, NECESSARY_SAMPLES, seed)?;
            match (r.verdict, r.witness) {
                (NecessaryVerdict::EntangledCertified, Some(w)) => w,
                _ => {
                    return Err(CliError::Refused(
                        "no witness found: the necessary condition holds, so entanglement is not certified".into(),
                    ))
                }
            }
        }
    };
    let text = serde_json::to_string_pretty(&WitnessFile::from(&cert)).expect("plain data") + "\n";
    match out_path {
        Some(p) => {
            write_file(p, &text)?;
            emit(out, &format!("pairing {}; wrote {}\n", cert.pairing_value, p.display()))?;
        }
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn cmd_selftest(cfg: Config, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut results = Vec::new();
    for &(id, _) in selftest::SUITES.iter() {
        let r = selftest::run_suite(id, &cfg);
        if !json {
            emit(out, &(r.line() + "\n"))?;
        }
        results.push(r);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if json {
        emit(
            out,
            &(serde_json::to_string_pretty(&results).expect("plain data") + "\n"),
        )?;
    } else {
        emit(out, &format!("{} suites, {failed} failed\n", results.len()))?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_SELFTEST })
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify { state, json, seed } => cmd_classify(&state, json, seed, out),
        Command::SweepPq { grid, out: csv, svg } => cmd_sweep(grid, &csv, svg.as_deref(), out),
        Command::Cvalue { z, json } => cmd_cvalue(&z, json, out),
        Command::Witness { state, out: path, seed } => cmd_witness(&state, path.as_deref(), seed, out),
        Command::Selftest {
            seed,
            level,
            json,
            tolerance_scale,
        } => cmd_selftest(
            Config {
                seed,
                level,
                tolerance_scale,
                exec: Execution::default(),
            },
            json,
            out,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_parsing() {
        assert_eq!(parse_z("-1, 2,2,2").unwrap(), [-1.0, 2.0, 2.0, 2.0]);
        assert!(parse_z("1,2,3").is_err());
        assert!(parse_z("1,2,x,4").is_err());
        assert!(parse_z("1,2,inf,4").is_err());
    }
}

//! Command-line front end. Exit codes: 0 success, 1 input error,
//! 2 verification mismatch.

use crate::bipartite::concurrence_vector;
use crate::io::{fmt_num, sweep, write_sweep_csv, ReportDocument, StateFile, SweepFamily};
use crate::multipartite::{pairwise_component, pairwise_subvector};
use crate::oracle::verify_components;
use crate::state::{random_state, Family, PureState};
use crate::{Complex64, Result, DEFAULT_SEPARABILITY_TOL};
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

pub const DEFAULT_VERIFY_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "concurrence",
    version,
    about = "Concurrence vectors of multipartite pure states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pairwise and total concurrence of a state file.
    Compute {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEPARABILITY_TOL)]
        tol: f64,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Dump the concurrence components of one subsystem pair.
    Components {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [0, 1])]
        pair: Vec<usize>,
    },
    /// Write a named state to a state file.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a three-qubit superposition family as CSV.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        phi_values: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form components against the dense operator definition.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_TOL)]
        tol: f64,
    },
}

/// Reads and validates a state file; errors are prefixed with the path and
/// the offending line.
pub fn load_state(path: &Path) -> std::result::Result<PureState, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = StateFile::parse(&text).map_err(|e| match e.line {
        Some(line) => format!("{}:{line}: {}", path.display(), e.message),
        None => format!("{}: {}", path.display(), e.message),
    })?;
    file.to_state()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(
    out_path: Option<&Path>,
    body: &str,
    stdout: &mut dyn Write,
) -> std::result::Result<(), String> {
    match out_path {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn family_from_args(
    name: &str,
    m: Option<usize>,
    s: Option<f64>,
    phi: f64,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> std::result::Result<Family, String> {
    let need_m = || m.ok_or_else(|| format!("family `{name}` needs --m"));
    let need_s = || s.ok_or_else(|| format!("family `{name}` needs --s"));
    Ok(match name {
        "ghz" => Family::Ghz { m: need_m()? },
        "w" => Family::W { m: need_m()? },
        "antiw" | "anti_w" | "anti-w" => Family::AntiW { m: need_m()? },
        "epr1" => match (alpha, beta) {
            (Some(a), Some(b)) => Family::EprTimesSingle {
                alpha: Complex64::new(a, 0.0),
                beta: Complex64::new(b, 0.0),
            },
            _ => return Err("family `epr1` needs --alpha and --beta".into()),
        },
        "ww" => Family::WwSuperposition { s: need_s()?, phi },
        "gw" => Family::GwSuperposition { s: need_s()?, phi },
        other => {
            return Err(format!(
                "unknown family `{other}` (expected ghz, w, antiw, epr1, ww, gw, random)"
            ))
        }
    })
}

fn components_text(psi: &PureState, i: usize, j: usize) -> Result<String> {
    let mut s = String::new();
    if psi.num_subsystems() == 2 {
        let v = concurrence_vector(psi)?;
        let (rows, cols) = v.shape();
        s += "alpha_i,alpha_j,re,im\n";
        for a in 0..rows {
            for b in 0..cols {
                let c = v.component(a, b);
                s += &format!("{a},{b},{},{}\n", fmt_num(c.re), fmt_num(c.im));
            }
        }
    } else {
        let sub = pairwise_subvector(psi, i, j)?;
        s += "alpha_i,alpha_j,value\n";
        for a in 0..sub.rows {
            for b in 0..sub.cols {
                s += &format!("{a},{b},{}\n", fmt_num(sub.component(a, b)));
            }
        }
    }
    Ok(s)
}

/// The `verify` command with the closed form supplied by the caller.
pub fn verify_command<F>(
    path: &Path,
    tol: f64,
    closed_form: F,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    F: Fn(&PureState, usize, usize, usize, usize) -> Result<f64>,
{
    let psi = match load_state(path) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let report = match verify_components(&psi, closed_form) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let mut body = String::from("i,j,alpha_i,alpha_j,definitional,closed_form,deviation\n");
    for c in &report.checks {
        body += &format!(
            "{},{},{},{},{},{},{:e}\n",
            c.i,
            c.j,
            c.alpha_i,
            c.alpha_j,
            fmt_num(c.definitional),
            fmt_num(c.closed_form),
            c.deviation()
        );
    }
    let ok = report.passes(tol);
    body += &format!("max deviation: {:e}\n", report.max_deviation);
    body += &format!("tolerance: {tol:e}\n");
    body += if ok {
        "result: match\n"
    } else {
        "result: MISMATCH\n"
    };
    let _ = stdout.write_all(body.as_bytes());
    if ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::result::Result<i32, String> {
    match command {
        Command::Compute {
            file, tol, json, ..
        } => {
            let psi = load_state(&file)?;
            let doc =
                ReportDocument::build(&psi, tol).map_err(|e| format!("{}: {e}", file.display()))?;
            let body = if json { doc.to_json() } else { doc.to_text() };
            write_output(None, &body, stdout)?;
        }
        Command::Components { file, pair } => {
            let psi = load_state(&file)?;
            let body = components_text(&psi, pair[0], pair[1])
                .map_err(|e| format!("{}: {e}", file.display()))?;
            write_output(None, &body, stdout)?;
        }
        Command::Gen {
            family,
            m,
            s,
            phi,
            alpha,
            beta,
            seed,
            dims,
            out,
        } => {
            let psi = if family == "random" {
                let dims = dims.ok_or("family `random` needs --dims")?;
                random_state(&dims, seed.unwrap_or(0))
            } else {
                family_from_args(&family, m, s, phi, alpha, beta)?.build()
            }
            .map_err(|e| e.to_string())?;
            write_output(
                out.as_deref(),
                &StateFile::from_state(&psi).to_json(),
                stdout,
            )?;
        }
        Command::Sweep {
            family,
            steps,
            phi_values,
            out,
        } => {
            let fam = match family.as_str() {
                "ww" => SweepFamily::Ww,
                "gw" => SweepFamily::Gw,
                other => {
                    return Err(format!(
                        "unknown sweep family `{other}` (expected ww or gw)"
                    ))
                }
            };
            let rows = sweep(fam, steps, &phi_values).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            write_sweep_csv(&rows, 3, &mut buf).map_err(|e| e.to_string())?;
            write_output(out.as_deref(), &String::from_utf8_lossy(&buf), stdout)?;
        }
        Command::Verify { file, tol } => {
            return Ok(verify_command(
                &file,
                tol,
                pairwise_component,
                stdout,
                stderr,
            ));
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

//! `schub`: compute Schubert/key polynomials, diagram bounds, and dual
//! characters; exhaustively audit the bound-attainment theorems.
//!
//! Exit status: 0 = success and (for audits) zero disagreements,
//! 1 = an audit found a disagreement, 2 = usage or range error.

mod audit;
mod input;
mod render;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubert_bounds::characters::{key_poly, schubert_poly};
use schubert_bounds::combinat::{count_max_avoiders, schroeder};
use schubert_bounds::diagrams::{
    count_sub_diagrams, max_poly, min_poly, rothe_diagram, skyline_diagram, Diagram,
};
use schubert_bounds::lorentz::{is_lorentzian_with_limits, LorentzLimits};
use schubert_bounds::weyl::dual_character;
use schubert_bounds::Poly;

use audit::VerifyParams;
use input::ComputeInput;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Range(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Range(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "schub",
    version,
    about = "Exact Schubert and key polynomials, diagram bounds, Weyl-module dual characters, and exhaustive theorem audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print it in canonical order
    Compute {
        #[arg(value_enum)]
        kind: ComputeKind,
        /// Permutation word (1432), comma-separated composition (0,2),
        /// diagram (`[[],[2,3],[2],[]]`), or polynomial JSON, as the kind allows
        input: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Lift the default size guards
        #[arg(long)]
        force: bool,
    },
    /// Audit a theorem exhaustively over a range
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Symmetric group size for permutation audits
        #[arg(long)]
        n: Option<usize>,
        /// Composition length for key audits
        #[arg(long)]
        len: Option<usize>,
        /// Largest allowed part for key audits
        #[arg(long = "max-part")]
        max_part: Option<u32>,
        /// Size bound for the dependence identity
        #[arg(long)]
        b: Option<usize>,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Write the report to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Lift the default range guards
        #[arg(long)]
        force: bool,
    },
    /// Count combinatorial families
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ComputeKind {
    Schubert,
    Key,
    Min,
    Max,
    DualChar,
    Rothe,
    Skyline,
    Lorentzian,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    SchubertMax,
    SchubertMin,
    KeyMax,
    KeyMin,
    KeyLorentzian,
    SchroederCount,
    DualcharSchubert,
    DualcharKey,
    ReducedDisjoint,
    DependenceIdentity,
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::SchubertMax => "schubert-max",
            Theorem::SchubertMin => "schubert-min",
            Theorem::KeyMax => "key-max",
            Theorem::KeyMin => "key-min",
            Theorem::KeyLorentzian => "key-lorentzian",
            Theorem::SchroederCount => "schroeder-count",
            Theorem::DualcharSchubert => "dualchar-schubert",
            Theorem::DualcharKey => "dualchar-key",
            Theorem::ReducedDisjoint => "reduced-disjoint",
            Theorem::DependenceIdentity => "dependence-identity",
        }
    }
}

#[derive(Subcommand)]
enum CountWhat {
    /// Permutations of {1..n} avoiding both 1432 and 1423
    MaxAvoiders {
        #[arg(long)]
        n: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Lift the default size guard
        #[arg(long)]
        force: bool,
    },
    /// Large Schroeder number r_k
    Schroeder {
        #[arg(long)]
        k: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Number of sub-diagrams C <= D for the input's diagram
    SubDiagrams {
        input: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Write the output to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Lift the default size guard
        #[arg(long)]
        force: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn force_enabled(flag: bool) -> bool {
    flag || std::env::var("SCHUB_FORCE")
        .map(|v| v == "1" || v.eq_ignore_ascii_case("true"))
        .unwrap_or(false)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute {
            kind,
            input,
            json,
            out,
            force,
        } => {
            let rendered = run_compute(kind, &input, json, force_enabled(force))?;
            emit(&rendered, out.as_deref())?;
            Ok(true)
        }
        Command::Verify {
            theorem,
            n,
            len,
            max_part,
            b,
            json,
            out,
            force,
        } => {
            let params = VerifyParams {
                n,
                len,
                max_part,
                b,
                force: force_enabled(force),
            };
            let report = audit::run_verify(theorem, &params)?;
            eprintln!("wall-time-ms: {}", report.wall_ms);
            let rendered = if json {
                let mut s = render::to_json_string(&report.to_json());
                s.push('\n');
                s
            } else {
                report.to_text()
            };
            emit(&rendered, out.as_deref())?;
            Ok(report.all_agree())
        }
        Command::Count { what } => {
            let (rendered, out) = run_count(what)?;
            emit(&rendered, out.as_deref())?;
            Ok(true)
        }
    }
}

const COMPUTE_GUARD_N: usize = 9;
const COMPUTE_GUARD_DUALCHAR_N: usize = 5;
const SCHROEDER_U64_LIMIT: usize = 25;

fn guard(quantity: &str, value: usize, limit: usize, force: bool) -> Result<(), CliError> {
    if !force && value > limit {
        return Err(CliError::Range(format!(
            "{quantity} = {value} exceeds the default guard {limit} (use --force or SCHUB_FORCE=1)"
        )));
    }
    Ok(())
}

/// Converts a flexible input into the diagram it denotes: a permutation
/// gives its Rothe diagram, a composition its skyline diagram.
fn input_diagram(parsed: ComputeInput, force: bool, n_limit: usize) -> Result<Diagram, CliError> {
    let d = match parsed {
        ComputeInput::Perm(w) => rothe_diagram(&w),
        ComputeInput::Comp(a) => skyline_diagram(&a),
        ComputeInput::Diag(d) => d,
        ComputeInput::Polynomial(_) => {
            return Err(CliError::Usage(
                "this kind expects a permutation, composition, or diagram".into(),
            ))
        }
    };
    guard("diagram size n", d.n(), n_limit, force)?;
    Ok(d)
}

fn run_compute(kind: ComputeKind, raw: &str, json: bool, force: bool) -> Result<String, CliError> {
    match kind {
        ComputeKind::Schubert => {
            let w = input::parse_permutation(raw)?;
            guard("permutation size n", w.len(), COMPUTE_GUARD_N, force)?;
            Ok(render_poly(&schubert_poly(&w), json))
        }
        ComputeKind::Key => {
            let a = input::parse_composition(raw)?;
            guard("composition length", a.len(), COMPUTE_GUARD_N, force)?;
            guard(
                "composition max part",
                a.max_part() as usize,
                COMPUTE_GUARD_N,
                force,
            )?;
            Ok(render_poly(&key_poly(&a), json))
        }
        ComputeKind::Rothe => {
            let w = input::parse_permutation(raw)?;
            guard("permutation size n", w.len(), COMPUTE_GUARD_N, force)?;
            Ok(render_diagram(&rothe_diagram(&w), json))
        }
        ComputeKind::Skyline => {
            let a = input::parse_composition(raw)?;
            guard("composition length", a.len(), COMPUTE_GUARD_N, force)?;
            guard(
                "composition max part",
                a.max_part() as usize,
                COMPUTE_GUARD_N,
                force,
            )?;
            Ok(render_diagram(&skyline_diagram(&a), json))
        }
        ComputeKind::Min => {
            let d = input_diagram(input::parse_flexible(raw)?, force, COMPUTE_GUARD_N)?;
            Ok(render_poly(&min_poly(&d), json))
        }
        ComputeKind::Max => {
            let d = input_diagram(input::parse_flexible(raw)?, force, COMPUTE_GUARD_N)?;
            Ok(render_poly(&max_poly(&d), json))
        }
        ComputeKind::DualChar => {
            let d = input_diagram(input::parse_flexible(raw)?, force, COMPUTE_GUARD_DUALCHAR_N)?;
            Ok(render_poly(&dual_character(&d), json))
        }
        ComputeKind::Lorentzian => {
            let poly = match input::parse_flexible(raw)? {
                ComputeInput::Perm(w) => {
                    guard("permutation size n", w.len(), COMPUTE_GUARD_N, force)?;
                    schubert_poly(&w)
                }
                ComputeInput::Comp(a) => {
                    guard("composition length", a.len(), COMPUTE_GUARD_N, force)?;
                    guard(
                        "composition max part",
                        a.max_part() as usize,
                        COMPUTE_GUARD_N,
                        force,
                    )?;
                    key_poly(&a)
                }
                ComputeInput::Diag(d) => {
                    guard("diagram size n", d.n(), COMPUTE_GUARD_DUALCHAR_N, force)?;
                    dual_character(&d)
                }
                ComputeInput::Polynomial(p) => p,
            };
            let limits = if force {
                LorentzLimits {
                    max_degree: 64,
                    max_vars: 12,
                }
            } else {
                LorentzLimits::default()
            };
            let verdict = is_lorentzian_with_limits(&poly, limits)
                .map_err(|e| CliError::Range(e.to_string()))?;
            if json {
                Ok(format!(
                    "{}\n",
                    render::to_json_string(&json!({ "lorentzian": verdict }))
                ))
            } else {
                Ok(format!("{verdict}\n"))
            }
        }
    }
}

fn render_poly(p: &Poly, json: bool) -> String {
    if json {
        format!("{}\n", render::to_json_string(&render::poly_json(p)))
    } else {
        format!("{p}\n")
    }
}

fn render_diagram(d: &Diagram, json: bool) -> String {
    if json {
        format!("{}\n", render::to_json_string(&render::diagram_json(d)))
    } else {
        format!("{d}\n")
    }
}

fn run_count(what: CountWhat) -> Result<(String, Option<PathBuf>), CliError> {
    match what {
        CountWhat::MaxAvoiders {
            n,
            json,
            out,
            force,
        } => {
            if n < 1 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            guard("n", n, COMPUTE_GUARD_N, force_enabled(force))?;
            let count = count_max_avoiders(n);
            let rendered = if json {
                format!(
                    "{}\n",
                    render::to_json_string(&json!({"n": n, "count": count.to_string()}))
                )
            } else {
                format!("{count}\n")
            };
            Ok((rendered, out))
        }
        CountWhat::Schroeder { k, json, out } => {
            if k > SCHROEDER_U64_LIMIT {
                return Err(CliError::Range(format!(
                    "k = {k} exceeds the 64-bit limit {SCHROEDER_U64_LIMIT}"
                )));
            }
            let value = schroeder(k);
            let rendered = if json {
                format!(
                    "{}\n",
                    render::to_json_string(&json!({"k": k, "value": value.to_string()}))
                )
            } else {
                format!("{value}\n")
            };
            Ok((rendered, out))
        }
        CountWhat::SubDiagrams {
            input,
            json,
            out,
            force,
        } => {
            let d = input_diagram(
                input::parse_flexible(&input)?,
                force_enabled(force),
                COMPUTE_GUARD_N,
            )?;
            let count = count_sub_diagrams(&d);
            let rendered = if json {
                format!(
                    "{}\n",
                    render::to_json_string(&json!({"count": count.to_string()}))
                )
            } else {
                format!("{count}\n")
            };
            Ok((rendered, out))
        }
    }
}

fn emit(rendered: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

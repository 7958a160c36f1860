//! Command-line front end: parse a system from text, dispatch to the
//! library, and emit a human-readable or structured (JSON) report.
//!
//! Exit codes: 0 for a solved/successful run, 1 when solvability conditions
//! fail or a reduction is inconsistent, 2 for input errors, 3 when the
//! epsilon-determinant is not a unit. Indices in reports are 1-based.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::det::{adj_eps, det_eps, DetResult, Parity};
use crate::error::TropError;
use crate::io::{format_matrix, format_vector, parse_system};
use crate::matrix::{TropMatrix, TropVector};
use crate::reduce::{column_reduce, reduce_system, row_reduce, Dependency, ReducedSystem};
use crate::scalar::Semiring;
use crate::solve::{
    cramer_solve, pseudo_inverse, solvability_conditions, solve_system, Maximality, SolveOptions,
    SolveReport, SolveStatus, Violation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DET_NOT_UNIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Det,
    Adj,
    Pinv,
    Solve,
    Reduce,
    Check,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Det => "det",
            Command::Adj => "adj",
            Command::Pinv => "pinv",
            Command::Solve => "solve",
            Command::Reduce => "reduce",
            Command::Check => "check",
        }
    }
}

/// A fully resolved invocation.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub semiring: Semiring,
    pub command: Command,
    /// Input path; standard input when absent.
    pub input: Option<PathBuf>,
    pub format: OutputFormat,
    pub reduce_first: bool,
    pub verbose: bool,
}

#[derive(Parser)]
#[command(
    name = "trop",
    about = "Exact tropical linear algebra: determinants, pseudo-inverses, and system solving",
    version
)]
struct Args {
    #[command(subcommand)]
    command: ArgCommand,

    /// Semiring instance to compute in.
    #[arg(long, global = true, default_value = "max-plus", value_parser = parse_semiring)]
    semiring: Semiring,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Input file (standard input when omitted).
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,

    /// Apply row-column order reduction before solving.
    #[arg(long, global = true)]
    reduce_first: bool,

    /// Print extra cross-checks and intermediate matrices.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum ArgCommand {
    /// Epsilon-determinant with its witness permutation.
    Det,
    /// Epsilon-adjoint matrix.
    Adj,
    /// Pseudo-inverse matrix.
    Pinv,
    /// Solve AX = b (auto-dispatch on shape).
    Solve,
    /// Row-column order reduction of the system.
    Reduce,
    /// Solvability conditions on the entries of AA^-.
    Check,
}

fn parse_semiring(s: &str) -> Result<Semiring, String> {
    s.parse()
}

/// Parses process arguments and runs; returns the process exit code.
pub fn main() -> i32 {
    let args = Args::parse();
    let config = CliConfig {
        semiring: args.semiring,
        command: match args.command {
            ArgCommand::Det => Command::Det,
            ArgCommand::Adj => Command::Adj,
            ArgCommand::Pinv => Command::Pinv,
            ArgCommand::Solve => Command::Solve,
            ArgCommand::Reduce => Command::Reduce,
            ArgCommand::Check => Command::Check,
        },
        input: args.input,
        format: args.format,
        reduce_first: args.reduce_first,
        verbose: args.verbose,
    };
    match run(&config) {
        Ok((exit, output)) => {
            println!("{output}");
            exit
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for_error(&err)
        }
    }
}

fn exit_code_for_error(err: &TropError) -> i32 {
    match err {
        TropError::DetNotUnit(_) => EXIT_DET_NOT_UNIT,
        _ => EXIT_INPUT,
    }
}

fn read_input(config: &CliConfig) -> std::result::Result<String, TropError> {
    match &config.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| TropError::Parse {
            line: 0,
            column: 0,
            message: format!("cannot read {}: {e}", path.display()),
        }),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| TropError::Parse {
                    line: 0,
                    column: 0,
                    message: format!("cannot read standard input: {e}"),
                })?;
            Ok(buf)
        }
    }
}

/// Runs one command over the parsed input and returns the exit code and the
/// rendered report.
pub fn run(config: &CliConfig) -> std::result::Result<(i32, String), TropError> {
    let text = read_input(config)?;
    let (a, b) = parse_system(&text, config.semiring)?;
    let s = config.semiring;

    let require_b = |b: &Option<TropVector>| -> std::result::Result<TropVector, TropError> {
        let b = b.clone().ok_or_else(|| TropError::Parse {
            line: 0,
            column: 0,
            message: format!("`{}` needs a right-hand side section", config.command.name()),
        })?;
        if b.rows() != a.rows() {
            return Err(TropError::ShapeMismatch {
                op: "right-hand side",
                lhs_rows: a.rows(),
                lhs_cols: a.cols(),
                rhs_rows: b.rows(),
                rhs_cols: 1,
            });
        }
        Ok(b)
    };

    match config.command {
        Command::Det => {
            let det = det_eps(&a)?;
            Ok((EXIT_OK, render_det(config, &det)))
        }
        Command::Adj => {
            let adj = adj_eps(&a)?;
            let body = match config.format {
                OutputFormat::Text => format!(
                    "semiring: {s}\nadj_eps:\n{}",
                    format_matrix(&adj)
                ),
                OutputFormat::Structured => pretty(json!({
                    "command": "adj",
                    "semiring": s.name(),
                    "adj": matrix_value(&adj),
                })),
            };
            Ok((EXIT_OK, body))
        }
        Command::Pinv => {
            let det = det_eps(&a)?;
            let pinv = pseudo_inverse(&a)?;
            let body = match config.format {
                OutputFormat::Text => format!(
                    "semiring: {s}\ndet_eps: {}\npinv:\n{}",
                    s.format_scalar(&det.value),
                    format_matrix(&pinv)
                ),
                OutputFormat::Structured => pretty(json!({
                    "command": "pinv",
                    "semiring": s.name(),
                    "det": s.format_scalar(&det.value),
                    "pinv": matrix_value(&pinv),
                })),
            };
            Ok((EXIT_OK, body))
        }
        Command::Solve => {
            let b = require_b(&b)?;
            let report = solve_system(
                &a,
                &b,
                SolveOptions {
                    reduce_first: config.reduce_first,
                },
            )?;
            let cross_check = if config.verbose
                && report.status == SolveStatus::MaximalSolution
                && a.is_square()
                && report.reduction.is_none()
                && report.forced.is_empty()
            {
                let cramer = cramer_solve(&a, &b)?;
                Some(cramer)
            } else {
                None
            };
            let exit = match report.status {
                SolveStatus::MaximalSolution => EXIT_OK,
                SolveStatus::ConditionsViolated => EXIT_VIOLATED,
                SolveStatus::DetNotUnit => EXIT_DET_NOT_UNIT,
            };
            Ok((exit, render_solve(config, &a, &report, cross_check.as_ref())))
        }
        Command::Check => {
            let b = require_b(&b)?;
            let violations = solvability_conditions(&a, &b)?;
            let total_pairs = a.rows() * (a.rows() - 1);
            let exit = if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATED
            };
            let body = match config.format {
                OutputFormat::Text => {
                    let mut out = format!("semiring: {s}\n");
                    if violations.is_empty() {
                        out.push_str(&format!("conditions: all {total_pairs} hold"));
                    } else {
                        out.push_str(&format!(
                            "conditions: {} violated of {total_pairs}\n",
                            violations.len()
                        ));
                        out.push_str(&render_violations_text(s, &violations));
                    }
                    out
                }
                OutputFormat::Structured => pretty(json!({
                    "command": "check",
                    "semiring": s.name(),
                    "holds": violations.is_empty(),
                    "pairs_checked": total_pairs,
                    "violations": violations_value(s, &violations),
                })),
            };
            Ok((exit, body))
        }
        Command::Reduce => {
            let body_and_exit = match b {
                Some(b) => {
                    let b = require_b(&Some(b))?;
                    let reduced = reduce_system(&a, &b)?;
                    let exit = if reduced.consistent {
                        EXIT_OK
                    } else {
                        EXIT_VIOLATED
                    };
                    (exit, render_reduce(config, &reduced))
                }
                None => {
                    let (kept_rows, xi) = row_reduce(&a);
                    let (kept_cols, eta) = column_reduce(&a);
                    (EXIT_OK, render_analysis(config, &kept_rows, &xi, &kept_cols, &eta))
                }
            };
            Ok(body_and_exit)
        }
    }
}

fn pretty(value: Value) -> String {
    serde_json::to_string_pretty(&value).expect("json rendering cannot fail")
}

fn matrix_value(a: &TropMatrix) -> Value {
    let s = a.semiring();
    Value::Array(
        (0..a.rows())
            .map(|i| {
                Value::Array(
                    (0..a.cols())
                        .map(|j| Value::String(s.format_scalar(a.get(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn vector_value(v: &TropVector) -> Value {
    let s = v.semiring();
    Value::Array(
        (0..v.rows())
            .map(|i| Value::String(s.format_scalar(v.get(i, 0))))
            .collect(),
    )
}

fn indices_value(indices: &[usize]) -> Value {
    Value::Array(indices.iter().map(|&i| json!(i + 1)).collect())
}

fn violations_value(s: Semiring, violations: &[Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| match v {
                Violation::Condition { i, j, lhs, rhs } => json!({
                    "kind": "condition",
                    "i": i + 1,
                    "j": j + 1,
                    "lhs": s.format_scalar(lhs),
                    "rhs": s.format_scalar(rhs),
                }),
                Violation::Equation { i, got, want } => json!({
                    "kind": "equation",
                    "i": i + 1,
                    "got": s.format_scalar(got),
                    "want": s.format_scalar(want),
                }),
                Violation::DependentRow { row, got, want } => json!({
                    "kind": "dependent-row",
                    "row": row + 1,
                    "got": s.format_scalar(got),
                    "want": s.format_scalar(want),
                }),
            })
            .collect(),
    )
}

fn render_violations_text(s: Semiring, violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| match v {
            Violation::Condition { i, j, lhs, rhs } => format!(
                "  (AA-)[{},{}] = {} exceeds b[{}] (x) b[{}]^-1 = {}",
                i + 1,
                j + 1,
                s.format_scalar(lhs),
                i + 1,
                j + 1,
                s.format_scalar(rhs)
            ),
            Violation::Equation { i, got, want } => format!(
                "  equation {}: got {}, want {}",
                i + 1,
                s.format_scalar(got),
                s.format_scalar(want)
            ),
            Violation::DependentRow { row, got, want } => format!(
                "  dependent row {}: got {}, want {}",
                row + 1,
                s.format_scalar(got),
                s.format_scalar(want)
            ),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_det(config: &CliConfig, det: &DetResult) -> String {
    let s = config.semiring;
    let witness: Vec<usize> = det.witness.images().iter().map(|&j| j + 1).collect();
    match config.format {
        OutputFormat::Text => format!(
            "semiring: {s}\ndet_eps: {}\nwitness: ({})\nparity: {}",
            s.format_scalar(&det.value),
            witness
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            match det.parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            }
        ),
        OutputFormat::Structured => pretty(json!({
            "command": "det",
            "semiring": s.name(),
            "det": s.format_scalar(&det.value),
            "witness": witness,
            "parity": match det.parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
        })),
    }
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::MaximalSolution => "maximal-solution",
        SolveStatus::ConditionsViolated => "conditions-violated",
        SolveStatus::DetNotUnit => "det-not-unit",
    }
}

fn render_solve(
    config: &CliConfig,
    a: &TropMatrix,
    report: &SolveReport,
    cross_check: Option<&TropVector>,
) -> String {
    let s = config.semiring;
    match config.format {
        OutputFormat::Text => {
            let mut out = format!(
                "semiring: {s}\nsystem: {} equations, {} unknowns\nstatus: {}",
                a.rows(),
                a.cols(),
                status_name(report.status)
            );
            if !report.forced.is_empty() {
                let forced: Vec<String> =
                    report.forced.iter().map(|&j| (j + 1).to_string()).collect();
                out.push_str(&format!("\nforced to {}: {}", s.neutral_token(), forced.join(" ")));
            }
            if let Some(reduction) = &report.reduction {
                out.push_str(&format!(
                    "\nreduction: kept {} rows, {} columns ({})",
                    reduction.kept_rows.len(),
                    reduction.kept_cols.len(),
                    if reduction.consistent {
                        "consistent"
                    } else {
                        "inconsistent"
                    }
                ));
            }
            match report.status {
                SolveStatus::MaximalSolution => {
                    let x = report.x_star.as_ref().expect("solution present");
                    out.push_str(&format!("\nx*: {}", format_vector(x)));
                    if let Some(y) = &report.y_star {
                        out.push_str(&format!("\ny*: {}", format_vector(y)));
                    }
                    if let Some(maximality) = report.maximality {
                        out.push_str(&format!(
                            "\nmaximality: {}",
                            match maximality {
                                Maximality::Maximal => "maximal",
                                Maximality::NotNecessarilyMaximal => "not necessarily maximal",
                            }
                        ));
                    }
                    if let Some(unique) = report.unique {
                        out.push_str(&format!("\nunique: {unique}"));
                    }
                    if let Some(cramer) = cross_check {
                        out.push_str(&format!(
                            "\ncramer cross-check: {} (agrees)",
                            format_vector(cramer)
                        ));
                    }
                }
                SolveStatus::ConditionsViolated => {
                    if let Some(x) = &report.x_star {
                        out.push_str(&format!("\ncandidate: {}", format_vector(x)));
                    }
                    if let Some(r) = &report.residual {
                        out.push_str(&format!("\nresidual: {}", format_vector(r)));
                    }
                    out.push_str(&format!("\nviolations ({}):\n", report.violations.len()));
                    out.push_str(&render_violations_text(s, &report.violations));
                }
                SolveStatus::DetNotUnit => {
                    out.push_str("\nthe determinant is the additive identity; no pseudo-inverse exists");
                }
            }
            if config.verbose {
                if let Some(pinv) = &report.a_pinv {
                    out.push_str(&format!("\npinv:\n{}", format_matrix(pinv)));
                }
                if let Some(gram) = &report.gram {
                    out.push_str(&format!("\ngram:\n{}", format_matrix(gram)));
                }
            }
            out
        }
        OutputFormat::Structured => pretty(json!({
            "command": "solve",
            "semiring": s.name(),
            "status": status_name(report.status),
            "x_star": report.x_star.as_ref().map(vector_value),
            "y_star": report.y_star.as_ref().map(vector_value),
            "a_pinv": report.a_pinv.as_ref().map(matrix_value),
            "gram": report.gram.as_ref().map(matrix_value),
            "violations": violations_value(s, &report.violations),
            "unique": report.unique,
            "residual": report.residual.as_ref().map(vector_value),
            "maximality": report.maximality.map(|m| match m {
                Maximality::Maximal => "maximal",
                Maximality::NotNecessarilyMaximal => "not-necessarily-maximal",
            }),
            "forced": indices_value(&report.forced),
            "reduction": report.reduction.as_ref().map(|r| json!({
                "kept_rows": indices_value(&r.kept_rows),
                "kept_cols": indices_value(&r.kept_cols),
                "consistent": r.consistent,
            })),
            "cramer_cross_check": cross_check.map(vector_value),
        })),
    }
}

fn dependencies_value(s: Semiring, deps: &[Dependency], key: &str) -> Value {
    Value::Array(
        deps.iter()
            .map(|(idx, coeffs)| {
                json!({
                    key: idx + 1,
                    "coefficients": coeffs
                        .iter()
                        .map(|c| Value::String(s.format_scalar(c)))
                        .collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn render_dependencies_text(s: Semiring, deps: &[Dependency], label: &str) -> String {
    deps.iter()
        .map(|(idx, coeffs)| {
            format!(
                "removed {label} {}: coefficients {}",
                idx + 1,
                coeffs
                    .iter()
                    .map(|c| s.format_scalar(c))
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_reduce(config: &CliConfig, reduced: &ReducedSystem) -> String {
    let s = config.semiring;
    match config.format {
        OutputFormat::Text => {
            let mut out = format!(
                "semiring: {s}\nkept rows: {}\nkept cols: {}",
                reduced
                    .kept_rows
                    .iter()
                    .map(|&i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                reduced
                    .kept_cols
                    .iter()
                    .map(|&j| (j + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            if !reduced.xi.is_empty() {
                out.push('\n');
                out.push_str(&render_dependencies_text(s, &reduced.xi, "row"));
            }
            if !reduced.eta.is_empty() {
                out.push('\n');
                out.push_str(&render_dependencies_text(s, &reduced.eta, "col"));
            }
            out.push_str(&format!(
                "\nconsistent: {}\nreduced system:\n{}\nb: {}",
                if reduced.consistent { "yes" } else { "no" },
                format_matrix(&reduced.a_bar),
                format_vector(&reduced.b_bar)
            ));
            out
        }
        OutputFormat::Structured => pretty(json!({
            "command": "reduce",
            "semiring": s.name(),
            "kept_rows": indices_value(&reduced.kept_rows),
            "kept_cols": indices_value(&reduced.kept_cols),
            "xi": dependencies_value(s, &reduced.xi, "row"),
            "eta": dependencies_value(s, &reduced.eta, "col"),
            "consistent": reduced.consistent,
            "a_bar": matrix_value(&reduced.a_bar),
            "b_bar": vector_value(&reduced.b_bar),
        })),
    }
}

fn render_analysis(
    config: &CliConfig,
    kept_rows: &[usize],
    xi: &[Dependency],
    kept_cols: &[usize],
    eta: &[Dependency],
) -> String {
    let s = config.semiring;
    match config.format {
        OutputFormat::Text => {
            let mut out = format!(
                "semiring: {s}\nkept rows: {}\nkept cols: {}",
                kept_rows
                    .iter()
                    .map(|&i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                kept_cols
                    .iter()
                    .map(|&j| (j + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            if !xi.is_empty() {
                out.push('\n');
                out.push_str(&render_dependencies_text(s, xi, "row"));
            }
            if !eta.is_empty() {
                out.push('\n');
                out.push_str(&render_dependencies_text(s, eta, "col"));
            }
            out
        }
        OutputFormat::Structured => pretty(json!({
            "command": "reduce",
            "semiring": s.name(),
            "kept_rows": indices_value(kept_rows),
            "kept_cols": indices_value(kept_cols),
            "xi": dependencies_value(s, xi, "row"),
            "eta": dependencies_value(s, eta, "col"),
        })),
    }
}

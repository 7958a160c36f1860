//! Solving a square system AX = b: the solvability conditions on AA^-,
//! the maximal solution A^- b when they hold, and the diagnostic candidate
//! and residual when they fail.
//!
//! Run with: cargo run --example solve_square

use tropical::io::{format_vector, parse_system};
use tropical::{solve_square, Semiring, SolveStatus, Violation};

fn main() {
    let s = Semiring::MaxPlus;

    // A system whose conditions hold: the maximal solution exists.
    let (a, b) = parse_system(
        "1 -6 2 -5\n4 5 1 -2\n7 -1 3 0\n-2 -9 -5 0\n\n2 7 3 -4\n",
        s,
    )
    .unwrap();
    let b = b.unwrap();
    let report = solve_square(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::MaximalSolution);
    let x = report.x_star.unwrap();
    println!("solvable system:");
    println!("  x* = {}", format_vector(&x));
    println!("  A (x) x* = {} (equals b)", format_vector(&a.mul(&x).unwrap()));
    println!("  unique: {}", report.unique.unwrap());

    // A system whose conditions fail: the candidate A^- b misses b.
    let (a, b) = parse_system(
        "5 2 8 10\n4 1 7 9\n3 7 9 11\n-1 0 2 4\n\n7 4 8 1\n",
        s,
    )
    .unwrap();
    let b = b.unwrap();
    let report = solve_square(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::ConditionsViolated);
    println!("\nunsolvable-by-conditions system:");
    println!("  candidate A^- b = {}", format_vector(&report.x_star.unwrap()));
    println!(
        "  residual A (x) candidate = {} (b = {})",
        format_vector(&report.residual.unwrap()),
        format_vector(&b)
    );
    for v in &report.violations {
        if let Violation::Condition { i, j, lhs, rhs } = v {
            println!(
                "  failed: (AA-)[{},{}] = {} > {}",
                i + 1,
                j + 1,
                s.format_scalar(lhs),
                s.format_scalar(rhs)
            );
        }
    }
}

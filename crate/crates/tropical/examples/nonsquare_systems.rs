//! Non-square systems: wide systems go through the derived square system
//! A A^T Y = b (semi-pseudo-inverse route), tall ones through
//! A^T A X = A^T b with a final membership check against b.
//!
//! Run with: cargo run --example nonsquare_systems

use tropical::io::{format_vector, parse_system};
use tropical::{is_eigenpair, pseudo_inverse, solve_tall, solve_wide, Semiring, SolveStatus};

fn main() {
    let s = Semiring::MaxPlus;

    // Wide: fewer equations than unknowns. A solution (not necessarily
    // maximal) is A^T (x) Y* once the square system solves.
    let (a, b) = parse_system(
        "-4 7 12 -3 0\n3 2 8 3 -1\n-9 1 6 0 2\n2 8 -5 1 -3\n\n14 10 8 11\n",
        s,
    )
    .unwrap();
    let b = b.unwrap();
    let report = solve_wide(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::MaximalSolution);
    println!("wide 4x5 system:");
    println!("  y* (square system solution) = {}", format_vector(&report.y_star.unwrap()));
    let x = report.x_star.unwrap();
    println!("  x = A^T (x) y* = {}", format_vector(&x));
    assert_eq!(a.mul(&x).unwrap(), b);
    println!("  A (x) x = b verified (solution need not be maximal)");

    // Tall: more equations than unknowns. The square detour only yields a
    // solution when b is a fixed point of the associated projector.
    let (a, b) = parse_system("2 5 -2\n1 4 3\n7 8 1\n0 1 4\n\n8 3 5 2\n", s).unwrap();
    let b = b.unwrap();
    let report = solve_tall(&a, &b).unwrap();
    println!("\ntall 4x3 system:");
    println!(
        "  nearest-square answer x* = {}",
        format_vector(report.x_star.as_ref().unwrap())
    );
    println!(
        "  A (x) x* = {} differs from b = {}",
        format_vector(report.residual.as_ref().unwrap()),
        format_vector(&b)
    );
    assert_eq!(report.status, SolveStatus::ConditionsViolated);

    // The membership check is an eigenpair test for the projector
    // A (A^T A)^- A^T at the multiplicative identity.
    let square = a.transpose().mul(&a).unwrap();
    let projector = a
        .mul(&pseudo_inverse(&square).unwrap())
        .unwrap()
        .mul(&a.transpose())
        .unwrap();
    let is_fixed = is_eigenpair(&projector, &s.one(), &b).unwrap();
    println!("  b is an eigenvector of the projector: {is_fixed}");
}

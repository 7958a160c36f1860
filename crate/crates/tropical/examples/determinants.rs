//! The epsilon-determinant: the best tropical product over all
//! permutations, computed two ways (permutation expansion and optimal
//! assignment), with its witness permutation and the adjoint built from
//! minor determinants.
//!
//! Run with: cargo run --example determinants

use tropical::io::{format_matrix, parse_matrix};
use tropical::{
    adj_eps, det_eps_assignment, det_eps_reference, minor, pos_neg_det, Parity, Semiring,
};

fn main() {
    let s = Semiring::MaxPlus;
    let a = parse_matrix("5 2 6\n4 1 4\n3 7 14\n", s).unwrap();
    println!("A:\n{}", format_matrix(&a));

    // Reference path: enumerate all n! permutations.
    let reference = det_eps_reference(&a).unwrap();
    // Fast path: solve an exact optimal-assignment problem.
    let fast = det_eps_assignment(&a).unwrap();
    assert_eq!(reference, fast);

    println!("det_eps(A) = {}", s.format_scalar(&reference.value));
    println!(
        "witness permutation (1-based images): {:?}, parity {}",
        reference
            .witness
            .images()
            .iter()
            .map(|&j| j + 1)
            .collect::<Vec<_>>(),
        match reference.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    );

    let (pos, neg) = pos_neg_det(&a).unwrap();
    println!(
        "positive determinant {} , negative determinant {} (det is their (+))",
        s.format_scalar(&pos),
        s.format_scalar(&neg)
    );

    println!(
        "minor A(1|1):\n{}",
        format_matrix(&minor(&a, 0, 0).unwrap())
    );
    println!("adjoint (transposed minor determinants):\n{}", format_matrix(&adj_eps(&a).unwrap()));

    // A matrix whose finite entries admit no full permutation has the
    // additive identity as its determinant.
    let singular = parse_matrix("1 -inf\n1 -inf\n", s).unwrap();
    let d = tropical::det_eps(&singular).unwrap();
    println!(
        "determinant of a column-deficient matrix: {}",
        s.format_scalar(&d.value)
    );
}

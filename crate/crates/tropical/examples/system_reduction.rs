//! Row-column order reduction: detect rows and columns that are tropical
//! combinations of others, shrink the system, check the removed equations
//! for consistency, and lift a reduced solution back.
//!
//! Run with: cargo run --example system_reduction

use tropical::io::{format_matrix, format_vector, parse_matrix, parse_system};
use tropical::{
    column_reduce, is_combination, lift_solution, principal_solution, reduce_system, row_reduce,
    Semiring,
};

fn main() {
    let s = Semiring::MaxPlus;
    let a = parse_matrix("3 6 5\n-5 0 -2\n4 1 6\n", s).unwrap();
    println!("A:\n{}", format_matrix(&a));

    // The third column is a combination of the first two.
    let c3 = a.col_vector(2);
    let generators = [a.col_vector(0), a.col_vector(1)];
    let coeffs = is_combination(&c3, &generators).unwrap().unwrap();
    println!(
        "column 3 = (C1 (x) {}) (+) (C2 (x) {})",
        s.format_scalar(&coeffs[0]),
        s.format_scalar(&coeffs[1])
    );

    let (kept_cols, eta) = column_reduce(&a);
    let (kept_rows, _) = row_reduce(&a);
    println!(
        "kept columns: {:?}, kept rows: {:?}",
        kept_cols.iter().map(|&j| j + 1).collect::<Vec<_>>(),
        kept_rows.iter().map(|&i| i + 1).collect::<Vec<_>>()
    );
    for (j, coeffs) in &eta {
        println!(
            "removed column {} reconstructs with coefficients {}",
            j + 1,
            coeffs
                .iter()
                .map(|c| s.format_scalar(c))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    // Reduce a full system and lift the reduced solution back.
    let (a, b) = parse_system("3 6 5\n-5 0 -2\n4 1 6\n\n6 0 4\n", s).unwrap();
    let b = b.unwrap();
    let reduced = reduce_system(&a, &b).unwrap();
    println!(
        "\nreduced system ({} rows x {} cols, consistent: {}):\n{}\nb: {}",
        reduced.a_bar.rows(),
        reduced.a_bar.cols(),
        reduced.consistent,
        format_matrix(&reduced.a_bar),
        format_vector(&reduced.b_bar)
    );

    let y = principal_solution(&reduced.a_bar, &reduced.b_bar).unwrap();
    assert_eq!(reduced.a_bar.mul(&y).unwrap(), reduced.b_bar);
    println!("reduced solution y* = {}", format_vector(&y));

    let x = lift_solution(&reduced, &y).unwrap();
    println!("lifted solution x = {}", format_vector(&x));
    assert_eq!(a.mul(&x).unwrap(), b);
    println!("A (x) x = b verified on the original system");
}

//! The principal (residuation) solution: the entrywise greatest x with
//! A (x) x <= b. The system is solvable exactly when the principal
//! solution attains b, which makes it an independent check on the
//! pseudo-inverse machinery.
//!
//! Run with: cargo run --example residuation_oracle

use tropical::io::{format_vector, parse_system};
use tropical::{principal_solution, pseudo_inverse, solvability_conditions, Semiring};

fn main() {
    let s = Semiring::MaxPlus;

    let (a, b) = parse_system(
        "1 -6 2 -5\n4 5 1 -2\n7 -1 3 0\n-2 -9 -5 0\n\n2 7 3 -4\n",
        s,
    )
    .unwrap();
    let b = b.unwrap();

    let hat = principal_solution(&a, &b).unwrap();
    println!("principal solution x^ = {}", format_vector(&hat));
    let image = a.mul(&hat).unwrap();
    println!("A (x) x^ = {}", format_vector(&image));
    println!("solvable: {}", image == b);

    // Cross-check against the pseudo-inverse route.
    let candidate = pseudo_inverse(&a).unwrap().mul(&b).unwrap();
    let conditions_hold = solvability_conditions(&a, &b).unwrap().is_empty();
    println!(
        "conditions hold: {conditions_hold}; A^- b = {} (agrees with x^: {})",
        format_vector(&candidate),
        candidate == hat
    );

    // Raising one entry of b breaks solvability; the oracle sees it.
    let (_, b2) = parse_system(
        "1 -6 2 -5\n4 5 1 -2\n7 -1 3 0\n-2 -9 -5 0\n\n2 7 3 5\n",
        s,
    )
    .unwrap();
    let b2 = b2.unwrap();
    let hat2 = principal_solution(&a, &b2).unwrap();
    println!(
        "\nafter raising b4 to 5: A (x) x^ = {} (b = {}), solvable: {}",
        format_vector(&a.mul(&hat2).unwrap()),
        format_vector(&b2),
        a.mul(&hat2).unwrap() == b2
    );
}

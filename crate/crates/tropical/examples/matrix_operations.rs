//! Matrix algebra over a tropical semiring: addition, multiplication,
//! scalar action, transpose, and the entrywise order.
//!
//! Run with: cargo run --example matrix_operations

use tropical::io::{format_matrix, parse_matrix};
use tropical::{Semiring, TropMatrix};

fn main() {
    let s = Semiring::MaxPlus;
    let a = parse_matrix("1 2\n3 4\n", s).unwrap();
    let b = parse_matrix("4 1\n0 9\n", s).unwrap();

    println!("A:\n{}", format_matrix(&a));
    println!("B:\n{}", format_matrix(&b));
    println!("A (+) B (entrywise max):\n{}", format_matrix(&a.add(&b).unwrap()));
    println!("A (x) B (max of sums):\n{}", format_matrix(&a.mul(&b).unwrap()));

    let lambda = s.parse_scalar("2").unwrap();
    println!(
        "2 (x) A (adds 2 everywhere):\n{}",
        format_matrix(&a.scalar_mul(&lambda).unwrap())
    );

    let id = TropMatrix::identity(s, 2).unwrap();
    println!("tropical identity:\n{}", format_matrix(&id));
    assert_eq!(id.mul(&a).unwrap(), a);
    assert_eq!(a.mul(&id).unwrap(), a);
    println!("I (x) A = A (x) I = A holds");

    let wide = parse_matrix("1 2 3\n", s).unwrap();
    println!(
        "transpose of a row:\n{}",
        format_matrix(&wide.transpose())
    );

    // The entrywise order can leave matrices incomparable.
    let c = parse_matrix("1 9\n", s).unwrap();
    let d = parse_matrix("2 8\n", s).unwrap();
    println!(
        "order: C <= D is {}, D <= C is {} (incomparable)",
        c.leq(&d).unwrap(),
        d.leq(&c).unwrap()
    );
}

//! Extended Cramer's rule: each solution component is the determinant of
//! the column-replaced matrix scaled by the inverse determinant, and the
//! pseudo-inverse never has to be formed.
//!
//! Run with: cargo run --example cramer_rule

use tropical::io::{format_vector, parse_system};
use tropical::{cramer_solve, det_eps, pseudo_inverse, replace_col_with, Semiring};

fn main() {
    let s = Semiring::MaxPlus;
    let (a, b) = parse_system("5 2 6\n4 1 4\n3 7 14\n\n5 4 13\n", s).unwrap();
    let b = b.unwrap();

    let d = det_eps(&a).unwrap().value;
    println!("det_eps(A) = {}", s.format_scalar(&d));
    for j in 0..a.cols() {
        let dj = det_eps(&replace_col_with(&a, j, &b).unwrap()).unwrap().value;
        println!(
            "d_{} = det of A with column {} replaced by b = {}  ->  x*_{} = {}",
            j + 1,
            j + 1,
            s.format_scalar(&dj),
            j + 1,
            s.format_scalar(&s.mul(&dj, &s.inv(&d).unwrap()))
        );
    }

    let x = cramer_solve(&a, &b).unwrap();
    println!("x* = {}", format_vector(&x));
    assert_eq!(a.mul(&x).unwrap(), b);

    // The rule agrees with the pseudo-inverse route componentwise, even on
    // systems the conditions reject.
    let via_pinv = pseudo_inverse(&a).unwrap().mul(&b).unwrap();
    assert_eq!(x, via_pinv);
    println!("matches A^- (x) b componentwise");
}

//! The pseudo-inverse A^- = det_eps(A)^-1 (x) adj_eps(A) and the product
//! AA^-, computed both through the adjoint and through row-replaced
//! determinants.
//!
//! Run with: cargo run --example pseudo_inverse

use tropical::io::{format_matrix, parse_matrix};
use tropical::{det_eps, gram, gram_via_replacement, pseudo_inverse, Semiring};

fn main() {
    let s = Semiring::MaxPlus;
    let a = parse_matrix("1 -6 2 -5\n4 5 1 -2\n7 -1 3 0\n-2 -9 -5 0\n", s).unwrap();
    println!("A:\n{}", format_matrix(&a));

    let d = det_eps(&a).unwrap().value;
    println!("det_eps(A) = {}", s.format_scalar(&d));

    let pinv = pseudo_inverse(&a).unwrap();
    println!("A^- (adjoint entries shifted by det^-1):\n{}", format_matrix(&pinv));

    // Two independent routes to AA^-: the direct product, and entrywise
    // determinants of row-replaced matrices.
    let g = gram(&a).unwrap();
    let g2 = gram_via_replacement(&a).unwrap();
    assert_eq!(g, g2);
    println!("AA^- (both routes agree):\n{}", format_matrix(&g));
    println!("note the diagonal: every entry is the multiplicative identity");

    // A matrix with neutral determinant has no pseudo-inverse.
    let singular = parse_matrix("0 -inf\n0 -inf\n", s).unwrap();
    match pseudo_inverse(&singular) {
        Err(e) => println!("singular case: {e}"),
        Ok(_) => unreachable!(),
    }
}

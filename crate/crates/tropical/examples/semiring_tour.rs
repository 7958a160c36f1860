//! Tour of the four semiring instances: their operations, identities,
//! natural order, and multiplicative inverses.
//!
//! Run with: cargo run --example semiring_tour

use tropical::{Semiring, TropScalar};

fn main() {
    for s in Semiring::ALL {
        let three = s.parse_scalar("3").unwrap();
        let seven = s.parse_scalar("7").unwrap();
        let zero = s.zero();
        let one = s.one();

        println!("{s}:");
        println!(
            "  3 (+) 7 = {:<6} 3 (x) 7 = {}",
            s.format_scalar(&s.add(&three, &seven)),
            s.format_scalar(&s.mul(&three, &seven))
        );
        println!(
            "  additive identity {} absorbs: {} (x) 7 = {}",
            s.neutral_token(),
            s.neutral_token(),
            s.format_scalar(&s.mul(&zero, &seven))
        );
        println!(
            "  multiplicative identity {}: {} (x) 7 = {}",
            s.format_scalar(&one),
            s.format_scalar(&one),
            s.format_scalar(&s.mul(&one, &seven))
        );
        println!(
            "  inverse of 7 is {} (7 (x) 7^-1 = {})",
            s.format_scalar(&s.inv(&seven).unwrap()),
            s.format_scalar(&s.mul(&seven, &s.inv(&seven).unwrap()))
        );
        println!(
            "  natural order: 3 <= 7 is {}, 7 <= 3 is {}",
            s.leq(&three, &seven),
            s.leq(&seven, &three)
        );
        println!();
    }

    // Exact rationals: no rounding anywhere.
    let s = Semiring::MaxPlus;
    let half = s.parse_scalar("0.5").unwrap();
    let third = s.parse_scalar("1/3").unwrap();
    println!(
        "exact arithmetic: 0.5 (x) 1/3 = {} in {s}",
        s.format_scalar(&s.mul(&half, &third))
    );
    assert_eq!(s.mul(&half, &third), TropScalar::rational(5, 6));
}

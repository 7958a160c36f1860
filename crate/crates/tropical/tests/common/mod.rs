//! Shared helpers for the integration suites: matrix builders for the
//! worked examples and seeded random-instance generators.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropical::{det_eps, Semiring, TropMatrix, TropScalar, TropVector};

pub fn fin(n: i64) -> TropScalar {
    TropScalar::integer(n)
}

pub fn mat(s: Semiring, rows: Vec<Vec<i64>>) -> TropMatrix {
    TropMatrix::from_rows(
        s,
        rows.into_iter()
            .map(|r| r.into_iter().map(fin).collect())
            .collect(),
    )
    .unwrap()
}

pub fn mp(rows: Vec<Vec<i64>>) -> TropMatrix {
    mat(Semiring::MaxPlus, rows)
}

pub fn col(s: Semiring, entries: Vec<i64>) -> TropVector {
    TropMatrix::column(s, entries.into_iter().map(fin).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random scalar for the given semiring: integers in -9..=9 for the plus
/// semirings, small positive rationals for the times semirings, with the
/// given percent probability of the additive identity.
pub fn random_scalar(rng: &mut ChaCha8Rng, s: Semiring, neutral_percent: u32) -> TropScalar {
    if rng.gen_range(0..100) < neutral_percent {
        return TropScalar::Neutral;
    }
    match s {
        Semiring::MaxPlus | Semiring::MinPlus => fin(rng.gen_range(-9..=9)),
        Semiring::MaxTimes | Semiring::MinTimes => {
            TropScalar::rational(rng.gen_range(1..=9), rng.gen_range(1..=4))
        }
    }
}

pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    s: Semiring,
    rows: usize,
    cols: usize,
    neutral_percent: u32,
) -> TropMatrix {
    TropMatrix::from_fn(s, rows, cols, |_, _| random_scalar(rng, s, neutral_percent)).unwrap()
}

/// Random square matrix with a finite epsilon-determinant (rejection
/// sampled) and sparse additive-identity entries.
pub fn random_unit_det_matrix(rng: &mut ChaCha8Rng, s: Semiring, n: usize) -> TropMatrix {
    loop {
        let a = random_matrix(rng, s, n, n, 15);
        if det_eps(&a).unwrap().value.is_finite() {
            return a;
        }
    }
}

/// Random regular (all-finite) column vector.
pub fn random_regular_vector(rng: &mut ChaCha8Rng, s: Semiring, n: usize) -> TropVector {
    TropMatrix::from_fn(s, n, 1, |_, _| random_scalar(rng, s, 0)).unwrap()
}

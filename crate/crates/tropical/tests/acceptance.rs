//! Acceptance suite: every criterion below reproduces a worked example or a
//! randomized property at exact (bit-level) equality and prints one
//! PASS line when it holds. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines).

mod common;

use std::io::Write as _;

use common::*;
use rand::Rng;

use tropical::{
    adj_eps, col_replace, cramer_solve, det_eps, det_eps_assignment, det_eps_reference, gram,
    gram_via_replacement, is_combination, lift_solution, pos_neg_det, principal_solution,
    pseudo_inverse, reduce_system, replace_col_with, row_replace, solvability_conditions,
    solve_square, solve_tall, solve_wide, Maximality, Semiring, SolveStatus, TropMatrix,
    TropScalar, TropVector, Violation,
};

fn solvable_square_example() -> (TropMatrix, TropVector) {
    (
        mp(vec![
            vec![1, -6, 2, -5],
            vec![4, 5, 1, -2],
            vec![7, -1, 3, 0],
            vec![-2, -9, -5, 0],
        ]),
        col(Semiring::MaxPlus, vec![2, 7, 3, -4]),
    )
}

fn violated_square_example() -> (TropMatrix, TropVector) {
    (
        mp(vec![
            vec![5, 2, 8, 10],
            vec![4, 1, 7, 9],
            vec![3, 7, 9, 11],
            vec![-1, 0, 2, 4],
        ]),
        col(Semiring::MaxPlus, vec![7, 4, 8, 1]),
    )
}

fn cramer_example() -> (TropMatrix, TropVector) {
    (
        mp(vec![vec![5, 2, 6], vec![4, 1, 4], vec![3, 7, 14]]),
        col(Semiring::MaxPlus, vec![5, 4, 13]),
    )
}

fn wide_example() -> (TropMatrix, TropVector) {
    (
        mp(vec![
            vec![-4, 7, 12, -3, 0],
            vec![3, 2, 8, 3, -1],
            vec![-9, 1, 6, 0, 2],
            vec![2, 8, -5, 1, -3],
        ]),
        col(Semiring::MaxPlus, vec![14, 10, 8, 11]),
    )
}

fn tall_example() -> (TropMatrix, TropVector) {
    (
        mp(vec![
            vec![2, 5, -2],
            vec![1, 4, 3],
            vec![7, 8, 1],
            vec![0, 1, 4],
        ]),
        col(Semiring::MaxPlus, vec![8, 3, 5, 2]),
    )
}

fn rank_example() -> TropMatrix {
    mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6]])
}

#[test]
fn criterion_01_solvable_square_reproduction() {
    let (a, b) = solvable_square_example();

    assert_eq!(det_eps(&a).unwrap().value, fin(14));

    let expected_gram = mp(vec![
        vec![0, -11, -6, -5],
        vec![-1, 0, -3, -2],
        vec![1, -6, 0, 0],
        vec![-7, -14, -9, 0],
    ]);
    assert_eq!(gram(&a).unwrap(), expected_gram);

    let expected_pinv = mp(vec![
        vec![-6, -13, -7, -7],
        vec![-6, -5, -8, -7],
        vec![-2, -13, -8, -7],
        vec![-7, -14, -9, 0],
    ]);
    assert_eq!(pseudo_inverse(&a).unwrap(), expected_pinv);

    let report = solve_square(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::MaximalSolution);
    assert_eq!(
        report.x_star.unwrap(),
        col(Semiring::MaxPlus, vec![-4, 2, 0, -4])
    );
    println!("criterion 1: PASS (solvable 4x4: det, pinv, gram, maximal solution)");
}

#[test]
fn criterion_02_violated_square_reproduction() {
    let (a, b) = violated_square_example();

    let expected_gram = mp(vec![
        vec![0, 1, -1, 6],
        vec![-1, 0, -2, 5],
        vec![1, 2, 0, 7],
        vec![-6, -5, -7, 0],
    ]);
    assert_eq!(gram(&a).unwrap(), expected_gram);

    let violations = solvability_conditions(&a, &b).unwrap();
    assert!(!violations.is_empty());
    for v in &violations {
        match v {
            Violation::Condition { i, j, .. } => {
                assert!(*i == 1 || *j == 1, "violation ({i},{j}) away from index 2");
            }
            other => panic!("unexpected violation kind {other:?}"),
        }
    }

    let pinv = pseudo_inverse(&a).unwrap();
    let expected_pinv = mp(vec![
        vec![-5, -4, -6, 1],
        vec![-6, -5, -7, 0],
        vec![-8, -7, -9, -2],
        vec![-10, -9, -11, -4],
    ]);
    assert_eq!(pinv, expected_pinv);

    let candidate = pinv.mul(&b).unwrap();
    assert_eq!(candidate, col(Semiring::MaxPlus, vec![2, 1, -1, -3]));
    let residual = a.mul(&candidate).unwrap();
    assert_eq!(*residual.get(1, 0), fin(6));
    assert_ne!(*residual.get(1, 0), *b.get(1, 0));
    println!("criterion 2: PASS (violated 4x4: gram, pinv, index-2 violations, residual 6 != 4)");
}

#[test]
fn criterion_03_cramer_reproduction() {
    let (a, b) = cramer_example();

    let d = det_eps(&a).unwrap().value;
    assert_eq!(d, fin(20));
    let (pos, neg) = pos_neg_det(&a).unwrap();
    assert_eq!((pos, neg), (fin(20), fin(20)));
    let column_dets: Vec<TropScalar> = (0..3)
        .map(|j| det_eps(&replace_col_with(&a, j, &b).unwrap()).unwrap().value)
        .collect();
    assert_eq!(column_dets, vec![fin(20), fin(23), fin(19)]);

    let x = cramer_solve(&a, &b).unwrap();
    assert_eq!(x, col(Semiring::MaxPlus, vec![0, 3, -1]));

    let report = solve_square(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::MaximalSolution);
    assert_eq!(report.x_star.unwrap(), x);
    assert_eq!(principal_solution(&a, &b).unwrap(), x);

    let expected_gram = mp(vec![vec![0, 1, -8], vec![-1, 0, -9], vec![5, 6, 0]]);
    assert_eq!(gram(&a).unwrap(), expected_gram);
    println!("criterion 3: PASS (Cramer 3x3: d=20, d_j=(20,23,19), x*=(0,3,-1), gram)");
}

#[test]
fn criterion_04_wide_reproduction() {
    let (a, b) = wide_example();

    let square = a.mul(&a.transpose()).unwrap();
    let expected_square = mp(vec![
        vec![24, 20, 18, 15],
        vec![20, 16, 14, 10],
        vec![18, 14, 12, 9],
        vec![15, 10, 9, 16],
    ]);
    assert_eq!(square, expected_square);

    let expected_gram = mp(vec![
        vec![0, 4, 6, -1],
        vec![-4, 0, 2, -5],
        vec![-6, -2, 0, -7],
        vec![-9, -5, -3, 0],
    ]);
    assert_eq!(gram(&square).unwrap(), expected_gram);

    let report = solve_wide(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::MaximalSolution);
    assert_eq!(report.maximality, Some(Maximality::NotNecessarilyMaximal));
    assert_eq!(
        report.y_star.unwrap(),
        col(Semiring::MaxPlus, vec![-10, -6, -4, -5])
    );
    let x = report.x_star.unwrap();
    assert_eq!(x, col(Semiring::MaxPlus, vec![-3, 3, 2, -3, -2]));
    assert_eq!(a.mul(&x).unwrap(), b);
    println!("criterion 4: PASS (wide 4x5: AA^T, gram, y*, x = A^T y*, A x = b)");
}

#[test]
fn criterion_05_tall_reproduction() {
    let (a, b) = tall_example();

    let square = a.transpose().mul(&a).unwrap();
    let expected_square = mp(vec![vec![14, 15, 8], vec![15, 16, 9], vec![8, 9, 8]]);
    assert_eq!(square, expected_square);

    // Row 2: (GG^-)[2][1] = max(15-14, 16-15, 9-14) = 1, and the
    // row-replacement route agrees: det(G_r(2=>1)) - det(G) = 39 - 38 = 1.
    // The solvability conditions still hold (1 <= 13 - 12).
    let expected_gram = mp(vec![vec![0, -1, 0], vec![1, 0, 1], vec![-6, -7, 0]]);
    assert_eq!(gram(&square).unwrap(), expected_gram);
    assert_eq!(gram_via_replacement(&square).unwrap(), expected_gram);

    let report = solve_tall(&a, &b).unwrap();
    assert_eq!(report.status, SolveStatus::ConditionsViolated);
    let x = report.x_star.unwrap();
    assert_eq!(x, col(Semiring::MaxPlus, vec![-2, -3, -2]));
    // row 2 of A (x) x* is max(1-2, 4-3, 3-2) = 1
    let residual = report.residual.unwrap();
    assert_eq!(residual, col(Semiring::MaxPlus, vec![2, 1, 5, 2]));
    assert_ne!(residual, b);
    assert!(!report.violations.is_empty());
    println!("criterion 5: PASS (tall 4x3: A^T A, gram, x*, A x* != b flagged)");
}

#[test]
fn criterion_06_rank_example_reproduction() {
    let a = rank_example();

    let (kept_cols, eta) = tropical::column_reduce(&a);
    assert_eq!(kept_cols, vec![0, 1]);
    assert_eq!(eta, vec![(2, vec![fin(2), fin(-2)])]);

    let (kept_rows, xi) = tropical::row_reduce(&a);
    assert_eq!(kept_rows, vec![0, 1, 2]);
    assert!(xi.is_empty());
    println!("criterion 6: PASS (rank example: 2 columns kept with eta=(2,-2), 3 rows kept)");
}

/// Criterion 7 body, shared with the cross-semiring rerun: for `count`
/// random square systems with finite determinant, the gram-matrix
/// conditions are empty exactly when `A (x) (A^- b) = b`; when they are
/// empty the candidate equals the residuation oracle's principal solution.
/// The empirical agreement between "conditions empty" and "oracle says
/// solvable" is reported and disagreements are persisted, not asserted.
fn oracle_equivalence_suite(semiring: Semiring, seed: u64, count: usize) {
    let mut rng = rng(seed);
    let mut conditions_empty_count = 0usize;
    let mut oracle_solvable_count = 0usize;
    let mut disagreements: Vec<String> = Vec::new();

    for _ in 0..count {
        let n = rng.gen_range(2..=6);
        let a = random_unit_det_matrix(&mut rng, semiring, n);
        let b = random_regular_vector(&mut rng, semiring, n);

        let violations = solvability_conditions(&a, &b).unwrap();
        let candidate = pseudo_inverse(&a).unwrap().mul(&b).unwrap();
        let candidate_solves = a.mul(&candidate).unwrap() == b;

        let hat = principal_solution(&a, &b).unwrap();
        let oracle_solvable = a.mul(&hat).unwrap() == b;

        if violations.is_empty() {
            conditions_empty_count += 1;
            assert!(candidate_solves, "conditions empty but A(A^-b) != b");
            assert_eq!(candidate, hat, "maximal solution differs from oracle");
        } else {
            assert!(!candidate_solves, "conditions violated but A(A^-b) = b");
        }
        if oracle_solvable {
            oracle_solvable_count += 1;
        }
        if violations.is_empty() != oracle_solvable {
            disagreements.push(format!(
                "semiring {semiring}\n{}\nconditions_empty={} oracle_solvable={}\n",
                tropical::io::format_system(&a, &b),
                violations.is_empty(),
                oracle_solvable
            ));
        }
    }

    let agreement = count - disagreements.len();
    let log_path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"))
        .join(format!("oracle_counterexamples_{}.log", semiring.name()));
    let mut log = std::fs::File::create(&log_path).unwrap();
    writeln!(
        log,
        "systems: {count}\nconditions empty: {conditions_empty_count}\noracle solvable: {oracle_solvable_count}\nagreement: {agreement}/{count}\ndisagreements: {}",
        disagreements.len()
    )
    .unwrap();
    for d in &disagreements {
        writeln!(log, "---\n{d}").unwrap();
    }
    println!(
        "criterion 7 [{semiring}]: agreement rate {agreement}/{count} (log: {})",
        log_path.display()
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    oracle_equivalence_suite(Semiring::MaxPlus, 70, 1000);
    println!("criterion 7: PASS (pseudo-inverse conditions vs residuation oracle, 1000 systems)");
}

/// Criterion 8 body: the reference permutation expansion and the
/// assignment fast path agree exactly (value and witness), and the
/// row/column replacement identities for the adjoint hold.
fn det_dual_path_suite(semiring: Semiring, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let a = random_matrix(&mut rng, semiring, n, n, 20);
        let reference = det_eps_reference(&a).unwrap();
        let fast = det_eps_assignment(&a).unwrap();
        assert_eq!(reference, fast, "dual determinant paths disagree on {a:?}");
        let (pos, neg) = pos_neg_det(&a).unwrap();
        assert_eq!(
            semiring.add(&pos, &neg),
            reference.value,
            "det != pos (+) neg"
        );
    }

    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let a = random_matrix(&mut rng, semiring, n, n, 15);
        let adj = adj_eps(&a).unwrap();
        let left = a.mul(&adj).unwrap();
        let right = adj.mul(&a).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    *left.get(i, j),
                    det_eps(&row_replace(&a, i, j).unwrap()).unwrap().value,
                    "row-replacement identity failed at ({i},{j})"
                );
                // (adj A (x) A)[i][j] expands along column i of the matrix
                // whose column i is replaced by column j
                assert_eq!(
                    *right.get(i, j),
                    det_eps(&col_replace(&a, j, i).unwrap()).unwrap().value,
                    "column-replacement identity failed at ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn criterion_08_determinant_dual_path() {
    det_dual_path_suite(Semiring::MaxPlus, 80);
    println!("criterion 8: PASS (reference = assignment on 1000 matrices; replacement identities on 200)");
}

/// Criterion 9 body: extended Cramer's rule equals the pseudo-inverse
/// route componentwise, solvable or not.
fn cramer_pinv_suite(semiring: Semiring, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let a = random_unit_det_matrix(&mut rng, semiring, n);
        let b = random_regular_vector(&mut rng, semiring, n);
        let via_cramer = cramer_solve(&a, &b).unwrap();
        let via_pinv = pseudo_inverse(&a).unwrap().mul(&b).unwrap();
        assert_eq!(via_cramer, via_pinv, "Cramer != pinv route on {a:?}");
    }
}

#[test]
fn criterion_09_cramer_equals_pseudo_inverse() {
    cramer_pinv_suite(Semiring::MaxPlus, 90);
    println!("criterion 9: PASS (Cramer = pseudo-inverse route on 500 systems)");
}

/// Builds a system with planted dependent rows and columns: a base block,
/// extra rows that are combinations of base rows, then extra columns that
/// are combinations of the previous columns.
fn planted_system(
    rng: &mut rand_chacha::ChaCha8Rng,
    semiring: Semiring,
) -> (TropMatrix, TropVector) {
    let h = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=3);
    let base = loop {
        let m = random_matrix(rng, semiring, h, k, 20);
        let rows_ok = (0..h).any(|_| true)
            && (0..h).all(|i| (0..k).any(|j| m.get(i, j).is_finite()));
        let cols_ok = (0..k).all(|j| (0..h).any(|i| m.get(i, j).is_finite()));
        if rows_ok && cols_ok {
            break m;
        }
    };

    let extra_rows = rng.gen_range(0..=2);
    let mut rows: Vec<Vec<TropScalar>> = (0..h)
        .map(|i| (0..k).map(|j| base.get(i, j).clone()).collect())
        .collect();
    for _ in 0..extra_rows {
        let coeffs: Vec<TropScalar> = random_combination_coeffs(rng, semiring, h);
        let mut row = vec![TropScalar::Neutral; k];
        for (i, c) in coeffs.iter().enumerate() {
            for (j, acc) in row.iter_mut().enumerate() {
                *acc = semiring.add(acc, &semiring.mul(base.get(i, j), c));
            }
        }
        rows.push(row);
    }

    let m_total = rows.len();
    let extra_cols = rng.gen_range(0..=2);
    for _ in 0..extra_cols {
        let existing = rows[0].len();
        let coeffs = random_combination_coeffs(rng, semiring, existing);
        for row in rows.iter_mut() {
            let mut entry = TropScalar::Neutral;
            for (j, c) in coeffs.iter().enumerate() {
                entry = semiring.add(&entry, &semiring.mul(&row[j], c));
            }
            row.push(entry);
        }
    }

    let a = TropMatrix::from_rows(semiring, rows).unwrap();
    let b = if rng.gen_bool(0.5) {
        let x0 = random_regular_vector(rng, semiring, a.cols());
        a.mul(&x0).unwrap()
    } else {
        random_regular_vector(rng, semiring, m_total)
    };
    (a, b)
}

/// Coefficient vector with at least one finite entry.
fn random_combination_coeffs(
    rng: &mut rand_chacha::ChaCha8Rng,
    semiring: Semiring,
    len: usize,
) -> Vec<TropScalar> {
    loop {
        let coeffs: Vec<TropScalar> =
            (0..len).map(|_| random_scalar(rng, semiring, 40)).collect();
        if coeffs.iter().any(TropScalar::is_finite) {
            return coeffs;
        }
    }
}

#[test]
fn criterion_10_reduction_property() {
    let semiring = Semiring::MaxPlus;
    let mut rng = rng(100);
    for _ in 0..500 {
        let (a, b) = planted_system(&mut rng, semiring);
        let orig_solvable = {
            let hat = principal_solution(&a, &b).unwrap();
            a.mul(&hat).unwrap() == b
        };
        let reduced = reduce_system(&a, &b).unwrap();

        // exact reconstruction of everything removed, over the full matrix
        for (j, coeffs) in &reduced.eta {
            let target = a.col_vector(*j);
            let mut combo =
                TropMatrix::zeros(semiring, a.rows(), 1).unwrap();
            for (pos, &kept) in reduced.kept_cols.iter().enumerate() {
                combo = combo
                    .add(&a.col_vector(kept).scalar_mul(&coeffs[pos]).unwrap())
                    .unwrap();
            }
            assert_eq!(combo, target, "eta reconstruction failed");
        }
        let at = a.transpose();
        for (i, coeffs) in &reduced.xi {
            let target = at.col_vector(*i);
            let mut combo =
                TropMatrix::zeros(semiring, a.cols(), 1).unwrap();
            for (pos, &kept) in reduced.kept_rows.iter().enumerate() {
                combo = combo
                    .add(&at.col_vector(kept).scalar_mul(&coeffs[pos]).unwrap())
                    .unwrap();
            }
            assert_eq!(combo, target, "xi reconstruction failed");
        }

        let reduced_oracle_solvable = {
            let hat = principal_solution(&reduced.a_bar, &reduced.b_bar).unwrap();
            reduced.a_bar.mul(&hat).unwrap() == reduced.b_bar
        };
        let reduced_solvable = reduced.consistent && reduced_oracle_solvable;
        assert_eq!(
            orig_solvable, reduced_solvable,
            "reduction changed solvability"
        );

        // the reduced system alone is solvable iff its right-hand side lies
        // in the span of the reduced columns
        let bar_cols: Vec<TropVector> = (0..reduced.a_bar.cols())
            .map(|j| reduced.a_bar.col_vector(j))
            .collect();
        let in_span = is_combination(&reduced.b_bar, &bar_cols).unwrap().is_some();
        assert_eq!(in_span, reduced_oracle_solvable, "span membership disagrees");

        if reduced_solvable {
            let y = principal_solution(&reduced.a_bar, &reduced.b_bar).unwrap();
            let x = lift_solution(&reduced, &y).unwrap();
            assert_eq!(a.mul(&x).unwrap(), b, "lifted solution fails original");
        }
    }
    println!("criterion 10: PASS (reduction solvability equivalence and lifts on 500 planted systems)");
}

/// Exact semiring axiom checks on random triples.
fn axiom_suite(semiring: Semiring, seed: u64) {
    let mut rng = rng(seed);
    let zero = semiring.zero();
    let one = semiring.one();
    for _ in 0..1000 {
        let a = random_scalar(&mut rng, semiring, 15);
        let b = random_scalar(&mut rng, semiring, 15);
        let c = random_scalar(&mut rng, semiring, 15);

        // commutative idempotent monoid under (+)
        assert_eq!(semiring.add(&a, &b), semiring.add(&b, &a));
        assert_eq!(
            semiring.add(&semiring.add(&a, &b), &c),
            semiring.add(&a, &semiring.add(&b, &c))
        );
        assert_eq!(semiring.add(&a, &a), a);
        assert_eq!(semiring.add(&a, &zero), a);

        // commutative monoid under (x), with absorbing zero
        assert_eq!(semiring.mul(&a, &b), semiring.mul(&b, &a));
        assert_eq!(
            semiring.mul(&semiring.mul(&a, &b), &c),
            semiring.mul(&a, &semiring.mul(&b, &c))
        );
        assert_eq!(semiring.mul(&a, &one), a);
        assert_eq!(semiring.mul(&a, &zero), zero);

        // distributivity
        assert_eq!(
            semiring.mul(&a, &semiring.add(&b, &c)),
            semiring.add(&semiring.mul(&a, &b), &semiring.mul(&a, &c))
        );

        // every finite element is a unit with involutive inverse
        if a.is_finite() {
            let inv = semiring.inv(&a).unwrap();
            assert_eq!(semiring.mul(&a, &inv), one);
            assert_eq!(semiring.inv(&inv).unwrap(), a);
        }

        // natural order: total, bottom element, compatible with add
        assert!(semiring.leq(&zero, &a));
        assert!(semiring.leq(&a, &b) || semiring.leq(&b, &a));
        if semiring.leq(&a, &b) && semiring.leq(&b, &c) {
            assert!(semiring.leq(&a, &c));
        }
        if semiring.leq(&a, &b) && semiring.leq(&b, &a) {
            assert_eq!(a, b);
        }
    }
}

#[test]
fn criterion_11_cross_semiring() {
    oracle_equivalence_suite(Semiring::MinPlus, 171, 1000);
    det_dual_path_suite(Semiring::MinPlus, 181);
    cramer_pinv_suite(Semiring::MinPlus, 191);
    axiom_suite(Semiring::MaxTimes, 111);
    println!("criterion 11: PASS (criteria 7-9 under min-plus; max-times axiom suite)");
}

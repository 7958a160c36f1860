//! Row-column analysis: detect dependent columns and rows, build the
//! reduced system, check consistency of dependent rows, and lift reduced
//! solutions back to the original variables.
//!
//! Dependence is decided exactly by residuation: the greatest admissible
//! coefficient for each generator is computed, then the combination is
//! verified by equality. The scan is greedy left to right and tests each
//! column only against the columns already kept, so earlier columns are
//! preferred as generators; removed columns always carry exact
//! reconstruction coefficients over the final kept set.

use crate::error::{Result, TropError};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::TropScalar;

/// Reconstruction coefficients for one removed index: the removed row or
/// column equals the tropical combination of the kept ones with these
/// coefficients (additive-identity coefficients mean "generator unused").
pub type Dependency = (usize, Vec<TropScalar>);

/// The outcome of reducing `AX = b`: kept rows and columns, reconstruction
/// coefficients for everything removed, the reduced system, and whether the
/// removed equations' right-hand sides are consistent with the kept ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSystem {
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    /// One entry per removed row `i`: coefficients over `kept_rows`
    /// reconstructing row `i`.
    pub xi: Vec<Dependency>,
    /// One entry per removed column `j`: coefficients over `kept_cols`
    /// reconstructing column `j`.
    pub eta: Vec<Dependency>,
    pub a_bar: TropMatrix,
    pub b_bar: TropVector,
    /// True iff every removed row satisfies `b[i] = (+)_j b_kept[j] (x)
    /// xi[i][j]`. When false the original system has no solutions.
    pub consistent: bool,
}

impl ReducedSystem {
    /// Column count of the matrix that was reduced.
    pub fn original_cols(&self) -> usize {
        self.kept_cols.len() + self.eta.len()
    }

    /// Row count of the matrix that was reduced.
    pub fn original_rows(&self) -> usize {
        self.kept_rows.len() + self.xi.len()
    }
}

/// Which analysis runs first; the solvability verdict is the same either
/// way, the kept index sets need not be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReduceOrder {
    #[default]
    RowsThenColumns,
    ColumnsThenRows,
}

/// Decides whether `target` is a tropical linear combination of the
/// generators and returns witnessing coefficients if so.
///
/// Residuation computes the greatest coefficient for each generator with
/// `generator (x) coeff <= target`, then checks that the combination
/// attains `target` exactly; failure of that single candidate proves no
/// combination exists. An all-neutral generator gets the neutral
/// coefficient (it cannot contribute, and no greatest coefficient exists
/// for it).
pub fn is_combination(
    target: &TropVector,
    generators: &[TropVector],
) -> Result<Option<Vec<TropScalar>>> {
    let s = target.semiring();
    let m = target.rows();
    if !target.is_column() {
        return Err(TropError::ShapeMismatch {
            op: "is_combination",
            lhs_rows: target.rows(),
            lhs_cols: target.cols(),
            rhs_rows: m,
            rhs_cols: 1,
        });
    }
    for g in generators {
        if g.semiring() != s {
            return Err(TropError::SemiringMismatch {
                op: "is_combination",
                lhs: s,
                rhs: g.semiring(),
            });
        }
        if !g.is_column() || g.rows() != m {
            return Err(TropError::ShapeMismatch {
                op: "is_combination",
                lhs_rows: m,
                lhs_cols: 1,
                rhs_rows: g.rows(),
                rhs_cols: g.cols(),
            });
        }
    }

    let mut coeffs = Vec::with_capacity(generators.len());
    for g in generators {
        let mut bound: Option<TropScalar> = None;
        for r in 0..m {
            let gr = g.get(r, 0);
            if gr.is_neutral() {
                continue;
            }
            let candidate = match target.get(r, 0) {
                TropScalar::Neutral => TropScalar::Neutral,
                t => s.mul(t, &s.inv(gr)?),
            };
            bound = Some(match bound {
                None => candidate,
                Some(current) => s.meet(&current, &candidate),
            });
        }
        coeffs.push(bound.unwrap_or(TropScalar::Neutral));
    }

    // Verify the candidate attains the target.
    let mut combo = vec![TropScalar::Neutral; m];
    for (g, coeff) in generators.iter().zip(&coeffs) {
        for (r, acc) in combo.iter_mut().enumerate() {
            *acc = s.add(acc, &s.mul(g.get(r, 0), coeff));
        }
    }
    let attained = (0..m).all(|r| combo[r] == *target.get(r, 0));
    Ok(if attained { Some(coeffs) } else { None })
}

/// Greedy column scan: column `j` is removed iff it is a combination of the
/// columns already kept. Returns the kept indices and, for each removed
/// column, reconstruction coefficients over the full kept set. At least one
/// column is always kept.
pub fn column_reduce(a: &TropMatrix) -> (Vec<usize>, Vec<Dependency>) {
    let mut kept: Vec<usize> = Vec::new();
    let mut kept_cols: Vec<TropVector> = Vec::new();
    let mut removed: Vec<Dependency> = Vec::new();

    for j in 0..a.cols() {
        let target = a.col_vector(j);
        match is_combination(&target, &kept_cols).expect("shapes agree by construction") {
            Some(coeffs) => removed.push((j, coeffs)),
            None => {
                kept.push(j);
                kept_cols.push(target);
            }
        }
    }

    if kept.is_empty() {
        // Every column is all-neutral; keep the first so the reduced matrix
        // stays representable.
        kept.push(removed.remove(0).0);
        for (_, coeffs) in &mut removed {
            coeffs.push(TropScalar::Neutral);
        }
    }

    // Coefficients were recorded over the kept prefix at removal time; pad
    // with neutral coefficients to cover the full kept set.
    for (_, coeffs) in &mut removed {
        coeffs.resize(kept.len(), TropScalar::Neutral);
    }
    (kept, removed)
}

/// Dual of [`column_reduce`] on the rows, via the transpose.
pub fn row_reduce(a: &TropMatrix) -> (Vec<usize>, Vec<Dependency>) {
    column_reduce(&a.transpose())
}

/// Reduces `AX = b` (regular `b`) by removing dependent rows and columns,
/// rows first by default. Every removed row is checked against equation
/// consistency; a failure marks the whole system unsolvable.
pub fn reduce_system(a: &TropMatrix, b: &TropVector) -> Result<ReducedSystem> {
    reduce_system_ordered(a, b, ReduceOrder::default())
}

/// [`reduce_system`] with an explicit analysis order.
pub fn reduce_system_ordered(
    a: &TropMatrix,
    b: &TropVector,
    order: ReduceOrder,
) -> Result<ReducedSystem> {
    let s = a.semiring();
    if b.semiring() != s {
        return Err(TropError::SemiringMismatch {
            op: "reduce_system",
            lhs: s,
            rhs: b.semiring(),
        });
    }
    if !b.is_column() || b.rows() != a.rows() {
        return Err(TropError::ShapeMismatch {
            op: "reduce_system",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    for i in 0..b.rows() {
        if b.get(i, 0).is_neutral() {
            return Err(TropError::NonRegular { index: i });
        }
    }

    let (kept_rows, xi, kept_cols, eta) = match order {
        ReduceOrder::RowsThenColumns => {
            let (kept_rows, xi) = row_reduce(a);
            let row_restricted =
                TropMatrix::from_fn(s, kept_rows.len(), a.cols(), |i, j| {
                    a.get(kept_rows[i], j).clone()
                })?;
            let (kept_cols, eta) = column_reduce(&row_restricted);
            (kept_rows, xi, kept_cols, eta)
        }
        ReduceOrder::ColumnsThenRows => {
            let (kept_cols, eta) = column_reduce(a);
            let col_restricted =
                TropMatrix::from_fn(s, a.rows(), kept_cols.len(), |i, j| {
                    a.get(i, kept_cols[j]).clone()
                })?;
            let (kept_rows, xi) = row_reduce(&col_restricted);
            (kept_rows, xi, kept_cols, eta)
        }
    };

    let a_bar = TropMatrix::from_fn(s, kept_rows.len(), kept_cols.len(), |i, j| {
        a.get(kept_rows[i], kept_cols[j]).clone()
    })?;
    let b_bar = TropMatrix::column(
        s,
        kept_rows.iter().map(|&i| b.get(i, 0).clone()).collect(),
    )?;

    let consistent = xi.iter().all(|(row, coeffs)| {
        let mut combo = TropScalar::Neutral;
        for (pos, &kept) in kept_rows.iter().enumerate() {
            combo = s.add(&combo, &s.mul(b.get(kept, 0), &coeffs[pos]));
        }
        combo == *b.get(*row, 0)
    });

    Ok(ReducedSystem {
        kept_rows,
        kept_cols,
        xi,
        eta,
        a_bar,
        b_bar,
        consistent,
    })
}

/// Lifts a solution of the reduced system back to the original variables.
///
/// Kept variables take their reduced values; each removed variable takes
/// its greatest admissible value, the natural-order minimum of
/// `y*[i] (x) eta[i]^-1` over the kept positions with a finite coefficient
/// (neutral coefficients impose no bound). A removed all-neutral column
/// constrains nothing and lifts as the multiplicative identity. The result
/// satisfies the original system whenever `y_star` solves the reduced one
/// and the reduction was consistent.
pub fn lift_solution(reduced: &ReducedSystem, y_star: &TropVector) -> Result<TropVector> {
    if !reduced.consistent {
        return Err(TropError::InconsistentSystem);
    }
    let s = reduced.a_bar.semiring();
    if y_star.semiring() != s {
        return Err(TropError::SemiringMismatch {
            op: "lift_solution",
            lhs: s,
            rhs: y_star.semiring(),
        });
    }
    if !y_star.is_column() || y_star.rows() != reduced.kept_cols.len() {
        return Err(TropError::ShapeMismatch {
            op: "lift_solution",
            lhs_rows: reduced.kept_cols.len(),
            lhs_cols: 1,
            rhs_rows: y_star.rows(),
            rhs_cols: y_star.cols(),
        });
    }

    let n = reduced.original_cols();
    let mut entries = vec![TropScalar::Neutral; n];
    for (pos, &j) in reduced.kept_cols.iter().enumerate() {
        entries[j] = y_star.get(pos, 0).clone();
    }
    for (j, coeffs) in &reduced.eta {
        let mut bound: Option<TropScalar> = None;
        for (pos, coeff) in coeffs.iter().enumerate() {
            if coeff.is_neutral() {
                continue;
            }
            let candidate = s.mul(y_star.get(pos, 0), &s.inv(coeff)?);
            bound = Some(match bound {
                None => candidate,
                Some(current) => s.meet(&current, &candidate),
            });
        }
        entries[*j] = bound.unwrap_or_else(|| s.one());
    }
    TropMatrix::column(s, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Semiring;

    fn fin(n: i64) -> TropScalar {
        TropScalar::integer(n)
    }

    fn mp(rows: Vec<Vec<i64>>) -> TropMatrix {
        TropMatrix::from_rows(
            Semiring::MaxPlus,
            rows.into_iter()
                .map(|r| r.into_iter().map(fin).collect())
                .collect(),
        )
        .unwrap()
    }

    fn col(entries: Vec<i64>) -> TropVector {
        TropMatrix::column(Semiring::MaxPlus, entries.into_iter().map(fin).collect()).unwrap()
    }

    // 3x3 matrix with column rank 2: C3 = (C1 (x) 2) (+) (C2 (x) -2).
    fn rank_example() -> TropMatrix {
        mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6]])
    }

    #[test]
    fn detects_column_combination_with_exact_coefficients() {
        let a = rank_example();
        let target = a.col_vector(2);
        let gens = [a.col_vector(0), a.col_vector(1)];
        let coeffs = is_combination(&target, &gens).unwrap().unwrap();
        assert_eq!(coeffs, vec![fin(2), fin(-2)]);
    }

    #[test]
    fn target_equal_to_generator_gets_unit_coefficient() {
        let a = rank_example();
        let target = a.col_vector(1);
        let gens = [a.col_vector(0), a.col_vector(1)];
        let coeffs = is_combination(&target, &gens).unwrap().unwrap();
        assert_eq!(coeffs[1], Semiring::MaxPlus.one());
    }

    #[test]
    fn raised_target_is_independent() {
        let a = rank_example();
        // C3 with one coordinate pushed above the span's reach
        let target = col(vec![100, -2, 6]);
        let gens = [a.col_vector(0), a.col_vector(1)];
        assert!(is_combination(&target, &gens).unwrap().is_none());
    }

    #[test]
    fn column_reduce_keeps_two_columns_of_rank_example() {
        let a = rank_example();
        let (kept, eta) = column_reduce(&a);
        assert_eq!(kept, vec![0, 1]);
        assert_eq!(eta, vec![(2, vec![fin(2), fin(-2)])]);
    }

    #[test]
    fn row_reduce_keeps_all_rows_of_rank_example() {
        let a = rank_example();
        let (kept, xi) = row_reduce(&a);
        assert_eq!(kept, vec![0, 1, 2]);
        assert!(xi.is_empty());
    }

    #[test]
    fn equal_columns_collapse_to_one() {
        let a = mp(vec![vec![1, 1, 1], vec![2, 2, 2]]);
        let (kept, eta) = column_reduce(&a);
        assert_eq!(kept, vec![0]);
        for (_, coeffs) in &eta {
            assert_eq!(coeffs, &vec![Semiring::MaxPlus.one()]);
        }
    }

    #[test]
    fn identity_matrix_keeps_every_column() {
        let id = TropMatrix::identity(Semiring::MaxPlus, 4).unwrap();
        let (kept, eta) = column_reduce(&id);
        assert_eq!(kept, vec![0, 1, 2, 3]);
        assert!(eta.is_empty());
    }

    #[test]
    fn all_neutral_matrix_keeps_one_column() {
        let a = TropMatrix::zeros(Semiring::MaxPlus, 2, 3).unwrap();
        let (kept, eta) = column_reduce(&a);
        assert_eq!(kept, vec![0]);
        assert_eq!(eta.len(), 2);
        for (_, coeffs) in &eta {
            assert_eq!(coeffs, &vec![TropScalar::Neutral]);
        }
    }

    #[test]
    fn duplicated_row_is_removed_with_unit_coefficient() {
        let a = mp(vec![vec![1, -6, 2], vec![4, 5, 1], vec![4, 5, 1]]);
        let (kept, xi) = row_reduce(&a);
        assert_eq!(kept, vec![0, 1]);
        assert_eq!(xi.len(), 1);
        let (row, coeffs) = &xi[0];
        assert_eq!(*row, 2);
        assert_eq!(coeffs[1], Semiring::MaxPlus.one());
        // the combination reconstructs the removed row exactly
        let target = a.transpose().col_vector(2);
        let gens = [a.transpose().col_vector(0), a.transpose().col_vector(1)];
        assert_eq!(is_combination(&target, &gens).unwrap().unwrap(), *coeffs);
    }

    #[test]
    fn reduce_system_keeps_consistent_duplicate() {
        let a = mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6], vec![4, 1, 6]]);
        let b = col(vec![6, 0, 4, 4]);
        let r = reduce_system(&a, &b).unwrap();
        assert!(r.consistent);
        assert_eq!(r.kept_rows, vec![0, 1, 2]);
        assert_eq!(r.kept_cols, vec![0, 1]);
        assert_eq!(r.b_bar, col(vec![6, 0, 4]));
    }

    #[test]
    fn reduce_system_flags_perturbed_duplicate() {
        let a = mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6], vec![4, 1, 6]]);
        let b = col(vec![6, 0, 4, 5]);
        let r = reduce_system(&a, &b).unwrap();
        assert!(!r.consistent);
        assert!(matches!(
            lift_solution(&r, &col(vec![0, 0])),
            Err(TropError::InconsistentSystem)
        ));
    }

    #[test]
    fn independent_square_system_reduces_to_itself() {
        let a = mp(vec![
            vec![1, -6, 2, -5],
            vec![4, 5, 1, -2],
            vec![7, -1, 3, 0],
            vec![-2, -9, -5, 0],
        ]);
        let b = col(vec![2, 7, 3, -4]);
        let r = reduce_system(&a, &b).unwrap();
        assert_eq!(r.a_bar, a);
        assert_eq!(r.b_bar, b);
        assert!(r.xi.is_empty() && r.eta.is_empty());
    }

    #[test]
    fn both_orders_agree_on_consistency() {
        let a = mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6], vec![4, 1, 6]]);
        let good = col(vec![6, 0, 4, 4]);
        let bad = col(vec![6, 0, 4, 9]);
        for b in [good, bad] {
            let rows_first = reduce_system_ordered(&a, &b, ReduceOrder::RowsThenColumns).unwrap();
            let cols_first = reduce_system_ordered(&a, &b, ReduceOrder::ColumnsThenRows).unwrap();
            assert_eq!(rows_first.consistent, cols_first.consistent);
        }
    }

    #[test]
    fn lift_reconstructs_removed_variable_maximally() {
        let a = rank_example();
        // b = C1 (+) C2, so y* = (0, 0) solves the reduced system
        let b = col(vec![6, 0, 4]);
        let r = reduce_system(&a, &b).unwrap();
        assert!(r.consistent);
        let y = col(vec![0, 0]);
        assert_eq!(r.a_bar.mul(&y).unwrap(), r.b_bar);
        let x = lift_solution(&r, &y).unwrap();
        // x3 = min(0 - 2, 0 + 2) = -2
        assert_eq!(x, col(vec![0, 0, -2]));
        assert_eq!(a.mul(&x).unwrap(), b);
    }

    #[test]
    fn lift_is_identity_without_removed_columns() {
        let a = mp(vec![vec![1, -6], vec![4, 5]]);
        let b = col(vec![2, 7]);
        let r = reduce_system(&a, &b).unwrap();
        let y = col(vec![1, 2]);
        assert_eq!(lift_solution(&r, &y).unwrap(), y);
    }

    #[test]
    fn lift_skips_neutral_coefficients() {
        let a = TropMatrix::from_rows(
            Semiring::MaxPlus,
            vec![
                vec![fin(0), fin(5), fin(1)],
                vec![TropScalar::Neutral, fin(0), TropScalar::Neutral],
            ],
        )
        .unwrap();
        let b = col(vec![12, 7]);
        let r = reduce_system(&a, &b).unwrap();
        assert_eq!(r.kept_cols, vec![0, 1]);
        assert_eq!(r.eta, vec![(2, vec![fin(1), TropScalar::Neutral])]);
        let y = col(vec![3, 7]);
        assert_eq!(r.a_bar.mul(&y).unwrap(), r.b_bar);
        let x = lift_solution(&r, &y).unwrap();
        // the neutral coefficient imposes no bound: x3 = y1 - 1 only
        assert_eq!(x, col(vec![3, 7, 2]));
        assert_eq!(a.mul(&x).unwrap(), b);
    }

    #[test]
    fn reduction_is_idempotent() {
        let a = mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6], vec![4, 1, 6]]);
        let b = col(vec![6, 0, 4, 4]);
        let r = reduce_system(&a, &b).unwrap();
        let again = reduce_system(&r.a_bar, &r.b_bar).unwrap();
        assert_eq!(again.a_bar, r.a_bar);
        assert!(again.xi.is_empty() && again.eta.is_empty());
    }

    #[test]
    fn rejects_non_regular_rhs() {
        let a = mp(vec![vec![1]]);
        let b = TropMatrix::column(Semiring::MaxPlus, vec![TropScalar::Neutral]).unwrap();
        assert!(matches!(
            reduce_system(&a, &b),
            Err(TropError::NonRegular { index: 0 })
        ));
    }
}

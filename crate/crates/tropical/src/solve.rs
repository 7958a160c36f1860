//! Linear-system solving: pseudo-inverse, solvability conditions, maximal
//! solutions, extended Cramer's rule, non-square extensions, regularity
//! preprocessing, and the independent residuation oracle.
//!
//! For a square `A` with unit epsilon-determinant, the pseudo-inverse is
//! `A^- = det_eps(A)^-1 (x) adj_eps(A)`. The system `AX = b` (with regular
//! `b`) has the maximal solution `X* = A^- b` exactly when every entry of
//! `AA^-` satisfies `(AA^-)[i][j] <= b[i] (x) b[j]^-1`; the report captures
//! the failures otherwise. Wide systems go through `A A^T Y = b`, tall ones
//! through `A^T A X = A^T b` with a final membership check against `b`.

use crate::det::{det_eps, replace_col_with};
use crate::error::{Result, TropError};
use crate::matrix::{TropMatrix, TropVector};
use crate::reduce::{lift_solution, reduce_system, ReducedSystem};
use crate::scalar::TropScalar;

/// Outcome class of a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The system is solved; `x_star` is a verified solution.
    MaximalSolution,
    /// The solvability conditions fail; `x_star`, when present, is the
    /// diagnostic candidate that does not solve the system.
    ConditionsViolated,
    /// The epsilon-determinant of the (derived) square matrix is the
    /// additive identity, so the method does not apply.
    DetNotUnit,
}

/// Whether a verified solution is known to dominate all others.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Maximality {
    Maximal,
    /// Wide systems produce a solution that need not be maximal.
    NotNecessarilyMaximal,
}

/// One failed check, in the coordinates of the system it was checked on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `(AA^-)[i][j] <= b[i] (x) b[j]^-1` failed.
    Condition {
        i: usize,
        j: usize,
        lhs: TropScalar,
        rhs: TropScalar,
    },
    /// Component `i` of `A (x) x` differs from `b[i]`.
    Equation {
        i: usize,
        got: TropScalar,
        want: TropScalar,
    },
    /// A dependent row's right-hand side failed its consistency equation
    /// during reduction.
    DependentRow {
        row: usize,
        got: TropScalar,
        want: TropScalar,
    },
}

/// Everything a solve produced. `status` is `MaximalSolution` exactly when
/// `violations` is empty and `x_star` is a verified solution of the system
/// that was solved (for `DetNotUnit` nothing else is populated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub status: SolveStatus,
    /// Solution or diagnostic candidate, in the original variable order.
    pub x_star: Option<TropVector>,
    /// Pseudo-inverse of the square matrix that was actually inverted
    /// (`A`, `AA^T`, or `A^T A` depending on the path).
    pub a_pinv: Option<TropMatrix>,
    /// The product of that square matrix with its pseudo-inverse.
    pub gram: Option<TropMatrix>,
    pub violations: Vec<Violation>,
    /// Present only for verified maximal solutions: true when the solution
    /// is provably the only one.
    pub unique: Option<bool>,
    /// `A (x) x_star` where available, for diagnostics.
    pub residual: Option<TropVector>,
    pub maximality: Option<Maximality>,
    /// Intermediate solution of the derived square system (wide path).
    pub y_star: Option<TropVector>,
    /// Variables forced to the additive identity by preprocessing.
    pub forced: Vec<usize>,
    /// Present when order reduction ran first.
    pub reduction: Option<ReductionSummary>,
}

impl SolveReport {
    fn det_not_unit() -> Self {
        SolveReport {
            status: SolveStatus::DetNotUnit,
            x_star: None,
            a_pinv: None,
            gram: None,
            violations: Vec::new(),
            unique: None,
            residual: None,
            maximality: None,
            y_star: None,
            forced: Vec::new(),
            reduction: None,
        }
    }
}

/// Row/column counts a reduction kept, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSummary {
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    pub consistent: bool,
}

/// The regular residual system produced by [`preprocess_regular`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprocessedSystem {
    /// Equations kept (those with a finite right-hand side).
    pub kept_rows: Vec<usize>,
    /// Variables kept.
    pub kept_cols: Vec<usize>,
    /// Variables forced to the additive identity by a removed equation.
    pub forced: Vec<usize>,
    /// The residual coefficient matrix over the kept rows and columns.
    pub a: TropMatrix,
    /// The residual right-hand side; regular by construction.
    pub b: TropVector,
}

impl PreprocessedSystem {
    /// True when preprocessing changed nothing.
    pub fn is_identity(&self) -> bool {
        self.forced.is_empty() && self.kept_rows.len() == self.a.rows()
    }
}

fn check_system_shapes(a: &TropMatrix, b: &TropVector, op: &'static str) -> Result<()> {
    if a.semiring() != b.semiring() {
        return Err(TropError::SemiringMismatch {
            op,
            lhs: a.semiring(),
            rhs: b.semiring(),
        });
    }
    if !b.is_column() || b.rows() != a.rows() {
        return Err(TropError::ShapeMismatch {
            op,
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    Ok(())
}

fn require_regular(b: &TropVector) -> Result<()> {
    for i in 0..b.rows() {
        if b.get(i, 0).is_neutral() {
            return Err(TropError::NonRegular { index: i });
        }
    }
    Ok(())
}

/// Removes every equation whose right-hand side is the additive identity,
/// forcing to the additive identity (and removing) each variable that has a
/// finite coefficient in a removed equation. The residual right-hand side
/// is regular.
pub fn preprocess_regular(a: &TropMatrix, b: &TropVector) -> Result<PreprocessedSystem> {
    check_system_shapes(a, b, "preprocess_regular")?;
    let (m, n) = (a.rows(), a.cols());
    let kept_rows: Vec<usize> = (0..m).filter(|&i| b.get(i, 0).is_finite()).collect();
    if kept_rows.is_empty() {
        return Err(TropError::EmptySystem(
            "every right-hand side entry is the additive identity".into(),
        ));
    }
    let mut is_forced = vec![false; n];
    for i in 0..m {
        if b.get(i, 0).is_finite() {
            continue;
        }
        for (j, forced) in is_forced.iter_mut().enumerate() {
            if a.get(i, j).is_finite() {
                *forced = true;
            }
        }
    }
    let forced: Vec<usize> = (0..n).filter(|&j| is_forced[j]).collect();
    let kept_cols: Vec<usize> = (0..n).filter(|&j| !is_forced[j]).collect();
    if kept_cols.is_empty() {
        return Err(TropError::EmptySystem(
            "every variable is forced to the additive identity".into(),
        ));
    }
    let sub = TropMatrix::from_fn(a.semiring(), kept_rows.len(), kept_cols.len(), |i, j| {
        a.get(kept_rows[i], kept_cols[j]).clone()
    })?;
    let sub_b = TropMatrix::column(
        b.semiring(),
        kept_rows.iter().map(|&i| b.get(i, 0).clone()).collect(),
    )?;
    Ok(PreprocessedSystem {
        kept_rows,
        kept_cols,
        forced,
        a: sub,
        b: sub_b,
    })
}

/// The pseudo-inverse `A^- = det_eps(A)^-1 (x) adj_eps(A)`. Fails with
/// `DetNotUnit` when the epsilon-determinant is the additive identity.
pub fn pseudo_inverse(a: &TropMatrix) -> Result<TropMatrix> {
    let s = a.semiring();
    let d = det_eps(a)?.value;
    if d.is_neutral() {
        return Err(TropError::DetNotUnit(s.format_scalar(&d)));
    }
    let d_inv = s.inv(&d)?;
    if a.rows() == 1 {
        // The 1x1 adjoint is the empty-product determinant, i.e. the
        // multiplicative identity.
        return TropMatrix::from_rows(s, vec![vec![d_inv]]);
    }
    crate::det::adj_eps(a)?.scalar_mul(&d_inv)
}

/// `A A^-`, whose diagonal is the multiplicative identity.
pub fn gram(a: &TropMatrix) -> Result<TropMatrix> {
    a.mul(&pseudo_inverse(a)?)
}

/// `A^- A`, used by the uniqueness test.
pub fn dual_gram(a: &TropMatrix) -> Result<TropMatrix> {
    pseudo_inverse(a)?.mul(a)
}

/// `A A^-` computed without the adjoint, entry by entry, as
/// `det_eps(A_r(i => j)) (x) det_eps(A)^-1`. Must agree exactly with
/// [`gram`]; kept as the second route of the pair.
pub fn gram_via_replacement(a: &TropMatrix) -> Result<TropMatrix> {
    let s = a.semiring();
    let n = a.rows();
    let d = det_eps(a)?.value;
    if d.is_neutral() {
        return Err(TropError::DetNotUnit(s.format_scalar(&d)));
    }
    let d_inv = s.inv(&d)?;
    TropMatrix::from_fn(s, n, n, |i, j| {
        let replaced = crate::det::row_replace(a, i, j).expect("indices in range");
        let dij = det_eps(&replaced).expect("square").value;
        s.mul(&dij, &d_inv)
    })
}

/// All failures of `(AA^-)[i][j] <= b[i] (x) b[j]^-1` over ordered pairs
/// `i != j` (the diagonal holds identically). Empty means the system has
/// the maximal solution `A^- b`.
pub fn solvability_conditions(a: &TropMatrix, b: &TropVector) -> Result<Vec<Violation>> {
    check_system_shapes(a, b, "solvability_conditions")?;
    require_regular(b)?;
    let g = gram(a)?;
    Ok(conditions_from_gram(&g, b))
}

fn conditions_from_gram(g: &TropMatrix, b: &TropVector) -> Vec<Violation> {
    let s = g.semiring();
    let n = g.rows();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let lhs = g.get(i, j).clone();
            let rhs = s.mul(
                b.get(i, 0),
                &s.inv(b.get(j, 0)).expect("regular right-hand side"),
            );
            if !s.leq(&lhs, &rhs) {
                violations.push(Violation::Condition { i, j, lhs, rhs });
            }
        }
    }
    violations
}

/// Solves the square system `AX = b` by the pseudo-inverse method.
///
/// When the conditions hold, `x_star = A^- b` solves the system, dominates
/// every other solution, and is reported unique exactly when every
/// off-diagonal inequality `(A^-A)[k][l] (x) x*[l] <= x*[k]` is strict.
/// When they fail, the report still carries the candidate `A^- b` and its
/// residual `A (x) (A^- b)` for diagnosis.
pub fn solve_square(a: &TropMatrix, b: &TropVector) -> Result<SolveReport> {
    let n = if a.is_square() {
        a.rows()
    } else {
        return Err(TropError::NotSquare {
            op: "solve_square",
            rows: a.rows(),
            cols: a.cols(),
        });
    };
    check_system_shapes(a, b, "solve_square")?;
    require_regular(b)?;
    let s = a.semiring();

    let pinv = match pseudo_inverse(a) {
        Ok(p) => p,
        Err(TropError::DetNotUnit(_)) => return Ok(SolveReport::det_not_unit()),
        Err(e) => return Err(e),
    };
    let g = a.mul(&pinv)?;
    let violations = conditions_from_gram(&g, b);
    let x = pinv.mul(b)?;
    let residual = a.mul(&x)?;

    if violations.is_empty() {
        debug_assert_eq!(residual, *b);
        let dual = pinv.mul(a)?;
        let mut unique = true;
        'outer: for k in 0..n {
            for l in 0..n {
                if k == l {
                    continue;
                }
                let bound = s.mul(dual.get(k, l), x.get(l, 0));
                if !s.lt(&bound, x.get(k, 0)) {
                    unique = false;
                    break 'outer;
                }
            }
        }
        Ok(SolveReport {
            status: SolveStatus::MaximalSolution,
            x_star: Some(x),
            a_pinv: Some(pinv),
            gram: Some(g),
            violations,
            unique: Some(unique),
            residual: Some(residual),
            maximality: Some(Maximality::Maximal),
            y_star: None,
            forced: Vec::new(),
            reduction: None,
        })
    } else {
        Ok(SolveReport {
            status: SolveStatus::ConditionsViolated,
            x_star: Some(x),
            a_pinv: Some(pinv),
            gram: Some(g),
            violations,
            unique: None,
            residual: Some(residual),
            maximality: None,
            y_star: None,
            forced: Vec::new(),
            reduction: None,
        })
    }
}

/// Extended Cramer's rule: component `j` of the maximal-solution candidate
/// is `det_eps(A with column j replaced by b) (x) det_eps(A)^-1`. Never
/// forms `A^-`; agrees with `A^- (x) b` componentwise for every valid
/// square system, solvable or not.
pub fn cramer_solve(a: &TropMatrix, b: &TropVector) -> Result<TropVector> {
    if !a.is_square() {
        return Err(TropError::NotSquare {
            op: "cramer_solve",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    check_system_shapes(a, b, "cramer_solve")?;
    require_regular(b)?;
    let s = a.semiring();
    let d = det_eps(a)?.value;
    if d.is_neutral() {
        return Err(TropError::DetNotUnit(s.format_scalar(&d)));
    }
    let d_inv = s.inv(&d)?;
    let mut entries = Vec::with_capacity(a.rows());
    for j in 0..a.cols() {
        let dj = det_eps(&replace_col_with(a, j, b)?)?.value;
        entries.push(s.mul(&d_inv, &dj));
    }
    TropMatrix::column(s, entries)
}

/// The principal (residuation) solution: the entrywise greatest `x` with
/// `A (x) x <= b`. The system is solvable exactly when `A (x) x^ = b`, in
/// which case `x^` is the maximal solution. This is the independent oracle
/// the rest of the solver is checked against; it is not part of the
/// pseudo-inverse machinery.
pub fn principal_solution(a: &TropMatrix, b: &TropVector) -> Result<TropVector> {
    check_system_shapes(a, b, "principal_solution")?;
    require_regular(b)?;
    let s = a.semiring();
    let unbounded: Vec<usize> = (0..a.cols())
        .filter(|&j| (0..a.rows()).all(|i| a.get(i, j).is_neutral()))
        .collect();
    if !unbounded.is_empty() {
        return Err(TropError::UnboundedVariable { columns: unbounded });
    }
    let mut entries = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let mut bound: Option<TropScalar> = None;
        for i in 0..a.rows() {
            let coeff = a.get(i, j);
            if coeff.is_neutral() {
                continue;
            }
            let candidate = s.mul(b.get(i, 0), &s.inv(coeff)?);
            bound = Some(match bound {
                None => candidate,
                Some(current) => s.meet(&current, &candidate),
            });
        }
        entries.push(bound.expect("column has a finite entry"));
    }
    TropMatrix::column(s, entries)
}

/// Solves a wide system (`m < n`) through the derived square system
/// `A A^T Y = b`. On success the solution `X = A^T (x) Y*` satisfies
/// `A (x) X = b` but is not necessarily maximal.
pub fn solve_wide(a: &TropMatrix, b: &TropVector) -> Result<SolveReport> {
    if a.rows() >= a.cols() {
        return Err(TropError::ShapeMismatch {
            op: "solve_wide (requires fewer equations than unknowns)",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: a.rows(),
            rhs_cols: a.rows(),
        });
    }
    check_system_shapes(a, b, "solve_wide")?;
    require_regular(b)?;
    let square = a.mul(&a.transpose())?;
    let inner = solve_square(&square, b)?;
    if inner.status == SolveStatus::DetNotUnit {
        return Ok(inner);
    }
    let y = inner.x_star.clone().expect("candidate present");
    let x = a.transpose().mul(&y)?;
    let residual = a.mul(&x)?;
    if inner.status == SolveStatus::MaximalSolution {
        debug_assert_eq!(residual, *b);
        Ok(SolveReport {
            status: SolveStatus::MaximalSolution,
            x_star: Some(x),
            maximality: Some(Maximality::NotNecessarilyMaximal),
            unique: None,
            residual: Some(residual),
            y_star: Some(y),
            ..inner
        })
    } else {
        Ok(SolveReport {
            status: SolveStatus::ConditionsViolated,
            x_star: Some(x),
            maximality: None,
            unique: None,
            residual: Some(residual),
            y_star: Some(y),
            ..inner
        })
    }
}

/// Solves a tall system (`n < m`) through the derived square system
/// `A^T A X = A^T b`. The square solution solves the original system only
/// if it passes the final membership check `A (x) X* = b` (equivalently,
/// `b` is an eigenvector of `A (A^T A)^- A^T` for the multiplicative
/// identity); otherwise the answer to the nearest square system is still
/// reported, flagged by the `ConditionsViolated` status.
pub fn solve_tall(a: &TropMatrix, b: &TropVector) -> Result<SolveReport> {
    if a.cols() >= a.rows() {
        return Err(TropError::ShapeMismatch {
            op: "solve_tall (requires more equations than unknowns)",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: a.cols(),
            rhs_cols: a.cols(),
        });
    }
    check_system_shapes(a, b, "solve_tall")?;
    require_regular(b)?;
    let at = a.transpose();
    let square = at.mul(a)?;
    let rhs = at.mul(b)?;
    // A^T b is non-regular exactly when a column of A is all-neutral; that
    // variable is unbounded and the square method cannot apply.
    require_regular(&rhs).map_err(|e| match e {
        TropError::NonRegular { index } => TropError::UnboundedVariable {
            columns: vec![index],
        },
        other => other,
    })?;
    let inner = solve_square(&square, &rhs)?;
    if inner.status != SolveStatus::MaximalSolution {
        return Ok(inner);
    }
    let x = inner.x_star.clone().expect("solution present");
    let residual = a.mul(&x)?;
    if residual == *b {
        Ok(SolveReport {
            status: SolveStatus::MaximalSolution,
            residual: Some(residual),
            maximality: Some(Maximality::Maximal),
            ..inner
        })
    } else {
        let mut violations = Vec::new();
        for i in 0..b.rows() {
            let got = residual.get(i, 0).clone();
            let want = b.get(i, 0).clone();
            if got != want {
                violations.push(Violation::Equation { i, got, want });
            }
        }
        Ok(SolveReport {
            status: SolveStatus::ConditionsViolated,
            violations,
            residual: Some(residual),
            unique: None,
            maximality: None,
            ..inner
        })
    }
}

/// True iff `M (x) x = lambda (x) x` entrywise.
pub fn is_eigenpair(m: &TropMatrix, lambda: &TropScalar, x: &TropVector) -> Result<bool> {
    if !m.is_square() {
        return Err(TropError::NotSquare {
            op: "is_eigenpair",
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    check_system_shapes(m, x, "is_eigenpair")?;
    m.semiring().validate(lambda)?;
    Ok(m.mul(x)? == x.scalar_mul(lambda)?)
}

/// Options for the [`solve_system`] entry point.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Run row-column order reduction before dispatching.
    pub reduce_first: bool,
}

/// Full solve pipeline: regularity preprocessing, optional order reduction,
/// dispatch on shape (square / wide / tall), and reassembly of the solution
/// in the original variable order (preprocessed-away variables take the
/// additive identity).
///
/// When reduction is requested and the reduced system is inconsistent or
/// unsolvable, the report carries the reduction's verdict; no candidate is
/// lifted through the reduction in that case.
pub fn solve_system(a: &TropMatrix, b: &TropVector, options: SolveOptions) -> Result<SolveReport> {
    check_system_shapes(a, b, "solve_system")?;
    let pre = preprocess_regular(a, b)?;

    let (mut report, solved_in_pre_coords) = if options.reduce_first {
        let reduced = reduce_system(&pre.a, &pre.b)?;
        let summary = ReductionSummary {
            kept_rows: reduced.kept_rows.clone(),
            kept_cols: reduced.kept_cols.clone(),
            consistent: reduced.consistent,
        };
        if !reduced.consistent {
            let violations = dependent_row_violations(&reduced, &pre.b);
            let mut report = SolveReport::det_not_unit();
            report.status = SolveStatus::ConditionsViolated;
            report.violations = violations;
            report.reduction = Some(summary);
            (report, None)
        } else {
            let mut report = dispatch_by_shape(&reduced.a_bar, &reduced.b_bar)?;
            let lifted = if report.status == SolveStatus::MaximalSolution {
                let y = report.x_star.clone().expect("solution present");
                Some(lift_solution(&reduced, &y)?)
            } else {
                report.x_star = None;
                report.residual = None;
                None
            };
            report.reduction = Some(summary);
            (report, lifted)
        }
    } else {
        let report = dispatch_by_shape(&pre.a, &pre.b)?;
        let candidate = report.x_star.clone();
        (report, candidate)
    };

    // Reassemble into the original variable order and re-derive the
    // residual against the original system.
    if let Some(sub_x) = solved_in_pre_coords {
        let s = a.semiring();
        let mut full = vec![TropScalar::Neutral; a.cols()];
        for (pos, &j) in pre.kept_cols.iter().enumerate() {
            full[j] = sub_x.get(pos, 0).clone();
        }
        let full_x = TropMatrix::column(s, full)?;
        report.residual = Some(a.mul(&full_x)?);
        report.x_star = Some(full_x);
    }
    report.forced = pre.forced.clone();
    Ok(report)
}

fn dependent_row_violations(reduced: &ReducedSystem, b: &TropVector) -> Vec<Violation> {
    let s = b.semiring();
    reduced
        .xi
        .iter()
        .filter_map(|(row, coeffs)| {
            let mut combo = TropScalar::Neutral;
            for (pos, &kept) in reduced.kept_rows.iter().enumerate() {
                combo = s.add(&combo, &s.mul(b.get(kept, 0), &coeffs[pos]));
            }
            let want = b.get(*row, 0).clone();
            (combo != want).then_some(Violation::DependentRow {
                row: *row,
                got: combo,
                want,
            })
        })
        .collect()
}

fn dispatch_by_shape(a: &TropMatrix, b: &TropVector) -> Result<SolveReport> {
    use std::cmp::Ordering;
    match a.rows().cmp(&a.cols()) {
        Ordering::Equal => solve_square(a, b),
        Ordering::Less => solve_wide(a, b),
        Ordering::Greater => solve_tall(a, b),
    }
}

//! Exact optimal-assignment solver used by the fast determinant path.
//!
//! The solver is the shortest-augmenting-path form of the Hungarian
//! algorithm, written over an arbitrary totally ordered abelian group so it
//! runs exactly on rationals (additively for the plus semirings,
//! multiplicatively for the times semirings) and on lexicographic cost
//! pairs used for deterministic tie-breaking. Forbidden cells are an
//! explicit `Inf` sentinel; if no perfect matching over finite cells
//! exists, the solver reports infeasibility instead of inventing a big-M.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;

/// A totally ordered abelian group: exactly the structure the Hungarian
/// potentials need (compare, combine, cancel).
pub(crate) trait GroupCost: Clone + Ord {
    fn identity() -> Self;
    fn combine(&self, other: &Self) -> Self;
    fn cancel(&self, other: &Self) -> Self;
}

/// (Q, +, 0) with the numeric order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct AddCost(pub BigRational);

impl GroupCost for AddCost {
    fn identity() -> Self {
        AddCost(BigRational::zero())
    }

    fn combine(&self, other: &Self) -> Self {
        AddCost(&self.0 + &other.0)
    }

    fn cancel(&self, other: &Self) -> Self {
        AddCost(&self.0 - &other.0)
    }
}

/// (Q_{>0}, *, 1) with the numeric order; all payloads stay positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct MulCost(pub BigRational);

impl GroupCost for MulCost {
    fn identity() -> Self {
        MulCost(BigRational::new(BigInt::from(1), BigInt::from(1)))
    }

    fn combine(&self, other: &Self) -> Self {
        MulCost(&self.0 * &other.0)
    }

    fn cancel(&self, other: &Self) -> Self {
        MulCost(&self.0 / &other.0)
    }
}

/// Lexicographic product of a primary group with (Z, +): optimize the
/// primary objective first, then the integer tie-break. The derived `Ord`
/// compares fields in declaration order, which is exactly lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct LexCost<C> {
    pub primary: C,
    pub tie: BigInt,
}

impl<C: GroupCost> GroupCost for LexCost<C> {
    fn identity() -> Self {
        LexCost {
            primary: C::identity(),
            tie: BigInt::zero(),
        }
    }

    fn combine(&self, other: &Self) -> Self {
        LexCost {
            primary: self.primary.combine(&other.primary),
            tie: &self.tie + &other.tie,
        }
    }

    fn cancel(&self, other: &Self) -> Self {
        LexCost {
            primary: self.primary.cancel(&other.primary),
            tie: &self.tie - &other.tie,
        }
    }
}

/// A group cost extended with an unreachable top element. Derived `Ord`
/// puts `Fin(_) < Inf`, as required.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Ext<C> {
    Fin(C),
    Inf,
}

impl<C: GroupCost> Ext<C> {
    fn cancel_fin(&self, other: &C) -> Ext<C> {
        match self {
            Ext::Fin(c) => Ext::Fin(c.cancel(other)),
            Ext::Inf => Ext::Inf,
        }
    }
}

/// Minimum-cost perfect assignment on an `n x n` cost grid. Returns the
/// column assigned to each row, or `None` if the finite cells admit no
/// perfect matching. The minimum is over the sum (group combine) of the
/// selected cells.
pub(crate) fn min_cost_assignment<C: GroupCost>(cost: &[Vec<Ext<C>>]) -> Option<Vec<usize>> {
    let n = cost.len();
    if n == 0 {
        return Some(Vec::new());
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));

    // Column index n is a virtual column; row index n a virtual row.
    let mut u = vec![C::identity(); n + 1];
    let mut v = vec![C::identity(); n + 1];
    let mut matched_row = vec![n; n + 1]; // matched_row[j] = row matched to column j

    for row in 0..n {
        matched_row[n] = row;
        let mut j0 = n;
        let mut min_slack = vec![Ext::<C>::Inf; n + 1];
        let mut prev_col = vec![n; n + 1];
        let mut used = vec![false; n + 1];

        loop {
            used[j0] = true;
            let i0 = matched_row[j0];
            let mut delta = Ext::Inf;
            let mut next_col = n;

            for j in 0..n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0][j].cancel_fin(&u[i0]).cancel_fin(&v[j]);
                if reduced < min_slack[j] {
                    min_slack[j] = reduced;
                    prev_col[j] = j0;
                }
                if min_slack[j] < delta {
                    delta = min_slack[j].clone();
                    next_col = j;
                }
            }

            let delta = match delta {
                // Every unmatched column is unreachable through finite cells.
                Ext::Inf => return None,
                Ext::Fin(d) => d,
            };
            for j in 0..=n {
                if used[j] {
                    u[matched_row[j]] = u[matched_row[j]].combine(&delta);
                    v[j] = v[j].cancel(&delta);
                } else {
                    min_slack[j] = min_slack[j].cancel_fin(&delta);
                }
            }

            j0 = next_col;
            if matched_row[j0] == n {
                break;
            }
        }

        // Augment along the alternating path back to the virtual column.
        loop {
            let j1 = prev_col[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
            if j0 == n {
                break;
            }
        }
    }

    let mut assignment = vec![usize::MAX; n];
    for j in 0..n {
        assignment[matched_row[j]] = j;
    }
    debug_assert!(assignment.iter().all(|&j| j != usize::MAX));
    Some(assignment)
}

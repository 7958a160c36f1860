//! Epsilon-determinants, minors, row/column replacement, and the
//! epsilon-adjoint.
//!
//! Under the identity epsilon-function the epsilon-determinant is the best
//! tropical product over all permutations (the tropical permanent), which
//! is an optimal-assignment value. Two interchangeable algorithms compute
//! it: a reference permutation expansion (the test oracle, capped at
//! [`REFERENCE_CAP`]) and a cubic assignment fast path (the workhorse).
//! Both break value ties by the lexicographically smallest witness
//! permutation, so their results are identical including the witness.

use itertools::Itertools;
use num::bigint::BigInt;

use crate::assignment::{min_cost_assignment, AddCost, Ext, GroupCost, LexCost, MulCost};
use crate::error::{Result, TropError};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::{EpsFunction, TropScalar};

/// Largest dimension accepted by the reference permutation expansion
/// (9! products is the most the oracle should ever grind through).
pub const REFERENCE_CAP: usize = 9;

/// Evenness of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A permutation of `{0, .., n-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(TropError::IndexOutOfRange {
                    op: "permutation",
                    row: j,
                    col: 0,
                    rows: n,
                    cols: n,
                });
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// The image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Parity by inversion count.
    pub fn parity(&self) -> Parity {
        let mut inversions = 0usize;
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The epsilon-determinant value together with a permutation achieving it.
///
/// The witness always satisfies `value = (x)-product of A[i][witness(i)]`;
/// ties are broken by the lexicographically smallest permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetResult {
    pub value: TropScalar,
    pub witness: Permutation,
    pub parity: Parity,
}

fn require_square(a: &TropMatrix, op: &'static str) -> Result<usize> {
    if !a.is_square() {
        return Err(TropError::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.rows())
}

/// Tropical product of the entries selected by a permutation.
fn permutation_product(a: &TropMatrix, images: &[usize]) -> TropScalar {
    let s = a.semiring();
    let mut acc = s.one();
    for (i, &j) in images.iter().enumerate() {
        acc = s.mul(&acc, a.get(i, j));
    }
    acc
}

/// Positive and negative determinants: the tropical sums of permutation
/// products over the even and odd permutations respectively. Reference
/// path only; errors with `SizeExceeded` beyond [`REFERENCE_CAP`].
pub fn pos_neg_det(a: &TropMatrix) -> Result<(TropScalar, TropScalar)> {
    let n = require_square(a, "pos_neg_det")?;
    if n > REFERENCE_CAP {
        return Err(TropError::SizeExceeded {
            n,
            cap: REFERENCE_CAP,
        });
    }
    let s = a.semiring();
    let mut pos = TropScalar::Neutral;
    let mut neg = TropScalar::Neutral;
    for images in (0..n).permutations(n) {
        let product = permutation_product(a, &images);
        let perm = Permutation { images };
        match perm.parity() {
            Parity::Even => pos = s.add(&pos, &product),
            Parity::Odd => neg = s.add(&neg, &product),
        }
    }
    Ok((pos, neg))
}

/// Reference epsilon-determinant: full permutation expansion, capped at
/// [`REFERENCE_CAP`]. The witness is the lexicographically first
/// permutation attaining the optimum.
pub fn det_eps_reference(a: &TropMatrix) -> Result<DetResult> {
    let n = require_square(a, "det_eps_reference")?;
    if n > REFERENCE_CAP {
        return Err(TropError::SizeExceeded {
            n,
            cap: REFERENCE_CAP,
        });
    }
    let s = a.semiring();
    let mut best_value = TropScalar::Neutral;
    let mut best_images: Vec<usize> = (0..n).collect();
    for images in (0..n).permutations(n) {
        let product = permutation_product(a, &images);
        // Replace only on strict improvement: lexicographic enumeration
        // order then yields the lexicographically smallest witness.
        if s.lt(&best_value, &product) {
            best_value = product;
            best_images = images;
        }
    }
    let witness = Permutation {
        images: best_images,
    };
    let parity = witness.parity();
    Ok(DetResult {
        value: best_value,
        witness,
        parity,
    })
}

/// Assignment fast path for the epsilon-determinant: the optimum over all
/// permutations is computed as an exact minimum-cost assignment (costs are
/// group-inverted for the max semirings), with an integer side cost that
/// selects the lexicographically smallest witness among ties.
pub fn det_eps_assignment(a: &TropMatrix) -> Result<DetResult> {
    let n = require_square(a, "det_eps_assignment")?;
    let s = a.semiring();

    // Tie weights j * M^(n-1-i) with M > n+1 make the minimal tie total
    // pick the lexicographically smallest optimal permutation.
    let base = BigInt::from(n + 2);
    let row_weight: Vec<BigInt> = (0..n).map(|i| base.pow((n - 1 - i) as u32)).collect();

    let assignment = if s.is_plus() {
        let cost = cost_grid(a, &row_weight, |r| AddCost(r.clone()), |c| {
            AddCost(-&c.0)
        });
        min_cost_assignment(&cost)
    } else {
        let cost = cost_grid(a, &row_weight, |r| MulCost(r.clone()), |c| {
            MulCost(c.0.recip())
        });
        min_cost_assignment(&cost)
    };

    let witness = match assignment {
        Some(images) => Permutation { images },
        // No permutation avoids the additive identity: the determinant is
        // the additive identity and every permutation witnesses it.
        None => Permutation::identity(n),
    };
    let value = permutation_product(a, witness.images());
    let parity = witness.parity();
    Ok(DetResult {
        value,
        witness,
        parity,
    })
}

fn cost_grid<C: GroupCost>(
    a: &TropMatrix,
    row_weight: &[BigInt],
    wrap: impl Fn(&num::rational::BigRational) -> C,
    invert_for_max: impl Fn(&C) -> C,
) -> Vec<Vec<Ext<LexCost<C>>>> {
    let n = a.rows();
    let maximize = a.semiring().is_max();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match a.get(i, j) {
                    TropScalar::Neutral => Ext::Inf,
                    TropScalar::Finite(r) => {
                        let raw = wrap(r);
                        let primary = if maximize { invert_for_max(&raw) } else { raw };
                        Ext::Fin(LexCost {
                            primary,
                            tie: &row_weight[i] * BigInt::from(j),
                        })
                    }
                })
                .collect()
        })
        .collect()
}

/// The epsilon-determinant. Uses the assignment fast path for all sizes;
/// [`det_eps_reference`] remains available as the independent oracle.
pub fn det_eps(a: &TropMatrix) -> Result<DetResult> {
    det_eps_assignment(a)
}

/// The submatrix `A(i|j)`: `A` with row `i` and column `j` removed.
pub fn minor(a: &TropMatrix, i: usize, j: usize) -> Result<TropMatrix> {
    let n = require_square(a, "minor")?;
    if n < 2 || i >= n || j >= n {
        return Err(TropError::IndexOutOfRange {
            op: "minor",
            row: i,
            col: j,
            rows: n,
            cols: n,
        });
    }
    TropMatrix::from_fn(a.semiring(), n - 1, n - 1, |r, c| {
        let rr = if r < i { r } else { r + 1 };
        let cc = if c < j { c } else { c + 1 };
        a.get(rr, cc).clone()
    })
}

/// `A_r(i => j)`: `A` with row `j` overwritten by row `i`.
pub fn row_replace(a: &TropMatrix, i: usize, j: usize) -> Result<TropMatrix> {
    let n = require_square(a, "row_replace")?;
    if i >= n || j >= n {
        return Err(TropError::IndexOutOfRange {
            op: "row_replace",
            row: i,
            col: j,
            rows: n,
            cols: n,
        });
    }
    TropMatrix::from_fn(a.semiring(), n, n, |r, c| {
        let src = if r == j { i } else { r };
        a.get(src, c).clone()
    })
}

/// `A_c(i => j)`: `A` with column `j` overwritten by column `i`.
pub fn col_replace(a: &TropMatrix, i: usize, j: usize) -> Result<TropMatrix> {
    let n = require_square(a, "col_replace")?;
    if i >= n || j >= n {
        return Err(TropError::IndexOutOfRange {
            op: "col_replace",
            row: i,
            col: j,
            rows: n,
            cols: n,
        });
    }
    TropMatrix::from_fn(a.semiring(), n, n, |r, c| {
        let src = if c == j { i } else { c };
        a.get(r, src).clone()
    })
}

/// `A` with column `j` replaced by the column vector `b` (the Cramer
/// numerator matrix).
pub fn replace_col_with(a: &TropMatrix, j: usize, b: &TropVector) -> Result<TropMatrix> {
    let n = require_square(a, "replace_col_with")?;
    if j >= n {
        return Err(TropError::IndexOutOfRange {
            op: "replace_col_with",
            row: 0,
            col: j,
            rows: n,
            cols: n,
        });
    }
    if !b.is_column() || b.rows() != n {
        return Err(TropError::ShapeMismatch {
            op: "replace_col_with",
            lhs_rows: n,
            lhs_cols: n,
            rhs_rows: b.rows(),
            rhs_cols: b.cols(),
        });
    }
    TropMatrix::from_fn(a.semiring(), n, n, |r, c| {
        if c == j {
            b.get(r, 0).clone()
        } else {
            a.get(r, c).clone()
        }
    })
}

/// The epsilon-adjoint: entry `(i, j)` is `eps^(i+j)` applied to the
/// epsilon-determinant of the minor `A(j|i)` (note the transpose).
pub fn adj_eps(a: &TropMatrix) -> Result<TropMatrix> {
    let n = require_square(a, "adj_eps")?;
    if n < 2 {
        return Err(TropError::IndexOutOfRange {
            op: "adj_eps",
            row: 0,
            col: 0,
            rows: n,
            cols: n,
        });
    }
    let eps = EpsFunction::Identity;
    let mut grid = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let d = det_eps(&minor(a, j, i)?)?.value;
            // 1-based exponent (i+1)+(j+1) from the construction; parity of
            // i+j is the same, and the identity instance ignores it anyway.
            row.push(eps.apply_iterated(i + j, &d));
        }
        grid.push(row);
    }
    TropMatrix::from_rows(a.semiring(), grid)
}

//! Dense rectangular matrices and column vectors over tropical scalars.
//!
//! Matrices are immutable values with row-major storage and a fixed
//! semiring; every operation returns a fresh matrix. Systems in scope are
//! small, so there is no sparse format.

use crate::error::{Result, TropError};
use crate::scalar::{Semiring, TropScalar};

/// A dense `rows x cols` matrix over a fixed semiring. Both dimensions are
/// at least 1 and every entry is a valid element of the semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMatrix {
    semiring: Semiring,
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

/// A column vector: a [`TropMatrix`] with `cols == 1`. The alias documents
/// intent; shape is checked at the operation boundaries.
pub type TropVector = TropMatrix;

impl TropMatrix {
    /// Builds a matrix from row slices. Fails on an empty or ragged grid or
    /// on entries invalid for the semiring.
    pub fn from_rows(semiring: Semiring, rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if m == 0 || n == 0 {
            return Err(TropError::ShapeMismatch {
                op: "from_rows",
                lhs_rows: m,
                lhs_cols: n,
                rhs_rows: 1,
                rhs_cols: 1,
            });
        }
        let mut data = Vec::with_capacity(m * n);
        for row in &rows {
            if row.len() != n {
                return Err(TropError::ShapeMismatch {
                    op: "from_rows",
                    lhs_rows: m,
                    lhs_cols: n,
                    rhs_rows: 1,
                    rhs_cols: row.len(),
                });
            }
            for entry in row {
                semiring.validate(entry)?;
                data.push(entry.clone());
            }
        }
        Ok(TropMatrix {
            semiring,
            rows: m,
            cols: n,
            data,
        })
    }

    /// Builds a matrix by evaluating `f(i, j)` for every position.
    pub fn from_fn(
        semiring: Semiring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> TropScalar,
    ) -> Result<Self> {
        let grid = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        Self::from_rows(semiring, grid)
    }

    /// The all-neutral matrix (additive identity of matrix addition).
    pub fn zeros(semiring: Semiring, rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(semiring, rows, cols, |_, _| TropScalar::Neutral)
    }

    /// The tropical identity: multiplicative identity on the diagonal,
    /// additive identity elsewhere.
    pub fn identity(semiring: Semiring, n: usize) -> Result<Self> {
        Self::from_fn(semiring, n, n, |i, j| {
            if i == j {
                semiring.one()
            } else {
                TropScalar::Neutral
            }
        })
    }

    /// A column vector from its entries.
    pub fn column(semiring: Semiring, entries: Vec<TropScalar>) -> Result<Self> {
        Self::from_rows(semiring, entries.into_iter().map(|e| vec![e]).collect())
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_column(&self) -> bool {
        self.cols == 1
    }

    /// A vector is regular when it contains no additive-identity entries.
    pub fn is_regular(&self) -> bool {
        self.data.iter().all(TropScalar::is_finite)
    }

    /// Entry at `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.data[i * self.cols + j]
    }

    /// Entry `i` of a column vector.
    pub fn entry(&self, i: usize) -> &TropScalar {
        debug_assert!(self.is_column(), "entry() is for column vectors");
        self.get(i, 0)
    }

    /// Row `i` as an owned vector of scalars.
    pub fn row_entries(&self, i: usize) -> Vec<TropScalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Column `j` as an owned vector of scalars.
    pub fn col_entries(&self, j: usize) -> Vec<TropScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Column `j` as a column vector.
    pub fn col_vector(&self, j: usize) -> TropVector {
        TropMatrix::column(self.semiring, self.col_entries(j)).expect("column is nonempty")
    }

    fn check_same_shape(&self, other: &TropMatrix, op: &'static str) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(TropError::SemiringMismatch {
                op,
                lhs: self.semiring,
                rhs: other.semiring,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(TropError::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Entrywise tropical addition.
    pub fn add(&self, other: &TropMatrix) -> Result<TropMatrix> {
        self.check_same_shape(other, "mat_add")?;
        let s = self.semiring;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| s.add(a, b))
            .collect();
        Ok(TropMatrix {
            semiring: s,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Tropical matrix product: `(AB)[i][j] = (+)_k A[i][k] (x) B[k][j]`.
    pub fn mul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.semiring != other.semiring {
            return Err(TropError::SemiringMismatch {
                op: "mat_mul",
                lhs: self.semiring,
                rhs: other.semiring,
            });
        }
        if self.cols != other.rows {
            return Err(TropError::ShapeMismatch {
                op: "mat_mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let s = self.semiring;
        TropMatrix::from_fn(s, self.rows, other.cols, |i, j| {
            let mut acc = TropScalar::Neutral;
            for k in 0..self.cols {
                acc = s.add(&acc, &s.mul(self.get(i, k), other.get(k, j)));
            }
            acc
        })
    }

    /// Entrywise tropical scaling by `lambda`.
    pub fn scalar_mul(&self, lambda: &TropScalar) -> Result<TropMatrix> {
        self.semiring.validate(lambda)?;
        let s = self.semiring;
        let data = self.data.iter().map(|a| s.mul(lambda, a)).collect();
        Ok(TropMatrix {
            semiring: s,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::from_fn(self.semiring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
        .expect("transpose preserves nonemptiness")
    }

    /// Entrywise natural order: true iff every entry of `self` is below the
    /// matching entry of `other`. Matrices can be incomparable both ways.
    pub fn leq(&self, other: &TropMatrix) -> Result<bool> {
        self.check_same_shape(other, "mat_leq")?;
        let s = self.semiring;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| s.leq(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn add_is_entrywise_max() {
        let a = mp(vec![vec![1, 2], vec![3, 4]]);
        let b = mp(vec![vec![4, 1], vec![0, 9]]);
        let expect = mp(vec![vec![4, 2], vec![3, 9]]);
        assert_eq!(a.add(&b).unwrap(), expect);
        // idempotency and additive identity
        assert_eq!(a.add(&a).unwrap(), a);
        let zeros = TropMatrix::zeros(Semiring::MaxPlus, 2, 2).unwrap();
        assert_eq!(a.add(&zeros).unwrap(), a);
    }

    #[test]
    fn mul_matches_hand_computation() {
        let a = mp(vec![vec![1, 2], vec![3, 4]]);
        let b = mp(vec![vec![0, -1], vec![5, 2]]);
        // (AB)[0][0] = max(1+0, 2+5) = 7
        let ab = a.mul(&b).unwrap();
        assert_eq!(*ab.get(0, 0), fin(7));
        assert_eq!(*ab.get(0, 1), fin(4));
        assert_eq!(*ab.get(1, 0), fin(9));
        assert_eq!(*ab.get(1, 1), fin(6));
    }

    #[test]
    fn identity_is_neutral_for_mul() {
        let a = mp(vec![vec![1, 2], vec![3, 4]]);
        let id = TropMatrix::identity(Semiring::MaxPlus, 2).unwrap();
        assert_eq!(id.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&id).unwrap(), a);
    }

    #[test]
    fn one_by_one_product() {
        let a = mp(vec![vec![3]]);
        let b = mp(vec![vec![4]]);
        assert_eq!(*a.mul(&b).unwrap().get(0, 0), fin(7));
    }

    #[test]
    fn scalar_mul_shifts_entries() {
        let a = mp(vec![vec![3, 6, 5], vec![-5, 0, -2], vec![4, 1, 6]]);
        let shifted = a.scalar_mul(&fin(2)).unwrap();
        assert_eq!(*shifted.get(0, 0), fin(5));
        assert_eq!(*shifted.get(2, 2), fin(8));
        assert_eq!(a.scalar_mul(&Semiring::MaxPlus.one()).unwrap(), a);
        let absorbed = a.scalar_mul(&TropScalar::Neutral).unwrap();
        assert_eq!(absorbed, TropMatrix::zeros(Semiring::MaxPlus, 3, 3).unwrap());
    }

    #[test]
    fn transpose_involution_and_shapes() {
        let a = mp(vec![vec![1, 2, 3]]);
        let t = a.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.cols(), 1);
        assert_eq!(t.transpose(), a);
    }

    #[test]
    fn leq_is_entrywise_and_can_be_incomparable() {
        let a = mp(vec![vec![1, 2]]);
        let b = mp(vec![vec![2, 1]]);
        assert!(a.leq(&a).unwrap());
        assert!(!a.leq(&b).unwrap());
        assert!(!b.leq(&a).unwrap());
        let bottom = TropMatrix::zeros(Semiring::MaxPlus, 1, 2).unwrap();
        assert!(bottom.leq(&a).unwrap());
    }

    #[test]
    fn shape_errors_are_reported() {
        let a = mp(vec![vec![1, 2]]);
        let b = mp(vec![vec![1], vec![2]]);
        assert!(matches!(
            a.add(&b),
            Err(TropError::ShapeMismatch { op: "mat_add", .. })
        ));
        assert!(a.mul(&b).is_ok());
        assert!(matches!(
            b.mul(&b),
            Err(TropError::ShapeMismatch { op: "mat_mul", .. })
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![fin(1), fin(2)], vec![fin(3)]];
        assert!(TropMatrix::from_rows(Semiring::MaxPlus, rows).is_err());
    }

    #[test]
    fn semiring_mismatch_rejected() {
        let a = mp(vec![vec![1]]);
        let b = TropMatrix::from_rows(Semiring::MinPlus, vec![vec![fin(1)]]).unwrap();
        assert!(matches!(
            a.add(&b),
            Err(TropError::SemiringMismatch { .. })
        ));
    }
}

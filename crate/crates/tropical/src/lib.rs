//! Exact linear algebra over tropical semirings.
//!
//! The crate implements the max-plus family of semifields (max-plus,
//! min-plus, max-times, min-times) with exact rational scalars, dense
//! matrices, epsilon-determinants with both a reference permutation
//! expansion and an assignment-based fast path, the pseudo-inverse
//! `A^- = det_eps(A)^-1 (x) adj_eps(A)`, solvability conditions on `AA^-`,
//! an extended Cramer's rule, non-square system extensions, row-column
//! order reduction, and an independent residuation oracle.
//!
//! Start with the runnable programs in `examples/`; each one walks through
//! a single capability. The `trop` binary exposes the same functionality on
//! the command line over a plain text matrix format.
//!
//! ```
//! use tropical::{Semiring, TropMatrix, TropScalar};
//!
//! let s = Semiring::MaxPlus;
//! let a = TropMatrix::from_rows(
//!     s,
//!     vec![
//!         vec![TropScalar::integer(5), TropScalar::integer(2)],
//!         vec![TropScalar::integer(4), TropScalar::integer(1)],
//!     ],
//! )
//! .unwrap();
//! let det = tropical::det_eps(&a).unwrap();
//! assert_eq!(det.value, TropScalar::integer(6)); // max(5+1, 2+4)
//! ```

mod assignment;
pub mod cli;
pub mod det;
pub mod error;
pub mod io;
pub mod matrix;
pub mod reduce;
pub mod scalar;
pub mod solve;

pub use det::{
    adj_eps, col_replace, det_eps, det_eps_assignment, det_eps_reference, minor, pos_neg_det,
    replace_col_with, row_replace, DetResult, Parity, Permutation, REFERENCE_CAP,
};
pub use error::{Result, TropError};
pub use matrix::{TropMatrix, TropVector};
pub use reduce::{
    column_reduce, is_combination, lift_solution, reduce_system, reduce_system_ordered,
    row_reduce, ReduceOrder, ReducedSystem,
};
pub use scalar::{EpsFunction, Semiring, TropScalar};
pub use solve::{
    cramer_solve, dual_gram, gram, gram_via_replacement, is_eigenpair, preprocess_regular,
    principal_solution, pseudo_inverse, solvability_conditions, solve_square, solve_system,
    solve_tall, solve_wide, Maximality, PreprocessedSystem, SolveOptions, SolveReport,
    SolveStatus, Violation,
};

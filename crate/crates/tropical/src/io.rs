//! Text format for scalars, matrices, and systems.
//!
//! A system file holds one matrix row per line with whitespace-separated
//! entries, then a single blank line, then the right-hand side as one line.
//! The right-hand side is optional. Scalars use the syntax of
//! [`Semiring::parse_scalar`]: integers, rationals like `7/2`, decimals
//! like `2.5` (kept exact), and the semiring's infinity token.

use crate::error::{Result, TropError};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::{Semiring, TropScalar};

/// Parses one line of whitespace-separated scalars, reporting the exact
/// line/column of the first bad token.
fn parse_line(line: &str, line_no: usize, semiring: Semiring) -> Result<Vec<TropScalar>> {
    let mut out = Vec::new();
    let mut token_start = None;
    let flush = |start: Option<usize>, end: usize, out: &mut Vec<TropScalar>| -> Result<()> {
        if let Some(start) = start {
            let token = &line[start..end];
            let value = semiring.parse_scalar(token).map_err(|message| {
                TropError::Parse {
                    line: line_no,
                    column: start + 1,
                    message,
                }
            })?;
            out.push(value);
        }
        Ok(())
    };
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            flush(token_start.take(), idx, &mut out)?;
        } else if token_start.is_none() {
            token_start = Some(idx);
        }
    }
    flush(token_start.take(), line.len(), &mut out)?;
    Ok(out)
}

/// Parses a bare matrix: consecutive non-blank lines of scalars.
pub fn parse_matrix(text: &str, semiring: Semiring) -> Result<TropMatrix> {
    let (matrix, rhs) = parse_system(text, semiring)?;
    if rhs.is_some() {
        return Err(TropError::Parse {
            line: 1,
            column: 1,
            message: "expected a bare matrix, found a right-hand side section".into(),
        });
    }
    Ok(matrix)
}

/// Parses a system file into the coefficient matrix and the optional
/// right-hand side (returned as a column vector).
pub fn parse_system(text: &str, semiring: Semiring) -> Result<(TropMatrix, Option<TropVector>)> {
    let mut rows: Vec<Vec<TropScalar>> = Vec::new();
    let mut rhs: Option<(usize, Vec<TropScalar>)> = None;
    let mut seen_separator = false;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            if !rows.is_empty() {
                seen_separator = true;
            }
            continue;
        }
        if rhs.is_some() {
            return Err(TropError::Parse {
                line: line_no,
                column: 1,
                message: "unexpected content after the right-hand side line".into(),
            });
        }
        let entries = parse_line(line, line_no, semiring)?;
        if seen_separator {
            rhs = Some((line_no, entries));
        } else {
            if let Some(first) = rows.first() {
                if entries.len() != first.len() {
                    return Err(TropError::Parse {
                        line: line_no,
                        column: 1,
                        message: format!(
                            "ragged row: {} entries, expected {}",
                            entries.len(),
                            first.len()
                        ),
                    });
                }
            }
            rows.push(entries);
        }
    }

    if rows.is_empty() {
        return Err(TropError::Parse {
            line: 1,
            column: 1,
            message: "empty input: expected at least one matrix row".into(),
        });
    }
    let matrix = TropMatrix::from_rows(semiring, rows)?;
    let rhs = match rhs {
        None => None,
        Some((_line_no, entries)) => Some(TropMatrix::column(semiring, entries)?),
    };
    Ok((matrix, rhs))
}

/// One line per row, entries space-separated, scalars exact.
pub fn format_matrix(a: &TropMatrix) -> String {
    let s = a.semiring();
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| s.format_scalar(a.get(i, j)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// A column vector on a single line.
pub fn format_vector(v: &TropVector) -> String {
    let s = v.semiring();
    (0..v.rows())
        .map(|i| s.format_scalar(v.get(i, 0)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A full system file: matrix, blank line, right-hand side.
pub fn format_system(a: &TropMatrix, b: &TropVector) -> String {
    format!("{}\n\n{}\n", format_matrix(a), format_vector(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_matrix_and_rhs() {
        let text = "1 -6 2 -5\n4 5 1 -2\n7 -1 3 0\n-2 -9 -5 0\n\n2 7 3 -4\n";
        let (a, b) = parse_system(text, Semiring::MaxPlus).unwrap();
        assert_eq!(a.rows(), 4);
        assert_eq!(a.cols(), 4);
        let b = b.unwrap();
        assert_eq!(b.rows(), 4);
        assert_eq!(*b.get(0, 0), TropScalar::integer(2));
        assert_eq!(*b.get(3, 0), TropScalar::integer(-4));
    }

    #[test]
    fn single_token_is_a_1x1_matrix() {
        let (a, b) = parse_system("0", Semiring::MaxPlus).unwrap();
        assert_eq!((a.rows(), a.cols()), (1, 1));
        assert_eq!(*a.get(0, 0), Semiring::MaxPlus.one());
        assert!(b.is_none());
    }

    #[test]
    fn infinity_token_is_neutral() {
        let (a, _) = parse_system("-inf 3", Semiring::MaxPlus).unwrap();
        assert!(a.get(0, 0).is_neutral());
    }

    #[test]
    fn trailing_blank_lines_do_not_create_rhs() {
        let (_, b) = parse_system("1 2\n3 4\n\n\n", Semiring::MaxPlus).unwrap();
        assert!(b.is_none());
    }

    #[test]
    fn ragged_rows_are_rejected_with_location() {
        let err = parse_system("1 2\n3\n", Semiring::MaxPlus).unwrap_err();
        match err {
            TropError::Parse { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("ragged"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bad_token_reports_line_and_column() {
        let err = parse_system("1 2\n3 4x\n", Semiring::MaxPlus).unwrap_err();
        match err {
            TropError::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn value_errors_are_semiring_specific() {
        assert!(parse_system("-1 2", Semiring::MaxTimes).is_err());
        assert!(parse_system("-1 2", Semiring::MaxPlus).is_ok());
    }

    #[test]
    fn extra_section_is_rejected() {
        let err = parse_system("1\n\n2\n\n3\n", Semiring::MaxPlus).unwrap_err();
        assert!(matches!(err, TropError::Parse { line: 5, .. }));
    }

    #[test]
    fn round_trip_preserves_exact_scalars() {
        let text = "1/3 -7/2 2.5\n-inf 0 4\n\n1 2/7 -3\n";
        let (a, b) = parse_system(text, Semiring::MaxPlus).unwrap();
        let printed = format_system(&a, &b.clone().unwrap());
        let (a2, b2) = parse_system(&printed, Semiring::MaxPlus).unwrap();
        assert_eq!(a, a2);
        assert_eq!(b, b2);
        // 2.5 is normalized to its exact rational form on output
        assert!(printed.contains("5/2"));
    }
}

//! Scalars of a tropical semifield and the four semiring instances.
//!
//! A scalar is either the additive identity (`Neutral`, e.g. -inf in
//! max-plus) or a finite exact rational. All arithmetic is exact; there is
//! no floating point anywhere in the crate.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Result, TropError};

/// An element of the tropical semifield: the additive identity or a finite
/// exact rational.
///
/// The additive identity is a distinguished variant rather than a sentinel
/// number, so absorption (`neutral (x) x = neutral`) holds structurally and
/// no `-inf + inf` style trap can arise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    /// The additive identity of the semiring (-inf for max-plus, +inf for
    /// min-plus/min-times, 0 for max-times).
    Neutral,
    /// A finite value, kept as an exact rational.
    Finite(BigRational),
}

impl TropScalar {
    pub fn neutral() -> Self {
        TropScalar::Neutral
    }

    pub fn integer(n: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational `numer / denom`. Panics if `denom` is zero.
    pub fn rational(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        TropScalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(r: BigRational) -> Self {
        TropScalar::Finite(r)
    }

    pub fn is_neutral(&self) -> bool {
        matches!(self, TropScalar::Neutral)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Neutral => None,
            TropScalar::Finite(r) => Some(r),
        }
    }
}

/// One of the four tropical semiring instances.
///
/// Each instance fixes the addition, multiplication, identities, natural
/// order (`a <= b` iff `a (+) b = b`), and multiplicative inverses used by
/// every operation in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// (R u {-inf}, max, +, -inf, 0)
    MaxPlus,
    /// (R u {+inf}, min, +, +inf, 0)
    MinPlus,
    /// (R>=0, max, *, 0, 1); finite payloads are strictly positive
    MaxTimes,
    /// (R>0 u {+inf}, min, *, +inf, 1); finite payloads are strictly positive
    MinTimes,
}

impl Semiring {
    pub const ALL: [Semiring; 4] = [
        Semiring::MaxPlus,
        Semiring::MinPlus,
        Semiring::MaxTimes,
        Semiring::MinTimes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Semiring::MaxPlus => "max-plus",
            Semiring::MinPlus => "min-plus",
            Semiring::MaxTimes => "max-times",
            Semiring::MinTimes => "min-times",
        }
    }

    pub(crate) fn is_max(&self) -> bool {
        matches!(self, Semiring::MaxPlus | Semiring::MaxTimes)
    }

    pub(crate) fn is_plus(&self) -> bool {
        matches!(self, Semiring::MaxPlus | Semiring::MinPlus)
    }

    /// The additive identity (absorbing for multiplication).
    pub fn zero(&self) -> TropScalar {
        TropScalar::Neutral
    }

    /// The multiplicative identity: real 0 for the plus semirings, 1 for the
    /// times semirings.
    pub fn one(&self) -> TropScalar {
        if self.is_plus() {
            TropScalar::Finite(BigRational::zero())
        } else {
            TropScalar::Finite(BigRational::one())
        }
    }

    /// Tropical addition: max or min of the operands; the neutral element is
    /// the identity.
    pub fn add(&self, a: &TropScalar, b: &TropScalar) -> TropScalar {
        match (a, b) {
            (TropScalar::Neutral, x) | (x, TropScalar::Neutral) => x.clone(),
            (TropScalar::Finite(x), TropScalar::Finite(y)) => {
                let pick_x = if self.is_max() { x >= y } else { x <= y };
                TropScalar::Finite(if pick_x { x.clone() } else { y.clone() })
            }
        }
    }

    /// Tropical multiplication: real addition for the plus semirings, real
    /// multiplication for the times semirings. The neutral element absorbs.
    pub fn mul(&self, a: &TropScalar, b: &TropScalar) -> TropScalar {
        match (a, b) {
            (TropScalar::Neutral, _) | (_, TropScalar::Neutral) => TropScalar::Neutral,
            (TropScalar::Finite(x), TropScalar::Finite(y)) => {
                if self.is_plus() {
                    TropScalar::Finite(x + y)
                } else {
                    TropScalar::Finite(x * y)
                }
            }
        }
    }

    /// Multiplicative inverse of a finite scalar: negation in the plus
    /// semirings, reciprocal in the times semirings.
    pub fn inv(&self, a: &TropScalar) -> Result<TropScalar> {
        match a {
            TropScalar::Neutral => Err(TropError::NotAUnit(self.format_scalar(a))),
            TropScalar::Finite(r) => Ok(TropScalar::Finite(if self.is_plus() {
                -r
            } else {
                r.recip()
            })),
        }
    }

    /// Natural order of the semiring: `a <= b` iff `a (+) b = b`. Total, with
    /// the additive identity as the minimum. Note that for the min semirings
    /// this reverses the numeric order.
    pub fn leq(&self, a: &TropScalar, b: &TropScalar) -> bool {
        self.add(a, b) == *b
    }

    /// Strict natural order.
    pub fn lt(&self, a: &TropScalar, b: &TropScalar) -> bool {
        a != b && self.leq(a, b)
    }

    /// Greatest lower bound in the natural order (its minimum, since the
    /// order is total). Dual of `add`.
    pub fn meet(&self, a: &TropScalar, b: &TropScalar) -> TropScalar {
        if self.leq(a, b) {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// n-fold tropical product of `a` with itself; `pow(a, 0)` is the
    /// multiplicative identity.
    pub fn pow(&self, a: &TropScalar, n: usize) -> TropScalar {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Checks that the scalar is an element of this semiring: times-semiring
    /// payloads must be strictly positive.
    pub fn validate(&self, a: &TropScalar) -> Result<()> {
        match a {
            TropScalar::Neutral => Ok(()),
            TropScalar::Finite(r) => {
                if !self.is_plus() && !r.is_positive() {
                    Err(TropError::InvalidScalar {
                        semiring: *self,
                        value: r.to_string(),
                    })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Token denoting the additive identity in text input and output.
    pub fn neutral_token(&self) -> &'static str {
        match self {
            Semiring::MaxPlus => "-inf",
            Semiring::MinPlus | Semiring::MinTimes => "inf",
            Semiring::MaxTimes => "0",
        }
    }

    /// Parses one scalar token: an integer `-3`, a rational `7/2`, a decimal
    /// `2.5` (converted to an exact rational), or the semiring's neutral
    /// token. Under max-times the numeric value 0 is the additive identity.
    pub fn parse_scalar(&self, token: &str) -> std::result::Result<TropScalar, String> {
        match token {
            "-inf" | "inf" => {
                return if token == self.neutral_token() {
                    Ok(TropScalar::Neutral)
                } else {
                    Err(format!(
                        "token `{token}` is not an element of {self}; its additive identity is `{}`",
                        self.neutral_token()
                    ))
                };
            }
            _ => {}
        }
        let r = parse_rational(token)?;
        if *self == Semiring::MaxTimes && r.is_zero() {
            return Ok(TropScalar::Neutral);
        }
        let value = TropScalar::Finite(r);
        self.validate(&value)
            .map_err(|_| format!("`{token}` is not an element of {self} (must be positive)"))?;
        Ok(value)
    }

    /// Formats a scalar exactly: integers without a denominator, other
    /// rationals as `p/q`, the additive identity as its token. Output
    /// re-parses to the identical scalar.
    pub fn format_scalar(&self, a: &TropScalar) -> String {
        match a {
            TropScalar::Neutral => self.neutral_token().to_string(),
            TropScalar::Finite(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semiring {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "max-plus" => Ok(Semiring::MaxPlus),
            "min-plus" => Ok(Semiring::MinPlus),
            "max-times" => Ok(Semiring::MaxTimes),
            "min-times" => Ok(Semiring::MinTimes),
            other => Err(format!(
                "unknown semiring `{other}` (expected max-plus, min-plus, max-times, or min-times)"
            )),
        }
    }
}

/// Parses `-3`, `7/2`, or `2.5` into an exact rational.
fn parse_rational(token: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("invalid scalar token `{token}`");
    if token.is_empty() {
        return Err(bad());
    }
    if let Some((numer, denom)) = token.split_once('/') {
        let n: BigInt = numer.parse().map_err(|_| bad())?;
        let d: BigInt = denom.parse().map_err(|_| bad())?;
        if d.is_zero() || denom.starts_with(['+', '-']) {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let whole: BigInt = digits.parse().map_err(|_| bad())?;
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        return Ok(BigRational::new(
            BigInt::from(sign) * (whole * &scale + frac),
            scale,
        ));
    }
    let n: BigInt = token.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// An involutive bijection emulating negation on the semiring. Only the
/// identity instance exists here; the hook keeps the `eps^(i+j)` factor
/// explicit in the adjoint construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsFunction {
    #[default]
    Identity,
}

impl EpsFunction {
    pub fn apply(&self, a: &TropScalar) -> TropScalar {
        match self {
            EpsFunction::Identity => a.clone(),
        }
    }

    /// `eps^(k)`: the k-fold iterate (identity for even k, `eps` for odd).
    pub fn apply_iterated(&self, k: usize, a: &TropScalar) -> TropScalar {
        if k.is_multiple_of(2) {
            a.clone()
        } else {
            self.apply(a)
        }
    }
}

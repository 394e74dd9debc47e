//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator, so equality is structural and `Display` prints the
//! canonical `p/q` (or just `p` when the denominator is one). That canonical
//! form is also what the serializers in this crate emit.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use num_rational::BigRational as Rational;

/// The rational `n / d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with optional leading sign, in base ten.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let parse_int = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("invalid integer {part:?}: {e}"))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
    }
}

/// The nonnegative square root of `r`, when `r` is a perfect square in the
/// rationals; `None` otherwise (including all negative inputs).
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &num_root * &num_root == *r.numer() && &den_root * &den_root == *r.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

/// Serialize a rational as its canonical decimal-fraction string, e.g.
/// `"-5/4"` or `"3"`. Keeping rationals as strings in JSON avoids any
/// ambiguity about float rounding.
pub mod serde_str {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }
}

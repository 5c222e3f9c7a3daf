//! Exact rational scalars.
//!
//! Every coefficient in the library is a `Scalar`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere; equality of structure tensors is exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number over arbitrary-precision integers.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact fraction `n/d`. Panics on `d == 0` (callers validate first).
pub fn frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses an exact rational from `"p"` or `"p/q"` with optional sign.
///
/// Rejects zero denominators and any non-integer syntax; this is the scalar
/// syntax of the structure-file format.
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("malformed rational {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = den_str.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical rendering: `p/q` with `q > 0` in lowest terms, `q` omitted when 1.
pub fn render_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `true` when `x` is a negative number (used only for display decisions).
pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

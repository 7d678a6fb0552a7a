//! Exact rational scalars and their string form.
//!
//! Scalars are arbitrary-precision rationals, always in lowest terms with a
//! positive denominator (this is the normal form `num_rational` maintains).
//! The wire format is the string `"p/q"`, or just `"p"` when the
//! denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// The scalar field of the whole crate: exact rational numbers.
pub type Q = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a scalar as `"p/q"` (or `"p"` when the denominator is 1).
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `"p/q"` wire format. `location` names the offending field in
/// error messages.
pub fn parse_q(s: &str, location: &str) -> Result<Q> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse::<BigInt>().map_err(|e| Error::Parse {
            location: location.to_string(),
            message: format!("bad integer {t:?}: {e}"),
        })
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse {
                    location: location.to_string(),
                    message: "zero denominator".to_string(),
                });
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Sign as -1, 0, 1.
pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for (n, d) in [(1, 2), (-3, 4), (7, 1), (0, 5)] {
            let x = qr(n, d);
            let s = format_q(&x);
            assert_eq!(parse_q(&s, "t").unwrap(), x);
        }
        assert_eq!(format_q(&qr(2, 4)), "1/2");
        assert_eq!(format_q(&qr(-2, -4)), "1/2");
        assert_eq!(format_q(&q(5)), "5");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_q("1/0", "t").is_err());
        assert!(parse_q("x", "t").is_err());
    }
}

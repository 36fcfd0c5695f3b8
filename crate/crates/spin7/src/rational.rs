//! Exact rational scalars.
//!
//! Every number in this crate is a reduced fraction of arbitrary-precision
//! integers; there is no floating point anywhere. We use [`num::BigRational`],
//! which maintains exactly the invariants we need: fractions are always stored
//! reduced, the denominator is positive, and zero is `0/1`.

pub use num::BigInt;
pub use num::BigRational as Rational;

use num::traits::{One, Zero};

/// The exact rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer `p`, reduced, denominator positive.
///
/// Returns `None` on malformed input or a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
///
/// This is the canonical text form used by every file format and report in
/// the crate; it matches `Rational`'s `Display` and is kept as a named
/// function so call sites document intent.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Shared zero.
pub fn zero() -> Rational {
    Rational::zero()
}

/// Shared one.
pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_reduce() {
        assert_eq!(rat(6, -4), rat(-3, 2));
        assert_eq!(rat(0, 7), int(0));
        assert_eq!(rat(49, 18) * int(6) - rat(1, 12) * int(42), rat(77, 6));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["-7/6", "0", "36", "24/7", "-1/7", "49/18"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("a/b").is_none());
    }
}

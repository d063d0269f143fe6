//! Arbitrary-precision scalars. Integers are unbounded; rationals are kept
//! in lowest terms with a positive denominator by construction, so equality
//! and ordering agree with the underlying arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Integer from a machine word.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Reduced rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Rational with denominator 1.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// Parse "p/q" or "p" into a reduced rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Render a rational as `p` when integral and `p/q` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r >= 0`.
pub fn rat_is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_then_sub_roundtrips() {
        let a = rat(7, 3);
        let b = rat(-22, 5);
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(rat_to_string(&r), "-3/2");
        assert_eq!(rat_to_string(&rat(8, 4)), "2");
    }

    #[test]
    fn cross_multiplication_equality() {
        // a/b = c/d iff ad = cb
        let a = rat(10, 15);
        let b = rat(2, 3);
        assert_eq!(a, b);
        assert_eq!(a.numer() * b.denom(), b.numer() * a.denom());
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rat("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rat("-5"), Some(rat_int(-5)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }
}

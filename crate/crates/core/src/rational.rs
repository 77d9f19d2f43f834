//! Thin helpers over `num_rational::BigRational`, the coefficient field used
//! everywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (enforced by `BigRational` itself).
pub type Rat = BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `1/2^k` as a rational, for widths and thresholds.
pub fn pow2_inv(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

/// Canonical string form `numerator/denominator`, denominator always written
/// even when it is 1. This is the wire format for every rational in the JSON
/// documents.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"n/d"` (or a bare integer `"n"`); reduces to lowest terms and
/// normalizes the sign into the numerator.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num)
        .map_err(|_| Error::Malformed(format!("bad rational numerator: {s:?}")))?;
    let d = BigInt::from_str(den)
        .map_err(|_| Error::Malformed(format!("bad rational denominator: {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Malformed(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// The rational with smallest denominator in the open interval `(lo, hi)`
/// (ties on denominator broken toward smaller numerator magnitude), found by
/// walking the Stern-Brocot tree. Used to snap isolating intervals onto
/// exact rational roots.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Option<Rat> {
    if lo >= hi {
        return None;
    }
    // An integer inside the interval is always simplest.
    let fl = lo.floor();
    let candidate = &fl + Rat::one();
    if &candidate > lo && &candidate < hi {
        return Some(candidate);
    }
    if lo.is_negative() && hi.is_positive() {
        return Some(Rat::zero());
    }
    if hi.is_negative() {
        return simplest_between(&-hi.clone(), &-lo.clone()).map(|r| -r);
    }
    // 0 <= lo < hi and no integer strictly inside: recurse on the
    // fractional parts (continued-fraction step).
    let a = lo.floor();
    let lo_frac = lo - &a;
    let hi_frac = hi - &a;
    if lo_frac.is_zero() {
        // lo is an integer; simplest is a little above it: 1/(floor(1/hi') + 1).
        let inv = hi_frac.recip();
        let d = inv.floor() + Rat::one();
        return Some(&a + d.recip());
    }
    simplest_between(&hi_frac.recip(), &lo_frac.recip()).map(|r| &a + r.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let r = parse_rat("-6/4").unwrap();
        assert_eq!(r, rat(-3, 2));
        assert_eq!(format_rat(&r), "-3/2");
        assert_eq!(parse_rat("5").unwrap(), int(5));
        assert_eq!(format_rat(&int(5)), "5/1");
        // sign normalizes into the numerator
        assert_eq!(parse_rat("3/-6").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn simplest_rational_in_interval() {
        // 2/3 is the simplest rational in (0.6, 0.7)
        let s = simplest_between(&rat(3, 5), &rat(7, 10)).unwrap();
        assert_eq!(s, rat(2, 3));
        // integer inside wins
        let s = simplest_between(&rat(5, 2), &rat(7, 2)).unwrap();
        assert_eq!(s, int(3));
        // straddling zero
        let s = simplest_between(&rat(-1, 3), &rat(1, 7)).unwrap();
        assert_eq!(s, int(0));
        // negative interval mirrors
        let s = simplest_between(&rat(-7, 10), &rat(-3, 5)).unwrap();
        assert_eq!(s, rat(-2, 3));
        // empty interval
        assert!(simplest_between(&int(1), &int(1)).is_none());
    }

    #[test]
    fn simplest_is_inside_and_simple() {
        let lo = rat(355, 1130);
        let hi = rat(355, 1120);
        let s = simplest_between(&lo, &hi).unwrap();
        assert!(s > lo && s < hi);
        // no rational with a smaller denominator lies inside
        let d: i64 = 10;
        for den in 1..=d {
            for num in -(2 * den)..=(2 * den) {
                let c = rat(num, den);
                if c > lo && c < hi {
                    assert!(s.denom() <= c.denom());
                }
            }
        }
    }
}

//! Exact rational scalars and the projective line over Q.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = BigRational;

/// Builds a rational from machine integers. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(Int::from(num), Int::from(den))
}

/// Builds a rational from a machine integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// A point of P^1(Q): a finite rational value or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjRat {
    Finite(Rat),
    Inf,
}

impl ProjRat {
    pub fn finite(r: Rat) -> Self {
        ProjRat::Finite(r)
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, ProjRat::Inf)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ProjRat::Finite(r) => Some(r),
            ProjRat::Inf => None,
        }
    }
}

impl From<Rat> for ProjRat {
    fn from(r: Rat) -> Self {
        ProjRat::Finite(r)
    }
}

impl fmt::Display for ProjRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjRat::Finite(r) => write!(f, "{}", format_rat(r)),
            ProjRat::Inf => write!(f, "inf"),
        }
    }
}

/// Formats a rational as `p/q`, or plain `p` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Error raised when a rational or projective value fails to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses `p/q` or `p`; rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    let bad = || ParseRatError(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p = Int::from_str(p.trim()).map_err(|_| bad())?;
            let q = Int::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p = Int::from_str(s).map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Parses `inf` or a rational.
pub fn parse_proj(s: &str) -> Result<ProjRat, ParseRatError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") || t == "∞" {
        Ok(ProjRat::Inf)
    } else {
        parse_rat(t).map(ProjRat::Finite)
    }
}

/// `base^exp` for rational base and machine exponent (exp >= 0).
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// Sign-aware absolute value helper for integers.
pub fn int_abs(n: &Int) -> Int {
    n.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-3/4", "0", "17", "-5/9"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("3/-4").unwrap(), rat(-3, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_proj("inf").unwrap(), ProjRat::Inf);
        assert_eq!(parse_proj("-1/3").unwrap(), ProjRat::Finite(rat(-1, 3)));
    }

    #[test]
    fn pow() {
        assert_eq!(rat_pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(rat_pow(&rat(5, 1), 0), int(1));
    }
}

//! Reduced rational functions as self-maps of P^1.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::error::QalgError;
use super::poly::{poly_gcd, UniPoly};
use super::rat::{Int, ProjRat, Rat};

/// Ratio of coprime integer-coefficient polynomials with collective content 1
/// and positive leading coefficient of the denominator. Equality of canonical
/// forms is exact equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: UniPoly,
    den: UniPoly,
}

impl RatFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, QalgError> {
        if den.is_zero() {
            return Err(QalgError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFn {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        // joint integer scaling: clear denominators, strip collective content
        let mut den_lcm = Int::one();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let scale = Rat::from_integer(den_lcm);
        num = num.scale(&scale);
        den = den.scale(&scale);
        let mut content = Int::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            content = content.gcd(c.numer());
        }
        let inv = Rat::new(Int::one(), content);
        num = num.scale(&inv);
        den = den.scale(&inv);
        if den.lc().is_negative() {
            num = num.scale(&-Rat::one());
            den = den.scale(&-Rat::one());
        }
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFn::new(p, UniPoly::one()).expect("unit denominator")
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.deg().unwrap_or(0) == 0 && self.den.deg().unwrap_or(0) == 0
    }

    /// Value at infinity by degree comparison.
    pub fn value_at_inf(&self) -> ProjRat {
        let dn = self.num.deg();
        let dd = self.den.deg();
        if self.num.is_zero() {
            return ProjRat::Finite(Rat::zero());
        }
        match (dn.unwrap(), dd.unwrap()) {
            (a, b) if a > b => ProjRat::Inf,
            (a, b) if a < b => ProjRat::Finite(Rat::zero()),
            _ => ProjRat::Finite(self.num.lc() / self.den.lc()),
        }
    }
}

/// Evaluates r at a point of P^1. In canonical form num and den never vanish
/// simultaneously, so the value is well defined everywhere.
pub fn ratfn_eval(r: &RatFn, a: &ProjRat) -> ProjRat {
    match a {
        ProjRat::Finite(v) => {
            let d = r.den.eval(v);
            if d.is_zero() {
                ProjRat::Inf
            } else {
                ProjRat::Finite(r.num.eval(v) / d)
            }
        }
        ProjRat::Inf => r.value_at_inf(),
    }
}

/// Degree of r as a covering of P^1: max(deg num, deg den).
pub fn ratfn_degree(r: &RatFn) -> Result<usize, QalgError> {
    if r.is_constant() {
        return Err(QalgError::DegenerateInput("degree of a constant map"));
    }
    Ok(r.num.deg().unwrap_or(0).max(r.den.deg().unwrap_or(0)))
}

/// Composition with the Moebius map x -> (a x + b) / (c x + d), ad - bc != 0.
pub fn compose_mobius(r: &RatFn, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> RatFn {
    assert!(!(a * d - b * c).is_zero(), "singular Moebius substitution");
    let deg = r.num.deg().unwrap_or(0).max(r.den.deg().unwrap_or(0));
    let hom = |p: &UniPoly| -> UniPoly {
        // p homogenized to degree `deg`, evaluated at (a x + b, c x + d)
        let mut acc = UniPoly::zero();
        let top = UniPoly::new(vec![b.clone(), a.clone()]);
        let bot = UniPoly::new(vec![d.clone(), c.clone()]);
        for i in 0..=deg {
            let coef = p.coeff(i);
            if coef.is_zero() {
                continue;
            }
            let term = &top.pow(i) * &bot.pow(deg - i);
            acc = &acc + &term.scale(&coef);
        }
        acc
    };
    RatFn::new(hom(&r.num), hom(&r.den)).expect("composition keeps denominator nonzero")
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Solutions in P^1(Q) of r(a) = v, exact, including infinity.
///
/// Infinity is a solution exactly when `num - v den` (or `den` for v = inf)
/// drops below the covering degree.
pub fn level_set(r: &RatFn, v: &ProjRat) -> Result<std::collections::BTreeSet<ProjRat>, QalgError> {
    if r.is_constant() {
        return Err(QalgError::DegenerateInput("level set of a constant map"));
    }
    let deg = ratfn_degree(r)?;
    let mut out = std::collections::BTreeSet::new();
    let p = match v {
        ProjRat::Finite(val) => &r.num - &r.den.scale(val),
        ProjRat::Inf => r.den.clone(),
    };
    // p is never identically zero: num and den are coprime and r nonconstant.
    for root in super::roots::rational_roots(&p)? {
        out.insert(ProjRat::Finite(root));
    }
    if p.deg().unwrap_or(0) < deg {
        out.insert(ProjRat::Inf);
    }
    debug_assert!(out.iter().all(|a| ratfn_eval(r, a) == *v));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rat::{int, rat};

    #[test]
    fn canonical_form() {
        // (2x^2 - 2) / (4x - 4) -> (x + 1) / 2
        let r = RatFn::new(UniPoly::from_i64(&[-2, 0, 2]), UniPoly::from_i64(&[-4, 4])).unwrap();
        assert_eq!(r.num(), &UniPoly::from_i64(&[1, 1]));
        assert_eq!(r.den(), &UniPoly::from_i64(&[2]));
        // canonicalization is idempotent
        let r2 = RatFn::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, r2);
        // negative denominator leading coefficient flips
        let r3 = RatFn::new(UniPoly::from_i64(&[1]), UniPoly::from_i64(&[-2, -1])).unwrap();
        assert_eq!(r3.den(), &UniPoly::from_i64(&[2, 1]));
        assert_eq!(r3.num(), &UniPoly::from_i64(&[-1]));
    }

    #[test]
    fn eval_cases() {
        // (x^2 + 1) / x
        let r = RatFn::new(UniPoly::from_i64(&[1, 0, 1]), UniPoly::from_i64(&[0, 1])).unwrap();
        assert_eq!(ratfn_eval(&r, &ProjRat::Finite(int(2))), ProjRat::Finite(rat(5, 2)));
        assert_eq!(ratfn_eval(&r, &ProjRat::Finite(int(0))), ProjRat::Inf);
        assert_eq!(ratfn_eval(&r, &ProjRat::Inf), ProjRat::Inf);
        assert_eq!(ratfn_degree(&r).unwrap(), 2);
        // root of num evaluates to 0
        let s = RatFn::new(UniPoly::from_i64(&[-1, 1]), UniPoly::from_i64(&[3, 1])).unwrap();
        assert_eq!(ratfn_eval(&s, &ProjRat::Finite(int(1))), ProjRat::Finite(int(0)));
        assert!(ratfn_degree(&RatFn::from_poly(UniPoly::one())).is_err());
    }

    #[test]
    fn mobius_composition() {
        // r(x) = x^2, m(x) = 1/x => r(m(x)) = 1/x^2
        let r = RatFn::new(UniPoly::from_i64(&[0, 0, 1]), UniPoly::one()).unwrap();
        let m = compose_mobius(&r, &int(0), &int(1), &int(1), &int(0));
        assert_eq!(m.num(), &UniPoly::from_i64(&[1]));
        assert_eq!(m.den(), &UniPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn level_sets() {
        // r(x) = x^2/(x-1); r(a) = 4 -> a^2 - 4a + 4 = 0 -> a = 2 (double)
        let r = RatFn::new(UniPoly::from_i64(&[0, 0, 1]), UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(
            level_set(&r, &ProjRat::Finite(int(4))).unwrap(),
            [ProjRat::Finite(int(2))].into()
        );
        // poles: a = 1 and a = inf (deg num > deg den)
        assert_eq!(
            level_set(&r, &ProjRat::Inf).unwrap(),
            [ProjRat::Finite(int(1)), ProjRat::Inf].into()
        );
        // value at infinity is a level-set member via degree drop
        let s = RatFn::new(UniPoly::from_i64(&[0, 1]), UniPoly::from_i64(&[1, 1])).unwrap();
        assert_eq!(
            level_set(&s, &ProjRat::Finite(int(1))).unwrap(),
            [ProjRat::Inf].into()
        );
    }
}

//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::error::QalgError;
use super::rat::{Int, ProjRat, Rat};

/// Dense polynomial, coefficients lowest degree first, trailing entry nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut v = vec![Rat::zero(); degree + 1];
        v[degree] = c;
        UniPoly::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = UniPoly::one();
        for r in roots {
            p = &p * &UniPoly::new(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Rat::one() / self.lc().clone();
        self.scale(&inv)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.deg().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        let lc = div.lc().clone();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            quo[i - dd] = q.clone();
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = dc * &q;
                rem[i - dd + j] -= t;
            }
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Substitutes x -> alpha*x + beta.
    pub fn subst_linear(&self, alpha: &Rat, beta: &Rat) -> UniPoly {
        let lin = UniPoly::new(vec![beta.clone(), alpha.clone()]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Reversal x^n p(1/x) at the stated degree n >= deg p.
    pub fn reverse_at(&self, n: usize) -> UniPoly {
        let mut v = vec![Rat::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= n);
            v[n - i] = c.clone();
        }
        UniPoly::new(v)
    }

    /// Clears denominators and content: returns (primitive integer-coefficient
    /// polynomial p', positive rational s) with self = s * p'. Zero maps to
    /// (0, 1). The leading coefficient of p' keeps the sign of self.
    pub fn primitive_int(&self) -> (UniPoly, Rat) {
        if self.is_zero() {
            return (UniPoly::zero(), Rat::one());
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        let prim = UniPoly::new(ints.iter().map(|v| Rat::from_integer(v / &g)).collect());
        (prim, Rat::new(g, den_lcm))
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(v)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(v)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Monic greatest common divisor; gcd(0, 0) = 0 and gcd(p, 0) = monic p.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    // Primitive PRS keeps coefficient growth in check on large inputs.
    let (mut a, _) = p.primitive_int();
    let (mut b, _) = q.primitive_int();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r.primitive_int().0;
    }
    a.monic()
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (da, db) = match (a.deg(), b.deg()) {
        (Some(da), Some(db)) if da >= db => (da, db),
        _ => {
            let scaled = a.scale(&crate::qalg::rat::rat_pow(b.lc(), 1));
            return scaled;
        }
    };
    let factor = crate::qalg::rat::rat_pow(b.lc(), (da - db + 1) as u32);
    let (_, r) = a.scale(&factor).divrem(b);
    r
}

/// Sylvester resultant, rows of the first argument listed first. For monic
/// p, q it equals the product of root differences prod (alpha_i - beta_j).
/// Returns 0 when exactly one argument is the zero polynomial.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rat, QalgError> {
    if p.is_zero() && q.is_zero() {
        return Err(QalgError::UndefinedInput("resultant of two zero polynomials"));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(Rat::zero());
    }
    let m = p.deg().unwrap();
    let n = q.deg().unwrap();
    if m == 0 {
        return Ok(crate::qalg::rat::rat_pow(p.lc(), n as u32));
    }
    if n == 0 {
        return Ok(crate::qalg::rat::rat_pow(q.lc(), m as u32));
    }
    let size = m + n;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    // n rows of p coefficients (highest degree first), then m rows of q.
    for row in 0..n {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(det_rat(mat))
}

/// Determinant by exact fraction-free-ish Gaussian elimination over Q.
pub fn det_rat(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pr = match pivot {
            Some(pr) => pr,
            None => return Rat::zero(),
        };
        if pr != col {
            m.swap(pr, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &m[col][c] * &f;
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Discriminant of the monic cubic x^3 + t1 x^2 + t2 x + t3 in closed form.
pub fn disc_cubic(t1: &Rat, t2: &Rat, t3: &Rat) -> Rat {
    let t1_2 = t1 * t1;
    let t2_2 = t2 * t2;
    &t1_2 * &t2_2 - Rat::from_integer(Int::from(4)) * &t1_2 * t1 * t3
        - Rat::from_integer(Int::from(4)) * &t2_2 * t2
        + Rat::from_integer(Int::from(18)) * t1 * t2 * t3
        - Rat::from_integer(Int::from(27)) * t3 * t3
}

/// Square-free decomposition by Yun's algorithm: returns [(g_i, i)] with
/// p = lc * prod g_i^i, each g_i monic square-free, pairwise coprime.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    if p.deg().unwrap_or(0) == 0 {
        return vec![];
    }
    let f = p.monic();
    let df = f.derivative();
    let g0 = poly_gcd(&f, &df);
    let mut c = f.div_exact(&g0);
    let mut d = &df.div_exact(&g0) - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1usize;
    while c.deg().unwrap_or(0) > 0 {
        let g = poly_gcd(&c, &d);
        if g.deg().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        c = c.div_exact(&g);
        d = &d.div_exact(&g) - &c.derivative();
        i += 1;
    }
    out
}

/// Monic product of the distinct irreducible factors of p.
pub fn squarefree_part(p: &UniPoly) -> UniPoly {
    let mut out = UniPoly::one();
    for (g, _) in squarefree_decomposition(p) {
        out = &out * &g;
    }
    out
}

/// Multiplicity of root r in p (0 when r is not a root).
pub fn root_multiplicity(p: &UniPoly, r: &Rat) -> usize {
    let mut m = 0;
    let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
    let mut q = p.clone();
    loop {
        if q.is_zero() {
            return m;
        }
        let (d, rem) = q.divrem(&lin);
        if !rem.is_zero() {
            return m;
        }
        m += 1;
        q = d;
    }
}

/// Evaluates p at a projective point, by leading-coefficient comparison at
/// infinity (p nonconstant maps inf to inf; constants map inf to themselves).
pub fn eval_proj_poly(p: &UniPoly, x: &ProjRat) -> ProjRat {
    match x {
        ProjRat::Finite(v) => ProjRat::Finite(p.eval(v)),
        ProjRat::Inf => match p.deg() {
            None => ProjRat::Finite(Rat::zero()),
            Some(0) => ProjRat::Finite(p.lc().clone()),
            Some(_) => ProjRat::Inf,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rat::{int, rat};

    fn p(v: &[i64]) -> UniPoly {
        UniPoly::from_i64(v)
    }

    #[test]
    fn basic_arithmetic() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[-1, 1]); // x-1
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!(a.eval(&int(2)), int(9));
        assert_eq!(a.derivative(), p(&[2, 2]));
        let (q, r) = a.divrem(&b);
        assert_eq!(q, p(&[3, 1]));
        assert_eq!(r, p(&[4]));
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2-1, x-1) = x-1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // gcd(p, 0) = monic p
        assert_eq!(poly_gcd(&p(&[2, 4]), &UniPoly::zero()), p(&[1, 2]).monic());
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()), UniPoly::zero());
        // tau = a(a-1)(a-5), tau_check = a^3-6a^2+5a-1 share nothing
        let tau = p(&[0, 5, -6, 1]);
        let tch = p(&[-1, 5, -6, 1]);
        assert_eq!(poly_gcd(&tau, &tch), UniPoly::one());
        assert_ne!(resultant(&tau, &tch).unwrap(), Rat::zero());
    }

    #[test]
    fn resultant_examples() {
        // Res(x-2, x-3) = 2-3 = -1 in this convention
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), int(-1));
        // Res(x^2-1, x^2-4) = (1-2)(1+2)(-1-2)(-1+2) = 9
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap(), int(9));
        // disc via resultant: tau = a(a-1)(a-5), disc = 400 = -Res(tau, tau')
        let tau = p(&[0, 5, -6, 1]);
        let r = resultant(&tau, &tau.derivative()).unwrap();
        assert_eq!(-r, int(400));
        assert_eq!(disc_cubic(&int(-6), &int(5), &int(0)), int(400));
        // one zero argument
        assert_eq!(resultant(&tau, &UniPoly::zero()).unwrap(), int(0));
        assert!(resultant(&UniPoly::zero(), &UniPoly::zero()).is_err());
    }

    #[test]
    fn disc_cubic_examples() {
        assert_eq!(disc_cubic(&int(-6), &int(5), &int(-1)), int(49));
        assert_eq!(disc_cubic(&int(0), &int(0), &int(0)), int(0));
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+2)
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let d = squarefree_decomposition(&q);
        assert_eq!(d, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(squarefree_part(&q), &p(&[2, 1]) * &p(&[-1, 1]));
        assert_eq!(root_multiplicity(&q, &int(1)), 2);
        assert_eq!(root_multiplicity(&q, &int(5)), 0);
    }

    #[test]
    fn primitive_int_scaling() {
        let q = UniPoly::new(vec![rat(1, 2), rat(3, 4)]);
        let (prim, s) = q.primitive_int();
        assert_eq!(prim, p(&[2, 3]));
        assert_eq!(s, rat(1, 4));
        assert_eq!(prim.scale(&s), q);
    }
}

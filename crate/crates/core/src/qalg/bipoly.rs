//! Dense bivariate polynomials over Q, with fraction-free elimination.
//!
//! A `BiPoly` is stored as a polynomial in the first variable whose
//! coefficients are univariate polynomials in the second. Elimination is by
//! the Sylvester determinant computed with Bareiss fraction-free Gaussian
//! elimination over Q[second]; gcds use a primitive pseudo-remainder
//! sequence.

use num_traits::Zero;

use super::error::QalgError;
use super::poly::{poly_gcd, UniPoly};
use super::rat::Rat;

/// Which variable an elimination removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// coeffs[i] is the coefficient (a polynomial in the second variable) of
/// first^i; the last entry is nonzero unless the whole polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Outer product p(first) * q(second).
    pub fn outer(p: &UniPoly, q: &UniPoly) -> Self {
        BiPoly::new(p.coeffs().iter().map(|c| q.scale(c)).collect())
    }

    /// Embeds a polynomial in the first variable.
    pub fn from_first(p: &UniPoly) -> Self {
        BiPoly::new(
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(c.clone()))
                .collect(),
        )
    }

    /// Embeds a polynomial in the second variable.
    pub fn from_second(p: &UniPoly) -> Self {
        BiPoly::new(vec![p.clone()])
    }

    pub fn deg1(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg2(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.deg()).max()
    }

    pub fn coeff1(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeffs1(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Leading coefficient in the first variable.
    pub fn lc1(&self) -> &UniPoly {
        self.coeffs.last().expect("lc of zero bivariate polynomial")
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.coeff1(i) + &rhs.coeff1(i)).collect())
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.coeff1(i) - &rhs.coeff1(i)).collect())
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut v = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        BiPoly::new(v)
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Multiplies every coefficient by a polynomial in the second variable.
    pub fn scale2(&self, s: &UniPoly) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Substitutes a value for the first variable.
    pub fn eval1(&self, x: &Rat) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// Substitutes a value for the second variable.
    pub fn eval2(&self, y: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(y)).collect())
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.eval2(y).eval(x)
    }

    /// Swaps the two variables.
    pub fn transpose(&self) -> BiPoly {
        let d2 = match self.deg2() {
            None => return BiPoly::zero(),
            Some(d) => d,
        };
        let cols: Vec<UniPoly> = (0..=d2)
            .map(|j| UniPoly::new(self.coeffs.iter().map(|c| c.coeff(j)).collect()))
            .collect();
        BiPoly::new(cols)
    }

    pub fn derivative1(&self) -> BiPoly {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rat::from_integer(i.into())))
                .collect(),
        )
    }

    /// Content in the first variable: gcd of the coefficients, monic.
    pub fn content1(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = poly_gcd(&g, c);
        }
        g
    }

    /// Divides out the polynomial content in the first variable and rescales
    /// so all rational coefficients are integers with collective content 1.
    pub fn primitive1(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content1();
        let stripped = if c.deg().unwrap_or(0) == 0 {
            self.clone()
        } else {
            BiPoly::new(self.coeffs.iter().map(|q| q.div_exact(&c)).collect())
        };
        let flat = UniPoly::new(
            stripped
                .coeffs
                .iter()
                .flat_map(|q| q.coeffs().iter().cloned())
                .collect::<Vec<_>>(),
        );
        // flat loses positional data but its primitive scale is what we need
        let (_, s) = flat.primitive_int();
        if s.is_zero() {
            return stripped;
        }
        let mut inv = Rat::from_integer(1.into()) / s;
        // sign convention: leading coefficient of the leading coefficient > 0
        if num_traits::Signed::is_negative(stripped.lc1().lc()) {
            inv = -inv;
        }
        BiPoly::new(stripped.coeffs.iter().map(|q| q.scale(&inv)).collect())
    }

    /// Exact division by a divisor in the first variable (panics when inexact).
    pub fn div_exact1(&self, div: &BiPoly) -> BiPoly {
        assert!(!div.is_zero(), "bivariate division by zero");
        if self.is_zero() {
            return BiPoly::zero();
        }
        let dd = div.deg1().unwrap();
        let mut rem: Vec<UniPoly> = self.coeffs.clone();
        assert!(rem.len() >= dd + 1, "inexact bivariate division");
        let mut quo = vec![UniPoly::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].div_exact(div.lc1());
            quo[i - dd] = q.clone();
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[i - dd + j] = &rem[i - dd + j] - &(dc * &q);
            }
        }
        for r in &rem {
            assert!(r.is_zero(), "inexact bivariate division");
        }
        BiPoly::new(quo)
    }

    /// Divides by (first - r(second)); the division must be exact.
    pub fn div_exact_linear1(&self, r: &UniPoly) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let n = self.coeffs.len();
        assert!(n >= 2, "inexact linear division");
        let mut quo = vec![UniPoly::zero(); n - 1];
        let mut carry = UniPoly::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + &(&carry * r);
            quo[i - 1] = carry.clone();
        }
        let rem = &self.coeffs[0] + &(&carry * r);
        assert!(rem.is_zero(), "inexact linear division");
        BiPoly::new(quo)
    }
}

/// Sylvester resultant eliminating the chosen variable, computed by Bareiss
/// fraction-free elimination over the remaining polynomial ring.
pub fn resultant_bivariate(p: &BiPoly, q: &BiPoly, eliminate: Var) -> Result<UniPoly, QalgError> {
    let (p, q) = match eliminate {
        Var::First => (p.clone(), q.clone()),
        Var::Second => (p.transpose(), q.transpose()),
    };
    if p.is_zero() || q.is_zero() {
        return Err(QalgError::DegenerateInput(
            "bivariate resultant of a zero polynomial",
        ));
    }
    let m = p.deg1().unwrap();
    let n = q.deg1().unwrap();
    if m == 0 && n == 0 {
        return Err(QalgError::DegenerateInput(
            "bivariate resultant with neither argument involving the eliminated variable",
        ));
    }
    if m == 0 {
        return Ok(pow_poly(p.lc1(), n));
    }
    if n == 0 {
        return Ok(pow_poly(q.lc1(), m));
    }
    let size = m + n;
    let mut mat = vec![vec![UniPoly::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = p.coeff1(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = q.coeff1(n - k);
        }
    }
    Ok(det_bareiss_poly(mat))
}

fn pow_poly(p: &UniPoly, e: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

/// Bareiss fraction-free determinant over Q[y]; all divisions are exact.
fn det_bareiss_poly(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev);
            }
        }
        for i in k + 1..n {
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Primitive-PRS gcd with respect to the first variable, including content.
pub fn gcd_bivariate(p: &BiPoly, q: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    let content = poly_gcd(&p.content1(), &q.content1());
    let mut a = p.primitive1();
    let mut b = q.primitive1();
    if a.deg1() < b.deg1() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && b.deg1().unwrap() > 0 {
        let r = pseudo_rem1(&a, &b);
        a = b;
        b = r.primitive1();
    }
    let core = if b.is_zero() {
        a.primitive1()
    } else {
        BiPoly::new(vec![UniPoly::one()])
    };
    core.scale2(&content)
}

/// Pseudo-remainder in the first variable: lc(b)^(da-db+1) * a mod b.
fn pseudo_rem1(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let da = a.deg1().unwrap();
    let db = b.deg1().unwrap();
    debug_assert!(da >= db);
    let mut rem = a.clone();
    let lcb = b.lc1().clone();
    for i in (db..=da).rev() {
        let top = rem.coeff1(i);
        rem = rem.scale2(&lcb);
        if top.is_zero() {
            continue;
        }
        // subtract top * first^(i-db) * b, after rescaling rem by lc(b)
        let shift: Vec<UniPoly> = (0..i - db)
            .map(|_| UniPoly::zero())
            .chain(b.coeffs1().iter().map(|c| c * &top))
            .collect();
        rem = rem.sub(&BiPoly::new(shift));
        debug_assert!(rem.deg1().map_or(true, |d| d < i));
    }
    rem
}

/// Square-free part in the first variable (contents must be handled by the
/// caller; factors free of the first variable survive untouched).
pub fn squarefree1(p: &BiPoly) -> BiPoly {
    if p.is_zero() || p.deg1().unwrap() == 0 {
        return p.clone();
    }
    let g = gcd_bivariate(p, &p.derivative1());
    if g.deg1().unwrap_or(0) == 0 {
        return p.primitive1();
    }
    p.primitive1().div_exact1(&g.primitive1()).primitive1()
}

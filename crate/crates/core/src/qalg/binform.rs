//! Homogeneous binary forms over Q.

use num_traits::Zero;

use super::poly::UniPoly;
use super::rat::Rat;

/// Homogeneous form of fixed degree in x, y; coeffs[d] multiplies x^d y^(deg-d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinForm {
    degree: usize,
    coeffs: Vec<Rat>,
}

impl BinForm {
    pub fn new(degree: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "binary form coefficient count");
        BinForm { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinForm::new(degree, vec![Rat::zero(); degree + 1])
    }

    /// Homogenizes a univariate polynomial to the stated degree (>= deg p).
    pub fn from_unipoly(p: &UniPoly, degree: usize) -> Self {
        assert!(p.deg().unwrap_or(0) <= degree);
        let mut v = vec![Rat::zero(); degree + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            v[i] = c.clone();
        }
        BinForm::new(degree, v)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Dehomogenization at y = 1.
    pub fn at_y1(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut xp = vec![Rat::from_integer(1.into())];
        let mut yp = vec![Rat::from_integer(1.into())];
        for _ in 0..self.degree {
            xp.push(xp.last().unwrap() * x);
            yp.push(yp.last().unwrap() * y);
        }
        for (d, c) in self.coeffs.iter().enumerate() {
            acc += c * &xp[d] * &yp[self.degree - d];
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> BinForm {
        BinForm::new(self.degree, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, rhs: &BinForm) -> BinForm {
        let deg = self.degree + rhs.degree;
        let mut v = vec![Rat::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        BinForm::new(deg, v)
    }

    pub fn add(&self, rhs: &BinForm) -> BinForm {
        assert_eq!(self.degree, rhs.degree);
        BinForm::new(
            self.degree,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &BinForm) -> BinForm {
        assert_eq!(self.degree, rhs.degree);
        BinForm::new(
            self.degree,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Substitutes (x, y) -> (a x + b y, c x + d y).
    pub fn subst_linear(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> BinForm {
        // x -> a x + b y and y -> c x + d y as degree-1 forms, then expand.
        let fx = BinForm::new(1, vec![b.clone(), a.clone()]);
        let fy = BinForm::new(1, vec![d.clone(), c.clone()]);
        let mut acc = BinForm::zero(self.degree);
        for (dd, coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mut term = BinForm::new(0, vec![coef.clone()]);
            for _ in 0..dd {
                term = term.mul(&fx);
            }
            for _ in 0..(self.degree - dd) {
                term = term.mul(&fy);
            }
            acc = acc.add(&term);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rat::int;

    #[test]
    fn homogenize_and_eval() {
        // T = x^3 y - 6 x^2 y^2 + 5 x y^3 for (t1,t2,t3) = (-6,5,0):
        // index d = coeff of x^d y^(4-d): [t3, t2, t1, 1, 0]
        let t = BinForm::new(4, vec![int(0), int(5), int(-6), int(1), int(0)]);
        assert_eq!(t.eval(&int(2), &int(1)), int(2 * 2 * 2 - 6 * 4 + 10));
        assert_eq!(t.at_y1(), UniPoly::from_i64(&[0, 5, -6, 1]));
    }

    #[test]
    fn product_and_substitution() {
        let s = BinForm::new(1, vec![int(1), int(1)]); // x + y
        let sq = s.mul(&s);
        assert_eq!(sq.coeffs(), &[int(1), int(2), int(1)]);
        // (x,y) -> (y,x) swaps the coefficient order
        let sw = sq.subst_linear(&int(0), &int(1), &int(1), &int(0));
        assert_eq!(sw.coeffs(), &[int(1), int(2), int(1)]);
        let t = BinForm::new(2, vec![int(3), int(2), int(1)]);
        let tw = t.subst_linear(&int(0), &int(1), &int(1), &int(0));
        assert_eq!(tw.coeffs(), &[int(1), int(2), int(3)]);
    }
}

//! The one-parameter dual family and the two j-invariant maps.
//!
//! For a nonsingular curve in the normalized chart, the fiber of the
//! symmetric-square construction over the parameter a is the plane quartic
//! `c0 z^4 - 2 c1(x,y) z^2 + c2(x,y) = 0`, with c0 a cubic polynomial in a
//! (identically equal to -tau_check(a)), c1 a quadratic form and c2 a
//! quartic form whose coefficients are linear in a. The j-invariants of the
//! genus-1 fiber and of the canonical fiber of the associated surface are
//! degree-6 rational maps of a with closed-form numerators and denominators.

use std::fmt;

use num_traits::Zero;

use crate::curve::BiellipticCurve;
use crate::qalg::{
    rational_roots, resultant_bivariate, squarefree_decomposition, BinForm, BiPoly, ProjRat,
    QalgError, Rat, RatFn, UniPoly, Var,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// The fiber at a = infinity is the dual curve; use the dual model.
    ParameterAtInfinity,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ParameterAtInfinity => {
                write!(f, "fiber at infinity is the dual curve; use the dual model")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

/// One member of the dual family: the quartic model coefficients at a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub a: Rat,
    pub c0: Rat,
    pub c1: BinForm,
    pub c2: BinForm,
}

/// The coefficient blocks of the family as exact polynomials in a:
/// (c0, the three c1 form coefficients [y^2, xy, x^2], the five c2 form
/// coefficients [y^4 .. x^4]).
pub fn family_coeffs_in_a(c: &BiellipticCurve) -> (UniPoly, [UniPoly; 3], [UniPoly; 5]) {
    let [s0, s1, s2] = c.s();
    let [t1, t2, t3] = c.t();
    let two = Rat::from_integer(2.into());
    let four = Rat::from_integer(4.into());

    let c0 = UniPoly::new(vec![
        s0 * s0 * t2 * t2 - &four * s0 * s0 * t1 * t3 - &two * s0 * s2 * t2
            + &four * s0 * s1 * t3
            + s2 * s2
            - t3,
        -(&four * s0 * s2 * t1 - &two * s0 * s1 * t2 + &four * s0 * s0 * t3 - &two * s1 * s2
            + t2),
        s1 * s1 - &four * s0 * s2 - t1,
        -Rat::from_integer(1.into()),
    ]);

    // c1 = (..)x^2 + 2(..)xy + (..)y^2, stored lowest x-power first
    let c1_y2 = UniPoly::new(vec![
        -(s0 * t2 * t2) + &four * s0 * t1 * t3 + s2 * t2 - &two * s1 * t3,
        &two * s2 * t1 - s1 * t2 + &four * s0 * t3,
        &two * s2,
    ]);
    let c1_xy = UniPoly::new(vec![
        &four * s0 * t3,
        &two * (s0 * t2 + s2),
        &two * s1,
    ]);
    let c1_x2 = UniPoly::new(vec![s0 * t2 - s2, &two * s0 * t1 - s1, &two * s0]);

    // c2 = x^4 - 4a x^3 y - 2(2 t1 a + t2) x^2 y^2 - 4(t2 a + 2 t3) x y^3
    //      - (4 t3 a - t2^2 + 4 t1 t3) y^4
    let c2_y4 = UniPoly::new(vec![t2 * t2 - &four * t1 * t3, -&four * t3]);
    let c2_xy3 = UniPoly::new(vec![-Rat::from_integer(8.into()) * t3, -&four * t2]);
    let c2_x2y2 = UniPoly::new(vec![-&two * t2, -&four * t1]);
    let c2_x3y = UniPoly::new(vec![Rat::zero(), -four]);
    let c2_x4 = UniPoly::one();

    (
        c0,
        [c1_y2, c1_xy, c1_x2],
        [c2_y4, c2_xy3, c2_x2y2, c2_x3y, c2_x4],
    )
}

/// The family member at a finite parameter value.
pub fn family_member(c: &BiellipticCurve, a: &ProjRat) -> Result<FamilyMember, FamilyError> {
    let a = match a {
        ProjRat::Finite(v) => v.clone(),
        ProjRat::Inf => return Err(FamilyError::ParameterAtInfinity),
    };
    let (c0, c1, c2) = family_coeffs_in_a(c);
    Ok(FamilyMember {
        c0: c0.eval(&a),
        c1: BinForm::new(2, c1.iter().map(|p| p.eval(&a)).collect()),
        c2: BinForm::new(4, c2.iter().map(|p| p.eval(&a)).collect()),
        a,
    })
}

/// The branch form of the genus-1 fiber: c1^2 - c0 c2.
pub fn branch_quartic(m: &FamilyMember) -> BinForm {
    m.c1.mul(&m.c1).sub(&m.c2.scale(&m.c0))
}

/// The five coefficients of c1^2 - c0 c2 as exact polynomials in a
/// (index d multiplies x^d y^(4-d)).
pub fn branch_quartic_coeffs_in_a(c: &BiellipticCurve) -> [UniPoly; 5] {
    let (c0, c1, c2) = family_coeffs_in_a(c);
    let mut out: Vec<UniPoly> = vec![UniPoly::zero(); 5];
    for i in 0..3 {
        for j in 0..3 {
            out[i + j] = &out[i + j] + &(&c1[i] * &c1[j]);
        }
    }
    for (d, q) in c2.iter().enumerate() {
        out[d] = &out[d] - &(&c0 * q);
    }
    out.try_into().expect("five coefficients")
}

/// The two classical invariants of the branch quartic c1^2 - c0 c2 as exact
/// polynomials in a; 4 I^3 - J^2 is 27 times its discriminant, a constant
/// multiple of tau^6 tau_check^2.
pub fn branch_quartic_invariants_in_a(c: &BiellipticCurve) -> (UniPoly, UniPoly) {
    let q = branch_quartic_coeffs_in_a(c);
    let (a0, a1, a2, a3, a4) = (&q[0], &q[1], &q[2], &q[3], &q[4]);
    let sc = |p: &UniPoly, k: i64| p.scale(&Rat::from_integer(k.into()));
    let i_inv = &(&sc(&(a4 * a0), 12) - &sc(&(a3 * a1), 3)) + &(a2 * a2);
    let j_inv = &(&(&sc(&(&(a4 * a2) * a0), 72) - &sc(&(&(a4 * a1) * a1), 27))
        - &sc(&(&(a3 * a3) * a0), 27))
        + &(&sc(&(&(a3 * a2) * a1), 9) - &sc(&(&(a2 * a2) * a2), 2));
    (i_inv, j_inv)
}

/// The printed cubic whose square divides num - 1728 den for a j-map built
/// from the coefficient triple t.
pub fn j_cubic_1728(t: &[Rat; 3]) -> UniPoly {
    let [t1, t2, t3] = t;
    let n = |k: i64| Rat::from_integer(k.into());
    UniPoly::new(vec![
        -(n(2) * t2 * t2 * t2 - n(9) * t1 * t2 * t3 + n(27) * t3 * t3),
        -n(3) * (t1 * t2 * t2 - n(6) * t1 * t1 * t3 + n(9) * t2 * t3),
        n(3) * (t1 * t1 * t2 - n(6) * t2 * t2 + n(9) * t1 * t3),
        n(2) * t1 * t1 * t1 - n(9) * t1 * t2 + n(27) * t3,
    ])
}

/// The pair of degree-6 j-maps on the a-line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JPair {
    /// j of the genus-1 fiber (tau_check data).
    pub j_f: RatFn,
    /// j of the canonical fiber of the associated surface (tau data).
    pub j_k: RatFn,
}

/// Numerator quadratic of the j-map for a coefficient triple.
fn j_numerator_quadratic(t: &[Rat; 3]) -> UniPoly {
    let [t1, t2, t3] = t;
    let three = Rat::from_integer(3.into());
    let nine = Rat::from_integer(9.into());
    UniPoly::new(vec![
        t2 * t2 - &three * t1 * t3,
        t1 * t2 - nine * t3,
        t1 * t1 - three * t2,
    ])
}

fn j_map(t: &[Rat; 3], disc: &Rat, tau: &UniPoly) -> RatFn {
    let q = j_numerator_quadratic(t);
    let num = (&q * &q).scale(&Rat::from_integer(256.into()));
    let num = &num * &q;
    let den = (tau * tau).scale(disc);
    RatFn::new(num, den).expect("nonzero denominator on nonsingular curve")
}

/// Builds j_F and j_K in canonical reduced form.
pub fn j_functions(c: &BiellipticCurve) -> JPair {
    let j_k = j_map(c.t(), c.disc_tau(), c.tau());
    let j_f = j_map(&c.dual_t(), c.disc_tau_check(), c.tau_check());
    JPair { j_f, j_k }
}

/// Descriptor of a ramification point on the a-line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointDescriptor {
    Rational(Rat),
    /// Square-free polynomial collecting conjugate irrational points.
    Factor(UniPoly),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamPoint {
    pub descriptor: PointDescriptor,
    /// Ramification index e >= 2.
    pub index: usize,
}

impl RamPoint {
    /// Number of geometric points collected by this descriptor.
    pub fn point_count(&self) -> usize {
        match &self.descriptor {
            PointDescriptor::Factor(f) => f.deg().unwrap_or(0),
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchLocus {
    pub value: ProjRat,
    pub points: Vec<RamPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub branch_values: Vec<BranchLocus>,
    /// Sum of (e - 1) over all ramification points; 2 deg - 2 when every
    /// branch value is rational or infinite.
    pub total_branching: usize,
}

impl RamificationProfile {
    /// Square-free polynomial whose roots are the finite ramification
    /// points, together with a flag for a ramification point at infinity.
    pub fn ramification_locus(&self) -> (UniPoly, bool) {
        let mut acc = UniPoly::one();
        let mut at_inf = false;
        for locus in &self.branch_values {
            for p in &locus.points {
                match &p.descriptor {
                    PointDescriptor::Rational(r) => {
                        acc = &acc * &UniPoly::new(vec![-r.clone(), Rat::from_integer(1.into())]);
                    }
                    PointDescriptor::Factor(f) => acc = &acc * f,
                    PointDescriptor::Infinity => at_inf = true,
                }
            }
        }
        (acc, at_inf)
    }
}

/// Ramification structure of a nonconstant rational map of P^1.
///
/// Finite branch values are found among the rational roots of the
/// discriminant of num - v den with respect to a, together with the value
/// at infinity; each fiber is square-free decomposed into point
/// descriptors with indices. Irrational branch values are not searched.
pub fn ramification_profile(r: &RatFn) -> Result<RamificationProfile, QalgError> {
    let deg = crate::qalg::ratfn_degree(r)?;
    if deg == 1 {
        return Ok(RamificationProfile {
            branch_values: vec![],
            total_branching: 0,
        });
    }
    // P(a, v) = num(a) - v den(a) as a bivariate polynomial, eliminated in a.
    let dmax = deg;
    let cols: Vec<UniPoly> = (0..=dmax)
        .map(|i| UniPoly::new(vec![r.num().coeff(i), -r.den().coeff(i)]))
        .collect();
    let p = BiPoly::new(cols);
    let disc_v = resultant_bivariate(&p, &p.derivative1(), Var::First)?;
    let mut candidates: Vec<ProjRat> = Vec::new();
    if !disc_v.is_zero() {
        for v in rational_roots(&disc_v)? {
            candidates.push(ProjRat::Finite(v));
        }
    }
    if let ProjRat::Finite(vinf) = r.value_at_inf() {
        let c = ProjRat::Finite(vinf);
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    candidates.push(ProjRat::Inf);
    candidates.sort();
    candidates.dedup();

    let mut branch_values = Vec::new();
    let mut total = 0usize;
    for v in candidates {
        let fiber_poly = match &v {
            ProjRat::Finite(val) => r.num() - &r.den().scale(val),
            ProjRat::Inf => r.den().clone(),
        };
        let mut points = Vec::new();
        for (g, e) in squarefree_decomposition(&fiber_poly) {
            if e < 2 {
                continue;
            }
            let mut residual = g.clone();
            for root in rational_roots(&g)? {
                let lin = UniPoly::new(vec![-root.clone(), Rat::from_integer(1.into())]);
                residual = residual.div_exact(&lin);
                points.push(RamPoint {
                    descriptor: PointDescriptor::Rational(root),
                    index: e,
                });
            }
            if residual.deg().unwrap_or(0) >= 1 {
                points.push(RamPoint {
                    descriptor: PointDescriptor::Factor(residual.monic()),
                    index: e,
                });
            }
        }
        let mult_inf = deg - fiber_poly.deg().unwrap_or(0);
        if mult_inf >= 2 {
            points.push(RamPoint {
                descriptor: PointDescriptor::Infinity,
                index: mult_inf,
            });
        }
        if points.is_empty() {
            continue;
        }
        total += points
            .iter()
            .map(|p| (p.index - 1) * p.point_count())
            .sum::<usize>();
        branch_values.push(BranchLocus { value: v, points });
    }
    Ok(RamificationProfile {
        branch_values,
        total_branching: total,
    })
}

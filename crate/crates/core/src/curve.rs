//! The normalized bielliptic genus-3 curve model and its base-curve data.
//!
//! A curve is stored through the six coefficients of its canonical plane
//! model `(z^2 + S(x,y))^2 = T(x,y)` with `S = s0 x^2 + s1 xy + s2 y^2` and
//! `T = x^3 y + t1 x^2 y^2 + t2 x y^3 + t3 y^4`. The base elliptic curve is
//! `y^2 = tau(x)` with `tau = x^3 + t1 x^2 + t2 x + t3`; the dual base is
//! `y^2 = tau_check(x)` whose coefficients are polynomial in (s, t). The
//! model is nonsingular exactly when `disc(tau) * disc(tau_check) != 0`,
//! and the hyperelliptic locus is excluded by the normal form itself.

use std::fmt;

use num_traits::{One, Zero};

use crate::qalg::rat::rat_pow;
use crate::qalg::{
    disc_cubic, poly_gcd, rational_roots, BinForm, ProjRat, Rat, UniPoly,
};

/// Which discriminant factor vanished on a singular model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscFactor {
    Base,
    Dual,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveError {
    /// disc(tau) * disc(tau_check) = 0; carries which factor vanished.
    Singular { vanished: DiscFactor },
    /// A quartic model with T = S^2 (or a dual that would collapse).
    DegenerateModel,
    /// Branch divisor with a repeated point.
    DegenerateBranch,
    /// A point that does not lie on the curve.
    InvalidPoint,
    /// Marked data or evaluation point at a pole of the lambda map.
    IndeterminatePoint,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::Singular { vanished } => {
                let which = match vanished {
                    DiscFactor::Base => "disc(tau)",
                    DiscFactor::Dual => "disc(tau_check)",
                    DiscFactor::Both => "disc(tau) and disc(tau_check)",
                };
                write!(f, "singular curve: {} vanishes", which)
            }
            CurveError::DegenerateModel => write!(f, "degenerate quartic model"),
            CurveError::DegenerateBranch => write!(f, "branch divisor has a repeated point"),
            CurveError::InvalidPoint => write!(f, "point does not lie on the curve"),
            CurveError::IndeterminatePoint => write!(f, "lambda map undefined at this point"),
        }
    }
}

impl std::error::Error for CurveError {}

/// Nonsingular bielliptic curve in the normalized (s, t) chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiellipticCurve {
    s: [Rat; 3],
    t: [Rat; 3],
    tau: UniPoly,
    tau_check: UniPoly,
    disc_tau: Rat,
    disc_tau_check: Rat,
}

/// Constructs the curve, caching tau, tau_check and both discriminants.
pub fn new_curve(
    s0: Rat,
    s1: Rat,
    s2: Rat,
    t1: Rat,
    t2: Rat,
    t3: Rat,
) -> Result<BiellipticCurve, CurveError> {
    let s = [s0, s1, s2];
    let t = [t1, t2, t3];
    let tau = monic_cubic(&t[0], &t[1], &t[2]);
    let td = dual_t_coeffs(&s, &t);
    let tau_check = monic_cubic(&td[0], &td[1], &td[2]);
    let disc_tau = disc_cubic(&t[0], &t[1], &t[2]);
    let disc_tau_check = disc_cubic(&td[0], &td[1], &td[2]);
    match (disc_tau.is_zero(), disc_tau_check.is_zero()) {
        (false, false) => Ok(BiellipticCurve {
            s,
            t,
            tau,
            tau_check,
            disc_tau,
            disc_tau_check,
        }),
        (true, false) => Err(CurveError::Singular {
            vanished: DiscFactor::Base,
        }),
        (false, true) => Err(CurveError::Singular {
            vanished: DiscFactor::Dual,
        }),
        (true, true) => Err(CurveError::Singular {
            vanished: DiscFactor::Both,
        }),
    }
}

fn monic_cubic(c1: &Rat, c2: &Rat, c3: &Rat) -> UniPoly {
    UniPoly::new(vec![c3.clone(), c2.clone(), c1.clone(), Rat::one()])
}

/// The dual coefficient triple (t1_check, t2_check, t3_check).
pub fn dual_t_coeffs(s: &[Rat; 3], t: &[Rat; 3]) -> [Rat; 3] {
    let [s0, s1, s2] = s;
    let [t1, t2, t3] = t;
    let four = Rat::from_integer(4.into());
    let two = Rat::from_integer(2.into());
    let td1 = -(s1 * s1) + &four * s0 * s2 + t1;
    let td2 = &four * s0 * s2 * t1 - &two * s0 * s1 * t2 + &four * s0 * s0 * t3
        - &two * s1 * s2
        + t2;
    let td3 = -(s0 * s0 * t2 * t2) + &four * s0 * s0 * t1 * t3 + &two * s0 * s2 * t2
        - &four * s0 * s1 * t3
        - s2 * s2
        + t3;
    [td1, td2, td3]
}

impl BiellipticCurve {
    pub fn s(&self) -> &[Rat; 3] {
        &self.s
    }

    pub fn t(&self) -> &[Rat; 3] {
        &self.t
    }

    /// The monic cubic presenting the base curve E: y^2 = tau(x).
    pub fn tau(&self) -> &UniPoly {
        &self.tau
    }

    /// The monic cubic presenting the dual base: y^2 = tau_check(x).
    pub fn tau_check(&self) -> &UniPoly {
        &self.tau_check
    }

    pub fn dual_t(&self) -> [Rat; 3] {
        dual_t_coeffs(&self.s, &self.t)
    }

    pub fn disc_tau(&self) -> &Rat {
        &self.disc_tau
    }

    pub fn disc_tau_check(&self) -> &Rat {
        &self.disc_tau_check
    }

    /// S as a degree-2 binary form.
    pub fn s_form(&self) -> BinForm {
        BinForm::new(2, vec![self.s[2].clone(), self.s[1].clone(), self.s[0].clone()])
    }

    /// T as a degree-4 binary form (leading x^4 coefficient is zero).
    pub fn t_form(&self) -> BinForm {
        BinForm::new(
            4,
            vec![
                self.t[2].clone(),
                self.t[1].clone(),
                self.t[0].clone(),
                Rat::one(),
                Rat::zero(),
            ],
        )
    }

    pub fn quartic_model(&self) -> QuarticModel {
        QuarticModel::new(self.s_form(), self.t_form()).expect("normalized model is nondegenerate")
    }

    /// j-invariant of the base curve: 2^8 (t1^2 - 3 t2)^3 / disc(tau).
    pub fn j_base(&self) -> ProjRat {
        let [t1, t2, _] = &self.t;
        let q = t1 * t1 - Rat::from_integer(3.into()) * t2;
        ProjRat::Finite(Rat::from_integer(256.into()) * rat_pow(&q, 3) / self.disc_tau.clone())
    }

    /// j-invariant of the dual base (the canonical fiber of the surface).
    pub fn j_dual_base(&self) -> ProjRat {
        let [d1, d2, _] = self.dual_t();
        let q = &d1 * &d1 - Rat::from_integer(3.into()) * &d2;
        ProjRat::Finite(
            Rat::from_integer(256.into()) * rat_pow(&q, 3) / self.disc_tau_check.clone(),
        )
    }

    /// Locations and Kodaira types of the singular fibers, on the a-line.
    ///
    /// The singular parameter values are the roots of tau_check; each
    /// carries a pair of 1I2 fibers upstairs unless it is simultaneously a
    /// root of tau (a branch point of the double cover of the a-line), in
    /// which case the pair coalesces into a single 1I4 fiber.
    pub fn singular_fibers(&self) -> FiberReport {
        let mut entries = Vec::new();
        let mut count = 0usize;
        let roots = rational_roots(&self.tau_check).expect("tau_check is nonzero");
        let mut residual = self.tau_check.clone();
        for r in &roots {
            let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
            residual = residual.div_exact(&lin);
            let shared = self.tau.eval(r).is_zero();
            count += if shared { 1 } else { 2 };
            entries.push(FiberEntry {
                location: FiberLocation::Rational(r.clone()),
                kind: if shared { FiberKind::I4 } else { FiberKind::PairI2 },
            });
        }
        if residual.deg().unwrap_or(0) >= 1 {
            // No rational roots remain, so the residual cubic or quadratic is
            // irreducible over Q; it is shared with tau only by dividing it.
            let deg = residual.deg().unwrap();
            let shared = poly_gcd(&residual, &self.tau).deg().unwrap_or(0) == deg;
            count += if shared { deg } else { 2 * deg };
            entries.push(FiberEntry {
                location: FiberLocation::Factor(residual.monic()),
                kind: if shared { FiberKind::I4 } else { FiberKind::PairI2 },
            });
        }
        FiberReport {
            entries,
            count_sigma: count,
        }
    }
}

/// One singular location on the a-line: an exact rational value or an
/// irreducible factor of tau_check collecting conjugate irrational values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberLocation {
    Rational(Rat),
    Factor(UniPoly),
}

/// Kodaira type carried by a singular location.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    /// A pair of 1I2 fibers upstairs on the base curve.
    PairI2,
    /// The coalesced 1I4 fiber at a branch point of the double cover.
    I4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub entries: Vec<FiberEntry>,
    /// Number of singular fibers upstairs; always between 3 and 6.
    pub count_sigma: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberEntry {
    pub location: FiberLocation,
    pub kind: FiberKind,
}

/// General (un-normalized) quartic model (z^2 + S)^2 = T with deg S = 2,
/// deg T = 4 and T != S^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticModel {
    s: BinForm,
    t: BinForm,
}

impl QuarticModel {
    pub fn new(s: BinForm, t: BinForm) -> Result<Self, CurveError> {
        assert_eq!(s.degree(), 2);
        assert_eq!(t.degree(), 4);
        if s.mul(&s) == t {
            return Err(CurveError::DegenerateModel);
        }
        Ok(QuarticModel { s, t })
    }

    pub fn s(&self) -> &BinForm {
        &self.s
    }

    pub fn t(&self) -> &BinForm {
        &self.t
    }
}

/// The dual presentation (S, T) -> (S, S^2 - T); applying it twice returns
/// the input exactly.
pub fn dual_curve(q: &QuarticModel) -> Result<QuarticModel, CurveError> {
    let t_dual = q.s.mul(&q.s).sub(&q.t);
    if t_dual.is_zero() {
        return Err(CurveError::DegenerateModel);
    }
    QuarticModel::new(q.s.clone(), t_dual)
}

/// j-invariant of the double cover of P^1 branched at the four roots of a
/// binary form of degree at most 4 (roots at infinity included by padding).
///
/// Computed through the two classical invariants of the binary quartic,
/// normalized so that the split quartic x(x-y)(x-lambda y)y gives
/// 2^8 (l^2-l+1)^3 / (l^2 (l-1)^2).
pub fn j_of_binary_quartic(q: &BinForm) -> Result<ProjRat, CurveError> {
    assert!(q.degree() <= 4, "branch form degree exceeds 4");
    if q.is_zero() {
        return Err(CurveError::DegenerateBranch);
    }
    let a = |i: usize| q.coeff(i);
    let (a4, a3, a2, a1, a0) = (a(4), a(3), a(2), a(1), a(0));
    let twelve = Rat::from_integer(12.into());
    let three = Rat::from_integer(3.into());
    let i_inv = &twelve * &a4 * &a0 - &three * &a3 * &a1 + &a2 * &a2;
    let j_inv = Rat::from_integer(72.into()) * &a4 * &a2 * &a0
        - Rat::from_integer(27.into()) * &a4 * &a1 * &a1
        - Rat::from_integer(27.into()) * &a3 * &a3 * &a0
        + Rat::from_integer(9.into()) * &a3 * &a2 * &a1
        - Rat::from_integer(2.into()) * rat_pow(&a2, 3);
    let denom = Rat::from_integer(4.into()) * rat_pow(&i_inv, 3) - &j_inv * &j_inv;
    if denom.is_zero() {
        return Err(CurveError::DegenerateBranch);
    }
    let num = Rat::from_integer((256 * 27).into()) * rat_pow(&i_inv, 3);
    Ok(ProjRat::Finite(num / denom))
}

/// A point on a marked elliptic curve y^2 = g(x), base point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EPoint {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl EPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        EPoint::Affine { x, y }
    }

    pub fn negate(&self) -> EPoint {
        match self {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine { x, y } => EPoint::Affine {
                x: x.clone(),
                y: -y.clone(),
            },
        }
    }
}

/// Elliptic curve y^2 = g(x) (g a monic separable cubic) with four rational
/// marked points; the group identity is the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedEllipticCurve {
    g: UniPoly,
    marked: [EPoint; 4],
}

impl MarkedEllipticCurve {
    pub fn new(g: UniPoly, marked: [EPoint; 4]) -> Result<Self, CurveError> {
        assert_eq!(g.deg(), Some(3), "marked curve needs a cubic");
        assert!(g.lc().is_one(), "marked curve cubic must be monic");
        let curve = MarkedEllipticCurve { g, marked };
        for p in &curve.marked {
            if !curve.contains(p) {
                return Err(CurveError::InvalidPoint);
            }
        }
        Ok(curve)
    }

    pub fn g(&self) -> &UniPoly {
        &self.g
    }

    pub fn marked(&self) -> &[EPoint; 4] {
        &self.marked
    }

    pub fn contains(&self, p: &EPoint) -> bool {
        match p {
            EPoint::Infinity => true,
            EPoint::Affine { x, y } => y * y == self.g.eval(x),
        }
    }
}

/// Chord-tangent group sum with identity at infinity.
pub fn cubic_group_add(
    curve: &MarkedEllipticCurve,
    p: &EPoint,
    q: &EPoint,
) -> Result<EPoint, CurveError> {
    if !curve.contains(p) || !curve.contains(q) {
        return Err(CurveError::InvalidPoint);
    }
    let (x1, y1) = match p {
        EPoint::Infinity => return Ok(q.clone()),
        EPoint::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match q {
        EPoint::Infinity => return Ok(p.clone()),
        EPoint::Affine { x, y } => (x, y),
    };
    let c2 = curve.g.coeff(2);
    let slope = if x1 == x2 {
        if *y1 == -y2.clone() {
            return Ok(EPoint::Infinity);
        }
        // tangent: y != 0 here
        let gp = curve.g.derivative();
        gp.eval(x1) / (Rat::from_integer(2.into()) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &slope * &slope - &c2 - x1 - x2;
    let y3 = &slope * (x1 - &x3) - y1;
    Ok(EPoint::Affine { x: x3, y: y3 })
}

/// Third intersection point of the chord (or tangent) through p and q.
pub fn chord_third_point(
    curve: &MarkedEllipticCurve,
    p: &EPoint,
    q: &EPoint,
) -> Result<EPoint, CurveError> {
    Ok(cubic_group_add(curve, p, q)?.negate())
}

fn affine_x(p: &EPoint) -> Result<Rat, CurveError> {
    match p {
        EPoint::Affine { x, .. } => Ok(x.clone()),
        EPoint::Infinity => Err(CurveError::IndeterminatePoint),
    }
}

/// The lambda coordinate of the point of the parameter line under the
/// marked four points, in closed form:
/// ((a34 - a14) / (a34 - a24)) * ((a - a24) / (a - a14)),
/// where a_ij is the x-coordinate of the third chord point through the
/// marked points i and j, and a is the x-coordinate of p.
pub fn lambda_map(curve: &MarkedEllipticCurve, p: &EPoint) -> Result<Rat, CurveError> {
    if !curve.contains(p) {
        return Err(CurveError::InvalidPoint);
    }
    let a = affine_x(p)?;
    let m = &curve.marked;
    let a14 = affine_x(&chord_third_point(curve, &m[0], &m[3])?)?;
    let a24 = affine_x(&chord_third_point(curve, &m[1], &m[3])?)?;
    let a34 = affine_x(&chord_third_point(curve, &m[2], &m[3])?)?;
    if a24 == a14 {
        return Err(CurveError::IndeterminatePoint);
    }
    let den1 = &a34 - &a24;
    let den2 = &a - &a14;
    if den1.is_zero() || den2.is_zero() {
        return Err(CurveError::IndeterminatePoint);
    }
    Ok((&a34 - &a14) / den1 * (&a - &a24) / den2)
}

/// The same value by the independent path: the cross-ratio of the four
/// values f_p(p_i), where f_p(x, y) = (y + b) / (x - a) for p = (a, b).
pub fn lambda_map_cross_ratio(
    curve: &MarkedEllipticCurve,
    p: &EPoint,
) -> Result<Rat, CurveError> {
    if !curve.contains(p) {
        return Err(CurveError::InvalidPoint);
    }
    let (a, b) = match p {
        EPoint::Affine { x, y } => (x, y),
        EPoint::Infinity => return Err(CurveError::IndeterminatePoint),
    };
    let mut c = Vec::with_capacity(4);
    for m in &curve.marked {
        let (ai, bi) = match m {
            EPoint::Affine { x, y } => (x, y),
            EPoint::Infinity => return Err(CurveError::IndeterminatePoint),
        };
        if ai == a {
            return Err(CurveError::IndeterminatePoint);
        }
        c.push((bi + b) / (ai - a));
    }
    let (c1, c2, c3, c4) = (&c[0], &c[1], &c[2], &c[3]);
    let (d1, d2) = (c4 - c1, c3 - c2);
    if d1.is_zero() || d2.is_zero() {
        return Err(CurveError::IndeterminatePoint);
    }
    Ok((c4 - c2) / &d1 * (c3 - c1) / &d2)
}

/// 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2): the j-invariant of the double
/// cover of P^1 branched at {0, 1, infinity, l}.
pub fn j_from_lambda(l: &Rat) -> Result<Rat, CurveError> {
    let denom = l * l * (l - Rat::one()) * (l - Rat::one());
    if denom.is_zero() {
        return Err(CurveError::DegenerateBranch);
    }
    let q = l * l - l + Rat::one();
    Ok(Rat::from_integer(256.into()) * rat_pow(&q, 3) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rat::{int, rat};

    fn ex52() -> BiellipticCurve {
        new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap()
    }

    fn ex53() -> BiellipticCurve {
        new_curve(int(1), int(-1), int(0), int(2), int(-3), int(0)).unwrap()
    }

    fn ex54() -> BiellipticCurve {
        new_curve(int(1), int(-2), int(3), int(-4), int(3), int(0)).unwrap()
    }

    #[test]
    fn construction_and_discriminants() {
        let c = ex52();
        assert_eq!(c.disc_tau(), &int(400));
        assert_eq!(c.disc_tau_check(), &int(49));
        assert_eq!(
            new_curve(int(0), int(0), int(0), int(0), int(0), int(0)),
            Err(CurveError::Singular {
                vanished: DiscFactor::Both
            })
        );
        let c3 = ex53();
        assert_eq!(c3.tau_check(), &UniPoly::from_i64(&[-9, -9, 1, 1]));
    }

    #[test]
    fn tau_check_fixtures() {
        assert_eq!(ex52().tau_check(), &UniPoly::from_i64(&[-1, 5, -6, 1]));
        assert_eq!(ex53().tau_check(), &UniPoly::from_i64(&[-9, -9, 1, 1]));
        assert_eq!(ex54().tau_check(), &UniPoly::from_i64(&[0, -21, 4, 1]));
    }

    #[test]
    fn dual_model_involution() {
        let c = ex52();
        let q = c.quartic_model();
        let d = dual_curve(&q).unwrap();
        // S^2 - T = -x^3 y + 6 x^2 y^2 - 5 x y^3 + y^4 for S = y^2, T as stored
        assert_eq!(
            d.t().coeffs(),
            &[int(1), int(-5), int(6), int(-1), int(0)]
        );
        assert_eq!(dual_curve(&d).unwrap(), q);
        // degenerate: T = S^2
        let s = c.s_form();
        assert_eq!(
            QuarticModel::new(s.clone(), s.mul(&s)),
            Err(CurveError::DegenerateModel)
        );
    }

    #[test]
    fn j_of_quartic_fixtures() {
        // x(x-y)(x-5y)y: lambda = 5
        let q = BinForm::new(4, vec![int(0), int(5), int(-6), int(1), int(0)]);
        assert_eq!(
            j_of_binary_quartic(&q).unwrap(),
            ProjRat::Finite(rat(16 * 27 * 343, 25))
        );
        // x(x-y)(x+3y)y: lambda = -3
        let q = BinForm::new(4, vec![int(0), int(-3), int(2), int(1), int(0)]);
        assert_eq!(
            j_of_binary_quartic(&q).unwrap(),
            ProjRat::Finite(rat(16 * 2197, 9))
        );
        // -(5/3) x(x-y)(x-(7/5)y) y: lambda = 7/5, scale invariant
        let base = BinForm::new(4, vec![int(0), rat(7, 5), rat(-12, 5), int(1), int(0)]);
        let q = base.scale(&rat(-5, 3));
        assert_eq!(
            j_of_binary_quartic(&q).unwrap(),
            ProjRat::Finite(rat(64 * 27 * 2197, 25 * 49))
        );
        // repeated root
        let sq = BinForm::new(2, vec![int(0), int(1), int(0)]); // xy
        let rep = sq.mul(&sq);
        assert_eq!(j_of_binary_quartic(&rep), Err(CurveError::DegenerateBranch));
        // lambda-formula agreement
        assert_eq!(j_from_lambda(&int(5)).unwrap(), rat(16 * 27 * 343, 25));
    }

    #[test]
    fn j_base_fixtures() {
        assert_eq!(ex52().j_base(), ProjRat::Finite(rat(148176, 25)));
        assert_eq!(ex53().j_base(), ProjRat::Finite(rat(16 * 2197, 9)));
        assert_eq!(ex54().j_base(), ProjRat::Finite(rat(64 * 343, 9)));
        assert_eq!(ex52().j_dual_base(), ProjRat::Finite(int(256 * 27 * 7)));
        assert_eq!(ex53().j_dual_base(), ProjRat::Finite(rat(64 * 343, 9)));
        // t_check = (4, -21, 0): 2^8 * 79^3 / 44100 = 2^6 * 79^3 / 11025
        assert_eq!(ex54().j_dual_base(), ProjRat::Finite(rat(64 * 493039, 11025)));
    }

    #[test]
    fn singular_fiber_reports() {
        let r = ex52().singular_fibers();
        assert_eq!(r.count_sigma, 6);
        assert_eq!(r.entries.len(), 1);
        assert_eq!(
            r.entries[0].location,
            FiberLocation::Factor(UniPoly::from_i64(&[-1, 5, -6, 1]))
        );
        assert_eq!(r.entries[0].kind, FiberKind::PairI2);

        // tau roots {0,1,-3} meet tau_check roots {-1,3,-3} at -3 only
        let r = ex53().singular_fibers();
        assert_eq!(r.count_sigma, 5);
        let kinds: Vec<(FiberLocation, FiberKind)> = r
            .entries
            .iter()
            .map(|e| (e.location.clone(), e.kind))
            .collect();
        assert!(kinds.contains(&(FiberLocation::Rational(int(-3)), FiberKind::I4)));
        assert!(kinds.contains(&(FiberLocation::Rational(int(-1)), FiberKind::PairI2)));
        assert!(kinds.contains(&(FiberLocation::Rational(int(3)), FiberKind::PairI2)));
    }

    #[test]
    fn group_law() {
        // y^2 = x^3 - x with 2-torsion (0,0), (1,0), (-1,0)
        let g = UniPoly::from_i64(&[0, -1, 0, 1]);
        let marked = [
            EPoint::affine(int(0), int(0)),
            EPoint::affine(int(1), int(0)),
            EPoint::affine(int(-1), int(0)),
            EPoint::Infinity,
        ];
        let e = MarkedEllipticCurve::new(g, marked).unwrap();
        let p = EPoint::affine(int(0), int(0));
        let q = EPoint::affine(int(1), int(0));
        assert_eq!(
            cubic_group_add(&e, &p, &q).unwrap(),
            EPoint::affine(int(-1), int(0))
        );
        assert_eq!(cubic_group_add(&e, &p, &p.negate()).unwrap(), EPoint::Infinity);
        assert_eq!(cubic_group_add(&e, &p, &EPoint::Infinity).unwrap(), p);
        assert_eq!(
            cubic_group_add(&e, &EPoint::affine(int(2), int(1)), &p),
            Err(CurveError::InvalidPoint)
        );
    }
}

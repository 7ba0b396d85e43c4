//! Period-map fibers and counterexample search on the image curve
//! a -> (j_F(a), j_K(a)).
//!
//! A node of the image is a pair of distinct parameters with the same value
//! under both j-maps; such pairs witness non-isomorphic surfaces with the
//! same Hodge data. Everything returned here is re-verified by exact
//! evaluation before being reported.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::curve::BiellipticCurve;
use crate::family::{j_functions, JPair};
use crate::qalg::{
    gcd_bivariate, level_set, poly_gcd, ratfn_eval, rational_roots, resultant_bivariate,
    squarefree1, squarefree_part, BiPoly, ProjRat, QalgError, Rat, RatFn, UniPoly, Var,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorelliError {
    /// The implicit eliminant vanished identically.
    DegenerateMap,
    Qalg(QalgError),
}

impl fmt::Display for TorelliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorelliError::DegenerateMap => write!(f, "degenerate map: eliminant is identically zero"),
            TorelliError::Qalg(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for TorelliError {}

impl From<QalgError> for TorelliError {
    fn from(e: QalgError) -> Self {
        TorelliError::Qalg(e)
    }
}

/// A pair of distinct parameters mapped to one point by both j-maps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NodePair {
    pub a1: ProjRat,
    pub a2: ProjRat,
    /// The common value (j_F, j_K).
    pub value: (ProjRat, ProjRat),
}

/// Exact solutions of j_F(a) = target and j_K(a) = target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSolution {
    pub target: ProjRat,
    pub side_f: BTreeSet<ProjRat>,
    pub side_k: BTreeSet<ProjRat>,
}

impl FiberSolution {
    /// Parameters appearing on both sides.
    pub fn coincidences(&self) -> BTreeSet<ProjRat> {
        self.side_f.intersection(&self.side_k).cloned().collect()
    }

    pub fn total(&self) -> usize {
        self.side_f.len() + self.side_k.len()
    }
}

/// All rational solutions of r(a) = v, including infinity; each solution is
/// verified by exact evaluation.
pub fn solve_level_set(r: &RatFn, v: &ProjRat) -> Result<BTreeSet<ProjRat>, QalgError> {
    let sols = level_set(r, v)?;
    for a in &sols {
        assert_eq!(&ratfn_eval(r, a), v, "level-set member failed re-verification");
    }
    Ok(sols)
}

/// The two level sets of the period target on the a-line.
pub fn period_fiber(c: &BiellipticCurve, target: &ProjRat) -> Result<FiberSolution, QalgError> {
    let jp = j_functions(c);
    Ok(FiberSolution {
        target: target.clone(),
        side_f: solve_level_set(&jp.j_f, target)?,
        side_k: solve_level_set(&jp.j_k, target)?,
    })
}

/// (num(a) den(b) - num(b) den(a)) / (a - b) as a bivariate polynomial in
/// (b; a) (first variable b, second variable a), primitive.
fn pair_locus(r: &RatFn) -> BiPoly {
    let n = r.num();
    let d = r.den();
    // N(a) D(b) - N(b) D(a) with first variable b
    let g = BiPoly::outer(d, n).sub(&BiPoly::outer(n, d));
    if g.is_zero() {
        return BiPoly::zero();
    }
    // divide by (b - a); sign is irrelevant for the zero locus
    g.div_exact_linear1(&UniPoly::x()).primitive1()
}

/// Exact check that both maps identify a1 and a2 (values in P^1).
fn is_node(jp: &JPair, a1: &ProjRat, a2: &ProjRat) -> bool {
    a1 != a2
        && ratfn_eval(&jp.j_f, a1) == ratfn_eval(&jp.j_f, a2)
        && ratfn_eval(&jp.j_k, a1) == ratfn_eval(&jp.j_k, a2)
}

/// Finite-chart candidate pairs from the common zeros of the two pair loci.
fn affine_node_candidates(jf: &RatFn, jk: &RatFn) -> Result<Vec<(Rat, Rat)>, QalgError> {
    let mut bf = pair_locus(jf);
    let mut bk = pair_locus(jk);
    if bf.is_zero() || bk.is_zero() {
        return Ok(vec![]);
    }
    let mut elim = resultant_bivariate(&bf, &bk, Var::First)?;
    if elim.is_zero() {
        // A vanishing eliminant means a common factor, i.e. a non-isolated
        // coincidence locus; isolated pairs live on the reduced complements.
        let g = gcd_bivariate(&bf, &bk);
        if g.deg1().unwrap_or(0) > 0 {
            bf = bf.div_exact1(&g.primitive1()).primitive1();
            bk = bk.div_exact1(&g.primitive1()).primitive1();
        }
        if bf.deg1().unwrap_or(0) == 0 || bk.deg1().unwrap_or(0) == 0 {
            // One side is free of b after reduction: pairs come from its
            // a-roots crossed with the b-roots of the other side.
            let (flat, other) = if bf.deg1().unwrap_or(0) == 0 {
                (bf.coeff1(0), bk)
            } else {
                (bk.coeff1(0), bf)
            };
            if flat.deg().unwrap_or(0) == 0 {
                return Ok(vec![]);
            }
            let mut out = Vec::new();
            for a0 in rational_roots(&flat)? {
                let ub = other.eval2(&a0);
                if ub.is_zero() || ub.deg().unwrap_or(0) == 0 {
                    continue;
                }
                for b0 in rational_roots(&ub)? {
                    out.push((a0.clone(), b0));
                }
            }
            return Ok(out);
        }
        elim = resultant_bivariate(&bf, &bk, Var::First)?;
    }
    let mut out = Vec::new();
    if elim.deg().unwrap_or(0) == 0 {
        return Ok(out);
    }
    for a0 in rational_roots(&squarefree_part(&elim))? {
        let u = bf.eval2(&a0);
        let v = bk.eval2(&a0);
        if u.is_zero() || v.is_zero() {
            continue;
        }
        let g = poly_gcd(&u, &v);
        if g.deg().unwrap_or(0) == 0 {
            continue;
        }
        for b0 in rational_roots(&g)? {
            out.push((a0.clone(), b0));
        }
    }
    Ok(out)
}

/// All rational node pairs of the image curve, canonically ordered.
///
/// The search runs in the affine chart, again in the chart a = shift + 1/x
/// to cover infinity, and closes with an exact check of pairs through
/// a = infinity; every candidate is re-verified by evaluation.
pub fn find_nodes_with_shift(
    c: &BiellipticCurve,
    shift: &Rat,
) -> Result<Vec<NodePair>, QalgError> {
    let jp = j_functions(c);
    let mut found: BTreeMap<(ProjRat, ProjRat), (ProjRat, ProjRat)> = BTreeMap::new();
    let mut record = |a1: ProjRat, a2: ProjRat| {
        if !is_node(&jp, &a1, &a2) {
            return;
        }
        let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let value = (ratfn_eval(&jp.j_f, &lo), ratfn_eval(&jp.j_k, &lo));
        found.insert((lo, hi), value);
    };

    for (a0, b0) in affine_node_candidates(&jp.j_f, &jp.j_k)? {
        record(ProjRat::Finite(a0), ProjRat::Finite(b0));
    }

    // second chart: a = shift + 1/x, with x = 0 mapped to infinity
    let jf2 = crate::qalg::compose_mobius(&jp.j_f, shift, &Rat::one(), &Rat::one(), &Rat::zero());
    let jk2 = crate::qalg::compose_mobius(&jp.j_k, shift, &Rat::one(), &Rat::one(), &Rat::zero());
    let back = |x: Rat| -> ProjRat {
        if x.is_zero() {
            ProjRat::Inf
        } else {
            ProjRat::Finite(shift + Rat::one() / x)
        }
    };
    for (a0, b0) in affine_node_candidates(&jf2, &jk2)? {
        record(back(a0), back(b0));
    }

    // pairs through infinity, handled exactly
    let u_inf = ratfn_eval(&jp.j_f, &ProjRat::Inf);
    let v_inf = ratfn_eval(&jp.j_k, &ProjRat::Inf);
    let on_f = solve_level_set(&jp.j_f, &u_inf)?;
    let on_k = solve_level_set(&jp.j_k, &v_inf)?;
    for a in on_f.intersection(&on_k) {
        if !a.is_inf() {
            record(a.clone(), ProjRat::Inf);
        }
    }

    Ok(found
        .into_iter()
        .map(|((a1, a2), value)| NodePair { a1, a2, value })
        .collect())
}

/// Node search with the default second-chart shift.
pub fn find_nodes(c: &BiellipticCurve) -> Result<Vec<NodePair>, QalgError> {
    find_nodes_with_shift(c, &Rat::one())
}

/// Whether (u, v) lies on the image of a -> (j_F(a), j_K(a)) over the
/// algebraic closure: a common root of the two fiber polynomials, or the
/// value at infinity.
pub fn image_contains(c: &BiellipticCurve, u: &ProjRat, v: &ProjRat) -> bool {
    let jp = j_functions(c);
    let p = match u {
        ProjRat::Finite(val) => jp.j_f.num() - &jp.j_f.den().scale(val),
        ProjRat::Inf => jp.j_f.den().clone(),
    };
    let q = match v {
        ProjRat::Finite(val) => jp.j_k.num() - &jp.j_k.den().scale(val),
        ProjRat::Inf => jp.j_k.den().clone(),
    };
    if !p.is_zero() && !q.is_zero() && poly_gcd(&p, &q).deg().unwrap_or(0) >= 1 {
        return true;
    }
    ratfn_eval(&jp.j_f, &ProjRat::Inf) == *u && ratfn_eval(&jp.j_k, &ProjRat::Inf) == *v
}

/// Whether a rational map of P^1 is ramified at infinity.
fn ramified_at_inf(r: &RatFn) -> bool {
    let deg = r.num().deg().unwrap_or(0).max(r.den().deg().unwrap_or(0));
    match r.value_at_inf() {
        ProjRat::Inf => r.num().deg().unwrap_or(0) >= r.den().deg().unwrap_or(0) + 2,
        ProjRat::Finite(v) => {
            let p = r.num() - &r.den().scale(&v);
            deg >= p.deg().unwrap_or(0) + 2
        }
    }
}

/// Whether j_F and j_K share a ramification point on the a-line, including
/// a shared point at infinity. Finite ramification points are the roots of
/// the derivative numerator num' den - num den', compared square-free.
pub fn common_ramification(c: &BiellipticCurve) -> bool {
    let jp = j_functions(c);
    let wronskian = |r: &RatFn| -> UniPoly {
        let w = &(&r.num().derivative() * r.den()) - &(r.num() * &r.den().derivative());
        squarefree_part(&w)
    };
    let wf = wronskian(&jp.j_f);
    let wk = wronskian(&jp.j_k);
    if poly_gcd(&wf, &wk).deg().unwrap_or(0) >= 1 {
        return true;
    }
    ramified_at_inf(&jp.j_f) && ramified_at_inf(&jp.j_k)
}

/// Lagrange interpolation through distinct sample points.
fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &UniPoly::new(vec![-xj.clone(), Rat::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// The implicit eliminant Phi(u, v) = Res_a(num_F - u den_F, num_K - v den_K),
/// by interpolation of the fixed-size Sylvester determinant over a grid.
fn image_eliminant(jp: &JPair) -> BiPoly {
    let mf = jp.j_f.num().deg().unwrap_or(0).max(jp.j_f.den().deg().unwrap_or(0));
    let mk = jp.j_k.num().deg().unwrap_or(0).max(jp.j_k.den().deg().unwrap_or(0));
    let du = mk; // u appears linearly in each of the mk rows of the first block
    let dv = mf;
    let u_samples: Vec<Rat> = (0..=du as i64).map(|i| Rat::from_integer(i.into())).collect();
    let v_samples: Vec<Rat> = (0..=dv as i64).map(|i| Rat::from_integer(i.into())).collect();
    // per u-sample, interpolate in v
    let mut per_u: Vec<UniPoly> = Vec::with_capacity(u_samples.len());
    for u0 in &u_samples {
        let pu = jp.j_f.num() - &jp.j_f.den().scale(u0);
        let mut vals = Vec::with_capacity(v_samples.len());
        for v0 in &v_samples {
            let qv = jp.j_k.num() - &jp.j_k.den().scale(v0);
            vals.push((v0.clone(), sylvester_det_formal(&pu, mf, &qv, mk)));
        }
        per_u.push(interpolate(&vals));
    }
    // assemble: coefficient of v^j as a polynomial in u
    let maxj = per_u.iter().filter_map(|p| p.deg()).max().map_or(0, |d| d);
    let mut v_rows: Vec<UniPoly> = Vec::with_capacity(maxj + 1);
    for j in 0..=maxj {
        let pts: Vec<(Rat, Rat)> = u_samples
            .iter()
            .zip(&per_u)
            .map(|(u0, p)| (u0.clone(), p.coeff(j)))
            .collect();
        v_rows.push(interpolate(&pts));
    }
    // rows are indexed by v-power with coefficients in u: first variable v
    BiPoly::new(v_rows).transpose()
}

/// Determinant of the Sylvester matrix at the stated formal degrees.
fn sylvester_det_formal(p: &UniPoly, dp: usize, q: &UniPoly, dq: usize) -> Rat {
    let size = dp + dq;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    for row in 0..dq {
        for k in 0..=dp {
            mat[row][row + k] = p.coeff(dp - k);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            mat[dq + row][row + k] = q.coeff(dq - k);
        }
    }
    crate::qalg::poly::det_rat(mat)
}

/// Proportionality test p = +-lambda q over Q.
fn proportional(p: &BiPoly, q: &BiPoly) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    if p.deg1() != q.deg1() || p.deg2() != q.deg2() {
        return false;
    }
    // find the scale on the first nonzero coefficient pair
    let d1 = p.deg1().unwrap();
    let mut scale: Option<Rat> = None;
    for i in 0..=d1 {
        let (pi, qi) = (p.coeff1(i), q.coeff1(i));
        let n = pi.deg().map_or(0, |d| d + 1).max(qi.deg().map_or(0, |d| d + 1));
        for j in 0..n {
            let (a, b) = (pi.coeff(j), qi.coeff(j));
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (false, false) => match &scale {
                    None => scale = Some(a / b),
                    Some(s) => {
                        if a != s * &b {
                            return false;
                        }
                    }
                },
                _ => return false,
            }
        }
    }
    scale.is_some()
}

/// Whether the image of a -> (j_F(a), j_K(a)) is symmetric under swapping
/// the two coordinates: the reduced implicit eliminant, with content and
/// single-variable factors removed, is proportional to its own transpose.
///
/// A cheap exact refutation runs first: if a swapped image point fails
/// membership, the images already differ and the eliminant is skipped.
pub fn image_symmetry(c: &BiellipticCurve) -> Result<bool, TorelliError> {
    let jp = j_functions(c);
    for k in -4i64..=4 {
        let a = ProjRat::Finite(Rat::from_integer(k.into()));
        let u = ratfn_eval(&jp.j_f, &a);
        let v = ratfn_eval(&jp.j_k, &a);
        if !image_contains(c, &v, &u) {
            return Ok(false);
        }
    }
    let phi = image_eliminant(&jp);
    if phi.is_zero() {
        return Err(TorelliError::DegenerateMap);
    }
    // remove v-only factors (content in u-direction) and u-only factors
    let phi = phi.primitive1(); // content over the u-power coefficients: v-only factors
    let phi = phi.transpose().primitive1(); // now first var v: removes u-only
    let phi = squarefree1(&phi); // square-free in v; contents already stripped
    let phi = phi.primitive1();
    // phi currently has first variable v; its transpose swaps u and v
    Ok(proportional(&phi, &phi.transpose()))
}

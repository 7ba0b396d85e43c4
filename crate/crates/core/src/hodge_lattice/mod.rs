//! Integral lattice realization of the surface/abelian-surface comparison.
//!
//! Everything lives in one rank-14 ambient lattice with ordered basis
//! (dh, d0, d1, ..., d6, E12, E13, E14, E23, E24, E34): the invariant part
//! of the second cohomology of the blown-up symmetric square. Two bilinear
//! forms are carried explicitly: the ambient pairing and its half, which is
//! the intersection form on both the surface side and the abelian side.
//!
//! The surface lattice is the span of the fourteen gamma generators; joining
//! the half-sum of the four section classes gives the overlattice H_Y. On
//! the abelian side the span of the six wedge classes and the eight norm
//! classes, joined with the glue vector vt, gives H_A. The module verifies
//! that the two overlattices coincide, that the dual sublattices reconstruct
//! each other, and that the eleven curve classes correspond entry by entry.

pub mod snf;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::qalg::poly::det_rat;
use crate::qalg::{Int, Rat};

use snf::{in_rowspan, left_kernel_basis, mod2_kernel, rowspan_basis, rowspan_equal};

pub use snf::{smith_normal_form, IMat, SnfResult};

pub const DIM: usize = 14;

pub const AMBIENT_LABELS: [&str; DIM] = [
    "dh", "d0", "d1", "d2", "d3", "d4", "d5", "d6", "E12", "E13", "E14", "E23", "E24", "E34",
];

/// Gram matrix of the ambient pairing on the fixed basis.
#[rustfmt::skip]
const AMBIENT_GRAM: [[i64; DIM]; DIM] = [
    [ 1, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0,-1, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0,-2, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0,-2, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0,-2, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0,-2, 0, 0, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0,-2,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0,-2, 0,  0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,  0,-1, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,  0, 0,-1, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0,-1, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0,-1, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0,-1],
];

/// The fixed rank-14 ambient space with its integer pairing.
#[derive(Clone, Debug)]
pub struct AmbientSpace {
    pub labels: [&'static str; DIM],
    gram: [[i64; DIM]; DIM],
}

/// A vector in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVec(pub Vec<Rat>);

impl QVec {
    pub fn from_i64(v: [i64; DIM]) -> Self {
        QVec(v.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn zero() -> Self {
        QVec(vec![Rat::zero(); DIM])
    }

    pub fn add(&self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> QVec {
        QVec(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.denom().is_one())
    }

    pub fn to_int_row(&self) -> Vec<Int> {
        assert!(self.is_integral(), "vector is not integral");
        self.0.iter().map(|c| c.numer().clone()).collect()
    }

    /// Integer linear combination of basis vectors.
    pub fn combination(coeffs: &[Rat], basis: &[QVec]) -> QVec {
        assert_eq!(coeffs.len(), basis.len());
        let mut acc = QVec::zero();
        for (c, b) in coeffs.iter().zip(basis) {
            acc = acc.add(&b.scale(c));
        }
        acc
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::qalg::format_rat(c))?;
        }
        write!(f, ")")
    }
}

pub fn ambient() -> AmbientSpace {
    AmbientSpace {
        labels: AMBIENT_LABELS,
        gram: AMBIENT_GRAM,
    }
}

impl AmbientSpace {
    /// Full ambient pairing.
    pub fn pairing(&self, x: &QVec, y: &QVec) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..DIM {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if self.gram[i][j] == 0 {
                    continue;
                }
                acc += &x.0[i] * &y.0[j] * Rat::from_integer(self.gram[i][j].into());
            }
        }
        acc
    }

    /// The halved pairing: the intersection form on the surface and abelian
    /// sides (pulling back doubles intersection numbers).
    pub fn pairing_half(&self, x: &QVec, y: &QVec) -> Rat {
        self.pairing(x, y) / Rat::from_integer(2.into())
    }
}

/// The fourteen generators of the surface lattice in ambient coordinates.
#[rustfmt::skip]
pub fn gamma_basis() -> Vec<QVec> {
    vec![
        QVec::from_i64([0, 0, 1, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 1, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 1, 0, 0, 0,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 0, 1, 0, 0,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 0, 0, 1, 0,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 1,  0, 0, 0, 0, 0, 0]),
        QVec::from_i64([1, 0, 0, 0, 0, 0, 0, 0, -1,-1,-1, 0, 0, 0]),
        QVec::from_i64([1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0,-1,-1, 0]),
        QVec::from_i64([1, 0, 0, 0, 0, 0, 0, 0,  0,-1, 0,-1, 0,-1]),
        QVec::from_i64([1, 0, 0, 0, 0, 0, 0, 0,  0, 0,-1, 0,-1,-1]),
        QVec::from_i64([1, 1, 0,-1, 0, 0, 0, 0,  1, 1, 1, 1, 1, 1]),
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  2, 0, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0, 2, 0, 0, 0, 0]),
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 2, 0, 0, 0]),
    ]
}

/// The intersection matrix of the gamma generators under the halved pairing,
/// as printed.
#[rustfmt::skip]
pub const GAMMA_GRAM_PRINTED: [[i64; DIM]; DIM] = [
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [ 0,-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [ 0, 0, 0,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [ 0, 0,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0,-1, 0, 0, 0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0,-1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [ 0, 0, 0, 0, 0, 0,-1, 0, 0, 0, 2, 1, 1, 1],
    [ 0, 0, 0, 0, 0, 0, 0,-1, 0, 0, 2, 1, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0,-1, 0, 2, 0, 1, 0],
    [ 0, 0, 0, 0, 0, 0, 0, 0, 0,-1, 2, 0, 0, 1],
    [ 0, 1, 0, 0, 0, 0, 2, 2, 2, 2,-4,-1,-1,-1],
    [ 0, 0, 0, 0, 0, 0, 1, 1, 0, 0,-1,-2, 0, 0],
    [ 0, 0, 0, 0, 0, 0, 1, 0, 1, 0,-1, 0,-2, 0],
    [ 0, 0, 0, 0, 0, 0, 1, 0, 0, 1,-1, 0, 0,-2],
];

/// A curve class on the surface with both coordinate presentations.
#[derive(Clone, Debug)]
pub struct CurveClass {
    pub name: &'static str,
    /// Coordinates in the gamma basis.
    pub gamma: [i64; DIM],
    /// Ambient coordinates.
    pub ambient: QVec,
}

/// The twelve classes of the distinguished curve configuration: the
/// canonical fiber, the branch curve, four sections, six exceptional curves.
pub fn curve_classes() -> Vec<CurveClass> {
    let basis = gamma_basis();
    let mk = |name: &'static str, gamma: [i64; DIM]| -> CurveClass {
        let coeffs: Vec<Rat> = gamma.iter().map(|&c| Rat::from_integer(c.into())).collect();
        CurveClass {
            name,
            gamma,
            ambient: QVec::combination(&coeffs, &basis),
        }
    };
    vec![
        mk("K_Y", [1, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 1, 1]),
        mk("Delta_sigma", [0, 0, 0, 0, 0, 0, -3, 1, 1, 1, 2, -2, -2, -2]),
        mk("Gamma_1", [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        mk("Gamma_2", [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
        mk("Gamma_3", [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        mk("Gamma_4", [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        mk("E_12", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        mk("E_13", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        mk("E_14", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        mk("E_34", [0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0, 1, 0, 0]),
        mk("E_24", [0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 1, 0]),
        mk("E_23", [0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0, 0, 1]),
    ]
}

/// Half-sum of the four section classes: the surface-side glue vector.
pub fn gamma_tilde() -> QVec {
    let b = gamma_basis();
    b[6].add(&b[7])
        .add(&b[8])
        .add(&b[9])
        .scale(&Rat::new(Int::one(), Int::from(2)))
}

/// Ambient images of the six wedge-basis classes of the abelian side, in
/// the order e12, e13, e14, e23, e24, e34 over the ordered quadruple
/// (alpha_1, alpha_2 - alpha_3, beta_1, beta_2 - beta_3).
#[rustfmt::skip]
pub fn wedge_basis_ambient() -> Vec<QVec> {
    vec![
        QVec::from_i64([0, 0, 0, 0, 1, 0, 0, 0,  0, 0, 0, 0, 0, 0]), // e12 -> d3
        QVec::from_i64([1, 1, 0, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]), // e13 -> dh + d0
        QVec::from_i64([0, 0, 0, 0, 0, 0, 1, 0,  0, 0, 0, 0, 0, 0]), // e14 -> d5
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 1,  0, 0, 0, 0, 0, 0]), // e23 -> d6
        QVec::from_i64([2, 0, 1,-1, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]), // e24 -> 2dh + d1 - d2
        QVec::from_i64([0, 0, 0, 0, 0, 1, 0, 0,  0, 0, 0, 0, 0, 0]), // e34 -> d4
    ]
}

/// Ambient images of the eight norm classes v1..v8.
#[rustfmt::skip]
pub fn norm_classes_ambient() -> Vec<QVec> {
    vec![
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1]), // v1 = E34 - E12
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0,-1, 0, 0, 1, 0]), // v2 = E24 - E13
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0, 0,-1, 1, 0, 0]), // v3 = E23 - E14
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  1, 0, 0, 0, 0, 1]), // v4 = E34 + E12
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0, 1, 0, 0, 1, 0]), // v5 = E24 + E13
        QVec::from_i64([0, 0, 0, 0, 0, 0, 0, 0,  0, 0, 1, 1, 0, 0]), // v6 = E23 + E14
        QVec::from_i64([1, 1, 0,-1, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]), // v7 = branch class
        QVec::from_i64([1, 1, 1, 0, 0, 0, 0, 0,  0, 0, 0, 0, 0, 0]), // v8
    ]
}

/// Ambient image of the abelian-side glue vector.
pub fn v_tilde_ambient() -> QVec {
    QVec::from_i64([1, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0])
}

/// Ambient image of the polarization class (the image of the curve).
pub fn polarization_class_ambient() -> QVec {
    QVec::from_i64([4, 2, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])
}

/// Printed basis of the orthogonal sublattice H'_Y, in ambient coordinates
/// (computed from its gamma-coordinate expression).
pub fn hy_prime_printed_basis() -> Vec<QVec> {
    let g = gamma_basis();
    let gt = gamma_tilde();
    let b1 = g[0].add(&gt).add(&g[10]);
    let b2 = g[1]
        .sub(&gt.scale(&Rat::from_integer(3.into())))
        .add(&g[7].scale(&Rat::from_integer(2.into())))
        .add(&g[8].scale(&Rat::from_integer(2.into())))
        .add(&g[9].scale(&Rat::from_integer(2.into())))
        .add(&g[10])
        .sub(&g[11])
        .sub(&g[12])
        .sub(&g[13]);
    vec![b1, b2, g[2].clone(), g[3].clone(), g[4].clone(), g[5].clone()]
}

/// Independent Gram of wedge classes: <a^b, c^d> = -det of the coordinate
/// rows, i.e. minus the coefficient on the orientation class, normalized by
/// the polarization class having square 4.
pub fn wedge_pairing_independent(pairs: &[(usize, usize)]) -> Vec<Vec<Rat>> {
    let n = pairs.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate() {
            out[i][j] = Rat::from_integer(Int::from(-wedge_sign(a, b, c, d)));
        }
    }
    out
}

/// Sign of e_a ^ e_b ^ e_c ^ e_d against e_1 ^ e_2 ^ e_3 ^ e_4 (0 on repeats).
fn wedge_sign(a: usize, b: usize, c: usize, d: usize) -> i64 {
    let idx = [a, b, c, d];
    let mut seen = [false; 5];
    for &i in &idx {
        if seen[i] {
            return 0;
        }
        seen[i] = true;
    }
    let mut sign = 1i64;
    let mut v = idx;
    for i in 0..4 {
        for j in 0..3 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// A lattice presented by generators in the ambient space together with its
/// Gram matrix under the halved pairing.
#[derive(Clone, Debug)]
pub struct GramLattice {
    pub generators: Vec<QVec>,
    pub gram: Vec<Vec<Rat>>,
}

impl GramLattice {
    pub fn from_generators(amb: &AmbientSpace, generators: Vec<QVec>) -> Self {
        let n = generators.len();
        let mut gram = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = amb.pairing_half(&generators[i], &generators[j]);
            }
        }
        GramLattice { generators, gram }
    }

    /// An abstract lattice given by a Gram matrix alone.
    pub fn from_gram(gram: Vec<Vec<Rat>>) -> Self {
        GramLattice {
            generators: vec![],
            gram,
        }
    }

    pub fn from_gram_i64(rows: &[&[i64]]) -> Self {
        GramLattice::from_gram(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> Rat {
        det_rat(self.gram.clone())
    }

    /// (positive, negative) inertia by exact symmetric reduction; the form
    /// must be nondegenerate.
    pub fn signature(&self) -> Result<(usize, usize), LatticeError> {
        let diag = symmetric_diagonalize(self.gram.clone());
        let mut pos = 0;
        let mut neg = 0;
        for d in diag {
            if d.is_zero() {
                return Err(LatticeError::Degenerate);
            } else if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        Ok((pos, neg))
    }

    pub fn is_integral(&self) -> bool {
        self.gram
            .iter()
            .flatten()
            .all(|c| c.denom().is_one())
    }

    /// True when every diagonal entry is even (only meaningful if integral).
    pub fn is_even(&self) -> bool {
        self.is_integral()
            && self
                .gram
                .iter()
                .enumerate()
                .all(|(i, row)| (row[i].numer() % Int::from(2)).is_zero())
    }

    fn gram_int(&self) -> Option<IMat> {
        if !self.is_integral() {
            return None;
        }
        Some(IMat::from_rows(
            self.gram
                .iter()
                .map(|r| r.iter().map(|c| c.numer().clone()).collect())
                .collect(),
        ))
    }
}

/// Exact congruent diagonalization of a symmetric rational matrix; returns
/// the diagonal entries.
fn symmetric_diagonalize(mut m: Vec<Vec<Rat>>) -> Vec<Rat> {
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // choose a pivot with nonzero diagonal, manufacturing one if needed
        let pivot = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonal zero: find off-diagonal nonzero and fold
                let mut found = None;
                'search: for &i in &active {
                    for &j in &active {
                        if i != j && !m[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    None => {
                        // block is zero
                        for _ in &active {
                            diag.push(Rat::zero());
                        }
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j makes m[i][i] = 2 m[i][j]
                        for k in 0..n {
                            let t = &m[i][k] + &m[j][k];
                            m[i][k] = t;
                        }
                        for k in 0..n {
                            let t = &m[k][i] + &m[k][j];
                            m[k][i] = t;
                        }
                        i
                    }
                }
            }
        };
        let pv = m[p][p].clone();
        diag.push(pv.clone());
        active.retain(|&i| i != p);
        let others: Vec<usize> = active.clone();
        for &i in &others {
            if m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &pv;
            for k in 0..n {
                let t = &m[i][k] - &f * &m[p][k];
                m[i][k] = t;
            }
            for k in 0..n {
                let t = &m[k][i] - &f * &m[k][p];
                m[k][i] = t;
            }
        }
    }
    diag
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// A verification failed while building the overlattices; the string
    /// names the first failing identity.
    Inconsistent(String),
    /// Degenerate Gram matrix where a nondegenerate one is required.
    Degenerate,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::Inconsistent(s) => write!(f, "construction inconsistency: {}", s),
            LatticeError::Degenerate => write!(f, "degenerate Gram matrix"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// Invariant data of an integral nondegenerate lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscGroupData {
    pub invariant_factors: Vec<Int>,
    pub determinant: Rat,
    pub signature: (usize, usize),
}

/// One side of an invariant comparison.
#[derive(Clone, Debug)]
pub struct CompareSide {
    pub rank: usize,
    pub signature: (usize, usize),
    pub determinant: Rat,
    pub invariant_factors: Option<Vec<Int>>,
    /// (order, norm of a glue generator mod 2Z) for each invariant factor > 1.
    pub disc_form: Option<Vec<(Int, Rat)>>,
    pub even: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Some computed invariant separates the two lattices.
    Distinguished(String),
    /// No computed invariant separates them (not an isometry proof).
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct CompareReport {
    pub left: CompareSide,
    pub right: CompareSide,
    pub verdict: Verdict,
}

fn compare_side(l: &GramLattice) -> Result<CompareSide, LatticeError> {
    let signature = l.signature()?;
    let det = l.det();
    if det.is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let (invariant_factors, disc_form) = match l.gram_int() {
        None => (None, None),
        Some(g) => {
            let s = smith_normal_form(&g);
            let mut glue = Vec::new();
            for (k, d) in s.invariant_factors.iter().enumerate() {
                if d.is_one() {
                    continue;
                }
                // glue generator: column k of V divided by d; its norm mod 2Z
                let col: Vec<Rat> = (0..g.rows())
                    .map(|i| Rat::new(s.v.get(i, k).clone(), d.clone()))
                    .collect();
                let mut norm = Rat::zero();
                for i in 0..g.rows() {
                    for j in 0..g.cols() {
                        norm += &col[i] * &col[j] * &l.gram[i][j];
                    }
                }
                glue.push((d.clone(), mod_2z(&norm)));
            }
            (Some(s.invariant_factors), Some(glue))
        }
    };
    Ok(CompareSide {
        rank: l.rank(),
        signature,
        determinant: det,
        invariant_factors,
        disc_form,
        even: l.is_even(),
    })
}

fn mod_2z(x: &Rat) -> Rat {
    let two = Rat::from_integer(2.into());
    let mut r = x.clone();
    // reduce into [0, 2)
    let q = (&r / &two).floor();
    r -= q * two;
    r
}

/// Rank, signature, determinant, discriminant-group and discriminant-form
/// comparison of two nondegenerate lattices. The verdict is `Distinguished`
/// only when a computed invariant genuinely separates the lattices; with no
/// full isometry test for indefinite lattices, matching invariants yield
/// `Inconclusive`.
pub fn invariant_compare(l1: &GramLattice, l2: &GramLattice) -> Result<CompareReport, LatticeError> {
    let left = compare_side(l1)?;
    let right = compare_side(l2)?;
    let verdict = decide(&left, &right);
    Ok(CompareReport {
        left,
        right,
        verdict,
    })
}

fn decide(a: &CompareSide, b: &CompareSide) -> Verdict {
    if a.rank != b.rank {
        return Verdict::Distinguished("rank".into());
    }
    if a.signature != b.signature {
        return Verdict::Distinguished("signature".into());
    }
    if a.determinant.clone().abs() != b.determinant.clone().abs() {
        return Verdict::Distinguished("determinant magnitude".into());
    }
    if let (Some(fa), Some(fb)) = (&a.invariant_factors, &b.invariant_factors) {
        if fa != fb {
            return Verdict::Distinguished("discriminant-group invariant factors".into());
        }
    }
    // Discriminant-form values are generator-dependent on odd lattices, so
    // they decide only for even lattices with cyclic discriminant group.
    if a.even && b.even {
        if let (Some(da), Some(db)) = (&a.disc_form, &b.disc_form) {
            if da.len() == 1 && db.len() == 1 && da[0].0 == db[0].0 {
                let orbit = |d: &Int, q: &Rat| -> Vec<Rat> {
                    let mut out = Vec::new();
                    let mut u = Int::one();
                    while &u < d {
                        if num_integer::Integer::gcd(&u, d).is_one() {
                            out.push(mod_2z(&(q * Rat::from_integer(&u * &u))));
                        }
                        u += 1;
                    }
                    out.sort();
                    out.dedup();
                    out
                };
                let oa = orbit(&da[0].0, &da[0].1);
                let ob = orbit(&db[0].0, &db[0].1);
                if oa.iter().all(|x| !ob.contains(x)) {
                    return Verdict::Distinguished("discriminant form".into());
                }
            }
        }
    }
    Verdict::Inconclusive
}

/// All overlattice data with every structural identity verified.
#[derive(Clone, Debug)]
pub struct OverlatticeData {
    /// Basis of the overlattice H_Y = surface lattice + Z gamma~.
    pub h_y: GramLattice,
    /// The orthogonal rank-6 sublattice carrying the abelian-side form.
    pub h_y_prime: GramLattice,
    /// The polarization class c_Y inside H'_Y (ambient coordinates).
    pub c_y: QVec,
    /// The 8 norm classes as a lattice (<-1>^8).
    pub h_norm: GramLattice,
    /// Basis of the overlattice H_A = (wedge + norm) + Z v~.
    pub h_a: GramLattice,
    /// The dual sublattice of H_A, equal to the surface lattice.
    pub h_a_prime: GramLattice,
    /// The curve-class correspondence: (name, surface-side ambient class,
    /// abelian-side ambient class); the two coincide entry by entry.
    pub correspondence: Vec<(&'static str, QVec, QVec)>,
    /// Index of the surface lattice in H_Y and of wedge+norm in H_A.
    pub glue_index_y: Int,
    pub glue_index_a: Int,
}

fn fail(msg: impl Into<String>) -> LatticeError {
    LatticeError::Inconsistent(msg.into())
}

fn rows_from_qvecs(vs: &[QVec]) -> Result<IMat, LatticeError> {
    let rows: Result<Vec<Vec<Int>>, _> = vs
        .iter()
        .map(|v| {
            if v.is_integral() {
                Ok(v.to_int_row())
            } else {
                Err(fail("expected integral ambient coordinates"))
            }
        })
        .collect();
    Ok(IMat::from_rows(rows?))
}

fn qvecs_from_rows(rows: &[Vec<Int>]) -> Vec<QVec> {
    rows.iter()
        .map(|r| QVec(r.iter().map(|x| Rat::from_integer(x.clone())).collect()))
        .collect()
}

/// Builds H_Y, H'_Y, c_Y, H, H_A, H'_A and the curve-class correspondence,
/// verifying every identity; the error names the first failing one.
pub fn build_overlattices() -> Result<OverlatticeData, LatticeError> {
    let amb = ambient();
    let gammas = gamma_basis();
    let gt = gamma_tilde();

    // 1. the surface-side glue vector is integral in the ambient lattice
    if !gt.is_integral() {
        return Err(fail("gamma~ is not integral in the ambient lattice"));
    }

    // 2. the computed Gram of the gamma generators equals the printed matrix
    let gamma_lattice = GramLattice::from_generators(&amb, gammas.clone());
    for i in 0..DIM {
        for j in 0..DIM {
            if gamma_lattice.gram[i][j] != Rat::from_integer(GAMMA_GRAM_PRINTED[i][j].into()) {
                return Err(fail(format!(
                    "gamma Gram entry ({}, {}) differs from the printed matrix",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    // 3. curve classes: ambient forms, self-intersections, section pairing
    let classes = curve_classes();
    let class = |name: &str| -> &CurveClass {
        classes.iter().find(|c| c.name == name).expect("class name")
    };
    let ky = class("K_Y");
    if ky.ambient != QVec::from_i64([2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]) {
        return Err(fail("K_Y ambient class is not 2dh + d1 + d2"));
    }
    let expect_sq = [
        ("K_Y", 0i64),
        ("Delta_sigma", -4),
        ("Gamma_1", -1),
        ("Gamma_2", -1),
        ("Gamma_3", -1),
        ("Gamma_4", -1),
        ("E_12", -2),
        ("E_13", -2),
        ("E_14", -2),
        ("E_23", -2),
        ("E_24", -2),
        ("E_34", -2),
    ];
    for (name, sq) in expect_sq {
        let c = class(name);
        if amb.pairing_half(&c.ambient, &c.ambient) != Rat::from_integer(sq.into()) {
            return Err(fail(format!("self-intersection of {} is not {}", name, sq)));
        }
    }
    if amb.pairing_half(&ky.ambient, &class("Gamma_1").ambient) != Rat::one() {
        return Err(fail("section Gamma_1 does not meet the fiber class once"));
    }

    // 4. H_Y = gamma span + Z gamma~, as an integer ambient lattice
    let mut hy_gens = gammas.clone();
    hy_gens.push(gt.clone());
    let hy_rows = rows_from_qvecs(&hy_gens)?;
    let hy_basis_rows = rowspan_basis(&hy_rows);
    if hy_basis_rows.len() != DIM {
        return Err(fail("H_Y does not have full rank"));
    }
    let hy_basis = qvecs_from_rows(&hy_basis_rows);
    let h_y = GramLattice::from_generators(&amb, hy_basis.clone());

    // 5. glue index [H_Y : gamma span] = 2 via Gram determinant ratio
    let det_gamma = gamma_lattice.det();
    let det_hy = h_y.det();
    let ratio = &det_gamma / &det_hy;
    if ratio != Rat::from_integer(4.into()) {
        return Err(fail("index of the surface lattice in H_Y is not 2"));
    }
    let glue_index_y = Int::from(2);

    // 6. c_Y = [K_Y + Delta_sigma], with square 4 (the (1,2)-polarization)
    let c_y = ky.ambient.add(&class("Delta_sigma").ambient);
    if amb.pairing_half(&c_y, &c_y) != Rat::from_integer(4.into()) {
        return Err(fail("c_Y^2 is not 4"));
    }

    // 7. H'_Y: the printed basis spans exactly the orthogonal complement in
    //    H_Y of the six exceptional classes, the branch class, and K_Y - gamma~
    let printed = hy_prime_printed_basis();
    let mut constraints: Vec<QVec> = ["E_12", "E_13", "E_14", "E_23", "E_24", "E_34", "Delta_sigma"]
        .iter()
        .map(|n| class(n).ambient.clone())
        .collect();
    constraints.push(ky.ambient.sub(&gt));
    // pairing matrix of the H_Y basis against the constraints (ambient form)
    let pairing_rows: Vec<Vec<Int>> = hy_basis
        .iter()
        .map(|b| {
            constraints
                .iter()
                .map(|c| {
                    let v = amb.pairing(b, c);
                    assert!(v.denom().is_one());
                    v.numer().clone()
                })
                .collect()
        })
        .collect();
    let kernel = left_kernel_basis(&IMat::from_rows(pairing_rows));
    if kernel.len() != 6 {
        return Err(fail("orthogonal sublattice H'_Y does not have rank 6"));
    }
    // kernel rows are coefficients over hy_basis; convert to ambient
    let kernel_ambient: Vec<QVec> = kernel
        .iter()
        .map(|coeffs| {
            let rats: Vec<Rat> = coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
            QVec::combination(&rats, &hy_basis)
        })
        .collect();
    let printed_rows = rows_from_qvecs(&printed)?;
    let kernel_rows = rows_from_qvecs(&kernel_ambient)?;
    if !rowspan_equal(&printed_rows, &kernel_rows) {
        return Err(fail("printed H'_Y basis does not span the orthogonal sublattice"));
    }
    let h_y_prime = GramLattice::from_generators(&amb, printed.clone());

    // 8. c_Y lies in H'_Y
    let printed_snf = smith_normal_form(&printed_rows);
    if !c_y.is_integral() || !in_rowspan(&printed_snf, &c_y.to_int_row()) {
        return Err(fail("c_Y does not lie in H'_Y"));
    }

    // 9. the H'_Y Gram matches the independent wedge-pairing computation on
    //    the corresponding wedge expressions
    // printed basis corresponds to e13 + e24, e13, e12, e34, e14, e23
    let combo: [[i64; 6]; 6] = [
        // coefficients over basis pairs: e12, e13, e14, e23, e24, e34
        [0, 1, 0, 0, 1, 0], // e13 + e24
        [0, 1, 0, 0, 0, 0], // e13
        [1, 0, 0, 0, 0, 0], // e12
        [0, 0, 0, 0, 0, 1], // e34
        [0, 0, 1, 0, 0, 0], // e14
        [0, 0, 0, 1, 0, 0], // e23
    ];
    let base_pairs = [(1usize, 2usize), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let wedge_gram = wedge_pairing_independent(&base_pairs);
    for i in 0..6 {
        for j in 0..6 {
            let mut acc = Rat::zero();
            for a in 0..6 {
                for b in 0..6 {
                    if combo[i][a] == 0 || combo[j][b] == 0 {
                        continue;
                    }
                    acc += Rat::from_integer((combo[i][a] * combo[j][b]).into()) * &wedge_gram[a][b];
                }
            }
            if acc != h_y_prime.gram[i][j] {
                return Err(fail(format!(
                    "H'_Y Gram entry ({}, {}) disagrees with the wedge pairing",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    // 10. abelian side: norm lattice <-1>^8, H_A and its glue index
    let wedges = wedge_basis_ambient();
    let norms = norm_classes_ambient();
    let vt = v_tilde_ambient();
    let iota = polarization_class_ambient();
    let h_norm = GramLattice::from_generators(&amb, norms.clone());
    for i in 0..8 {
        for j in 0..8 {
            let expect = if i == j { -Rat::one() } else { Rat::zero() };
            if h_norm.gram[i][j] != expect {
                return Err(fail("norm classes are not an orthogonal <-1>^8"));
            }
        }
    }
    // v~ agrees with its defining half-sum
    let mut half_sum = iota.clone();
    for (k, v) in norms.iter().enumerate() {
        if k < 3 {
            half_sum = half_sum.add(v);
        } else {
            half_sum = half_sum.sub(v);
        }
    }
    if vt != half_sum.scale(&Rat::new(Int::one(), Int::from(2))) {
        return Err(fail("v~ does not equal its defining half-sum"));
    }
    let mut ha_gens = wedges.clone();
    ha_gens.extend(norms.iter().cloned());
    ha_gens.push(vt.clone());
    let ha_rows = rows_from_qvecs(&ha_gens)?;
    let ha_basis_rows = rowspan_basis(&ha_rows);
    if ha_basis_rows.len() != DIM {
        return Err(fail("H_A does not have full rank"));
    }
    let ha_basis = qvecs_from_rows(&ha_basis_rows);
    let h_a = GramLattice::from_generators(&amb, ha_basis.clone());
    let mut sub_gens = wedges.clone();
    sub_gens.extend(norms.iter().cloned());
    let sub_rows = rows_from_qvecs(&sub_gens)?;
    let sub_basis = rowspan_basis(&sub_rows);
    let sub_lattice =
        GramLattice::from_generators(&amb, qvecs_from_rows(&sub_basis));
    let ratio_a = &sub_lattice.det() / &h_a.det();
    if ratio_a != Rat::from_integer(4.into()) {
        return Err(fail("index of wedge + norm in H_A is not 2"));
    }
    let glue_index_a = Int::from(2);

    // 11. the two overlattices coincide: H_A = H_Y inside the ambient
    if !rowspan_equal(&IMat::from_rows(ha_basis_rows.clone()), &IMat::from_rows(hy_basis_rows.clone())) {
        return Err(fail("H_A and H_Y differ as ambient lattices"));
    }

    // 12. the halved pairing is integral on each index-2 integral part
    //     (the full overlattices are not integral: <v~, gamma~> is odd, and
    //     <v1, gamma_7> is odd across the two integral parts)
    for x in sub_gens.iter() {
        for y in sub_gens.iter() {
            if !amb.pairing_half(x, y).denom().is_one() {
                return Err(fail("halved pairing is not integral on wedge + norm"));
            }
        }
    }
    for x in gammas.iter() {
        for y in gammas.iter() {
            if !amb.pairing_half(x, y).denom().is_one() {
                return Err(fail("halved pairing is not integral on the surface lattice"));
            }
        }
    }

    // 13. H'_A = { x in H_A : <x, v~> integral } equals the surface lattice
    let vt_row = vt.clone();
    let parity = |row: &[Int]| -> bool {
        let x = QVec(row.iter().map(|c| Rat::from_integer(c.clone())).collect());
        !amb.pairing_half(&x, &vt_row).denom().is_one()
    };
    let hap_rows = mod2_kernel(&ha_basis_rows, parity);
    let gamma_rows = rows_from_qvecs(&gammas)?;
    if !rowspan_equal(&IMat::from_rows(hap_rows.clone()), &gamma_rows) {
        return Err(fail("H'_A does not reconstruct the surface lattice"));
    }
    let h_a_prime = GramLattice::from_generators(&amb, qvecs_from_rows(&hap_rows));

    // 14. curve-class correspondence, entry by entry
    let comb = |terms: &[(i64, &QVec)]| -> QVec {
        let mut acc = QVec::zero();
        for (c, v) in terms {
            acc = acc.add(&v.scale(&Rat::from_integer((*c).into())));
        }
        acc
    };
    let v = |i: usize| &norms[i - 1];
    let table: Vec<(&'static str, QVec)> = vec![
        ("K_Y", comb(&[(1, &iota), (-2, v(7))])),
        ("Delta_sigma", comb(&[(2, v(7))])),
        ("Gamma_1", vt.clone()),
        ("Gamma_2", comb(&[(1, &vt), (-1, v(2)), (-1, v(3))])),
        ("Gamma_3", comb(&[(1, &vt), (-1, v(1)), (-1, v(3))])),
        ("Gamma_4", comb(&[(1, &vt), (-1, v(1)), (-1, v(2))])),
        ("E_12", comb(&[(-1, v(1)), (1, v(4))])),
        ("E_13", comb(&[(-1, v(2)), (1, v(5))])),
        ("E_14", comb(&[(-1, v(3)), (1, v(6))])),
        ("E_34", comb(&[(1, v(1)), (1, v(4))])),
        ("E_24", comb(&[(1, v(2)), (1, v(5))])),
        ("E_23", comb(&[(1, v(3)), (1, v(6))])),
    ];
    let mut correspondence = Vec::new();
    for (name, a_side) in table {
        let y_side = class(name).ambient.clone();
        if y_side != a_side {
            return Err(fail(format!(
                "correspondence fails for {}: surface and abelian classes differ",
                name
            )));
        }
        correspondence.push((name, y_side, a_side));
    }

    Ok(OverlatticeData {
        h_y,
        h_y_prime,
        c_y,
        h_norm,
        h_a,
        h_a_prime,
        correspondence,
        glue_index_y,
        glue_index_a,
    })
}

/// The surface lattice as a Gram lattice (generators = gamma basis).
pub fn surface_lattice() -> GramLattice {
    GramLattice::from_generators(&ambient(), gamma_basis())
}

/// The abelian-side direct sum wedge + norm as a Gram lattice.
pub fn abelian_plus_norm_lattice() -> GramLattice {
    let mut gens = wedge_basis_ambient();
    gens.extend(norm_classes_ambient());
    GramLattice::from_generators(&ambient(), gens)
}

/// Determinant of the ambient pairing on the lattice spanned by integral
/// even-pairing conditions against the five section-and-branch classes; used
/// as a cross-check of the surface-lattice determinant.
pub fn even_pairing_characterization_det() -> Rat {
    let amb = ambient();
    // delta_7 .. delta_11 in ambient coordinates (the gamma images 7..11)
    let g = gamma_basis();
    let conditions: Vec<QVec> = (6..11).map(|i| g[i].clone()).collect();
    // start from the ambient integer lattice and intersect the mod-2 kernels
    let mut basis: Vec<Vec<Int>> = (0..DIM)
        .map(|i| {
            (0..DIM)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    for cond in &conditions {
        let parity = |row: &[Int]| -> bool {
            let x = QVec(row.iter().map(|c| Rat::from_integer(c.clone())).collect());
            let v = amb.pairing(&x, cond);
            assert!(v.denom().is_one());
            !(v.numer() % Int::from(2)).is_zero()
        };
        basis = mod2_kernel(&basis, parity);
    }
    let vs = qvecs_from_rows(&basis);
    let mut gram = vec![vec![Rat::zero(); DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            gram[i][j] = amb.pairing(&vs[i], &vs[j]);
        }
    }
    det_rat(gram)
}

/// Determinant of the full ambient pairing on the gamma generators.
pub fn gamma_ambient_det() -> Rat {
    let amb = ambient();
    let g = gamma_basis();
    let mut gram = vec![vec![Rat::zero(); DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            gram[i][j] = amb.pairing(&g[i], &g[j]);
        }
    }
    det_rat(gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rat::int;

    #[test]
    fn ambient_fixture_entries() {
        let amb = ambient();
        let e = |i: usize| {
            let mut v = [0i64; DIM];
            v[i] = 1;
            QVec::from_i64(v)
        };
        assert_eq!(amb.pairing(&e(0), &e(0)), int(1)); // dh.dh
        assert_eq!(amb.pairing(&e(1), &e(1)), int(-1)); // d0.d0
        assert_eq!(amb.pairing(&e(4), &e(5)), int(-2)); // d3.d4
        assert_eq!(amb.pairing(&e(6), &e(7)), int(-2)); // d5.d6
        assert_eq!(amb.pairing(&e(2), &e(3)), int(0)); // d1.d2
        assert_eq!(amb.pairing(&e(8), &e(8)), int(-1)); // E12.E12
        assert_eq!(amb.pairing(&e(8), &e(9)), int(0));
        assert_eq!(amb.pairing(&e(8), &e(1)), int(0));
    }

    #[test]
    fn gamma_gram_is_printed_matrix() {
        let amb = ambient();
        let lat = GramLattice::from_generators(&amb, gamma_basis());
        for i in 0..DIM {
            for j in 0..DIM {
                assert_eq!(
                    lat.gram[i][j],
                    int(GAMMA_GRAM_PRINTED[i][j]),
                    "entry ({}, {})",
                    i,
                    j
                );
            }
        }
        // self-dual surface lattice: unimodular
        assert_eq!(lat.det().abs(), int(1).abs());
        assert_eq!(lat.signature().unwrap(), (3, 11));
    }

    #[test]
    fn characterization_lattice_matches_gamma_determinant() {
        assert_eq!(even_pairing_characterization_det(), gamma_ambient_det());
    }

    #[test]
    fn overlattice_construction_verifies() {
        let data = build_overlattices().unwrap();
        assert_eq!(data.glue_index_y, Int::from(2));
        assert_eq!(data.glue_index_a, Int::from(2));
        assert_eq!(data.h_y_prime.rank(), 6);
        assert_eq!(data.correspondence.len(), 12);
        // c_Y expands to 4dh + 2d0 + d1 - d2
        assert_eq!(
            data.c_y,
            QVec::from_i64([4, 2, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn invariant_comparisons() {
        // realized pair: same rank, signature, determinant, trivial groups
        let rep = invariant_compare(&surface_lattice(), &abelian_plus_norm_lattice()).unwrap();
        assert_eq!(rep.left.rank, 14);
        assert_eq!(rep.left.signature, (3, 11));
        assert_eq!(rep.right.signature, (3, 11));
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        // <1> + <-1>^5 + (-A3) vs <4> + <-1>^8: same rank 9, signature (1,8),
        // |det| 4 and factors (1x8, 4); both odd, so inconclusive at this level
        let l1 = GramLattice::from_gram_i64(&[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, -1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, -1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, -2, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, -2, 1],
            &[0, 0, 0, 0, 0, 0, 0, 1, -2],
        ]);
        let l2 = GramLattice::from_gram_i64(&[
            &[4, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, -1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, -1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, -1],
        ]);
        let rep = invariant_compare(&l1, &l2).unwrap();
        assert_eq!(rep.left.rank, 9);
        assert_eq!(rep.left.signature, (1, 8));
        assert_eq!(rep.right.signature, (1, 8));
        assert_eq!(rep.left.determinant.clone().abs(), int(4));
        assert_eq!(rep.right.determinant.clone().abs(), int(4));
        let f: Vec<Int> = (0..8).map(|_| Int::one()).chain([Int::from(4)]).collect();
        assert_eq!(rep.left.invariant_factors.as_ref().unwrap(), &f);
        assert_eq!(rep.right.invariant_factors.as_ref().unwrap(), &f);
        // the reported discriminant-form values differ (1/4 vs 5/4 classes),
        // but odd lattices leave the verdict inconclusive
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        // lattice vs itself
        let rep = invariant_compare(&l1, &l1).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        // genuinely distinguished pairs
        let a = GramLattice::from_gram_i64(&[&[2, 0], &[0, 2]]);
        let b = GramLattice::from_gram_i64(&[&[1, 0], &[0, 4]]);
        assert!(matches!(
            invariant_compare(&a, &b).unwrap().verdict,
            Verdict::Distinguished(_)
        ));
        let c = GramLattice::from_gram_i64(&[&[2]]);
        let d = GramLattice::from_gram_i64(&[&[-2]]);
        assert!(matches!(
            invariant_compare(&c, &d).unwrap().verdict,
            Verdict::Distinguished(_)
        ));
    }

    #[test]
    fn degenerate_is_an_error() {
        let z = GramLattice::from_gram_i64(&[&[0]]);
        assert!(invariant_compare(&z, &z).is_err());
    }
}

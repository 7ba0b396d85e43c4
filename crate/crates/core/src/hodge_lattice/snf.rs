//! Integer matrices, Smith normal form, and row-span utilities.

use num_traits::{One, Signed, Zero};

use crate::qalg::Int;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        IMat { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &IMat) -> IMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IMat {
        let mut out = IMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, t);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, t);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let t = -self.get(r, j).clone();
            self.set(r, j, t);
        }
    }
}

/// U * M * V = D with U, V unimodular and D diagonal with successive
/// divisibility; `invariant_factors` lists the nonzero diagonal entries.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IMat,
    pub u: IMat,
    pub v: IMat,
    pub invariant_factors: Vec<Int>,
}

pub fn smith_normal_form(m: &IMat) -> SnfResult {
    let mut d = m.clone();
    let mut u = IMat::identity(m.rows());
    let mut v = IMat::identity(m.cols());
    let n = m.rows().min(m.cols());
    for k in 0..n {
        'pivot: loop {
            // smallest nonzero entry in the trailing block, first position wins ties
            let mut best: Option<(usize, usize)> = None;
            for i in k..d.rows() {
                for j in k..d.cols() {
                    if d.get(i, j).is_zero() {
                        continue;
                    }
                    match &best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if d.get(i, j).abs() < d.get(*bi, *bj).abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let (pi, pj) = match best {
                None => break 'pivot,
                Some(p) => p,
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(d.get(i, k) / d.get(k, k));
                d.add_row(i, k, &q);
                u.add_row(i, k, &q);
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols() {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(d.get(k, j) / d.get(k, k));
                d.add_col(j, k, &q);
                v.add_col(j, k, &q);
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // divisibility: pull a non-divisible entry into row k
            let pivot = d.get(k, k).clone();
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !(d.get(i, j) % &pivot).is_zero() {
                        d.add_row(k, i, &Int::one());
                        u.add_row(k, i, &Int::one());
                        continue 'pivot;
                    }
                }
            }
            if d.get(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            break 'pivot;
        }
    }
    let mut invariant_factors = Vec::new();
    for k in 0..n {
        if !d.get(k, k).is_zero() {
            invariant_factors.push(d.get(k, k).clone());
        }
    }
    SnfResult {
        d,
        u,
        v,
        invariant_factors,
    }
}

/// Rank over Q.
pub fn rank(m: &IMat) -> usize {
    smith_normal_form(m).invariant_factors.len()
}

/// Is x in the integer row span of m (given m's SNF)?
pub fn in_rowspan(snf: &SnfResult, x: &[Int]) -> bool {
    let xm = IMat::from_rows(vec![x.to_vec()]);
    let z = xm.mul(&snf.v);
    for j in 0..z.cols() {
        let diag = if j < snf.d.rows() && j < snf.d.cols() {
            snf.d.get(j, j).clone()
        } else {
            Int::zero()
        };
        if diag.is_zero() {
            if !z.get(0, j).is_zero() {
                return false;
            }
        } else if !(z.get(0, j) % &diag).is_zero() {
            return false;
        }
    }
    true
}

/// Equality of the integer row spans of two matrices with equal column count.
pub fn rowspan_equal(a: &IMat, b: &IMat) -> bool {
    assert_eq!(a.cols(), b.cols());
    let sa = smith_normal_form(a);
    let sb = smith_normal_form(b);
    (0..a.rows()).all(|i| in_rowspan(&sb, a.row(i)))
        && (0..b.rows()).all(|i| in_rowspan(&sa, b.row(i)))
}

/// Basis (as rows) of the integer row span, by unimodular row reduction:
/// the nonzero rows of a Hermite-style echelon form.
pub fn rowspan_basis(m: &IMat) -> Vec<Vec<Int>> {
    let mut a = m.clone();
    let mut pivot_row = 0usize;
    for col in 0..a.cols() {
        if pivot_row == a.rows() {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below pivot_row
            let mut best: Option<usize> = None;
            for i in pivot_row..a.rows() {
                if a.get(i, col).is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if a.get(i, col).abs() < a.get(b, col).abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let b = match best {
                None => break,
                Some(b) => b,
            };
            a.swap_rows(pivot_row, b);
            let mut done = true;
            let pv = a.get(pivot_row, col).clone();
            for i in pivot_row + 1..a.rows() {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let q = -(a.get(i, col) / &pv);
                a.add_row(i, pivot_row, &q);
                if !a.get(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
    }
    (0..a.rows())
        .map(|i| a.row(i).to_vec())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Basis of { x : x * m = 0 } as rows.
pub fn left_kernel_basis(m: &IMat) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    let mut out = Vec::new();
    for i in 0..m.rows() {
        if (0..m.cols()).all(|j| snf.d.get(i, j).is_zero()) {
            out.push(snf.u.row(i).to_vec());
        }
    }
    out
}

/// Basis of the index-<=2 sublattice { x in span(basis) : parity(x) even },
/// where `parity` maps a lattice vector to Z/2.
pub fn mod2_kernel(basis: &[Vec<Int>], parity: impl Fn(&[Int]) -> bool) -> Vec<Vec<Int>> {
    let odd: Vec<bool> = basis.iter().map(|b| parity(b)).collect();
    let pivot = odd.iter().position(|&p| p);
    match pivot {
        None => basis.to_vec(),
        Some(k) => {
            let mut out = Vec::with_capacity(basis.len());
            for (i, b) in basis.iter().enumerate() {
                if i == k {
                    out.push(b.iter().map(|x| x * Int::from(2)).collect());
                } else if odd[i] {
                    out.push(
                        b.iter()
                            .zip(&basis[k])
                            .map(|(x, y)| x + y)
                            .collect(),
                    );
                } else {
                    out.push(b.clone());
                }
            }
            out
        }
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &IMat) -> Int {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        for i in k + 1..n {
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

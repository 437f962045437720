//! Exact linear algebra over the supported base rings.
//!
//! Euclidean domains (ℤ, fields, 𝔽_p[t], ℚ[t]) are handled by a column
//! echelon form built from unimodular column operations. Residue rings ℤ/p^k
//! are lifted to ℤ, with the modulus relations appended as extra columns.
//! Smith normal form over ℤ decides solvability over the localizations ℤ_(p)
//! and kernel triviality modulo p^k.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{is_prime, BaseRing, RingElem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RingElem>,
}

impl Matrix {
    pub fn zeros(ring: &BaseRing, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &BaseRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RingElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(ring: &BaseRing, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| ring.from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<RingElem> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<RingElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<RingElem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, ring: &BaseRing, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = ring.mul_add(out.get(i, j), a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, ring: &BaseRing, v: &[RingElem]) -> Vec<RingElem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(ring.zero(), |acc, j| ring.mul_add(&acc, self.get(i, j), &v[j])))
            .collect()
    }

    pub fn map(&self, f: impl Fn(&RingElem) -> RingElem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, ring: &BaseRing, dst: usize, src: usize, q: &RingElem, from_row: usize) {
        for i in from_row..self.rows {
            let s = self.get(i, src);
            if ring.is_zero(s) {
                continue;
            }
            let v = ring.sub(self.get(i, dst), &ring.mul(q, s));
            self.set(i, dst, v);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, ring: &BaseRing, dst: usize, src: usize, q: &RingElem) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if ring.is_zero(s) {
                continue;
            }
            let v = ring.sub(self.get(dst, j), &ring.mul(q, s));
            self.set(dst, j, v);
        }
    }
}

/// `A x = b` over a base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Matrix,
    pub rhs: Vec<RingElem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Witness(Vec<RingElem>),
    NoSolution,
}

impl Solution {
    pub fn witness(&self) -> Option<&[RingElem]> {
        match self {
            Solution::Witness(w) => Some(w),
            Solution::NoSolution => None,
        }
    }

    pub fn is_solvable(&self) -> bool {
        matches!(self, Solution::Witness(_))
    }
}

impl LinearSystem {
    pub fn new(matrix: Matrix, rhs: Vec<RingElem>) -> Self {
        LinearSystem { matrix, rhs }
    }

    fn check(&self, ring: &BaseRing) -> Result<()> {
        if self.rhs.len() != self.matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} equations but right-hand side of length {}",
                self.matrix.rows(),
                self.rhs.len()
            )));
        }
        if let Some(bad) = self.matrix.data.iter().chain(&self.rhs).find(|e| !ring.contains(e)) {
            return Err(Error::InvalidElement { ring: ring.to_string(), detail: format!("{bad:?}") });
        }
        Ok(())
    }
}

/// Column echelon form `H = A V` with `V` unimodular.
struct Echelon {
    h: Matrix,
    v: Matrix,
    /// (row, column) of each pivot; columns are 0, 1, 2, ... in order.
    pivots: Vec<usize>,
}

fn column_echelon(ring: &BaseRing, a: &Matrix) -> Echelon {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut v = Matrix::identity(ring, n);
    let mut pivots = Vec::new();
    let mut pc = 0;
    for r in 0..m {
        if pc == n {
            break;
        }
        loop {
            let best = (pc..n)
                .filter(|&c| !ring.is_zero(h.get(r, c)))
                .min_by(|&x, &y| ring.euclid_size(h.get(r, x)).cmp(&ring.euclid_size(h.get(r, y))));
            let Some(best) = best else { break };
            h.swap_cols(best, pc);
            v.swap_cols(best, pc);
            let mut clean = true;
            for c in pc + 1..n {
                if ring.is_zero(h.get(r, c)) {
                    continue;
                }
                let (q, _) = ring.div_rem(h.get(r, c), h.get(r, pc));
                h.col_axpy(ring, c, pc, &q, r);
                v.col_axpy(ring, c, pc, &q, 0);
                if !ring.is_zero(h.get(r, c)) {
                    clean = false;
                }
            }
            if clean {
                pivots.push(r);
                pc += 1;
                break;
            }
        }
    }
    Echelon { h, v, pivots }
}

fn echelon_solve(ring: &BaseRing, a: &Matrix, b: &[RingElem]) -> Solution {
    let ech = column_echelon(ring, a);
    let n = a.cols();
    let mut y = vec![ring.zero(); n];
    let mut k = 0;
    for (r, br) in b.iter().enumerate() {
        let mut s = br.clone();
        for (c, yc) in y.iter().enumerate().take(k) {
            s = ring.sub(&s, &ring.mul(ech.h.get(r, c), yc));
        }
        if ech.pivots.get(k) == Some(&r) {
            match ring.divide(&s, ech.h.get(r, k)) {
                Some(q) => y[k] = q,
                None => return Solution::NoSolution,
            }
            k += 1;
        } else if !ring.is_zero(&s) {
            return Solution::NoSolution;
        }
    }
    Solution::Witness(ech.v.mul_vec(ring, &y))
}

fn lift_matrix(ring: &BaseRing, a: &Matrix) -> Matrix {
    a.map(|e| RingElem::Int(ring.lift_to_int(e).expect("residue")))
}

/// Solves `A x = b` exactly over the ring of the entries.
///
/// A returned witness is re-substituted before returning; `NoSolution` means
/// no solution exists over this ring itself (not merely over its fraction
/// field).
pub fn solve_linear(ring: &BaseRing, sys: &LinearSystem) -> Result<Solution> {
    sys.check(ring)?;
    let sol = match ring {
        BaseRing::ResidueRing { .. } => {
            let z = BaseRing::Integers;
            let m = BigInt::from(ring.modulus().unwrap());
            let (rows, cols) = (sys.matrix.rows(), sys.matrix.cols());
            let lifted = lift_matrix(ring, &sys.matrix);
            let mut aug = Matrix::zeros(&z, rows, cols + rows);
            for i in 0..rows {
                for j in 0..cols {
                    aug.set(i, j, lifted.get(i, j).clone());
                }
                aug.set(i, cols + i, RingElem::Int(m.clone()));
            }
            let rhs: Vec<_> = sys.rhs.iter().map(|e| RingElem::Int(ring.lift_to_int(e).unwrap())).collect();
            match echelon_solve(&z, &aug, &rhs) {
                Solution::Witness(w) => Solution::Witness(
                    w[..cols].iter().map(|e| ring.from_bigint(&z.lift_to_int(e).unwrap())).collect(),
                ),
                Solution::NoSolution => Solution::NoSolution,
            }
        }
        _ if ring.is_euclidean() => echelon_solve(ring, &sys.matrix, &sys.rhs),
        _ => return Err(Error::UnsupportedRing(ring.to_string())),
    };
    if let Solution::Witness(w) = &sol {
        if sys.matrix.mul_vec(ring, w) != sys.rhs {
            return Err(Error::Internal("linear solver witness failed substitution".into()));
        }
    }
    Ok(sol)
}

/// Rank of a matrix over a Euclidean domain.
pub fn rank(ring: &BaseRing, a: &Matrix) -> usize {
    assert!(ring.is_euclidean(), "rank over {ring} is not defined here");
    column_echelon(ring, a).pivots.len()
}

/// Smith normal form `U A V = D` over a Euclidean domain.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

impl Smith {
    pub fn invariant_factors(&self) -> Vec<RingElem> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(ring: &BaseRing, a: &Matrix) -> Smith {
    assert!(ring.is_euclidean(), "Smith form over {ring} is not supported");
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(ring, m);
    let mut v = Matrix::identity(ring, n);
    let mut rank = 0;
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if ring.is_zero(d.get(i, j)) {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => ring.euclid_size(d.get(i, j)) < ring.euclid_size(d.get(bi, bj)),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(bi, t);
            u.swap_rows(bi, t);
            d.swap_cols(bj, t);
            v.swap_cols(bj, t);
            let mut dirty = false;
            for i in t + 1..m {
                if ring.is_zero(d.get(i, t)) {
                    continue;
                }
                let (q, _) = ring.div_rem(d.get(i, t), d.get(t, t));
                d.row_axpy(ring, i, t, &q);
                u.row_axpy(ring, i, t, &q);
                dirty |= !ring.is_zero(d.get(i, t));
            }
            for j in t + 1..n {
                if ring.is_zero(d.get(t, j)) {
                    continue;
                }
                let (q, _) = ring.div_rem(d.get(t, j), d.get(t, t));
                d.col_axpy(ring, j, t, &q, 0);
                v.col_axpy(ring, j, t, &q, 0);
                dirty |= !ring.is_zero(d.get(t, j));
            }
            if dirty {
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| ring.divide(d.get(i, j), &pivot).is_none()));
            match offender {
                Some(i) => {
                    let minus_one = ring.from_i64(-1);
                    d.row_axpy(ring, t, i, &minus_one);
                    u.row_axpy(ring, t, i, &minus_one);
                }
                None => break,
            }
        }
        if t < m && t < n && !ring.is_zero(d.get(t, t)) {
            rank = t + 1;
        } else {
            break;
        }
    }
    Smith { u, d, v, rank }
}

/// Whether `A y = 0` forces `y = 0` over the ring.
pub fn kernel_is_trivial(ring: &BaseRing, a: &Matrix) -> bool {
    match ring {
        BaseRing::ResidueRing { p, .. } => {
            let z = BaseRing::Integers;
            let s = smith_normal_form(&z, &lift_matrix(ring, a));
            let p = BigInt::from(*p);
            s.rank == a.cols()
                && s.invariant_factors().iter().all(|f| !z.lift_to_int(f).unwrap().is_multiple_of(&p))
        }
        _ => rank(ring, a) == a.cols(),
    }
}

/// Solvability of an integer system over the localization ℤ_(p).
///
/// The witness has rational entries whose denominators are prime to `p`.
pub fn solve_linear_local_at(sys: &LinearSystem, p: u64) -> Result<Solution> {
    let z = BaseRing::Integers;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    sys.check(&z)?;
    let s = smith_normal_form(&z, &sys.matrix);
    let c = s.u.mul_vec(&z, &sys.rhs);
    let pz = BigInt::from(p);
    let mut y = vec![BigRational::zero(); sys.matrix.cols()];
    for (i, ci) in c.iter().enumerate() {
        let ci = z.lift_to_int(ci).unwrap();
        if i < s.rank {
            let di = z.lift_to_int(s.d.get(i, i)).unwrap();
            let q = BigRational::new(ci, di);
            if q.denom().is_multiple_of(&pz) {
                return Ok(Solution::NoSolution);
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return Ok(Solution::NoSolution);
        }
    }
    let q = BaseRing::Rationals;
    let vq = s.v.map(|e| q.from_bigint(&z.lift_to_int(e).unwrap()));
    let x = vq.mul_vec(&q, &y.into_iter().map(RingElem::Rat).collect::<Vec<_>>());
    let aq = sys.matrix.map(|e| q.from_bigint(&z.lift_to_int(e).unwrap()));
    let bq: Vec<_> = sys.rhs.iter().map(|e| q.from_bigint(&z.lift_to_int(e).unwrap())).collect();
    let ok = aq.mul_vec(&q, &x) == bq
        && x.iter().all(|e| match e {
            RingElem::Rat(r) => !r.denom().abs().is_multiple_of(&pz),
            _ => false,
        });
    if !ok {
        return Err(Error::Internal("local witness failed substitution".into()));
    }
    Ok(Solution::Witness(x))
}

/// Characteristic polynomial `det(T I - A)`, constant term first, by the
/// division-free Berkowitz recursion (valid over every commutative ring).
pub fn char_poly(ring: &BaseRing, a: &Matrix) -> Vec<RingElem> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "characteristic polynomial needs a square matrix");
    // p holds the char poly of the trailing principal submatrix, leading coefficient first.
    let mut p = vec![ring.one()];
    for i in (0..n).rev() {
        let s = n - i;
        let mut w = Vec::with_capacity(s + 1);
        w.push(ring.one());
        w.push(ring.neg(a.get(i, i)));
        // v = A1^k C, starting with C
        let mut v: Vec<RingElem> = (i + 1..n).map(|r| a.get(r, i).clone()).collect();
        for _ in 2..=s {
            let rc = (i + 1..n).zip(&v).fold(ring.zero(), |acc, (c, vc)| ring.mul_add(&acc, a.get(i, c), vc));
            w.push(ring.neg(&rc));
            v = (i + 1..n)
                .map(|r| (i + 1..n).zip(&v).fold(ring.zero(), |acc, (c, vc)| ring.mul_add(&acc, a.get(r, c), vc)))
                .collect();
        }
        let mut next = vec![ring.zero(); s + 1];
        for (r, slot) in next.iter_mut().enumerate() {
            for (c, pc) in p.iter().enumerate() {
                if r >= c {
                    *slot = ring.mul_add(slot, &w[r - c], pc);
                }
            }
        }
        p = next;
    }
    p.reverse();
    p
}

pub fn determinant(ring: &BaseRing, a: &Matrix) -> RingElem {
    let cp = char_poly(ring, a);
    if a.rows().is_multiple_of(2) {
        cp[0].clone()
    } else {
        ring.neg(&cp[0])
    }
}

/// Inverse of a square matrix over the ring, if it is invertible there.
pub fn invert(ring: &BaseRing, a: &Matrix) -> Option<Matrix> {
    let n = a.rows();
    if n != a.cols() || !ring.is_unit(&determinant(ring, a)) {
        return None;
    }
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![ring.zero(); n];
        e[j] = ring.one();
        let sol = solve_linear(ring, &LinearSystem::new(a.clone(), e)).ok()?;
        cols.push(sol.witness()?.to_vec());
    }
    Some(Matrix::from_rows(cols).transpose())
}

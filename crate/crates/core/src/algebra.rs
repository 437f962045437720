//! Free algebras given by structure constants.
//!
//! `table[i][j][k]` is the coefficient of `e_k` in `e_i * e_j` (row index is
//! the left factor). After validation the identity is always basis vector 0.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::linalg::{char_poly, invert, smith_normal_form, solve_linear, LinearSystem, Matrix};
use crate::ring::{poly, BaseRing, RingElem};

/// Coordinates of an element relative to the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement(pub Vec<RingElem>);

impl AlgebraElement {
    pub fn coords(&self) -> &[RingElem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A monic polynomial `T^d + c_{d-1} T^{d-1} + ... + c_0`; only the lower
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicPolynomial {
    lower: Vec<RingElem>,
}

impl MonicPolynomial {
    pub fn from_lower(lower: Vec<RingElem>) -> Self {
        MonicPolynomial { lower }
    }

    /// From a full coefficient vector (constant first) whose last entry is 1.
    pub fn from_coeffs(ring: &BaseRing, mut coeffs: Vec<RingElem>) -> Option<Self> {
        let lead = coeffs.pop()?;
        ring.is_one(&lead).then_some(MonicPolynomial { lower: coeffs })
    }

    /// `T - r`.
    pub fn linear(ring: &BaseRing, r: &RingElem) -> Self {
        MonicPolynomial { lower: vec![ring.neg(r)] }
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    pub fn lower_coeffs(&self) -> &[RingElem] {
        &self.lower
    }

    pub fn coeffs(&self, ring: &BaseRing) -> Vec<RingElem> {
        let mut c = self.lower.clone();
        c.push(ring.one());
        c
    }

    pub fn mul(&self, ring: &BaseRing, other: &Self) -> Self {
        let c = poly::mul(ring, &self.coeffs(ring), &other.coeffs(ring));
        Self::from_coeffs(ring, c).expect("product of monic polynomials is monic")
    }

    pub fn pow(&self, ring: &BaseRing, e: usize) -> Self {
        (0..e).fold(MonicPolynomial { lower: vec![] }, |acc, _| acc.mul(ring, self))
    }

    pub fn eval(&self, ring: &BaseRing, x: &RingElem) -> RingElem {
        poly::eval(ring, &self.coeffs(ring), x)
    }

    /// Evaluates at an algebra element by Horner's rule.
    pub fn eval_in(&self, alg: &StructureAlgebra, x: &AlgebraElement) -> AlgebraElement {
        let mut acc = alg.one();
        for c in self.lower.iter().rev() {
            acc = alg.add(&alg.mul(&acc, x), &alg.scalar(c));
        }
        acc
    }

    pub fn format(&self, ring: &BaseRing) -> String {
        let mut terms = Vec::new();
        let d = self.degree();
        for (i, c) in self.coeffs(ring).iter().enumerate().rev() {
            if ring.is_zero(c) {
                continue;
            }
            let coef = ring.format(c);
            let mono = match i {
                0 => String::new(),
                1 => "T".into(),
                _ => format!("T^{i}"),
            };
            terms.push(match (i, coef.as_str()) {
                (0, _) => coef,
                (_, "1") => mono,
                _ => format!("({coef})*{mono}"),
            });
        }
        if terms.is_empty() || d == 0 {
            return "1".into();
        }
        terms.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    ring: BaseRing,
    rank: usize,
    table: Vec<RingElem>,
    basis: Vec<String>,
    rebasing: Option<Matrix>,
}

fn default_names(n: usize) -> Vec<String> {
    match n {
        3 => vec!["1".into(), "i".into(), "j".into()],
        _ => std::iter::once("1".to_string()).chain((1..n).map(|i| format!("e{i}"))).collect(),
    }
}

/// Parameters `(a, b, c, d)` of a rank-3 table in the Gross–Lucianovic form
///
/// ```text
/// i^2 = -ac + b i - a j,   j^2 = -bd + d i - c j,   ij = -ad
/// ```
///
/// together with `ji = r + s i + t j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFormParams {
    pub a: RingElem,
    pub b: RingElem,
    pub c: RingElem,
    pub d: RingElem,
    pub r: RingElem,
    pub s: RingElem,
    pub t: RingElem,
}

impl CFormParams {
    /// The short criterion `as = dt = 0` and `r + ad = -bs = ct`.
    ///
    /// Every associative (C)-form table satisfies it, over any ring, but it is
    /// not sufficient: `a = b = c = d = r = s = 0, t = 1` passes while
    /// `(ji)i != j(ii)`. Use [`CFormParams::is_associative`] to decide.
    pub fn rst_criterion(&self, ring: &BaseRing) -> bool {
        let Self { a, b, c, d, r, s, t } = self;
        let as_ = ring.mul(a, s);
        let dt = ring.mul(d, t);
        let lhs = ring.add(r, &ring.mul(a, d));
        let mbs = ring.neg(&ring.mul(b, s));
        let ct = ring.mul(c, t);
        ring.is_zero(&as_) && ring.is_zero(&dt) && lhs == mbs && mbs == ct
    }

    /// The coordinates of all associators `(e_p e_q) e_u - e_p (e_q e_u)`,
    /// written out as polynomials in the parameters.
    pub fn associator_values(&self, ring: &BaseRing) -> Vec<RingElem> {
        let Self { a, b, c, d, r, s, t } = self;
        let m = |x: &RingElem, y: &RingElem| ring.mul(x, y);
        let ad = m(a, d);
        let r_ad = ring.add(r, &ad);
        vec![
            m(a, &r_ad),
            m(a, s),
            m(a, t),
            m(a, &ring.add(&m(c, s), &m(d, t))),
            ring.add(&r_ad, &m(b, s)),
            ring.sub(&ring.add(&m(&ad, b), &ring.add(&m(&m(a, c), s), &m(b, r))), &m(r, t)),
            ring.add(&r_ad, &m(s, t)),
            ring.sub(&m(t, t), &ring.add(&m(b, t), &m(a, s))),
            m(d, &ring.add(&m(a, s), &m(b, t))),
            m(d, t),
            ring.sub(&r_ad, &m(c, t)),
            ring.add(&ring.sub(&m(&ad, c), &m(&m(b, d), t)), &ring.add(&m(c, r), &m(r, s))),
            ring.add(&m(s, s), &ring.add(&m(c, s), &m(d, t))),
            m(d, &r_ad),
            m(d, s),
        ]
    }

    /// Whether the (C)-form table is associative, over any commutative ring.
    pub fn is_associative(&self, ring: &BaseRing) -> bool {
        self.associator_values(ring).iter().all(|v| ring.is_zero(v))
    }

    /// Structure tensor on the basis `1, i, j`.
    pub fn table(&self, ring: &BaseRing) -> Vec<Vec<Vec<RingElem>>> {
        let Self { a, b, c, d, r, s, t } = self;
        let z = ring.zero();
        let ii = vec![ring.neg(&ring.mul(a, c)), b.clone(), ring.neg(a)];
        let jj = vec![ring.neg(&ring.mul(b, d)), d.clone(), ring.neg(c)];
        let ij = vec![ring.neg(&ring.mul(a, d)), z.clone(), z.clone()];
        let ji = vec![r.clone(), s.clone(), t.clone()];
        unit_table(ring, 3, |x, y| match (x, y) {
            (1, 1) => ii.clone(),
            (2, 2) => jj.clone(),
            (1, 2) => ij.clone(),
            _ => ji.clone(),
        })
    }
}

/// Builds a tensor whose basis vector 0 is the identity; `f(i, j)` gives
/// `e_i e_j` for `i, j >= 1`.
pub fn unit_table(
    ring: &BaseRing,
    n: usize,
    f: impl Fn(usize, usize) -> Vec<RingElem>,
) -> Vec<Vec<Vec<RingElem>>> {
    let unit = |k: usize| -> Vec<RingElem> { (0..n).map(|l| if l == k { ring.one() } else { ring.zero() }).collect() };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    (0, _) => unit(j),
                    (_, 0) => unit(i),
                    _ => f(i, j),
                })
                .collect()
        })
        .collect()
}

impl StructureAlgebra {
    /// Validates a structure tensor: shape, membership, unit law (re-basing so
    /// the identity becomes basis vector 0 when needed) and associativity.
    pub fn validate(ring: BaseRing, table: Vec<Vec<Vec<RingElem>>>, basis: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("structure tensor is not {n}x{n}x{n}")));
        }
        let flat: Vec<RingElem> = table.into_iter().flatten().flatten().collect();
        if let Some(bad) = flat.iter().find(|e| !ring.contains(e)) {
            return Err(Error::InvalidElement { ring: ring.to_string(), detail: format!("{bad:?}") });
        }
        let basis = match basis {
            Some(b) if b.len() == n => b,
            Some(b) => {
                return Err(Error::DimensionMismatch(format!("{} basis names for rank {n}", b.len())));
            }
            None => default_names(n),
        };
        let raw = StructureAlgebra { ring, rank: n, table: flat, basis, rebasing: None };
        let mut alg = raw.normalize_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    pub fn from_table(ring: &BaseRing, table: Vec<Vec<Vec<RingElem>>>) -> Result<Self> {
        Self::validate(ring.clone(), table, None)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64_table(ring: &BaseRing, table: &[Vec<Vec<i64>>]) -> Result<Self> {
        let t = table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|&x| ring.from_i64(x)).collect()).collect())
            .collect();
        Self::from_table(ring, t)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.rank);
        self.basis = names;
        self
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Change of basis applied during validation: row `r` holds the
    /// coordinates of new basis vector `r` in the input basis.
    pub fn rebasing(&self) -> Option<&Matrix> {
        self.rebasing.as_ref()
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &RingElem {
        &self.table[(i * self.rank + j) * self.rank + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> AlgebraElement {
        let n = self.rank;
        AlgebraElement(self.table[(i * n + j) * n..(i * n + j + 1) * n].to_vec())
    }

    pub fn table(&self) -> Vec<Vec<Vec<RingElem>>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| self.product_of_basis(i, j).0).collect()).collect()
    }

    fn has_unit_at(&self, u: usize) -> bool {
        let n = self.rank;
        (0..n).all(|j| {
            (0..n).all(|k| {
                let want = if j == k { self.ring.one() } else { self.ring.zero() };
                *self.coeff(u, j, k) == want && *self.coeff(j, u, k) == want
            })
        })
    }

    fn normalize_unit(self) -> Result<Self> {
        if self.has_unit_at(0) {
            return Ok(self);
        }
        let n = self.rank;
        let ring = self.ring.clone();
        let p = if let Some(u) = (1..n).find(|&u| self.has_unit_at(u)) {
            let mut p = Matrix::identity(&ring, n);
            p.set(0, 0, ring.zero());
            p.set(u, u, ring.zero());
            p.set(0, u, ring.one());
            p.set(u, 0, ring.one());
            p
        } else {
            let y = self.find_identity()?;
            self.complete_to_basis(&y)?
        };
        let names = std::iter::once("1".to_string()).chain((1..n).map(|i| format!("f{i}"))).collect();
        let mut out = self.change_basis_unchecked(&p)?;
        out.basis = names;
        out.rebasing = Some(p);
        if !out.has_unit_at(0) {
            return Err(Error::Internal("re-basing did not move the identity to index 0".into()));
        }
        Ok(out)
    }

    fn find_identity(&self) -> Result<Vec<RingElem>> {
        let n = self.rank;
        let ring = &self.ring;
        let mut a = Matrix::zeros(ring, 2 * n * n, n);
        let mut b = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for l in 0..n {
                let row_l = j * n + l;
                let row_r = n * n + j * n + l;
                for k in 0..n {
                    a.set(row_l, k, self.coeff(k, j, l).clone());
                    a.set(row_r, k, self.coeff(j, k, l).clone());
                }
            }
        }
        for _side in 0..2 {
            for j in 0..n {
                for l in 0..n {
                    b.push(if j == l { ring.one() } else { ring.zero() });
                }
            }
        }
        match solve_linear(ring, &LinearSystem::new(a, b))? {
            crate::ring::linalg::Solution::Witness(y) => Ok(y),
            crate::ring::linalg::Solution::NoSolution => {
                Err(Error::NoUnit("no element acts as a two-sided identity".into()))
            }
        }
    }

    /// An invertible matrix whose first row is `y`.
    fn complete_to_basis(&self, y: &[RingElem]) -> Result<Matrix> {
        let ring = &self.ring;
        let n = self.rank;
        let not_basis = || Error::NoUnit("the identity element is not part of any basis".into());
        let p = if ring.is_euclidean() {
            let s = smith_normal_form(ring, &Matrix::from_rows(vec![y.to_vec()]));
            if s.rank != 1 || !ring.is_unit(s.d.get(0, 0)) {
                return Err(not_basis());
            }
            let vinv = invert(ring, &s.v).ok_or_else(|| Error::Internal("Smith transform not invertible".into()))?;
            let mut rows = vinv.to_rows();
            rows[0] = y.to_vec();
            Matrix::from_rows(rows)
        } else {
            let j = (0..n).find(|&j| ring.is_unit(&y[j])).ok_or_else(not_basis)?;
            let mut rows = Matrix::identity(ring, n).to_rows();
            rows[j] = y.to_vec();
            rows.swap(0, j);
            Matrix::from_rows(rows)
        };
        Ok(p)
    }

    fn change_basis_unchecked(&self, p: &Matrix) -> Result<Self> {
        let ring = &self.ring;
        let n = self.rank;
        let pt_inv = invert(ring, &p.transpose())
            .ok_or_else(|| Error::Precondition("basis change matrix is not invertible".into()))?;
        let rows: Vec<AlgebraElement> = (0..n).map(|r| AlgebraElement(p.row(r))).collect();
        let mut table = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                let prod = self.mul(&rows[a], &rows[b]);
                table.extend(pt_inv.mul_vec(ring, &prod.0));
            }
        }
        Ok(StructureAlgebra {
            ring: ring.clone(),
            rank: n,
            table,
            basis: default_names(n),
            rebasing: None,
        })
    }

    /// The same algebra on a new basis: row `r` of `p` gives new basis vector
    /// `r` in current coordinates. Row 0 must be the identity.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        if p.rows() != self.rank || p.cols() != self.rank {
            return Err(Error::DimensionMismatch("basis change must be rank x rank".into()));
        }
        let out = self.change_basis_unchecked(p)?;
        if !out.has_unit_at(0) {
            return Err(Error::Precondition("first new basis vector must be the identity".into()));
        }
        Ok(out)
    }

    /// First associativity failure `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.rank;
        for i in 1..n {
            for j in 1..n {
                let ij = self.product_of_basis(i, j);
                for k in 1..n {
                    let jk = self.product_of_basis(j, k);
                    let left = self.mul_by_basis_right(&ij, k);
                    let right = self.mul_by_basis_left(i, &jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn check_associative(&mut self) -> Result<()> {
        let witness = self.associativity_witness();
        if let Some(cp) = self.c_form_params() {
            let direct = witness.is_none();
            let short_ok = !direct || cp.rst_criterion(&self.ring);
            if cp.is_associative(&self.ring) != direct || !short_ok {
                return Err(Error::Internal("(C)-form associativity criterion disagrees with the full check".into()));
            }
        }
        match witness {
            Some((i, j, k)) => Err(Error::NotAssociative(i, j, k)),
            None => Ok(()),
        }
    }

    /// Recognizes the rank-3 Gross–Lucianovic normal form, if the table has it.
    pub fn c_form_params(&self) -> Option<CFormParams> {
        if self.rank != 3 {
            return None;
        }
        let ring = &self.ring;
        let ii = self.product_of_basis(1, 1).0;
        let jj = self.product_of_basis(2, 2).0;
        let ij = self.product_of_basis(1, 2).0;
        let ji = self.product_of_basis(2, 1).0;
        let a = ring.neg(&ii[2]);
        let b = ii[1].clone();
        let d = jj[1].clone();
        let c = ring.neg(&jj[2]);
        let ok = ii[0] == ring.neg(&ring.mul(&a, &c))
            && jj[0] == ring.neg(&ring.mul(&b, &d))
            && ij[0] == ring.neg(&ring.mul(&a, &d))
            && ring.is_zero(&ij[1])
            && ring.is_zero(&ij[2]);
        ok.then(|| CFormParams { a, b, c, d, r: ji[0].clone(), s: ji[1].clone(), t: ji[2].clone() })
    }

    // ----- elements -----

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement(vec![self.ring.zero(); self.rank])
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut v = vec![self.ring.zero(); self.rank];
        v[i] = self.ring.one();
        AlgebraElement(v)
    }

    pub fn scalar(&self, r: &RingElem) -> AlgebraElement {
        let mut v = vec![self.ring.zero(); self.rank];
        v[0] = r.clone();
        AlgebraElement(v)
    }

    pub fn element(&self, coords: Vec<RingElem>) -> AlgebraElement {
        assert_eq!(coords.len(), self.rank, "coordinate vector has the wrong length");
        AlgebraElement(coords)
    }

    pub fn element_i64(&self, coords: &[i64]) -> AlgebraElement {
        self.element(coords.iter().map(|&x| self.ring.from_i64(x)).collect())
    }

    /// Whether `x` lies in `R·1`.
    pub fn is_scalar(&self, x: &AlgebraElement) -> bool {
        x.0[1..].iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(x.0.iter().zip(&y.0).map(|(a, b)| self.ring.add(a, b)).collect())
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(x.0.iter().zip(&y.0).map(|(a, b)| self.ring.sub(a, b)).collect())
    }

    pub fn neg(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(x.0.iter().map(|a| self.ring.neg(a)).collect())
    }

    pub fn scale(&self, r: &RingElem, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement(x.0.iter().map(|a| self.ring.mul(r, a)).collect())
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let n = self.rank;
        let ring = &self.ring;
        let mut out = vec![ring.zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if ring.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if ring.is_zero(yj) {
                    continue;
                }
                let s = ring.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !ring.is_zero(c) {
                        *o = ring.mul_add(o, &s, c);
                    }
                }
            }
        }
        AlgebraElement(out)
    }

    fn mul_by_basis_right(&self, x: &AlgebraElement, k: usize) -> AlgebraElement {
        self.mul(x, &self.basis_element(k))
    }

    fn mul_by_basis_left(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        self.mul(&self.basis_element(i), x)
    }

    pub fn pow(&self, x: &AlgebraElement, e: u32) -> AlgebraElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Powers `1, x, ..., x^m`.
    pub fn powers(&self, x: &AlgebraElement, m: usize) -> Vec<AlgebraElement> {
        let mut out = vec![self.one()];
        for _ in 0..m {
            let next = self.mul(out.last().unwrap(), x);
            out.push(next);
        }
        out
    }

    // ----- regular representations -----

    /// Column `j` is the coordinate vector of `x e_j`.
    pub fn left_mul_matrix(&self, x: &AlgebraElement) -> Matrix {
        let n = self.rank;
        let mut m = Matrix::zeros(&self.ring, n, n);
        for j in 0..n {
            let col = self.mul(x, &self.basis_element(j));
            for (k, v) in col.0.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Column `j` is the coordinate vector of `e_j x`.
    pub fn right_mul_matrix(&self, x: &AlgebraElement) -> Matrix {
        let n = self.rank;
        let mut m = Matrix::zeros(&self.ring, n, n);
        for j in 0..n {
            let col = self.mul(&self.basis_element(j), x);
            for (k, v) in col.0.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    fn char_poly_of(&self, m: &Matrix, x: &AlgebraElement) -> MonicPolynomial {
        let chi = MonicPolynomial::from_coeffs(&self.ring, char_poly(&self.ring, m)).expect("monic");
        assert!(
            chi.eval_in(self, x) == self.zero(),
            "characteristic polynomial does not annihilate its element: arithmetic bug"
        );
        chi
    }

    pub fn char_poly_left(&self, x: &AlgebraElement) -> MonicPolynomial {
        self.char_poly_of(&self.left_mul_matrix(x), x)
    }

    pub fn char_poly_right(&self, x: &AlgebraElement) -> MonicPolynomial {
        self.char_poly_of(&self.right_mul_matrix(x), x)
    }

    pub fn trace_left(&self, x: &AlgebraElement) -> RingElem {
        let m = self.left_mul_matrix(x);
        self.ring.sum((0..self.rank).map(|i| m.get(i, i)))
    }

    /// First pair `i < j` with `e_i e_j != e_j e_i`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        (1..self.rank)
            .flat_map(|i| (i + 1..self.rank).map(move |j| (i, j)))
            .find(|&(i, j)| self.product_of_basis(i, j) != self.product_of_basis(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// `B ⊗_R S` along a supported homomorphism.
    pub fn base_change(&self, hom: &RingHom) -> Result<Self> {
        if hom.source != self.ring {
            return Err(Error::UnsupportedHom { from: self.ring.to_string(), to: hom.target.to_string() });
        }
        let table = self.table().into_iter().map(|row| row.into_iter().map(|v| hom.apply_vec(&v)).collect()).collect();
        Self::validate(hom.target.clone(), table, Some(self.basis.clone()))
    }

    // ----- JSON -----

    pub fn to_json(&self) -> Value {
        let table: Vec<Vec<Vec<Value>>> = self
            .table()
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|e| self.ring.elem_to_json(e)).collect()).collect())
            .collect();
        serde_json::to_value(AlgebraFile {
            ring: serde_json::to_value(&self.ring).expect("json"),
            rank: self.rank,
            basis: self.basis.clone(),
            table: serde_json::to_value(table).expect("json"),
        })
        .expect("json")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ring = BaseRing::from_descriptor_json(&file.ring)?;
        let bad_shape = || Error::Parse("\"table\" must be a rank x rank x rank array".into());
        let rows = file.table.as_array().ok_or_else(bad_shape)?;
        if rows.len() != file.rank {
            return Err(Error::DimensionMismatch(format!("rank {} but table has {} rows", file.rank, rows.len())));
        }
        let mut table = Vec::with_capacity(file.rank);
        for row in rows {
            let row = row.as_array().ok_or_else(bad_shape)?;
            let mut out_row = Vec::with_capacity(row.len());
            for v in row {
                let v = v.as_array().ok_or_else(bad_shape)?;
                out_row.push(v.iter().map(|e| ring.elem_from_json(e)).collect::<Result<Vec<_>>>()?);
            }
            table.push(out_row);
        }
        let basis = (!file.basis.is_empty()).then_some(file.basis);
        Self::validate(ring, table, basis)
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        let mut terms = Vec::new();
        for (c, name) in x.0.iter().zip(&self.basis) {
            if self.ring.is_zero(c) {
                continue;
            }
            let cs = self.ring.format(c);
            terms.push(match (name.as_str(), cs.as_str()) {
                ("1", _) => cs,
                (_, "1") => name.clone(),
                _ => format!("({cs})*{name}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank-{} algebra over {}", self.rank, self.ring)?;
        for i in 1..self.rank {
            for j in 1..self.rank {
                writeln!(
                    f,
                    "  {}*{} = {}",
                    self.basis[i],
                    self.basis[j],
                    self.format_element(&self.product_of_basis(i, j))
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    ring: Value,
    rank: usize,
    #[serde(default)]
    basis: Vec<String>,
    table: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum HomKind {
    Identity,
    /// The canonical map from ℤ or from a residue ring (reduction of representatives).
    Canonical,
    Evaluate(RingElem),
}

/// A supported base-ring homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub source: BaseRing,
    pub target: BaseRing,
    kind: HomKind,
}

impl RingHom {
    /// The canonical map `source -> target`: identity, ℤ → ℚ, ℤ → 𝔽_p,
    /// ℤ → ℤ/p^k, ℤ/p^k → ℤ/p^j (j ≤ k) and ℤ/p^k → 𝔽_p.
    pub fn canonical(source: &BaseRing, target: &BaseRing) -> Result<Self> {
        let unsupported = || Error::UnsupportedHom { from: source.to_string(), to: target.to_string() };
        let kind = if source == target {
            HomKind::Identity
        } else {
            match (source, target) {
                (BaseRing::Integers, BaseRing::Rationals)
                | (BaseRing::Integers, BaseRing::PrimeField(_))
                | (BaseRing::Integers, BaseRing::ResidueRing { .. }) => HomKind::Canonical,
                (BaseRing::ResidueRing { p, k }, BaseRing::ResidueRing { p: q, k: j }) if p == q && j <= k => {
                    HomKind::Canonical
                }
                (BaseRing::ResidueRing { p, .. }, BaseRing::PrimeField(q)) if p == q => HomKind::Canonical,
                _ => return Err(unsupported()),
            }
        };
        Ok(RingHom { source: source.clone(), target: target.clone(), kind })
    }

    /// Evaluation `𝔽_p[t] → 𝔽_p` or `ℚ[t] → ℚ` at a point.
    pub fn evaluation(source: &BaseRing, point: RingElem) -> Result<Self> {
        let target = source
            .inner()
            .ok_or_else(|| Error::UnsupportedHom { from: source.to_string(), to: "evaluation".into() })?;
        if !target.contains(&point) {
            return Err(Error::InvalidElement { ring: target.to_string(), detail: format!("{point:?}") });
        }
        Ok(RingHom { source: source.clone(), target, kind: HomKind::Evaluate(point) })
    }

    pub fn apply(&self, e: &RingElem) -> RingElem {
        match &self.kind {
            HomKind::Identity => e.clone(),
            HomKind::Canonical => self.target.from_bigint(&self.source.lift_to_int(e).expect("integer or residue")),
            HomKind::Evaluate(pt) => {
                let RingElem::Poly(c) = e else { panic!("expected a polynomial") };
                poly::eval(&self.target, c, pt)
            }
        }
    }

    pub fn apply_vec(&self, v: &[RingElem]) -> Vec<RingElem> {
        v.iter().map(|e| self.apply(e)).collect()
    }
}

//! Standard involutions: detection, reduced trace and norm, Theorem A, and
//! the commutative case.
//!
//! An involution is stored as its trace functional; conjugation is
//! `x ↦ trd(x)·1 - x` and the norm is `x·x̄`.

use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, StructureAlgebra};
use crate::degree::{algebra_degree, geometric_degree, MPoly, Monomial};
use crate::error::{Error, Result};
use crate::ring::linalg::{kernel_is_trivial, Matrix};
use crate::ring::{BaseRing, RingElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardInvolution {
    /// `trd(e_0) = 2, trd(e_1), ..., trd(e_{n-1})`.
    trd: Vec<RingElem>,
    /// `nrd(e_i)`.
    nrd: Vec<RingElem>,
    /// `nrd(e_i + e_j) - nrd(e_i) - nrd(e_j)` for `i < j`, row-major upper triangle.
    pairing: Vec<Vec<RingElem>>,
}

/// Why no standard involution exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// `e_i^2` has a component outside `R + R e_i`.
    Basis(usize),
    /// `(e_i + e_j)^2 - (trd e_i + trd e_j)(e_i + e_j)` is not a scalar.
    Pair(usize, usize),
}

impl Obstruction {
    pub fn to_json(&self) -> Value {
        match *self {
            Obstruction::Basis(i) => json!({"basis": i}),
            Obstruction::Pair(i, j) => json!({"pair": [i, j]}),
        }
    }
}

fn scalar_part(alg: &StructureAlgebra, x: &AlgebraElement) -> Option<RingElem> {
    alg.is_scalar(x).then(|| x.0[0].clone())
}

/// Finds the standard involution of `alg`, or the first basis element or pair
/// that rules one out.
pub fn find_standard_involution(alg: &StructureAlgebra) -> std::result::Result<StandardInvolution, Obstruction> {
    let ring = alg.ring();
    let n = alg.rank();
    let mut trd = vec![ring.from_i64(2)];
    let mut nrd = vec![ring.one()];
    for i in 1..n {
        let sq = alg.product_of_basis(i, i);
        if (1..n).any(|k| k != i && !ring.is_zero(&sq.0[k])) {
            return Err(Obstruction::Basis(i));
        }
        trd.push(sq.0[i].clone());
        nrd.push(ring.neg(&sq.0[0]));
    }
    let mut pairing = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = alg.add(&alg.basis_element(i), &alg.basis_element(j));
            let t = ring.add(&trd[i], &trd[j]);
            let rest = alg.sub(&alg.mul(&x, &x), &alg.scale(&t, &x));
            let c = scalar_part(alg, &rest).ok_or(Obstruction::Pair(i, j))?;
            let nrd_sum = ring.neg(&c);
            pairing[i][j] = ring.sub(&ring.sub(&nrd_sum, &nrd[i]), &nrd[j]);
        }
    }
    let inv = StandardInvolution { trd, nrd, pairing };
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (alg.basis_element(i), alg.basis_element(j));
            let lhs = inv.conjugate(alg, &alg.mul(&ei, &ej));
            let rhs = alg.mul(&inv.conjugate(alg, &ej), &inv.conjugate(alg, &ei));
            assert_eq!(lhs, rhs, "conjugation fails to reverse e_{i} e_{j} although the norm checks passed");
        }
    }
    Ok(inv)
}

impl StandardInvolution {
    pub fn trd_vector(&self) -> &[RingElem] {
        &self.trd
    }

    pub fn rank(&self) -> usize {
        self.trd.len()
    }

    pub fn reduced_trace(&self, ring: &BaseRing, x: &AlgebraElement) -> RingElem {
        ring.sum(x.0.iter().zip(&self.trd).map(|(a, t)| ring.mul(a, t)).collect::<Vec<_>>().iter())
    }

    pub fn conjugate(&self, alg: &StructureAlgebra, x: &AlgebraElement) -> AlgebraElement {
        alg.sub(&alg.scalar(&self.reduced_trace(alg.ring(), x)), x)
    }

    /// `x·x̄`, which lies in `R·1`.
    pub fn reduced_norm(&self, alg: &StructureAlgebra, x: &AlgebraElement) -> RingElem {
        let p = alg.mul(x, &self.conjugate(alg, x));
        assert!(alg.is_scalar(&p), "x times its conjugate is not a scalar");
        p.0[0].clone()
    }

    /// `nrd` evaluated from the stored norm form, without multiplying in `B`.
    pub fn norm_form(&self, ring: &BaseRing, x: &AlgebraElement) -> RingElem {
        let n = self.rank();
        let mut acc = ring.zero();
        for i in 0..n {
            acc = ring.add(&acc, &ring.mul(&self.nrd[i], &ring.mul(&x.0[i], &x.0[i])));
            for j in i + 1..n {
                acc = ring.add(&acc, &ring.mul(&self.pairing[i][j], &ring.mul(&x.0[i], &x.0[j])));
            }
        }
        acc
    }

    /// Column `j` holds the coordinates of `ē_j`.
    pub fn conjugation_matrix(&self, alg: &StructureAlgebra) -> Matrix {
        let n = alg.rank();
        let mut m = Matrix::zeros(alg.ring(), n, n);
        for j in 0..n {
            for (k, v) in self.conjugate(alg, &alg.basis_element(j)).0.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    pub fn is_trivial(&self, alg: &StructureAlgebra) -> bool {
        (0..alg.rank()).all(|j| self.conjugate(alg, &alg.basis_element(j)) == alg.basis_element(j))
    }

    /// `t(a) = Σ trd(e_i) a_i` and `n(a) = Σ nrd(e_i) a_i^2 + Σ_{i<j} pairing a_i a_j`,
    /// so that `ξ^2 - t(a) ξ + n(a) = 0`.
    pub fn universal_trace_and_norm(&self, ring: &BaseRing) -> (MPoly, MPoly) {
        let n = self.rank();
        let var = |i: usize| Monomial::one(n).times_var(i);
        let mut t = MPoly::zero();
        let mut nm = MPoly::zero();
        for i in 0..n {
            t.add_term(ring, var(i), self.trd[i].clone());
            nm.add_term(ring, var(i).times_var(i), self.nrd[i].clone());
            for j in i + 1..n {
                nm.add_term(ring, var(i).times_var(j), self.pairing[i][j].clone());
            }
        }
        (t, nm)
    }

    pub fn to_json(&self, ring: &BaseRing) -> Value {
        json!({"trd": self.trd.iter().map(|t| ring.elem_to_json(t)).collect::<Vec<_>>()})
    }
}

/// Whether the trace vector is the only one satisfying the defining
/// constraints `e^2 - trd(e) e + nrd(e) = 0` for basis elements and pairwise
/// sums, decided by kernel triviality of their linear system.
pub fn check_uniqueness(alg: &StructureAlgebra) -> bool {
    let ring = alg.ring();
    let n = alg.rank();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    // unknowns: trd(e_1..e_{n-1}), nrd(e_1..e_{n-1}), nrd(e_i + e_j)
    let cols = 2 * (n - 1) + pairs.len();
    let mut a = Matrix::zeros(ring, n * (n - 1 + pairs.len()), cols);
    let mut row = 0;
    let t_col = |i: usize| i - 1;
    let n_col = |i: usize| n - 1 + i - 1;
    for i in 1..n {
        // -trd(e_i) e_i + nrd(e_i) 1
        a.set(row + i, t_col(i), ring.from_i64(-1));
        a.set(row, n_col(i), ring.one());
        row += n;
    }
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for idx in [i, j] {
            if idx > 0 {
                for k in [i, j] {
                    let v = ring.sub(a.get(row + k, t_col(idx)), &ring.one());
                    a.set(row + k, t_col(idx), v);
                }
            }
        }
        a.set(row, 2 * (n - 1) + p, ring.one());
        row += n;
    }
    kernel_is_trivial(ring, &a)
}

/// The three conditions of Theorem A and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    /// `deg_R(B) = 2`, when the degree is computable.
    pub deg2: Option<bool>,
    pub gdeg2: bool,
    pub has_involution: bool,
    /// `B = R`; condition (iii) excludes it.
    pub degenerate: bool,
    /// Some `a` with `a(a-1)` a nonzerodivisor.
    pub witness_a: Option<RingElem>,
    pub consistent: bool,
}

impl TheoremAReport {
    pub fn to_json(&self, ring: &BaseRing) -> Value {
        json!({
            "deg2": self.deg2,
            "gdeg2": self.gdeg2,
            "has_involution": self.has_involution,
            "degenerate": self.degenerate,
            "witness_a": self.witness_a.as_ref().map(|a| ring.elem_to_json(a)),
            "consistent": self.consistent,
        })
    }
}

pub fn theorem_a_report(alg: &StructureAlgebra) -> TheoremAReport {
    let deg2 = algebra_degree(alg).ok().map(|d| d.degree == 2);
    let gdeg2 = geometric_degree(alg).degree == 2;
    theorem_a_from_parts(alg, deg2, gdeg2, find_standard_involution(alg).is_ok())
}

/// Assembles the report from independently computed facts.
pub fn theorem_a_from_parts(alg: &StructureAlgebra, deg2: Option<bool>, gdeg2: bool, has_involution: bool) -> TheoremAReport {
    let degenerate = alg.rank() == 1;
    let iii = has_involution && !degenerate;
    let witness_a = alg.ring().theorem_a_witness();
    let mut consistent = gdeg2 == iii;
    if witness_a.is_some() {
        if let Some(d) = deg2 {
            consistent &= d == gdeg2;
        }
    }
    TheoremAReport { deg2, gdeg2, has_involution, degenerate, witness_a, consistent }
}

/// Outcome of [`commutative_classification`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutativeClass {
    RankAtMostTwo,
    /// Generators `x_i = e_i - shift_i` with `x_i^2 ∈ J` and `x_i x_j ∈ JB`,
    /// where `J = ann_R(2)`.
    Generators { shifts: Vec<RingElem>, generators: Vec<AlgebraElement>, squares: Vec<RingElem> },
    /// A generator condition that fails; indicates an upstream bug.
    Violation(String),
}

fn in_ann2(ring: &BaseRing, r: &RingElem) -> bool {
    ring.is_zero(&ring.add(r, r))
}

pub fn commutative_classification(alg: &StructureAlgebra, inv: &StandardInvolution) -> Result<CommutativeClass> {
    if let Some((i, j)) = alg.commutativity_witness() {
        return Err(Error::Precondition(format!("basis elements {i} and {j} do not commute")));
    }
    if inv.rank() != alg.rank() {
        return Err(Error::Precondition("involution belongs to another algebra".into()));
    }
    let ring = alg.ring();
    let n = alg.rank();
    if n <= 2 {
        return Ok(CommutativeClass::RankAtMostTwo);
    }
    let two = ring.from_i64(2);
    let mut shifts = Vec::new();
    let mut generators = Vec::new();
    for i in 1..n {
        let t = &inv.trd_vector()[i];
        let Some(u) = ring.divide(t, &two) else {
            return Ok(CommutativeClass::Violation(format!("trd(e_{i}) = {} is not divisible by 2", ring.format(t))));
        };
        generators.push(alg.sub(&alg.basis_element(i), &alg.scalar(&u)));
        shifts.push(u);
    }
    let mut squares = Vec::new();
    for (a, x) in generators.iter().enumerate() {
        for (b, y) in generators.iter().enumerate().skip(a) {
            let p = alg.mul(x, y);
            if a == b {
                match scalar_part(alg, &p) {
                    Some(s) if in_ann2(ring, &s) => squares.push(s),
                    _ => {
                        return Ok(CommutativeClass::Violation(format!("x_{}^2 = {} is not in J", a + 1, alg.format_element(&p))));
                    }
                }
            } else if !p.0.iter().all(|c| in_ann2(ring, c)) {
                return Ok(CommutativeClass::Violation(format!(
                    "x_{} x_{} = {} is not in JB",
                    a + 1,
                    b + 1,
                    alg.format_element(&p)
                )));
            }
        }
    }
    Ok(CommutativeClass::Generators { shifts, generators, squares })
}

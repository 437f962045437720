//! Element degree, algebra degree and geometric degree.
//!
//! The geometric degree is the degree of the universal element
//! `ξ = a_0 e_0 + ... + a_{n-1} e_{n-1}` over `R[a_0, ..., a_{n-1}]`. Powers of
//! `ξ` are homogeneous in the `a`'s, so each candidate relation can be
//! searched for with homogeneous coefficients, which keeps every system
//! finite and exact over `R`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;

use crate::algebra::{AlgebraElement, MonicPolynomial, RingHom, StructureAlgebra};
use crate::error::{Error, Result};
use crate::finite::FiniteTable;
use crate::ring::linalg::{kernel_is_trivial, solve_linear, solve_linear_local_at, LinearSystem, Matrix, Solution};
use crate::ring::{is_prime, BaseRing, RingElem};

/// Result of [`element_degree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: usize,
    /// A monic relation of minimal degree.
    pub relation: MonicPolynomial,
    /// Whether that relation is the only one of its degree.
    pub unique: bool,
}

impl DegreeCertificate {
    /// The minimal polynomial, when it is unique (exactly when `R[x]` is free).
    pub fn minimal_polynomial(&self) -> Option<&MonicPolynomial> {
        self.unique.then_some(&self.relation)
    }
}

fn membership_system(alg: &StructureAlgebra, powers: &[AlgebraElement], d: usize) -> LinearSystem {
    let ring = alg.ring();
    let n = alg.rank();
    let mut a = Matrix::zeros(ring, n, d);
    for (j, p) in powers[..d].iter().enumerate() {
        for k in 0..n {
            a.set(k, j, p.0[k].clone());
        }
    }
    let rhs = powers[d].0.iter().map(|v| ring.neg(v)).collect();
    LinearSystem::new(a, rhs)
}

/// Smallest `d` with `x^d ∈ R + Rx + ... + Rx^{d-1}`.
pub fn element_degree(alg: &StructureAlgebra, x: &AlgebraElement) -> DegreeCertificate {
    let ring = alg.ring();
    let powers = alg.powers(x, alg.rank());
    for d in 1..=alg.rank() {
        let sys = membership_system(alg, &powers, d);
        let sol = solve_linear(ring, &sys).expect("membership systems are well formed");
        if let Solution::Witness(c) = sol {
            return DegreeCertificate {
                degree: d,
                relation: MonicPolynomial::from_lower(c),
                unique: kernel_is_trivial(ring, &sys.matrix),
            };
        }
    }
    unreachable!("x satisfies its characteristic polynomial")
}

/// Degree of `x` over the localization `ℤ_(p)` of a ℤ-algebra.
pub fn element_degree_local(alg: &StructureAlgebra, x: &AlgebraElement, p: u64) -> Result<usize> {
    if *alg.ring() != BaseRing::Integers {
        return Err(Error::Precondition("local degree needs an algebra over Z".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let powers = alg.powers(x, alg.rank());
    for d in 1..=alg.rank() {
        if solve_linear_local_at(&membership_system(alg, &powers, d), p)?.is_solvable() {
            return Ok(d);
        }
    }
    Err(Error::Internal("no monic relation up to the rank".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeMethod {
    /// Maximum over every element of a finite algebra.
    Exhaustive,
    /// Geometric degree over the fraction field of an infinite domain.
    FractionFieldGdeg,
}

impl DegreeMethod {
    pub fn tag(self) -> &'static str {
        match self {
            DegreeMethod::Exhaustive => "exhaustive",
            DegreeMethod::FractionFieldGdeg => "fraction-field-gdeg",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraDegree {
    pub degree: usize,
    pub method: DegreeMethod,
}

/// `deg_R(B)`, the largest degree of an element.
///
/// Over an infinite domain the degree of a generic element equals the
/// geometric degree over the fraction field `K`: the elements of `B ⊗ K`
/// whose powers `1, ..., x^{g-1}` are dependent form a proper Zariski-closed
/// set, so some element of `B` avoids it, and for an integrally closed `R` the
/// minimal polynomial over `K` of an element of `B` already has coefficients
/// in `R`. [`sample_degree_check`] tests this claim empirically.
pub fn algebra_degree(alg: &StructureAlgebra) -> Result<AlgebraDegree> {
    let ring = alg.ring();
    if ring.is_finite() {
        let ft = FiniteTable::from_algebra(alg).ok_or_else(|| Error::Internal("finite table conversion".into()))?;
        return Ok(AlgebraDegree { degree: ft.algebra_degree()?, method: DegreeMethod::Exhaustive });
    }
    let degree = match ring {
        // ℤ → ℚ is flat, so the geometric degree is unchanged; solving over ℚ
        // is the literal fraction-field computation.
        BaseRing::Integers => {
            let q = alg.base_change(&RingHom::canonical(ring, &BaseRing::Rationals)?)?;
            geometric_degree(&q).degree
        }
        // For polynomial rings the fraction field is not representable; the
        // geometric degree over R equals the one over K by flatness.
        BaseRing::Rationals | BaseRing::PolyFp(_) | BaseRing::PolyQ => geometric_degree(alg).degree,
        _ => return Err(Error::UnsupportedRing(ring.to_string())),
    };
    Ok(AlgebraDegree { degree, method: DegreeMethod::FractionFieldGdeg })
}

/// Exhaustive algebra degree through [`element_degree`] on every element;
/// slower than [`algebra_degree`] and used to cross-check it.
pub fn algebra_degree_by_solving(alg: &StructureAlgebra) -> Result<usize> {
    let ring = alg.ring();
    let elems: Vec<RingElem> = ring.enumerate()?.collect();
    let m = elems.len() as u32;
    let mut idx = vec![0u32; alg.rank()];
    let mut best = 1;
    loop {
        let x = alg.element(idx.iter().map(|&i| elems[i as usize].clone()).collect());
        best = best.max(element_degree(alg, &x).degree);
        if !crate::finite::odometer(&mut idx, m) {
            return Ok(best);
        }
    }
}

/// Outcome of sampling random elements against a claimed algebra degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleCheck {
    pub samples: usize,
    pub max_seen: usize,
    pub claimed: usize,
}

impl SampleCheck {
    /// No sample exceeded the claim and at least one attained it.
    pub fn agrees(&self) -> bool {
        self.max_seen == self.claimed
    }
}

/// A random ring element with small coefficients.
pub fn random_ring_elem(ring: &BaseRing, rng: &mut impl Rng, bound: i64) -> RingElem {
    match ring {
        BaseRing::PolyFp(_) | BaseRing::PolyQ => {
            let inner = ring.inner().unwrap();
            let len = rng.gen_range(0..=3);
            let coeffs = (0..len).map(|_| random_ring_elem(&inner, rng, bound)).collect();
            crate::ring::poly::from_coeffs(&inner, coeffs)
        }
        BaseRing::Rationals => {
            let num = rng.gen_range(-bound..=bound);
            let den = rng.gen_range(1..=bound.max(1));
            ring.from_rational(&num_rational::BigRational::new(num.into(), den.into())).unwrap()
        }
        _ => ring.from_i64(rng.gen_range(-bound..=bound)),
    }
}

pub fn random_element(alg: &StructureAlgebra, rng: &mut impl Rng, bound: i64) -> AlgebraElement {
    alg.element((0..alg.rank()).map(|_| random_ring_elem(alg.ring(), rng, bound)).collect())
}

/// Samples random elements and records the largest degree seen.
pub fn sample_degree_check(alg: &StructureAlgebra, claimed: usize, samples: usize, rng: &mut impl Rng) -> SampleCheck {
    let mut max_seen = 1;
    for _ in 0..samples {
        let x = random_element(alg, rng, 20);
        max_seen = max_seen.max(element_degree(alg, &x).degree);
        if max_seen > claimed {
            break;
        }
    }
    SampleCheck { samples, max_seen, claimed }
}

// ----- multivariate polynomials -----

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut e = self.0.clone();
        e[v] += 1;
        Monomial(e)
    }

    pub fn times(&self, other: &Monomial) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `d` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e);
                rec(nvars, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(nvars, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the variables `a_0, a_1, ...`; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    pub terms: BTreeMap<Monomial, RingElem>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(ring: &BaseRing, nvars: usize, c: RingElem) -> Self {
        let mut p = MPoly::zero();
        p.add_term(ring, Monomial::one(nvars), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, ring: &BaseRing, m: Monomial, c: RingElem) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ring.add(e.get(), &c);
                if ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, ring: &BaseRing, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, ring: &BaseRing, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(ring, m1.times(m2), ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, ring: &BaseRing, s: &RingElem) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(ring, m.clone(), ring.mul(c, s));
        }
        out
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> MPoly {
        MPoly { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn eval(&self, ring: &BaseRing, point: &[RingElem]) -> RingElem {
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                t = ring.mul(&t, &ring.pow(v, e));
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Terms from the largest monomial down, with the given variable names.
    pub fn format(&self, ring: &BaseRing, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{e}", names[v]) })
                .collect();
            let cs = ring.format(c);
            parts.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono.join("*"),
                (false, "-1") => format!("-{}", mono.join("*")),
                _ => format!("{cs}*{}", mono.join("*")),
            });
        }
        parts.join(" + ")
    }
}

/// Powers of the universal element as graded coordinate tables.
#[derive(Clone, Debug)]
pub struct UniversalElement {
    nvars: usize,
    /// `powers[e][k]` is the coefficient of `e_k` in `ξ^e`.
    powers: Vec<Vec<MPoly>>,
}

impl UniversalElement {
    pub fn new(alg: &StructureAlgebra) -> Self {
        let n = alg.rank();
        let mut one = vec![MPoly::zero(); n];
        one[0] = MPoly::constant(alg.ring(), n, alg.ring().one());
        UniversalElement { nvars: n, powers: vec![one] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coordinates of `ξ^e`, extending the table as needed.
    pub fn power(&mut self, alg: &StructureAlgebra, e: usize) -> &[MPoly] {
        let ring = alg.ring();
        let n = alg.rank();
        while self.powers.len() <= e {
            let prev = self.powers.last().unwrap();
            let mut next = vec![MPoly::zero(); n];
            for (i, pi) in prev.iter().enumerate() {
                for (mono, val) in &pi.terms {
                    for j in 0..n {
                        let shifted = mono.times_var(j);
                        for (k, slot) in next.iter_mut().enumerate() {
                            let c = alg.coeff(i, j, k);
                            if !ring.is_zero(c) {
                                slot.add_term(ring, shifted.clone(), ring.mul(val, c));
                            }
                        }
                    }
                }
            }
            self.powers.push(next);
        }
        &self.powers[e]
    }
}

/// A monic relation `ξ^d + c_{d-1} ξ^{d-1} + ... + c_0 = 0` with
/// `c_j ∈ R[a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricDegree {
    pub degree: usize,
    /// `c_0, ..., c_{d-1}`; `c_j` is homogeneous of degree `d - j`.
    pub relation: Vec<MPoly>,
    pub unique: bool,
}

impl GeometricDegree {
    pub fn format_relation(&self, ring: &BaseRing, names: &[String]) -> String {
        let d = self.degree;
        let mut s = if d == 1 { "ξ".to_string() } else { format!("ξ^{d}") };
        for j in (0..d).rev() {
            let c = &self.relation[j];
            if c.is_zero() {
                continue;
            }
            let pw = match j {
                0 => String::new(),
                1 => "*ξ".into(),
                _ => format!("*ξ^{j}"),
            };
            s.push_str(&format!(" + ({}){pw}", c.format(ring, names)));
        }
        s + " = 0"
    }
}

impl fmt::Display for GeometricDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gdeg {}", self.degree)
    }
}

/// Unknown layout: for each `j < d`, the monomials of `c_j` in ascending order.
struct RelationSystem {
    unknowns: Vec<(usize, Monomial)>,
    sys: LinearSystem,
}

/// Equations `Σ_j c_j ξ^j = -ξ^d`, one per basis coordinate and monomial.
/// With `graded`, `c_j` ranges over homogeneous polynomials of degree
/// `d - j`; otherwise over all polynomials of degree at most `d - j`.
fn relation_system(alg: &StructureAlgebra, ue: &mut UniversalElement, d: usize, graded: bool) -> RelationSystem {
    let ring = alg.ring().clone();
    let n = alg.rank();
    let nv = ue.nvars();
    let monos_upto = |deg: usize| -> Vec<Monomial> {
        if graded {
            Monomial::all_of_degree(nv, deg as u32)
        } else {
            (0..=deg as u32).flat_map(|e| Monomial::all_of_degree(nv, e)).collect()
        }
    };
    let unknowns: Vec<(usize, Monomial)> =
        (0..d).flat_map(|j| monos_upto(d - j).into_iter().map(move |m| (j, m))).collect();
    let eq_monos = monos_upto(d);
    let eq_index: HashMap<&Monomial, usize> = eq_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows = n * eq_monos.len();
    let mut a = Matrix::zeros(&ring, rows, unknowns.len());
    let mut rhs = vec![ring.zero(); rows];
    for e in 0..=d {
        ue.power(alg, e);
    }
    for (col, (j, mono)) in unknowns.iter().enumerate() {
        for (k, coord) in ue.powers[*j].iter().enumerate() {
            for (m2, val) in &coord.terms {
                let row = k * eq_monos.len() + eq_index[&mono.times(m2)];
                let v = ring.add(a.get(row, col), val);
                a.set(row, col, v);
            }
        }
    }
    for (k, coord) in ue.powers[d].iter().enumerate() {
        for (m, val) in &coord.terms {
            rhs[k * eq_monos.len() + eq_index[m]] = ring.neg(val);
        }
    }
    RelationSystem { unknowns, sys: LinearSystem::new(a, rhs) }
}

fn assemble(ring: &BaseRing, d: usize, unknowns: &[(usize, Monomial)], sol: &[RingElem]) -> Vec<MPoly> {
    let mut rel = vec![MPoly::zero(); d];
    for ((j, m), c) in unknowns.iter().zip(sol) {
        rel[*j].add_term(ring, m.clone(), c.clone());
    }
    rel
}

/// Whether `ξ^d + Σ c_j ξ^j` vanishes identically.
pub fn relation_holds(alg: &StructureAlgebra, ue: &mut UniversalElement, relation: &[MPoly]) -> bool {
    let ring = alg.ring();
    let d = relation.len();
    let mut total: Vec<MPoly> = ue.power(alg, d).to_vec();
    for (j, c) in relation.iter().enumerate() {
        let pj = ue.power(alg, j).to_vec();
        for (k, slot) in total.iter_mut().enumerate() {
            *slot = slot.add(ring, &c.mul(ring, &pj[k]));
        }
    }
    total.iter().all(MPoly::is_zero)
}

/// Smallest degree of a monic relation of `ξ` over `R[a]`.
pub fn geometric_degree(alg: &StructureAlgebra) -> GeometricDegree {
    let ring = alg.ring();
    let mut ue = UniversalElement::new(alg);
    for d in 1..=alg.rank() {
        let rs = relation_system(alg, &mut ue, d, true);
        if let Solution::Witness(sol) = solve_linear(ring, &rs.sys).expect("relation systems are well formed") {
            let relation = assemble(ring, d, &rs.unknowns, &sol);
            debug_assert!(relation_holds(alg, &mut ue, &relation));
            return GeometricDegree { degree: d, relation, unique: kernel_is_trivial(ring, &rs.sys.matrix) };
        }
    }
    unreachable!("ξ satisfies its characteristic polynomial")
}

/// Solves the ungraded relation system at degree `d` and checks that it is
/// solvable exactly when the graded one is, and that the homogeneous
/// components of an ungraded solution again form a relation.
pub fn restriction_of_homogeneity_check(alg: &StructureAlgebra, d: usize) -> bool {
    let ring = alg.ring();
    let mut ue = UniversalElement::new(alg);
    let graded = relation_system(alg, &mut ue, d, true);
    let graded_ok = solve_linear(ring, &graded.sys).expect("well formed").is_solvable();
    let full = relation_system(alg, &mut ue, d, false);
    match solve_linear(ring, &full.sys).expect("well formed") {
        Solution::NoSolution => !graded_ok,
        Solution::Witness(sol) => {
            let rel = assemble(ring, d, &full.unknowns, &sol);
            let projected: Vec<MPoly> = rel.iter().enumerate().map(|(j, c)| c.component((d - j) as u32)).collect();
            graded_ok && relation_holds(alg, &mut ue, &projected)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::unit_table;

    fn boolean3() -> StructureAlgebra {
        let f2 = BaseRing::PrimeField(2);
        let t = unit_table(&f2, 3, |a, b| match (a, b) {
            (1, 1) => vec![f2.zero(), f2.one(), f2.zero()],
            (2, 2) => vec![f2.zero(), f2.zero(), f2.one()],
            _ => vec![f2.zero(); 3],
        });
        StructureAlgebra::from_table(&f2, t).unwrap()
    }

    fn dual_numbers(ring: &BaseRing) -> StructureAlgebra {
        StructureAlgebra::from_table(ring, unit_table(ring, 2, |_, _| vec![ring.zero(); 2])).unwrap()
    }

    #[test]
    fn element_degree_examples() {
        let b = boolean3();
        let cert = element_degree(&b, &b.element_i64(&[0, 1, 0]));
        assert_eq!(cert.degree, 2);
        let f2 = b.ring().clone();
        // T^2 - T = T^2 + T over F_2
        assert_eq!(cert.minimal_polynomial().unwrap().coeffs(&f2), vec![f2.zero(), f2.one(), f2.one()]);
        assert_eq!(element_degree(&b, &b.one()).degree, 1);
    }

    #[test]
    fn non_projective_subalgebra_has_no_unique_minimal_polynomial() {
        let z4 = BaseRing::residue_ring(2, 2).unwrap();
        let b = dual_numbers(&z4);
        let cert = element_degree(&b, &b.element_i64(&[0, 2]));
        assert_eq!(cert.degree, 2);
        assert!(!cert.unique);
        assert!(cert.minimal_polynomial().is_none());
        let cert = element_degree(&b, &b.element_i64(&[0, 1]));
        assert!(cert.unique);
    }

    #[test]
    fn local_degree() {
        let z = BaseRing::Integers;
        // Z[x]/(x^2 - 2x): x^2 = 2x
        let b = StructureAlgebra::from_i64_table(&z, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 2]]]).unwrap();
        let x = b.element_i64(&[0, 3]);
        for p in [2, 3, 5, 7] {
            assert_eq!(element_degree_local(&b, &x, p).unwrap(), 2);
        }
        assert_eq!(element_degree_local(&b, &b.one(), 2).unwrap(), 1);
        assert_eq!(element_degree_local(&b, &x, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn boolean_cube_degree_vs_geometric_degree() {
        let b = boolean3();
        assert_eq!(algebra_degree(&b).unwrap(), AlgebraDegree { degree: 2, method: DegreeMethod::Exhaustive });
        assert_eq!(algebra_degree_by_solving(&b).unwrap(), 2);
        let g = geometric_degree(&b);
        assert_eq!(g.degree, 3);
        assert!(g.unique);
    }

    #[test]
    fn rank_one_has_degree_one() {
        let z = BaseRing::Integers;
        let b = StructureAlgebra::from_i64_table(&z, &[vec![vec![1]]]).unwrap();
        assert_eq!(geometric_degree(&b).degree, 1);
        assert_eq!(algebra_degree(&b).unwrap().degree, 1);
        assert!(restriction_of_homogeneity_check(&b, 1));
    }

    #[test]
    fn monomials_in_graded_order() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert!(Monomial(vec![0, 0, 1]) < Monomial(vec![2, 0, 0]));
    }

    #[test]
    fn homogeneity_check_on_small_algebras() {
        let b = boolean3();
        for d in 1..=3 {
            assert!(restriction_of_homogeneity_check(&b, d));
        }
    }
}

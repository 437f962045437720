//! Rank-3 algebras with a standard involution: good bases, the `GL_2`-orbit
//! of `(u, v)`, isomorphism testing, the Jacobson element and the right
//! regular embedding into 2×2 matrices.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{unit_table, AlgebraElement, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exceptional::recognize_exceptional;
use crate::involution::find_standard_involution;
use crate::ring::linalg::{invert, Matrix};
use crate::ring::{BaseRing, RingElem};

/// The algebra with good basis `1, i, j`:
/// `i^2 = ui, ij = uj, j^2 = vj, ji = vi`.
pub fn nc_algebra(ring: &BaseRing, u: &RingElem, v: &RingElem) -> StructureAlgebra {
    let z = ring.zero();
    let t = unit_table(ring, 3, |a, b| match (a, b) {
        (1, 1) => vec![z.clone(), u.clone(), z.clone()],
        (1, 2) => vec![z.clone(), z.clone(), u.clone()],
        (2, 2) => vec![z.clone(), z.clone(), v.clone()],
        _ => vec![z.clone(), v.clone(), z.clone()],
    });
    StructureAlgebra::from_table(ring, t).expect("the (NC) laws are associative")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodBasisForm {
    /// Rows `1, i, j` in the input algebra's coordinates.
    pub basis_change: Matrix,
    pub u: RingElem,
    pub v: RingElem,
    /// The input algebra rewritten on the good basis.
    pub normal: StructureAlgebra,
}

/// Rewrites a rank-3 algebra with standard involution on a good basis.
///
/// Errors with `Precondition` when the rank is not 3 or there is no
/// involution, and with `Internal` if an involution exists but no
/// exceptional splitting is found, which would contradict the rank-3 theorem.
pub fn normalize_rank3(alg: &StructureAlgebra) -> Result<GoodBasisForm> {
    if alg.rank() != 3 {
        return Err(Error::Precondition(format!("rank {} is not 3", alg.rank())));
    }
    let inv = find_standard_involution(alg)
        .map_err(|o| Error::Precondition(format!("no standard involution ({o:?})")))?;
    let data = recognize_exceptional(alg).ok_or_else(|| {
        Error::Internal(format!(
            "rank-3 algebra over {} with involution trd = {:?} is not recognized as exceptional; table {:?}",
            alg.ring(),
            inv.trd_vector(),
            alg.table()
        ))
    })?;
    let normal = alg.change_basis(&data.basis_change)?;
    let (u, v) = (data.t[0].clone(), data.t[1].clone());
    if normal.table() != nc_algebra(alg.ring(), &u, &v).table() {
        return Err(Error::Internal("good basis does not satisfy the (NC) laws".into()));
    }
    Ok(GoodBasisForm { basis_change: data.basis_change, u, v, normal })
}

/// Canonical form of the `GL_2(R)`-orbit of `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitInvariant {
    /// Over a field: whether `(u, v) ≠ (0, 0)`.
    Field { nonzero: bool },
    /// Over ℤ or a polynomial ring: the normalized gcd of `u, v`.
    Gcd(RingElem),
    /// Over `ℤ/p^k`: `min(v_p(u), v_p(v), k)`.
    Valuation(u32),
}

impl OrbitInvariant {
    pub fn to_json(&self, ring: &BaseRing) -> Value {
        match self {
            OrbitInvariant::Field { nonzero } => json!({"kind": "field", "nonzero": nonzero}),
            OrbitInvariant::Gcd(g) => json!({"kind": "gcd", "value": ring.elem_to_json(g)}),
            OrbitInvariant::Valuation(e) => json!({"kind": "valuation", "value": e}),
        }
    }

    pub fn describe(&self, ring: &BaseRing) -> String {
        match self {
            OrbitInvariant::Field { nonzero: true } => "(u,v) != 0".into(),
            OrbitInvariant::Field { nonzero: false } => "(u,v) = 0".into(),
            OrbitInvariant::Gcd(g) => format!("gcd {}", ring.format(g)),
            OrbitInvariant::Valuation(e) => format!("min valuation {e}"),
        }
    }
}

impl fmt::Display for OrbitInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitInvariant::Field { nonzero } => write!(f, "field:{}", if *nonzero { "nonzero" } else { "zero" }),
            OrbitInvariant::Gcd(g) => write!(f, "gcd:{g:?}"),
            OrbitInvariant::Valuation(e) => write!(f, "val:{e}"),
        }
    }
}

pub fn orbit_invariant(ring: &BaseRing, u: &RingElem, v: &RingElem) -> OrbitInvariant {
    if ring.is_field() {
        return OrbitInvariant::Field { nonzero: !(ring.is_zero(u) && ring.is_zero(v)) };
    }
    match ring {
        BaseRing::ResidueRing { .. } => OrbitInvariant::Valuation(ring.valuation(u).min(ring.valuation(v))),
        _ => OrbitInvariant::Gcd(ring.gcd(u, v)),
    }
}

/// Extended Euclid: `(g, s, t)` with `g = su + tv` (not normalized).
fn ext_gcd(ring: &BaseRing, u: &RingElem, v: &RingElem) -> (RingElem, RingElem, RingElem) {
    let (mut r0, mut r1) = (u.clone(), v.clone());
    let (mut s0, mut s1) = (ring.one(), ring.zero());
    let (mut t0, mut t1) = (ring.zero(), ring.one());
    while !ring.is_zero(&r1) {
        let (q, r) = ring.div_rem(&r0, &r1);
        let s2 = ring.sub(&s0, &ring.mul(&q, &s1));
        let t2 = ring.sub(&t0, &ring.mul(&q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    (r0, s0, t0)
}

/// `G ∈ GL_2(R)` and `d` with `G (u, v)^T = (d, 0)^T`, `d` the canonical
/// generator of the orbit.
pub fn reduce_pair(ring: &BaseRing, u: &RingElem, v: &RingElem) -> (RingElem, Matrix) {
    if ring.is_zero(u) && ring.is_zero(v) {
        return (ring.zero(), Matrix::identity(ring, 2));
    }
    if let BaseRing::ResidueRing { p, .. } = *ring {
        let swap = ring.valuation(v) < ring.valuation(u);
        let (a, b) = if swap { (v, u) } else { (u, v) };
        let e = ring.valuation(a);
        let d = ring.pow(&ring.from_i64(p as i64), e);
        let w = ring.divide(a, &d).expect("a = p^e w");
        let w_inv = ring.inv(&w).expect("w is a unit");
        let q = ring.divide(b, a).expect("v_p(b) >= v_p(a)");
        let g = Matrix::from_rows(vec![vec![w_inv, ring.zero()], vec![ring.neg(&q), ring.one()]]);
        let g = if swap {
            g.mul(ring, &Matrix::from_rows(vec![vec![ring.zero(), ring.one()], vec![ring.one(), ring.zero()]]))
        } else {
            g
        };
        return (d, g);
    }
    let (g, s, t) = ext_gcd(ring, u, v);
    let unit = ring.normalizing_unit(&g);
    let d = ring.mul(&g, &unit);
    let row0 = vec![ring.mul(&s, &unit), ring.mul(&t, &unit)];
    let row1 = vec![ring.neg(&ring.divide(v, &g).unwrap()), ring.divide(u, &g).unwrap()];
    (d, Matrix::from_rows(vec![row0, row1]))
}

/// Some `A ∈ GL_2(R)` with `A (u1, v1)^T = (u2, v2)^T`, if the pairs lie in
/// one orbit.
pub fn orbit_transport(ring: &BaseRing, p1: (&RingElem, &RingElem), p2: (&RingElem, &RingElem)) -> Option<Matrix> {
    if orbit_invariant(ring, p1.0, p1.1) != orbit_invariant(ring, p2.0, p2.1) {
        return None;
    }
    let (d1, g1) = reduce_pair(ring, p1.0, p1.1);
    let (d2, g2) = reduce_pair(ring, p2.0, p2.1);
    // over a field both reduce to (1, 0) or (0, 0); elsewhere d is canonical
    if d1 != d2 {
        return None;
    }
    let a = invert(ring, &g2)?.mul(ring, &g1);
    let image = a.mul_vec(ring, &[p1.0.clone(), p1.1.clone()]);
    (image == vec![p2.0.clone(), p2.1.clone()]).then_some(a)
}

/// An isomorphism `B2 → B1` as a matrix whose row `r` is the image of
/// basis vector `r` of `B2` in the coordinates of `B1`; verified by
/// transporting the table of `B1`.
pub fn iso_from_forms(b1: &StructureAlgebra, f1: &GoodBasisForm, b2: &StructureAlgebra, f2: &GoodBasisForm) -> Option<Matrix> {
    let ring = b1.ring();
    let a = orbit_transport(ring, (&f1.u, &f1.v), (&f2.u, &f2.v))?;
    let mut block = Matrix::identity(ring, 3);
    for r in 0..2 {
        for c in 0..2 {
            block.set(r + 1, c + 1, a.get(r, c).clone());
        }
    }
    let p2_inv = invert(ring, &f2.basis_change)?;
    let phi = p2_inv.mul(ring, &block.mul(ring, &f1.basis_change));
    let moved = b1.change_basis(&phi).ok()?;
    assert_eq!(moved.table(), b2.table(), "isomorphism failed table transport");
    Some(phi)
}

pub fn iso_test(b1: &StructureAlgebra, b2: &StructureAlgebra) -> Result<Option<Matrix>> {
    if b1.ring() != b2.ring() {
        return Err(Error::Precondition(format!("rings differ: {} vs {}", b1.ring(), b2.ring())));
    }
    let f1 = normalize_rank3(b1)?;
    let f2 = normalize_rank3(b2)?;
    Ok(iso_from_forms(b1, &f1, b2, &f2))
}

/// `k = v i - u j` in good-basis coordinates, after checking
/// `k^2 = 0`, `ki = kj = 0`, `ik = uk` and `jk = vk`.
pub fn jacobson_element(form: &GoodBasisForm) -> AlgebraElement {
    let b = &form.normal;
    let (i, j) = (b.basis_element(1), b.basis_element(2));
    let k = b.sub(&b.scale(&form.v, &i), &b.scale(&form.u, &j));
    assert_eq!(b.mul(&k, &k), b.zero(), "k^2 != 0");
    assert_eq!(b.mul(&k, &i), b.zero(), "ki != 0");
    assert_eq!(b.mul(&k, &j), b.zero(), "kj != 0");
    assert_eq!(b.mul(&i, &k), b.scale(&form.u, &k), "ik != uk");
    assert_eq!(b.mul(&j, &k), b.scale(&form.v, &k), "jk != vk");
    k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularEmbedding {
    /// Right multiplication by `i` on `M = Ri + Rj`, acting on row vectors:
    /// `[[u, 0], [v, 0]]`.
    pub i_matrix: Matrix,
    /// Likewise for `j`: `[[0, u], [0, v]]`.
    pub j_matrix: Matrix,
    /// `ann_R(u, v) = 0`.
    pub injective: bool,
    /// Generator `k` of the line annihilated by right multiplication by `M`,
    /// present when the map is injective.
    pub flag_line: Option<AlgebraElement>,
}

fn ann_is_zero(ring: &BaseRing, u: &RingElem, v: &RingElem) -> bool {
    match ring {
        // ann(p^e) = p^(k-e) R, which is zero only for e = 0
        BaseRing::ResidueRing { .. } if !ring.is_field() => ring.valuation(u).min(ring.valuation(v)) == 0,
        _ => !(ring.is_zero(u) && ring.is_zero(v)),
    }
}

pub fn right_regular_embedding(form: &GoodBasisForm) -> RegularEmbedding {
    let b = &form.normal;
    let ring = b.ring();
    let restrict = |x: &AlgebraElement| {
        let m = b.right_mul_matrix(x);
        Matrix::from_rows((1..3).map(|c| (1..3).map(|r| m.get(r, c).clone()).collect()).collect())
    };
    let i_matrix = restrict(&b.basis_element(1));
    let j_matrix = restrict(&b.basis_element(2));
    let injective = ann_is_zero(ring, &form.u, &form.v);
    let flag_line = injective.then(|| jacobson_element(form));
    RegularEmbedding { i_matrix, j_matrix, injective, flag_line }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CFormParams;

    fn z(x: i64) -> RingElem {
        BaseRing::Integers.from_i64(x)
    }

    #[test]
    fn c_family_normalizes_to_u_v_one_one() {
        let r = BaseRing::Integers;
        // a = d = 0, b = 1, c = -1, ji = bc - ci + bj
        let cp = CFormParams { a: z(0), b: z(1), c: z(-1), d: z(0), r: z(-1), s: z(1), t: z(1) };
        assert!(cp.is_associative(&r));
        let alg = StructureAlgebra::from_table(&r, cp.table(&r)).unwrap();
        let form = normalize_rank3(&alg).unwrap();
        assert_eq!(orbit_invariant(&r, &form.u, &form.v), OrbitInvariant::Gcd(z(1)));
    }

    #[test]
    fn square_zero_over_f3() {
        let f3 = BaseRing::PrimeField(3);
        let alg = nc_algebra(&f3, &f3.zero(), &f3.zero());
        let form = normalize_rank3(&alg).unwrap();
        assert!(f3.is_zero(&form.u) && f3.is_zero(&form.v));
    }

    #[test]
    fn iso_examples() {
        let r = BaseRing::Integers;
        let phi = iso_test(&nc_algebra(&r, &z(4), &z(6)), &nc_algebra(&r, &z(2), &z(0))).unwrap();
        assert!(phi.is_some());
        let f5 = BaseRing::PrimeField(5);
        let none = iso_test(&nc_algebra(&f5, &f5.one(), &f5.zero()), &nc_algebra(&f5, &f5.zero(), &f5.zero()));
        assert_eq!(none.unwrap(), None);
        let z4 = BaseRing::residue_ring(2, 2).unwrap();
        let two = z4.from_i64(2);
        assert!(iso_test(&nc_algebra(&z4, &two, &z4.zero()), &nc_algebra(&z4, &z4.zero(), &two)).unwrap().is_some());
        assert!(iso_test(&nc_algebra(&z4, &z4.one(), &z4.zero()), &nc_algebra(&z4, &two, &z4.zero())).unwrap().is_none());
    }

    #[test]
    fn reduce_pair_over_each_ring() {
        let rings = [
            BaseRing::Integers,
            BaseRing::Rationals,
            BaseRing::PrimeField(7),
            BaseRing::residue_ring(3, 3).unwrap(),
            BaseRing::PolyFp(3),
            BaseRing::PolyQ,
        ];
        for ring in rings {
            for (a, b) in [(6, 4), (0, 9), (9, 0), (0, 0), (5, 15)] {
                let (u, v) = (ring.from_i64(a), ring.from_i64(b));
                let (d, g) = reduce_pair(&ring, &u, &v);
                assert_eq!(g.mul_vec(&ring, &[u, v]), vec![d, ring.zero()], "{ring} ({a},{b})");
                assert!(invert(&ring, &g).is_some());
            }
        }
    }

    #[test]
    fn jacobson_identities() {
        let r = BaseRing::Integers;
        let form = normalize_rank3(&nc_algebra(&r, &z(3), &z(5))).unwrap();
        let k = jacobson_element(&form);
        assert_eq!(k, form.normal.element_i64(&[0, 5, -3]));
        let form = normalize_rank3(&nc_algebra(&r, &z(1), &z(0))).unwrap();
        assert_eq!(jacobson_element(&form), form.normal.element_i64(&[0, 0, -1]));
    }

    #[test]
    fn embeddings() {
        let r = BaseRing::Integers;
        let form = normalize_rank3(&nc_algebra(&r, &z(1), &z(0))).unwrap();
        let e = right_regular_embedding(&form);
        assert_eq!(e.i_matrix, Matrix::from_i64(&r, &[&[1, 0], &[0, 0]]));
        assert_eq!(e.j_matrix, Matrix::from_i64(&r, &[&[0, 1], &[0, 0]]));
        assert!(e.injective);
        let form = normalize_rank3(&nc_algebra(&r, &z(0), &z(0))).unwrap();
        assert!(!right_regular_embedding(&form).injective);
        let z4 = BaseRing::residue_ring(2, 2).unwrap();
        let form = normalize_rank3(&nc_algebra(&z4, &z4.from_i64(2), &z4.zero())).unwrap();
        assert!(!right_regular_embedding(&form).injective);
    }
}

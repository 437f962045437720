//! Named example algebras, each with the properties it is known to have.
//!
//! Every [`Fact`] records where its value comes from, so a failing check
//! says whether a literature value or a hand derivation is at stake.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{unit_table, CFormParams, StructureAlgebra};
use crate::degree::{algebra_degree, geometric_degree};
use crate::error::{Error, Result};
use crate::exceptional::recognize_exceptional;
use crate::involution::find_standard_involution;
use crate::rank3::{nc_algebra, normalize_rank3, orbit_invariant, OrbitInvariant};
use crate::ring::{BaseRing, RingElem};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated in the source example.
    Literature,
    /// Immediate from the definitions.
    Immediate,
    /// Worked out by hand or by an independent computation.
    Derived,
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::Literature => "literature",
            Origin::Immediate => "immediate",
            Origin::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    Rank(usize),
    Degree(usize),
    GeometricDegree(usize),
    HasInvolution(bool),
    InvolutionTrivial(bool),
    Commutative(bool),
    Exceptional(bool),
    Orbit(OrbitInvariant),
}

impl Property {
    pub fn key(&self) -> &'static str {
        match self {
            Property::Rank(_) => "rank",
            Property::Degree(_) => "degree",
            Property::GeometricDegree(_) => "gdeg",
            Property::HasInvolution(_) => "has_involution",
            Property::InvolutionTrivial(_) => "involution_trivial",
            Property::Commutative(_) => "is_commutative",
            Property::Exceptional(_) => "is_exceptional",
            Property::Orbit(_) => "orbit_invariant",
        }
    }

    fn value_json(&self, ring: &BaseRing) -> Value {
        match self {
            Property::Rank(n) | Property::Degree(n) | Property::GeometricDegree(n) => json!(n),
            Property::HasInvolution(b)
            | Property::InvolutionTrivial(b)
            | Property::Commutative(b)
            | Property::Exceptional(b) => json!(b),
            Property::Orbit(o) => o.to_json(ring),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Rank(n) | Property::Degree(n) | Property::GeometricDegree(n) => write!(f, "{}={n}", self.key()),
            Property::HasInvolution(b)
            | Property::InvolutionTrivial(b)
            | Property::Commutative(b)
            | Property::Exceptional(b) => write!(f, "{}={b}", self.key()),
            Property::Orbit(o) => write!(f, "{}={o}", self.key()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub property: Property,
    pub origin: Origin,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// Full name, e.g. `boolean_3`.
    pub name: String,
    pub params: Vec<i64>,
    pub source: &'static str,
    pub algebra: StructureAlgebra,
    pub expected: Vec<Fact>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub expected: Fact,
    pub observed: Property,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected {} ({}), observed {}", self.expected.property, self.expected.origin.name(), self.observed)
    }
}

impl CorpusEntry {
    pub fn expected(&self, key: &str) -> Option<&Property> {
        self.expected.iter().find(|f| f.property.key() == key).map(|f| &f.property)
    }

    /// Recomputes every expected property and returns the disagreements.
    pub fn check(&self) -> Result<Vec<Mismatch>> {
        let mut out = Vec::new();
        for fact in &self.expected {
            let observed = observe(&self.algebra, &fact.property)?;
            if observed != fact.property {
                out.push(Mismatch { expected: fact.clone(), observed });
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let ring = self.algebra.ring();
        let expected: serde_json::Map<String, Value> = self
            .expected
            .iter()
            .map(|f| (f.property.key().to_string(), json!({"value": f.property.value_json(ring), "origin": f.origin.name()})))
            .collect();
        json!({
            "name": self.name,
            "params": self.params,
            "source": self.source,
            "algebra": self.algebra.to_json(),
            "expected": expected,
        })
    }
}

/// Computes the property of the same kind as `like` on `alg`.
pub fn observe(alg: &StructureAlgebra, like: &Property) -> Result<Property> {
    Ok(match like {
        Property::Rank(_) => Property::Rank(alg.rank()),
        Property::Degree(_) => Property::Degree(algebra_degree(alg)?.degree),
        Property::GeometricDegree(_) => Property::GeometricDegree(geometric_degree(alg).degree),
        Property::HasInvolution(_) => Property::HasInvolution(find_standard_involution(alg).is_ok()),
        Property::InvolutionTrivial(_) => {
            let inv = find_standard_involution(alg)
                .map_err(|_| Error::Precondition("no standard involution".into()))?;
            Property::InvolutionTrivial(inv.is_trivial(alg))
        }
        Property::Commutative(_) => Property::Commutative(alg.is_commutative()),
        Property::Exceptional(_) => Property::Exceptional(recognize_exceptional(alg).is_some()),
        Property::Orbit(_) => {
            let form = normalize_rank3(alg)?;
            Property::Orbit(orbit_invariant(alg.ring(), &form.u, &form.v))
        }
    })
}

/// One family of the corpus.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub name: &'static str,
    pub params: &'static str,
    pub default_ring: &'static str,
    pub default_params: &'static [i64],
    pub source: &'static str,
}

pub const FAMILIES: &[Family] = &[
    Family { name: "boolean_n", params: "n in the name", default_ring: "F_2", default_params: &[], source: "Boolean ring F_2^n" },
    Family { name: "fp_product_n", params: "n in the name", default_ring: "F_3", default_params: &[], source: "product ring F_p^n" },
    Family { name: "square_zero_3vars", params: "", default_ring: "Z", default_params: &[], source: "R[x,y,z]/(x,y,z)^2" },
    Family { name: "rank4_deg3", params: "", default_ring: "Z", default_params: &[], source: "R[x,y]/(x^3,xy,y^2)" },
    Family { name: "dual_numbers_char2", params: "", default_ring: "F_2", default_params: &[], source: "R[e]/(e^2) with 2 = 0" },
    Family { name: "zp2_dual", params: "p", default_ring: "Z/9", default_params: &[3], source: "Z/p^2[e]/(e^2)" },
    Family { name: "mat2", params: "", default_ring: "Z", default_params: &[], source: "2x2 matrices" },
    Family { name: "nc_uv", params: "u v", default_ring: "Z", default_params: &[3, 5], source: "good-basis laws i^2=ui, ij=uj, j^2=vj, ji=vi" },
    Family {
        name: "c_abcd",
        params: "a b c d r s t",
        default_ring: "Z",
        default_params: &[0, 1, -1, 0, -1, 1, 1],
        source: "Gross-Lucianovic normal form with ji = r + si + tj",
    },
    Family { name: "glued_degree", params: "a b", default_ring: "F_5", default_params: &[1, 0], source: "degree 3/2 gluing over k[a,b]/(ab)" },
    Family { name: "upper_tri", params: "", default_ring: "Z", default_params: &[], source: "upper-triangular 2x2 matrices" },
];

fn family_of(name: &str) -> Option<(&'static Family, Option<usize>)> {
    for fam in FAMILIES {
        if let Some(prefix) = fam.name.strip_suffix("_n") {
            if let Some(n) = name.strip_prefix(prefix).and_then(|s| s.strip_prefix('_')) {
                return n.parse().ok().filter(|&n: &usize| n >= 1).map(|n| (fam, Some(n)));
            }
        } else if fam.name == name {
            return Some((fam, None));
        }
    }
    None
}

/// Builds the entry `name` over the family's default ring and parameters.
pub fn build_default(name: &str) -> Result<CorpusEntry> {
    let (fam, _) = family_of(name).ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    build(name, &BaseRing::parse(fam.default_ring)?, fam.default_params)
}

/// Representative instances of every family.
pub fn standard_entries() -> Result<Vec<CorpusEntry>> {
    let z = BaseRing::Integers;
    let f2 = BaseRing::PrimeField(2);
    let f3 = BaseRing::PrimeField(3);
    let f5 = BaseRing::PrimeField(5);
    let z4 = BaseRing::residue_ring(2, 2)?;
    let list: Vec<(&str, &BaseRing, Vec<i64>)> = vec![
        ("boolean_1", &f2, vec![]),
        ("boolean_2", &f2, vec![]),
        ("boolean_3", &f2, vec![]),
        ("boolean_4", &f2, vec![]),
        ("fp_product_3", &f3, vec![]),
        ("fp_product_4", &f3, vec![]),
        ("fp_product_2", &f5, vec![]),
        ("square_zero_3vars", &z, vec![]),
        ("square_zero_3vars", &f2, vec![]),
        ("rank4_deg3", &z, vec![]),
        ("rank4_deg3", &f3, vec![]),
        ("dual_numbers_char2", &f2, vec![]),
        ("zp2_dual", &z, vec![2]),
        ("zp2_dual", &z, vec![3]),
        ("mat2", &z, vec![]),
        ("mat2", &f2, vec![]),
        ("nc_uv", &z, vec![3, 5]),
        ("nc_uv", &z, vec![1, 0]),
        ("nc_uv", &z, vec![4, 6]),
        ("nc_uv", &f5, vec![0, 0]),
        ("nc_uv", &z4, vec![2, 0]),
        ("c_abcd", &z, vec![0, 1, -1, 0, -1, 1, 1]),
        ("c_abcd", &z, vec![1, 2, 3, 1, -1, 0, 0]),
        ("c_abcd", &f3, vec![0, 0, 0, 0, 0, 0, 0]),
        ("glued_degree", &f5, vec![1, 0]),
        ("glued_degree", &f5, vec![0, 1]),
        ("upper_tri", &z, vec![]),
        ("upper_tri", &f3, vec![]),
    ];
    list.into_iter().map(|(name, ring, params)| build(name, ring, &params)).collect()
}

fn fact(property: Property, origin: Origin) -> Fact {
    Fact { property, origin }
}

fn expect_params(name: &str, params: &[i64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::Precondition(format!("{name} takes {n} parameter(s), got {}", params.len())));
    }
    Ok(())
}

fn is_char2(ring: &BaseRing) -> bool {
    ring.is_zero(&ring.from_i64(2))
}

/// The orbit invariant of `(u, v)` computed from its definition: zero flag
/// over a field, nonnegative gcd over ℤ, minimum valuation over ℤ/p^k and
/// monic gcd over a polynomial ring.
fn expected_orbit(ring: &BaseRing, u: &RingElem, v: &RingElem) -> OrbitInvariant {
    match ring {
        BaseRing::PrimeField(_) | BaseRing::Rationals | BaseRing::ResidueRing { k: 1, .. } => {
            OrbitInvariant::Field { nonzero: !(ring.is_zero(u) && ring.is_zero(v)) }
        }
        BaseRing::ResidueRing { p, k } => {
            let val = |x: &RingElem| -> u32 {
                let RingElem::Res(mut n) = x else { unreachable!() };
                if n == 0 {
                    return *k;
                }
                let mut e = 0;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                e
            };
            OrbitInvariant::Valuation(val(u).min(val(v)))
        }
        BaseRing::Integers => {
            let (RingElem::Int(a), RingElem::Int(b)) = (u, v) else { unreachable!() };
            let (mut a, mut b): (BigInt, BigInt) = (a.magnitude().clone().into(), b.magnitude().clone().into());
            while b != BigInt::from(0) {
                let r = &a % &b;
                a = b;
                b = r;
            }
            OrbitInvariant::Gcd(RingElem::Int(a))
        }
        _ => OrbitInvariant::Gcd(ring.normalize(&ring.gcd(u, v))),
    }
}

/// Builds a corpus entry. Parameters are integers mapped into `ring`.
pub fn build(name: &str, ring: &BaseRing, params: &[i64]) -> Result<CorpusEntry> {
    use Origin::*;
    use Property::*;
    let (fam, n) = family_of(name).ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    let e = |v: i64| ring.from_i64(v);
    let (algebra, expected): (StructureAlgebra, Vec<Fact>) = match fam.name {
        "boolean_n" | "fp_product_n" => {
            let n = n.expect("indexed family");
            expect_params(name, params, 0)?;
            let p = match ring {
                BaseRing::PrimeField(p) => *p as usize,
                BaseRing::ResidueRing { p, k: 1 } => *p as usize,
                _ => return Err(Error::Precondition(format!("{name} needs a prime field, got {ring}"))),
            };
            if fam.name == "boolean_n" && p != 2 {
                return Err(Error::Precondition(format!("{name} is defined over F_2, got {ring}")));
            }
            // basis 1, e_1, ..., e_{n-1} with orthogonal idempotents e_k
            let t = unit_table(ring, n, |a, b| (0..n).map(|k| if a == b && k == a { e(1) } else { e(0) }).collect());
            let alg = StructureAlgebra::from_table(ring, t)?;
            let origin = if fam.name == "boolean_n" || n >= p { Literature } else { Derived };
            let facts = vec![
                fact(Rank(n), Immediate),
                fact(Degree(n.min(p)), origin),
                fact(GeometricDegree(n), origin),
                fact(HasInvolution(n <= 2), if n >= 3 { origin } else { Derived }),
                fact(Commutative(true), Immediate),
                fact(Exceptional(n <= 2), Derived),
            ];
            (alg, facts)
        }
        "square_zero_3vars" => {
            expect_params(name, params, 0)?;
            let alg = StructureAlgebra::from_table(ring, unit_table(ring, 4, |_, _| vec![e(0); 4]))?;
            let facts = vec![
                fact(Rank(4), Literature),
                fact(Degree(2), Literature),
                fact(GeometricDegree(2), Derived),
                fact(HasInvolution(true), Derived),
                fact(InvolutionTrivial(is_char2(ring)), Derived),
                fact(Commutative(true), Immediate),
                fact(Exceptional(true), Derived),
            ];
            (alg, facts)
        }
        "rank4_deg3" => {
            expect_params(name, params, 0)?;
            // basis 1, x, x^2, y
            let t = unit_table(ring, 4, |a, b| match (a, b) {
                (1, 1) => vec![e(0), e(0), e(1), e(0)],
                _ => vec![e(0); 4],
            });
            let alg = StructureAlgebra::from_table(ring, t)?;
            let facts = vec![
                fact(Rank(4), Literature),
                fact(Degree(3), Literature),
                fact(GeometricDegree(3), Derived),
                fact(HasInvolution(false), Derived),
                fact(Commutative(true), Immediate),
                fact(Exceptional(false), Derived),
            ];
            (alg, facts)
        }
        "dual_numbers_char2" => {
            expect_params(name, params, 0)?;
            if !is_char2(ring) {
                return Err(Error::Precondition(format!("{name} needs 2 = 0, got {ring}")));
            }
            let alg = StructureAlgebra::from_table(ring, unit_table(ring, 2, |_, _| vec![e(0), e(0)]))?;
            let facts = vec![
                fact(Rank(2), Immediate),
                fact(Degree(2), Derived),
                fact(GeometricDegree(2), Derived),
                fact(HasInvolution(true), Literature),
                fact(InvolutionTrivial(true), Literature),
                fact(Commutative(true), Immediate),
                fact(Exceptional(true), Derived),
            ];
            (alg, facts)
        }
        "zp2_dual" => {
            expect_params(name, params, 1)?;
            let p = u64::try_from(params[0]).map_err(|_| Error::Precondition("p must be positive".into()))?;
            let zp2 = BaseRing::residue_ring(p, 2)?;
            let alg = StructureAlgebra::from_table(&zp2, unit_table(&zp2, 2, |_, _| vec![zp2.zero(), zp2.zero()]))?;
            let facts = vec![
                fact(Rank(2), Immediate),
                fact(Degree(2), Derived),
                fact(GeometricDegree(2), Derived),
                fact(HasInvolution(true), Derived),
                fact(InvolutionTrivial(false), Derived),
                fact(Commutative(true), Immediate),
                fact(Exceptional(true), Derived),
            ];
            (alg, facts)
        }
        "mat2" => {
            expect_params(name, params, 0)?;
            // basis 1, e11, e12, e21 with e22 = 1 - e11
            let t = unit_table(ring, 4, |a, b| {
                let v: [i64; 4] = match (a, b) {
                    (1, 1) => [0, 1, 0, 0],
                    (1, 2) => [0, 0, 1, 0],
                    (2, 3) => [0, 1, 0, 0],
                    (3, 1) => [0, 0, 0, 1],
                    (3, 2) => [1, -1, 0, 0],
                    _ => [0; 4],
                };
                v.iter().map(|&x| e(x)).collect()
            });
            let alg = StructureAlgebra::from_table(ring, t)?;
            let facts = vec![
                fact(Rank(4), Immediate),
                fact(Degree(2), Literature),
                fact(GeometricDegree(2), Derived),
                fact(HasInvolution(true), Literature),
                fact(InvolutionTrivial(false), Derived),
                fact(Commutative(false), Immediate),
                fact(Exceptional(false), Derived),
            ];
            (alg, facts)
        }
        "nc_uv" => {
            expect_params(name, params, 2)?;
            let (u, v) = (e(params[0]), e(params[1]));
            let zero = ring.is_zero(&u) && ring.is_zero(&v);
            let alg = nc_algebra(ring, &u, &v);
            let facts = vec![
                fact(Rank(3), Immediate),
                fact(Degree(2), Literature),
                fact(GeometricDegree(2), Literature),
                fact(HasInvolution(true), Literature),
                fact(InvolutionTrivial(zero && is_char2(ring)), Derived),
                fact(Commutative(zero), Literature),
                fact(Exceptional(true), Literature),
                fact(Orbit(expected_orbit(ring, &u, &v)), Derived),
            ];
            (alg, facts)
        }
        "c_abcd" => {
            expect_params(name, params, 7)?;
            let cp = CFormParams {
                a: e(params[0]),
                b: e(params[1]),
                c: e(params[2]),
                d: e(params[3]),
                r: e(params[4]),
                s: e(params[5]),
                t: e(params[6]),
            };
            if !cp.is_associative(ring) {
                return Err(Error::Precondition(format!("{name}: parameters {params:?} do not give an associative table")));
            }
            let alg = StructureAlgebra::from_table(ring, cp.table(ring))?;
            let ad_zero = ring.is_zero(&cp.a) && ring.is_zero(&cp.d);
            // with a = d = 0, x x̄ ∈ R on i + j forces s = -c and t = b
            let inv = ad_zero && cp.s == ring.neg(&cp.c) && cp.t == cp.b;
            let commutative = cp.r == ring.neg(&ring.mul(&cp.a, &cp.d)) && ring.is_zero(&cp.s) && ring.is_zero(&cp.t);
            let mut facts = vec![
                fact(Rank(3), Immediate),
                fact(GeometricDegree(if inv { 2 } else { 3 }), Derived),
                fact(HasInvolution(inv), Literature),
                fact(Commutative(commutative), Literature),
                fact(Exceptional(inv), Literature),
            ];
            if inv {
                let (u, v) = (cp.b.clone(), ring.neg(&cp.c));
                let zero = ring.is_zero(&u) && ring.is_zero(&v);
                facts.push(fact(Degree(2), Literature));
                facts.push(fact(InvolutionTrivial(zero && is_char2(ring)), Derived));
                facts.push(fact(Orbit(expected_orbit(ring, &u, &v)), Literature));
            } else if !ad_zero {
                // i^2 or j^2 leaves R + Ri (resp. R + Rj)
                facts.push(fact(Degree(3), Derived));
            }
            (alg, facts)
        }
        "glued_degree" => {
            expect_params(name, params, 2)?;
            let (a, b) = (e(params[0]), e(params[1]));
            if !ring.is_zero(&ring.mul(&a, &b)) {
                return Err(Error::Precondition(format!("{name} needs ab = 0")));
            }
            let m = |x: &RingElem, y: &RingElem| ring.mul(x, y);
            let t = unit_table(ring, 3, |x, y| match (x, y) {
                (1, 1) => vec![e(0), b.clone(), ring.neg(&a)],
                (2, 2) => vec![e(0), a.clone(), ring.neg(&b)],
                (1, 2) => vec![ring.neg(&m(&a, &a)), e(0), e(0)],
                _ => vec![ring.sub(&m(&b, &b), &m(&a, &a)), ring.neg(&b), b.clone()],
            });
            let alg = StructureAlgebra::from_table(ring, t)?;
            let a_zero = ring.is_zero(&a);
            let b_zero = ring.is_zero(&b);
            let mut facts = vec![fact(Rank(3), Immediate)];
            if b_zero && !a_zero {
                facts.extend([
                    fact(Degree(3), Literature),
                    fact(GeometricDegree(3), Derived),
                    fact(HasInvolution(false), Derived),
                    fact(Commutative(true), Literature),
                    fact(Exceptional(false), Derived),
                ]);
            } else if a_zero && !b_zero {
                // good basis b - i, j with u = b, v = -b
                facts.extend([
                    fact(Degree(2), Literature),
                    fact(GeometricDegree(2), Derived),
                    fact(HasInvolution(true), Derived),
                    fact(InvolutionTrivial(false), Derived),
                    fact(Commutative(false), Literature),
                    fact(Exceptional(true), Derived),
                    fact(Orbit(expected_orbit(ring, &b, &ring.neg(&b))), Derived),
                ]);
            }
            (alg, facts)
        }
        "upper_tri" => {
            expect_params(name, params, 0)?;
            // basis 1, e11, e12
            let t = unit_table(ring, 3, |x, y| match (x, y) {
                (1, 1) => vec![e(0), e(1), e(0)],
                (1, 2) => vec![e(0), e(0), e(1)],
                _ => vec![e(0); 3],
            });
            let alg = StructureAlgebra::from_table(ring, t)?;
            let facts = vec![
                fact(Rank(3), Immediate),
                fact(Degree(2), Derived),
                fact(GeometricDegree(2), Derived),
                fact(HasInvolution(true), Derived),
                fact(InvolutionTrivial(false), Derived),
                fact(Commutative(false), Immediate),
                fact(Exceptional(true), Literature),
                fact(Orbit(expected_orbit(ring, &e(1), &e(0))), Literature),
            ];
            (alg, facts)
        }
        _ => unreachable!("family table and builder out of sync"),
    };
    Ok(CorpusEntry { name: name.to_string(), params: params.to_vec(), source: fam.source, algebra, expected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank3::iso_test;

    #[test]
    fn standard_entries_match() {
        for entry in standard_entries().unwrap() {
            let bad = entry.check().unwrap();
            assert!(bad.is_empty(), "{} {:?} over {}: {}", entry.name, entry.params, entry.algebra.ring(), bad.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; "));
        }
    }

    #[test]
    fn boolean_3_profile() {
        let b = build_default("boolean_3").unwrap();
        assert_eq!(b.expected("degree"), Some(&Property::Degree(2)));
        assert_eq!(b.expected("gdeg"), Some(&Property::GeometricDegree(3)));
        assert_eq!(b.expected("has_involution"), Some(&Property::HasInvolution(false)));
    }

    #[test]
    fn upper_triangular_is_nc_1_0() {
        let z = BaseRing::Integers;
        let a = build("nc_uv", &z, &[1, 0]).unwrap().algebra;
        let b = build("upper_tri", &z, &[]).unwrap().algebra;
        let phi = iso_test(&a, &b).unwrap().expect("isomorphic");
        assert_eq!(a.change_basis(&phi).unwrap().table(), b.table());
    }

    #[test]
    fn refusals() {
        let z = BaseRing::Integers;
        assert!(matches!(build("nope", &z, &[]), Err(Error::UnknownEntry(_))));
        assert!(build("boolean_3", &BaseRing::PrimeField(3), &[]).is_err());
        assert!(build("c_abcd", &z, &[1, 0, 0, 0, 0, 1, 0]).is_err());
        assert!(build("glued_degree", &BaseRing::PrimeField(5), &[1, 1]).is_err());
        assert!(build("dual_numbers_char2", &z, &[]).is_err());
        for fam in FAMILIES {
            let name = fam.name.strip_suffix("_n").map_or(fam.name.to_string(), |p| format!("{p}_3"));
            build_default(&name).unwrap();
        }
    }
}

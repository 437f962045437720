mod common;

use lowrank::census::{finite_to_algebra, for_each_associative, CensusMode, DEFAULT_LIMIT};
use lowrank::corpus::{build, standard_entries};
use lowrank::degree::{
    algebra_degree, algebra_degree_by_solving, element_degree, geometric_degree, random_element, sample_degree_check,
};
use lowrank::{BaseRing, RingHom, StructureAlgebra};

fn census_algebras(ring: &BaseRing) -> Vec<StructureAlgebra> {
    let mut out = Vec::new();
    for_each_associative(ring, 3, CensusMode::Full, DEFAULT_LIMIT, |ft| out.push(finite_to_algebra(ring, ft).unwrap())).unwrap();
    out
}

#[test]
fn finite_route_agrees_with_solver_route() {
    for alg in census_algebras(&BaseRing::PrimeField(2)) {
        assert_eq!(algebra_degree(&alg).unwrap().degree, algebra_degree_by_solving(&alg).unwrap(), "{alg}");
    }
    let z4 = BaseRing::residue_ring(2, 2).unwrap();
    for alg in census_algebras(&z4).iter().step_by(37) {
        assert_eq!(algebra_degree(alg).unwrap().degree, algebra_degree_by_solving(alg).unwrap(), "{alg}");
    }
}

#[test]
fn degree_bounds_on_census_and_corpus() {
    let mut rng = common::rng(3);
    let mut algs = census_algebras(&BaseRing::PrimeField(2));
    algs.extend(standard_entries().unwrap().into_iter().map(|e| e.algebra));
    for alg in &algs {
        let deg = algebra_degree(alg).unwrap().degree;
        let gdeg = geometric_degree(alg).degree;
        assert!(deg <= gdeg && gdeg <= alg.rank(), "{alg}: deg {deg} gdeg {gdeg}");
        for _ in 0..3 {
            let x = random_element(alg, &mut rng, 5);
            assert!(element_degree(alg, &x).degree <= deg);
        }
    }
}

#[test]
fn full_degree_forces_commutativity_over_f2() {
    for alg in census_algebras(&BaseRing::PrimeField(2)) {
        if algebra_degree(&alg).unwrap().degree == 3 {
            assert!(alg.is_commutative(), "{alg}");
        }
    }
}

#[test]
fn geometric_degree_is_flat_over_rationals() {
    let z = BaseRing::Integers;
    let to_q = RingHom::canonical(&z, &BaseRing::Rationals).unwrap();
    for e in standard_entries().unwrap().into_iter().filter(|e| *e.algebra.ring() == z) {
        let q = e.algebra.base_change(&to_q).unwrap();
        assert_eq!(geometric_degree(&e.algebra).degree, geometric_degree(&q).degree, "{}", e.name);
    }
}

/// The fraction-field degree over ℤ is confirmed by sampling: no sampled
/// element exceeds it and some element reaches it.
#[test]
fn integral_degree_is_attained_by_samples() {
    let z = BaseRing::Integers;
    let mut rng = common::rng(17);
    let mut algs: Vec<StructureAlgebra> =
        standard_entries().unwrap().into_iter().filter(|e| *e.algebra.ring() == z).map(|e| e.algebra).collect();
    while algs.len() < 40 {
        algs.push(common::random_algebra(&z, &mut rng).1);
    }
    let per = 10_000usize.div_ceil(algs.len());
    let mut total = 0;
    for alg in &algs {
        let deg = algebra_degree(alg).unwrap().degree;
        let check = sample_degree_check(alg, deg, per, &mut rng);
        assert!(check.agrees(), "{alg}: claimed {deg}, max sampled {}", check.max_seen);
        total += check.samples;
    }
    assert!(total >= 10_000);
}

#[test]
fn relations_need_not_be_unique() {
    // x = 3e in Z/9[e]/(e^2) satisfies x^2 = 0 and x^2 + 3x = 0
    let alg = build("zp2_dual", &BaseRing::Integers, &[3]).unwrap().algebra;
    let x = alg.element_i64(&[0, 3]);
    let cert = element_degree(&alg, &x);
    assert_eq!(cert.degree, 2);
    assert!(!cert.unique);
    let e = alg.element_i64(&[0, 1]);
    assert!(element_degree(&alg, &e).unique);
}

//! Roots of monic quadratics `T^2 - t T + n` over the supported rings.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::linalg::{solve_linear, LinearSystem, Matrix};
use super::{poly, BaseRing, RingElem};

/// Below this modulus residue rings are searched exhaustively.
const ENUMERATION_THRESHOLD: u64 = 1 << 16;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Square root modulo an odd prime (Tonelli–Shanks).
fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mulm = |x: u64, y: u64| (x as u128 * y as u128 % p as u128) as u64;
    let (mut m, mut c, mut t, mut r) = (s, pow_mod(z, q, p), pow_mod(a, q, p), pow_mod(a, q.div_ceil(2), p));
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulm(tt, tt);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    Some(r)
}

fn sqrt_int(d: &BigInt) -> Option<BigInt> {
    if d.is_negative() {
        return None;
    }
    let s = d.sqrt();
    (&s * &s == *d).then_some(s)
}

/// Square root in a field, if one exists.
fn sqrt_field(f: &BaseRing, a: &RingElem) -> Option<RingElem> {
    match (f, a) {
        (BaseRing::Rationals, RingElem::Rat(q)) => {
            let n = sqrt_int(q.numer())?;
            let d = sqrt_int(q.denom())?;
            Some(RingElem::Rat(BigRational::new(n, d)))
        }
        (BaseRing::PrimeField(2), _) => Some(a.clone()),
        (BaseRing::PrimeField(p), RingElem::Res(x)) => sqrt_mod_prime(*x, *p).map(RingElem::Res),
        _ => None,
    }
}

/// Square root of a polynomial over a field of characteristic ≠ 2.
fn sqrt_poly(f: &BaseRing, a: &[RingElem]) -> Option<Vec<RingElem>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let d = a.len() - 1;
    if d % 2 == 1 {
        return None;
    }
    let m = d / 2;
    let mut g = vec![f.zero(); m + 1];
    g[m] = sqrt_field(f, &a[d])?;
    let two_gm_inv = f.inv(&f.add(&g[m], &g[m]))?;
    for k in (0..m).rev() {
        // coefficient of x^{m+k}: 2 g_m g_k + sum_{i,j>k, i+j=m+k} g_i g_j
        let mut s = a[m + k].clone();
        for i in k + 1..=m {
            let j = m + k - i;
            if j > k && j <= m {
                s = f.sub(&s, &f.mul(&g[i], &g[j]));
            }
        }
        g[k] = f.mul(&s, &two_gm_inv);
    }
    let g = poly::trim(f, g);
    (poly::mul(f, &g, &g) == poly::trim(f, a.to_vec())).then_some(g)
}

fn roots_by_enumeration(ring: &BaseRing, t: &RingElem, n: &RingElem) -> Vec<RingElem> {
    ring.enumerate()
        .expect("finite ring")
        .filter(|x| ring.is_zero(&ring.add(&ring.mul(x, &ring.sub(x, t)), n)))
        .collect()
}

/// Digit-by-digit lifting of all roots modulo p, p^2, ..., p^k.
fn roots_by_lifting(p: u64, k: u32, t: u64, n: u64) -> Vec<u64> {
    let f = |x: u64, m: u64| -> u64 {
        let x = x as u128 % m as u128;
        let (t, n, m) = (t as u128 % m as u128, n as u128 % m as u128, m as u128);
        ((x * x + (m - t) * x + n) % m) as u64
    };
    let mut roots: Vec<u64> = (0..p).filter(|&x| f(x, p) == 0).collect();
    let mut modulus = p;
    for _ in 1..k {
        let next = modulus * p;
        let mut lifted = Vec::new();
        for &r in &roots {
            for a in 0..p {
                let c = r + a * modulus;
                if f(c, next) == 0 {
                    lifted.push(c);
                }
            }
        }
        roots = lifted;
        modulus = next;
    }
    roots
}

/// All roots in `ring` of `T^2 - t T + n`, sorted and deduplicated.
pub fn quadratic_roots(ring: &BaseRing, t: &RingElem, n: &RingElem) -> Vec<RingElem> {
    let two = ring.from_i64(2);
    let out: BTreeSet<RingElem> = match ring {
        BaseRing::PrimeField(_) | BaseRing::ResidueRing { .. } if ring.modulus().unwrap() <= ENUMERATION_THRESHOLD => {
            roots_by_enumeration(ring, t, n).into_iter().collect()
        }
        BaseRing::PrimeField(_) => {
            let disc = ring.sub(&ring.mul(t, t), &ring.mul(&ring.from_i64(4), n));
            match sqrt_field(ring, &disc) {
                Some(s) => {
                    let h = ring.inv(&two).expect("odd prime");
                    [ring.add(t, &s), ring.sub(t, &s)].iter().map(|x| ring.mul(x, &h)).collect()
                }
                None => BTreeSet::new(),
            }
        }
        BaseRing::ResidueRing { p, k } => {
            let (RingElem::Res(tt), RingElem::Res(nn)) = (t, n) else { unreachable!() };
            roots_by_lifting(*p, *k, *tt, *nn).into_iter().map(RingElem::Res).collect()
        }
        BaseRing::Integers => {
            let (RingElem::Int(ti), RingElem::Int(ni)) = (t, n) else { unreachable!() };
            let disc = ti * ti - BigInt::from(4) * ni;
            match sqrt_int(&disc) {
                Some(s) => [ti + &s, ti - &s]
                    .into_iter()
                    .filter(|x| (x % BigInt::from(2)).is_zero())
                    .map(|x| RingElem::Int(x / 2))
                    .collect(),
                None => BTreeSet::new(),
            }
        }
        BaseRing::Rationals => {
            let disc = ring.sub(&ring.mul(t, t), &ring.mul(&ring.from_i64(4), n));
            match sqrt_field(ring, &disc) {
                Some(s) => {
                    let h = ring.inv(&two).unwrap();
                    [ring.add(t, &s), ring.sub(t, &s)].iter().map(|x| ring.mul(x, &h)).collect()
                }
                None => BTreeSet::new(),
            }
        }
        BaseRing::PolyFp(2) => char2_poly_roots(ring, t, n),
        BaseRing::PolyFp(_) | BaseRing::PolyQ => {
            let disc = ring.sub(&ring.mul(t, t), &ring.mul(&ring.from_i64(4), n));
            let RingElem::Poly(dc) = &disc else { unreachable!() };
            match sqrt_poly(&ring.inner().unwrap(), dc) {
                Some(s) => {
                    let s = RingElem::Poly(s);
                    let h = ring.inv(&two).unwrap();
                    [ring.add(t, &s), ring.sub(t, &s)].iter().map(|x| ring.mul(x, &h)).collect()
                }
                None => BTreeSet::new(),
            }
        }
    };
    let roots: Vec<_> = out.into_iter().collect();
    debug_assert!(roots.iter().all(|x| ring.is_zero(&ring.add(&ring.mul(x, &ring.sub(x, t)), n))));
    roots
}

/// Over 𝔽_2[t] the map r ↦ r^2 + t r is 𝔽_2-linear in the coefficients of r,
/// so roots come from one linear system; the solution set is {r, r + t}.
fn char2_poly_roots(ring: &BaseRing, t: &RingElem, n: &RingElem) -> BTreeSet<RingElem> {
    let f2 = BaseRing::PrimeField(2);
    let (RingElem::Poly(tc), RingElem::Poly(nc)) = (t, n) else { unreachable!() };
    let bound = tc.len().max(nc.len().div_ceil(2)) + 1;
    let rows = (2 * bound).max(tc.len() + bound).max(nc.len()) + 1;
    let mut a = Matrix::zeros(&f2, rows, bound);
    for j in 0..bound {
        // image of the basis polynomial x^j
        let mut img = vec![f2.zero(); rows];
        img[2 * j] = f2.add(&img[2 * j], &f2.one());
        for (i, ti) in tc.iter().enumerate() {
            img[i + j] = f2.add(&img[i + j], ti);
        }
        for (i, v) in img.into_iter().enumerate() {
            a.set(i, j, v);
        }
    }
    let mut rhs = vec![f2.zero(); rows];
    for (i, ni) in nc.iter().enumerate() {
        rhs[i] = ni.clone();
    }
    let sol = solve_linear(&f2, &LinearSystem::new(a, rhs)).expect("well-formed system");
    match sol.witness() {
        Some(w) => {
            let r = poly::from_coeffs(&f2, w.to_vec());
            let r2 = ring.add(&r, t);
            [r, r2].into_iter().collect()
        }
        None => BTreeSet::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(ring: &BaseRing, t: &RingElem, n: &RingElem) -> Vec<RingElem> {
        roots_by_enumeration(ring, t, n)
    }

    #[test]
    fn integer_roots() {
        let z = BaseRing::Integers;
        // T^2 - 1
        assert_eq!(quadratic_roots(&z, &z.zero(), &z.from_i64(-1)), vec![z.from_i64(-1), z.one()]);
        // T^2 - 2 has none
        assert!(quadratic_roots(&z, &z.zero(), &z.from_i64(-2)).is_empty());
        // T^2 - 3T: roots 0, 3
        assert_eq!(quadratic_roots(&z, &z.from_i64(3), &z.zero()), vec![z.zero(), z.from_i64(3)]);
    }

    #[test]
    fn lifting_agrees_with_enumeration() {
        for (p, k) in [(2u64, 3u32), (3, 2), (5, 2), (2, 4)] {
            let r = BaseRing::residue_ring(p, k).unwrap();
            let m = r.modulus().unwrap();
            for t in 0..m.min(9) {
                for n in 0..m {
                    let got: Vec<_> = roots_by_lifting(p, k, t, n).into_iter().map(RingElem::Res).collect();
                    let mut got = got;
                    got.sort();
                    assert_eq!(got, brute(&r, &RingElem::Res(t), &RingElem::Res(n)));
                }
            }
        }
    }

    #[test]
    fn prime_field_sqrt() {
        for p in [3u64, 5, 7, 13, 17, 97] {
            for a in 0..p {
                let s = sqrt_mod_prime(a, p);
                let is_sq = (0..p).any(|x| x * x % p == a);
                assert_eq!(s.is_some(), is_sq);
                if let Some(s) = s {
                    assert_eq!(s * s % p, a);
                }
            }
        }
    }

    #[test]
    fn polynomial_roots() {
        let r = BaseRing::PolyFp(3);
        let x = r.variable().unwrap();
        // (T - x)(T - 1) = T^2 - (x+1) T + x
        let t = r.add(&x, &r.one());
        assert_eq!(quadratic_roots(&r, &t, &x).len(), 2);
        let q = BaseRing::PolyQ;
        let x = q.variable().unwrap();
        // T^2 - x has no root in Q[x]
        assert!(quadratic_roots(&q, &q.zero(), &q.neg(&x)).is_empty());
        // T^2 - x^2: ±x
        let x2 = q.mul(&x, &x);
        assert_eq!(quadratic_roots(&q, &q.zero(), &q.neg(&x2)).len(), 2);
    }

    #[test]
    fn char_two_polynomial_roots() {
        let r = BaseRing::PolyFp(2);
        let x = r.variable().unwrap();
        // (T - x)(T - x - 1) = T^2 - T + x^2 + x  (char 2: t = 1, n = x^2 + x)
        let n = r.add(&r.mul(&x, &x), &x);
        let roots = quadratic_roots(&r, &r.one(), &n);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&x));
        // T^2 = x has no root
        assert!(quadratic_roots(&r, &r.zero(), &x).is_empty());
        // T^2 = x^2 has the double root x
        assert_eq!(quadratic_roots(&r, &r.zero(), &r.mul(&x, &x)), vec![x]);
    }
}

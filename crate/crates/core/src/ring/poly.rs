//! Dense univariate polynomial helpers over a coefficient ring.
//!
//! Coefficients are stored constant term first with no trailing zeros. These
//! back both the polynomial base rings (coefficients in a field) and the
//! characteristic polynomials of algebra elements (coefficients in any base
//! ring).

use super::{BaseRing, RingElem};

pub fn trim(c: &BaseRing, mut v: Vec<RingElem>) -> Vec<RingElem> {
    while v.last().is_some_and(|x| c.is_zero(x)) {
        v.pop();
    }
    v
}

pub fn from_coeffs(c: &BaseRing, v: Vec<RingElem>) -> RingElem {
    RingElem::Poly(trim(c, v))
}

pub fn degree(v: &[RingElem]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub fn add(c: &BaseRing, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
    let n = a.len().max(b.len());
    let z = c.zero();
    let out = (0..n)
        .map(|i| c.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(c, out)
}

pub fn neg(c: &BaseRing, a: &[RingElem]) -> Vec<RingElem> {
    a.iter().map(|x| c.neg(x)).collect()
}

pub fn sub(c: &BaseRing, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
    add(c, a, &neg(c, b))
}

pub fn scale(c: &BaseRing, a: &[RingElem], s: &RingElem) -> Vec<RingElem> {
    trim(c, a.iter().map(|x| c.mul(x, s)).collect())
}

pub fn mul(c: &BaseRing, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![c.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if c.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = c.mul_add(&out[i + j], x, y);
        }
    }
    trim(c, out)
}

/// Long division; the leading coefficient of `b` must be a unit.
pub fn div_rem(c: &BaseRing, a: &[RingElem], b: &[RingElem]) -> (Vec<RingElem>, Vec<RingElem>) {
    let db = degree(b).expect("polynomial division by zero");
    let lc_inv = c.inv(&b[db]).expect("leading coefficient must be a unit");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![c.zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let coef = c.mul(&r[dr], &lc_inv);
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = c.sub(&r[shift + j], &c.mul(&coef, bj));
        }
        q[shift] = coef;
        r = trim(c, r);
    }
    (trim(c, q), r)
}

pub fn eval(c: &BaseRing, a: &[RingElem], x: &RingElem) -> RingElem {
    a.iter().rev().fold(c.zero(), |acc, coef| c.add(&c.mul(&acc, x), coef))
}

/// `(T - r)^e` as a coefficient vector.
pub fn linear_power(c: &BaseRing, r: &RingElem, e: usize) -> Vec<RingElem> {
    let lin = vec![c.neg(r), c.one()];
    (0..e).fold(vec![c.one()], |acc, _| mul(c, &acc, &lin))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_roundtrip_over_f5() {
        let f5 = BaseRing::PrimeField(5);
        let e = |v: &[i64]| trim(&f5, v.iter().map(|&x| f5.from_i64(x)).collect());
        let a = e(&[1, 2, 3, 4]);
        let b = e(&[2, 0, 1]);
        let (q, r) = div_rem(&f5, &a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(&f5, &mul(&f5, &q, &b), &r), a);
    }

    #[test]
    fn linear_power_expands() {
        let z = BaseRing::Integers;
        let p = linear_power(&z, &z.from_i64(1), 2);
        assert_eq!(p, vec![z.from_i64(1), z.from_i64(-2), z.from_i64(1)]);
    }
}

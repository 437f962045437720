//! Exact commutative base rings.
//!
//! A [`BaseRing`] is a small descriptor; all arithmetic goes through it, and
//! elements ([`RingElem`]) are plain values in canonical form so that `==` is
//! ring equality.

pub mod linalg;
pub mod poly;
pub mod roots;

mod json;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Moduli are kept below 2^32 so that products of residues fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    Rationals,
    PrimeField(u64),
    /// ℤ/p^k.
    ResidueRing { p: u64, k: u32 },
    /// 𝔽_p[t].
    PolyFp(u64),
    /// ℚ[t].
    PolyQ,
}

/// An element of some [`BaseRing`], always in canonical form.
///
/// Residues live in `[0, m)`, rationals are reduced with positive
/// denominator, and polynomial coefficient vectors carry no trailing zeros
/// (the zero polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElem {
    Int(BigInt),
    Rat(BigRational),
    Res(u64),
    Poly(Vec<RingElem>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd_i128(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn egcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd_i128(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

impl BaseRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_MODULUS {
            return Err(Error::UnsupportedRing(format!("prime {p} is too large")));
        }
        Ok(BaseRing::PrimeField(p))
    }

    pub fn residue_ring(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::UnsupportedRing("Z/p^0 is the zero ring".into()));
        }
        match p.checked_pow(k) {
            Some(m) if m < MAX_MODULUS => Ok(BaseRing::ResidueRing { p, k }),
            _ => Err(Error::UnsupportedRing(format!("modulus {p}^{k} is too large"))),
        }
    }

    pub fn poly_fp(p: u64) -> Result<Self> {
        Self::prime_field(p)?;
        Ok(BaseRing::PolyFp(p))
    }

    /// ℤ/n for a prime power n. Composite moduli with two distinct prime
    /// factors have a disconnected spectrum and are rejected.
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRing(format!("Z/{n} is not a supported ring")));
        }
        let mut p = 2u64;
        let mut rest = n;
        while p * p <= rest && !rest.is_multiple_of(p) {
            p += 1;
        }
        if !rest.is_multiple_of(p) {
            p = rest;
        }
        let mut k = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::UnsupportedRing(format!(
                "Z/{n}: modulus is not a prime power, so Z/{n} splits as a product of rings \
                 (has idempotents other than 0 and 1); analyse each prime-power factor separately"
            )));
        }
        if k == 1 {
            Self::prime_field(p)
        } else {
            Self::residue_ring(p, k)
        }
    }

    /// Modulus of a residue ring or prime field.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            BaseRing::PrimeField(p) => Some(p),
            BaseRing::ResidueRing { p, k } => Some(p.pow(k)),
            _ => None,
        }
    }

    /// Residue characteristic prime of a finite ring or 𝔽_p[t].
    pub fn prime(&self) -> Option<u64> {
        match *self {
            BaseRing::PrimeField(p) | BaseRing::PolyFp(p) => Some(p),
            BaseRing::ResidueRing { p, .. } => Some(p),
            _ => None,
        }
    }

    /// Coefficient field of a polynomial ring.
    pub fn inner(&self) -> Option<BaseRing> {
        match *self {
            BaseRing::PolyFp(p) => Some(BaseRing::PrimeField(p)),
            BaseRing::PolyQ => Some(BaseRing::Rationals),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BaseRing::PrimeField(_) | BaseRing::ResidueRing { .. })
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            BaseRing::Rationals | BaseRing::PrimeField(_) | BaseRing::ResidueRing { k: 1, .. }
        )
    }

    pub fn is_domain(&self) -> bool {
        !matches!(self, BaseRing::ResidueRing { k, .. } if *k > 1)
    }

    pub fn is_pid(&self) -> bool {
        self.is_domain()
    }

    /// Euclidean domains get the column-echelon solver directly.
    pub fn is_euclidean(&self) -> bool {
        self.is_domain()
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseRing::Integers | BaseRing::Rationals | BaseRing::PolyQ => 0,
            BaseRing::PolyFp(p) => *p,
            _ => self.modulus().unwrap(),
        }
    }

    pub fn cardinality(&self) -> Option<u64> {
        self.modulus()
    }

    // ----- construction -----

    pub fn zero(&self) -> RingElem {
        match self {
            BaseRing::Integers => RingElem::Int(BigInt::zero()),
            BaseRing::Rationals => RingElem::Rat(BigRational::zero()),
            BaseRing::PrimeField(_) | BaseRing::ResidueRing { .. } => RingElem::Res(0),
            BaseRing::PolyFp(_) | BaseRing::PolyQ => RingElem::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> RingElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> RingElem {
        self.from_bigint(&BigInt::from(v))
    }

    /// Image of an integer under the canonical map ℤ → R.
    pub fn from_bigint(&self, v: &BigInt) -> RingElem {
        match self {
            BaseRing::Integers => RingElem::Int(v.clone()),
            BaseRing::Rationals => RingElem::Rat(BigRational::from_integer(v.clone())),
            BaseRing::PrimeField(_) | BaseRing::ResidueRing { .. } => {
                let m = BigInt::from(self.modulus().unwrap());
                RingElem::Res(v.mod_floor(&m).to_u64().unwrap())
            }
            BaseRing::PolyFp(_) | BaseRing::PolyQ => {
                let c = self.inner().unwrap().from_bigint(v);
                poly::from_coeffs(&self.inner().unwrap(), vec![c])
            }
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> Option<RingElem> {
        match self {
            BaseRing::Rationals => Some(RingElem::Rat(v.clone())),
            BaseRing::PolyQ => Some(poly::from_coeffs(&BaseRing::Rationals, vec![RingElem::Rat(v.clone())])),
            _ => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                self.divide(&num, &den)
            }
        }
    }

    /// The polynomial variable `t` of 𝔽_p[t] or ℚ[t].
    pub fn variable(&self) -> Option<RingElem> {
        let inner = self.inner()?;
        Some(RingElem::Poly(vec![inner.zero(), inner.one()]))
    }

    /// Whether `e` is a canonical element of this ring.
    pub fn contains(&self, e: &RingElem) -> bool {
        match (self, e) {
            (BaseRing::Integers, RingElem::Int(_)) => true,
            (BaseRing::Rationals, RingElem::Rat(_)) => true,
            (BaseRing::PrimeField(_) | BaseRing::ResidueRing { .. }, RingElem::Res(r)) => {
                *r < self.modulus().unwrap()
            }
            (BaseRing::PolyFp(_) | BaseRing::PolyQ, RingElem::Poly(c)) => {
                let inner = self.inner().unwrap();
                c.last().is_none_or(|l| !inner.is_zero(l)) && c.iter().all(|x| inner.contains(x))
            }
            _ => false,
        }
    }

    // ----- arithmetic -----

    pub fn is_zero(&self, e: &RingElem) -> bool {
        match e {
            RingElem::Int(v) => v.is_zero(),
            RingElem::Rat(v) => v.is_zero(),
            RingElem::Res(v) => *v == 0,
            RingElem::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, e: &RingElem) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x + y),
            (RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x + y),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap();
                RingElem::Res((x + y) % m)
            }
            (RingElem::Poly(x), RingElem::Poly(y)) => RingElem::Poly(poly::add(&self.inner().unwrap(), x, y)),
            _ => panic!("ring element kind mismatch in add over {self}"),
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) => RingElem::Int(-x),
            RingElem::Rat(x) => RingElem::Rat(-x),
            RingElem::Res(x) => {
                let m = self.modulus().unwrap();
                RingElem::Res((m - x) % m)
            }
            RingElem::Poly(x) => RingElem::Poly(poly::neg(&self.inner().unwrap(), x)),
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x - y),
            (RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x - y),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap();
                RingElem::Res((x + m - y) % m)
            }
            (RingElem::Poly(x), RingElem::Poly(y)) => RingElem::Poly(poly::sub(&self.inner().unwrap(), x, y)),
            _ => panic!("ring element kind mismatch in sub over {self}"),
        }
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => RingElem::Int(x * y),
            (RingElem::Rat(x), RingElem::Rat(y)) => RingElem::Rat(x * y),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap();
                RingElem::Res(x * y % m)
            }
            (RingElem::Poly(x), RingElem::Poly(y)) => RingElem::Poly(poly::mul(&self.inner().unwrap(), x, y)),
            _ => panic!("ring element kind mismatch in mul over {self}"),
        }
    }

    /// `acc + a*b`.
    pub fn mul_add(&self, acc: &RingElem, a: &RingElem, b: &RingElem) -> RingElem {
        if self.is_zero(a) || self.is_zero(b) {
            return acc.clone();
        }
        self.add(acc, &self.mul(a, b))
    }

    pub fn pow(&self, a: &RingElem, mut e: u32) -> RingElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn sum<'a>(&self, it: impl IntoIterator<Item = &'a RingElem>) -> RingElem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn inv(&self, a: &RingElem) -> Option<RingElem> {
        match a {
            RingElem::Int(x) => {
                if x.is_one() || (-x).is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            RingElem::Rat(x) => (!x.is_zero()).then(|| RingElem::Rat(x.recip())),
            RingElem::Res(x) => mod_inverse(*x, self.modulus().unwrap()).map(RingElem::Res),
            RingElem::Poly(c) => {
                if c.len() == 1 {
                    let inner = self.inner().unwrap();
                    inner.inv(&c[0]).map(|i| RingElem::Poly(vec![i]))
                } else {
                    None
                }
            }
        }
    }

    pub fn is_unit(&self, a: &RingElem) -> bool {
        self.inv(a).is_some()
    }

    /// Some `q` with `b*q == a`, if one exists.
    pub fn divide(&self, a: &RingElem, b: &RingElem) -> Option<RingElem> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        if self.is_zero(b) {
            return None;
        }
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => {
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(RingElem::Int(q))
            }
            (RingElem::Rat(x), RingElem::Rat(y)) => Some(RingElem::Rat(x / y)),
            (RingElem::Res(x), RingElem::Res(y)) => {
                let m = self.modulus().unwrap();
                let g = gcd_u64(*y, m);
                if x % g != 0 {
                    return None;
                }
                let m2 = m / g;
                let inv = mod_inverse((y / g) % m2, m2).unwrap_or(0);
                let q = ((x / g) as u128 * inv as u128 % m2 as u128) as u64;
                Some(RingElem::Res(q % m))
            }
            (RingElem::Poly(x), RingElem::Poly(y)) => {
                let inner = self.inner().unwrap();
                let (q, r) = poly::div_rem(&inner, x, y);
                r.is_empty().then_some(RingElem::Poly(q))
            }
            _ => panic!("ring element kind mismatch in divide over {self}"),
        }
    }

    /// Euclidean division for ℤ, fields and polynomial rings over fields.
    ///
    /// Over ℤ the remainder satisfies `|r| < |b|` (truncating division).
    pub fn div_rem(&self, a: &RingElem, b: &RingElem) -> (RingElem, RingElem) {
        assert!(!self.is_zero(b), "division by zero");
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) => {
                let (q, r) = x.div_rem(y);
                (RingElem::Int(q), RingElem::Int(r))
            }
            (RingElem::Poly(x), RingElem::Poly(y)) => {
                let inner = self.inner().unwrap();
                let (q, r) = poly::div_rem(&inner, x, y);
                (RingElem::Poly(q), RingElem::Poly(r))
            }
            _ if self.is_field() => (self.divide(a, b).expect("field division"), self.zero()),
            _ => panic!("div_rem is not available over {self}"),
        }
    }

    /// Size function of the Euclidean structure.
    pub fn euclid_size(&self, a: &RingElem) -> BigUint {
        match a {
            RingElem::Int(x) => x.magnitude().clone(),
            RingElem::Poly(c) => BigUint::from(c.len()),
            _ => {
                if self.is_zero(a) {
                    BigUint::zero()
                } else {
                    BigUint::one()
                }
            }
        }
    }

    /// Normalized gcd: non-negative over ℤ, monic over polynomial rings,
    /// 0 or 1 over fields, and `p^min(v(a), v(b))` over ℤ/p^k.
    pub fn gcd(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match self {
            BaseRing::ResidueRing { p, k } => {
                let v = self.valuation(a).min(self.valuation(b));
                if v >= *k {
                    self.zero()
                } else {
                    RingElem::Res(p.pow(v))
                }
            }
            _ if self.is_field() => {
                if self.is_zero(a) && self.is_zero(b) {
                    self.zero()
                } else {
                    self.one()
                }
            }
            _ => {
                let (mut x, mut y) = (a.clone(), b.clone());
                while !self.is_zero(&y) {
                    let (_, r) = self.div_rem(&x, &y);
                    x = y;
                    y = r;
                }
                self.normalize(&x)
            }
        }
    }

    /// Canonical associate: |x| over ℤ, monic polynomial, 1 for nonzero field elements.
    pub fn normalize(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) => RingElem::Int(x.abs()),
            RingElem::Poly(c) if !c.is_empty() => {
                let inner = self.inner().unwrap();
                let lc_inv = inner.inv(c.last().unwrap()).unwrap();
                RingElem::Poly(poly::scale(&inner, c, &lc_inv))
            }
            _ if self.is_field() && !self.is_zero(a) => self.one(),
            _ => a.clone(),
        }
    }

    /// A unit `u` with `u*a == normalize(a)`.
    pub fn normalizing_unit(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) if x.sign() == Sign::Minus => self.from_i64(-1),
            RingElem::Poly(c) if !c.is_empty() => {
                let inner = self.inner().unwrap();
                RingElem::Poly(vec![inner.inv(c.last().unwrap()).unwrap()])
            }
            _ if self.is_field() && !self.is_zero(a) => self.inv(a).unwrap(),
            _ => self.one(),
        }
    }

    /// p-adic valuation of a residue (k for zero) in ℤ/p^k or 𝔽_p.
    pub fn valuation(&self, a: &RingElem) -> u32 {
        let (p, k) = match *self {
            BaseRing::ResidueRing { p, k } => (p, k),
            BaseRing::PrimeField(p) => (p, 1),
            _ => panic!("valuation is only defined over residue rings"),
        };
        let RingElem::Res(mut x) = *a else { panic!("expected residue") };
        if x == 0 {
            return k;
        }
        let mut v = 0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    }

    /// Integer representative in `[0, m)` of a residue, or the value of an integer.
    pub fn lift_to_int(&self, a: &RingElem) -> Option<BigInt> {
        match a {
            RingElem::Int(x) => Some(x.clone()),
            RingElem::Res(x) => Some(BigInt::from(*x)),
            _ => None,
        }
    }

    pub fn is_zerodivisor(&self, a: &RingElem) -> bool {
        if self.is_zero(a) {
            return true;
        }
        match self {
            BaseRing::ResidueRing { p, .. } => {
                let RingElem::Res(x) = a else { unreachable!() };
                x % p == 0
            }
            _ => false,
        }
    }

    /// An element `a` with `a(a-1)` a nonzerodivisor, if the ring has one.
    pub fn theorem_a_witness(&self) -> Option<RingElem> {
        match self {
            BaseRing::PrimeField(2) | BaseRing::ResidueRing { p: 2, .. } => None,
            BaseRing::PolyFp(2) => self.variable(),
            _ => Some(self.from_i64(-1)),
        }
    }

    /// All elements of a finite ring, each once, in increasing residue order.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = RingElem>> {
        let m = self.modulus().ok_or_else(|| Error::InfiniteRing(self.to_string()))?;
        Ok((0..m).map(RingElem::Res))
    }

    /// Human-readable form of an element.
    pub fn format(&self, a: &RingElem) -> String {
        match a {
            RingElem::Int(x) => x.to_string(),
            RingElem::Rat(x) => x.to_string(),
            RingElem::Res(x) => x.to_string(),
            RingElem::Poly(c) => {
                if c.is_empty() {
                    return "0".into();
                }
                let inner = self.inner().unwrap();
                let mut terms = Vec::new();
                for (i, ci) in c.iter().enumerate().rev() {
                    if inner.is_zero(ci) {
                        continue;
                    }
                    let coef = inner.format(ci);
                    let term = match (i, coef.as_str()) {
                        (0, _) => coef,
                        (1, "1") => "t".to_string(),
                        (_, "1") => format!("t^{i}"),
                        (1, _) => format!("({coef})*t"),
                        _ => format!("({coef})*t^{i}"),
                    };
                    terms.push(term);
                }
                terms.join(" + ")
            }
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::Rationals => write!(f, "Q"),
            BaseRing::PrimeField(p) => write!(f, "F_{p}"),
            BaseRing::ResidueRing { p, k } => write!(f, "Z/{}", p.pow(*k)),
            BaseRing::PolyFp(p) => write!(f, "F_{p}[t]"),
            BaseRing::PolyQ => write!(f, "Q[t]"),
        }
    }
}

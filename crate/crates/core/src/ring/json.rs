//! JSON forms of ring descriptors and ring elements.
//!
//! Integers and residues are decimal strings, rationals are `"p/q"` (or a
//! bare integer when the denominator is 1), polynomials are arrays of
//! coefficient strings with the constant term first.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::{poly, BaseRing, RingElem};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct Descriptor {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    k: Option<u32>,
}

impl BaseRing {
    fn descriptor(&self) -> Descriptor {
        let (kind, p, k) = match *self {
            BaseRing::Integers => ("Z", None, None),
            BaseRing::Rationals => ("Q", None, None),
            BaseRing::PrimeField(p) => ("Fp", Some(p), None),
            BaseRing::ResidueRing { p, k } => ("Zmod", Some(p), Some(k)),
            BaseRing::PolyFp(p) => ("PolyFp", Some(p), None),
            BaseRing::PolyQ => ("PolyQ", None, None),
        };
        Descriptor { kind: kind.into(), p, k }
    }

    fn from_descriptor(d: Descriptor) -> Result<Self> {
        let need_p = || d.p.ok_or_else(|| Error::Parse(format!("ring kind {} needs \"p\"", d.kind)));
        match d.kind.as_str() {
            "Z" => Ok(BaseRing::Integers),
            "Q" => Ok(BaseRing::Rationals),
            "Fp" => BaseRing::prime_field(need_p()?),
            "Zmod" => {
                let k = d.k.ok_or_else(|| Error::Parse("ring kind Zmod needs \"k\"".into()))?;
                BaseRing::residue_ring(need_p()?, k)
            }
            "PolyFp" => BaseRing::poly_fp(need_p()?),
            "PolyQ" => Ok(BaseRing::PolyQ),
            other => Err(Error::UnsupportedRing(format!("unknown ring kind {other:?}"))),
        }
    }

    /// Reads a ring descriptor, keeping the error kind: a malformed descriptor
    /// is a parse error, a well-formed but unsupported one is not.
    pub fn from_descriptor_json(v: &Value) -> Result<Self> {
        let d: Descriptor = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("ring descriptor: {e}")))?;
        BaseRing::from_descriptor(d)
    }

    /// Parses a ring from a string such as `Z`, `Q`, `F5`, `Z/9`, `F3[t]`, `Q[t]`
    /// or a JSON descriptor.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            let d: Descriptor = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_descriptor(d);
        }
        let num = |x: &str| x.parse::<u64>().map_err(|_| Error::Parse(format!("bad ring {s:?}")));
        match s {
            "Z" => Ok(BaseRing::Integers),
            "Q" => Ok(BaseRing::Rationals),
            "Q[t]" => Ok(BaseRing::PolyQ),
            _ => {
                if let Some(rest) = s.strip_prefix("Z/") {
                    BaseRing::zmod(num(rest)?)
                } else if let Some(rest) = s.strip_suffix("[t]") {
                    let rest = rest.trim_start_matches('F').trim_start_matches('_');
                    BaseRing::poly_fp(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('F') {
                    BaseRing::prime_field(num(rest.trim_start_matches('_'))?)
                } else {
                    Err(Error::Parse(format!("bad ring {s:?}")))
                }
            }
        }
    }

    pub fn elem_to_json(&self, e: &RingElem) -> Value {
        match e {
            RingElem::Poly(c) => {
                let inner = self.inner().expect("polynomial ring");
                Value::Array(c.iter().map(|x| inner.elem_to_json(x)).collect())
            }
            RingElem::Rat(q) if q.denom() == &BigInt::from(1) => Value::String(q.numer().to_string()),
            RingElem::Rat(q) => Value::String(format!("{}/{}", q.numer(), q.denom())),
            RingElem::Int(x) => Value::String(x.to_string()),
            RingElem::Res(x) => Value::String(x.to_string()),
        }
    }

    /// Parses and canonicalizes an element. Integers are reduced into residue
    /// rings; numbers may be JSON strings or JSON integers.
    pub fn elem_from_json(&self, v: &Value) -> Result<RingElem> {
        let bad = |detail: String| Error::InvalidElement { ring: self.to_string(), detail };
        match self {
            BaseRing::PolyFp(_) | BaseRing::PolyQ => {
                let inner = self.inner().unwrap();
                let arr = v.as_array().ok_or_else(|| bad(format!("expected coefficient array, got {v}")))?;
                let coeffs = arr.iter().map(|x| inner.elem_from_json(x)).collect::<Result<Vec<_>>>()?;
                Ok(poly::from_coeffs(&inner, coeffs))
            }
            _ => {
                let s = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                    _ => return Err(bad(format!("expected a string, got {v}"))),
                };
                self.elem_from_str(&s)
            }
        }
    }

    pub fn elem_from_str(&self, s: &str) -> Result<RingElem> {
        let bad = |detail: String| Error::InvalidElement { ring: self.to_string(), detail };
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad(format!("bad numerator in {s:?}")))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(bad("zero denominator".into()));
            }
            return self
                .from_rational(&BigRational::new(n, d))
                .ok_or_else(|| bad(format!("{s} is not an element of {self}")));
        }
        let n = BigInt::from_str(s).map_err(|_| bad(format!("not an integer: {s:?}")))?;
        Ok(self.from_bigint(&n))
    }
}

impl Serialize for BaseRing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BaseRing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = Descriptor::deserialize(d)?;
        BaseRing::from_descriptor(desc).map_err(serde::de::Error::custom)
    }
}

//! Exceptional rings `B = R ⊕ M` with `xy = t(x) y` on `M`.

use serde_json::{json, Value};

use crate::algebra::{unit_table, AlgebraElement, MonicPolynomial, StructureAlgebra};
use crate::error::{Error, Result};
use crate::involution::find_standard_involution;
use crate::ring::linalg::Matrix;
use crate::ring::roots::quadratic_roots;
use crate::ring::{BaseRing, RingElem};

/// A splitting `B = R·1 ⊕ M` exhibiting `B` as exceptional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalData {
    /// `π(e_k)` for the algebra's basis; `π` is multiplicative with kernel `M`.
    pub pi: Vec<RingElem>,
    /// `t(m_1), ..., t(m_{n-1})`.
    pub t: Vec<RingElem>,
    /// Rows: `1, m_1, ..., m_{n-1}` in the algebra's coordinates.
    pub basis_change: Matrix,
}

impl ExceptionalData {
    pub fn pi_of(&self, ring: &BaseRing, x: &AlgebraElement) -> RingElem {
        ring.sum(x.0.iter().zip(&self.pi).map(|(a, p)| ring.mul(a, p)).collect::<Vec<_>>().iter())
    }

    pub fn m(&self, alg: &StructureAlgebra, i: usize) -> AlgebraElement {
        alg.element(self.basis_change.row(i))
    }

    /// `t(x)` for `x ∈ M`. Since `m_i = e_i - π(e_i)`, the coordinates of `x`
    /// on `m_1, ...` are its coordinates on `e_1, ...`.
    pub fn t_of(&self, ring: &BaseRing, x: &AlgebraElement) -> RingElem {
        ring.sum(x.0[1..].iter().zip(&self.t).map(|(a, t)| ring.mul(a, t)).collect::<Vec<_>>().iter())
    }

    pub fn to_json(&self, ring: &BaseRing) -> Value {
        let v = |xs: &[RingElem]| xs.iter().map(|x| ring.elem_to_json(x)).collect::<Vec<_>>();
        json!({
            "pi": v(&self.pi),
            "t": v(&self.t),
            "basis_change": self.basis_change.to_rows().iter().map(|r| v(r)).collect::<Vec<_>>(),
        })
    }
}

/// The exceptional ring of rank `n` with `m_i m_j = t_i m_j`.
pub fn make_exceptional(ring: &BaseRing, n: usize, t: &[RingElem]) -> Result<(StructureAlgebra, ExceptionalData)> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if t.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!("rank {n} needs {} trace values, got {}", n - 1, t.len())));
    }
    let table = unit_table(ring, n, |i, j| {
        let mut v = vec![ring.zero(); n];
        v[j] = t[i - 1].clone();
        v
    });
    let alg = StructureAlgebra::from_table(ring, table)?;
    let alg = match n {
        3 => alg,
        _ => {
            let names = std::iter::once("1".to_string()).chain((1..n).map(|i| format!("m{i}"))).collect();
            alg.with_basis_names(names)
        }
    };
    let mut pi = vec![ring.zero(); n];
    pi[0] = ring.one();
    let data = ExceptionalData { pi, t: t.to_vec(), basis_change: Matrix::identity(ring, n) };
    Ok((alg, data))
}

pub fn make_exceptional_i64(ring: &BaseRing, n: usize, t: &[i64]) -> Result<(StructureAlgebra, ExceptionalData)> {
    make_exceptional(ring, n, &t.iter().map(|&x| ring.from_i64(x)).collect::<Vec<_>>())
}

/// Every exceptional splitting of `B`. For rank above 2 there is at most one;
/// in rank 2 a splitting and its conjugate are both listed when distinct.
pub fn exceptional_splittings(alg: &StructureAlgebra) -> Vec<ExceptionalData> {
    let Ok(inv) = find_standard_involution(alg) else { return Vec::new() };
    let ring = alg.ring();
    let n = alg.rank();
    let trd = inv.trd_vector();
    // π(e_i) is a root of μ(e_i; T) = T^2 - trd(e_i) T + nrd(e_i)
    let mut candidates = vec![vec![ring.one()]];
    for i in 1..n {
        let nrd = inv.reduced_norm(alg, &alg.basis_element(i));
        let roots = quadratic_roots(ring, &trd[i], &nrd);
        if roots.is_empty() {
            return Vec::new();
        }
        candidates.push(roots);
    }
    let mut found = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let pi: Vec<RingElem> = idx.iter().enumerate().map(|(i, &c)| candidates[i][c].clone()).collect();
        if let Some(data) = splitting_for(alg, &pi) {
            found.push(data);
        }
        let mut pos = 1;
        loop {
            if pos == n {
                return found;
            }
            idx[pos] += 1;
            if idx[pos] < candidates[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn splitting_for(alg: &StructureAlgebra, pi: &[RingElem]) -> Option<ExceptionalData> {
    let ring = alg.ring();
    let n = alg.rank();
    let pi_of = |x: &AlgebraElement| ring.sum(x.0.iter().zip(pi).map(|(a, p)| ring.mul(a, p)).collect::<Vec<_>>().iter());
    for i in 1..n {
        for j in 1..n {
            if pi_of(&alg.product_of_basis(i, j)) != ring.mul(&pi[i], &pi[j]) {
                return None;
            }
        }
    }
    let ms: Vec<AlgebraElement> = (1..n).map(|i| alg.sub(&alg.basis_element(i), &alg.scalar(&pi[i]))).collect();
    let inv = find_standard_involution(alg).ok()?;
    let t: Vec<RingElem> = ms.iter().map(|m| inv.reduced_trace(ring, m)).collect();
    for (a, x) in ms.iter().enumerate() {
        for y in &ms {
            if alg.mul(x, y) != alg.scale(&t[a], y) {
                return None;
            }
        }
    }
    let mut rows = vec![alg.one().0];
    rows.extend(ms.into_iter().map(|m| m.0));
    Some(ExceptionalData { pi: pi.to_vec(), t, basis_change: Matrix::from_rows(rows) })
}

pub fn recognize_exceptional(alg: &StructureAlgebra) -> Option<ExceptionalData> {
    exceptional_splittings(alg).into_iter().next()
}

/// The characteristic-polynomial identities for `x ∈ M`:
/// `χ_L = T(T - τ)^{n-1}`, `χ_R = T^{n-1}(T - τ)`, `μ = T(T - τ)` and
/// `Tr(x) = (n-1)τ`, where `τ = trd(x) = t(x)`.
pub fn exceptional_charpoly_check(alg: &StructureAlgebra, data: &ExceptionalData, x: &AlgebraElement) -> Result<bool> {
    let ring = alg.ring();
    let n = alg.rank();
    if !ring.is_zero(&data.pi_of(ring, x)) {
        return Err(Error::Precondition("element is not in M".into()));
    }
    let inv = find_standard_involution(alg).map_err(|_| Error::Precondition("algebra has no involution".into()))?;
    let tau = inv.reduced_trace(ring, x);
    let t_lin = MonicPolynomial::linear(ring, &tau);
    let t_var = MonicPolynomial::linear(ring, &ring.zero());
    let chi_l = t_var.mul(ring, &t_lin.pow(ring, n - 1));
    let chi_r = t_var.pow(ring, n - 1).mul(ring, &t_lin);
    let mu = MonicPolynomial::from_lower(vec![inv.reduced_norm(alg, x), ring.neg(&tau)]);
    Ok(alg.char_poly_left(x) == chi_l
        && alg.char_poly_right(x) == chi_r
        && mu == t_var.mul(ring, &t_lin)
        && alg.trace_left(x) == ring.mul(&ring.from_i64(n as i64 - 1), &tau)
        && data.t_of(ring, x) == tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::linalg::determinant;

    #[test]
    fn rank_three_reproduces_nc_laws() {
        let z = BaseRing::Integers;
        let (b, _) = make_exceptional_i64(&z, 3, &[3, 5]).unwrap();
        let (i, j) = (b.basis_element(1), b.basis_element(2));
        assert_eq!(b.mul(&i, &i), b.scale(&z.from_i64(3), &i));
        assert_eq!(b.mul(&i, &j), b.scale(&z.from_i64(3), &j));
        assert_eq!(b.mul(&j, &j), b.scale(&z.from_i64(5), &j));
        assert_eq!(b.mul(&j, &i), b.scale(&z.from_i64(5), &i));
        assert!(find_standard_involution(&b).is_ok());
    }

    #[test]
    fn rank_two_cases() {
        let z = BaseRing::Integers;
        let (b0, _) = make_exceptional_i64(&z, 2, &[0]).unwrap();
        let x = b0.basis_element(1);
        assert_eq!(b0.mul(&x, &x), b0.zero());
        let (b1, _) = make_exceptional_i64(&z, 2, &[1]).unwrap();
        let e = b1.basis_element(1);
        assert_eq!(b1.mul(&e, &e), e);
        // R × R splits two ways: M = Re and M = R(1 - e)
        assert_eq!(exceptional_splittings(&b1).len(), 2);
        assert_eq!(exceptional_splittings(&b0).len(), 1);
    }

    #[test]
    fn zero_trace_is_commutative() {
        let f3 = BaseRing::PrimeField(3);
        let (b, _) = make_exceptional_i64(&f3, 4, &[0, 0, 0]).unwrap();
        assert!(b.is_commutative());
    }

    #[test]
    fn recognizes_translated_basis() {
        // basis 1, i + 2, j - 1 of nc(3, 0) over Z
        let z = BaseRing::Integers;
        let (b, _) = make_exceptional_i64(&z, 3, &[3, 0]).unwrap();
        let p = Matrix::from_i64(&z, &[&[1, 0, 0], &[2, 1, 0], &[-1, 0, 1]]);
        let moved = b.change_basis(&p).unwrap();
        let data = recognize_exceptional(&moved).unwrap();
        let g = z.gcd(&data.t[0], &data.t[1]);
        assert_eq!(g, z.from_i64(3));
        assert!(z.is_unit(&determinant(&z, &data.basis_change)));
    }

    #[test]
    fn matrix_algebra_is_not_exceptional() {
        let f3 = BaseRing::PrimeField(3);
        let coords = |r: usize, c: usize| -> Vec<i64> {
            match (r, c) {
                (1, 1) => vec![0, 1, 0, 0],
                (1, 2) => vec![0, 0, 1, 0],
                (2, 1) => vec![0, 0, 0, 1],
                _ => vec![1, -1, 0, 0],
            }
        };
        let units = [(1, 1), (1, 2), (2, 1)];
        let t = unit_table(&f3, 4, |a, b| {
            let (r1, c1) = units[a - 1];
            let (r2, c2) = units[b - 1];
            let v = if c1 == r2 { coords(r1, c2) } else { vec![0; 4] };
            v.into_iter().map(|x| f3.from_i64(x)).collect()
        });
        let m = StructureAlgebra::from_table(&f3, t).unwrap();
        assert!(recognize_exceptional(&m).is_none());
    }

    #[test]
    fn z_x_mod_x2_minus_1() {
        let z = BaseRing::Integers;
        let b = StructureAlgebra::from_i64_table(&z, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]]).unwrap();
        let data = recognize_exceptional(&b).unwrap();
        let ts: Vec<RingElem> = exceptional_splittings(&b).into_iter().map(|d| d.t[0].clone()).collect();
        assert!(ts.contains(&z.from_i64(-2)), "{ts:?}");
        assert_eq!(data.t.len(), 1);
    }

    #[test]
    fn charpoly_identities() {
        let z = BaseRing::Integers;
        let (b, data) = make_exceptional_i64(&z, 3, &[3, 5]).unwrap();
        assert!(exceptional_charpoly_check(&b, &data, &b.basis_element(1)).unwrap());
        assert_eq!(b.trace_left(&b.basis_element(1)), z.from_i64(6));
        assert!(exceptional_charpoly_check(&b, &data, &b.zero()).unwrap());
        assert!(exceptional_charpoly_check(&b, &data, &b.one()).is_err());
        let f7 = BaseRing::PrimeField(7);
        let (b, data) = make_exceptional_i64(&f7, 4, &[1, 2, 3]).unwrap();
        let x = b.element_i64(&[0, 1, 1, 0]);
        assert!(exceptional_charpoly_check(&b, &data, &x).unwrap());
        let t_lin = MonicPolynomial::linear(&f7, &f7.from_i64(3));
        let expect = MonicPolynomial::linear(&f7, &f7.zero()).mul(&f7, &t_lin.pow(&f7, 3));
        assert_eq!(b.char_poly_left(&x), expect);
    }
}

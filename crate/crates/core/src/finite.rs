//! Word-size arithmetic for algebras over `ℤ/m` (including prime fields).
//!
//! Used where whole rings or whole censuses are enumerated; results are
//! cross-checked against the generic [`StructureAlgebra`] code in tests.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::ring::RingElem;

/// Structure constants reduced mod `m`, indexed `(i * n + j) * n + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    pub m: u32,
    pub n: usize,
    pub c: Vec<u32>,
}

/// Bound on the number of ring-element tuples enumerated by one call.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

impl FiniteTable {
    pub fn new(m: u32, n: usize, c: Vec<u32>) -> Self {
        assert_eq!(c.len(), n * n * n);
        FiniteTable { m, n, c }
    }

    pub fn from_algebra(alg: &StructureAlgebra) -> Option<Self> {
        let m = u32::try_from(alg.ring().modulus()?).ok()?;
        let n = alg.rank();
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let RingElem::Res(v) = alg.coeff(i, j, k) else { return None };
                    c.push(*v as u32);
                }
            }
        }
        Some(FiniteTable { m, n, c })
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        self.c[(i * self.n + j) * self.n + k]
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let (n, m) = (self.n, self.m as u64);
        let mut acc = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = (xi as u64 * yj as u64) % m;
                let base = (i * n + j) * n;
                for (k, a) in acc.iter_mut().enumerate() {
                    *a = (*a + s * self.c[base + k] as u64) % m;
                }
            }
        }
        acc.into_iter().map(|a| a as u32).collect()
    }

    pub fn has_unit_at_zero(&self) -> bool {
        let n = self.n;
        (0..n).all(|j| (0..n).all(|k| {
            let want = u32::from(j == k);
            self.coeff(0, j, k) == want && self.coeff(j, 0, k) == want
        }))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.n;
        let basis = |i: usize| -> Vec<u32> { (0..n).map(|k| u32::from(k == i)).collect() };
        for i in 1..n {
            for j in 1..n {
                let ij = self.mul(&basis(i), &basis(j));
                for k in 1..n {
                    let jk = self.mul(&basis(j), &basis(k));
                    if self.mul(&ij, &basis(k)) != self.mul(&basis(i), &jk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Calls `f` on every coordinate vector, in lexicographic order.
    pub fn for_each_element(&self, mut f: impl FnMut(&[u32]) -> bool) -> Result<()> {
        let total = (self.m as u128).pow(self.n as u32);
        if total > ENUMERATION_LIMIT {
            return Err(Error::LimitExceeded { size: total, limit: ENUMERATION_LIMIT });
        }
        let mut x = vec![0u32; self.n];
        loop {
            if !f(&x) {
                return Ok(());
            }
            if !odometer(&mut x, self.m) {
                return Ok(());
            }
        }
    }

    /// Degree of `x` by searching all coefficient tuples of each candidate
    /// monic relation. Independent of the linear solver.
    pub fn element_degree(&self, x: &[u32]) -> usize {
        let (n, m) = (self.n, self.m);
        let mut powers = vec![(0..n).map(|k| u32::from(k == 0)).collect::<Vec<u32>>()];
        for d in 1..=n {
            let next = self.mul(powers.last().unwrap(), x);
            powers.push(next);
            // x^d - sum_{1 <= j < d} c_j x^j must lie in R·1
            let mut c = vec![0u32; d - 1];
            loop {
                let ok = (1..n).all(|k| {
                    let mut v = powers[d][k] as u64;
                    for (j, cj) in c.iter().enumerate() {
                        v += (m - cj) as u64 * powers[j + 1][k] as u64;
                    }
                    v.is_multiple_of(m as u64)
                });
                if ok {
                    return d;
                }
                if !odometer(&mut c, m) {
                    break;
                }
            }
        }
        unreachable!("every element satisfies its characteristic polynomial")
    }

    /// Maximum element degree over all `m^n` elements.
    pub fn algebra_degree(&self) -> Result<usize> {
        let mut best = 1;
        self.for_each_element(|x| {
            best = best.max(self.element_degree(x));
            best < self.n
        })?;
        Ok(best)
    }
}

/// Advances `x` as a base-`m` counter; false after wrapping to all zeros.
pub fn odometer(x: &mut [u32], m: u32) -> bool {
    for v in x.iter_mut() {
        *v += 1;
        if *v < m {
            return true;
        }
        *v = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::unit_table;
    use crate::ring::BaseRing;

    #[test]
    fn boolean_cube_has_degree_two() {
        let f2 = BaseRing::PrimeField(2);
        let t = unit_table(&f2, 3, |a, b| match (a, b) {
            (1, 1) => vec![f2.zero(), f2.one(), f2.zero()],
            (2, 2) => vec![f2.zero(), f2.zero(), f2.one()],
            _ => vec![f2.zero(); 3],
        });
        let alg = StructureAlgebra::from_table(&f2, t).unwrap();
        let ft = FiniteTable::from_algebra(&alg).unwrap();
        assert!(ft.has_unit_at_zero() && ft.is_associative());
        assert_eq!(ft.element_degree(&[0, 1, 0]), 2);
        assert_eq!(ft.element_degree(&[1, 0, 0]), 1);
        assert_eq!(ft.algebra_degree().unwrap(), 2);
    }

    #[test]
    fn odometer_visits_everything() {
        let mut x = vec![0u32; 3];
        let mut count = 1;
        while odometer(&mut x, 3) {
            count += 1;
        }
        assert_eq!(count, 27);
        assert_eq!(x, vec![0, 0, 0]);
    }
}

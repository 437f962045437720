//! Random algebra generators shared by the integration tests and the
//! acceptance harness.
#![allow(dead_code)]

use lowrank::algebra::{unit_table, CFormParams};
use lowrank::exceptional::make_exceptional;
use lowrank::rank3::nc_algebra;
use lowrank::ring::linalg::Matrix;
use lowrank::{BaseRing, RingElem, StructureAlgebra};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut impl Rng, b: i64) -> i64 {
    rng.gen_range(-b..=b)
}

/// A random basis change fixing 1: row 0 is `1`, rows `i >= 1` are
/// `a_i + Σ A_ij e_j` with `A` a product of elementary matrices.
pub fn random_unimodular(ring: &BaseRing, n: usize, rng: &mut impl Rng) -> Matrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    if n > 2 {
        for _ in 0..2 * n {
            let (i, j) = (rng.gen_range(1..n), rng.gen_range(1..n));
            if i != j {
                let c = small(rng, 2);
                for k in 0..n {
                    rows[i][k] += c * rows[j][k];
                }
            }
        }
        let mut perm: Vec<usize> = (1..n).collect();
        perm.shuffle(rng);
        let old = rows.clone();
        for (dst, &src) in (1..n).zip(&perm) {
            rows[dst] = old[src].clone();
        }
    }
    for row in rows.iter_mut().skip(1) {
        if rng.gen_bool(0.5) {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        row[0] += small(rng, 3);
    }
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|v| ring.from_i64(v)).collect()).collect())
}

pub fn scramble(alg: &StructureAlgebra, rng: &mut impl Rng) -> StructureAlgebra {
    let p = random_unimodular(alg.ring(), alg.rank(), rng);
    alg.change_basis(&p).expect("unimodular basis change fixing 1")
}

fn from_i64_unit(ring: &BaseRing, n: usize, f: impl Fn(usize, usize) -> Vec<i64>) -> StructureAlgebra {
    let t = unit_table(ring, n, |i, j| f(i, j).into_iter().map(|v| ring.from_i64(v)).collect());
    StructureAlgebra::from_table(ring, t).expect("generator produces a valid algebra")
}

/// `R[x]/(f)` for a monic `f` with lower coefficients `lower`.
pub fn monogenic(ring: &BaseRing, lower: &[i64]) -> StructureAlgebra {
    let n = lower.len();
    // x^k for k < 2n - 1 in the basis 1, x, ..., x^{n-1}
    let mut pows: Vec<Vec<i64>> = (0..n).map(|k| (0..n).map(|j| (j == k) as i64).collect()).collect();
    for k in n..2 * n - 1 {
        let prev = pows[k - 1].clone();
        let mut next = vec![0i64; n];
        for j in 1..n {
            next[j] = prev[j - 1];
        }
        for j in 0..n {
            next[j] -= prev[n - 1] * lower[j];
        }
        pows.push(next);
    }
    let t = unit_table(ring, n, |i, j| pows[i + j].iter().map(|&v| ring.from_i64(v)).collect());
    StructureAlgebra::from_table(ring, t).expect("monogenic algebra")
}

pub fn quaternion_order(ring: &BaseRing, a: i64, b: i64) -> StructureAlgebra {
    // basis 1, i, j, k = ij
    from_i64_unit(ring, 4, |x, y| match (x, y) {
        (1, 1) => vec![a, 0, 0, 0],
        (2, 2) => vec![b, 0, 0, 0],
        (3, 3) => vec![-a * b, 0, 0, 0],
        (1, 2) => vec![0, 0, 0, 1],
        (2, 1) => vec![0, 0, 0, -1],
        (1, 3) => vec![0, 0, a, 0],
        (3, 1) => vec![0, 0, -a, 0],
        (2, 3) => vec![0, -b, 0, 0],
        _ => vec![0, b, 0, 0],
    })
}

pub fn mat2(ring: &BaseRing) -> StructureAlgebra {
    // basis 1, e11, e12, e21 with e22 = 1 - e11
    from_i64_unit(ring, 4, |x, y| match (x, y) {
        (1, 1) => vec![0, 1, 0, 0],
        (1, 2) => vec![0, 0, 1, 0],
        (2, 3) => vec![0, 1, 0, 0],
        (3, 1) => vec![0, 0, 0, 1],
        (3, 2) => vec![1, -1, 0, 0],
        _ => vec![0; 4],
    })
}

pub fn square_zero(ring: &BaseRing, n: usize) -> StructureAlgebra {
    from_i64_unit(ring, n, |_, _| vec![0; n])
}

/// `A × B` on the concatenated bases; the unit `(1, 1)` is found by re-basing.
pub fn product(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
    let ring = a.ring();
    let (n, m) = (a.rank(), b.rank());
    let table = (0..n + m)
        .map(|i| {
            (0..n + m)
                .map(|j| {
                    let mut v = vec![ring.zero(); n + m];
                    if i < n && j < n {
                        v[..n].clone_from_slice(&a.product_of_basis(i, j).0);
                    } else if i >= n && j >= n {
                        v[n..].clone_from_slice(&b.product_of_basis(i - n, j - n).0);
                    }
                    v
                })
                .collect()
        })
        .collect();
    StructureAlgebra::from_table(ring, table).expect("product algebra")
}

pub fn rank1(ring: &BaseRing) -> StructureAlgebra {
    from_i64_unit(ring, 1, |_, _| vec![])
}

/// A random validated algebra of rank at most 4 over `ring`, with integer
/// parameters in a small box, presented on a scrambled basis.
pub fn random_algebra(ring: &BaseRing, rng: &mut impl Rng) -> (String, StructureAlgebra) {
    let b = 5;
    let kind = rng.gen_range(0..12);
    let (label, alg) = match kind {
        0 => ("rank1".to_string(), rank1(ring)),
        1 => {
            let (t, n) = (small(rng, b), small(rng, b));
            (format!("quadratic({t},{n})"), monogenic(ring, &[n, -t]))
        }
        2 => {
            let (u, v) = (small(rng, b), small(rng, b));
            (format!("nc({u},{v})"), nc_algebra(ring, &ring.from_i64(u), &ring.from_i64(v)))
        }
        3 => {
            let (a, bb, c, d) = (small(rng, 3), small(rng, 3), small(rng, 3), small(rng, 3));
            let cp = c_params(ring, [a, bb, c, d, -a * d, 0, 0]);
            (format!("cubic({a},{bb},{c},{d})"), StructureAlgebra::from_table(ring, cp.table(ring)).unwrap())
        }
        4 => {
            let (bb, c) = (small(rng, b), small(rng, b));
            let cp = c_params(ring, [0, bb, c, 0, bb * c, -c, bb]);
            (format!("c_inv({bb},{c})"), StructureAlgebra::from_table(ring, cp.table(ring)).unwrap())
        }
        5 => {
            let n = rng.gen_range(2..=4);
            let t: Vec<RingElem> = (1..n).map(|_| ring.from_i64(small(rng, b))).collect();
            (format!("exceptional{n}"), make_exceptional(ring, n, &t).unwrap().0)
        }
        6 => ("mat2".to_string(), mat2(ring)),
        7 => {
            let (a, bb) = (small(rng, b), small(rng, b));
            (format!("quaternion({a},{bb})"), quaternion_order(ring, a, bb))
        }
        8 => {
            let n = rng.gen_range(3..=4);
            let lower: Vec<i64> = (0..n).map(|_| small(rng, b)).collect();
            (format!("monogenic{lower:?}"), monogenic(ring, &lower))
        }
        9 => {
            let (t, n) = (small(rng, b), small(rng, b));
            let q = monogenic(ring, &[n, -t]);
            let other = if rng.gen_bool(0.5) { rank1(ring) } else { monogenic(ring, &[small(rng, b), small(rng, b)]) };
            (format!("product(quadratic({t},{n}),rank{})", other.rank()), product(&q, &other))
        }
        10 => {
            let n = rng.gen_range(2..=4);
            (format!("square_zero{n}"), square_zero(ring, n))
        }
        _ => {
            // upper-triangular 2x2 matrices
            let alg = from_i64_unit(ring, 3, |x, y| match (x, y) {
                (1, 1) => vec![0, 1, 0],
                (1, 2) => vec![0, 0, 1],
                _ => vec![0; 3],
            });
            ("upper_tri".to_string(), alg)
        }
    };
    let scrambled = scramble(&alg, rng);
    (label, scrambled)
}

pub fn c_params(ring: &BaseRing, v: [i64; 7]) -> CFormParams {
    let e = |x: i64| ring.from_i64(x);
    CFormParams { a: e(v[0]), b: e(v[1]), c: e(v[2]), d: e(v[3]), r: e(v[4]), s: e(v[5]), t: e(v[6]) }
}

//! Exhaustive censuses of rank-2 and rank-3 algebras over small finite rings.
//!
//! Tables are enumerated with the unit fixed at basis vector 0, filtered by
//! associativity and by the existence of a standard involution, and then
//! grouped twice: by orbit invariant (rank 3) or pairwise isomorphism search
//! (rank 2), and by brute-force orbits under all basis changes fixing 1.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exceptional::recognize_exceptional;
use crate::finite::FiniteTable;
use crate::rank3::{iso_from_forms, normalize_rank3, orbit_invariant, GoodBasisForm, OrbitInvariant};
use crate::ring::{BaseRing, RingElem};

pub const DEFAULT_LIMIT: u128 = 1 << 24;

/// The census bound: `LOWRANK_LIMIT` if set and numeric, else [`DEFAULT_LIMIT`].
pub fn limit_from_env() -> u128 {
    std::env::var("LOWRANK_LIMIT").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_LIMIT)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusMode {
    /// Every table with the unit at index 0.
    Full,
    /// Rank 3 only: the tables in Gross–Lucianovic form (C), which meet every
    /// isomorphism class.
    Normalized,
}

impl CensusMode {
    pub fn name(self) -> &'static str {
        match self {
            CensusMode::Full => "full",
            CensusMode::Normalized => "normalized",
        }
    }

    pub fn search_size(self, m: u32, rank: usize) -> u128 {
        let m = m as u128;
        match (rank, self) {
            (2, _) => m * m,
            (3, CensusMode::Full) => m.pow(12),
            (3, CensusMode::Normalized) => m.pow(7),
            _ => u128::MAX,
        }
    }
}

fn modulus(ring: &BaseRing) -> Result<u32> {
    let m = ring.modulus().ok_or_else(|| Error::InfiniteRing(ring.to_string()))?;
    u32::try_from(m).map_err(|_| Error::Unsupported(format!("census over {ring} is too large")))
}

fn check_request(ring: &BaseRing, rank: usize, mode: CensusMode, limit: u128) -> Result<u32> {
    if !(2..=3).contains(&rank) {
        return Err(Error::Unsupported(format!("census supports rank 2 or 3, not {rank}")));
    }
    let m = modulus(ring)?;
    let size = mode.search_size(m, rank);
    if size > limit {
        return Err(Error::LimitExceeded { size, limit });
    }
    Ok(m)
}

// ----- rank 3 word-size tables -----

/// Products `ii, ij, ji, jj` of a rank-3 table with unit `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct T3 {
    m: u32,
    p: [[u32; 3]; 4],
}

impl T3 {
    #[inline]
    fn prod(&self, a: usize, b: usize) -> [u32; 3] {
        self.p[(a - 1) * 2 + (b - 1)]
    }

    #[inline]
    fn mul(&self, x: [u32; 3], y: [u32; 3]) -> [u32; 3] {
        let m = self.m as u64;
        let (x0, y0) = (x[0] as u64, y[0] as u64);
        let mut out = [x0 * y0, x0 * y[1] as u64 + x[1] as u64 * y0, x0 * y[2] as u64 + x[2] as u64 * y0];
        for a in 1..3 {
            if x[a] == 0 {
                continue;
            }
            for b in 1..3 {
                let s = (x[a] as u64 * y[b] as u64) % m;
                if s == 0 {
                    continue;
                }
                let p = self.prod(a, b);
                for k in 0..3 {
                    out[k] += s * p[k] as u64;
                }
            }
        }
        out.map(|v| (v % m) as u32)
    }

    fn basis(a: usize) -> [u32; 3] {
        let mut e = [0; 3];
        e[a] = 1;
        e
    }

    #[inline]
    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        self.mul(self.prod(a, b), Self::basis(c)) == self.mul(Self::basis(a), self.prod(b, c))
    }

    fn is_associative(&self) -> bool {
        (1..3).all(|a| (1..3).all(|b| (1..3).all(|c| self.triple_ok(a, b, c))))
    }

    fn has_involution(&self) -> bool {
        let (ii, jj) = (self.prod(1, 1), self.prod(2, 2));
        if ii[2] != 0 || jj[1] != 0 {
            return false;
        }
        let m = self.m as u64;
        let t = (ii[1] + jj[2]) as u64;
        let (ij, ji) = (self.prod(1, 2), self.prod(2, 1));
        // (i + j)^2 - (t_i + t_j)(i + j) must be a scalar
        (1..3).all(|k| {
            let s = ii[k] as u64 + jj[k] as u64 + ij[k] as u64 + ji[k] as u64 + (m - t % m) % m;
            s.is_multiple_of(m)
        })
    }

    fn key(&self) -> u128 {
        let m = self.m as u128;
        self.p.iter().flatten().fold(0u128, |acc, &v| acc * m + v as u128)
    }

    fn to_finite(self) -> FiniteTable {
        let mut c = vec![0u32; 27];
        for j in 0..3 {
            c[j * 3 + j] = 1; // e_0 e_j
            c[(j * 3) * 3 + j] = 1; // e_j e_0
        }
        for a in 1..3 {
            for b in 1..3 {
                let base = (a * 3 + b) * 3;
                c[base..base + 3].copy_from_slice(&self.prod(a, b));
            }
        }
        FiniteTable::new(self.m, 3, c)
    }

    fn from_finite(ft: &FiniteTable) -> Self {
        let mut p = [[0u32; 3]; 4];
        for a in 1..3 {
            for b in 1..3 {
                for k in 0..3 {
                    p[(a - 1) * 2 + (b - 1)][k] = ft.coeff(a, b, k);
                }
            }
        }
        T3 { m: ft.m, p }
    }
}

fn triples(m: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity((m * m * m) as usize);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn neg(m: u32, x: u64) -> u32 {
    ((m as u64 - x % m as u64) % m as u64) as u32
}

/// Number of tables enumerated and number found associative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationCounts {
    pub enumerated: u128,
    pub associative: u64,
}

fn enumerate_rank3(m: u32, mode: CensusMode, mut f: impl FnMut(&T3)) -> EnumerationCounts {
    let mut counts = EnumerationCounts::default();
    match mode {
        CensusMode::Full => {
            let vs = triples(m);
            let mut t = T3 { m, p: [[0; 3]; 4] };
            for ii in &vs {
                t.p[0] = *ii;
                for jj in &vs {
                    t.p[3] = *jj;
                    for ij in &vs {
                        t.p[1] = *ij;
                        t.p[2] = [0; 3];
                        counts.enumerated += vs.len() as u128;
                        // (ii)j = i(ij) and (ij)j = i(jj) do not involve ji
                        if !(t.triple_ok(1, 1, 2) && t.triple_ok(1, 2, 2)) {
                            continue;
                        }
                        for ji in &vs {
                            t.p[2] = *ji;
                            if t.is_associative() {
                                counts.associative += 1;
                                f(&t);
                            }
                        }
                    }
                }
            }
        }
        CensusMode::Normalized => {
            let mm = m as u64;
            for q in 0..(m as u64).pow(7) {
                let mut r = q;
                let mut digit = || {
                    let d = r % mm;
                    r /= mm;
                    d
                };
                let (a, b, c, d, rr, s, tt) = (digit(), digit(), digit(), digit(), digit(), digit(), digit());
                let t = T3 {
                    m,
                    p: [
                        [neg(m, a * c), b as u32, neg(m, a)],
                        [neg(m, a * d), 0, 0],
                        [rr as u32, s as u32, tt as u32],
                        [neg(m, b * d), d as u32, neg(m, c)],
                    ],
                };
                counts.enumerated += 1;
                let assoc = t.is_associative();
                if assoc {
                    counts.associative += 1;
                    f(&t);
                }
            }
        }
    }
    counts
}

/// Calls `f` on every associative table of the census search space.
pub fn for_each_associative(
    ring: &BaseRing,
    rank: usize,
    mode: CensusMode,
    limit: u128,
    mut f: impl FnMut(&FiniteTable),
) -> Result<EnumerationCounts> {
    let m = check_request(ring, rank, mode, limit)?;
    match rank {
        2 => {
            let mut counts = EnumerationCounts::default();
            for n0 in 0..m {
                for n1 in 0..m {
                    counts.enumerated += 1;
                    let ft = t2_finite(m, [n0, n1]);
                    if ft.is_associative() {
                        counts.associative += 1;
                        f(&ft);
                    }
                }
            }
            Ok(counts)
        }
        _ => Ok(enumerate_rank3(m, mode, |t| f(&t.to_finite()))),
    }
}

/// Whether the table has a standard involution, by the basis and pair tests.
pub fn has_involution_fast(ft: &FiniteTable) -> bool {
    let (n, m) = (ft.n, ft.m as u64);
    let sq = |i: usize| -> Vec<u64> { (0..n).map(|k| ft.coeff(i, i, k) as u64).collect() };
    for i in 1..n {
        if (1..n).any(|k| k != i && ft.coeff(i, i, k) != 0) {
            return false;
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            let t = (ft.coeff(i, i, i) + ft.coeff(j, j, j)) as u64 % m;
            let (si, sj) = (sq(i), sq(j));
            for k in 1..n {
                let mut s = si[k] + sj[k] + ft.coeff(i, j, k) as u64 + ft.coeff(j, i, k) as u64;
                if k == i || k == j {
                    s += m - t;
                }
                if !s.is_multiple_of(m) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn finite_to_algebra(ring: &BaseRing, ft: &FiniteTable) -> Result<StructureAlgebra> {
    let n = ft.n;
    let table = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| RingElem::Res(ft.coeff(i, j, k) as u64)).collect()).collect())
        .collect();
    StructureAlgebra::from_table(ring, table)
}

// ----- rank 2 -----

fn t2_finite(m: u32, sq: [u32; 2]) -> FiniteTable {
    FiniteTable::new(m, 2, vec![1, 0, 0, 1, 0, 1, sq[0], sq[1]])
}

/// `x' = r + αx` applied to `x^2 = n0 + n1 x`.
fn t2_transport(m: u32, sq: [u32; 2], alpha: u32, alpha_inv: u32, r: u32) -> [u32; 2] {
    let m64 = m as u64;
    let (a, ai, r) = (alpha as u64, alpha_inv as u64, r as u64);
    let (n0, n1) = (sq[0] as u64, sq[1] as u64);
    // x'^2 = (r^2 + α^2 n0) + (2rα + α^2 n1) x, and x = α^{-1}(x' - r)
    let c0 = (r * r + a * a % m64 * n0) % m64;
    let c1 = (2 * r * a + a * a % m64 * n1) % m64;
    let d1 = c1 * ai % m64;
    let d0 = (c0 + m64 - d1 * r % m64) % m64;
    [d0 as u32, d1 as u32]
}

/// Pairs `(α, α^{-1})` of units of ℤ/m.
fn units(m: u32) -> Vec<(u32, u32)> {
    (1..m).filter_map(|a| (1..m).find(|&b| (a as u64 * b as u64) % m as u64 == 1).map(|b| (a, b))).collect()
}

// ----- grouping -----

/// Affine basis change `i' = a1 + A00 i + A01 j`, `j' = a2 + A10 i + A11 j`.
#[derive(Clone, Copy, Debug)]
struct Affine {
    a: [u32; 2],
    g: [[u32; 2]; 2],
    g_inv: [[u32; 2]; 2],
}

fn gl2(m: u32) -> Vec<([[u32; 2]; 2], [[u32; 2]; 2])> {
    let mm = m as u64;
    let inv_of: HashMap<u32, u32> = units(m).into_iter().collect();
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let det = ((a as u64 * d as u64) % mm + mm - (b as u64 * c as u64) % mm) % mm;
                    if let Some(&di) = inv_of.get(&(det as u32)) {
                        let di = di as u64;
                        let g_inv = [
                            [(d as u64 * di % mm) as u32, neg(m, b as u64 * di)],
                            [neg(m, c as u64 * di), (a as u64 * di % mm) as u32],
                        ];
                        out.push(([[a, b], [c, d]], g_inv));
                    }
                }
            }
        }
    }
    out
}

fn affine_group(m: u32) -> Vec<Affine> {
    let gl = gl2(m);
    let mut out = Vec::with_capacity(gl.len() * (m * m) as usize);
    for a1 in 0..m {
        for a2 in 0..m {
            for &(g, g_inv) in &gl {
                out.push(Affine { a: [a1, a2], g, g_inv });
            }
        }
    }
    out
}

fn transport3(t: &T3, h: &Affine) -> T3 {
    let m = t.m as u64;
    let bi = [h.a[0], h.g[0][0], h.g[0][1]];
    let bj = [h.a[1], h.g[1][0], h.g[1][1]];
    let coords = |v: [u32; 3]| -> [u32; 3] {
        let (v1, v2) = (v[1] as u64, v[2] as u64);
        let w1 = (v1 * h.g_inv[0][0] as u64 + v2 * h.g_inv[1][0] as u64) % m;
        let w2 = (v1 * h.g_inv[0][1] as u64 + v2 * h.g_inv[1][1] as u64) % m;
        let w0 = (v[0] as u64 + 2 * m * m - w1 * h.a[0] as u64 % m - w2 * h.a[1] as u64 % m) % m;
        [w0 as u32, w1 as u32, w2 as u32]
    };
    let nb = [bi, bj];
    let mut p = [[0u32; 3]; 4];
    for a in 0..2 {
        for b in 0..2 {
            p[a * 2 + b] = coords(t.mul(nb[a], nb[b]));
        }
    }
    T3 { m: t.m, p }
}

/// Orbit labels of `keys` under all basis changes fixing 1, computed by
/// applying every group element to one member of each new orbit.
fn brute_force_orbits3(tables: &[T3]) -> Vec<usize> {
    let Some(first) = tables.first() else { return Vec::new() };
    let group = affine_group(first.m);
    let index: HashMap<u128, usize> = tables.iter().enumerate().map(|(i, t)| (t.key(), i)).collect();
    let mut label = vec![usize::MAX; tables.len()];
    let mut next = 0;
    for i in 0..tables.len() {
        if label[i] != usize::MAX {
            continue;
        }
        for h in &group {
            if let Some(&j) = index.get(&transport3(&tables[i], h).key()) {
                label[j] = next;
            }
        }
        next += 1;
    }
    label
}

/// Whether two labelings induce the same partition.
fn same_partition(a: &[usize], b: &[usize]) -> bool {
    let mut ab: HashMap<usize, usize> = HashMap::new();
    let mut ba: HashMap<usize, usize> = HashMap::new();
    a.iter().zip(b).all(|(&x, &y)| *ab.entry(x).or_insert(y) == y && *ba.entry(y).or_insert(x) == x)
}

/// Label of an isomorphism class in a census.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassLabel {
    Orbit(OrbitInvariant),
    /// Rank 2: the first table of the class, `x^2 = n0 + n1 x`.
    Quadratic { n0: u32, n1: u32 },
}

#[derive(Clone, Debug)]
pub struct CensusClass {
    pub label: ClassLabel,
    /// Tables of the census in this class.
    pub count: u64,
    pub representative: StructureAlgebra,
    pub exceptional: bool,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub ring: BaseRing,
    pub rank: usize,
    pub mode: CensusMode,
    pub counts: EnumerationCounts,
    pub with_involution: u64,
    pub classes: Vec<CensusClass>,
    pub brute_force_classes: usize,
    /// The two groupings induce the same partition.
    pub agree: bool,
}

impl CensusReport {
    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                let invariant = match &c.label {
                    ClassLabel::Orbit(o) => o.to_json(&self.ring),
                    ClassLabel::Quadratic { n0, n1 } => json!({"kind": "quadratic", "n0": n0, "n1": n1}),
                };
                json!({
                    "invariant": invariant,
                    "count": c.count,
                    "exceptional": c.exceptional,
                    "representative": c.representative.to_json(),
                })
            })
            .collect();
        json!({
            "ring": self.ring,
            "rank": self.rank,
            "mode": self.mode.name(),
            "enumerated": self.counts.enumerated.to_string(),
            "associative": self.counts.associative,
            "with_involution": self.with_involution,
            "classes": classes,
            "brute_force_classes": self.brute_force_classes,
            "agree": self.agree,
        })
    }
}

/// Runs the census. Involution classes are grouped twice and the groupings
/// compared; a disagreement is reported through `agree`, while a rank-3
/// involution table that fails to normalize is an error.
pub fn census(ring: &BaseRing, rank: usize, mode: CensusMode, limit: u128) -> Result<CensusReport> {
    if rank == 2 && mode == CensusMode::Normalized {
        return Err(Error::Unsupported("the normalized census is defined for rank 3 only".into()));
    }
    let m = check_request(ring, rank, mode, limit)?;
    match rank {
        2 => census2(ring, m),
        _ => census3(ring, m, mode),
    }
}

fn census3(ring: &BaseRing, m: u32, mode: CensusMode) -> Result<CensusReport> {
    let mut inv_tables = Vec::new();
    let counts = enumerate_rank3(m, mode, |t| {
        if t.has_involution() {
            inv_tables.push(*t);
        }
    });
    let mut reps: BTreeMap<OrbitInvariant, (usize, StructureAlgebra, GoodBasisForm, u64)> = BTreeMap::new();
    let mut inv_labels = Vec::with_capacity(inv_tables.len());
    for t in &inv_tables {
        let alg = finite_to_algebra(ring, &t.to_finite())?;
        let form = normalize_rank3(&alg)?;
        let inv = orbit_invariant(ring, &form.u, &form.v);
        let next_id = reps.len();
        let entry = reps.entry(inv.clone()).or_insert_with(|| (next_id, alg.clone(), form.clone(), 0));
        if iso_from_forms(&entry.1, &entry.2, &alg, &form).is_none() {
            return Err(Error::Internal(format!("equal orbit invariants {inv} but no isomorphism found")));
        }
        entry.3 += 1;
        inv_labels.push(entry.0);
    }
    let brute = brute_force_orbits3(&inv_tables);
    let brute_force_classes = brute.iter().copied().max().map_or(0, |x| x + 1);
    let agree = same_partition(&inv_labels, &brute);
    let classes = reps
        .into_iter()
        .map(|(inv, (_, alg, _, count))| CensusClass {
            label: ClassLabel::Orbit(inv),
            count,
            exceptional: recognize_exceptional(&alg).is_some(),
            representative: alg,
        })
        .collect();
    Ok(CensusReport {
        ring: ring.clone(),
        rank: 3,
        mode,
        counts,
        with_involution: inv_tables.len() as u64,
        classes,
        brute_force_classes,
        agree,
    })
}

fn census2(ring: &BaseRing, m: u32) -> Result<CensusReport> {
    let mut tables: Vec<[u32; 2]> = Vec::new();
    let counts = for_each_associative(ring, 2, CensusMode::Full, u128::MAX, |ft| {
        if has_involution_fast(ft) {
            tables.push([ft.coeff(1, 1, 0), ft.coeff(1, 1, 1)]);
        }
    })?;
    let us = units(m);
    let affine: Vec<(u32, u32, u32)> = us.iter().flat_map(|&(a, ai)| (0..m).map(move |r| (a, ai, r))).collect();
    // grouping 1: orbit closure
    let index: HashMap<[u32; 2], usize> = tables.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let mut orbit = vec![usize::MAX; tables.len()];
    let mut next = 0;
    for i in 0..tables.len() {
        if orbit[i] != usize::MAX {
            continue;
        }
        for &(a, ai, r) in &affine {
            if let Some(&j) = index.get(&t2_transport(m, tables[i], a, ai, r)) {
                orbit[j] = next;
            }
        }
        next += 1;
    }
    // grouping 2: compare each table against the representatives found so far
    let mut reps: Vec<[u32; 2]> = Vec::new();
    let mut counts_by_rep: Vec<u64> = Vec::new();
    let mut pairwise = Vec::with_capacity(tables.len());
    for t in &tables {
        let found = reps.iter().position(|rep| affine.iter().any(|&(a, ai, r)| t2_transport(m, *rep, a, ai, r) == *t));
        let id = found.unwrap_or_else(|| {
            reps.push(*t);
            counts_by_rep.push(0);
            reps.len() - 1
        });
        counts_by_rep[id] += 1;
        pairwise.push(id);
    }
    let agree = same_partition(&orbit, &pairwise);
    let mut classes = Vec::new();
    for (rep, count) in reps.iter().zip(counts_by_rep) {
        let alg = finite_to_algebra(ring, &t2_finite(m, *rep))?;
        classes.push(CensusClass {
            label: ClassLabel::Quadratic { n0: rep[0], n1: rep[1] },
            count,
            exceptional: recognize_exceptional(&alg).is_some(),
            representative: alg,
        });
    }
    Ok(CensusReport {
        ring: ring.clone(),
        rank: 2,
        mode: CensusMode::Full,
        counts,
        with_involution: tables.len() as u64,
        classes,
        brute_force_classes: next,
        agree,
    })
}

/// Size of `GL_2(ℤ/m)`, exposed for tests.
pub fn gl2_order(m: u32) -> usize {
    gl2(m).len()
}

/// Involution test on a rank-3 table through the word-size path.
pub fn rank3_has_involution_fast(ft: &FiniteTable) -> bool {
    T3::from_finite(ft).has_involution()
}

//! The analysis report produced by `lowrank analyze`.

use std::time::Instant;

use lowrank::degree::{algebra_degree, geometric_degree, sample_degree_check};
use lowrank::exceptional::recognize_exceptional;
use lowrank::involution::{check_uniqueness, find_standard_involution, theorem_a_from_parts};
use lowrank::rank3::{jacobson_element, normalize_rank3, orbit_invariant, right_regular_embedding};
use lowrank::ring::linalg::Matrix;
use lowrank::{BaseRing, Result, StructureAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    /// Random elements used to confirm a degree over an infinite ring.
    pub samples: usize,
    pub timing: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { seed: crate::DEFAULT_SEED, samples: 200, timing: false }
    }
}

fn absent(reason: &str) -> Value {
    json!({"available": false, "reason": reason})
}

fn elems(ring: &BaseRing, v: &[lowrank::RingElem]) -> Value {
    Value::Array(v.iter().map(|e| ring.elem_to_json(e)).collect())
}

fn matrix(ring: &BaseRing, m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| elems(ring, r)).collect())
}

/// Runs every analysis on `alg`. The result depends only on the algebra and
/// the options, apart from the `timing_ms` block when requested.
pub fn analyze(alg: &StructureAlgebra, opts: &AnalyzeOptions) -> Result<Value> {
    let start = Instant::now();
    let mut timing = serde_json::Map::new();
    let mut lap = |name: &str, since: &mut Instant| {
        timing.insert(name.to_string(), json!(since.elapsed().as_millis() as u64));
        *since = Instant::now();
    };
    let mut t = Instant::now();
    let ring = alg.ring();
    let n = alg.rank();

    let gdeg = geometric_degree(alg);
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    lap("gdeg", &mut t);

    let degree = algebra_degree(alg);
    let degree_block = match &degree {
        Ok(d) => {
            let sampling = if ring.is_finite() {
                Value::Null
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                let check = sample_degree_check(alg, d.degree, opts.samples, &mut rng);
                json!({"seed": opts.seed, "samples": check.samples, "max_seen": check.max_seen, "agrees": check.agrees()})
            };
            json!({"value": d.degree, "method": d.method.tag(), "sampling": sampling})
        }
        Err(e) => json!({"value": null, "method": "unavailable", "reason": e.to_string()}),
    };
    lap("degree", &mut t);

    let involution = find_standard_involution(alg);
    let involution_block = match &involution {
        Ok(inv) => json!({
            "present": true,
            "trivial": inv.is_trivial(alg),
            "unique": check_uniqueness(alg),
            "trd": inv.to_json(ring)["trd"].clone(),
            "nrd": elems(ring, &(0..n).map(|i| inv.reduced_norm(alg, &alg.basis_element(i))).collect::<Vec<_>>()),
            "conjugation": matrix(ring, &inv.conjugation_matrix(alg)),
        }),
        Err(o) => json!({"present": false, "obstruction": o.to_json()}),
    };
    let theorem_a = theorem_a_from_parts(alg, degree.as_ref().ok().map(|d| d.degree == 2), gdeg.degree == 2, involution.is_ok());
    lap("involution", &mut t);

    let exceptional_block = if involution.is_err() {
        absent("no-involution")
    } else {
        match recognize_exceptional(alg) {
            Some(data) => {
                let mut v = data.to_json(ring);
                v["available"] = json!(true);
                v
            }
            None => absent("no-splitting"),
        }
    };
    lap("exceptional", &mut t);

    let rank3_block = if n != 3 {
        absent("rank-not-3")
    } else if involution.is_err() {
        absent("no-involution")
    } else {
        let form = normalize_rank3(alg)?;
        let k = jacobson_element(&form);
        let emb = right_regular_embedding(&form);
        let orbit = orbit_invariant(ring, &form.u, &form.v);
        json!({
            "available": true,
            "good_basis": matrix(ring, &form.basis_change),
            "u": ring.elem_to_json(&form.u),
            "v": ring.elem_to_json(&form.v),
            "orbit_invariant": orbit.to_json(ring),
            "orbit_description": orbit.describe(ring),
            "jacobson_element": elems(ring, &k.0),
            "embedding": {
                "i_matrix": matrix(ring, &emb.i_matrix),
                "j_matrix": matrix(ring, &emb.j_matrix),
                "injective": emb.injective,
                "flag_line": emb.flag_line.map(|k| elems(ring, &k.0)),
            },
        })
    };
    lap("rank3", &mut t);

    let mut report = json!({
        "ring": ring,
        "ring_name": ring.to_string(),
        "rank": n,
        "validity": {"valid": true},
        "is_commutative": alg.is_commutative(),
        "degree": degree_block,
        "gdeg": {"value": gdeg.degree, "relation": gdeg.format_relation(ring, &names), "unique": gdeg.unique},
        "involution": involution_block,
        "theorem_a": theorem_a.to_json(ring),
        "exceptional": exceptional_block,
        "rank3": rank3_block,
        "input": alg.to_json(),
    });
    if opts.timing {
        timing.insert("total".into(), json!(start.elapsed().as_millis() as u64));
        report["timing_ms"] = Value::Object(timing);
    }
    Ok(report)
}

/// A short human-readable rendering of a report.
pub fn render(report: &Value) -> String {
    let mut out = Vec::new();
    let flag = |b: &Value| if b.as_bool() == Some(true) { "yes" } else { "no" };
    out.push(format!("ring: {}   rank: {}", compact(&report["ring_name"]), report["rank"]));
    out.push(format!("commutative: {}", flag(&report["is_commutative"])));
    let d = &report["degree"];
    match d["value"].as_u64() {
        Some(v) => out.push(format!("degree: {v} ({})", d["method"].as_str().unwrap_or(""))),
        None => out.push(format!("degree: unavailable ({})", d["reason"].as_str().unwrap_or(""))),
    }
    if let Some(s) = d.get("sampling").filter(|s| !s.is_null()) {
        out.push(format!("  sampled {} elements, largest degree seen {}", s["samples"], s["max_seen"]));
    }
    out.push(format!("geometric degree: {}   {}", report["gdeg"]["value"], report["gdeg"]["relation"].as_str().unwrap_or("")));
    let inv = &report["involution"];
    if inv["present"].as_bool() == Some(true) {
        out.push(format!("standard involution: yes, trd = {}, trivial: {}", compact(&inv["trd"]), flag(&inv["trivial"])));
    } else {
        out.push(format!("standard involution: no ({})", compact(&inv["obstruction"])));
    }
    let a = &report["theorem_a"];
    out.push(format!("deg 2 / gdeg 2 / involution criteria consistent: {}", flag(&a["consistent"])));
    let e = &report["exceptional"];
    match e["available"].as_bool() {
        Some(true) => out.push(format!("exceptional: yes, t = {}", compact(&e["t"]))),
        _ => out.push(format!("exceptional: no ({})", e["reason"].as_str().unwrap_or(""))),
    }
    let r = &report["rank3"];
    if r["available"].as_bool() == Some(true) {
        out.push(format!(
            "good basis: (u, v) = ({}, {}), orbit {}, k = {}, embedding injective: {}",
            compact(&r["u"]),
            compact(&r["v"]),
            compact(&r["orbit_description"]),
            compact(&r["jacobson_element"]),
            flag(&r["embedding"]["injective"])
        ));
    }
    if let Some(t) = report.get("timing_ms") {
        out.push(format!("timing (ms): {}", compact(t)));
    }
    out.join("\n")
}

/// Strings without quotes and arrays as `[a, b]`.
fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(compact).collect::<Vec<_>>().join(", ")),
        _ => v.to_string(),
    }
}

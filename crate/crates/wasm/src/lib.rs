//! Browser bindings. Each export takes code descriptions in the TOML code
//! format and returns a JSON string.

use cyclic_bounds::bounds::{self, BoundResult, SearchOptions, Variant};
use cyclic_bounds::decoder::{DecodeStatus, Decoder};
use cyclic_bounds::distance::DistanceOracle;
use cyclic_bounds::files::CodeSpecFile;
use cyclic_bounds::product::{self, ProductCode};
use cyclic_bounds::CyclicCode;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps the page responsive; larger codes report `d: null`.
const DEMO_BUDGET: u64 = 1 << 18;

fn parse_code(text: &str) -> Result<CyclicCode, String> {
    let spec = CodeSpecFile::parse(text).map_err(|e| e.to_string())?;
    spec.to_code().map_err(|e| e.to_string())
}

fn certificate_json(r: &BoundResult) -> Value {
    json!({ "value": r.value, "certificate": r.certificate })
}

pub fn analyze_json(code: &str, associate: &str) -> Result<Value, String> {
    let a = parse_code(code)?;
    let oracle = DistanceOracle::new(DEMO_BUDGET);
    let mut out = json!({
        "n": a.length(),
        "k": a.dimension(),
        "defining_set": a.defining_set().to_vec(),
        "d": oracle.min_distance(&a).ok(),
        "bch": certificate_json(&bounds::bch_bound(a.defining_set())),
        "ht": certificate_json(&bounds::ht_bound(a.defining_set())),
    });
    if !associate.trim().is_empty() {
        let b = parse_code(associate)?;
        let d_b = oracle.min_distance(&b).map_err(|e| e.to_string())?;
        for v in [Variant::Gen1, Variant::Gen2] {
            let r = bounds::generalized_bound(&a, &b, d_b, v, &SearchOptions::default()).map_err(|e| e.to_string())?;
            out[v.name()] = certificate_json(&r);
        }
    }
    Ok(out)
}

pub fn product_json(code_a: &str, code_b: &str, f1: i64, f2: i64, m1: i64, m2: i64) -> Result<Value, String> {
    let a = parse_code(code_a)?;
    let b = parse_code(code_b)?;
    let p = ProductCode::new(&a, &b).map_err(|e| e.to_string())?;
    let (f, m) = product::crt_parameters(f1, f2, m1, m2, a.length(), b.length()).map_err(|e| e.to_string())?;
    let n = p.code().length();
    // the exponent progression f + i m, until it first leaves D_C
    let mut run = Vec::new();
    for i in 0..n {
        let x = (f + i * m) % n;
        if !p.defining_set().contains(x) {
            break;
        }
        run.push(x);
    }
    Ok(json!({
        "n": n,
        "k": p.code().dimension(),
        "n_a": a.length(),
        "n_b": b.length(),
        "bezout": [p.bezout().0, p.bezout().1],
        "defining_set": p.defining_set().to_vec(),
        "generator": p.generator().to_indices(p.defining_set().len() + 1),
        "f": f,
        "m": m,
        "run": run,
    }))
}

pub fn decode_json(code: &str, associate: &str, received: &str) -> Result<Value, String> {
    let a = parse_code(code)?;
    let b = parse_code(associate)?;
    let d_b = DistanceOracle::new(DEMO_BUDGET)
        .min_distance(&b)
        .map_err(|e| e.to_string())?;
    let best =
        bounds::generalized_bound(&a, &b, d_b, Variant::Gen1, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let cert = best.certificate.ok_or("the GEN1 bound is trivial for this pair")?;
    let dec = Decoder::new(&a, &b, &cert).map_err(|e| e.to_string())?;
    let symbols: Vec<u64> = received
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| format!("bad symbol {s:?}")))
        .collect::<Result<_, _>>()?;
    let r = a.word(&symbols).map_err(|e| e.to_string())?;
    let res = dec.decode(&r);
    let trials: Vec<Value> = res
        .trials
        .iter()
        .map(|t| json!({ "t": t.t, "rank": t.rank, "rejection": t.rejection }))
        .collect();
    Ok(json!({
        "certificate": cert,
        "radius": dec.radius(),
        "status": match res.status {
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::Failure => "failure",
        },
        "positions": res.positions,
        "values": res.values,
        "corrected": res.corrected,
        "reason": res.failure.map(|e| e.to_string()),
        "trials": trials,
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// Distance, BCH/HT and, if `associate` is non-empty, GEN1/GEN2 bounds.
#[wasm_bindgen]
pub fn analyze(code: &str, associate: &str) -> Result<String, JsError> {
    to_js(analyze_json(code, associate))
}

/// Product defining set and the exponent map of `(f1, f2, m1, m2)`.
#[wasm_bindgen]
pub fn product(code_a: &str, code_b: &str, f1: i32, f2: i32, m1: i32, m2: i32) -> Result<String, JsError> {
    to_js(product_json(code_a, code_b, f1.into(), f2.into(), m1.into(), m2.into()))
}

/// Decodes with the best GEN1 certificate for the pair.
#[wasm_bindgen]
pub fn decode(code: &str, associate: &str, received: &str) -> Result<String, JsError> {
    to_js(decode_json(code, associate, received))
}

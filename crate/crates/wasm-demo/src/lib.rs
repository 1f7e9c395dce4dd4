//! Browser bindings: staircase analysis, closure trace and an `r(I_p)` heatmap.
//!
//! Each export returns a JSON string; errors become a thrown JS string. The
//! `*_json` functions are the same operations without the JS boundary.

use monored::{
    classify, closure, closure_3gen, default_cap, minimal_monomial_reduction, parse_ideal,
    reduction_number, three_gen_reduction_number, FramedIdeal, Monomial, MonomialIdeal, Step,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest frame side accepted by [`heatmap_json`].
pub const HEATMAP_LIMIT: u64 = 40;

#[derive(Serialize)]
struct Staircase {
    generators: MonomialIdeal,
    reduction: MonomialIdeal,
    a: u64,
    b: u64,
    in_frame: bool,
    quasi_equigenerated: bool,
    /// Absent unless `(x^a, y^b)` is the reduction.
    r: Option<u64>,
}

#[derive(Serialize)]
struct Closure {
    a: u64,
    b: u64,
    generators: MonomialIdeal,
    closure: MonomialIdeal,
    added: Vec<Monomial>,
    k: Option<u64>,
    steps: Vec<Step>,
}

#[derive(Serialize)]
struct Heatmap {
    a: u64,
    b: u64,
    /// `[c, d, r]` for every `(c, d)` in `D_{a,b}`.
    cells: Vec<[u64; 3]>,
    max: u64,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn staircase_json(ideal: &str) -> Result<String, String> {
    let ideal = parse_ideal(ideal).map_err(|e| e.to_string())?;
    let c = classify(&ideal).map_err(|e| e.to_string())?;
    let reduction = minimal_monomial_reduction(&ideal).map_err(|e| e.to_string())?;
    let r = if c.in_frame {
        let f = FramedIdeal::new(ideal.clone()).map_err(|e| e.to_string())?;
        Some(
            reduction_number(&f, default_cap(c.a, c.b))
                .map_err(|e| e.to_string())?
                .r,
        )
    } else {
        None
    };
    to_json(&Staircase {
        generators: ideal,
        reduction,
        a: c.a,
        b: c.b,
        in_frame: c.in_frame,
        quasi_equigenerated: c.quasi_equigenerated,
        r,
    })
}

pub fn closure_json(ideal: &str) -> Result<String, String> {
    let ideal = parse_ideal(ideal).map_err(|e| e.to_string())?;
    let f = FramedIdeal::new(ideal).map_err(|e| e.to_string())?;
    let (l, mut trace) = closure(&f).map_err(|e| e.to_string())?;
    let inner: Vec<Monomial> = f
        .generators()
        .iter()
        .filter(|m| m.x < f.a() && m.y < f.b())
        .copied()
        .collect();
    if let [p] = inner[..] {
        let (_, t) = closure_3gen(f.a(), f.b(), &p).map_err(|e| e.to_string())?;
        trace = t;
    }
    to_json(&Closure {
        a: f.a(),
        b: f.b(),
        generators: f.ideal().clone(),
        closure: l.ideal().clone(),
        added: trace.added,
        k: trace.k,
        steps: trace.steps,
    })
}

pub fn heatmap_json(a: u64, b: u64) -> Result<String, String> {
    if !(2..=HEATMAP_LIMIT).contains(&a) || !(2..=HEATMAP_LIMIT).contains(&b) {
        return Err(format!("a and b must lie in [2, {HEATMAP_LIMIT}]"));
    }
    let mut cells = Vec::new();
    for p in monored::reduction::d_points(a, b) {
        let r = three_gen_reduction_number(a, b, &p).map_err(|e| e.to_string())?;
        cells.push([p.x, p.y, r]);
    }
    let max = cells.iter().map(|c| c[2]).max().unwrap_or(0);
    to_json(&Heatmap { a, b, cells, max })
}

#[wasm_bindgen]
pub fn staircase(ideal: &str) -> Result<String, JsValue> {
    staircase_json(ideal).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = closureTrace)]
pub fn closure_trace(ideal: &str) -> Result<String, JsValue> {
    closure_json(ideal).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn heatmap(a: u32, b: u32) -> Result<String, JsValue> {
    heatmap_json(a.into(), b.into()).map_err(|e| JsValue::from_str(&e))
}

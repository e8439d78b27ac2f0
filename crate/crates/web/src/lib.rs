//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string; errors surface as thrown JS errors.

use serde_json::json;
use wasm_bindgen::prelude::*;

use superschur::commutant::double_centralizer_report;
use superschur::json::{grassmann_to_json, supermatrix_from_json, supermatrix_to_wire};
use superschur::tableaux::{dimension_table, enumerate_ssyt, weighted_total};

/// Largest tensor space the page will build operator algebras on.
const WEB_CAP: usize = 64;

pub fn tableaux_json(m: usize, n: usize, r: usize) -> Result<String, String> {
    if m + n == 0 {
        return Err("need m + n ≥ 1".into());
    }
    let table = dimension_table(m, n, r).map_err(|e| e.to_string())?;
    let rows: Vec<_> = table
        .iter()
        .map(|row| {
            let fillings: Vec<String> =
                enumerate_ssyt(&row.shape, m, n).iter().take(24).map(|f| f.to_string()).collect();
            json!({
                "shape": row.shape,
                "syt": row.syt,
                "ssyt": row.ssyt,
                "admissible": row.admissible,
                "fillings": fillings,
            })
        })
        .collect();
    let expected = (m as u64 + n as u64).pow(r as u32);
    Ok(json!({"rows": rows, "total": weighted_total(&table), "expected": expected}).to_string())
}

pub fn supermatrix_json(text: &str) -> Result<String, String> {
    let g = supermatrix_from_json(text).map_err(|e| e.to_string())?.into_grassmann();
    let ber = g.berezinian().map_err(|e| e.to_string())?;
    let f = g.ldu_factor().map_err(|e| e.to_string())?;
    let verified = f.product().map(|p| p == g).unwrap_or(false);
    let ber_json: serde_json::Value = serde_json::from_str(&grassmann_to_json(&ber)).expect("valid json");
    let str_json: serde_json::Value = serde_json::from_str(&grassmann_to_json(&g.supertrace())).expect("valid json");
    Ok(json!({
        "berezinian": ber_json,
        "berezinian_text": ber.to_string(),
        "supertrace": str_json,
        "supertrace_text": g.supertrace().to_string(),
        "upper": supermatrix_to_wire(&f.upper),
        "blockdiag": supermatrix_to_wire(&f.blockdiag),
        "lower": supermatrix_to_wire(&f.lower),
        "verified": verified,
    })
    .to_string())
}

pub fn schur_weyl_json(m: usize, n: usize, r: usize) -> Result<String, String> {
    let report = double_centralizer_report(m, n, r, WEB_CAP).map_err(|e| e.to_string())?;
    serde_json::to_string(&json!({"report": report, "passed": report.passed()})).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn tableaux(m: usize, n: usize, r: usize) -> Result<String, JsError> {
    tableaux_json(m, n, r).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn supermatrix(text: &str) -> Result<String, JsError> {
    supermatrix_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn schur_weyl(m: usize, n: usize, r: usize) -> Result<String, JsError> {
    schur_weyl_json(m, n, r).map_err(|e| JsError::new(&e))
}

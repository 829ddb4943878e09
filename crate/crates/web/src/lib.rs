//! Browser bindings for the planar crossing demo. The functions mirror
//! [`demo`] and return JSON text; errors become JavaScript exceptions.

pub mod demo;

use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn intersect(spec_json: &str, iterations: u32) -> Result<String, JsError> {
    demo::intersect(spec_json, iterations).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn parity(
    spec_json: &str,
    i_lo: &str,
    i_hi: &str,
    j_lo: &str,
    j_hi: &str,
) -> Result<String, JsError> {
    demo::parity(spec_json, i_lo, i_hi, j_lo, j_hi).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn approximation(spec_json: &str, n: u32) -> Result<String, JsError> {
    demo::approximation(spec_json, n).map_err(|e| JsError::new(&e))
}

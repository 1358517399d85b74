//! WebAssembly bindings behind `www/index.html`.
//!
//! Each exported function takes plain numbers and slices and returns a JSON
//! string; the page parses it and draws. The work is done by the functions in
//! [`views`], which are ordinary Rust and tested natively.

use wasm_bindgen::prelude::*;

pub mod views;

use views::ToJson;

fn js_err(e: lospa_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// LOSPA and OSPA of the three built-in estimates against `[-10, 0, 10]`.
#[wasm_bindgen]
pub fn table(p: f64, alpha: f64) -> Result<String, JsError> {
    views::table(p, alpha).map(|v| v.to_json()).map_err(js_err)
}

/// Distance between two stacked state vectors of `nx`-dimensional targets.
#[wasm_bindgen]
pub fn distance(
    est: &[f64],
    truth: &[f64],
    nx: usize,
    p: f64,
    alpha: f64,
    metric: &str,
) -> Result<String, JsError> {
    views::distance(est, truth, nx, p, alpha, metric)
        .map(|v| v.to_json())
        .map_err(js_err)
}

/// LOSPA as a function of `alpha` on `samples` evenly spaced points of `[0, alpha_max]`.
#[wasm_bindgen]
pub fn alpha_sweep(
    est: &[f64],
    truth: &[f64],
    nx: usize,
    p: f64,
    metric: &str,
    alpha_max: f64,
    samples: usize,
) -> Result<String, JsError> {
    views::alpha_sweep(est, truth, nx, p, metric, alpha_max, samples)
        .map(|v| v.to_json())
        .map_err(js_err)
}

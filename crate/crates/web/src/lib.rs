//! Browser bindings. Each export runs one engine command and returns its JSON
//! report; failures come back as `{"error": "..."}`.

use wasm_bindgen::prelude::*;

fn command(args: &[&str]) -> String {
    let (code, out) = spk_core::cli::run(std::iter::once("spk").chain(args.iter().copied()));
    if code == 0 {
        out
    } else {
        let msg = out.trim().trim_start_matches("error: ");
        serde_json::json!({ "error": msg }).to_string()
    }
}

/// Orbit dimension and Lagrangian verdict for a module such as `E7:0,0,0,0,0,0,1`
/// or `C3:1,0,0 + C3:1,0,0`.
#[wasm_bindgen]
pub fn orbit(module: &str) -> String {
    command(&["orbit", "--module", module.trim()])
}

/// Highest-root grading of a simple algebra such as `F4`.
#[wasm_bindgen]
pub fn grading(algebra: &str) -> String {
    command(&["grading", "--algebra", algebra.trim()])
}

/// Inner real forms of `algebra`; with a nonempty `weight`, each form also
/// carries the signature data of the highest weight orbit.
#[wasm_bindgen]
pub fn real_forms(algebra: &str, weight: &str) -> String {
    let weight = weight.trim();
    if weight.is_empty() {
        command(&["realforms", "--algebra", algebra.trim()])
    } else {
        command(&["realforms", "--algebra", algebra.trim(), "--weight", weight])
    }
}

//! Browser bindings for three computations: the xi determinant of a chart,
//! the P^1 invariant-splitting coefficient, and the Fano chi(T) screen.
//!
//! Each export is a thin wrapper over a plain function returning
//! `Result<_, String>` so the logic runs and is tested natively.

use froblift::fano::screen_record;
use froblift::fano::FanoInvariantRecord;
use froblift::{p1_invariant_scan, parse_poly, ChartLifting, Prime, Zmod};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn names(vars: &str) -> Vec<String> {
    vars.split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect()
}

/// `images` holds one polynomial over `Z/p^2` per line or per `;`.
pub fn xi_det_text(p: u32, vars: &str, images: &str) -> Result<String, String> {
    let prime = Prime::new(p as u64).map_err(|e| e.to_string())?;
    let vars = names(vars);
    if vars.is_empty() {
        return Err("no variables".into());
    }
    let ring = Zmod::zp2(prime.clone());
    let images = images
        .split([';', '\n'])
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly(s, &vars, &ring).map_err(|e| format!("in `{}`: {e}", s.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != vars.len() {
        return Err(format!(
            "{} variables but {} images",
            vars.len(),
            images.len()
        ));
    }
    let lifting = ChartLifting::new(prime, images).map_err(|e| e.to_string())?;
    let xi = lifting.xi_matrix().map_err(|e| e.to_string())?;
    Ok(xi.det.display_with(&vars).to_string())
}

pub fn p1_coefficient_value(p: u32) -> Result<u32, String> {
    let prime = Prime::new(p as u64).map_err(|e| e.to_string())?;
    Ok(p1_invariant_scan(&prime) as u32)
}

/// JSON with `chi_tangent`, `euler_c3`, `verdict` and `hrr_consistent`.
pub fn fano_chi_json(degree: i32, rho: i32, b3: i32) -> Result<String, String> {
    let record = FanoInvariantRecord::new("input", degree as i64, rho as i64, b3 as i64)
        .map_err(|e| e.to_string())?;
    let s = screen_record(&record).map_err(|e| e.to_string())?;
    let out = json!({
        "chi_tangent": s.chi_tangent,
        "euler_c3": s.euler_c3,
        "verdict": s.verdict,
        "hrr_consistent": s.hrr_consistent,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn xi_det(p: u32, vars: &str, images: &str) -> Result<String, JsError> {
    xi_det_text(p, vars, images).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn p1_coefficient(p: u32) -> Result<u32, JsError> {
    p1_coefficient_value(p).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fano_chi(degree: i32, rho: i32, b3: i32) -> Result<String, JsError> {
    fano_chi_json(degree, rho, b3).map_err(|e| JsError::new(&e))
}

//! Browser demo: brace enumeration for a named group, the lattice operations
//! `∘_i` and the free-group operation for `θ` the generator cycle.

use serde_json::json;
use wasm_bindgen::prelude::*;

use skewbrace::brace::{classify, enumerate_circ_ops};
use skewbrace::free::{circ_eval, FreeAutomorphism, FreeWord};
use skewbrace::lattice::{lattice_circ, LatticeVector};
use skewbrace::{catalog, Caps};

/// Largest order the page will enumerate.
const DEMO_MAX_ORDER: usize = 12;

pub fn braces_json(name: &str) -> Result<String, String> {
    let g = catalog::by_name(name).ok_or_else(|| format!("unknown group {name:?}"))?;
    let caps = Caps { max_group_order: DEMO_MAX_ORDER, ..Caps::default() };
    let braces = enumerate_circ_ops(&g, &caps).map_err(|e| e.to_string())?;
    let list = braces
        .iter()
        .map(|b| Ok(json!({ "circ": b.circ().rows(), "classification": classify(b).map_err(|e| e.to_string())? })))
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({ "group": name, "order": g.order(), "add": g.rows(), "count": list.len(), "braces": list }).to_string())
}

pub fn lattice_json(p: i64, level: i64, a: [i64; 2], b: [i64; 2]) -> Result<String, String> {
    let c = lattice_circ(&LatticeVector(a[0], a[1]), &LatticeVector(b[0], b[1]), p, level).map_err(|e| e.to_string())?;
    Ok(json!({ "p": p, "level": level, "a": a, "b": b, "circ": [c.0, c.1] }).to_string())
}

pub fn free_circ_text(rank: usize, a: &str, b: &str) -> Result<String, String> {
    let a = FreeWord::parse(a, rank).map_err(|e| e.to_string())?;
    let b = FreeWord::parse(b, rank).map_err(|e| e.to_string())?;
    let theta = FreeAutomorphism::generator_cycle(rank);
    circ_eval(&a, &b, &theta).map(|w| w.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn enumerate_braces(name: &str) -> Result<String, JsValue> {
    braces_json(name).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lattice_operation(p: i64, level: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> Result<String, JsValue> {
    lattice_json(p, level, [a1, a2], [b1, b2]).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn free_circ(rank: usize, a: &str, b: &str) -> Result<String, JsValue> {
    free_circ_text(rank, a, b).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_has_two_braces() {
        let v: serde_json::Value = serde_json::from_str(&braces_json("Z4").unwrap()).unwrap();
        assert_eq!(v["count"], 2);
        assert!(braces_json("Z13").is_err());
        assert!(braces_json("nope").is_err());
    }

    #[test]
    fn lattice_level_one() {
        let v: serde_json::Value = serde_json::from_str(&lattice_json(1, 1, [1, 0], [0, 1]).unwrap()).unwrap();
        assert_eq!(v["circ"], json!([2, 0]));
    }

    #[test]
    fn free_circ_uses_the_cycle() {
        // x1 ∘ x1 = x1 θ(x1) = x1 x2
        assert_eq!(free_circ_text(2, "x1", "x1").unwrap(), "x1 x2");
        assert_eq!(free_circ_text(2, "e", "x2 x1").unwrap(), "x2 x1");
    }
}

//! wasm-bindgen exports for the static demo page in `www/`.
//!
//! Each export returns a JSON report envelope. The plain functions in
//! [`ops`] do the work and are tested natively.

use wasm_bindgen::prelude::*;

pub mod ops {
    use lambek::commands::{cmd_decompose, cmd_groups, DecomposeMode, GroupAction};
    use lambek::particles::Registry;
    use lambek::report::{render_json, Check, Payload, ReportEnvelope, Table};
    use lambek::vertex::{check_vertex, Vertex};

    fn json(r: &ReportEnvelope) -> Result<String, String> {
        render_json(r).map_err(|e| e.to_string())
    }

    /// `second` is only read in doublet mode; blank means absent.
    pub fn decompose(target: &str, second: &str, mode: &str) -> Result<String, String> {
        let mode: DecomposeMode = mode.parse().map_err(|e: lambek::Error| e.to_string())?;
        let mut targets = vec![target];
        if mode == DecomposeMode::Doublet {
            targets.push(second);
        }
        let r = cmd_decompose(&Registry::standard(), &targets, mode).map_err(|e| e.to_string())?;
        json(&r)
    }

    pub fn cayley(group: &str) -> Result<String, String> {
        json(&cmd_groups(group, &GroupAction::Cayley).map_err(|e| e.to_string())?)
    }

    pub fn vertex(text: &str) -> Result<String, String> {
        let reg = Registry::standard();
        let v = Vertex::parse(text).map_err(|e| e.to_string())?;
        let c = check_vertex(&reg, &v).map_err(|e| e.to_string())?;
        let mut t = Table::new("vertex", &["vertex", "residual", "conserved"]);
        t.push(vec![
            c.legs.clone(),
            c.residual.to_compact_string(),
            c.pass.to_string(),
        ]);
        let detail = format!("residual {}", c.residual.to_compact_string());
        json(&ReportEnvelope::new(
            "vertex",
            Payload {
                tables: vec![t],
                checks: vec![Check::new("conserved", c.pass, detail)],
                group: None,
            },
        ))
    }
}

#[wasm_bindgen]
pub fn decompose(target: &str, second: &str, mode: &str) -> Result<String, JsValue> {
    ops::decompose(target, second, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn cayley(group: &str) -> Result<String, JsValue> {
    ops::cayley(group).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn check_vertex(text: &str) -> Result<String, JsValue> {
    ops::vertex(text).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::ops;
    use lambek::report::parse_json;

    #[test]
    fn decompose_json() {
        let r = parse_json(&ops::decompose("(1,-1,0,0)", "", "sum").unwrap()).unwrap();
        assert_eq!(r.payload.tables[1].rows.len(), 3);
        let d = parse_json(&ops::decompose("u_R", "d_R", "doublet").unwrap()).unwrap();
        assert_eq!(d.payload.tables[1].rows[0], ["h5", "h1"]);
        assert!(ops::decompose("(1,2", "", "sum")
            .unwrap_err()
            .contains("parse error at byte"));
        assert!(ops::decompose("nu", "", "product").is_err());
    }

    #[test]
    fn cayley_json() {
        let r = parse_json(&ops::cayley("q24").unwrap()).unwrap();
        let g = r.payload.group.unwrap();
        assert_eq!(g.elements.len(), 24);
        assert!(ops::cayley("q9").is_err());
    }

    #[test]
    fn vertex_json() {
        let ok = parse_json(&ops::vertex("W- -> e- + nubar").unwrap()).unwrap();
        assert_eq!(ok.fail_count, 0);
        let bad = parse_json(&ops::vertex("W+ -> u_R + dbar_B").unwrap()).unwrap();
        assert_eq!(bad.fail_count, 1);
        assert!(ops::vertex("W+ -> top").is_err());
    }
}

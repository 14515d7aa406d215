//! Matrix file format: `{"rows": n, "cols": n, "entries": [[gaussian
//! literals]]}`, entries row major in the `a/b+c/d*i` literal syntax.

use orbit_core::matrix::ExactMatrix;
use orbit_core::scalar::parse_gaussian;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn matrix_from_json(text: &str) -> Result<ExactMatrix, String> {
    let parsed: MatrixJson =
        serde_json::from_str(text).map_err(|e| format!("invalid matrix JSON: {e}"))?;
    if parsed.entries.len() != parsed.rows
        || parsed.entries.iter().any(|row| row.len() != parsed.cols)
    {
        return Err("entry grid does not match rows x cols".into());
    }
    let mut rows = Vec::with_capacity(parsed.rows);
    for row in &parsed.entries {
        let mut out = Vec::with_capacity(parsed.cols);
        for cell in row {
            out.push(parse_gaussian(cell).map_err(|e| e.to_string())?);
        }
        rows.push(out);
    }
    ExactMatrix::from_rows(rows).map_err(|e| e.to_string())
}

pub fn matrix_to_json(m: &ExactMatrix) -> serde_json::Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect();
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use rees_core::detideal::PolyMatrix;
use rees_core::poly::{make_ring, MonomialOrder, Polynomial, Ring, RingExt};
use serde::Deserialize;

/// Input file schema.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    #[serde(default)]
    pub label: Option<String>,
}

/// A rejected input; always maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<rees_core::Error> for InputError {
    fn from(e: rees_core::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug)]
pub struct LoadedMatrix {
    pub label: String,
    pub ring: Arc<Ring>,
    pub matrix: PolyMatrix,
}

pub fn load_matrix_spec(path: &Path) -> Result<LoadedMatrix, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let spec: MatrixSpec = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: schema error: {e}", path.display())))?;
    let label = spec
        .label
        .clone()
        .unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
    build_matrix(&spec, label)
}

pub fn build_matrix(spec: &MatrixSpec, label: String) -> Result<LoadedMatrix, InputError> {
    let rows = spec.matrix.len();
    if rows == 0 {
        return Err(InputError("field `matrix`: at least one row is required".into()));
    }
    let cols = spec.matrix[0].len();
    if cols == 0 {
        return Err(InputError("field `matrix`: rows must not be empty".into()));
    }
    if let Some((i, row)) = spec.matrix.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(InputError(format!(
            "field `matrix`: row {} has {} entries but row 1 has {cols}",
            i + 1,
            row.len()
        )));
    }
    if rows > cols {
        return Err(InputError(format!(
            "field `matrix`: {rows}x{cols} matrix has more rows than columns; \
             the tool requires m <= n"
        )));
    }
    let ring = make_ring(spec.characteristic, &spec.vars, cols, MonomialOrder::Grevlex)
        .map_err(|e| InputError(format!("fields `characteristic`/`vars`: {e}")))?;
    let mut entries: Vec<Polynomial> = Vec::with_capacity(rows * cols);
    for (i, row) in spec.matrix.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            let p = ring
                .parse(text)
                .map_err(|e| InputError(format!("field `matrix[{i}][{j}]` (\"{text}\"): {e}")))?;
            entries.push(p);
        }
    }
    let matrix = PolyMatrix::new(&ring, rows, cols, entries)?;
    if !matrix.entries_in_base_ring() {
        return Err(InputError(
            "field `matrix`: entries may only use the declared base variables".into(),
        ));
    }
    Ok(LoadedMatrix { label, ring, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> Result<LoadedMatrix, InputError> {
        let s: MatrixSpec = serde_json::from_str(json).map_err(|e| InputError(e.to_string()))?;
        build_matrix(&s, "t".into())
    }

    #[test]
    fn loads_square_power() {
        let m = spec(r#"{"characteristic":32003,"vars":["x","y"],"matrix":[["x","y","0"],["0","x","y"]]}"#)
            .unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (2, 3));
        assert_eq!(m.ring.characteristic(), 32003);
        assert_eq!(m.ring.form_count(), 3);
    }

    #[test]
    fn rational_ring() {
        let m = spec(r#"{"characteristic":0,"vars":["x"],"matrix":[["x/2"]]}"#).unwrap();
        assert_eq!(m.ring.characteristic(), 0);
        assert_eq!(m.matrix.get(0, 0).to_string(), "1/2*x");
    }

    #[test]
    fn rejections() {
        let ragged = spec(r#"{"characteristic":5,"vars":["x"],"matrix":[["x","1"],["x"]]}"#);
        assert!(ragged.unwrap_err().0.contains("row 2"));
        let tall = spec(r#"{"characteristic":5,"vars":["x"],"matrix":[["x"],["x"]]}"#);
        assert!(tall.unwrap_err().0.contains("m <= n"));
        let unknown = spec(r#"{"characteristic":5,"vars":["x"],"matrix":[["z"]]}"#);
        assert!(unknown.unwrap_err().0.contains("matrix[0][0]"));
        let forms = spec(r#"{"characteristic":5,"vars":["x"],"matrix":[["T1"]]}"#);
        assert!(forms.is_err());
        let bad_char = spec(r#"{"characteristic":4,"vars":["x"],"matrix":[["x"]]}"#);
        assert!(bad_char.is_err());
    }
}

use serde_json::{json, Value};

use super::Matrix;
use crate::error::{Error, Result};
use crate::field::FieldKind;

impl Matrix {
    /// `{"field": ..., "rows": r, "cols": c, "entries": [[...], ...]}` with
    /// scalars in the exact text encoding.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> =
            (0..self.rows()).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        json!({
            "field": self.field().to_string(),
            "rows": self.rows(),
            "cols": self.cols(),
            "entries": entries,
        })
    }

    /// Parses the matrix format; `field` overrides a missing header.
    pub fn from_json(v: &Value, field: Option<FieldKind>) -> Result<Matrix> {
        let field = match (v.get("field").and_then(Value::as_str), field) {
            (Some(s), _) => s.parse()?,
            (None, Some(f)) => f,
            (None, None) => return Err(Error::Parse("matrix is missing `field`".into())),
        };
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("matrix is missing `entries`".into()))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| Error::Parse(format!("entries[{i}] is not an array")))?;
            let mut out = Vec::with_capacity(row.len());
            for (j, x) in row.iter().enumerate() {
                let s = match x {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Parse(format!("entries[{i}][{j}] is not a scalar"))),
                };
                out.push(field.parse_scalar(&s).map_err(|e| Error::Parse(format!("entries[{i}][{j}]: {e}")))?);
            }
            parsed.push(out);
        }
        let m = Matrix::from_rows(field, parsed)?;
        for (key, want) in [("rows", m.rows()), ("cols", m.cols())] {
            if let Some(n) = v.get(key).and_then(Value::as_u64) {
                if n as usize != want {
                    return Err(Error::Parse(format!("`{key}` = {n} but entries give {want}")));
                }
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k: FieldKind = "Q(q)".parse().unwrap();
        let q = k.generator().unwrap();
        let mut m = Matrix::identity(k, 2);
        m.set(0, 1, q.inv().unwrap());
        let back = Matrix::from_json(&m.to_json(), None).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_bad_input() {
        let v = json!({"field": "Q", "entries": [["1", "x"]]});
        assert!(Matrix::from_json(&v, None).is_err());
        let v = json!({"field": "Q", "rows": 2, "entries": [["1"]]});
        assert!(Matrix::from_json(&v, None).is_err());
        let v = json!({"entries": [[1, 2], [3, 4]]});
        assert_eq!(Matrix::from_json(&v, Some(FieldKind::Rationals)).unwrap().rows(), 2);
    }
}

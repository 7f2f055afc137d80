//! The matrix-form input document.
//!
//! ```json
//! {"n_vars": 2, "size": 1, "degree": 2,
//!  "coeffs": [{"alpha": [2, 0], "matrix": [[1]]},
//!             {"alpha": [1, 1], "matrix": [["-1"]]},
//!             {"alpha": [0, 2], "matrix": [[1]]}]}
//! ```
//!
//! Matrix cells are JSON integers or strings `"p"` / `"p/q"`. Zero
//! matrices may be omitted.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix_form::{MatrixForm, SymMatrixQ};
use crate::poly::MultiIndex;
use crate::rational::{self, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentRepr {
    n_vars: usize,
    size: usize,
    degree: u32,
    coeffs: Vec<CoeffRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffRepr {
    alpha: Vec<u32>,
    matrix: Vec<Vec<Value>>,
}

pub(crate) fn parse_rational_value(value: &Value, path: &str) -> Result<Rational> {
    match value {
        Value::String(s) => rational::parse(s).map_err(|m| Error::parse(path, m)),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rational::int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(Error::parse(
                    path,
                    format!("non-integer number {n}; write rationals as \"p/q\" strings"),
                ))
            }
        }
        other => Err(Error::parse(
            path,
            format!("expected a rational, found {other}"),
        )),
    }
}

pub(crate) fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(rational::format).collect()
}

/// Parses and validates a matrix-form document.
pub fn parse_matrix_form(text: &str) -> Result<MatrixForm> {
    let doc: DocumentRepr =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    if doc.n_vars == 0 {
        return Err(Error::parse("n_vars", "must be positive"));
    }
    if doc.size == 0 {
        return Err(Error::parse("size", "must be positive"));
    }
    let mut seen = BTreeSet::new();
    let mut coeffs = Vec::with_capacity(doc.coeffs.len());
    for (k, c) in doc.coeffs.iter().enumerate() {
        let alpha = MultiIndex::new(c.alpha.clone());
        let here = format!("coeffs[{k}]");
        if alpha.n_vars() != doc.n_vars {
            return Err(Error::parse(
                format!("{here}.alpha"),
                format!(
                    "has {} entries, expected n_vars = {}",
                    alpha.n_vars(),
                    doc.n_vars
                ),
            ));
        }
        if alpha.degree() != doc.degree {
            return Err(Error::parse(
                format!("{here}.alpha"),
                format!(
                    "mixed degree: length {} but degree is {}",
                    alpha.degree(),
                    doc.degree
                ),
            ));
        }
        if !seen.insert(alpha.clone()) {
            return Err(Error::parse(
                format!("{here}.alpha"),
                format!("duplicate multi-index {alpha}"),
            ));
        }
        if c.matrix.len() != doc.size {
            return Err(Error::parse(
                format!("{here}.matrix"),
                format!("has {} rows, expected size = {}", c.matrix.len(), doc.size),
            ));
        }
        let mut rows = Vec::with_capacity(doc.size);
        for (i, row) in c.matrix.iter().enumerate() {
            if row.len() != doc.size {
                return Err(Error::parse(
                    format!("{here}.matrix[{i}]"),
                    format!("has {} entries, expected size = {}", row.len(), doc.size),
                ));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, v)| parse_rational_value(v, &format!("{here}.matrix[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        let p = SymMatrixQ::from_rows(rows).map_err(|e| match e {
            Error::Asymmetric { row, col } => Error::parse(
                here.clone(),
                format!("asymmetric coefficient matrix at ({row}, {col})"),
            ),
            other => Error::parse(here.clone(), other.to_string()),
        })?;
        coeffs.push((alpha, p));
    }
    MatrixForm::new(doc.n_vars, doc.size, doc.degree, coeffs)
        .map_err(|e| Error::parse("document", e.to_string()))
}

/// Canonical document: nonzero coefficients in graded-lex order, every
/// cell as a reduced rational string.
pub fn serialize_matrix_form(b: &MatrixForm) -> String {
    let doc = DocumentRepr {
        n_vars: b.n_vars(),
        size: b.size(),
        degree: b.degree(),
        coeffs: b
            .terms()
            .map(|(alpha, p)| CoeffRepr {
                alpha: alpha.exponents().to_vec(),
                matrix: p
                    .rows()
                    .map(|row| {
                        row.iter()
                            .map(|v| Value::String(rational::format(v)))
                            .collect()
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    const F_DOC: &str = r#"{"n_vars":2,"size":1,"degree":2,"coeffs":[
        {"alpha":[2,0],"matrix":[[1]]},
        {"alpha":[1,1],"matrix":[["-1"]]},
        {"alpha":[0,2],"matrix":[[1]]}]}"#;

    fn path_of(err: Error) -> (String, String) {
        match err {
            Error::Parse { path, message } => (path, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_scalar_form() {
        let b = parse_matrix_form(F_DOC).unwrap();
        assert_eq!(
            (b.n_vars(), b.size(), b.degree(), b.num_terms()),
            (2, 1, 2, 3)
        );
        let xy = b.coefficient(&MultiIndex::new(vec![1, 1])).unwrap();
        assert_eq!(xy.get(0, 0), &int(-1));
    }

    #[test]
    fn rational_cells() {
        let doc = r#"{"n_vars":1,"size":2,"degree":0,"coeffs":[
            {"alpha":[0],"matrix":[["1/2","-3/6"],["-1/2", 4]]}]}"#;
        let b = parse_matrix_form(doc).unwrap();
        let p = b.coefficient(&MultiIndex::new(vec![0])).unwrap();
        assert_eq!(p.get(0, 1), &ratio(-1, 2));
    }

    #[test]
    fn error_paths() {
        let dup = r#"{"n_vars":1,"size":1,"degree":1,"coeffs":[
            {"alpha":[1],"matrix":[[1]]},{"alpha":[1],"matrix":[[2]]}]}"#;
        let (path, message) = path_of(parse_matrix_form(dup).unwrap_err());
        assert_eq!(path, "coeffs[1].alpha");
        assert!(message.contains("duplicate"));

        let asym = r#"{"n_vars":2,"size":2,"degree":1,"coeffs":[
            {"alpha":[1,0],"matrix":[[1,0],[0,1]]},
            {"alpha":[0,1],"matrix":[[1,2],[3,4]]}]}"#;
        let (path, message) = path_of(parse_matrix_form(asym).unwrap_err());
        assert_eq!(path, "coeffs[1]");
        assert!(message.contains("asymmetric"));

        let zero_den =
            r#"{"n_vars":1,"size":1,"degree":0,"coeffs":[{"alpha":[0],"matrix":[["1/0"]]}]}"#;
        let (path, message) = path_of(parse_matrix_form(zero_den).unwrap_err());
        assert_eq!(path, "coeffs[0].matrix[0][0]");
        assert!(message.contains("zero denominator"));

        let float = r#"{"n_vars":1,"size":1,"degree":0,"coeffs":[{"alpha":[0],"matrix":[[0.5]]}]}"#;
        assert_eq!(
            path_of(parse_matrix_form(float).unwrap_err()).0,
            "coeffs[0].matrix[0][0]"
        );

        let mixed = r#"{"n_vars":2,"size":1,"degree":1,"coeffs":[
            {"alpha":[1,0],"matrix":[[1]]},{"alpha":[1,1],"matrix":[[1]]}]}"#;
        let (path, message) = path_of(parse_matrix_form(mixed).unwrap_err());
        assert_eq!(path, "coeffs[1].alpha");
        assert!(message.contains("mixed degree"));

        let ragged =
            r#"{"n_vars":1,"size":2,"degree":0,"coeffs":[{"alpha":[0],"matrix":[[1,0],[0]]}]}"#;
        assert_eq!(
            path_of(parse_matrix_form(ragged).unwrap_err()).0,
            "coeffs[0].matrix[1]"
        );

        assert_eq!(path_of(parse_matrix_form("{").unwrap_err()).0, "document");
        let empty = r#"{"n_vars":1,"size":0,"degree":0,"coeffs":[]}"#;
        assert_eq!(path_of(parse_matrix_form(empty).unwrap_err()).0, "size");
    }

    #[test]
    fn canonical_round_trip() {
        let b = parse_matrix_form(F_DOC).unwrap();
        let text = serialize_matrix_form(&b);
        assert_eq!(parse_matrix_form(&text).unwrap(), b);
        assert_eq!(
            serialize_matrix_form(&parse_matrix_form(&text).unwrap()),
            text
        );
    }

    #[test]
    fn zero_matrices_are_dropped() {
        let doc = r#"{"n_vars":2,"size":1,"degree":1,"coeffs":[
            {"alpha":[0,1],"matrix":[["0/5"]]},{"alpha":[1,0],"matrix":[[2]]}]}"#;
        let b = parse_matrix_form(doc).unwrap();
        assert_eq!(b.num_terms(), 1);
        assert!(!serialize_matrix_form(&b).contains("[\n      0"));
    }
}

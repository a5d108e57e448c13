//! Braiding input documents.
//!
//! Explicit form:
//! `{"name": .., "dimension": N, "label": "q"?, "braiding": [[..]], "options": {..}?}`
//! where entry `[row][col]` is `c^{mn}_{ij}` for row `(i,j)`, column `(m,n)`.
//! Family form: `{"family": "diagonal", "qmatrix": [[..]]}`, `{"family": "example2"}`,
//! `{"family": "trivial1"}`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braiding::Braiding;
use crate::examples;
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("ParseError({line}, {reason})")]
    Parse { line: usize, reason: String },
    #[error("DimensionMismatch: N = {expected} needs a {size}x{size} table, got {rows} rows with {cols} columns", size = expected * expected)]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
    #[error("BadScalar({0})")]
    BadScalar(String),
    #[error("BadFamilyParams: {0}")]
    BadFamilyParams(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Rows are inputs `(i,j)`, columns outputs `(m,n)`.
    #[default]
    Standard,
    /// Rows are outputs.
    Transpose,
}

impl FromStr for Convention {
    type Err = InputError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Convention::Standard),
            "transpose" => Ok(Convention::Transpose),
            other => Err(InputError::Parse {
                line: 0,
                reason: format!("unknown convention {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub cap: Option<usize>,
    pub convention: Convention,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub name: String,
    pub dimension: usize,
    pub label: Option<Scalar>,
    /// The table exactly as written in the document.
    pub table: Mat,
    pub options: Options,
}

impl InputSpec {
    /// The table in the standard orientation.
    pub fn standard_table(&self) -> Mat {
        match self.options.convention {
            Convention::Standard => self.table.clone(),
            Convention::Transpose => self.table.transpose(),
        }
    }

    pub fn braiding(&self) -> Braiding {
        Braiding::new(self.dimension, self.standard_table()).expect("table size checked on parse")
    }

    /// Explicit-form JSON document; `parse_input(&spec.to_json())` gives back `spec`.
    pub fn to_json(&self) -> String {
        let mut doc = json!({
            "name": self.name,
            "dimension": self.dimension,
            "braiding": self.table.to_strings(),
        });
        if let Some(q) = &self.label {
            doc["label"] = json!(q.to_string());
        }
        let mut options = serde_json::Map::new();
        if let Some(cap) = self.options.cap {
            options.insert("cap".into(), json!(cap));
        }
        if self.options.convention != Convention::Standard {
            options.insert("convention".into(), json!(self.options.convention));
        }
        if !options.is_empty() {
            doc["options"] = Value::Object(options);
        }
        serde_json::to_string_pretty(&doc).expect("json value")
    }
}

fn parse_err(reason: impl Into<String>) -> InputError {
    InputError::Parse {
        line: 0,
        reason: reason.into(),
    }
}

fn scalar_of(v: &Value) -> Result<Scalar, InputError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| InputError::BadScalar(s.clone())),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap())),
        other => Err(InputError::BadScalar(other.to_string())),
    }
}

fn matrix_of(v: &Value, what: &str) -> Result<Vec<Vec<Scalar>>, InputError> {
    let rows = v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array of rows")))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err(format!("{what} rows must be arrays")))?
                .iter()
                .map(scalar_of)
                .collect()
        })
        .collect()
}

fn options_of(doc: &Value) -> Result<Options, InputError> {
    let Some(opts) = doc.get("options") else {
        return Ok(Options::default());
    };
    let cap = match opts.get("cap") {
        None | Some(Value::Null) => None,
        Some(v) => Some(v.as_u64().ok_or_else(|| parse_err("options.cap must be a non-negative integer"))? as usize),
    };
    let convention = match opts.get("convention") {
        None | Some(Value::Null) => Convention::Standard,
        Some(Value::String(s)) => s.parse()?,
        Some(_) => return Err(parse_err("options.convention must be a string")),
    };
    Ok(Options { cap, convention })
}

pub fn parse_input(text: &str) -> Result<InputSpec, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    if !doc.is_object() {
        return Err(parse_err("document must be a JSON object"));
    }
    let options = options_of(&doc)?;
    let mut spec = if let Some(family) = doc.get("family") {
        let family = family.as_str().ok_or_else(|| parse_err("family must be a string"))?;
        let qmatrix = doc.get("qmatrix").map(|q| matrix_of(q, "qmatrix")).transpose()?;
        builtin(family, qmatrix.as_deref())?
    } else {
        explicit(&doc)?
    };
    if let Some(name) = doc.get("name").and_then(Value::as_str) {
        spec.name = name.to_string();
    }
    if let Some(label) = doc.get("label") {
        spec.label = Some(scalar_of(label)?);
    }
    spec.options = options;
    Ok(spec)
}

fn explicit(doc: &Value) -> Result<InputSpec, InputError> {
    let name = doc.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
    let dimension = doc
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("missing or invalid \"dimension\""))? as usize;
    if dimension == 0 {
        return Err(parse_err("dimension must be positive"));
    }
    let rows = matrix_of(doc.get("braiding").ok_or_else(|| parse_err("missing \"braiding\""))?, "braiding")?;
    let size = dimension * dimension;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(InputError::DimensionMismatch {
            expected: dimension,
            rows: rows.len(),
            cols,
        });
    }
    Ok(InputSpec {
        name,
        dimension,
        label: None,
        table: Mat::from_rows(rows),
        options: Options::default(),
    })
}

fn from_braiding(name: &str, b: Braiding) -> InputSpec {
    InputSpec {
        name: name.to_string(),
        dimension: b.dim(),
        label: None,
        table: b.table().clone(),
        options: Options::default(),
    }
}

/// Expands a named family. `diagonal` needs a q-matrix with `q_ii = 1` and
/// `q_ij q_ji = 1`.
pub fn builtin(name: &str, qmatrix: Option<&[Vec<Scalar>]>) -> Result<InputSpec, InputError> {
    match name {
        "example2" => Ok(from_braiding("example2", examples::example2())),
        "trivial1" => Ok(from_braiding("trivial1", examples::trivial1())),
        "diagonal" => {
            let q = qmatrix.ok_or_else(|| InputError::BadFamilyParams("diagonal needs a qmatrix".into()))?;
            let n = q.len();
            if n == 0 || q.iter().any(|r| r.len() != n) {
                return Err(InputError::BadFamilyParams("qmatrix must be square and nonempty".into()));
            }
            for i in 0..n {
                if !q[i][i].is_one() {
                    return Err(InputError::BadFamilyParams(format!("q[{i}][{i}] = {} ≠ 1", q[i][i])));
                }
                for j in (i + 1)..n {
                    let prod = &q[i][j] * &q[j][i];
                    if !prod.is_one() {
                        return Err(InputError::BadFamilyParams(format!(
                            "q[{i}][{j}]·q[{j}][{i}] = {} · {} ≠ 1",
                            q[i][j], q[j][i]
                        )));
                    }
                }
            }
            Ok(from_braiding("diagonal", Braiding::diagonal(&Mat::from_rows(q.to_vec()))))
        }
        other => Err(InputError::BadFamilyParams(format!("unknown family {other:?}"))),
    }
}

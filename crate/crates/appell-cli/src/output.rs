//! Output documents: family metadata plus a matrix or vector payload, with
//! every rational serialized as a canonical `p/q` string.
//!
//! Both formats round-trip losslessly and serialize to identical bytes for
//! identical inputs. JSON keys are fixed as
//! `{"family", "m", "params", "kind", "data"}`; CSV carries the same four
//! metadata fields as leading `key,value` lines followed by the data rows.

use std::collections::BTreeMap;

use appell_core::families::FamilySpec;
use appell_core::matrix::{LTMatrix, RatVector};
use serde::{Deserialize, Serialize};

pub const KIND_TRANSFER_MATRIX: &str = "transfer-matrix";
pub const KIND_VALUES: &str = "values";
pub const KIND_CLASSICAL_VALUES: &str = "classical-values";
pub const KIND_GAMMA: &str = "gamma";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Matrix(Vec<Vec<String>>),
    Vector(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub family: String,
    pub m: usize,
    pub params: BTreeMap<String, String>,
    pub kind: String,
    pub data: Payload,
}

fn params_of(spec: &FamilySpec) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    match spec {
        FamilySpec::LaguerreModified { alpha } => {
            params.insert("alpha".to_owned(), alpha.to_string());
        }
        FamilySpec::GeneralizedEuler { gamma_bar } => {
            params.insert("gamma-bar".to_owned(), gamma_bar.to_string());
        }
        _ => {}
    }
    params
}

impl OutputDocument {
    pub fn matrix(spec: &FamilySpec, m: usize, matrix: &LTMatrix) -> Self {
        let rows = (0..matrix.order())
            .map(|i| matrix.row(i).iter().map(|e| e.to_string()).collect())
            .collect();
        OutputDocument {
            family: spec.name().to_owned(),
            m,
            params: params_of(spec),
            kind: KIND_TRANSFER_MATRIX.to_owned(),
            data: Payload::Matrix(rows),
        }
    }

    pub fn vector(spec: &FamilySpec, m: usize, kind: &str, values: &RatVector) -> Self {
        OutputDocument {
            family: spec.name().to_owned(),
            m,
            params: params_of(spec),
            kind: kind.to_owned(),
            data: Payload::Vector(values.iter().map(|e| e.to_string()).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family,{}\n", self.family));
        out.push_str(&format!("m,{}\n", self.m));
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!("params,{}\n", params.join(";")));
        out.push_str(&format!("kind,{}\n", self.kind));
        match &self.data {
            Payload::Matrix(rows) => {
                for row in rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            Payload::Vector(values) => {
                out.push_str(&values.join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<Self, String> {
        let mut lines = s.lines();
        let mut field = |key: &str| -> Result<String, String> {
            let line = lines.next().ok_or_else(|| format!("missing {key} line"))?;
            line.strip_prefix(&format!("{key},"))
                .map(str::to_owned)
                .ok_or_else(|| format!("expected a {key} line, got {line:?}"))
        };
        let family = field("family")?;
        let m: usize = field("m")?
            .parse()
            .map_err(|_| "m is not an integer".to_owned())?;
        let params_field = field("params")?;
        let kind = field("kind")?;

        let mut params = BTreeMap::new();
        if !params_field.is_empty() {
            for pair in params_field.split(';') {
                let (k, v) = pair
                    .split_once('=')
                    .ok_or_else(|| format!("malformed parameter {pair:?}"))?;
                params.insert(k.to_owned(), v.to_owned());
            }
        }

        let rows: Vec<Vec<String>> = lines
            .filter(|l| !l.is_empty())
            .map(|l| l.split(',').map(str::to_owned).collect())
            .collect();
        let data = if kind == KIND_TRANSFER_MATRIX {
            Payload::Matrix(rows)
        } else {
            match rows.len() {
                1 => Payload::Vector(rows.into_iter().next().expect("one row")),
                n => return Err(format!("expected one data row, got {n}")),
            }
        };

        Ok(OutputDocument {
            family,
            m,
            params,
            kind,
            data,
        })
    }
}

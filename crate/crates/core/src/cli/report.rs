//! Machine-readable run reports.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::ore::OrePoly;
use crate::pseudolin::BoundReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub order: usize,
    /// Maximal coefficient degree.
    pub degree: i64,
    /// `coeffs[i][k]` is the coefficient of `x^k Dx^i`.
    pub coeffs: Vec<Vec<String>>,
    pub text: String,
}

impl OperatorJson {
    pub fn from_operator(l: &OrePoly) -> Self {
        let p = l.clear_denominators().poly_coeffs().expect("cleared");
        OperatorJson {
            order: l.order().unwrap_or(0),
            degree: l.degree().map_or(-1, |d| d as i64),
            coeffs: p
                .iter()
                .map(|c| c.coeffs().iter().map(|v| v.to_string()).collect())
                .collect(),
            text: super::format_operator(l),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub name: String,
    pub per_i: Vec<i64>,
    pub observed: Vec<i64>,
    pub slack: Vec<i64>,
    pub asserted: bool,
}

impl From<&BoundReport> for BoundsJson {
    fn from(b: &BoundReport) -> Self {
        BoundsJson {
            name: b.name.clone(),
            per_i: b.bound.clone(),
            observed: b.observed.clone(),
            slack: b.slack(),
            asserted: b.asserted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub method: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trials {
    pub passed: usize,
    pub total: usize,
}

/// One instance of a bounds table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub instance: String,
    pub params: String,
    pub operator: OperatorJson,
    pub bounds: Vec<BoundsJson>,
    pub verification: Verification,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub operator: Option<OperatorJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<BoundsJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub realisation_bound: Option<BoundsJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<Trials>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rows: Option<Vec<Row>>,
    pub verification: Verification,
    pub seed: Option<u64>,
    pub wall_ms: f64,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>, verification: Verification) -> Self {
        Report {
            command: command.into(),
            params,
            operator: None,
            bounds: None,
            realisation_bound: None,
            certificate: None,
            trials: None,
            rows: None,
            verification,
            seed: None,
            wall_ms: 0.0,
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))?;
        std::fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

//! File formats: the graph JSON schema, the value encoding, canonical
//! JSON output, and input digests.
//!
//! Values are encoded as a JSON number (scalar), a two-element array
//! (rejection/possibility pair), an object `{"lo": .., "hi": ..}`
//! (interval), or the string `"bottom"` (contradiction). A hypothesis
//! graph is
//!
//! ```json
//! {
//!   "calculus": "PT",
//!   "mode": "lax",
//!   "objects": ["A", "B"],
//!   "homs": [{"from": "A", "to": "A", "value": 1.0}, ...]
//! }
//! ```
//!
//! with one entry per ordered pair. Canonical output JSON has sorted keys
//! and shortest round-trip decimals, so identical runs are byte-identical.

use std::fs;
use std::path::Path;

use epicalc_core::calculus::CalcRef;
use epicalc_core::hypotheses::{HypothesisGraph, Mode};
use epicalc_core::instances::InstanceId;
use epicalc_core::value::CalcValue;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::run::CliError;

/// JSON encoding of a [`CalcValue`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Scalar(f64),
    Pair([f64; 2]),
    Interval { lo: f64, hi: f64 },
    Named(String),
}

impl ValueRepr {
    pub fn to_value(&self) -> Result<CalcValue, CliError> {
        match self {
            ValueRepr::Scalar(x) => Ok(CalcValue::Scalar(*x)),
            ValueRepr::Pair([r, p]) => Ok(CalcValue::Pair(*r, *p)),
            ValueRepr::Interval { lo, hi } => Ok(CalcValue::interval(*lo, *hi)),
            ValueRepr::Named(name) if name == "bottom" => Ok(CalcValue::Bottom),
            ValueRepr::Named(name) => {
                Err(CliError::parse(format!("unknown value name {name:?}; expected \"bottom\"")))
            }
        }
    }

    pub fn from_value(v: &CalcValue) -> ValueRepr {
        match v {
            CalcValue::Scalar(x) => ValueRepr::Scalar(*x),
            CalcValue::Pair(r, p) => ValueRepr::Pair([*r, *p]),
            CalcValue::Interval { lo, hi } => ValueRepr::Interval { lo: *lo, hi: *hi },
            CalcValue::Bottom => ValueRepr::Named(String::from("bottom")),
        }
    }
}

/// Parse a value from command-line syntax: `0.5`, `0.2,0.9`, `[0.1,0.4]`,
/// or `bottom`.
pub fn parse_value_arg(s: &str) -> Result<CalcValue, CliError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("bottom") {
        return Ok(CalcValue::Bottom);
    }
    let bad = |what: &str| CliError::parse(format!("cannot parse {what} from {s:?}"));
    if let Some(body) = s.strip_prefix('[') {
        let body = body.strip_suffix(']').ok_or_else(|| bad("an interval"))?;
        let (lo, hi) = body.split_once(',').ok_or_else(|| bad("an interval"))?;
        let lo: f64 = lo.trim().parse().map_err(|_| bad("an interval"))?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad("an interval"))?;
        return Ok(CalcValue::interval(lo, hi));
    }
    if let Some((r, p)) = s.split_once(',') {
        let r: f64 = r.trim().parse().map_err(|_| bad("a pair"))?;
        let p: f64 = p.trim().parse().map_err(|_| bad("a pair"))?;
        return Ok(CalcValue::Pair(r, p));
    }
    let x: f64 = s.parse().map_err(|_| bad("a scalar"))?;
    Ok(CalcValue::Scalar(x))
}

/// Source of one degree in the graph schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomEntry {
    pub from: String,
    pub to: String,
    pub value: ValueRepr,
}

/// The graph document schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub calculus: String,
    pub mode: String,
    pub objects: Vec<String>,
    pub homs: Vec<HomEntry>,
}

impl GraphDoc {
    pub fn from_graph(g: &HypothesisGraph) -> GraphDoc {
        GraphDoc {
            calculus: String::from(g.calculus().id()),
            mode: String::from(g.mode().name()),
            objects: g.objects().to_vec(),
            homs: g
                .entries()
                .map(|(from, to, v)| HomEntry {
                    from: String::from(from),
                    to: String::from(to),
                    value: ValueRepr::from_value(&v),
                })
                .collect(),
        }
    }

    pub fn into_graph(self, eps: f64) -> Result<HypothesisGraph, CliError> {
        let id: InstanceId = self.calculus.parse().map_err(CliError::from_parse)?;
        let calculus: CalcRef = id.build(eps);
        let mode: Mode = self.mode.parse().map_err(CliError::from_parse)?;
        let mut entries = Vec::with_capacity(self.homs.len());
        for e in &self.homs {
            entries.push((e.from.as_str(), e.to.as_str(), e.value.to_value()?));
        }
        let objects: Vec<&str> = self.objects.iter().map(|s| s.as_str()).collect();
        HypothesisGraph::from_entries(calculus, mode, &objects, &entries)
            .map_err(CliError::from_parse)
    }
}

/// Find the graph object in a parsed JSON document: either the document
/// itself or nested under `"graph"` / `"result"`, so the output of
/// `update` and `transport` can be fed straight back in.
fn find_graph(doc: &serde_json::Value) -> Option<&serde_json::Value> {
    let obj = doc.as_object()?;
    if obj.contains_key("calculus") && obj.contains_key("objects") {
        return Some(doc);
    }
    for key in ["graph", "result"] {
        if let Some(found) = obj.get(key).and_then(find_graph) {
            return Some(found);
        }
    }
    None
}

/// Read a graph file, tolerating an envelope around the graph object.
pub fn load_graph(path: &Path, eps: f64) -> Result<(HypothesisGraph, String), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    let digest = sha256_hex(&bytes);
    let doc: serde_json::Value = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let graph_value = find_graph(&doc)
        .ok_or_else(|| CliError::parse(format!("{}: no graph object found", path.display())))?;
    let graph_doc: GraphDoc = serde_json::from_value(graph_value.clone())
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    Ok((graph_doc.into_graph(eps)?, digest))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Serialize with sorted keys and shortest round-trip decimals; `Map`
/// keys are ordered, and converting through `serde_json::Value` applies
/// that ordering to struct fields as well.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let value = serde_json::to_value(value)
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))?;
    let mut out = serde_json::to_string_pretty(&value)
        .map_err(|e| CliError::internal(format!("serialization failed: {e}")))?;
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_arg_forms() {
        assert_eq!(parse_value_arg("0.5").unwrap(), CalcValue::Scalar(0.5));
        assert_eq!(parse_value_arg("-1").unwrap(), CalcValue::Scalar(-1.0));
        assert_eq!(parse_value_arg("0.2,0.9").unwrap(), CalcValue::Pair(0.2, 0.9));
        assert_eq!(parse_value_arg("[0.1,0.4]").unwrap(), CalcValue::interval(0.1, 0.4));
        assert_eq!(parse_value_arg("bottom").unwrap(), CalcValue::Bottom);
        assert!(parse_value_arg("[0.1").is_err());
        assert!(parse_value_arg("x").is_err());
    }

    #[test]
    fn value_repr_round_trips_through_json() {
        let values = [
            CalcValue::Scalar(0.5),
            CalcValue::Pair(0.2, 0.9),
            CalcValue::interval(0.1, 0.4),
            CalcValue::Bottom,
        ];
        for v in values {
            let json = serde_json::to_string(&ValueRepr::from_value(&v)).unwrap();
            let back: ValueRepr = serde_json::from_str(&json).unwrap();
            assert!(back.to_value().unwrap().bits_eq(&v), "{json}");
        }
        let bottom: ValueRepr = serde_json::from_str("\"bottom\"").unwrap();
        assert_eq!(bottom.to_value().unwrap(), CalcValue::Bottom);
        let named: ValueRepr = serde_json::from_str("\"top\"").unwrap();
        assert!(named.to_value().is_err());
    }

    #[test]
    fn canonical_json_sorts_keys() {
        #[derive(Serialize)]
        struct Unsorted {
            zebra: u32,
            apple: u32,
        }
        let out = canonical_json(&Unsorted { zebra: 1, apple: 2 }).unwrap();
        assert!(out.find("apple").unwrap() < out.find("zebra").unwrap());
        assert!(out.ends_with('\n'));
    }

    #[test]
    fn canonical_json_uses_shortest_decimals() {
        let out = canonical_json(&[0.1f64, 1.0, 0.30000000000000004]).unwrap();
        assert!(out.contains("0.1"));
        assert!(out.contains("1.0"));
        assert!(out.contains("0.30000000000000004"));
    }
}

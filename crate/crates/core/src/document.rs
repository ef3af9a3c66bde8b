//! JSON documents for structures and derivations.
//!
//! Structure:
//! `{"arity": n, "weights": [w1..wn], "brackets": {"i,j": "poly"}}` with
//! 1-based `i != j` (a key with `i > j` sets `P_ji = -P_ij`), or
//! `{"arity": 3, "weights": [...], "potential": "poly"}`. Missing brackets
//! are zero; missing weights default to all ones.
//!
//! Derivation: `{"degree": d, "images": ["poly", ...]}`; the degree is read
//! off the images when absent.

use serde_json::{json, Map, Value};

use crate::calculus::Derivation;
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Poly, WeightedGrading};

/// A structure read from a document, with its potential when one was given.
#[derive(Debug, Clone)]
pub struct StructureDocument {
    pub structure: PoissonStructure,
    pub potential: Option<Poly>,
}

fn doc_err(message: impl Into<String>) -> Error {
    Error::Document(message.into())
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| doc_err(format!("{what} must be an integer")))
}

pub fn parse_structure(text: &str) -> Result<StructureDocument> {
    let v: Value = serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))?;
    structure_from_value(&v)
}

pub fn structure_from_value(v: &Value) -> Result<StructureDocument> {
    let obj = v
        .as_object()
        .ok_or_else(|| doc_err("structure document must be an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "arity" | "weights" | "brackets" | "potential") {
            return Err(doc_err(format!("unknown field `{key}`")));
        }
    }
    let weights: Option<Vec<i64>> = match obj.get("weights") {
        None => None,
        Some(w) => Some(
            w.as_array()
                .ok_or_else(|| doc_err("`weights` must be an array"))?
                .iter()
                .map(|x| as_i64(x, "each weight"))
                .collect::<Result<_>>()?,
        ),
    };
    let arity = match (obj.get("arity"), &weights) {
        (Some(a), _) => {
            let a = as_i64(a, "`arity`")?;
            if a < 1 {
                return Err(doc_err("`arity` must be positive"));
            }
            a as usize
        }
        (None, Some(w)) => w.len(),
        (None, None) => return Err(doc_err("`arity` is required")),
    };
    let weights = weights.unwrap_or_else(|| vec![1; arity]);
    if weights.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: weights.len(),
        });
    }
    let grading = WeightedGrading::new(weights);
    match (obj.get("brackets"), obj.get("potential")) {
        (Some(_), Some(_)) => Err(doc_err("give either `brackets` or `potential`, not both")),
        (_, Some(p)) => {
            let text = p
                .as_str()
                .ok_or_else(|| doc_err("`potential` must be a string"))?;
            let omega = Poly::parse(text, arity)?;
            let structure = PoissonStructure::from_potential(&omega, grading)?;
            Ok(StructureDocument {
                structure,
                potential: Some(omega),
            })
        }
        (b, None) => {
            let mut entries = Vec::new();
            if let Some(b) = b {
                let map = b
                    .as_object()
                    .ok_or_else(|| doc_err("`brackets` must be an object"))?;
                let mut seen = std::collections::BTreeSet::new();
                for (key, val) in map {
                    let (i, j) = parse_pair(key, arity)?;
                    if !seen.insert((i.min(j), i.max(j))) {
                        return Err(doc_err(format!("bracket `{key}` given twice")));
                    }
                    let text = val
                        .as_str()
                        .ok_or_else(|| doc_err(format!("bracket `{key}` must be a string")))?;
                    entries.push(((i, j), Poly::parse(text, arity)?));
                }
            }
            Ok(StructureDocument {
                structure: PoissonStructure::new(grading, entries)?,
                potential: None,
            })
        }
    }
}

fn parse_pair(key: &str, arity: usize) -> Result<(usize, usize)> {
    let bad = || {
        doc_err(format!(
            "bracket key `{key}` must look like \"i,j\" with 1 <= i != j <= {arity}"
        ))
    };
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 || i > arity || j > arity || i == j {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

pub fn parse_derivation(text: &str, grading: &WeightedGrading) -> Result<Derivation> {
    let v: Value = serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))?;
    derivation_from_value(&v, grading)
}

pub fn derivation_from_value(v: &Value, grading: &WeightedGrading) -> Result<Derivation> {
    let obj = v
        .as_object()
        .ok_or_else(|| doc_err("derivation document must be an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "degree" | "images") {
            return Err(doc_err(format!("unknown field `{key}`")));
        }
    }
    let n = grading.arity();
    let images: Vec<Poly> = obj
        .get("images")
        .and_then(Value::as_array)
        .ok_or_else(|| doc_err("`images` must be an array of strings"))?
        .iter()
        .map(|x| {
            let t = x
                .as_str()
                .ok_or_else(|| doc_err("each image must be a string"))?;
            Ok(Poly::parse(t, n)?)
        })
        .collect::<Result<_>>()?;
    if images.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: images.len(),
        });
    }
    match obj.get("degree") {
        Some(d) => Derivation::new(grading.clone(), images, as_i64(d, "`degree`")?),
        None => Derivation::infer(grading.clone(), images),
    }
}

/// Structure document for `s`, listing every pair `i < j`.
pub fn structure_to_value(s: &PoissonStructure, potential: Option<&Poly>) -> Value {
    let mut brackets = Map::new();
    for ((i, j), p) in s.entries() {
        brackets.insert(format!("{},{}", i + 1, j + 1), Value::String(p.to_string()));
    }
    let mut obj = Map::new();
    obj.insert("arity".into(), json!(s.arity()));
    obj.insert("weights".into(), json!(s.grading().weights()));
    obj.insert("brackets".into(), Value::Object(brackets));
    if let Some(p) = potential {
        obj.insert("potential".into(), Value::String(p.to_string()));
    }
    Value::Object(obj)
}

pub fn derivation_to_value(d: &Derivation) -> Value {
    json!({
        "degree": d.degree(),
        "images": d.images().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

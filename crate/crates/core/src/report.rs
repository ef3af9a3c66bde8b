//! JSON renderings of computed results. Maps are emitted in insertion
//! order with degrees ascending, so output is byte-stable.

use serde_json::{json, Map, Value};

use crate::calculus::{self, Derivation};
use crate::cohomology::CohomologyWindow;
use crate::document::{derivation_to_value, structure_to_value};
use crate::error::Result;
use crate::poisson::PoissonStructure;
use crate::solver::{self, Verdicts};

pub fn verify_report(s: &PoissonStructure) -> Value {
    let graded_failure = s.grading_failure();
    let jacobi_failure = s.jacobi_failure();
    let mut obj = Map::new();
    obj.insert("graded".into(), json!(graded_failure.is_none()));
    obj.insert("jacobi".into(), json!(jacobi_failure.is_none()));
    if let Some(e) = graded_failure {
        obj.insert("graded_failure".into(), json!(e.to_string()));
    }
    if let Some((i, j, k)) = jacobi_failure {
        let jac = s.jacobiator(i, j, k).expect("in range");
        obj.insert(
            "jacobi_failure".into(),
            json!({ "triple": [i + 1, j + 1, k + 1], "jacobiator": jac.to_string() }),
        );
    }
    Value::Object(obj)
}

pub fn modular_report(s: &PoissonStructure) -> Result<Value> {
    let m = Derivation::modular(s)?;
    Ok(json!({
        "modular": derivation_to_value(&m),
        "divergence": m.divergence().to_string(),
        "unimodular": m.is_zero(),
    }))
}

pub fn unimodularize_report(s: &PoissonStructure) -> Result<Value> {
    let (u, delta) = calculus::unimodularize(s)?;
    Ok(json!({
        "delta": derivation_to_value(&delta),
        "structure": structure_to_value(&u, None),
        "decomposition_holds": calculus::decomposition_holds(s, &u)?,
        "result_unimodular": calculus::is_unimodular(&u)?,
    }))
}

pub fn twist_report(s: &PoissonStructure, delta: &Derivation) -> Result<Value> {
    let t = calculus::twist(s, delta)?;
    let mut obj = Map::new();
    obj.insert("delta".into(), derivation_to_value(delta));
    obj.insert(
        "poisson_derivation".into(),
        json!(calculus::is_poisson_derivation(s, delta)?),
    );
    obj.insert("structure".into(), structure_to_value(&t, None));
    if s.grading().is_positive() {
        let predicted = calculus::twist_modular_prediction(s, delta)?;
        let actual = Derivation::modular(&t)?;
        obj.insert("modular".into(), derivation_to_value(&actual));
        obj.insert(
            "modular_matches_prediction".into(),
            json!(predicted == actual),
        );
    }
    Ok(Value::Object(obj))
}

pub fn rgt_report(s: &PoissonStructure) -> Result<Value> {
    let gspd = solver::semi_poisson_dim(s, 0)?;
    let gpd = solver::poisson_derivation_dim(s, 0)?;
    Ok(json!({
        "rgt": 1 - gspd as i64,
        "Gpd": gpd,
        "Gspd": gspd,
        "unimodular": calculus::is_unimodular(s)?,
    }))
}

/// `{"rgt", "unimodular", "dims": {d: {A, Z, Pd, Hd, PH1, Od}}, "verdicts"}`.
pub fn solver_report(v: &Verdicts) -> Value {
    let mut dims = Map::new();
    for (d, x) in &v.dims {
        dims.insert(
            d.to_string(),
            json!({ "A": x.a, "Z": x.z, "Pd": x.pd, "Hd": x.hd, "PH1": x.ph1, "Od": x.od }),
        );
    }
    let per_degree = |m: &std::collections::BTreeMap<i64, bool>| {
        Value::Object(m.iter().map(|(d, b)| (d.to_string(), json!(b))).collect())
    };
    json!({
        "rgt": v.rgt,
        "Gpd": v.gpd,
        "Gspd": v.gspd,
        "unimodular": v.unimodular,
        "dims": Value::Object(dims),
        "verdicts": {
            "ph1_minimal": per_degree(&v.ph1_minimal),
            "pd_equals_a": per_degree(&v.pd_equals_a),
            "h_ozone": per_degree(&v.h_ozone),
            "all": {
                "ph1_minimal": v.all_ph1_minimal(),
                "pd_equals_a": v.all_pd_equals_a(),
                "h_ozone": v.all_h_ozone(),
            },
        },
    })
}

/// `{"window": [dmin, N], "PH": {q: {d: dim}}, "PH0_homology": {d: dim},
/// "checks": {"euler": {d: bool}, "poincare": {d: bool} | null}}`.
pub fn cohomology_report(w: &CohomologyWindow) -> Value {
    let mut ph = Map::new();
    for (q, slot) in w.ph.iter().enumerate() {
        ph.insert(
            q.to_string(),
            Value::Object(
                slot.iter()
                    .map(|(d, n)| (d.to_string(), json!(n)))
                    .collect(),
            ),
        );
    }
    let homology: Map<String, Value> = w
        .ph0_homology
        .iter()
        .map(|(d, n)| (d.to_string(), json!(n)))
        .collect();
    let euler: Map<String, Value> = w
        .euler
        .iter()
        .map(|(d, b)| (d.to_string(), json!(b)))
        .collect();
    let poincare = match &w.poincare {
        Some(p) => Value::Object(p.iter().map(|(d, b)| (d.to_string(), json!(b))).collect()),
        None => Value::Null,
    };
    json!({
        "window": [w.dmin, w.dmax],
        "PH": Value::Object(ph),
        "PH0_homology": Value::Object(homology),
        "checks": { "euler": Value::Object(euler), "poincare": poincare },
    })
}

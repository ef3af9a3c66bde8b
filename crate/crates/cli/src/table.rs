//! Aligned two-column rendering of a JSON report: one line per scalar,
//! keyed by its dotted path. Arrays of scalars stay on one line.

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        let pad = width - k.chars().count();
        out.push_str(&k);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&val);
        out.push('\n');
    }
    out
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                rows.push((prefix.to_string(), "{}".into()));
            }
            for (k, x) in map {
                flatten(&join(prefix, k), x, rows);
            }
        }
        Value::Array(items) => {
            let scalars: Option<Vec<String>> = items.iter().map(scalar).collect();
            match scalars {
                Some(s) => rows.push((prefix.to_string(), format!("[{}]", s.join(", ")))),
                None => {
                    for (i, x) in items.iter().enumerate() {
                        flatten(&join(prefix, &i.to_string()), x, rows);
                    }
                }
            }
        }
        _ => rows.push((prefix.to_string(), scalar(v).expect("scalar"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn aligns_paths() {
        let v = json!({ "rgt": { "rgt": -3, "Gpd": 4 }, "images": ["0", "2*x"], "none": null });
        assert_eq!(
            render(&v),
            "rgt.rgt  -3\nrgt.Gpd  4\nimages   [0, 2*x]\nnone     -\n"
        );
    }
}

//! CSV and JSON serialization of the command results. CSV is the default,
//! one header line and comma-separated values; JSON wraps the same numbers
//! in a self-describing envelope with a `kind` discriminator.

use fockbeam_core::experiment::{ComparisonReport, SampleResult};
use fockbeam_core::quantum::ModelTag;
use serde_json::{json, Map, Number, Value};

use crate::figures::{Cell, FigureData};
use crate::models::{BuiltModel, Inputs};

/// Floating-point text with 17 significant digits, enough to round-trip any
/// double exactly. Negative zero prints as zero so equal values are equal
/// bytes.
pub fn fmt17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn json_f64(x: f64) -> Value {
    Value::Number(Number::from_f64(x).expect("output values are finite"))
}

fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Shared header fields: kind, model and the input parameters.
fn envelope(kind: &str, model: ModelTag, inputs: &Inputs) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(kind));
    obj.insert("model".into(), json!(model.as_str()));
    match inputs {
        Inputs::Counts {
            n_alpha,
            n_beta,
            theta,
        } => {
            obj.insert("n_alpha".into(), json!(n_alpha));
            obj.insert("n_beta".into(), json!(n_beta));
            if let Some(theta) = theta {
                obj.insert("theta".into(), json_f64(*theta));
            }
        }
        Inputs::Waves {
            i_alpha,
            i_beta,
            phase,
            phase_averaged,
        } => {
            obj.insert("i_alpha".into(), json_f64(*i_alpha));
            obj.insert("i_beta".into(), json_f64(*i_beta));
            if let Some(phase) = phase {
                obj.insert("phase".into(), json_f64(*phase));
            }
            if *phase_averaged {
                obj.insert("phase_averaged".into(), json!(true));
            }
        }
    }
    obj
}

pub fn dist_csv(built: &BuiltModel, rationals: bool) -> String {
    let mut text = String::from("m1,m2,p\n");
    for (out, p) in &built.distribution.entries {
        let value = if rationals {
            p.as_exact()
                .expect("exact model entries are rational")
                .to_string()
        } else {
            fmt17(p.to_f64())
        };
        text.push_str(&format!("{},{},{}\n", out.m1, out.m2, value));
    }
    text
}

pub fn dist_json(built: &BuiltModel, rationals: bool) -> String {
    let mut obj = envelope("distribution", built.distribution.model, &built.inputs);
    obj.insert("normalized".into(), json!(built.distribution.normalized));
    obj.insert(
        "representation".into(),
        json!(if rationals { "rational" } else { "float" }),
    );
    let entries: Vec<Value> = built
        .distribution
        .entries
        .iter()
        .map(|(out, p)| {
            let mut entry = Map::new();
            entry.insert("m1".into(), json!(out.m1));
            entry.insert("m2".into(), json!(out.m2));
            let value = if rationals {
                json!(p.as_exact().expect("exact model entries are rational").to_string())
            } else {
                json_f64(p.to_f64())
            };
            entry.insert("p".into(), value);
            if built.substituted.contains(&out.m1) {
                entry.insert("substituted".into(), json!(true));
            }
            Value::Object(entry)
        })
        .collect();
    obj.insert("entries".into(), Value::Array(entries));
    render(&Value::Object(obj))
}

pub fn compare_csv(report: &ComparisonReport) -> String {
    format!(
        "tvd,max_abs,max_rel,rel_floor\n{},{},{},{}\n",
        fmt17(report.tvd),
        fmt17(report.max_abs),
        fmt17(report.max_rel),
        fmt17(report.rel_floor),
    )
}

pub fn compare_json(
    first: ModelTag,
    second: ModelTag,
    n_alpha: u32,
    n_beta: u32,
    report: &ComparisonReport,
) -> String {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!("comparison"));
    obj.insert("first".into(), json!(first.as_str()));
    obj.insert("second".into(), json!(second.as_str()));
    obj.insert("n_alpha".into(), json!(n_alpha));
    obj.insert("n_beta".into(), json!(n_beta));
    obj.insert("tvd".into(), json_f64(report.tvd));
    obj.insert("max_abs".into(), json_f64(report.max_abs));
    obj.insert("max_rel".into(), json_f64(report.max_rel));
    obj.insert("rel_floor".into(), json_f64(report.rel_floor));
    render(&Value::Object(obj))
}

pub fn sample_csv(result: &SampleResult, total: u32) -> String {
    let mut text = String::from("m1,m2,count\n");
    for (m1, count) in &result.counts {
        text.push_str(&format!("{},{},{}\n", m1, total - m1, count));
    }
    text
}

pub fn sample_json(built: &BuiltModel, result: &SampleResult, total: u32) -> String {
    let mut obj = envelope("sample", built.distribution.model, &built.inputs);
    obj.insert("shots".into(), json!(result.shots));
    obj.insert("seed".into(), json!(result.seed));
    obj.insert("rng_algorithm".into(), json!(result.rng_algorithm));
    let counts: Vec<Value> = result
        .counts
        .iter()
        .map(|(m1, count)| {
            json!({
                "m1": m1,
                "m2": total - m1,
                "count": count,
            })
        })
        .collect();
    obj.insert("counts".into(), Value::Array(counts));
    render(&Value::Object(obj))
}

pub fn figure_csv(data: &FigureData) -> String {
    let mut text = data.columns.join(",");
    text.push('\n');
    for row in &data.rows {
        let fields: Vec<String> = row
            .iter()
            .map(|cell| match cell {
                Cell::Int(v) => v.to_string(),
                Cell::Float(v) => fmt17(*v),
            })
            .collect();
        text.push_str(&fields.join(","));
        text.push('\n');
    }
    text
}

pub fn figure_json(data: &FigureData) -> String {
    let rows: Vec<Value> = data
        .rows
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|cell| match cell {
                        Cell::Int(v) => json!(v),
                        Cell::Float(v) => json_f64(*v),
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("kind".into(), json!("figure"));
    obj.insert("id".into(), json!(data.id));
    obj.insert(
        "columns".into(),
        Value::Array(data.columns.iter().map(|c| json!(c)).collect()),
    );
    obj.insert("rows".into(), Value::Array(rows));
    render(&Value::Object(obj))
}

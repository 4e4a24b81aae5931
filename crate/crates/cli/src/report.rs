//! Report documents: the stable envelope every command prints.
//!
//! A document has the fixed top-level keys `version`, `command`, `group`,
//! `result`, `status`, `findings`, and `wall_ms`.  JSON output is key-sorted
//! at every level, so two runs with identical inputs produce byte-identical
//! documents except for the `wall_ms` field.  The schema is versioned and
//! shipped in `docs/report-schema.json`.

use ncsieve_core::{CspReport, EvalOutcome, IntPoly, ReflectionGroup, Result};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Aggregate outcome of a command, mirrored in the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Every checked claim held.
    Pass,
    /// A checked claim failed.
    Fail,
    /// The command could not run to completion.
    Error,
}

impl Status {
    /// Lower-case label used in the document.
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    /// Exit code contract: 0 pass, 1 fail, 2 error.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// Payload of a successfully dispatched command, before enveloping.
pub struct CommandOutcome {
    /// Group data block, when the command concerns a single group.
    pub group: Option<Value>,
    /// Command-specific result payload.
    pub result: Value,
    /// Aggregate status.
    pub status: Status,
    /// Prominent findings (conjecture counterexamples and the like).
    pub findings: Vec<String>,
}

/// The versioned envelope printed by every command.
pub struct ReportDocument {
    /// Tool version.
    pub version: String,
    /// Canonical echo of the invoked command line.
    pub command: String,
    /// Group data block or `null`.
    pub group: Option<Value>,
    /// Command-specific result payload.
    pub result: Value,
    /// Aggregate status.
    pub status: Status,
    /// Prominent findings.
    pub findings: Vec<String>,
    /// Wall-clock time of the run in milliseconds.
    pub wall_ms: u64,
}

impl ReportDocument {
    /// Assembles the document as a JSON value with sorted keys.
    pub fn to_value(&self) -> Value {
        json!({
            "version": self.version,
            "command": self.command,
            "group": self.group.clone().unwrap_or(Value::Null),
            "result": self.result,
            "status": self.status.as_str(),
            "findings": self.findings,
            "wall_ms": self.wall_ms,
        })
    }

    /// Pretty JSON rendering; keys are sorted at every nesting level.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_value()).expect("serialize report");
        out.push('\n');
        out
    }

    /// Line-oriented text rendering of the same content.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ncsieve {} — {}\n", self.version, self.command));
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        if let Some(group) = &self.group {
            out.push_str("group:\n");
            render_value(group, 1, &mut out);
        }
        out.push_str("result:\n");
        render_value(&self.result, 1, &mut out);
        for finding in &self.findings {
            out.push_str(&format!("finding: {finding}\n"));
        }
        out.push_str(&format!("wall: {} ms\n", self.wall_ms));
        out
    }
}

/// Renders a JSON value as indented `key: value` lines, arrays of scalars
/// inline, in sorted key order (the map is key-sorted already).
fn render_value(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (key, item) in map {
                match item {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_value(item, depth + 1, out);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        for entry in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_value(entry, depth + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(item))),
                }
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for entry in items {
                out.push_str(&format!("{pad}-\n"));
                render_value(entry, depth + 1, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

/// Compact single-line rendering for scalars and scalar arrays.
fn scalar_text(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A `u128` as a JSON number when it fits, else a decimal string.
pub fn u128_value(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

/// A big integer as a JSON number when it fits in `i64`, else a string.
pub fn bigint_value(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(small) => json!(small),
        None => json!(n.to_string()),
    }
}

/// Coefficient list of a polynomial, constant term first.
pub fn poly_value(poly: &IntPoly) -> Value {
    Value::Array(poly.coeffs().iter().map(bigint_value).collect())
}

/// The group data block: invariant data plus counted reflections.
pub fn group_block(group: &ReflectionGroup) -> Result<Value> {
    let reflection_count = group.reflections()?.len();
    Ok(json!({
        "name": group.name(),
        "rank": group.rank(),
        "degrees": group.degrees(),
        "codegrees": group.codegrees(),
        "h": group.h(),
        "order": u128_value(group.order()),
        "reflection_count": reflection_count,
        "regular_numbers": group.regular_numbers(),
        "center_order": group.center_order(),
    }))
}

/// Full sieving report as a JSON value: polynomial, per-power rows, orbit
/// structure, and the faithfulness analysis.
pub fn csp_value(report: &CspReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let evaluation = match &row.evaluation {
                EvalOutcome::Integer(n) => bigint_value(n),
                EvalOutcome::NotInteger(residue) => json!({
                    "nonconstant_residue": poly_value(residue),
                }),
            };
            json!({
                "power": row.power,
                "root_order": row.root_order,
                "fixed": row.fixed,
                "evaluation": evaluation,
                "matches": row.matches,
            })
        })
        .collect();
    let substituted = match &report.faithfulness.substituted {
        Some(poly) => poly_value(poly),
        None => Value::Null,
    };
    json!({
        "declared_order": report.declared_order,
        "polynomial": poly_value(&report.polynomial),
        "rows": rows,
        "orbit_sizes": report.orbit_sizes,
        "pass": report.pass,
        "faithfulness": {
            "minimal_period": report.faithfulness.minimal_period,
            "kernel_order": report.faithfulness.kernel_order,
            "substituted": substituted,
        },
    })
}

/// Builds a JSON object from already-rendered pairs; keys sort on output.
pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (key, value) in pairs {
        map.insert(key.to_string(), value);
    }
    Value::Object(map)
}

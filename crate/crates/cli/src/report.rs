//! JSON rendering of library values. stdout gets exactly one JSON
//! document per invocation; keys are sorted by serde_json's map, so
//! identical inputs produce identical bytes.

use modp_langlands::fp_linear::ring::FieldContext;
use modp_langlands::langlands::dictionary::{GaloisKind, GaloisRepLabel};
use modp_langlands::langlands::labels::CharLabel;
use modp_langlands::modforms::NewtonPolygon;
use modp_langlands::verify::SuiteReport;
use serde_json::{json, Value};

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub provenance: Vec<String>,
    pub ok: bool,
}

impl Report {
    pub fn render(&self) -> String {
        let doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "provenance": self.provenance,
            "status": if self.ok { "ok" } else { "fail" },
        });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

pub fn char_label_json(field: &FieldContext, c: &CharLabel) -> Value {
    json!({
        "omega_power": c.omega(),
        "unramified": c.unram().map(|u| render_elem(field, u)),
        "display": c.describe(field),
    })
}

pub fn galois_label_json(field: &FieldContext, label: &GaloisRepLabel) -> Value {
    match label.kind() {
        GaloisKind::Irreducible { t, twist } => json!({
            "kind": "irreducible",
            "t": t,
            "inertia_exponents": label.inertia_niveau2_exponents(field).unwrap(),
            "unramified_twist": twist.unram().map(|u| render_elem(field, u)),
            "inertia_only": label.inertia_only(),
            "display": label.describe(field),
        }),
        GaloisKind::Reducible { chars } => json!({
            "kind": "reducible",
            "characters": [
                char_label_json(field, &chars[0]),
                char_label_json(field, &chars[1]),
            ],
            "inertia_only": label.inertia_only(),
            "display": label.describe(field),
        }),
    }
}

fn render_elem(field: &FieldContext, u: &modp_langlands::fp_linear::ring::FqElem) -> String {
    match field.to_prime_subfield(u) {
        Some(n) => n.to_string(),
        None => format!("{u:?}"),
    }
}

/// Slopes as exact fractions `num/den` with multiplicities.
pub fn polygon_json(np: &NewtonPolygon) -> Value {
    Value::Array(
        np.segments()
            .iter()
            .map(|(s, m)| {
                json!({
                    "slope": format!("{}/{}", s.numer(), s.denom()),
                    "multiplicity": m,
                })
            })
            .collect(),
    )
}

pub fn suite_json(report: &SuiteReport) -> Value {
    json!({
        "suite": report.suite,
        "p_max": report.p_max,
        "cases": report.cases.iter().map(|c| json!({
            "case": c.case,
            "pass": c.pass,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "all_pass": report.all_pass,
    })
}
